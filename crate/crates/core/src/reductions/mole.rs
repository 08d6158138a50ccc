use alloc::vec;

use crate::levels::{Floor, MoleManiaRoom};
use crate::problems::Push1Instance;

/// Same grid, every floor tile Hard (so Muddy never goes underground),
/// a Weight on every block cell, Muddy on the robot cell, same win cell.
pub fn reduce_push1_to_mole(p: &Push1Instance) -> MoleManiaRoom {
    MoleManiaRoom {
        width: p.width(),
        height: p.height(),
        floor: vec![Floor::Hard; p.num_cells()],
        weights: p.blocks().clone(),
        start: p.robot(),
        win: p.win(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Cell;
    use alloc::collections::BTreeSet;

    #[test]
    fn corridor_with_block() {
        let blocks: BTreeSet<Cell> = [Cell::new(1, 0)].into();
        let p = Push1Instance::new(3, 1, blocks.clone(), Cell::new(0, 0), Cell::new(2, 0)).unwrap();
        let room = reduce_push1_to_mole(&p);
        assert!(room.validate().is_empty());
        assert_eq!(room.weights, blocks);
        assert_eq!(room.floor, vec![Floor::Hard; 3]);
        assert_eq!((room.start, room.win), (Cell::new(0, 0), Cell::new(2, 0)));
    }
}
