use alloc::vec::Vec;

use super::ReductionError;
use crate::levels::{DkTile, DonkeyKongRoom, Polarity, SlideBoard};
use crate::problems::CnfFormula;
use crate::Cell;

/// Rows in every reduced room.
pub const DK_ROOM_HEIGHT: usize = 8;
/// Columns taken by one clause gadget.
pub const DK_GADGET_WIDTH: usize = 11;
/// The room is `8 x (n + 11m + 3)` cells, at most `112 (n + m)` for `n >= 1`.
pub const DK_CELLS_PER_UNIT: usize = 112;

// Mario's standing row on the switch bank and on the baseline.
const BANK_ROW: usize = 4;
const BASE_ROW: usize = 6;
const FLOOR_ROW: usize = 7;
// Standing rows of the top, middle and bottom corridors.
const CORRIDOR_ROWS: [usize; 3] = [2, 4, 6];

/// Compiles a 3-CNF formula into a Donkey Kong room.
///
/// Layout, left to right, on a BrickFloor baseline (row 7):
///
/// * Start at column 0 of a raised bank (Mario on row 4) holding one switch
///   per variable, all Off.
/// * A two-row drop off the bank. Mario steps up at most one row, so the
///   switch settings are frozen once he moves on.
/// * One 11-column gadget per clause. A one-cell staircase climbs to a
///   summit; from there Mario drops onto the top corridor's ledge, and
///   walking left off each ledge drops him to the ledge of the next
///   corridor down. Column 9 of the gadget is a solid wall except for three
///   stacked two-cell slide boards, one across each corridor; board `t` is
///   wired to literal `t`'s variable, open when that switch is On for a
///   positive literal and Off for a negated one. Past the wall Mario falls
///   back to the baseline whichever corridor he took.
/// * Win at the right-most baseline cell.
///
/// ```text
///  .........#.
///  .....###.T.      one clause gadget (columns g..g+10)
///  ....#....|.
///  ...#..===T.
///  ..#......|.
///  .#..=====T.
///  #........|.
///  ===========
/// ```
pub fn reduce_3cnf_to_dk(f: &CnfFormula) -> Result<DonkeyKongRoom, ReductionError> {
    if let Some((clause, c)) = f.clauses().iter().enumerate().find(|(_, c)| c.len() != 3) {
        return Err(ReductionError::NotThreeCnf {
            clause,
            len: c.len(),
        });
    }
    let n = f.num_vars();
    let m = f.clauses().len();
    let width = n + DK_GADGET_WIDTH * m + 3;
    let start = Cell::new(0, BANK_ROW);
    let win = Cell::new(width - 1, BASE_ROW);
    let mut room = DonkeyKongRoom::empty(width, DK_ROOM_HEIGHT, start, win);

    for col in 0..width {
        room.set_tile(Cell::new(col, FLOOR_ROW), DkTile::BrickFloor);
    }
    for col in 0..=n {
        room.set_tile(Cell::new(col, BANK_ROW + 1), DkTile::BrickFloor);
        room.set_tile(Cell::new(col, BANK_ROW + 2), DkTile::Block);
    }
    for var in 1..=n {
        let cell = Cell::new(var, BANK_ROW);
        room.set_tile(cell, DkTile::Switch);
        room.switches.push(cell);
    }

    for (j, clause) in f.clauses().iter().enumerate() {
        let g = n + 2 + DK_GADGET_WIDTH * j;
        // Staircase up to the summit on row 0.
        for k in 0..=5 {
            room.set_tile(Cell::new(g + k, BASE_ROW - k), DkTile::Block);
        }
        // Summit ledge, then the corridor ledges.
        for col in g + 6..=g + 7 {
            room.set_tile(Cell::new(col, 1), DkTile::Block);
        }
        for col in g + 6..=g + 8 {
            room.set_tile(Cell::new(col, CORRIDOR_ROWS[0] + 1), DkTile::BrickFloor);
        }
        for col in g + 4..=g + 8 {
            room.set_tile(Cell::new(col, CORRIDOR_ROWS[1] + 1), DkTile::BrickFloor);
        }
        // Board wall.
        let wall = g + 9;
        room.set_tile(Cell::new(wall, 0), DkTile::Block);
        for (t, lit) in clause.iter().enumerate() {
            let row = CORRIDOR_ROWS[t];
            let cells: Vec<Cell> = Vec::from([Cell::new(wall, row - 1), Cell::new(wall, row)]);
            room.set_tile(cells[0], DkTile::SlideBoardTop);
            room.set_tile(cells[1], DkTile::SlideBoardBody);
            room.boards.push(SlideBoard {
                cells,
                switch: lit.var() - 1,
                polarity: if lit.is_negated() {
                    Polarity::OpenWhenOff
                } else {
                    Polarity::OpenWhenOn
                },
            });
        }
    }
    Ok(room)
}
