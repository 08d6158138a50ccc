//! The four instance compilers. Each is a purely syntactic translation:
//! none of them consults an oracle or a solver.

mod dk;
mod harvest;
mod mole;
mod wario;

pub use dk::{reduce_3cnf_to_dk, DK_CELLS_PER_UNIT, DK_GADGET_WIDTH, DK_ROOM_HEIGHT};
pub use harvest::reduce_knapsack_to_harvest;
pub use mole::reduce_push1_to_mole;
pub use wario::reduce_hamcycle_to_wario;

use alloc::format;
use alloc::string::String;
use core::time::Duration;

use crate::levels::{Floor, Level};
use crate::problems::{CnfFormula, DirectedGraph, KnapsackInstance, ProblemError, Push1Instance};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error("formula is not in 3-CNF (clause {clause} has {len} literals)")]
    NotThreeCnf { clause: usize, len: usize },
    #[error(transparent)]
    Source(#[from] ProblemError),
}

/// Size figures recorded for a reduction run.
///
/// Source size: variables + literal occurrences (CNF), vertices + edges
/// (graph), 2 + 2 * items (knapsack), cells (Push-1). Output size: cells
/// (grid games), rooms + doors (Wario Land), 3 + 2 * crops (Harvest Moon).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReductionStats {
    pub source_size: usize,
    pub output_size: usize,
    pub wall_clock: Duration,
}

/// A source instance of any of the four reductions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SourceInstance {
    Cnf(CnfFormula),
    Graph(DirectedGraph),
    Knapsack(KnapsackInstance),
    Push1(Push1Instance),
}

impl SourceInstance {
    pub fn size(&self) -> usize {
        match self {
            SourceInstance::Cnf(f) => f.num_vars() + f.num_literals(),
            SourceInstance::Graph(g) => g.num_vertices() + g.num_edges(),
            SourceInstance::Knapsack(k) => 2 + 2 * k.items().len(),
            SourceInstance::Push1(p) => p.num_cells(),
        }
    }

    /// Applies the standard reduction for this source problem.
    pub fn reduce(&self) -> Result<Level, ReductionError> {
        Ok(match self {
            SourceInstance::Cnf(f) => reduce_3cnf_to_dk(f)?.into(),
            SourceInstance::Graph(g) => reduce_hamcycle_to_wario(g)?.into(),
            SourceInstance::Knapsack(k) => reduce_knapsack_to_harvest(k).into(),
            SourceInstance::Push1(p) => reduce_push1_to_mole(p).into(),
        })
    }
}

pub fn output_size(level: &Level) -> usize {
    match level {
        Level::DonkeyKong(r) => r.num_cells(),
        Level::WarioLand(w) => w.rooms.len() + w.doors.len(),
        Level::HarvestMoon(h) => 3 + 2 * h.crops.len(),
        Level::MoleMania(m) => m.num_cells(),
    }
}

pub fn stats(source: &SourceInstance, level: &Level, wall_clock: Duration) -> ReductionStats {
    ReductionStats {
        source_size: source.size(),
        output_size: output_size(level),
        wall_clock,
    }
}

/// Checks the exact size and structure relations each reduction promises:
/// Donkey Kong cells at most `DK_CELLS_PER_UNIT * (n + m)`; Wario rooms,
/// doors and keys equal to `|V| + 1`, `|E| + 1` and `|V|`; Harvest Moon
/// fields copied verbatim onto one tile; Mole Mania dimensions, weights and
/// all-Hard floor matching the Push-1 grid.
pub fn check_size_bounds(source: &SourceInstance, level: &Level) -> Result<(), String> {
    match (source, level) {
        (SourceInstance::Cnf(f), Level::DonkeyKong(room)) => {
            let bound = DK_CELLS_PER_UNIT * (f.num_vars() + f.clauses().len());
            if room.num_cells() > bound {
                return Err(format!("{} cells exceed bound {bound}", room.num_cells()));
            }
            if room.switches.len() != f.num_vars() || room.boards.len() != f.num_literals() {
                return Err(format!(
                    "{} switches / {} boards for {} variables / {} literals",
                    room.switches.len(),
                    room.boards.len(),
                    f.num_vars(),
                    f.num_literals()
                ));
            }
            Ok(())
        }
        (SourceInstance::Graph(g), Level::WarioLand(w)) => {
            let expect = (g.num_vertices() + 1, g.num_edges() + 1, g.num_vertices());
            let got = (w.rooms.len(), w.doors.len(), w.num_keys());
            if got != expect {
                return Err(format!("rooms/doors/keys {got:?}, expected {expect:?}"));
            }
            Ok(())
        }
        (SourceInstance::Knapsack(k), Level::HarvestMoon(h)) => {
            let same_crops = h.crops.len() == k.items().len()
                && h.crops
                    .iter()
                    .zip(k.items())
                    .all(|(c, it)| c.grow_days == it.weight && c.sale_price == it.value);
            if h.num_tiles != 1
                || h.days != k.capacity()
                || h.target_revenue != k.target()
                || !same_crops
            {
                return Err(String::from(
                    "harvest fields differ from the knapsack instance",
                ));
            }
            Ok(())
        }
        (SourceInstance::Push1(p), Level::MoleMania(m)) => {
            if m.width != p.width() || m.height != p.height() {
                return Err(format!(
                    "{}x{} room for a {}x{} grid",
                    m.width,
                    m.height,
                    p.width(),
                    p.height()
                ));
            }
            if m.weights.len() != p.blocks().len() {
                return Err(format!(
                    "{} weights for {} blocks",
                    m.weights.len(),
                    p.blocks().len()
                ));
            }
            if m.floor.iter().any(|&f| f != Floor::Hard) {
                return Err(String::from("floor is not all Hard"));
            }
            Ok(())
        }
        _ => Err(String::from("level game does not match the source problem")),
    }
}
