//! Exhaustive rule-level solvers, one per game, plus witness replay.
//!
//! Each solver validates its level first, then searches the full state
//! space up to a configurable cap. A solvable [`Decision`] carries a witness
//! that [`replay`] re-checks step by step under the same rules.

mod dk;
mod harvest;
mod mole;
mod search;
mod wario;

pub use dk::{solve_donkey_kong, DkAction, DkMovementRules, DkSolver, DK_RULES};
pub use harvest::{solve_harvest, HarvestSolver, Planting};
pub use mole::{solve_mole, MoleAction, MoleSearchCounts, MoleSolver};
pub use wario::{solve_wario, WarioAction, WarioSolver};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::levels::{Level, Violation};
use crate::CapExceeded;

/// Solver verdict for one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub solvable: bool,
    /// Distinct states discovered by the search.
    pub states_explored: u64,
    /// Present iff `solvable`.
    pub witness: Option<Witness>,
}

/// A winning action sequence, one variant per game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    DonkeyKong(Vec<DkAction>),
    WarioLand(Vec<WarioAction>),
    HarvestMoon(Vec<Planting>),
    MoleMania(Vec<MoleAction>),
}

fn write_tokens<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

/// Space-separated action string: `R R T R` (Donkey Kong), `O0 G0`
/// (Wario Land), `(0,0,1) (5,0,1)` (Harvest Moon), `R Dig D Dig` (Mole Mania).
impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::DonkeyKong(a) => write_tokens(f, a),
            Witness::WarioLand(a) => write_tokens(f, a),
            Witness::HarvestMoon(a) => write_tokens(f, a),
            Witness::MoleMania(a) => write_tokens(f, a),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("level is invalid: {}", .0.iter().map(|v| alloc::format!("{v}")).collect::<Vec<_>>().join("; "))]
    InvalidLevel(Vec<Violation>),
    #[error(transparent)]
    CapExceeded(#[from] CapExceeded),
}

/// A witness failed to replay.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("step {step}: {message}")]
pub struct ReplayError {
    pub step: usize,
    pub message: String,
}

impl ReplayError {
    fn new(step: usize, message: impl Into<String>) -> Self {
        ReplayError {
            step,
            message: message.into(),
        }
    }
}

/// Solves any level with default caps.
pub fn solve(level: &Level) -> Result<Decision, SolveError> {
    match level {
        Level::DonkeyKong(l) => solve_donkey_kong(l),
        Level::WarioLand(l) => solve_wario(l),
        Level::HarvestMoon(l) => solve_harvest(l),
        Level::MoleMania(l) => solve_mole(l),
    }
}

/// Replays `witness` on `level` and checks that every step is legal and the
/// final state wins.
pub fn replay(level: &Level, witness: &Witness) -> Result<(), ReplayError> {
    match (level, witness) {
        (Level::DonkeyKong(l), Witness::DonkeyKong(w)) => dk::replay(l, w),
        (Level::WarioLand(l), Witness::WarioLand(w)) => wario::replay(l, w),
        (Level::HarvestMoon(l), Witness::HarvestMoon(w)) => harvest::replay(l, w),
        (Level::MoleMania(l), Witness::MoleMania(w)) => mole::replay(l, w),
        _ => Err(ReplayError::new(0, "witness is for a different game")),
    }
}

pub(crate) fn check_valid(violations: Vec<Violation>) -> Result<(), SolveError> {
    if violations.is_empty() {
        Ok(())
    } else {
        Err(SolveError::InvalidLevel(violations))
    }
}
