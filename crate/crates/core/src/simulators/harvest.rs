use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{check_valid, Decision, ReplayError, SolveError, Witness};
use crate::levels::HarvestMoonInstance;
use crate::CapExceeded;

/// Plant crop `crop` on tile `tile` at the start of day `day` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Planting {
    pub day: u64,
    pub tile: u64,
    pub crop: usize,
}

impl fmt::Display for Planting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.day, self.tile, self.crop)
    }
}

/// Memoized depth-first search over a tile's remaining days.
///
/// Planting crop `i` with `d` days left needs `w_i <= d`, leaves `d - w_i`
/// and pays `v_i` at harvest. Tiles are independent and identical, so the
/// farm's best revenue is `num_tiles` times the best single-tile revenue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HarvestSolver {
    /// Refuse when `num_tiles * days` exceeds this.
    pub max_tile_days: u128,
}

impl Default for HarvestSolver {
    fn default() -> Self {
        HarvestSolver {
            max_tile_days: 10_000_000,
        }
    }
}

const UNKNOWN: u64 = u64::MAX;

struct TilePlanner<'a> {
    inst: &'a HarvestMoonInstance,
    best: Vec<u64>,
    /// Crop planted first with `d` days left in an optimal plan.
    choice: Vec<Option<usize>>,
    explored: u64,
}

impl TilePlanner<'_> {
    fn best_from(&mut self, days: u64) -> u64 {
        // Explicit stack: the recursion depth can reach `days`.
        let mut stack = vec![(days, false)];
        while let Some((d, expanded)) = stack.pop() {
            let di = d as usize;
            if self.best[di] != UNKNOWN {
                continue;
            }
            if !expanded {
                stack.push((d, true));
                for crop in &self.inst.crops {
                    if crop.grow_days <= d && self.best[(d - crop.grow_days) as usize] == UNKNOWN {
                        stack.push((d - crop.grow_days, false));
                    }
                }
                continue;
            }
            let mut best = 0;
            let mut pick = None;
            for (i, crop) in self.inst.crops.iter().enumerate() {
                if crop.grow_days > d {
                    continue;
                }
                let total = crop
                    .sale_price
                    .saturating_add(self.best[(d - crop.grow_days) as usize]);
                if total > best {
                    best = total;
                    pick = Some(i);
                }
            }
            self.best[di] = best;
            self.choice[di] = pick;
            self.explored += 1;
        }
        self.best[days as usize]
    }

    fn schedule(&self, tile: u64, out: &mut Vec<Planting>) {
        let mut left = self.inst.days;
        while let Some(crop) = self.choice[left as usize] {
            out.push(Planting {
                day: self.inst.days - left,
                tile,
                crop,
            });
            left -= self.inst.crops[crop].grow_days;
        }
    }
}

impl HarvestSolver {
    pub fn solve(&self, inst: &HarvestMoonInstance) -> Result<Decision, SolveError> {
        check_valid(inst.validate())?;
        let tile_days = inst.num_tiles as u128 * inst.days as u128;
        if tile_days > self.max_tile_days {
            return Err(CapExceeded {
                what: "harvest moon tile-days",
                needed: tile_days,
                cap: self.max_tile_days,
            }
            .into());
        }
        let mut planner = TilePlanner {
            inst,
            best: vec![UNKNOWN; inst.days as usize + 1],
            choice: vec![None; inst.days as usize + 1],
            explored: 0,
        };
        let per_tile = planner.best_from(inst.days);
        let total = per_tile.saturating_mul(inst.num_tiles);
        let solvable = total >= inst.target_revenue;
        let witness = solvable.then(|| {
            let mut plan = Vec::new();
            let mut revenue = 0u64;
            let mut tile = 0;
            while revenue < inst.target_revenue {
                planner.schedule(tile, &mut plan);
                revenue = revenue.saturating_add(per_tile);
                tile += 1;
            }
            Witness::HarvestMoon(plan)
        });
        Ok(Decision {
            solvable,
            states_explored: planner.explored,
            witness,
        })
    }
}

/// [`HarvestSolver::solve`] with the default cap.
pub fn solve_harvest(inst: &HarvestMoonInstance) -> Result<Decision, SolveError> {
    HarvestSolver::default().solve(inst)
}

pub(super) fn replay(inst: &HarvestMoonInstance, plan: &[Planting]) -> Result<(), ReplayError> {
    if let Some(v) = inst.validate().first() {
        return Err(ReplayError::new(0, format!("invalid level: {v}")));
    }
    // Day each tile becomes free again, for tiles touched so far.
    let mut busy_until: Vec<(u64, u64)> = Vec::new();
    let mut revenue = 0u64;
    for (step, p) in plan.iter().enumerate() {
        let crop = inst
            .crops
            .get(p.crop)
            .ok_or_else(|| ReplayError::new(step, format!("no crop {}", p.crop)))?;
        if p.tile >= inst.num_tiles {
            return Err(ReplayError::new(step, format!("no tile {}", p.tile)));
        }
        let free = match busy_until.iter_mut().find(|(t, _)| *t == p.tile) {
            Some(entry) => &mut entry.1,
            None => {
                busy_until.push((p.tile, 0));
                &mut busy_until.last_mut().unwrap().1
            }
        };
        if p.day < *free {
            return Err(ReplayError::new(
                step,
                format!("tile {} is busy until day {}", p.tile, free),
            ));
        }
        let harvest = p.day + crop.grow_days;
        if harvest > inst.days {
            return Err(ReplayError::new(
                step,
                format!(
                    "crop {} planted on day {} is not ready by day {}",
                    p.crop, p.day, inst.days
                ),
            ));
        }
        *free = harvest;
        revenue = revenue.saturating_add(crop.sale_price);
    }
    if revenue >= inst.target_revenue {
        Ok(())
    } else {
        Err(ReplayError::new(
            plan.len(),
            format!("revenue {revenue} is below target {}", inst.target_revenue),
        ))
    }
}
