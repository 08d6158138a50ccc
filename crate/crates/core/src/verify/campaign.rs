use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;
use core::time::Duration;

use super::gen::{
    gen_random_3cnf, gen_random_knapsack, gen_random_push1, gen_random_skull_graph, KnapsackBounds,
    Push1Bounds,
};
use super::{mutants, SplitMix64};
use crate::levels::{DonkeyKongRoom, HarvestMoonInstance, Level, MoleManiaRoom, WarioLevel};
use crate::problems::{
    ham_cycle_oracle, knapsack_oracle, push1_oracle, sat_oracle, CnfFormula, DirectedGraph,
    HamCycleOracle, KnapsackInstance, Push1Instance, Push1Oracle, SatOracle,
};
use crate::reductions::{
    check_size_bounds, output_size, reduce_3cnf_to_dk, reduce_hamcycle_to_wario,
    reduce_knapsack_to_harvest, reduce_push1_to_mole, ReductionError, ReductionStats,
    SourceInstance, DK_CELLS_PER_UNIT,
};
use crate::simulators::{replay, solve, DkSolver};

/// Source problem / target game pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pair {
    CnfDk,
    HamWario,
    KnapHarvest,
    Push1Mole,
}

impl Pair {
    pub const ALL: [Pair; 4] = [
        Pair::CnfDk,
        Pair::HamWario,
        Pair::KnapHarvest,
        Pair::Push1Mole,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Pair::CnfDk => "cnf-dk",
            Pair::HamWario => "ham-wario",
            Pair::KnapHarvest => "knap-harvest",
            Pair::Push1Mole => "push1-mole",
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown pair `{0}` (expected cnf-dk, ham-wario, knap-harvest or push1-mole)")]
pub struct UnknownPair(pub String);

impl FromStr for Pair {
    type Err = UnknownPair;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Pair::ALL
            .into_iter()
            .find(|p| p.key() == s)
            .ok_or_else(|| UnknownPair(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CnfBounds {
    pub max_vars: usize,
    pub max_clauses: usize,
}

impl Default for CnfBounds {
    fn default() -> Self {
        CnfBounds {
            max_vars: 8,
            max_clauses: 10,
        }
    }
}

/// Per-pair instance bounds; only the bounds of the campaign's pair are
/// used.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SizeParams {
    pub cnf: CnfBounds,
    /// Upper bound on graph vertices; the pair count is drawn from
    /// `1..=max_vertices / 2`.
    pub max_vertices: usize,
    pub knapsack: KnapsackBounds,
    pub push1: Push1Bounds,
}

impl SizeParams {
    pub fn standard() -> Self {
        SizeParams {
            max_vertices: 10,
            ..SizeParams::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignSpec {
    pub pair: Pair,
    pub count: u64,
    pub seed: u64,
    pub params: SizeParams,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("campaign bound {what} = {value} is outside 1..={max}")]
pub struct SpecError {
    pub what: &'static str,
    pub value: u128,
    pub max: u128,
}

fn within(what: &'static str, value: u128, max: u128) -> Result<(), SpecError> {
    if (1..=max).contains(&value) {
        Ok(())
    } else {
        Err(SpecError { what, value, max })
    }
}

impl CampaignSpec {
    pub fn new(pair: Pair, count: u64, seed: u64) -> Self {
        CampaignSpec {
            pair,
            count,
            seed,
            params: SizeParams::standard(),
        }
    }

    /// Checks the bounds of this spec's pair against the oracle and solver
    /// caps, so that the worst instance the generator can draw is still
    /// decidable.
    pub fn validate(&self) -> Result<(), SpecError> {
        let p = &self.params;
        match self.pair {
            Pair::CnfDk => {
                let n = p.cnf.max_vars;
                within("max_vars", n as u128, SatOracle::default().max_vars as u128)?;
                within("max_clauses", p.cnf.max_clauses as u128, 1 << 16)?;
                // Worst case: every switch setting at every cell.
                let cells = (DK_CELLS_PER_UNIT * (n + p.cnf.max_clauses)) as u128;
                let states = cells << n;
                let cap = DkSolver::default().max_states as u128;
                if states > cap {
                    return Err(SpecError {
                        what: "donkey kong worst-case states",
                        value: states,
                        max: cap,
                    });
                }
            }
            Pair::HamWario => {
                within(
                    "max_vertices",
                    p.max_vertices as u128,
                    HamCycleOracle::default().max_vertices as u128,
                )?;
                within("max_vertices / 2", (p.max_vertices / 2) as u128, u128::MAX)?;
            }
            Pair::KnapHarvest => {
                let k = &p.knapsack;
                within("max_W", k.max_capacity as u128, 1_000_000)?;
                within("max_items", k.max_items as u128, 1 << 16)?;
                within("max_w", k.max_weight as u128, u32::MAX as u128)?;
                within("max_v", k.max_value as u128, u32::MAX as u128)?;
            }
            Pair::Push1Mole => {
                let b = &p.push1;
                within("max_width", b.max_width as u128, 64)?;
                within("max_height", b.max_height as u128, 64)?;
                let cells = b.max_width * b.max_height;
                let worst = (0..=b.max_blocks.min(cells - 1))
                    .map(|k| Push1Oracle::bound_for(cells, k))
                    .max()
                    .unwrap_or(0);
                let cap = Push1Oracle::default().max_states;
                if worst > cap {
                    return Err(SpecError {
                        what: "push-1 worst-case states",
                        value: worst,
                        max: cap,
                    });
                }
            }
        }
        Ok(())
    }
}

/// The reductions a campaign applies. [`Reducers::STANDARD`] holds the real
/// ones; [`Reducers::mutant`] swaps in a deliberately broken one.
#[derive(Clone, Copy)]
pub struct Reducers {
    pub cnf: fn(&CnfFormula) -> Result<DonkeyKongRoom, ReductionError>,
    pub graph: fn(&DirectedGraph) -> Result<WarioLevel, ReductionError>,
    pub knapsack: fn(&KnapsackInstance) -> HarvestMoonInstance,
    pub push1: fn(&Push1Instance) -> MoleManiaRoom,
}

impl Reducers {
    pub const STANDARD: Reducers = Reducers {
        cnf: reduce_3cnf_to_dk,
        graph: reduce_hamcycle_to_wario,
        knapsack: reduce_knapsack_to_harvest,
        push1: reduce_push1_to_mole,
    };

    /// Standard reducers with the seeded bug for `pair` swapped in.
    pub fn mutant(pair: Pair) -> Reducers {
        let mut r = Reducers::STANDARD;
        match pair {
            Pair::CnfDk => r.cnf = mutants::dk_flipped_polarity,
            Pair::HamWario => r.graph = mutants::wario_missing_key,
            Pair::KnapHarvest => r.knapsack = mutants::harvest_short_season,
            Pair::Push1Mole => r.push1 = mutants::mole_shifted_weight,
        }
        r
    }

    fn apply(&self, source: &SourceInstance) -> Result<Level, ReductionError> {
        Ok(match source {
            SourceInstance::Cnf(f) => (self.cnf)(f)?.into(),
            SourceInstance::Graph(g) => (self.graph)(g)?.into(),
            SourceInstance::Knapsack(k) => (self.knapsack)(k).into(),
            SourceInstance::Push1(p) => (self.push1)(p).into(),
        })
    }
}

/// Monotonic time source used only to fill `ReductionStats::wall_clock`.
pub type Clock = fn() -> Duration;

pub fn no_clock() -> Duration {
    Duration::ZERO
}

/// Oracle or solver answer for one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Error(String),
}

impl Verdict {
    fn from_result<E: fmt::Display>(r: Result<bool, E>) -> Self {
        match r {
            Ok(true) => Verdict::Yes,
            Ok(false) => Verdict::No,
            Err(e) => Verdict::Error(e.to_string()),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Yes => f.write_str("yes"),
            Verdict::No => f.write_str("no"),
            Verdict::Error(e) => write!(f, "error: {e}"),
        }
    }
}

/// Everything learned from one campaign instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceOutcome {
    pub index: u64,
    /// [`instance_seed`]; regenerates the instance on its own.
    pub seed: u64,
    pub instance: SourceInstance,
    pub oracle: Verdict,
    pub solver: Verdict,
    /// `Err` if the reduced level broke its size/structure relation.
    pub size_check: Result<(), String>,
    /// `Some(Err)` if the solver's witness did not replay.
    pub replay: Option<Result<(), String>>,
    pub stats: ReductionStats,
    pub states_explored: u64,
}

impl InstanceOutcome {
    /// Both sides answered and the answers match. A refusal on either side
    /// counts as a disagreement.
    pub fn agrees(&self) -> bool {
        matches!(
            (&self.oracle, &self.solver),
            (Verdict::Yes, Verdict::Yes) | (Verdict::No, Verdict::No)
        )
    }
}

/// `seed ^ (index * GAMMA)`. Spreading the index first keeps campaigns with
/// nearby small seeds from drawing the same instances in another order, as
/// a plain `seed ^ index` would.
pub fn instance_seed(seed: u64, index: u64) -> u64 {
    seed ^ index.wrapping_mul(SplitMix64::GAMMA)
}

/// Draws instance `index` of `spec`.
pub fn generate_instance(spec: &CampaignSpec, index: u64) -> SourceInstance {
    let seed = instance_seed(spec.seed, index);
    let p = &spec.params;
    let mut rng = SplitMix64::new(seed);
    match spec.pair {
        Pair::CnfDk => {
            let n = rng.range(1, p.cnf.max_vars as u64) as usize;
            let m = rng.range(1, p.cnf.max_clauses as u64) as usize;
            SourceInstance::Cnf(gen_random_3cnf(rng.next_u64(), n, m))
        }
        Pair::HamWario => {
            let pairs = rng.range(1, (p.max_vertices / 2) as u64) as usize;
            // Re-seed on the (astronomically unlikely) matching failure.
            loop {
                if let Ok(g) = gen_random_skull_graph(rng.next_u64(), pairs) {
                    break SourceInstance::Graph(g);
                }
            }
        }
        Pair::KnapHarvest => {
            SourceInstance::Knapsack(gen_random_knapsack(rng.next_u64(), &p.knapsack))
        }
        Pair::Push1Mole => SourceInstance::Push1(gen_random_push1(rng.next_u64(), &p.push1)),
    }
}

fn oracle_verdict(source: &SourceInstance) -> Verdict {
    match source {
        SourceInstance::Cnf(f) => Verdict::from_result(sat_oracle(f)),
        SourceInstance::Graph(g) => Verdict::from_result(ham_cycle_oracle(g)),
        SourceInstance::Knapsack(k) => Verdict::from_result(knapsack_oracle(k)),
        SourceInstance::Push1(p) => Verdict::from_result(push1_oracle(p)),
    }
}

/// Generates, decides, reduces, solves, size-checks and replays instance
/// `index`. Pure apart from the clock.
pub fn evaluate_instance(
    spec: &CampaignSpec,
    index: u64,
    reducers: &Reducers,
    clock: Clock,
) -> InstanceOutcome {
    let instance = generate_instance(spec, index);
    let oracle = oracle_verdict(&instance);
    let t0 = clock();
    let reduced = reducers.apply(&instance);
    let wall_clock = clock().saturating_sub(t0);
    let mut outcome = InstanceOutcome {
        index,
        seed: instance_seed(spec.seed, index),
        oracle,
        solver: Verdict::Error(String::new()),
        size_check: Ok(()),
        replay: None,
        stats: ReductionStats {
            source_size: instance.size(),
            output_size: 0,
            wall_clock,
        },
        states_explored: 0,
        instance,
    };
    let level = match reduced {
        Ok(level) => level,
        Err(e) => {
            outcome.solver = Verdict::Error(format!("reduction failed: {e}"));
            return outcome;
        }
    };
    outcome.stats.output_size = output_size(&level);
    outcome.size_check = check_size_bounds(&outcome.instance, &level);
    match solve(&level) {
        Ok(decision) => {
            outcome.solver = if decision.solvable {
                Verdict::Yes
            } else {
                Verdict::No
            };
            outcome.states_explored = decision.states_explored;
            outcome.replay = decision
                .witness
                .map(|w| replay(&level, &w).map_err(|e| e.to_string()));
        }
        Err(e) => outcome.solver = Verdict::Error(e.to_string()),
    }
    outcome
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub index: u64,
    pub seed: u64,
    pub instance: SourceInstance,
    pub oracle: Verdict,
    pub solver: Verdict,
}

/// Sums and maxima of per-instance [`ReductionStats`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AggregateStats {
    pub total_source_size: u64,
    pub total_output_size: u64,
    pub max_source_size: u64,
    pub max_output_size: u64,
    pub total_states_explored: u64,
    pub reduction_wall_clock: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignReport {
    pub spec: CampaignSpec,
    pub total: u64,
    pub agreements: u64,
    pub disagreements: u64,
    /// Instances the oracle answered YES.
    pub positives: u64,
    pub disagreement_list: Vec<Disagreement>,
    /// `(index, message)` for reduced levels that broke their size relation.
    pub size_violations: Vec<(u64, String)>,
    /// `(index, message)` for witnesses that failed to replay.
    pub replay_failures: Vec<(u64, String)>,
    pub stats: AggregateStats,
}

impl CampaignReport {
    pub fn new(spec: CampaignSpec) -> Self {
        CampaignReport {
            spec,
            total: 0,
            agreements: 0,
            disagreements: 0,
            positives: 0,
            disagreement_list: Vec::new(),
            size_violations: Vec::new(),
            replay_failures: Vec::new(),
            stats: AggregateStats::default(),
        }
    }

    /// Folds one outcome in. Call in index order for a deterministic report.
    pub fn record(&mut self, o: InstanceOutcome) {
        self.total += 1;
        let agrees = o.agrees();
        if o.oracle == Verdict::Yes {
            self.positives += 1;
        }
        let s = &mut self.stats;
        s.total_source_size += o.stats.source_size as u64;
        s.total_output_size += o.stats.output_size as u64;
        s.max_source_size = s.max_source_size.max(o.stats.source_size as u64);
        s.max_output_size = s.max_output_size.max(o.stats.output_size as u64);
        s.total_states_explored += o.states_explored;
        s.reduction_wall_clock += o.stats.wall_clock;
        if let Err(e) = o.size_check {
            self.size_violations.push((o.index, e));
        }
        if let Some(Err(e)) = o.replay {
            self.replay_failures.push((o.index, e));
        }
        if agrees {
            self.agreements += 1;
        } else {
            self.disagreements += 1;
            self.disagreement_list.push(Disagreement {
                index: o.index,
                seed: o.seed,
                instance: o.instance,
                oracle: o.oracle,
                solver: o.solver,
            });
        }
    }

    /// No disagreements, size violations or replay failures.
    pub fn is_clean(&self) -> bool {
        self.disagreements == 0
            && self.size_violations.is_empty()
            && self.replay_failures.is_empty()
    }
}

/// Sequential campaign with the standard reductions and no timing.
pub fn run_campaign(spec: &CampaignSpec) -> Result<CampaignReport, SpecError> {
    run_campaign_with(spec, &Reducers::STANDARD, no_clock)
}

pub fn run_campaign_with(
    spec: &CampaignSpec,
    reducers: &Reducers,
    clock: Clock,
) -> Result<CampaignReport, SpecError> {
    spec.validate()?;
    let mut report = CampaignReport::new(spec.clone());
    for i in 0..spec.count {
        report.record(evaluate_instance(spec, i, reducers, clock));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_keys_round_trip() {
        for p in Pair::ALL {
            assert_eq!(p.key().parse::<Pair>().unwrap(), p);
        }
        assert!("sat-dk".parse::<Pair>().is_err());
    }

    #[test]
    fn different_seeds_draw_different_instances() {
        let a: Vec<_> = (0..50)
            .map(|i| generate_instance(&CampaignSpec::new(Pair::Push1Mole, 50, 7), i))
            .collect();
        let b: Vec<_> = (0..50)
            .map(|i| generate_instance(&CampaignSpec::new(Pair::Push1Mole, 50, 42), i))
            .collect();
        let shared = a.iter().filter(|x| b.contains(x)).count();
        assert!(shared < 25, "{shared}");
    }

    #[test]
    fn empty_campaign() {
        let r = run_campaign(&CampaignSpec::new(Pair::CnfDk, 0, 3)).unwrap();
        assert_eq!(
            (r.total, r.agreements, r.disagreements, r.positives),
            (0, 0, 0, 0)
        );
    }

    #[test]
    fn oversized_bounds_are_refused() {
        let mut spec = CampaignSpec::new(Pair::CnfDk, 1, 0);
        spec.params.cnf.max_vars = 21;
        assert_eq!(spec.validate().unwrap_err().what, "max_vars");
        spec.params.cnf.max_vars = 16;
        assert!(spec.validate().is_err());
        let mut spec = CampaignSpec::new(Pair::HamWario, 1, 0);
        spec.params.max_vertices = 1;
        assert!(spec.validate().is_err());
        assert!(CampaignSpec::new(Pair::Push1Mole, 1, 0).validate().is_ok());
    }

    #[test]
    fn small_campaigns_agree() {
        for pair in Pair::ALL {
            let r = run_campaign(&CampaignSpec::new(pair, 10, 5)).unwrap();
            assert!(r.is_clean(), "{pair}: {:?}", r.disagreement_list);
            assert_eq!(r.agreements, 10);
        }
    }

    #[test]
    fn harvest_mutant_is_caught() {
        let spec = CampaignSpec::new(Pair::KnapHarvest, 100, 42);
        let r = run_campaign_with(&spec, &Reducers::mutant(Pair::KnapHarvest), no_clock).unwrap();
        assert!(r.disagreements > 0);
        assert_eq!(r.agreements + r.disagreements, r.total);
    }
}
