//! Seeded generators and oracle-versus-solver equivalence campaigns.
//!
//! Instance `i` of a campaign with seed `s` is drawn from a fresh
//! [`SplitMix64`] seeded with [`instance_seed`]`(s, i)`, so any instance can be regenerated
//! on its own and instances can be evaluated in any order.

mod campaign;
mod gen;
pub mod mutants;
mod rng;

pub use campaign::{
    evaluate_instance, generate_instance, instance_seed, no_clock, run_campaign, run_campaign_with,
    AggregateStats, CampaignReport, CampaignSpec, Clock, CnfBounds, Disagreement, InstanceOutcome,
    Pair, Reducers, SizeParams, SpecError, UnknownPair, Verdict,
};
pub use gen::{
    gen_random_3cnf, gen_random_knapsack, gen_random_push1, gen_random_skull_graph, greedy_value,
    GenError, KnapsackBounds, Push1Bounds, SKULL_MATCH_ATTEMPTS,
};
pub use rng::SplitMix64;
