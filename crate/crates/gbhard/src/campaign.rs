//! Parallel campaign runner and report encodings.

use std::fmt::Write;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use gbhard_core::verify::{
    evaluate_instance, CampaignReport, CampaignSpec, Pair, Reducers, SpecError,
};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::formats::write_source;

/// Monotonic clock for `ReductionStats::wall_clock`.
pub fn process_clock() -> Duration {
    static EPOCH: OnceLock<Instant> = OnceLock::new();
    EPOCH.get_or_init(Instant::now).elapsed()
}

/// Evaluates instances on the rayon pool and folds them in index order, so
/// the report equals the sequential one (apart from timings).
pub fn run_campaign_parallel(
    spec: &CampaignSpec,
    reducers: &Reducers,
) -> Result<CampaignReport, SpecError> {
    spec.validate()?;
    let outcomes: Vec<_> = (0..spec.count)
        .into_par_iter()
        .map(|i| evaluate_instance(spec, i, reducers, process_clock))
        .collect();
    let mut report = CampaignReport::new(spec.clone());
    for o in outcomes {
        report.record(o);
    }
    Ok(report)
}

#[derive(Serialize)]
struct DisagreementDoc {
    index: u64,
    seed: u64,
    oracle: String,
    solver: String,
    instance: String,
}

#[derive(Serialize)]
struct NoteDoc<'a> {
    index: u64,
    message: &'a str,
}

fn notes(v: &[(u64, String)]) -> Vec<NoteDoc<'_>> {
    v.iter()
        .map(|(index, m)| NoteDoc {
            index: *index,
            message: m,
        })
        .collect()
}

#[derive(Serialize)]
struct StatsDoc {
    total_source_size: u64,
    total_output_size: u64,
    max_source_size: u64,
    max_output_size: u64,
    total_states_explored: u64,
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    format: &'static str,
    pair: &'static str,
    count: u64,
    seed: u64,
    bounds: serde_json::Value,
    total: u64,
    agreements: u64,
    disagreements: u64,
    positives: u64,
    disagreement_list: Vec<DisagreementDoc>,
    size_violations: Vec<NoteDoc<'a>>,
    replay_failures: Vec<NoteDoc<'a>>,
    stats: StatsDoc,
}

fn bounds(spec: &CampaignSpec) -> serde_json::Value {
    let p = &spec.params;
    match spec.pair {
        Pair::CnfDk => json!({ "max_vars": p.cnf.max_vars, "max_clauses": p.cnf.max_clauses }),
        Pair::HamWario => json!({ "max_vertices": p.max_vertices }),
        Pair::KnapHarvest => json!({
            "max_W": p.knapsack.max_capacity,
            "max_items": p.knapsack.max_items,
            "max_w": p.knapsack.max_weight,
            "max_v": p.knapsack.max_value,
        }),
        Pair::Push1Mole => json!({
            "max_width": p.push1.max_width,
            "max_height": p.push1.max_height,
            "max_blocks": p.push1.max_blocks,
        }),
    }
}

/// JSON report. Timings are left out so reruns are byte-identical.
pub fn report_json(r: &CampaignReport) -> String {
    let doc = ReportDoc {
        format: "gbhard-campaign/1",
        pair: r.spec.pair.key(),
        count: r.spec.count,
        seed: r.spec.seed,
        bounds: bounds(&r.spec),
        total: r.total,
        agreements: r.agreements,
        disagreements: r.disagreements,
        positives: r.positives,
        disagreement_list: r
            .disagreement_list
            .iter()
            .map(|d| DisagreementDoc {
                index: d.index,
                seed: d.seed,
                oracle: d.oracle.to_string(),
                solver: d.solver.to_string(),
                instance: write_source(&d.instance),
            })
            .collect(),
        size_violations: notes(&r.size_violations),
        replay_failures: notes(&r.replay_failures),
        stats: StatsDoc {
            total_source_size: r.stats.total_source_size,
            total_output_size: r.stats.total_output_size,
            max_source_size: r.stats.max_source_size,
            max_output_size: r.stats.max_output_size,
            total_states_explored: r.stats.total_states_explored,
        },
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}

/// Human-readable summary, including reduction time.
pub fn report_table(r: &CampaignReport) -> String {
    let s = &r.stats;
    let mut out = String::new();
    let rows: [(&str, String); 10] = [
        ("pair", r.spec.pair.key().to_string()),
        ("seed", r.spec.seed.to_string()),
        ("instances", r.total.to_string()),
        ("agreements", r.agreements.to_string()),
        ("disagreements", r.disagreements.to_string()),
        ("oracle yes", r.positives.to_string()),
        ("size violations", r.size_violations.len().to_string()),
        ("replay failures", r.replay_failures.len().to_string()),
        (
            "source/output size",
            format!(
                "total {}/{}, max {}/{}",
                s.total_source_size, s.total_output_size, s.max_source_size, s.max_output_size
            ),
        ),
        (
            "states / reduce time",
            format!(
                "{} / {:.3} ms",
                s.total_states_explored,
                s.reduction_wall_clock.as_secs_f64() * 1e3
            ),
        ),
    ];
    for (k, v) in rows {
        writeln!(out, "{k:<22}{v}").unwrap();
    }
    for d in &r.disagreement_list {
        writeln!(
            out,
            "DISAGREE #{} (seed {:#018x}): oracle {}, solver {}",
            d.index, d.seed, d.oracle, d.solver
        )
        .unwrap();
    }
    for (i, m) in &r.size_violations {
        writeln!(out, "SIZE #{i}: {m}").unwrap();
    }
    for (i, m) in &r.replay_failures {
        writeln!(out, "REPLAY #{i}: {m}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use gbhard_core::verify::run_campaign;

    #[test]
    fn parallel_matches_sequential() {
        for pair in Pair::ALL {
            let spec = CampaignSpec::new(pair, 30, 17);
            let par = run_campaign_parallel(&spec, &Reducers::STANDARD).unwrap();
            let seq = run_campaign(&spec).unwrap();
            assert_eq!(report_json(&par), report_json(&seq));
        }
    }

    #[test]
    fn disagreements_carry_instance_text() {
        let spec = CampaignSpec::new(Pair::KnapHarvest, 100, 42);
        let r = run_campaign_parallel(&spec, &Reducers::mutant(Pair::KnapHarvest)).unwrap();
        let json: serde_json::Value = serde_json::from_str(&report_json(&r)).unwrap();
        let first = &json["disagreement_list"][0];
        assert!(first["instance"].as_str().unwrap().lines().count() >= 2);
        assert!(report_table(&r).contains("DISAGREE #"));
    }
}
