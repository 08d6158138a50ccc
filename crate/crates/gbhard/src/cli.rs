//! `gbhard` command line. Exit status: 0 yes/agree, 1 no/disagree,
//! 2 error (usage errors included).

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gbhard_core::levels::{render_ascii, Level};
use gbhard_core::problems::{ham_cycle_oracle, knapsack_oracle, push1_oracle, sat_oracle};
use gbhard_core::reductions::{self, SourceInstance};
use gbhard_core::simulators::solve;
use gbhard_core::verify::{CampaignSpec, Pair, Reducers, SizeParams};

use crate::campaign::{report_json, report_table, run_campaign_parallel};
use crate::formats::{parse_dimacs, parse_graph, parse_knapsack, parse_push1, ParseError};
use crate::level_file::{deserialize_level, serialize_level};

#[derive(Debug, Parser)]
#[command(
    name = "gbhard",
    version,
    about = "Reduce NP-complete problems to Game Boy puzzle levels and check the results"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compile a source instance into a level (the game follows from the source).
    Reduce {
        #[arg(long, value_enum)]
        from: SourceKind,
        /// Input file, or `-` for standard input.
        #[arg(short, long)]
        input: String,
        /// Output file (default: standard output).
        #[arg(short, long)]
        output: Option<String>,
        /// Print size and timing as one JSON line on standard error.
        #[arg(long)]
        stats: bool,
    },
    /// Decide a level: prints SOLVABLE (exit 0) or UNSOLVABLE (exit 1).
    Solve {
        #[arg(short, long)]
        input: String,
        /// Also print a winning action sequence.
        #[arg(long)]
        witness: bool,
    },
    /// Decide a source instance by brute force: prints YES (exit 0) or NO (exit 1).
    Oracle {
        #[arg(long, value_enum)]
        problem: ProblemKind,
        #[arg(short, long)]
        input: String,
    },
    /// Run a seeded oracle-versus-solver campaign; exit 0 iff every instance agrees.
    Verify(VerifyArgs),
    /// Draw a level as ASCII.
    Render {
        #[arg(short, long)]
        input: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SourceKind {
    #[value(name = "3cnf")]
    Cnf3,
    Hamcycle,
    Knapsack,
    Push1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProblemKind {
    Sat,
    Hamcycle,
    Knapsack,
    Push1,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// cnf-dk, ham-wario, knap-harvest or push1-mole.
    #[arg(long)]
    pub pair: Pair,
    #[arg(long)]
    pub count: u64,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub max_vars: Option<usize>,
    #[arg(long)]
    pub max_clauses: Option<usize>,
    #[arg(long)]
    pub max_vertices: Option<usize>,
    /// Largest knapsack capacity W (= Harvest Moon days).
    #[arg(long)]
    pub max_capacity: Option<u64>,
    #[arg(long)]
    pub max_items: Option<usize>,
    #[arg(long)]
    pub max_weight: Option<u64>,
    #[arg(long)]
    pub max_value: Option<u64>,
    #[arg(long)]
    pub max_width: Option<usize>,
    #[arg(long)]
    pub max_height: Option<usize>,
    #[arg(long)]
    pub max_blocks: Option<usize>,
    /// Print the report as JSON instead of a table.
    #[arg(long)]
    pub json: bool,
}

impl VerifyArgs {
    pub fn spec(&self) -> CampaignSpec {
        let mut p = SizeParams::standard();
        let set = |slot: &mut usize, v: Option<usize>| {
            if let Some(v) = v {
                *slot = v;
            }
        };
        set(&mut p.cnf.max_vars, self.max_vars);
        set(&mut p.cnf.max_clauses, self.max_clauses);
        set(&mut p.max_vertices, self.max_vertices);
        set(&mut p.knapsack.max_items, self.max_items);
        set(&mut p.push1.max_width, self.max_width);
        set(&mut p.push1.max_height, self.max_height);
        set(&mut p.push1.max_blocks, self.max_blocks);
        if let Some(v) = self.max_capacity {
            p.knapsack.max_capacity = v;
        }
        if let Some(v) = self.max_weight {
            p.knapsack.max_weight = v;
        }
        if let Some(v) = self.max_value {
            p.knapsack.max_value = v;
        }
        CampaignSpec {
            pair: self.pair,
            count: self.count,
            seed: self.seed,
            params: p,
        }
    }
}

/// Error with its file context already attached.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct CliError(String);

fn display_name(path: &str) -> &str {
    if path == "-" {
        "<stdin>"
    } else {
        path
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    let mut text = String::new();
    let res = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| CliError(format!("{}: {e}", display_name(path))))?;
    Ok(text)
}

fn parsed<T>(path: &str, r: Result<T, ParseError>) -> Result<T, CliError> {
    r.map_err(|e| CliError(format!("{}:{}: {}", display_name(path), e.line, e.message)))
}

fn read_source(path: &str, kind: ProblemKind) -> Result<SourceInstance, CliError> {
    let text = read_input(path)?;
    Ok(match kind {
        ProblemKind::Sat => SourceInstance::Cnf(parsed(path, parse_dimacs(&text))?),
        ProblemKind::Hamcycle => SourceInstance::Graph(parsed(path, parse_graph(&text))?),
        ProblemKind::Knapsack => SourceInstance::Knapsack(parsed(path, parse_knapsack(&text))?),
        ProblemKind::Push1 => SourceInstance::Push1(parsed(path, parse_push1(&text))?),
    })
}

fn read_level(path: &str) -> Result<Level, CliError> {
    let text = read_input(path)?;
    deserialize_level(&text).map_err(|e| CliError(format!("{}: {e}", display_name(path))))
}

fn check_valid(path: &str, level: &Level) -> Result<(), CliError> {
    let violations = level.validate();
    if violations.is_empty() {
        return Ok(());
    }
    let list: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
    Err(CliError(format!(
        "{}: invalid level: {}",
        display_name(path),
        list.join("; ")
    )))
}

fn write_output(path: Option<&str>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) if p != "-" => fs::write(p, text).map_err(|e| CliError(format!("{p}: {e}"))),
        _ => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError(format!("<stdout>: {e}"))),
    }
}

fn verdict(yes: bool) -> u8 {
    if yes {
        0
    } else {
        1
    }
}

/// Runs one command; returns the exit status.
pub fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Reduce {
            from,
            input,
            output,
            stats,
        } => {
            let kind = match from {
                SourceKind::Cnf3 => ProblemKind::Sat,
                SourceKind::Hamcycle => ProblemKind::Hamcycle,
                SourceKind::Knapsack => ProblemKind::Knapsack,
                SourceKind::Push1 => ProblemKind::Push1,
            };
            let source = read_source(&input, kind)?;
            let t0 = Instant::now();
            let level = source
                .reduce()
                .map_err(|e| CliError(format!("{}: {e}", display_name(&input))))?;
            let st = reductions::stats(&source, &level, t0.elapsed());
            write_output(output.as_deref(), &serialize_level(&level))?;
            if stats {
                eprintln!(
                    "{{\"source_size\":{},\"output_size\":{},\"wall_clock_us\":{}}}",
                    st.source_size,
                    st.output_size,
                    st.wall_clock.as_micros()
                );
            }
            Ok(0)
        }
        Command::Solve { input, witness } => {
            let level = read_level(&input)?;
            check_valid(&input, &level)?;
            let d =
                solve(&level).map_err(|e| CliError(format!("{}: {e}", display_name(&input))))?;
            let mut out = String::from(if d.solvable {
                "SOLVABLE\n"
            } else {
                "UNSOLVABLE\n"
            });
            if let (true, Some(w)) = (witness, &d.witness) {
                out.push_str(&format!("witness: {w}\n"));
            }
            write_output(None, &out)?;
            Ok(verdict(d.solvable))
        }
        Command::Oracle { problem, input } => {
            let source = read_source(&input, problem)?;
            let answer = match &source {
                SourceInstance::Cnf(f) => sat_oracle(f),
                SourceInstance::Graph(g) => ham_cycle_oracle(g),
                SourceInstance::Knapsack(k) => knapsack_oracle(k),
                SourceInstance::Push1(p) => push1_oracle(p),
            }
            .map_err(|e| CliError(format!("{}: {e}", display_name(&input))))?;
            write_output(None, if answer { "YES\n" } else { "NO\n" })?;
            Ok(verdict(answer))
        }
        Command::Verify(args) => {
            let spec = args.spec();
            let report = run_campaign_parallel(&spec, &Reducers::STANDARD)
                .map_err(|e| CliError(format!("verify: {e}")))?;
            let text = if args.json {
                report_json(&report)
            } else {
                report_table(&report)
            };
            write_output(None, &text)?;
            Ok(verdict(report.disagreements == 0))
        }
        Command::Render { input } => {
            let level = read_level(&input)?;
            let text = render_ascii(&level)
                .map_err(|e| CliError(format!("{}: {e}", display_name(&input))))?;
            write_output(None, &text)?;
            Ok(0)
        }
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("gbhard: {e}");
            ExitCode::from(2)
        }
    }
}
