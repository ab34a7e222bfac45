mod spec;

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;
use tokengraphs::formulas::{ScanStatus, OEIS_MAX_COUNT};
use tokengraphs::report::{EXIT_BUDGET, EXIT_FAIL};
use tokengraphs::{
    conjecture_scan, counterexample_scan_2x5, max_independent_set_with_budget, max_matching,
    oeis_check, run_suite, token_graph, Budget, Error, Sequence, SuiteId, TokenGraph,
    VerificationReport, VerifyOptions,
};

use crate::spec::GraphSpec;

const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "tokengraphs",
    version,
    about = "Token graphs: construction, exact solvers and verification suites"
)]
struct Cli {
    /// Solver time limit per instance, in seconds
    #[arg(long, global = true, env = "TOKENGRAPHS_BUDGET")]
    budget: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build F_k(G) and export it
    Build {
        graph: GraphSpec,
        #[arg(short)]
        k: usize,
        /// Write Graphviz DOT to PATH ("-" for standard output)
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write JSON to PATH ("-" for standard output)
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Matching number of F_k(G) with a maximum matching
    Nu {
        graph: GraphSpec,
        #[arg(short)]
        k: usize,
        /// Print JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Independence number of F_k(G) with a maximum independent set
    Beta {
        graph: GraphSpec,
        #[arg(short)]
        k: usize,
        /// Print JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite (or "all")
    Verify {
        suite: String,
        /// Largest base graph order to include
        #[arg(long)]
        max_n: Option<usize>,
        /// Write the JSON report to PATH ("-" for standard output)
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write the CSV report to PATH ("-" for standard output)
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Record wall time per row
        #[arg(long)]
        timings: bool,
    },
    /// Exhaustive scans
    #[command(subcommand)]
    Scan(Scan),
    /// Sequence terms from closed forms, cross-checked by the solver
    Oeis {
        sequence: Sequence,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Print JSON instead of text
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum Scan {
    /// Compare beta(F_k(K_{m,n})) with the larger token class
    Conjecture {
        #[arg(long, default_value_t = 9)]
        max_order: usize,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        /// Write the JSON rows to PATH ("-" for standard output)
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Subgraphs of K_{2,5} whose 2-token graph beats both classes
    Fig3 {
        /// Skip subgraphs with an isolated vertex
        #[arg(long)]
        skip_isolated: bool,
        /// Write the JSON hits to PATH ("-" for standard output)
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            if matches!(e.downcast_ref::<Error>(), Some(Error::BudgetExceeded)) {
                ExitCode::from(EXIT_BUDGET as u8)
            } else {
                ExitCode::from(EXIT_USAGE)
            }
        }
    }
}

fn emit(path: &Path, text: &str) -> Result<()> {
    if path == Path::new("-") {
        let mut out = std::io::stdout().lock();
        out.write_all(text.as_bytes())?;
        if !text.ends_with('\n') {
            out.write_all(b"\n")?;
        }
        Ok(())
    } else {
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))
    }
}

fn token(spec: &GraphSpec, k: usize) -> Result<TokenGraph> {
    let g = spec.build()?;
    Ok(token_graph(&g, k)?)
}

fn run(cli: Cli) -> Result<u8> {
    let budget = || Budget::from_option(cli.budget);
    match cli.command {
        Command::Build {
            graph,
            k,
            dot,
            json,
        } => {
            let t = token(&graph, k)?;
            eprintln!(
                "F_{k}({graph}): {} vertices, {} edges",
                t.graph().order(),
                t.graph().size()
            );
            if let Some(path) = dot {
                emit(&path, &t.to_dot(&format!("F{k}")))?;
            }
            if let Some(path) = json {
                emit(&path, &serde_json::to_string_pretty(&t.to_json())?)?;
            }
            Ok(0)
        }
        Command::Nu { graph, k, json } => {
            let t = token(&graph, k)?;
            let m = max_matching(t.graph());
            let pairs: Vec<_> = m
                .edges()
                .iter()
                .map(|&(a, b)| [t.subset(a).to_string(), t.subset(b).to_string()])
                .collect();
            if json {
                let v =
                    json!({ "graph": graph.to_string(), "k": k, "nu": m.len(), "matching": pairs });
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                println!("{}", m.len());
                for [a, b] in pairs {
                    println!("{a} {b}");
                }
            }
            Ok(0)
        }
        Command::Beta { graph, k, json } => {
            let t = token(&graph, k)?;
            let set = max_independent_set_with_budget(t.graph(), &budget())?;
            let members: Vec<String> = set
                .vertices()
                .iter()
                .map(|&v| t.subset(v).to_string())
                .collect();
            if json {
                let v = json!({ "graph": graph.to_string(), "k": k, "beta": set.len(), "independent_set": members });
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                println!("{}", set.len());
                println!("{}", members.join(" "));
            }
            Ok(0)
        }
        Command::Verify {
            suite,
            max_n,
            json,
            csv,
            timings,
        } => {
            let ids: Vec<SuiteId> = if suite.eq_ignore_ascii_case("all") {
                SuiteId::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            let opts = VerifyOptions {
                max_n,
                budget_seconds: cli.budget,
                timings,
            };
            let mut report = VerificationReport::default();
            for id in ids {
                eprintln!("running {id}");
                report.rows.extend(run_suite(id, &opts)?.rows);
            }
            if let Some(path) = &json {
                emit(path, &report.to_json())?;
            }
            if let Some(path) = &csv {
                emit(path, &report.to_csv()?)?;
            }
            if json.is_none() && csv.is_none() {
                for r in &report.rows {
                    println!(
                        "{:<15} {:<7} {} | formula {} | solver {}",
                        r.status.as_str(),
                        r.theorem,
                        r.instance,
                        r.formula.as_deref().unwrap_or("-"),
                        r.solver.as_deref().unwrap_or("-"),
                    );
                }
            }
            eprintln!(
                "{} rows: {} pass, {} bound-holds, {} fail, {} budget-exceeded",
                report.rows.len(),
                report.count(tokengraphs::Status::Pass),
                report.count(tokengraphs::Status::BoundHolds),
                report.count(tokengraphs::Status::Fail),
                report.count(tokengraphs::Status::BudgetExceeded),
            );
            Ok(report.exit_code() as u8)
        }
        Command::Scan(Scan::Conjecture {
            max_order,
            max_k,
            json,
        }) => {
            let rows = conjecture_scan(max_order, max_k, &budget())?;
            if let Some(path) = &json {
                emit(path, &serde_json::to_string_pretty(&rows)?)?;
            } else {
                for r in &rows {
                    let beta = r.beta.map_or("-".to_string(), |b| b.to_string());
                    println!(
                        "K_{{{},{}}} k={} |R|={} |B|={} beta={} {:?}",
                        r.m, r.n, r.k, r.r_class, r.b_class, beta, r.status
                    );
                }
            }
            let violations = rows
                .iter()
                .filter(|r| r.status == ScanStatus::Violation)
                .count();
            let exhausted = rows
                .iter()
                .filter(|r| r.status == ScanStatus::BudgetExceeded)
                .count();
            eprintln!(
                "{} rows, {violations} violations, {exhausted} budget-exceeded",
                rows.len()
            );
            Ok(if violations > 0 {
                EXIT_FAIL as u8
            } else if exhausted > 0 {
                EXIT_BUDGET as u8
            } else {
                0
            })
        }
        Command::Scan(Scan::Fig3 {
            skip_isolated,
            json,
        }) => {
            let hits = counterexample_scan_2x5(skip_isolated, &budget())?;
            if let Some(path) = &json {
                emit(path, &serde_json::to_string_pretty(&hits)?)?;
            } else {
                for h in &hits {
                    let edges: Vec<String> = h
                        .graph
                        .edges()
                        .iter()
                        .map(|&(u, v)| format!("{}-{}", u + 1, v + 1))
                        .collect();
                    println!(
                        "beta={} bound={} hall deficiency={} edges {}",
                        h.beta,
                        h.bound,
                        h.violation.deficiency(),
                        edges.join(" ")
                    );
                }
            }
            eprintln!("{} graphs with beta(F_2) above 11", hits.len());
            Ok(if hits.iter().any(|h| h.beta == 12) {
                0
            } else {
                EXIT_FAIL as u8
            })
        }
        Command::Oeis {
            sequence,
            count,
            json,
        } => {
            if count > OEIS_MAX_COUNT {
                anyhow::bail!("--count is limited to {OEIS_MAX_COUNT}");
            }
            let rep = oeis_check(sequence, count, &budget())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rep)?);
            } else {
                for t in &rep.terms {
                    let solver = t.solver.map_or("-".to_string(), |s| s.to_string());
                    let instance = t.instance.as_deref().unwrap_or("-");
                    println!("{:<10} {:>8}  {instance} solver {solver}", t.index, t.value);
                }
            }
            Ok(if rep.matched { 0 } else { EXIT_FAIL as u8 })
        }
    }
}
