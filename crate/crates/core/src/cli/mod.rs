//! Command-line front end of the `jackmaps` binary.
//!
//! [`run_command`] parses an argument vector and returns a
//! [`CommandResult`]; [`main_with_args`] adds printing and exit codes
//! (`0` ok, `1` verification failure, `2` usage error).

mod output;
mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

pub use output::{CommandResult, Format, Payload, Status};
pub use suites::{ch3_squared_expected, ch3_two_rect_stanley, ch3_two_rect_top, run_suite, Suite, SuiteRow};

use crate::characters::{delta_n, solve_character_family, stanley_polynomial, top_degree};
use crate::diagrams::{evaluate_family, YoungDiagram};
use crate::jack_oracle::{jack_character, jack_j, set_cache_dir, structure_constants, theta};
use crate::nonoriented_maps::{build_bijection, count_s1_s2};
use crate::oriented_maps::{ch_top_maps, enumerate_labeled, enumerate_rooted, OrientedBicolMap};

#[derive(Debug, Parser)]
#[command(name = "jackmaps", version, about = "Exact Jack characters and bicolored maps")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Directory for cached Jack tables (also `JACKMAPS_CACHE_DIR`).
    #[arg(long, global = true, env = "JACKMAPS_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads; defaults to the number of logical cores.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Top-degree Stanley polynomial from the oriented map sum.
    ChTop {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        rects: usize,
    },
    /// Stanley polynomial of the solved `Ch_n`.
    Stanley {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        rects: usize,
        /// Keep only the homogeneous top-degree part.
        #[arg(long, conflicts_with = "lower")]
        top: bool,
        /// Keep only the terms below the top degree.
        #[arg(long)]
        lower: bool,
    },
    /// Evaluates the solved `Ch_n` on a diagram, or prints its family.
    ChEval {
        #[arg(long)]
        n: u32,
        /// Comma-separated parts; omit to print the content polynomials.
        #[arg(long)]
        lambda: Option<YoungDiagram>,
    },
    /// Jack polynomial oracle.
    Oracle {
        #[command(subcommand)]
        what: OracleCommand,
    },
    /// Oriented bicolored maps.
    Maps {
        #[command(subcommand)]
        what: MapsCommand,
    },
    /// Counting identity and correspondence between ordered maps.
    Bijection {
        #[command(subcommand)]
        what: BijectionCommand,
    },
    /// Expansion of `Ch_μ · Ch_ν` in the characters `Ch_ρ`.
    StructureConstants {
        #[arg(long)]
        mu: YoungDiagram,
        #[arg(long)]
        nu: YoungDiagram,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// `Ch_μ(λ)`.
    Ch {
        #[arg(long)]
        mu: YoungDiagram,
        #[arg(long)]
        lambda: YoungDiagram,
    },
    /// `J_λ` in power sums, with `α = A²`.
    Jack {
        #[arg(long)]
        lambda: YoungDiagram,
    },
    /// `θ_π(λ)`.
    Theta {
        #[arg(long)]
        pi: YoungDiagram,
        #[arg(long)]
        lambda: YoungDiagram,
    },
}

#[derive(Debug, Subcommand)]
pub enum MapsCommand {
    /// Lists rooted maps (or all labeled pairs with `--labeled`).
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        labeled: bool,
    },
    /// Counts rooted maps by vertices, faces and genus.
    Stats {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum BijectionCommand {
    /// Both sides of the counting identity.
    Count {
        #[arg(long)]
        n: usize,
    },
    /// Builds the correspondence and checks it.
    Build {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] clap::Error),
    #[error("{0}")]
    Domain(String),
}

fn domain<E: ToString>(e: E) -> CliError {
    CliError::Domain(e.to_string())
}

fn perm_text(p: &[usize]) -> String {
    let v: Vec<String> = p.iter().map(|x| (x + 1).to_string()).collect();
    v.join(" ")
}

fn map_row(m: &OrientedBicolMap) -> Vec<String> {
    let s = m.stats();
    vec![
        perm_text(m.sigma()),
        perm_text(m.tau()),
        s.whites.to_string(),
        s.blacks.to_string(),
        s.faces.to_string(),
        s.genus.to_string(),
    ]
}

fn execute(command: &Command) -> Result<(Status, Payload), CliError> {
    let ok = |p: Payload| Ok((Status::Ok, p));
    match command {
        Command::ChTop { n, rects } => ok(Payload::polynomial(&ch_top_maps(*n, *rects).map_err(domain)?)),
        Command::Stanley { n, rects, top, lower } => {
            let sol = solve_character_family(*n).map_err(domain)?;
            let p = if *top {
                top_degree(&sol, *rects).map_err(domain)?.stanley_top
            } else if *lower {
                delta_n(&sol, *rects).map_err(domain)?
            } else {
                stanley_polynomial(&sol, *rects).map_err(domain)?
            };
            ok(Payload::polynomial(&p))
        }
        Command::ChEval { n, lambda } => {
            let sol = solve_character_family(*n).map_err(domain)?;
            match lambda {
                Some(l) => ok(Payload::scalar("value", evaluate_family(&sol.family, l))),
                None => {
                    let map = sol.family.to_text_map();
                    let rows: Vec<Vec<String>> = map.iter().map(|(k, p)| vec![k.to_string(), p.clone()]).collect();
                    let text = rows.iter().map(|r| format!("p{} = {}", r[0], r[1])).collect::<Vec<_>>().join("\n");
                    ok(Payload::table(serde_json::to_value(&sol).expect("serialisable"), &["k", "polynomial"], rows, text))
                }
            }
        }
        Command::Oracle { what } => match what {
            OracleCommand::Ch { mu, lambda } => ok(Payload::scalar("value", jack_character(mu, lambda).map_err(domain)?)),
            OracleCommand::Jack { lambda } => {
                let j = jack_j(lambda).map_err(domain)?;
                let rows: Vec<Vec<String>> = j.coeffs.iter().rev().map(|(p, c)| vec![p.to_string(), c.to_string()]).collect();
                let json = json!({ "basis": "powersum", "coeffs": rows.iter().map(|r| (r[0].clone(), r[1].clone())).collect::<std::collections::BTreeMap<_, _>>() });
                ok(Payload::table(json, &["partition", "coefficient"], rows, j.to_string()))
            }
            OracleCommand::Theta { pi, lambda } => ok(Payload::scalar("value", theta(pi, lambda).map_err(domain)?)),
        },
        Command::Maps { what } => match what {
            MapsCommand::Enumerate { n, labeled } => {
                let maps = if *labeled { enumerate_labeled(*n) } else { enumerate_rooted(*n) }.map_err(domain)?;
                let rows: Vec<Vec<String>> = maps.iter().map(map_row).collect();
                let text = rows
                    .iter()
                    .map(|r| format!("sigma=({}) tau=({}) whites={} blacks={} faces={} genus={}", r[0], r[1], r[2], r[3], r[4], r[5]))
                    .collect::<Vec<_>>()
                    .join("\n");
                let json: Vec<_> = maps.iter().map(|m| json!({ "map": m, "stats": m.stats() })).collect();
                ok(Payload::table(json!(json), &["sigma", "tau", "whites", "blacks", "faces", "genus"], rows, text))
            }
            MapsCommand::Stats { n } => {
                let maps = enumerate_rooted(*n).map_err(domain)?;
                let mut counts: std::collections::BTreeMap<(usize, usize, usize, usize), u64> = Default::default();
                for m in &maps {
                    let s = m.stats();
                    *counts.entry((s.whites, s.blacks, s.faces, s.genus)).or_default() += 1;
                }
                let rows: Vec<Vec<String>> = counts
                    .iter()
                    .map(|(k, c)| vec![k.0.to_string(), k.1.to_string(), k.2.to_string(), k.3.to_string(), c.to_string()])
                    .collect();
                let mut text = format!("rooted maps with {n} edges: {}\n", maps.len());
                for r in &rows {
                    text.push_str(&format!("whites={} blacks={} faces={} genus={}: {}\n", r[0], r[1], r[2], r[3], r[4]));
                }
                let json = json!({
                    "n": n,
                    "rooted": maps.len().to_string(),
                    "classes": rows.iter().map(|r| json!({"whites": r[0], "blacks": r[1], "faces": r[2], "genus": r[3], "count": r[4]})).collect::<Vec<_>>(),
                });
                ok(Payload::table(json, &["whites", "blacks", "faces", "genus", "count"], rows, text))
            }
        },
        Command::Bijection { what } => match what {
            BijectionCommand::Count { n } => {
                let c = count_s1_s2(*n).map_err(domain)?;
                let status = Status::from_pass(c.s1 == c.s2);
                let row = vec![c.n.to_string(), c.s1.to_string(), c.s2.to_string(), c.s1_labeled_pairs.to_string()];
                let text = format!("n={} S1={} S2={} labeled_pairs={} equal={}", c.n, c.s1, c.s2, c.s1_labeled_pairs, c.s1 == c.s2);
                let json = json!({ "n": c.n, "s1": c.s1.to_string(), "s2": c.s2.to_string(), "s1_labeled_pairs": c.s1_labeled_pairs.to_string(), "equal": c.s1 == c.s2 });
                Ok((status, Payload::table(json, &["n", "s1", "s2", "s1_labeled_pairs"], vec![row], text)))
            }
            BijectionCommand::Build { n } => {
                let r = build_bijection(*n).map_err(domain)?;
                let status = Status::from_pass(r.injective && r.surjective);
                let rows: Vec<Vec<String>> = r
                    .entries
                    .iter()
                    .map(|e| vec![e.root.to_string(), e.s1.to_string(), perm_text(e.s2.sigma()), perm_text(e.s2.tau())])
                    .collect();
                let mut text = format!(
                    "n={} |S1|={} |S2|={} injective={} surjective={} preserves_graph={}\n",
                    r.n, r.s1_size, r.s2_size, r.injective, r.surjective, r.preserves_graph
                );
                for row in &rows {
                    text.push_str(&format!("root={} {} -> sigma=({}) tau=({})\n", row[0], row[1], row[2], row[3]));
                }
                let json = serde_json::to_value(&r).expect("serialisable");
                Ok((status, Payload::table(json, &["root", "s1", "s2_sigma", "s2_tau"], rows, text)))
            }
        },
        Command::StructureConstants { mu, nu } => {
            let sc = structure_constants(mu, nu).map_err(domain)?;
            let rows: Vec<Vec<String>> = sc
                .coeffs
                .iter()
                .map(|(rho, g)| {
                    let d = sc.delta[rho].as_ref().map_or(String::new(), |p| p.to_string());
                    vec![rho.to_string(), g.to_string(), d]
                })
                .collect();
            let text = rows
                .iter()
                .map(|r| format!("[{}] {}", r[0], if r[2].is_empty() { &r[1] } else { &r[2] }))
                .collect::<Vec<_>>()
                .join("\n");
            ok(Payload::table(serde_json::to_value(&sc).expect("serialisable"), &["rho", "coefficient", "delta_form"], rows, text))
        }
        Command::Verify { suite, max_n } => {
            let report = run_suite(*suite, *max_n);
            let pass = report.iter().all(|r| r.pass);
            let rows: Vec<Vec<String>> = report
                .iter()
                .map(|r| vec![r.suite.clone(), r.case.clone(), r.pass.to_string(), r.detail.clone()])
                .collect();
            let mut text: String = report
                .iter()
                .map(|r| format!("{} {} {}: {}\n", if r.pass { "PASS" } else { "FAIL" }, r.suite, r.case, r.detail))
                .collect();
            text.push_str(&format!("{} of {} checks passed", report.iter().filter(|r| r.pass).count(), report.len()));
            let json = serde_json::to_value(&report).expect("serialisable");
            Ok((Status::from_pass(pass), Payload::table(json, &["suite", "case", "pass", "detail"], rows, text)))
        }
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run_command<I, T>(argv: I) -> Result<(CommandResult, Format), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    set_cache_dir(cli.cache_dir.clone());
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j.max(1));
    }
    let pool = pool.build().map_err(domain)?;
    let start = Instant::now();
    let (status, payload) = pool.install(|| execute(&cli.command))?;
    let result = CommandResult { status, payload, timing_ms: start.elapsed().as_millis() };
    Ok((result, cli.format))
}

/// Runs the binary: prints to stdout, timing to stderr, returns the exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match run_command(argv) {
        Ok((result, format)) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(result.render(format).as_bytes());
            eprintln!("elapsed: {} ms", result.timing_ms);
            match result.status {
                Status::Ok => 0,
                Status::Fail => 1,
            }
        }
        Err(CliError::Usage(e)) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            code
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}
