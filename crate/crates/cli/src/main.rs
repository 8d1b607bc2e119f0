//! `scrambler`: generate graphs, compute scramble orders and gonality, and
//! check theorem hypotheses from the command line.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use scramble_core::divisor::{
    check_strong_separator, gonality_bruteforce, gonality_upper_by_separator, has_positive_rank,
    q_reduce, Divisor, GonalitySearch,
};
use scramble_core::graph::{generate, parse_edge_list, write_edge_list};
use scramble_core::invariants::{InvariantKind, InvariantValue};
use scramble_core::scramble::{
    egg_cut_witness, eggcut_finite, hitting_lower_bound, hitting_number_with, parse_scramble,
    uniform_scramble, LowerBoundCheck, Scramble, SearchLimits, SearchProgress,
};
use scramble_core::verify::{verify, TheoremSpec, VerifyOptions};
use scramble_core::{Error, ExtendedCount, Family, Multigraph, VertexSet};

/// Hitting-set searches stop after this many nodes unless `--long-running`
/// or `--max-nodes` says otherwise.
const DEFAULT_MAX_NODES: u64 = 200_000_000;

#[derive(Parser)]
#[command(
    name = "scrambler",
    version,
    about = "Scramble numbers and divisorial gonality of multigraphs"
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph from a named family as an edge list.
    Gen {
        family: String,
        params: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Summarise a graph file.
    Info { file: PathBuf },
    /// Compute one graph parameter.
    #[command(subcommand)]
    Invariant(InvariantCommand),
    /// Work with scrambles.
    #[command(subcommand)]
    Scramble(ScrambleCommand),
    /// Divisorial gonality.
    #[command(subcommand)]
    Gonality(GonalityCommand),
    /// q-reduce a divisor.
    Reduce {
        file: PathBuf,
        divisor: PathBuf,
        q: usize,
    },
    /// Check a theorem's hypotheses and conclusion on a graph.
    Verify {
        /// main:L, girth3, girth4a, girth4b, girth5, bipartite1, bipartite2 or order_ek:K
        theorem: String,
        file: PathBuf,
        /// Largest vertex count for the brute-force gonality cross-check.
        #[arg(long, default_value_t = VerifyOptions::default().brute_force_cap)]
        brute_force_cap: usize,
    },
}

#[derive(Subcommand)]
enum InvariantCommand {
    LambdaK { k: usize, file: PathBuf },
    XiK { k: usize, file: PathBuf },
    AlphaC { l: usize, file: PathBuf },
    Girth { file: PathBuf },
}

#[derive(Subcommand)]
enum ScrambleCommand {
    /// The scramble of all connected K-vertex sets.
    Uniform {
        k: usize,
        file: PathBuf,
        #[arg(long, conflicts_with_all = ["hitting", "eggcut"])]
        order: bool,
        #[arg(long, conflicts_with = "eggcut")]
        hitting: bool,
        #[arg(long)]
        eggcut: bool,
        /// With --hitting: only decide whether the hitting number is at least B.
        #[arg(long, value_name = "B", requires = "hitting")]
        at_least: Option<usize>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Order of a scramble read from a file.
    Order {
        file: PathBuf,
        scramble: PathBuf,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Whether a scramble has any egg-cut.
    Finite { file: PathBuf, scramble: PathBuf },
}

#[derive(Args)]
struct LimitArgs {
    /// Lift the default node cap and report progress on stderr.
    #[arg(long)]
    long_running: bool,
    /// Stop the hitting-set search after this many seconds.
    #[arg(long, value_name = "SECS")]
    time_limit: Option<u64>,
    /// Stop the hitting-set search after this many branch nodes.
    #[arg(long, value_name = "N")]
    max_nodes: Option<u64>,
}

impl LimitArgs {
    fn limits(&self) -> SearchLimits {
        let max_nodes = match (self.max_nodes, self.long_running) {
            (Some(n), _) => Some(n),
            (None, true) => None,
            (None, false) => Some(DEFAULT_MAX_NODES),
        };
        SearchLimits {
            max_nodes,
            time_limit: self.time_limit.map(Duration::from_secs),
        }
    }

    fn progress(&self) -> impl FnMut(SearchProgress) {
        let verbose = self.long_running;
        move |p: SearchProgress| {
            if verbose {
                let best = p.best.map_or("none".to_string(), |b| b.to_string());
                eprintln!(
                    "[{:.1}s] {} nodes, best so far {}",
                    p.elapsed.as_secs_f64(),
                    p.nodes,
                    best
                );
            }
        }
    }
}

#[derive(Subcommand)]
enum GonalityCommand {
    /// Exact gonality by trying every effective divisor.
    Brute {
        file: PathBuf,
        #[arg(long, value_name = "D")]
        max_degree: Option<u64>,
    },
    /// Whether a divisor has positive rank.
    Check { file: PathBuf, divisor: PathBuf },
    /// Upper bound from a strong separator.
    Upper { file: PathBuf },
}

/// A failed command: message for stderr and the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParameter(_) | Error::UnknownFamily(_) => 1,
            Error::ResourceLimit(_) => 3,
            Error::Internal(_) => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T = ()> = std::result::Result<T, Failure>;

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: scramble_core::Result<T>) -> CliResult<T> {
    r.map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn load_graph(path: &Path) -> CliResult<Multigraph> {
    let text = read_text(path)?;
    with_path(path, parse_edge_list(&text))
}

fn load_connected(path: &Path) -> CliResult<Multigraph> {
    let g = load_graph(path)?;
    with_path(path, g.require_connected())?;
    Ok(g)
}

fn load_scramble<'g>(g: &'g Multigraph, path: &Path) -> CliResult<Scramble<'g>> {
    let text = read_text(path)?;
    with_path(path, parse_scramble(g, &text))
}

fn load_divisor(g: &Multigraph, path: &Path) -> CliResult<Divisor> {
    let text = read_text(path)?;
    with_path(path, Divisor::parse_for(g, &text))
}

fn set_vec(s: VertexSet) -> Vec<usize> {
    s.to_vec()
}

/// Output of a successful command: text or JSON, chosen by `--json`.
struct Output {
    json: bool,
    exit: u8,
}

impl Output {
    fn emit<T: Serialize>(&self, report: &T, text: impl FnOnce() -> String) {
        if self.json {
            println!(
                "{}",
                serde_json::to_string_pretty(report).expect("report serialises")
            );
        } else {
            println!("{}", text());
        }
    }
}

#[derive(Serialize)]
struct InfoReport {
    n: usize,
    edges: u64,
    simple: bool,
    connected: bool,
    girth: ExtendedCount,
    min_valence: u64,
    valences: Vec<u64>,
    bipartition: Option<(Vec<usize>, Vec<usize>)>,
}

#[derive(Serialize)]
struct HittingReport {
    k: usize,
    eggs: usize,
    hitting_number: usize,
    witness: Vec<usize>,
}

#[derive(Serialize)]
struct LowerBoundReport {
    k: usize,
    eggs: usize,
    bound: usize,
    holds: bool,
    smaller_hitting_set: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct EggCutReport {
    egg_cut_number: ExtendedCount,
    eggs: Option<(Vec<usize>, Vec<usize>)>,
}

#[derive(Serialize)]
struct OrderReport {
    eggs: usize,
    hitting_number: usize,
    egg_cut_number: ExtendedCount,
    order: ExtendedCount,
}

#[derive(Serialize)]
struct FiniteReport {
    finite: bool,
    eggs: Option<(Vec<usize>, Vec<usize>)>,
}

#[derive(Serialize)]
struct RankReport {
    divisor: Divisor,
    degree: i64,
    positive_rank: bool,
}

#[derive(Serialize)]
struct UpperReport {
    bound: u64,
    separator: Vec<usize>,
    component_order: usize,
}

#[derive(Serialize)]
struct ReduceReport {
    q: usize,
    reduced: Divisor,
}

fn run(cli: Cli) -> CliResult<u8> {
    let mut out = Output {
        json: cli.json,
        exit: 0,
    };
    match cli.command {
        Command::Gen {
            family,
            params,
            output,
        } => {
            let family: Family = family.parse()?;
            let g = generate(family, &params)?;
            let text = write_edge_list(&g);
            match output {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
        }
        Command::Info { file } => {
            let g = load_graph(&file)?;
            let report = InfoReport {
                n: g.n(),
                edges: g.edge_count(),
                simple: g.is_simple(),
                connected: g.is_connected(),
                girth: g.girth(),
                min_valence: g.min_valence(),
                valences: g.valences().to_vec(),
                bipartition: g.bipartition().ok().map(|(a, b)| (set_vec(a), set_vec(b))),
            };
            out.emit(&report, || {
                let mut lines = vec![
                    format!("vertices: {}", report.n),
                    format!("edges: {}", report.edges),
                    format!("simple: {}", report.simple),
                    format!("connected: {}", report.connected),
                    format!("girth: {}", report.girth),
                    format!("min valence: {}", report.min_valence),
                ];
                match &report.bipartition {
                    Some((a, b)) => lines.push(format!("bipartite: {a:?} | {b:?}")),
                    None => lines.push("bipartite: no".into()),
                }
                lines.join("\n")
            });
        }
        Command::Invariant(cmd) => {
            let (kind, parameter, file) = match cmd {
                InvariantCommand::LambdaK { k, file } => (InvariantKind::LambdaK, k, file),
                InvariantCommand::XiK { k, file } => (InvariantKind::XiK, k, file),
                InvariantCommand::AlphaC { l, file } => (InvariantKind::AlphaC, l, file),
                InvariantCommand::Girth { file } => (InvariantKind::Girth, 0, file),
            };
            let g = load_graph(&file)?;
            if kind == InvariantKind::LambdaK {
                with_path(&file, g.require_connected())?;
            }
            let value = InvariantValue::compute(&g, kind, parameter)?;
            out.emit(&value, || value.value.to_string());
        }
        Command::Scramble(cmd) => scramble_command(cmd, &out)?,
        Command::Gonality(cmd) => out.exit = gonality_command(cmd, &out)?,
        Command::Reduce { file, divisor, q } => {
            let g = load_connected(&file)?;
            let d = load_divisor(&g, &divisor)?;
            let reduced = q_reduce(&g, &d, q)?;
            let report = ReduceReport { q, reduced };
            out.emit(&report, || report.reduced.to_string());
        }
        Command::Verify {
            theorem,
            file,
            brute_force_cap,
        } => {
            let spec: TheoremSpec = theorem.parse()?;
            let g = load_connected(&file)?;
            let report = with_path(&file, verify(&g, spec, VerifyOptions { brute_force_cap }))?;
            if out.json {
                println!("{}", report.to_json());
            } else {
                println!("{report}");
            }
        }
    }
    Ok(out.exit)
}

fn scramble_command(cmd: ScrambleCommand, out: &Output) -> CliResult {
    match cmd {
        ScrambleCommand::Uniform {
            k,
            file,
            order,
            hitting,
            eggcut,
            at_least,
            limits,
        } => {
            let g = load_connected(&file)?;
            let s = uniform_scramble(&g, k)?;
            if hitting {
                match at_least {
                    Some(bound) => {
                        let check =
                            hitting_lower_bound(&s, bound, limits.limits(), limits.progress())?;
                        let report = LowerBoundReport {
                            k,
                            eggs: s.len(),
                            bound,
                            holds: check == LowerBoundCheck::Holds,
                            smaller_hitting_set: match check {
                                LowerBoundCheck::Holds => None,
                                LowerBoundCheck::Refuted(w) => Some(set_vec(w)),
                            },
                        };
                        out.emit(&report, || match &report.smaller_hitting_set {
                            None => format!("h >= {bound}: holds"),
                            Some(w) => format!("h >= {bound}: refuted by {w:?}"),
                        });
                    }
                    None => {
                        let h = hitting_number_with(&s, limits.limits(), limits.progress())?;
                        let report = HittingReport {
                            k,
                            eggs: s.len(),
                            hitting_number: h.size,
                            witness: set_vec(h.witness),
                        };
                        out.emit(&report, || format!("{}\nwitness: {}", h.size, h.witness));
                    }
                }
            } else if eggcut {
                out_eggcut(&s, out)?;
            } else {
                let report = order_report(&s, &limits)?;
                if order {
                    out.emit(&report, || report.order.to_string());
                } else {
                    out.emit(&report, || order_text(&report));
                }
            }
        }
        ScrambleCommand::Order {
            file,
            scramble,
            limits,
        } => {
            let g = load_connected(&file)?;
            let s = load_scramble(&g, &scramble)?;
            let report = order_report(&s, &limits)?;
            out.emit(&report, || order_text(&report));
        }
        ScrambleCommand::Finite { file, scramble } => {
            let g = load_connected(&file)?;
            let s = load_scramble(&g, &scramble)?;
            let pair = eggcut_finite(&s)?;
            let report = FiniteReport {
                finite: pair.is_some(),
                eggs: pair.map(|(a, b)| (set_vec(a), set_vec(b))),
            };
            out.emit(&report, || match pair {
                Some((a, b)) => format!("finite: disjoint eggs {a} and {b}"),
                None => "inf: no two eggs are disjoint".into(),
            });
        }
    }
    Ok(())
}

fn out_eggcut(s: &Scramble<'_>, out: &Output) -> CliResult {
    let w = egg_cut_witness(s)?;
    let report = EggCutReport {
        egg_cut_number: w.map_or(ExtendedCount::Infinite, |w| ExtendedCount::Finite(w.size)),
        eggs: w.map(|w| (set_vec(w.first), set_vec(w.second))),
    };
    out.emit(&report, || match w {
        Some(w) => format!("{}\neggs: {} and {}", w.size, w.first, w.second),
        None => "inf".into(),
    });
    Ok(())
}

fn order_report(s: &Scramble<'_>, limits: &LimitArgs) -> CliResult<OrderReport> {
    let h = hitting_number_with(s, limits.limits(), limits.progress())?;
    let e = egg_cut_witness(s)?.map_or(ExtendedCount::Infinite, |w| ExtendedCount::Finite(w.size));
    Ok(OrderReport {
        eggs: s.len(),
        hitting_number: h.size,
        egg_cut_number: e,
        order: ExtendedCount::Finite(h.size as u64).min(e),
    })
}

fn order_text(r: &OrderReport) -> String {
    format!(
        "eggs: {}\nhitting number: {}\negg-cut number: {}\norder: {}",
        r.eggs, r.hitting_number, r.egg_cut_number, r.order
    )
}

fn gonality_command(cmd: GonalityCommand, out: &Output) -> CliResult<u8> {
    match cmd {
        GonalityCommand::Brute { file, max_degree } => {
            let g = load_connected(&file)?;
            let result = gonality_bruteforce(&g, max_degree)?;
            out.emit(&result, || match &result {
                GonalitySearch::Found { gonality, witness } => {
                    format!("{gonality}\nwitness: {witness}")
                }
                GonalitySearch::ExceedsMaxDegree { max_degree } => {
                    format!("gonality exceeds {max_degree}")
                }
            });
            if let GonalitySearch::ExceedsMaxDegree { .. } = result {
                return Ok(3);
            }
        }
        GonalityCommand::Check { file, divisor } => {
            let g = load_connected(&file)?;
            let d = load_divisor(&g, &divisor)?;
            let report = RankReport {
                degree: d.degree(),
                positive_rank: has_positive_rank(&g, &d)?,
                divisor: d,
            };
            out.emit(&report, || {
                let verdict = if report.positive_rank {
                    "positive rank"
                } else {
                    "rank below 1"
                };
                format!("{verdict} (degree {})", report.degree)
            });
        }
        GonalityCommand::Upper { file } => {
            let g = load_connected(&file)?;
            let bound = gonality_upper_by_separator(&g)?;
            debug_assert!(check_strong_separator(&g, bound.separator).is_ok_and(|r| r.valid));
            let report = UpperReport {
                bound: bound.bound,
                separator: set_vec(bound.separator),
                component_order: bound.component_order,
            };
            out.emit(&report, || {
                format!("{}\nseparator: {}", bound.bound, bound.separator)
            });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
