mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use pushlab::bounds::{check_bound_chain, eval_bound, degree_bounds};
use pushlab::corpus::{run_corpus, CorpusKind};
use pushlab::hom::{chi_o_with, chi_p_with, exists_pushable_hom, find_hom, ChiWitness, Strategy};
use pushlab::io::resolve_graph;
use pushlab::mad::{densest_subgraph, mad, set_vertices};
use pushlab::reducibility::{search_six_vertex_targets, target_suite};
use pushlab::suites::{run_suite, Suite};
use pushlab::tournament::{canonical_code, enumerate_tournaments, paley};
use pushlab::{Error, Exec, OrientedGraph};

use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "pushlab", version, about = "Oriented and pushable colouring toolkit")]
struct Cli {
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized corpora.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Allow long-running searches.
    #[arg(long, global = true)]
    long: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ChiKind {
    O,
    P,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum StrategyArg {
    Naive,
    #[default]
    AntiTwin,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Naive => Strategy::Naive,
            StrategyArg::AntiTwin => Strategy::AntiTwin,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Oriented (o) or pushable (p) chromatic number with its witness.
    Chi {
        kind: ChiKind,
        graph: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::AntiTwin)]
        strategy: StrategyArg,
    },
    /// Homomorphism from G to H.
    Hom { g: String, h: String },
    /// Pushable homomorphism from G to H.
    Pushhom {
        g: String,
        h: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::AntiTwin)]
        strategy: StrategyArg,
    },
    /// Run a verification suite: paley, matrices, types, t3, t4, k4, mad-configs or all.
    Verify { suite: String },
    /// Run the reducibility suite against every tournament of order 6.
    SearchSix,
    /// Randomized property corpus.
    Corpus {
        kind: String,
        count: usize,
        /// Overrides `--seed`.
        seed: Option<u64>,
    },
    /// Table of the probabilistic bound for t in FROM..=TO.
    Bounds {
        from: u64,
        to: u64,
        /// Also print the chromatic number bounds for this maximum degree.
        #[arg(long)]
        delta: Option<u64>,
    },
    /// Canonical codes of all tournaments of order N.
    Enumerate { n: usize },
    /// Exact maximum average degree.
    Mad { graph: String },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn exec_for(jobs: Option<usize>) -> Result<Exec, Failure> {
    match jobs {
        Some(0) => Err(Failure::Usage("--jobs must be at least 1".into())),
        Some(1) => Ok(Exec::Sequential),
        #[cfg(feature = "parallel")]
        Some(n) => {
            // Only fails if a pool already exists, which cannot happen here.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            Ok(Exec::Parallel)
        }
        #[cfg(not(feature = "parallel"))]
        Some(_) => Ok(Exec::Sequential),
        None => Ok(Exec::default()),
    }
}

fn map_fields(r: &mut Report, map: &[usize]) {
    for (v, x) in map.iter().enumerate() {
        r.field("map", format!("{v}->{x}"));
    }
}

fn arc_line(g: &OrientedGraph) -> String {
    g.arcs()
        .iter()
        .map(|(u, v)| format!("{u}>{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn chi_fields(r: &mut Report, w: &ChiWitness) {
    r.field("value", w.value);
    match w.class_index {
        Some(i) => r.field("target-class", format!("{} of order {}", i, w.value)),
        None => r.field("target-class", "completion of the input"),
    };
    r.field("target-code", canonical_code(&w.target));
    r.field("target-arcs", arc_line(w.target.graph()));
    r.field("pushset", w.hom.push);
    map_fields(r, &w.hom.map);
}

fn run(cli: &Cli, r: &mut Report) -> Result<(), Failure> {
    let exec = exec_for(cli.jobs)?;
    match &cli.command {
        Command::Chi { kind, graph, strategy } => {
            let g = resolve_graph(graph)?;
            r.field("input", graph);
            let w = match kind {
                ChiKind::O => chi_o_with(&g, exec)?,
                ChiKind::P => chi_p_with(&g, exec, (*strategy).into())?,
            };
            r.field(
                "kind",
                if matches!(kind, ChiKind::O) {
                    "oriented"
                } else {
                    "pushable"
                },
            );
            chi_fields(r, &w);
        }
        Command::Hom { g, h } => {
            let (gg, hh) = (resolve_graph(g)?, resolve_graph(h)?);
            r.field("input", format!("{g} {h}"));
            match find_hom(&gg, &hh) {
                Some(m) => {
                    r.field("exists", "yes");
                    map_fields(r, &m);
                }
                None => {
                    r.field("exists", "no");
                }
            }
        }
        Command::Pushhom { g, h, strategy } => {
            let (gg, hh) = (resolve_graph(g)?, resolve_graph(h)?);
            r.field("input", format!("{g} {h}"));
            r.field("strategy", Strategy::from(*strategy));
            match exists_pushable_hom(&gg, &hh, (*strategy).into())? {
                Some(w) => {
                    r.field("exists", "yes");
                    r.field("pushset", w.push);
                    map_fields(r, &w.map);
                }
                None => {
                    r.field("exists", "no");
                }
            }
        }
        Command::Verify { suite } => {
            let s: Suite = suite.parse()?;
            r.field("suite", s);
            r.checks = run_suite(s, cli.seed, exec)?;
            if !r.passed() {
                return Err(Failure::Verification);
            }
        }
        Command::SearchSix => {
            let outcomes = search_six_vertex_targets(cli.long, exec)?;
            r.field("tournaments", outcomes.len());
            for o in &outcomes {
                r.field(
                    "tournament",
                    format!(
                        "{} code {} first failure {}",
                        o.index,
                        canonical_code(&o.target),
                        o.first_failure.as_deref().unwrap_or("none")
                    ),
                );
            }
            let passing = outcomes.iter().filter(|o| o.first_failure.is_none()).count();
            r.field("all-pass", passing);
            let pal = target_suite(&paley(7)?, exec)?;
            r.field("pal7", format!("first failure {}", pal.as_deref().unwrap_or("none")));
        }
        Command::Corpus { kind, count, seed } => {
            let k: CorpusKind = kind.parse()?;
            let seed = seed.unwrap_or(cli.seed);
            let rep = run_corpus(k, *count, seed, exec)?;
            r.field("kind", k).field("count", rep.count).field("seed", seed);
            r.field("violations", rep.violations.len());
            for v in &rep.violations {
                r.field("violation", format!("instance {}: {}", v.index, v.detail));
                r.field("dump", v.dump.trim_end().replace('\n', "; "));
            }
            if !rep.ok() {
                return Err(Failure::Verification);
            }
        }
        Command::Bounds { from, to, delta } => {
            if from > to {
                return Err(Failure::Usage(format!("empty range {from}..={to}")));
            }
            for t in *from..=*to {
                let b = eval_bound(t)?;
                let chain = if (5..=20).contains(&t) {
                    if check_bound_chain(t)?.holds() {
                        "holds"
                    } else {
                        "fails"
                    }
                } else {
                    "n/a"
                };
                r.field(
                    "t",
                    format!(
                        "{t} c {} log-bound {:.6} feasible {} margin {} chain {chain}",
                        b.order_c,
                        b.log_bad_event_bound,
                        b.feasible,
                        if b.margin_ok { "ok" } else { "tight" }
                    ),
                );
            }
            if let Some(d) = delta {
                let tb = degree_bounds(*d)?;
                let note = if tb.lower_rounded { " (rounded up)" } else { "" };
                r.field("delta", d);
                r.field("chi-p", format!("{}{note} ..= {}", tb.chi_p_lower, tb.chi_p_upper));
                r.field("chi-o", format!("{}{note} ..= {}", tb.chi_o_lower, tb.chi_o_upper));
            }
        }
        Command::Enumerate { n } => {
            let ts = enumerate_tournaments(*n, cli.long)?;
            r.field("order", n).field("classes", ts.len());
            for (i, t) in ts.iter().enumerate() {
                r.field("class", format!("{i} code {}", canonical_code(t)));
            }
        }
        Command::Mad { graph } => {
            let g = resolve_graph(graph)?;
            let (_, set) = densest_subgraph(&g);
            r.field("input", graph);
            r.field("mad", mad(&g));
            r.field("subgraph", format!("{:?}", set_vertices(set)));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = Report::default();
    report.field("command", std::env::args().skip(1).collect::<Vec<_>>().join(" "));
    let outcome = run(&cli, &mut report);
    let code = match outcome {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    };
    if code != 2 {
        print!("{}", report.render(cli.format));
    }
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    ExitCode::from(code)
}
