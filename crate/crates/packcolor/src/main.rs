use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use packcolor::coloring::ColoringFile;
use packcolor::harness::{scan, Filter, ScanConfig};
use packcolor::input::{open, single_graph, Graph6Lines};
use packcolor::report::{Format, ReportWriter};
use packcolor::Error;
use packcolor_core::density::mad_exact;
use packcolor_core::discharge::{apply_discharging, initial_charges, structural_audit};
use packcolor_core::enumerate::{enumerate_connected_subcubic, enumerate_up_to};
use packcolor_core::graph::{girth, subdivide};
use packcolor_core::graph6::write_graph6;
use packcolor_core::packing::{lift_subdivision, verify_coloring, PackingSpec};
use packcolor_core::reducibility::{
    build_lemma_configs, check_reducible, color_name, CheckMode, CheckOptions, Lemma, Verdict,
};
use packcolor_core::solver::{chi_p, solve, ChiOutcome, Restarts, SolveOptions, SolveOutcome, DEFAULT_BUDGET};
use packcolor_core::Graph;
use serde::Serialize;

const EXIT_DOMAIN: u8 = 1;
const EXIT_CONTRADICTION: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "packcolor", version, about = "Packing (1,1,2,2)-colorings of subcubic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Single-graph input: `--graph` or one graph6 line on standard input.
#[derive(clap::Args)]
struct GraphArg {
    /// Graph in graph6.
    #[arg(long)]
    graph: Option<String>,
}

impl GraphArg {
    fn load(&self) -> Result<Graph, Error> {
        single_graph(self.graph.as_deref(), io::stdin().lock())
    }
}

#[derive(clap::Args)]
struct BudgetArg {
    /// Solver decision budget.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Shuffle ties in the vertex order with this seed and restart with a
    /// doubling budget.
    #[arg(long)]
    seed: Option<u64>,
}

impl BudgetArg {
    fn options(&self) -> SolveOptions {
        SolveOptions {
            budget: self.budget,
            restarts: self.seed.map(|seed| Restarts { seed, first_run_budget: 100_000 }),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Pruned,
    Exhaustive,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Jsonl,
}

#[derive(Subcommand)]
enum Command {
    /// Find a packing coloring; prints it as JSON, or UNSAT.
    Color {
        #[arg(long, default_value = "1,1,2,2")]
        spec: PackingSpec,
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Check a coloring file against a graph.
    Verify {
        #[arg(long)]
        coloring: PathBuf,
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Packing chromatic number, searched up to --k-max.
    ChiP {
        #[arg(long, default_value_t = 8)]
        k_max: usize,
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Maximum average degree as p/q.
    Mad {
        #[command(flatten)]
        graph: GraphArg,
        /// Also print a densest vertex set.
        #[arg(long)]
        witness: bool,
    },
    /// Length of a shortest cycle, or `acyclic`.
    Girth {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// The subdivision D(G) in graph6: original vertices first, then one
    /// vertex per edge in sorted edge order.
    Subdivide {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Carry a coloring of G to D(G), labeled as by `subdivide`.
    Lift {
        #[arg(long)]
        coloring: PathBuf,
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Initial and final charges per vertex.
    Discharge {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// The four structural predicates with their violating vertices.
    Audit {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Run the reducibility checker over the lemma library.
    CheckLemmas {
        #[arg(long)]
        lemma: Option<Lemma>,
        #[arg(long)]
        json: bool,
        #[arg(long, value_enum, default_value = "pruned")]
        mode: ModeArg,
        /// Largest recolor set tried; default is every interior vertex.
        #[arg(long)]
        max_recolor: Option<usize>,
    },
    /// Connected subcubic graphs up to isomorphism, in graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Every order from 1 to n.
        #[arg(long)]
        up_to: bool,
    },
    /// Batch scan of graph6 input with filters and a report.
    Scan {
        /// graph6 file, one graph per line, or `-` for standard input.
        #[arg(long, conflicts_with = "enumerate")]
        input: Option<PathBuf>,
        /// Scan the built-in enumeration of all orders up to this one.
        #[arg(long)]
        enumerate: Option<usize>,
        /// subcubic, connected, mad-lt=p/q or girth-ge=g; repeatable.
        #[arg(long)]
        filter: Vec<Filter>,
        #[arg(long, default_value = "1,1,2,2")]
        spec: PackingSpec,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Add elapsed_ms to each row (makes reports nondeterministic).
        #[arg(long)]
        timings: bool,
        /// Report file; standard output by default.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct LemmaLine {
    lemma: &'static str,
    variant: usize,
    verdict: &'static str,
    scenarios: u64,
    exempt: u64,
    max_repair: usize,
    mode: String,
    elapsed_ms: u64,
    /// Color names by local vertex, `null` on deleted vertices.
    counterexample: Option<Vec<Option<&'static str>>>,
}

fn stdout_err(source: io::Error) -> Error {
    Error::Io { path: "-".into(), source }
}

fn run(command: Command) -> Result<u8, Error> {
    let mut out = BufWriter::new(io::stdout().lock());
    macro_rules! say {
        ($($t:tt)*) => { writeln!(out, $($t)*).map_err(stdout_err)? };
    }
    let code = match command {
        Command::Color { spec, graph, budget } => {
            let g = graph.load()?;
            match solve(&g, &spec, &budget.options()).map_err(Error::domain)?.outcome {
                SolveOutcome::Colored(c) => {
                    say!("{}", ColoringFile::new(&spec, &c).to_json());
                    0
                }
                SolveOutcome::Unsatisfiable => {
                    say!("UNSAT");
                    0
                }
                SolveOutcome::BudgetExceeded => {
                    say!("BUDGET");
                    EXIT_BUDGET
                }
            }
        }
        Command::Verify { coloring, graph } => {
            let g = graph.load()?;
            let (spec, c) = read_coloring(&coloring)?.decode()?;
            let violations = verify_coloring(&g, &spec, &c).map_err(Error::domain)?;
            if violations.is_empty() {
                say!("OK");
                0
            } else {
                say!("INVALID");
                for v in violations {
                    say!("class {}: vertices {} and {} at distance {}", v.class + 1, v.u, v.v, v.distance);
                }
                EXIT_DOMAIN
            }
        }
        Command::ChiP { k_max, graph, budget } => {
            let g = graph.load()?;
            match chi_p(&g, k_max, &budget.options()).map_err(Error::domain)? {
                ChiOutcome::Exact { k, coloring } => {
                    say!("{k}");
                    say!("{}", ColoringFile::new(&PackingSpec::increasing(k).expect("k >= 1"), &coloring).to_json());
                    0
                }
                ChiOutcome::ExceedsBudget => {
                    say!(">{k_max}");
                    0
                }
                ChiOutcome::SolverBudget { k } => {
                    say!("BUDGET at k={k}");
                    EXIT_BUDGET
                }
            }
        }
        Command::Mad { graph, witness } => {
            let m = mad_exact(&graph.load()?).map_err(Error::domain)?;
            say!("{}", m.value);
            if witness {
                let set: Vec<String> = m.witness.iter().map(ToString::to_string).collect();
                say!("witness: {}", set.join(" "));
            }
            0
        }
        Command::Girth { graph } => {
            say!("{}", girth(&graph.load()?));
            0
        }
        Command::Subdivide { graph } => {
            say!("{}", write_graph6(&subdivide(&graph.load()?).graph));
            0
        }
        Command::Lift { coloring, graph } => {
            let g = graph.load()?;
            let (spec, c) = read_coloring(&coloring)?.decode()?;
            let lift = lift_subdivision(&g, &spec, &c).map_err(Error::domain)?;
            say!("{}", ColoringFile::new(&lift.spec, &lift.coloring).to_json());
            0
        }
        Command::Discharge { graph } => {
            let g = graph.load()?;
            let initial = initial_charges(&g);
            let fin = apply_discharging(&g, &initial).map_err(Error::domain)?;
            say!("vertex degree initial final");
            for v in g.vertices() {
                say!("{v} {} {} {}", g.degree(v), initial.charges[v], fin.charges[v]);
            }
            for t in &fin.transfers {
                say!("{:?} {} -> {} {}", t.rule, t.from, t.to, t.amount);
            }
            say!("total initial {}", initial.total());
            say!("total final {}", fin.total());
            0
        }
        Command::Audit { graph } => {
            let r = structural_audit(&graph.load()?).map_err(Error::domain)?;
            let status = |ok: bool, detail: String| if ok { "ok".to_string() } else { format!("FAIL {detail}") };
            let list = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            say!("min_degree {}", status(r.min_degree_ok(), list(&r.low_degree)));
            let pairs: Vec<String> = r.adjacent_twos.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            say!("no_adjacent_2 {}", status(r.no_adjacent_2_ok(), pairs.join(",")));
            let crowded: Vec<String> = r.crowded_threes.iter().map(|(v, w)| format!("{v}:[{}]", list(w))).collect();
            say!("two_neighbor {}", status(r.two_neighbor_ok(), crowded.join(" ")));
            let lonely: Vec<String> = r.lonely_twos.iter().map(|(v, w)| format!("{v}:[{}]", list(w))).collect();
            say!("special_in_n2 {}", status(r.special_in_n2_ok(), lonely.join(" ")));
            0
        }
        Command::CheckLemmas { lemma, json, mode, max_recolor } => {
            let mode = match mode {
                ModeArg::Pruned => CheckMode::Pruned,
                ModeArg::Exhaustive => CheckMode::Exhaustive,
            };
            let options = CheckOptions { mode, max_recolor, ..CheckOptions::default() };
            let lemmas: Vec<Lemma> = lemma.map_or(Lemma::ALL.to_vec(), |l| vec![l]);
            let (mut total, mut failed) = (0, 0);
            for l in lemmas {
                for c in build_lemma_configs(l) {
                    let start = Instant::now();
                    let r = check_reducible(&c, &options).map_err(Error::domain)?;
                    let elapsed = start.elapsed();
                    total += 1;
                    let counterexample = match &r.verdict {
                        Verdict::Reducible => None,
                        Verdict::Counterexample(s) => {
                            failed += 1;
                            Some(s.colors.iter().map(|x| x.map(color_name)).collect::<Vec<_>>())
                        }
                    };
                    let verdict = if counterexample.is_none() { "reducible" } else { "counterexample" };
                    if json {
                        let line = LemmaLine {
                            lemma: l.name(),
                            variant: c.variant,
                            verdict,
                            scenarios: r.scenarios,
                            exempt: r.exempt,
                            max_repair: r.max_repair,
                            mode: mode.to_string(),
                            elapsed_ms: elapsed.as_millis() as u64,
                            counterexample,
                        };
                        say!("{}", serde_json::to_string(&line).expect("plain data serializes"));
                    } else {
                        say!(
                            "{} {verdict} scenarios={} exempt={} max_repair={} time={:.3}ms",
                            c.name,
                            r.scenarios,
                            r.exempt,
                            r.max_repair,
                            elapsed.as_secs_f64() * 1000.0
                        );
                        if let Some(ce) = counterexample {
                            let labelled: Vec<String> = c
                                .labels
                                .iter()
                                .zip(&ce)
                                .filter_map(|(name, col)| col.map(|col| format!("{name}={col}")))
                                .collect();
                            say!("  counterexample: {}", labelled.join(" "));
                            say!("  configuration: {}", c.describe());
                        }
                    }
                }
            }
            if !json {
                say!("{} of {total} configurations reducible", total - failed);
            }
            if failed > 0 {
                EXIT_CONTRADICTION
            } else {
                0
            }
        }
        Command::Enumerate { n, up_to } => {
            let graphs: Vec<Graph> = if up_to {
                enumerate_up_to(n).map_err(Error::domain)?
            } else {
                enumerate_connected_subcubic(n).map_err(Error::domain)?.collect()
            };
            for g in &graphs {
                say!("{}", write_graph6(g));
            }
            0
        }
        Command::Scan { input, enumerate, filter, spec, format, workers, budget, timings, output } => {
            let config = ScanConfig { filters: filter, spec: spec.clone(), budget, workers, timings };
            let source: Box<dyn Iterator<Item = Result<(usize, Graph), Error>>> = match (input, enumerate) {
                (_, Some(n)) => Box::new(enumerate_up_to(n).map_err(Error::domain)?.into_iter().enumerate().map(|(i, g)| Ok((i + 1, g)))),
                (Some(path), None) => Box::new(Graph6Lines::new(open(&path)?, path)),
                (None, None) => Box::new(Graph6Lines::new(open("-".as_ref())?, "-")),
            };
            let format = match format {
                FormatArg::Csv => Format::Csv,
                FormatArg::Jsonl => Format::Jsonl,
            };
            let sink: Box<dyn Write> = match &output {
                Some(path) => Box::new(BufWriter::new(
                    fs::File::create(path).map_err(|source| Error::Io { path: path.clone(), source })?,
                )),
                None => Box::new(&mut out),
            };
            let mut writer = ReportWriter::new(sink, format, &spec);
            let check = scan(source, &config, |row| writer.write(row))?;
            writer.finish()?.flush().map_err(stdout_err)?;
            eprintln!(
                "rows={} colorable={} uncolorable={} budget={} contradictions={} failed_checks={}",
                check.rows,
                check.colorable,
                check.uncolorable,
                check.budget,
                check.contradictions.len(),
                check.failures.len()
            );
            for g in &check.contradictions {
                eprintln!("contradiction: {g}");
            }
            for (what, g) in &check.failures {
                eprintln!("failed check ({what}): {g}");
            }
            check.exit_code() as u8
        }
    };
    out.flush().map_err(stdout_err)?;
    Ok(code)
}

fn read_coloring(path: &PathBuf) -> Result<ColoringFile, Error> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.clone(), source })?;
    ColoringFile::from_json(&text)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_DOMAIN)
        }
    }
}
