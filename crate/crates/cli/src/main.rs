mod play;

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use domgame::corpus::{self, CorpusError};
use domgame::graph::family::{parse_graph_spec, SpecError};
use domgame::graph::Graph6Error;
use domgame::verify::{self, Report, VerifyError, DEFAULT_CHAINS};
use domgame::{Graph, Player, SolveError, Solver, Variant, VertexSet};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("input ended before the game was over")]
    InputEnded,
}

#[derive(Parser)]
#[command(name = "domgame", version, about = "Exact values of domination games on small graphs")]
struct Cli {
    /// Worker threads for corpus scans (default: one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Game length and optimal first moves for one graph.
    Value(ValueArgs),
    /// Run a claim suite over a corpus.
    Verify(VerifyArgs),
    /// Exhaustive scans over all trees up to a given order.
    Scan(ScanArgs),
    /// Write a corpus as newline-separated graph6.
    Corpus(CorpusArgs),
    /// Play against the solver on the terminal.
    Play(PlayArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph in graph6 format.
    #[arg(long)]
    graph6: Option<String>,
    /// Family spec: path:N, cycle:N, star:K, complete:N, leafy:N,
    /// ycorona:<g>, cartesian:<g>x<g>.
    #[arg(long)]
    family: Option<String>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph, CliError> {
        match (&self.graph6, &self.family) {
            (Some(s), _) => Ok(Graph::from_graph6(s)?),
            (_, Some(s)) => Ok(parse_graph_spec(s)?),
            _ => unreachable!("clap enforces one input"),
        }
    }
}

fn vertex_set(list: &[usize], g: &Graph) -> Result<VertexSet, CliError> {
    match list.iter().find(|&&v| v >= g.n()) {
        Some(v) => Err(CliError::Usage(format!(
            "pre-dominated vertex {v} out of range for {} vertices",
            g.n()
        ))),
        None => Ok(list.iter().copied().collect()),
    }
}

#[derive(Args)]
struct ValueArgs {
    #[command(flatten)]
    input: GraphInput,
    /// d, t, z, l or ll.
    #[arg(long, default_value = "d")]
    variant: Variant,
    #[arg(long, default_value = "dominator")]
    starter: Player,
    /// Comma-separated vertex indices.
    #[arg(long, value_delimiter = ',')]
    predominated: Vec<usize>,
    #[arg(long)]
    json: bool,
    /// Also print an optimal play.
    #[arg(long)]
    line: bool,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
struct ValueOutput {
    graph: String,
    variant: Variant,
    starter: Player,
    predominated: Vec<usize>,
    length: u32,
    optimal_first: Vec<usize>,
    states_visited: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    line: Option<Vec<(Player, usize)>>,
}

fn cmd_value(args: &ValueArgs) -> Result<ExitCode, CliError> {
    let g = args.input.load()?;
    let a = vertex_set(&args.predominated, &g)?;
    let mut solver = Solver::new(&g, args.variant);
    let r = solver.solve(a, args.starter)?;
    let line = if args.line {
        Some(solver.optimal_line(a, args.starter)?)
    } else {
        None
    };
    let out = ValueOutput {
        graph: g.to_graph6(),
        variant: args.variant,
        starter: args.starter,
        predominated: a.iter().collect(),
        length: r.length,
        optimal_first: r.optimal_first.iter().collect(),
        states_visited: r.states_visited,
        line,
    };
    if args.json {
        println!("{}", serde_json::to_string(&out)?);
    } else {
        println!("length: {}", out.length);
        println!("optimal first moves: {}", r.optimal_first);
        if let Some(line) = &out.line {
            let moves: Vec<String> = line.iter().map(|(p, v)| format!("{}{v}", p.initial())).collect();
            println!("optimal play: {}", moves.join(" "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Hierarchy,
    #[value(alias = "dual_gap")]
    DualGap,
    Parity,
    Llbound,
    #[value(alias = "classical_bounds")]
    ClassicalBounds,
    Continuation,
    Paths,
    Theta,
    #[value(alias = "special_families")]
    SpecialFamilies,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: Suite,
    /// Add every tree with 2..=N vertices.
    #[arg(long)]
    trees_up_to: Option<usize>,
    /// Add K seeded random connected graphs.
    #[arg(long, default_value_t = 0)]
    random: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest order of the random graphs.
    #[arg(long, default_value_t = 9)]
    random_max_n: usize,
    /// Add the graphs of a graph6 file.
    #[arg(long)]
    graph6_file: Option<PathBuf>,
    /// Chains per graph for the continuation suite.
    #[arg(long, default_value_t = DEFAULT_CHAINS)]
    samples: usize,
    /// Largest path order for the paths and theta suites.
    #[arg(long)]
    n_max: Option<usize>,
    /// Write the full JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write a CSV summary row here.
    #[arg(long)]
    csv: Option<PathBuf>,
}

impl VerifyArgs {
    fn corpus(&self) -> Result<Vec<Graph>, CliError> {
        let mut graphs = Vec::new();
        if let Some(n) = self.trees_up_to {
            graphs.extend(corpus::trees_up_to(n)?);
        }
        if self.random > 0 {
            graphs.extend(
                corpus::random_corpus(self.random, self.random_max_n, self.seed)
                    .map_err(|e| CliError::Usage(e.to_string()))?,
            );
        }
        if let Some(path) = &self.graph6_file {
            graphs.extend(corpus::read_graph6_lines(BufReader::new(File::open(path)?))?);
        }
        if let Some(g) = graphs.iter().find(|g| g.has_isolated()) {
            return Err(CliError::Usage(format!("{} has an isolated vertex", g.to_graph6())));
        }
        Ok(graphs)
    }
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut w = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    Ok(())
}

fn finish(report: &Report, csv: Option<&Path>) -> Result<ExitCode, CliError> {
    println!(
        "{}: {} (graphs {}, violations {}, witnesses {}, missing {})",
        report.suite,
        if report.passed() { "passed" } else { "FAILED" },
        report.graphs_examined,
        report.violations.len(),
        report.witnesses.len(),
        report.missing_witnesses.len()
    );
    for v in report.violations.iter().take(10) {
        println!("violation: {} {} {:?}", v.graph, v.claim, v.observed);
    }
    for m in &report.missing_witnesses {
        println!("missing: {m}");
    }
    for f in &report.flags {
        println!("flag: {f}");
    }
    for n in &report.notes {
        println!("note: {n}");
    }
    if let Some(path) = csv {
        let mut w = File::create(path)?;
        writeln!(w, "{}", Report::CSV_HEADER)?;
        writeln!(w, "{}", report.csv_row())?;
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, CliError> {
    let report = match args.suite {
        Suite::Paths | Suite::Theta => {
            let p = if matches!(args.suite, Suite::Paths) {
                verify::check_path_formulas(args.n_max.unwrap_or(15))?
            } else {
                verify::check_theta(args.n_max.unwrap_or(16))?
            };
            if let Some(path) = &args.out {
                write_json(path, &p)?;
            }
            p.report
        }
        Suite::SpecialFamilies => verify::check_special_families()?,
        suite => {
            let graphs = args.corpus()?;
            match suite {
                Suite::Hierarchy => verify::check_hierarchy_suite(&graphs)?,
                Suite::DualGap => verify::check_dual_gap_suite(&graphs)?,
                Suite::Parity => verify::check_parity_suite(&graphs)?,
                Suite::Llbound => verify::check_llbound_suite(&graphs)?,
                Suite::ClassicalBounds => verify::check_classical_bounds_suite(&graphs)?,
                Suite::Continuation => verify::check_continuation_suite(&graphs, args.samples, args.seed)?,
                _ => unreachable!(),
            }
        }
    };
    if let (Some(path), false) = (&args.out, matches!(args.suite, Suite::Paths | Suite::Theta)) {
        write_json(path, &report)?;
    }
    finish(&report, args.csv.as_deref())
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanKind {
    /// Trees with five pairwise distinct values.
    Distinct,
    /// The z < ll and 6/7 conjectures.
    Conjectures,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    kind: ScanKind,
    #[arg(long, default_value_t = 11)]
    n_max: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn cmd_scan(args: &ScanArgs) -> Result<ExitCode, CliError> {
    let report = match args.kind {
        ScanKind::Distinct => verify::scan_distinct_values(args.n_max)?,
        ScanKind::Conjectures => verify::scan_conjectures(args.n_max)?,
    };
    for w in &report.witnesses {
        println!("witness: {} {} {:?}", w.graph, w.kind, w.values);
    }
    if let Some(path) = &args.out {
        write_json(path, &report)?;
    }
    finish(&report, args.csv.as_deref())
}

#[derive(Args)]
struct CorpusArgs {
    #[command(subcommand)]
    kind: CorpusKind,
    /// Output file (default: standard output).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CorpusKind {
    /// All free trees on N vertices.
    Trees {
        n: usize,
        /// Every order from 2 to N instead.
        #[arg(long)]
        up_to: bool,
    },
    /// Seeded random connected graphs.
    Random {
        count: usize,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn cmd_corpus(args: &CorpusArgs) -> Result<ExitCode, CliError> {
    let graphs = match args.kind {
        CorpusKind::Trees { n, up_to: false } => corpus::enumerate_trees(n)?.collect(),
        CorpusKind::Trees { n, up_to: true } => corpus::trees_up_to(n)?,
        CorpusKind::Random { count, max_n, seed } => {
            corpus::random_corpus(count, max_n, seed).map_err(|e| CliError::Usage(e.to_string()))?
        }
    };
    match &args.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            corpus::write_graph6_lines(&mut w, &graphs)?;
            w.flush()?;
        }
        None => corpus::write_graph6_lines(&mut io::stdout().lock(), &graphs)?,
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Human {
    Dominator,
    Staller,
    /// Let the solver play both sides.
    None,
}

#[derive(Args)]
struct PlayArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, default_value = "d")]
    variant: Variant,
    #[arg(long, default_value = "dominator")]
    starter: Player,
    /// Which side you play.
    #[arg(long, value_enum, default_value = "dominator")]
    human: Human,
    #[arg(long, value_delimiter = ',')]
    predominated: Vec<usize>,
}

fn cmd_play(args: &PlayArgs) -> Result<ExitCode, CliError> {
    let g = args.input.load()?;
    let a = vertex_set(&args.predominated, &g)?;
    let human = match args.human {
        Human::Dominator => Some(Player::Dominator),
        Human::Staller => Some(Player::Staller),
        Human::None => None,
    };
    let stdin = io::stdin();
    play::run(&g, args.variant, args.starter, a, human, stdin.lock(), io::stdout().lock())?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    match &cli.command {
        Command::Value(a) => cmd_value(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Scan(a) => cmd_scan(a),
        Command::Corpus(a) => cmd_corpus(a),
        Command::Play(a) => cmd_play(a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
