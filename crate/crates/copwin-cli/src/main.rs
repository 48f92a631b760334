//! `copwin` — command-line front end for the pursuit-game solver.
//!
//! Subcommands: `decide` (does a cop team win?), `copnumber` (least winning
//! team size), `trace` (replay best play), `gen` (emit a graph), `dump`
//! (inspect a binary solution table). Vertices are 1-based in all input and
//! output. Set `COPWIN_LOG=info` (or `debug`) for progress logging.

mod reports;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use copwin_core::dump::{read_dump, write_dump};
use copwin_core::generate::{generate, Family};
use copwin_core::parse::{parse_dimacs, parse_edge_list};
use copwin_core::solver::{decide, solve, trace, SolveOptions};
use copwin_core::{Error, Graph, MoveRule, Result, RuleKind, TransitionSystem};

use reports::{CopnumberView, DecideReport, DumpView, TraceView};

#[derive(Parser)]
#[command(
    name = "copwin",
    version,
    about = "Pursuit games on graphs: decide who wins, count cops, replay optimal play"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a team of cops can always catch the robber
    Decide(DecideArgs),
    /// Find the least team size that catches the robber
    Copnumber(CopnumberArgs),
    /// Play one game out with best play on both sides
    Trace(TraceArgs),
    /// Generate a graph and print it
    Gen(GenArgs),
    /// Inspect and validate a binary solution dump
    Dump(DumpArgs),
}

/// Exactly one graph source per run.
#[derive(Args)]
#[group(id = "source", required = true, multiple = false)]
struct SourceArgs {
    /// Read the graph from FILE
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Generate the graph: path:N, cycle:N, complete:N, star:N, grid:RxC,
    /// petersen, random_gnp:N,P
    #[arg(long, value_name = "KIND[:PARAMS]")]
    gen: Option<String>,
}

#[derive(Args)]
struct InputFlags {
    #[command(flatten)]
    source: SourceArgs,
    /// Format of --graph files
    #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
    format: GraphFormat,
    /// Seed for randomized generators (random_gnp requires one)
    #[arg(long, value_name = "N")]
    seed: Option<u64>,
}

#[derive(Args)]
struct SolveFlags {
    /// Move rule for the pursuers
    #[arg(long, value_enum, default_value_t = RuleArg::Classic)]
    rule: RuleArg,
    /// Refuse to solve if the game has more states than this
    #[arg(long, value_name = "N", default_value_t = 1 << 31)]
    max_states: u64,
}

#[derive(Args)]
struct ViewFlags {
    /// Report format
    #[arg(long, value_enum, default_value_t = OutMode::Human)]
    out: OutMode,
}

#[derive(Args)]
struct DecideArgs {
    #[command(flatten)]
    input: InputFlags,
    /// Number of cops
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u64).range(1..))]
    cops: u64,
    #[command(flatten)]
    solve: SolveFlags,
    #[command(flatten)]
    view: ViewFlags,
    /// Also write the full solution table to FILE (binary CWIN1 format)
    #[arg(long, value_name = "FILE")]
    dump: Option<PathBuf>,
}

#[derive(Args)]
struct CopnumberArgs {
    #[command(flatten)]
    input: InputFlags,
    /// Stop the search after this team size
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u64).range(1..))]
    max_k: Option<u64>,
    #[command(flatten)]
    solve: SolveFlags,
    #[command(flatten)]
    view: ViewFlags,
}

#[derive(Args)]
struct TraceArgs {
    #[command(flatten)]
    input: InputFlags,
    /// Number of cops
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u64).range(1..))]
    cops: u64,
    /// Starting cop vertices, comma-separated and 1-based (default: best)
    #[arg(long, value_name = "V1,V2,...")]
    placement: Option<String>,
    /// Starting robber vertex, 1-based (default: its best reply)
    #[arg(long, value_name = "V")]
    robber: Option<u64>,
    /// Stop an unresolved game after this many piece-moves
    #[arg(long, value_name = "N", default_value_t = 10_000)]
    max_steps: u64,
    #[command(flatten)]
    solve: SolveFlags,
    #[command(flatten)]
    view: ViewFlags,
}

#[derive(Args)]
struct GenArgs {
    /// Family to generate: path:N, cycle:N, complete:N, star:N, grid:RxC,
    /// petersen, random_gnp:N,P
    #[arg(long, value_name = "KIND[:PARAMS]")]
    gen: String,
    /// Seed for randomized generators (random_gnp requires one)
    #[arg(long, value_name = "N")]
    seed: Option<u64>,
    /// Output format
    #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
    format: GraphFormat,
}

#[derive(Args)]
struct DumpArgs {
    /// Dump file to inspect
    #[arg(value_name = "FILE")]
    file: PathBuf,
    #[command(flatten)]
    view: ViewFlags,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Dimacs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RuleArg {
    Classic,
    Zombie,
}

impl RuleArg {
    fn kind(self) -> RuleKind {
        match self {
            RuleArg::Classic => RuleKind::Classic,
            RuleArg::Zombie => RuleKind::Zombie,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutMode {
    Json,
    Tsv,
    Human,
}

/// Die quietly when a downstream reader closes the pipe (`copwin gen | head`),
/// like other line-oriented tools, instead of panicking on EPIPE.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() {
    reset_sigpipe();
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("COPWIN_LOG", "error"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse(); // usage errors exit with code 2 here
    match dispatch(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}

/// 2 = bad arguments, 3 = resource cap, 4 = I/O, parse, or dump-file trouble.
fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) => 2,
        Error::ResourceLimit { .. } => 3,
        Error::Parse { .. } | Error::Dump(_) | Error::Io(_) => 4,
    }
}

fn dispatch(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Decide(a) => run_decide(a),
        Command::Copnumber(a) => run_copnumber(a),
        Command::Trace(a) => run_trace(a),
        Command::Gen(a) => run_gen(a),
        Command::Dump(a) => run_dump(a),
    }
}

struct Loaded {
    graph: Graph,
    label: String,
}

fn load_graph(input: &InputFlags) -> Result<Loaded> {
    if let Some(path) = &input.source.graph {
        let text = std::fs::read_to_string(path)?;
        let parsed = match input.format {
            GraphFormat::Edgelist => parse_edge_list(&text),
            GraphFormat::Dimacs => parse_dimacs(&text),
        };
        let graph = parsed.map_err(|e| match e {
            Error::Parse { line, msg } => Error::Parse {
                line,
                msg: format!("{}: {msg}", path.display()),
            },
            other => other,
        })?;
        Ok(Loaded {
            graph,
            label: path.display().to_string(),
        })
    } else {
        let text = input.source.gen.as_ref().expect("clap enforces one source");
        let family: Family = text.parse()?;
        let graph = generate(family, input.seed)?;
        Ok(Loaded {
            graph,
            label: text.clone(),
        })
    }
}

/// Builds the move rule, timing the preparation (the zombie rule computes a
/// full distance table up front; that cost is reported on its own).
fn prepare_rule(kind: RuleKind, g: &Graph) -> (MoveRule, Duration) {
    let t0 = Instant::now();
    let rule = MoveRule::from_kind(kind, g);
    let prep = t0.elapsed();
    if kind == RuleKind::Zombie {
        log::info!("distance table for the zombie rule built in {prep:?}");
    }
    (rule, prep)
}

fn run_decide(a: DecideArgs) -> Result<i32> {
    let loaded = load_graph(&a.input)?;
    let g = loaded.graph;
    let k = a.cops as usize;
    let opts = SolveOptions {
        max_states: a.solve.max_states,
    };
    let (rule, prep_wall) = prepare_rule(a.solve.rule.kind(), &g);

    let t0 = Instant::now();
    // The full-cover shortcut (k >= n) skips the solve but produces no
    // table, so a requested dump forces the long way.
    let (copwin, witness, result) = if a.dump.is_some() {
        let ts = TransitionSystem::new(g.clone(), k, rule)?;
        let r = solve(ts, &opts)?;
        let w = r.winning_placement();
        (w.is_some(), w, Some(r))
    } else {
        let d = decide(&g, k, rule, &opts)?;
        (d.copwin, d.witness, d.result)
    };
    let wall = t0.elapsed();

    if let Some(path) = &a.dump {
        let r = result.as_ref().expect("a dump request always runs the solve");
        let mut buf = Vec::new();
        write_dump(r, &mut buf)?;
        std::fs::write(path, buf)?;
        log::info!("solution table written to {}", path.display());
    }

    let report = DecideReport::build(
        &g,
        &loaded.label,
        k,
        a.solve.rule.kind(),
        copwin,
        witness,
        result.as_ref(),
        wall,
        prep_wall,
    );
    reports::print_decide(&report, a.view.out);
    Ok(if copwin { 0 } else { 1 })
}

fn run_copnumber(a: CopnumberArgs) -> Result<i32> {
    use copwin_core::copnumber::{cop_number, cop_number_by_components};

    let loaded = load_graph(&a.input)?;
    let g = loaded.graph;
    let opts = SolveOptions {
        max_states: a.solve.max_states,
    };
    let kind = a.solve.rule.kind();

    let t0 = Instant::now();
    let report = match a.max_k {
        // An explicit bound runs the plain whole-graph scan it applies to.
        Some(k) => cop_number(&g, kind, Some(k as usize), &opts)?,
        None => cop_number_by_components(&g, kind, &opts)?,
    };
    let wall = t0.elapsed();

    let view = CopnumberView {
        n: g.n(),
        m: g.edges().len(),
        rule: kind,
        source: loaded.label,
        report,
        wall,
    };
    reports::print_copnumber(&view, a.view.out);
    Ok(if view.report.cop_number.is_some() { 0 } else { 3 })
}

fn run_trace(a: TraceArgs) -> Result<i32> {
    let loaded = load_graph(&a.input)?;
    let g = loaded.graph;
    let k = a.cops as usize;
    let opts = SolveOptions {
        max_states: a.solve.max_states,
    };
    let (rule, prep_wall) = prepare_rule(a.solve.rule.kind(), &g);

    let placement = a.placement.as_deref().map(parse_vertex_list).transpose()?;
    let robber = a.robber.map(|v| to_zero_based(v, "--robber")).transpose()?;

    let t0 = Instant::now();
    let rec = trace(
        &g,
        k,
        rule,
        placement.as_deref(),
        robber,
        a.max_steps as usize,
        &opts,
    )?;
    let wall = t0.elapsed();

    let view = TraceView {
        n: g.n(),
        m: g.edges().len(),
        k,
        rule: a.solve.rule.kind(),
        source: loaded.label,
        rec,
        wall,
        prep_wall,
    };
    reports::print_trace(&view, a.view.out);
    Ok(match view.rec.outcome {
        copwin_core::solver::TraceOutcome::Captured => 0,
        copwin_core::solver::TraceOutcome::Escaped => 1,
    })
}

fn run_gen(a: GenArgs) -> Result<i32> {
    let family: Family = a.gen.parse()?;
    let g = generate(family, a.seed)?;
    match a.format {
        GraphFormat::Edgelist => print!("{}", g.to_edge_list()),
        GraphFormat::Dimacs => print!("{}", g.to_dimacs()),
    }
    Ok(0)
}

fn run_dump(a: DumpArgs) -> Result<i32> {
    let bytes = std::fs::read(&a.file)?;
    let dump = read_dump(&mut bytes.as_slice())?;
    let view = DumpView {
        path: a.file.display().to_string(),
        dump,
    };
    reports::print_dump(&view, a.view.out);
    Ok(0)
}

/// "3,1,4" (1-based) -> [2, 0, 3].
fn parse_vertex_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|tok| {
            let v: u64 = tok.trim().parse().map_err(|_| {
                Error::InvalidArgument(format!("'{tok}' is not a vertex number"))
            })?;
            to_zero_based(v, "--placement")
        })
        .collect()
}

fn to_zero_based(v: u64, what: &str) -> Result<usize> {
    if v == 0 {
        return Err(Error::InvalidArgument(format!(
            "{what}: vertices are numbered from 1"
        )));
    }
    Ok(v as usize - 1)
}
