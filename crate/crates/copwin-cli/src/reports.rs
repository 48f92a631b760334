//! Report assembly and the three output renderers: `--out json` (stable,
//! machine-readable, byte-identical across runs), `--out tsv` (flat tables
//! for external tools), `--out human` (readable summary with timings).
//!
//! Vertices are printed 1-based everywhere; wall-clock times appear only in
//! human output and logs so that json and tsv stay deterministic.

use std::time::Duration;

use copwin_core::copnumber::CopNumberReport;
use copwin_core::dump::Dump;
use copwin_core::solver::{SolveResult, TraceOutcome, TraceRecord, ESCAPE};
use copwin_core::{Graph, RuleKind, Vertex};
use serde::Serialize;

use crate::OutMode;

fn one_based(w: &[Vertex]) -> Vec<usize> {
    w.iter().map(|&v| v + 1).collect()
}

fn join_one_based(w: &[Vertex], sep: &str) -> String {
    one_based(w)
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn opt_u32(v: Option<u32>) -> String {
    v.map(|t| t.to_string()).unwrap_or_else(|| "-".into())
}

fn piece_name(p: usize) -> String {
    if p == 0 {
        "robber".into()
    } else {
        format!("cop {p}")
    }
}

fn emit_json(value: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports always serialize")
    );
}

fn print_wall(solve: Duration, prep: Duration, rule: RuleKind) {
    if rule == RuleKind::Zombie {
        println!("wall time: {solve:?} (+ {prep:?} distance table)");
    } else {
        println!("wall time: {solve:?}");
    }
}

// ---------------------------------------------------------------- decide --

pub struct DecideReport {
    pub n: usize,
    pub m: usize,
    pub source: String,
    pub k: usize,
    pub rule: RuleKind,
    pub copwin: bool,
    /// 0-based; rendered 1-based.
    pub witness: Option<Vec<Vertex>>,
    /// Piece-moves to capture when the cops play the witness and the robber
    /// answers as well as possible. 0 for the every-vertex-covered shortcut,
    /// absent when the robber wins.
    pub capture_time: Option<u32>,
    pub states_total: usize,
    pub states_winning: usize,
    pub enqueue_count: usize,
    pub peak_queue: usize,
    pub solve_wall: Duration,
    pub prep_wall: Duration,
}

impl DecideReport {
    #[allow(clippy::too_many_arguments)]
    pub fn build(
        g: &Graph,
        source: &str,
        k: usize,
        rule: RuleKind,
        copwin: bool,
        witness: Option<Vec<Vertex>>,
        result: Option<&SolveResult>,
        solve_wall: Duration,
        prep_wall: Duration,
    ) -> DecideReport {
        let capture_time = match (copwin, result, &witness) {
            (true, Some(r), Some(w)) => {
                Some(r.placement_value(w).expect("witness placements are valid"))
            }
            (true, None, _) => Some(0), // cops on every vertex: caught at placement
            _ => None,
        };
        let stats = result.map(|r| r.stats());
        DecideReport {
            n: g.n(),
            m: g.edges().len(),
            source: source.to_string(),
            k,
            rule,
            copwin,
            witness,
            capture_time,
            states_total: stats.map_or(0, |s| s.states_total),
            states_winning: stats.map_or(0, |s| s.states_winning),
            enqueue_count: stats.map_or(0, |s| s.enqueue_count),
            peak_queue: stats.map_or(0, |s| s.peak_queue),
            solve_wall,
            prep_wall,
        }
    }
}

#[derive(Serialize)]
struct DecideJson {
    n: usize,
    k: usize,
    rule: String,
    copwin: bool,
    witness_placement: Option<Vec<usize>>,
    capture_time: Option<u32>,
    states_total: usize,
    enqueue_count: usize,
}

pub fn print_decide(r: &DecideReport, mode: OutMode) {
    match mode {
        OutMode::Json => emit_json(&DecideJson {
            n: r.n,
            k: r.k,
            rule: r.rule.to_string(),
            copwin: r.copwin,
            witness_placement: r.witness.as_deref().map(one_based),
            capture_time: r.capture_time,
            states_total: r.states_total,
            enqueue_count: r.enqueue_count,
        }),
        OutMode::Tsv => {
            println!("n\tk\trule\tcopwin\tcapture_time\tstates_total\tenqueue_count\twitness");
            println!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.n,
                r.k,
                r.rule,
                r.copwin,
                opt_u32(r.capture_time),
                r.states_total,
                r.enqueue_count,
                r.witness
                    .as_deref()
                    .map(|w| join_one_based(w, ","))
                    .unwrap_or_else(|| "-".into()),
            );
        }
        OutMode::Human => {
            println!("graph: {} vertices, {} edges ({})", r.n, r.m, r.source);
            println!("rule: {}, cops: {}", r.rule, r.k);
            if r.copwin {
                println!("result: cops win");
                if let Some(w) = &r.witness {
                    println!("witness placement: {}", join_one_based(w, " "));
                }
                if let Some(t) = r.capture_time {
                    println!("capture time against best play: {t} piece-moves");
                }
            } else {
                println!("result: robber escapes");
            }
            if r.states_total > 0 {
                println!(
                    "states: {} total, {} cop-winning; {} enqueued, peak queue {}",
                    r.states_total, r.states_winning, r.enqueue_count, r.peak_queue
                );
            } else {
                println!("states: none explored (a cop stands on every vertex)");
            }
            print_wall(r.solve_wall, r.prep_wall, r.rule);
        }
    }
}

// ------------------------------------------------------------- copnumber --

pub struct CopnumberView {
    pub n: usize,
    pub m: usize,
    pub rule: RuleKind,
    pub source: String,
    pub report: CopNumberReport,
    pub wall: Duration,
}

#[derive(Serialize)]
struct AttemptJson {
    k: usize,
    copwin: bool,
    states_total: usize,
}

#[derive(Serialize)]
struct CopnumberJson {
    n: usize,
    rule: String,
    cop_number: Option<usize>,
    witness_placement: Option<Vec<usize>>,
    attempts: Vec<AttemptJson>,
    inconclusive: Option<String>,
}

pub fn print_copnumber(v: &CopnumberView, mode: OutMode) {
    let r = &v.report;
    match mode {
        OutMode::Json => emit_json(&CopnumberJson {
            n: v.n,
            rule: v.rule.to_string(),
            cop_number: r.cop_number,
            witness_placement: r.witness.as_deref().map(one_based),
            attempts: r
                .attempts
                .iter()
                .map(|a| AttemptJson {
                    k: a.k,
                    copwin: a.copwin,
                    states_total: a.states_total,
                })
                .collect(),
            inconclusive: r.inconclusive.clone(),
        }),
        OutMode::Tsv => {
            println!("k\tcopwin\tstates_total");
            for a in &r.attempts {
                println!("{}\t{}\t{}", a.k, a.copwin, a.states_total);
            }
        }
        OutMode::Human => {
            println!("graph: {} vertices, {} edges ({})", v.n, v.m, v.source);
            println!("rule: {}", v.rule);
            for a in &r.attempts {
                let verdict = if a.copwin { "cops win" } else { "robber escapes" };
                println!(
                    "  k={}: {verdict} ({} states, {:?})",
                    a.k, a.states_total, a.wall
                );
            }
            match r.cop_number {
                Some(c) => println!("cop number: {c}"),
                None => println!("cop number: undetermined"),
            }
            if let Some(w) = &r.witness {
                println!("witness placement: {}", join_one_based(w, " "));
            }
            if let Some(why) = &r.inconclusive {
                println!("reason: {why}");
            }
            println!("wall time: {:?}", v.wall);
        }
    }
}

// ----------------------------------------------------------------- trace --

pub struct TraceView {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub rule: RuleKind,
    pub source: String,
    pub rec: TraceRecord,
    pub wall: Duration,
    pub prep_wall: Duration,
}

#[derive(Serialize)]
struct StepJson {
    step: usize,
    piece: usize,
    from: usize,
    to: usize,
}

#[derive(Serialize)]
struct TraceJson {
    n: usize,
    k: usize,
    rule: String,
    outcome: String,
    placement: Vec<usize>,
    robber_start: usize,
    initial_value: Option<u32>,
    steps: Vec<StepJson>,
}

pub fn print_trace(v: &TraceView, mode: OutMode) {
    let rec = &v.rec;
    let initial_value = (rec.initial_value != ESCAPE).then_some(rec.initial_value);
    match mode {
        OutMode::Json => emit_json(&TraceJson {
            n: v.n,
            k: v.k,
            rule: v.rule.to_string(),
            outcome: match rec.outcome {
                TraceOutcome::Captured => "captured".into(),
                TraceOutcome::Escaped => "escaped".into(),
            },
            placement: one_based(&rec.placement),
            robber_start: rec.robber_start + 1,
            initial_value,
            steps: rec
                .steps
                .iter()
                .enumerate()
                .map(|(i, s)| StepJson {
                    step: i + 1,
                    piece: s.piece,
                    from: s.from + 1,
                    to: s.to + 1,
                })
                .collect(),
        }),
        OutMode::Tsv => {
            println!("step\tpiece\tfrom\tto");
            for (i, s) in rec.steps.iter().enumerate() {
                println!("{}\t{}\t{}\t{}", i + 1, s.piece, s.from + 1, s.to + 1);
            }
        }
        OutMode::Human => {
            println!("graph: {} vertices, {} edges ({})", v.n, v.m, v.source);
            println!("rule: {}, cops: {}", v.rule, v.k);
            println!(
                "cops start at {}; robber starts at {}",
                join_one_based(&rec.placement, " "),
                rec.robber_start + 1
            );
            match initial_value {
                Some(t) => println!("forecast: capture within {t} piece-moves"),
                None => println!("forecast: the robber escapes"),
            }
            const SHOWN: usize = 40;
            for (i, s) in rec.steps.iter().take(SHOWN).enumerate() {
                println!(
                    "  {}. {}: {} -> {}",
                    i + 1,
                    piece_name(s.piece),
                    s.from + 1,
                    s.to + 1
                );
            }
            if rec.steps.len() > SHOWN {
                println!("  ... {} more piece-moves not shown", rec.steps.len() - SHOWN);
            }
            match rec.outcome {
                TraceOutcome::Captured => {
                    println!("outcome: captured after {} piece-moves", rec.steps.len());
                }
                TraceOutcome::Escaped => {
                    println!(
                        "outcome: robber still free after {} piece-moves",
                        rec.steps.len()
                    );
                }
            }
            print_wall(v.wall, v.prep_wall, v.rule);
        }
    }
}

// ------------------------------------------------------------------ dump --

pub struct DumpView {
    pub path: String,
    pub dump: Dump,
}

#[derive(Serialize)]
struct DumpJson {
    n: u32,
    k: u32,
    rule: String,
    state_count: u64,
    winning_states: u64,
    escape_states: u64,
    max_capture_time: Option<u32>,
}

pub fn print_dump(v: &DumpView, mode: OutMode) {
    let d = &v.dump;
    let winning = d.winning_count();
    let escape = d.state_count - winning;
    let max_capture = d
        .capture_time
        .iter()
        .copied()
        .filter(|&t| t != ESCAPE)
        .max();
    match mode {
        OutMode::Json => emit_json(&DumpJson {
            n: d.n,
            k: d.k,
            rule: d.rule.to_string(),
            state_count: d.state_count,
            winning_states: winning,
            escape_states: escape,
            max_capture_time: max_capture,
        }),
        OutMode::Tsv => {
            println!("field\tvalue");
            println!("n\t{}", d.n);
            println!("k\t{}", d.k);
            println!("rule\t{}", d.rule);
            println!("state_count\t{}", d.state_count);
            println!("winning_states\t{winning}");
            println!("escape_states\t{escape}");
            println!("max_capture_time\t{}", opt_u32(max_capture));
        }
        OutMode::Human => {
            println!("dump file: {} (valid)", v.path);
            println!("game: {} vertices, {} cops, {} rule", d.n, d.k, d.rule);
            println!("states: {} total = {winning} cop-winning + {escape} escaping", d.state_count);
            match max_capture {
                Some(t) => println!("longest capture: {t} piece-moves"),
                None => println!("longest capture: none (no cop-winning states)"),
            }
        }
    }
}
