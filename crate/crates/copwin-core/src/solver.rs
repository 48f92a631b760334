//! Retrograde analysis of the pursuit game.
//!
//! Working backward from every capture position, the solver labels each
//! state cop-winning or robber-winning and computes the exact number of
//! piece-moves to capture under optimal play by both sides, in one pass.
//!
//! The trick that keeps it linear in the transition count: each
//! robber-to-move state carries a countdown initialized to its number of
//! moves (1 + deg of the robber's vertex). When a winning state is dequeued,
//! cop-to-move predecessors become winning outright (the cop can choose that
//! move); robber-to-move predecessors just tick down, becoming winning only
//! when the countdown hits zero — every robber option leads to a cop win.
//! A FIFO queue makes dequeue values non-decreasing, so the first win found
//! for a cop state is its minimum and the last tick for a robber state is
//! its maximum: the recorded times are exact optimal values.

use std::collections::VecDeque;
use std::time::{Duration, Instant};

use bitvec::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::statespace::{MoveRule, State, StateIndex, TransitionSystem};

/// Capture time of robber-winning states: the robber is never caught.
pub const ESCAPE: u32 = u32::MAX;

/// Knobs for a solve run.
#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Refuse instances with more than this many states. The default,
    /// 2^31, needs roughly 10 GiB for the capture-time table; lower it on
    /// small machines.
    pub max_states: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_states: 1 << 31,
        }
    }
}

/// Counters from one solve run.
#[derive(Debug, Clone, Default)]
pub struct SolveStats {
    pub states_total: usize,
    /// States labelled cop-winning; always equals `enqueue_count`.
    pub states_winning: usize,
    /// Total enqueue operations; each state is enqueued at most once.
    pub enqueue_count: usize,
    pub peak_queue: usize,
    /// Predecessor edges examined while draining the queue.
    pub edge_work: u64,
    pub wall: Duration,
}

/// Full solution of one game: per-state win flags and capture times, the
/// final countdowns, and run statistics. Immutable once built.
#[derive(Debug, Clone)]
pub struct SolveResult {
    ts: TransitionSystem,
    copswin: BitVec<u8, Lsb0>,
    capture_time: Vec<u32>,
    counter: Vec<u32>,
    stats: SolveStats,
}

impl SolveResult {
    pub fn transition_system(&self) -> &TransitionSystem {
        &self.ts
    }

    /// Whether the cops win from state `i` (both sides playing optimally).
    pub fn copswin(&self, i: StateIndex) -> bool {
        self.copswin[i]
    }

    /// Optimal piece-moves to capture from state `i`, or [`ESCAPE`].
    pub fn capture_time(&self, i: StateIndex) -> u32 {
        self.capture_time[i]
    }

    /// All capture times, indexed by state.
    pub fn capture_times(&self) -> &[u32] {
        &self.capture_time
    }

    /// The win flags bit-packed least-significant-bit first; bit `i` is
    /// state `i`. Trailing bits of the last byte are zero. This is the
    /// byte-exact layout the dump format stores.
    pub fn copswin_bytes(&self) -> &[u8] {
        self.copswin.as_raw_slice()
    }

    /// Final countdown for the robber-to-move state with the given position
    /// tuple (state index divided by k+1). A state never labelled winning
    /// retains `1 + deg(robber) − (number of winning successors)`.
    pub fn final_counter(&self, pos_index: usize) -> u32 {
        self.counter[pos_index]
    }

    pub fn stats(&self) -> &SolveStats {
        &self.stats
    }

    /// The lexicographically least cop placement that wins against every
    /// robber start, if any: least (p_1, …, p_k) with every state
    /// (p_0, p_1, …, p_k; tag 0) cop-winning.
    pub fn winning_placement(&self) -> Option<Vec<Vertex>> {
        let n = self.ts.graph().n();
        let k = self.ts.k();
        let k1 = k + 1;
        let mut placement = vec![0usize; k];
        loop {
            // pos digits: p_0 (omitted here) is weight n^0, cop i is n^i
            let mut base = 0usize;
            let mut w = n;
            for &p in &placement {
                base += p * w;
                w *= n;
            }
            if (0..n).all(|p0| self.copswin[k1 * (base + p0)]) {
                return Some(placement);
            }
            // next placement in lexicographic order: last coordinate fastest
            let mut i = k;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                placement[i] += 1;
                if placement[i] < n {
                    break;
                }
                placement[i] = 0;
            }
        }
    }

    /// Capture time when the cops stand on `placement` and the robber picks
    /// its best starting vertex: the worst (largest) initial capture time
    /// over all robber replies, [`ESCAPE`] if any reply escapes.
    pub fn placement_value(&self, placement: &[Vertex]) -> Result<u32> {
        let n = self.ts.graph().n();
        let k = self.ts.k();
        if placement.len() != k {
            return Err(Error::InvalidArgument(format!(
                "placement has {} cops, the game has {k}",
                placement.len()
            )));
        }
        let mut base = 0usize;
        let mut w = n;
        for &p in placement {
            if p >= n {
                return Err(Error::InvalidArgument(format!(
                    "placement vertex {p} out of range for n = {n}"
                )));
            }
            base += p * w;
            w *= n;
        }
        let k1 = k + 1;
        Ok((0..n)
            .map(|p0| self.capture_time[k1 * (base + p0)])
            .max()
            .expect("games have at least one vertex"))
    }

    /// The cop move that captures fastest from `s`: the successor with the
    /// least capture time, smallest destination vertex on ties. `s` must be
    /// a cop-winning, non-capture state with a cop on turn.
    pub fn best_cop_move(&self, s: &State) -> Result<State> {
        if s.next_mover() == 0 {
            return Err(Error::InvalidArgument(
                "best_cop_move called on a robber-to-move state".into(),
            ));
        }
        if s.is_capture() {
            return Err(Error::InvalidArgument(
                "best_cop_move called on a capture state".into(),
            ));
        }
        if !self.copswin[self.ts.encode(s)?] {
            return Err(Error::InvalidArgument(
                "best_cop_move called on a state the cops cannot win".into(),
            ));
        }
        let mut best: Option<(u32, State)> = None;
        for succ in self.ts.enumerate_out(s) {
            let t = self.capture_time[self.ts.encode(&succ)?];
            if best.as_ref().is_none_or(|(bt, _)| t < *bt) {
                best = Some((t, succ));
            }
        }
        Ok(best.expect("a non-capture state always has successors").1)
    }

    /// The robber's best reply from `s`: an escaping successor (win flag 0)
    /// if one exists, otherwise the successor delaying capture longest;
    /// smallest destination vertex on ties. `s` must be a non-capture state
    /// with the robber on turn.
    pub fn best_robber_move(&self, s: &State) -> Result<State> {
        if s.next_mover() != 0 {
            return Err(Error::InvalidArgument(
                "best_robber_move called on a cop-to-move state".into(),
            ));
        }
        if s.is_capture() {
            return Err(Error::InvalidArgument(
                "best_robber_move called on a capture state".into(),
            ));
        }
        let mut best: Option<(u32, State)> = None;
        for succ in self.ts.enumerate_out(s) {
            let i = self.ts.encode(&succ)?;
            if !self.copswin[i] {
                return Ok(succ); // escape outright; least vertex first
            }
            let t = self.capture_time[i];
            if best.as_ref().is_none_or(|(bt, _)| t > *bt) {
                best = Some((t, succ));
            }
        }
        Ok(best.expect("a non-capture state always has successors").1)
    }
}

/// Solves the game on `ts` completely. See the module docs for the method;
/// the cost is O(states + transitions), each state enqueued at most once.
pub fn solve(ts: TransitionSystem, opts: &SolveOptions) -> Result<SolveResult> {
    let start = Instant::now();
    let sc = ts.state_count();
    if sc as u128 > opts.max_states as u128 {
        return Err(Error::ResourceLimit {
            states: sc as u128,
            cap: opts.max_states as u128,
        });
    }
    let n = ts.graph().n();
    let k1 = ts.k() + 1;
    let pc = ts.position_count();

    let mut copswin: BitVec<u8, Lsb0> = bitvec![u8, Lsb0; 0; sc];
    let mut capture_time = vec![ESCAPE; sc];
    let mut counter: Vec<u32> = Vec::with_capacity(pc);
    let mut queue: VecDeque<StateIndex> = VecDeque::new();
    let mut enqueue_count = 0usize;

    // Seed every capture position (any tag) with time 0, and give each
    // position tuple its robber-move countdown. One odometer pass over all
    // tuples; digits[0] is the robber.
    let mut digits = vec![0usize; k1];
    for pos in 0..pc {
        counter.push(1 + ts.graph().degree(digits[0]) as u32);
        if digits[1..].contains(&digits[0]) {
            for idx in k1 * pos..k1 * (pos + 1) {
                copswin.set(idx, true);
                capture_time[idx] = 0;
                queue.push_back(idx);
            }
            enqueue_count += k1;
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < n {
                break;
            }
            *d = 0;
        }
    }
    let mut peak_queue = queue.len();

    let mut scratch: Vec<Vertex> = Vec::new();
    let mut preds: Vec<StateIndex> = Vec::new();
    let mut edge_work = 0u64;

    while let Some(s_idx) = queue.pop_front() {
        let time_here = capture_time[s_idx];
        ts.in_indices_into(s_idx, &mut scratch, &mut preds);
        edge_work += preds.len() as u64;
        if s_idx % k1 != 0 {
            // A cop moved into this winning state, so each predecessor is
            // cop-to-move and can simply choose that move.
            for &q in &preds {
                if !copswin[q] {
                    copswin.set(q, true);
                    capture_time[q] = time_here + 1;
                    queue.push_back(q);
                    enqueue_count += 1;
                    peak_queue = peak_queue.max(queue.len());
                }
            }
        } else {
            // The robber moved into this winning state: tick the countdown
            // of each robber-to-move predecessor. Zero means every robber
            // option is a cop win.
            for &q in &preds {
                let c = &mut counter[q / k1];
                *c -= 1;
                if *c == 0 && !copswin[q] {
                    copswin.set(q, true);
                    capture_time[q] = time_here + 1;
                    queue.push_back(q);
                    enqueue_count += 1;
                    peak_queue = peak_queue.max(queue.len());
                }
            }
        }
    }

    let stats = SolveStats {
        states_total: sc,
        states_winning: copswin.count_ones(),
        enqueue_count,
        peak_queue,
        edge_work,
        wall: start.elapsed(),
    };
    log::info!(
        "solved n={n} k={} rule={}: {}/{} states cop-winning in {:.3?}",
        ts.k(),
        ts.rule().kind(),
        stats.states_winning,
        stats.states_total,
        stats.wall
    );
    Ok(SolveResult {
        ts,
        copswin,
        capture_time,
        counter,
        stats,
    })
}

/// Outcome of [`decide`]: can `k` cops always win on this graph?
#[derive(Debug, Clone)]
pub struct Decision {
    pub copwin: bool,
    /// A winning initial cop placement; present exactly when `copwin`.
    pub witness: Option<Vec<Vertex>>,
    /// The underlying solve, when one was needed (`None` for the k ≥ n
    /// shortcut, where one cop per vertex wins trivially).
    pub result: Option<SolveResult>,
}

/// Decides whether `k` cops suffice on `graph`: with k ≥ n the cops cover
/// every vertex and win outright; otherwise the game is solved and every
/// initial placement is scanned for one that beats all robber starts.
pub fn decide(graph: &Graph, k: usize, rule: MoveRule, opts: &SolveOptions) -> Result<Decision> {
    let n = graph.n();
    if k == 0 {
        return Err(Error::InvalidArgument(
            "the game needs at least one cop (k >= 1)".into(),
        ));
    }
    if n == 0 {
        return Err(Error::InvalidArgument(
            "the game needs at least one vertex".into(),
        ));
    }
    if k >= n {
        let witness = (0..k).map(|i| i.min(n - 1)).collect();
        return Ok(Decision {
            copwin: true,
            witness: Some(witness),
            result: None,
        });
    }
    let ts = TransitionSystem::new(graph.clone(), k, rule)?;
    let result = solve(ts, opts)?;
    let witness = result.winning_placement();
    Ok(Decision {
        copwin: witness.is_some(),
        witness,
        result: Some(result),
    })
}

/// How a played-out game ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceOutcome {
    Captured,
    Escaped,
}

/// One piece-move of a played-out game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    /// 0 for the robber, i ≥ 1 for cop i.
    pub piece: usize,
    pub from: Vertex,
    pub to: Vertex,
}

/// A full played-out game: placements, the moves, and how it ended.
#[derive(Debug, Clone)]
pub struct TraceRecord {
    pub placement: Vec<Vertex>,
    pub robber_start: Vertex,
    /// Capture time of the initial state ([`ESCAPE`] when the robber wins).
    pub initial_value: u32,
    pub steps: Vec<TraceStep>,
    pub outcome: TraceOutcome,
}

/// Solves the game and plays it out move by move.
///
/// Cops stand on `placement` if given, else on the best winning placement,
/// else (robber-winning games) all on vertex 0. The robber starts on
/// `robber_start` if given, else picks the strongest start: an escaping one
/// when it exists, otherwise one delaying capture longest. Then both sides
/// play optimally: the cops chase even from lost positions (first legal
/// move), the robber runs even from lost positions (longest delay).
///
/// A cop-winning start is captured in exactly `initial_value` steps as long
/// as `max_steps` allows; a robber-winning start runs for `max_steps` moves
/// and ends [`TraceOutcome::Escaped`].
pub fn trace(
    graph: &Graph,
    k: usize,
    rule: MoveRule,
    placement: Option<&[Vertex]>,
    robber_start: Option<Vertex>,
    max_steps: usize,
    opts: &SolveOptions,
) -> Result<TraceRecord> {
    let n = graph.n();
    if let Some(p) = placement {
        if p.len() != k {
            return Err(Error::InvalidArgument(format!(
                "placement lists {} cops, expected {k}",
                p.len()
            )));
        }
        if let Some(&v) = p.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidArgument(format!(
                "placement vertex {v} out of range (n = {n})"
            )));
        }
    }
    if let Some(r) = robber_start {
        if r >= n {
            return Err(Error::InvalidArgument(format!(
                "robber start {r} out of range (n = {n})"
            )));
        }
    }

    let ts = TransitionSystem::new(graph.clone(), k, rule)?;
    let result = solve(ts, opts)?;
    let ts = result.transition_system();

    let cops: Vec<Vertex> = match placement {
        Some(p) => p.to_vec(),
        None => result.winning_placement().unwrap_or_else(|| vec![0; k]),
    };

    // The robber answers the placement: prefer any escaping start, else
    // maximize the capture time; least vertex on ties.
    let start = match robber_start {
        Some(r) => r,
        None => {
            let value_of = |p0: Vertex| {
                let mut positions = vec![p0];
                positions.extend_from_slice(&cops);
                let idx = ts.encode(&State::new(positions, 0)).expect("valid state");
                result.capture_time(idx)
            };
            (0..n).max_by_key(|&p0| value_of(p0)).map(|best| {
                let bv = value_of(best);
                (0..n).find(|&p0| value_of(p0) == bv).unwrap()
            }).unwrap()
        }
    };

    let mut positions = vec![start];
    positions.extend_from_slice(&cops);
    let mut state = State::new(positions, 0);
    let initial_value = result.capture_time(ts.encode(&state)?);

    let mut steps = Vec::new();
    let mut outcome = TraceOutcome::Escaped;
    while steps.len() < max_steps {
        if state.is_capture() {
            outcome = TraceOutcome::Captured;
            break;
        }
        let mover = state.next_mover();
        let next = if mover == 0 {
            result.best_robber_move(&state)?
        } else if result.copswin(ts.encode(&state)?) {
            result.best_cop_move(&state)?
        } else {
            // Lost position: no move is better than another, take the first.
            ts.enumerate_out(&state)
                .into_iter()
                .next()
                .expect("a non-capture state always has successors")
        };
        steps.push(TraceStep {
            piece: mover,
            from: state.positions[mover],
            to: next.positions[mover],
        });
        state = next;
    }
    if state.is_capture() {
        outcome = TraceOutcome::Captured;
    }

    Ok(TraceRecord {
        placement: cops,
        robber_start: start,
        initial_value,
        steps,
        outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};
    use crate::statespace::RuleKind;

    fn solve_family(family: Family, k: usize, kind: RuleKind) -> SolveResult {
        let g = generate(family, None).unwrap();
        let rule = MoveRule::from_kind(kind, &g);
        let ts = TransitionSystem::new(g, k, rule).unwrap();
        solve(ts, &SolveOptions::default()).unwrap()
    }

    #[test]
    fn single_edge_is_always_cop_winning() {
        let r = solve_family(Family::Path { n: 2 }, 1, RuleKind::Classic);
        assert_eq!(r.stats().states_total, 8);
        assert_eq!(r.stats().states_winning, 8);
        let ts = r.transition_system();
        // hand-checked values
        let time = |p0, p1, tag| r.capture_time(ts.encode(&State::new(vec![p0, p1], tag)).unwrap());
        assert_eq!(time(0, 0, 0), 0);
        assert_eq!(time(1, 1, 1), 0);
        assert_eq!(time(1, 0, 0), 1); // cop steps onto the robber
        assert_eq!(time(0, 1, 0), 1);
        assert_eq!(time(1, 0, 1), 2); // robber is forced to move first
        assert_eq!(time(0, 1, 1), 2);
    }

    #[test]
    fn one_cop_loses_on_the_four_cycle() {
        let r = solve_family(Family::Cycle { n: 4 }, 1, RuleKind::Classic);
        let ts = r.transition_system();
        let idx = ts.encode(&State::new(vec![2, 0], 0)).unwrap();
        assert!(!r.copswin(idx));
        assert_eq!(r.capture_time(idx), ESCAPE);
        // but adjacency is still a win
        let idx = ts.encode(&State::new(vec![1, 0], 0)).unwrap();
        assert!(r.copswin(idx));
        assert_eq!(r.capture_time(idx), 1);
    }

    #[test]
    fn capture_states_have_time_zero() {
        let r = solve_family(Family::Cycle { n: 5 }, 2, RuleKind::Classic);
        let ts = r.transition_system();
        for i in 0..ts.state_count() {
            let s = ts.decode(i).unwrap();
            if s.is_capture() {
                assert_eq!(r.capture_time(i), 0);
                assert!(r.copswin(i));
            } else {
                assert_ne!(r.capture_time(i), 0);
            }
        }
    }

    #[test]
    fn winning_flag_and_finite_time_coincide() {
        for kind in [RuleKind::Classic, RuleKind::Zombie] {
            let r = solve_family(Family::Cycle { n: 5 }, 1, kind);
            for i in 0..r.stats().states_total {
                assert_eq!(r.copswin(i), r.capture_time(i) != ESCAPE);
            }
        }
    }

    #[test]
    fn enqueues_equal_winning_states() {
        for (family, k) in [
            (Family::Cycle { n: 6 }, 1),
            (Family::Cycle { n: 6 }, 2),
            (Family::Petersen, 2),
        ] {
            let r = solve_family(family, k, RuleKind::Classic);
            assert_eq!(r.stats().enqueue_count, r.stats().states_winning);
            assert!(r.stats().enqueue_count <= r.stats().states_total);
        }
    }

    #[test]
    fn state_cap_is_enforced() {
        let g = generate(Family::Petersen, None).unwrap();
        let ts = TransitionSystem::new(g, 2, MoveRule::Classic).unwrap();
        let err = solve(ts, &SolveOptions { max_states: 100 }).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { .. }));
    }

    #[test]
    fn decide_matches_known_cop_numbers() {
        let opts = SolveOptions::default();
        let c4 = generate(Family::Cycle { n: 4 }, None).unwrap();
        assert!(!decide(&c4, 1, MoveRule::Classic, &opts).unwrap().copwin);
        assert!(decide(&c4, 2, MoveRule::Classic, &opts).unwrap().copwin);
        let star = generate(Family::Star { leaves: 4 }, None).unwrap();
        let d = decide(&star, 1, MoveRule::Classic, &opts).unwrap();
        assert!(d.copwin);
        assert_eq!(d.witness, Some(vec![0])); // the center dominates
    }

    #[test]
    fn decide_shortcut_with_enough_cops() {
        let g = generate(Family::Cycle { n: 3 }, None).unwrap();
        let d = decide(&g, 3, MoveRule::Classic, &SolveOptions::default()).unwrap();
        assert!(d.copwin);
        assert!(d.result.is_none(), "k >= n must not run a solve");
        assert_eq!(d.witness, Some(vec![0, 1, 2]));
        // more cops than vertices: extras pile on the last vertex
        let d = decide(&g, 5, MoveRule::Classic, &SolveOptions::default()).unwrap();
        assert_eq!(d.witness, Some(vec![0, 1, 2, 2, 2]));
    }

    #[test]
    fn witness_is_lexicographically_least() {
        let g = generate(Family::Path { n: 5 }, None).unwrap();
        let d = decide(&g, 1, MoveRule::Classic, &SolveOptions::default()).unwrap();
        assert!(d.copwin);
        let w = d.witness.unwrap();
        let r = d.result.unwrap();
        // no smaller winning placement exists
        for earlier in 0..w[0] {
            let ts = r.transition_system();
            let all_win = (0..5).all(|p0| {
                let idx = ts.encode(&State::new(vec![p0, earlier], 0)).unwrap();
                r.copswin(idx)
            });
            assert!(!all_win, "placement {earlier} would contradict leastness");
        }
    }

    #[test]
    fn best_moves_step_toward_capture() {
        let r = solve_family(Family::Path { n: 2 }, 1, RuleKind::Classic);
        let next = r.best_cop_move(&State::new(vec![1, 0], 0)).unwrap();
        assert_eq!(next, State::new(vec![1, 1], 1));
        // the robber in a lost spot delays as long as possible
        let reply = r.best_robber_move(&State::new(vec![1, 0], 1)).unwrap();
        let ts = r.transition_system();
        assert_eq!(r.capture_time(ts.encode(&reply).unwrap()), 1);
    }

    #[test]
    fn best_move_preconditions() {
        let r = solve_family(Family::Cycle { n: 4 }, 1, RuleKind::Classic);
        // robber to move
        assert!(r.best_cop_move(&State::new(vec![2, 0], 1)).is_err());
        // cops cannot win from here
        assert!(r.best_cop_move(&State::new(vec![2, 0], 0)).is_err());
        // capture state
        assert!(r.best_robber_move(&State::new(vec![2, 2], 1)).is_err());
        // cop to move
        assert!(r.best_robber_move(&State::new(vec![2, 0], 0)).is_err());
    }

    #[test]
    fn escaping_robber_moves_keep_the_flag_down() {
        let r = solve_family(Family::Cycle { n: 4 }, 1, RuleKind::Classic);
        let ts = r.transition_system();
        let s = State::new(vec![2, 0], 1);
        let reply = r.best_robber_move(&s).unwrap();
        assert!(!r.copswin(ts.encode(&reply).unwrap()));
    }

    #[test]
    fn trace_on_a_single_edge() {
        let g = generate(Family::Path { n: 2 }, None).unwrap();
        let rec = trace(
            &g,
            1,
            MoveRule::Classic,
            None,
            None,
            100,
            &SolveOptions::default(),
        )
        .unwrap();
        assert_eq!(rec.outcome, TraceOutcome::Captured);
        assert_eq!(rec.steps.len() as u32, rec.initial_value);
    }

    #[test]
    fn trace_escape_on_the_four_cycle() {
        let g = generate(Family::Cycle { n: 4 }, None).unwrap();
        let rec = trace(
            &g,
            1,
            MoveRule::Classic,
            None,
            None,
            50,
            &SolveOptions::default(),
        )
        .unwrap();
        assert_eq!(rec.outcome, TraceOutcome::Escaped);
        assert_eq!(rec.initial_value, ESCAPE);
        assert_eq!(rec.steps.len(), 50);
    }

    #[test]
    fn trace_length_matches_value_on_petersen() {
        let g = generate(Family::Petersen, None).unwrap();
        let rec = trace(
            &g,
            3,
            MoveRule::Classic,
            None,
            None,
            10_000,
            &SolveOptions::default(),
        )
        .unwrap();
        assert_eq!(rec.outcome, TraceOutcome::Captured);
        assert_ne!(rec.initial_value, ESCAPE);
        assert_eq!(rec.steps.len() as u32, rec.initial_value);
    }

    #[test]
    fn trace_validates_inputs() {
        let g = generate(Family::Path { n: 3 }, None).unwrap();
        let opts = SolveOptions::default();
        assert!(trace(&g, 1, MoveRule::Classic, Some(&[0, 1]), None, 10, &opts).is_err());
        assert!(trace(&g, 1, MoveRule::Classic, Some(&[9]), None, 10, &opts).is_err());
        assert!(trace(&g, 1, MoveRule::Classic, None, Some(7), 10, &opts).is_err());
    }

    #[test]
    fn trace_respects_explicit_start() {
        let g = generate(Family::Path { n: 5 }, None).unwrap();
        let rec = trace(
            &g,
            1,
            MoveRule::Classic,
            Some(&[0]),
            Some(4),
            100,
            &SolveOptions::default(),
        )
        .unwrap();
        assert_eq!(rec.placement, vec![0]);
        assert_eq!(rec.robber_start, 4);
        assert_eq!(rec.outcome, TraceOutcome::Captured);
    }

    #[test]
    fn placement_value_is_the_worst_reply() {
        let g = generate(Family::Cycle { n: 4 }, None).unwrap();
        let ts = TransitionSystem::new(g, 2, MoveRule::Classic).unwrap();
        let r = solve(ts, &SolveOptions::default()).unwrap();
        let ts = r.transition_system();
        let k1 = ts.k() + 1;
        for a in 0..4 {
            for b in 0..4 {
                let expect = (0..4)
                    .map(|p0| r.capture_time(ts.encode(&State::new(vec![p0, a, b], 0)).unwrap()))
                    .max()
                    .unwrap();
                assert_eq!(r.placement_value(&[a, b]).unwrap(), expect);
                // index arithmetic must agree with encode()
                assert_eq!(ts.encode(&State::new(vec![0, a, b], 0)).unwrap() % k1, 0);
            }
        }
        assert!(r.placement_value(&[0]).is_err());
        assert!(r.placement_value(&[0, 9]).is_err());
    }
}
