//! Slow reference solvers, deliberately independent of the main engine.
//!
//! Everything here is re-derived from the graph alone: separate index
//! arithmetic, separate breadth-first distances, and move enumeration by
//! scanning all n vertices instead of walking adjacency lists. Agreement
//! with the fast solver is then real evidence, not an echo of shared code.
//! None of it is fast; none of it needs to be.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{SolveResult, ESCAPE};
use crate::statespace::RuleKind;

/// Largest state count the oracles accept (they sweep the space repeatedly).
pub const ORACLE_CAP: usize = 1_000_000;

/// Per-state win flags and capture times from the reference fixed-point
/// solver, in the same dense state order the main solver uses.
#[derive(Debug, Clone)]
pub struct OracleResult {
    pub winning: Vec<bool>,
    pub value: Vec<u32>,
}

/// Independent layout arithmetic over the same state indexing contract:
/// index = tag + (k+1)·(p_0 + n·p_1 + … + nᵏ·p_k).
struct Space<'a> {
    g: &'a Graph,
    n: usize,
    k1: usize,
    pows: Vec<usize>,
    state_count: usize,
    /// dist[u][v] for the zombie rule; None under the classic rule.
    dist: Option<Vec<Vec<u32>>>,
}

impl<'a> Space<'a> {
    fn new(g: &'a Graph, k: usize, kind: RuleKind, cap: usize) -> Result<Space<'a>> {
        if k == 0 || g.n() == 0 {
            return Err(Error::InvalidArgument(
                "the game needs at least one cop and one vertex".into(),
            ));
        }
        let n = g.n();
        let k1 = k + 1;
        let mut count: u128 = k1 as u128;
        for _ in 0..k1 {
            count = count.saturating_mul(n as u128);
        }
        if count > cap as u128 {
            return Err(Error::ResourceLimit {
                states: count,
                cap: cap as u128,
            });
        }
        let mut pows = Vec::with_capacity(k1);
        let mut p = 1usize;
        for _ in 0..k1 {
            pows.push(p);
            p *= n;
        }
        let dist = match kind {
            RuleKind::Classic => None,
            RuleKind::Zombie => Some((0..n).map(|src| bfs(g, src)).collect()),
        };
        Ok(Space {
            g,
            n,
            k1,
            pows,
            state_count: count as usize,
            dist,
        })
    }

    fn is_capture(&self, i: usize) -> bool {
        let mut pos = i / self.k1;
        let p0 = pos % self.n;
        for _ in 1..self.k1 {
            pos /= self.n;
            if pos % self.n == p0 {
                return true;
            }
        }
        false
    }

    /// True when the robber moves next from state `i` (tag = k).
    fn robber_to_move(&self, i: usize) -> bool {
        i % self.k1 == self.k1 - 1
    }

    /// Successor indices of `i`, by scanning every vertex as a candidate
    /// destination for the piece on turn.
    fn successors(&self, i: usize, out: &mut Vec<usize>) {
        out.clear();
        let tag = i % self.k1;
        let pos = i / self.k1;
        let j = (tag + 1) % self.k1;
        let pj = pos / self.pows[j] % self.n;
        let p0 = pos % self.n;
        let rest = pos - pj * self.pows[j];
        for u in 0..self.n {
            let legal = match &self.dist {
                Some(dist) if j != 0 => {
                    let d = dist[pj][p0];
                    if d == u32::MAX || d == 0 {
                        u == pj
                    } else {
                        self.g.is_adjacent(pj, u) && dist[u][p0] == d - 1
                    }
                }
                _ => u == pj || self.g.is_adjacent(pj, u),
            };
            if legal {
                out.push(j + self.k1 * (rest + u * self.pows[j]));
            }
        }
    }
}

/// Plain breadth-first distances from `src`, kept separate from the
/// library's distance-matrix code on purpose.
fn bfs(g: &Graph, src: usize) -> Vec<u32> {
    let mut d = vec![u32::MAX; g.n()];
    d[src] = 0;
    let mut frontier = vec![src];
    let mut level = 0u32;
    while !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for &u in &frontier {
            for v in 0..g.n() {
                if d[v] == u32::MAX && g.is_adjacent(u, v) {
                    d[v] = level;
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    d
}

/// Reference solver: naive fixed-point sweeps over the whole state space.
///
/// Win flags grow upward from the capture states until stable. Capture
/// times then shrink downward from infinity: capture 0, cop to move
/// 1 + min over successors, robber to move 1 + max, re-swept until stable.
/// Both converge to the optimal game values.
pub fn oracle_fixedpoint(g: &Graph, k: usize, kind: RuleKind) -> Result<OracleResult> {
    let sp = Space::new(g, k, kind, ORACLE_CAP)?;
    let sc = sp.state_count;
    let mut succ = Vec::new();

    let mut winning: Vec<bool> = (0..sc).map(|i| sp.is_capture(i)).collect();
    loop {
        let mut changed = false;
        for i in 0..sc {
            if winning[i] {
                continue;
            }
            sp.successors(i, &mut succ);
            let win = if sp.robber_to_move(i) {
                succ.iter().all(|&s| winning[s])
            } else {
                succ.iter().any(|&s| winning[s])
            };
            if win {
                winning[i] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let mut value: Vec<u32> = (0..sc)
        .map(|i| if sp.is_capture(i) { 0 } else { ESCAPE })
        .collect();
    loop {
        let mut changed = false;
        for i in 0..sc {
            if sp.is_capture(i) {
                continue;
            }
            sp.successors(i, &mut succ);
            let over = succ.iter().map(|&s| value[s]);
            let m = if sp.robber_to_move(i) {
                over.max()
            } else {
                over.min()
            }
            .expect("every non-capture state has successors");
            let v = if m == ESCAPE { ESCAPE } else { m + 1 };
            if v < value[i] {
                value[i] = v;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    debug_assert!((0..sc).all(|i| winning[i] == (value[i] != ESCAPE)));
    Ok(OracleResult { winning, value })
}

/// Reference decision for the game where all cops move at once: cops and
/// robber alternate whole turns instead of single piece-moves. Classic
/// rule only. Returns whether some initial cop placement wins against
/// every robber start.
pub fn oracle_simultaneous(g: &Graph, k: usize) -> Result<bool> {
    if k == 0 || g.n() == 0 {
        return Err(Error::InvalidArgument(
            "the game needs at least one cop and one vertex".into(),
        ));
    }
    let n = g.n();
    let mut count: u128 = 2;
    for _ in 0..=k {
        count = count.saturating_mul(n as u128);
    }
    if count > ORACLE_CAP as u128 {
        return Err(Error::ResourceLimit {
            states: count,
            cap: ORACLE_CAP as u128,
        });
    }
    let mut pows = Vec::with_capacity(k + 1);
    let mut p = 1usize;
    for _ in 0..=k {
        pows.push(p);
        p *= n;
    }
    // index = side + 2·(p_0 + n·p_1 + … + nᵏ·p_k); side 0 = cops to move
    let sc = count as usize;

    let digits_of = |pos: usize| {
        let mut d = Vec::with_capacity(k + 1);
        let mut rest = pos;
        for _ in 0..=k {
            d.push(rest % n);
            rest /= n;
        }
        d
    };
    let captured = |digits: &[usize]| digits[1..].contains(&digits[0]);
    let closed_nbhd =
        |v: usize| -> Vec<usize> { (0..n).filter(|&u| u == v || g.is_adjacent(v, u)).collect() };

    let mut winning: Vec<bool> = (0..sc).map(|i| captured(&digits_of(i / 2))).collect();
    loop {
        let mut changed = false;
        for i in 0..sc {
            if winning[i] {
                continue;
            }
            let side = i % 2;
            let digits = digits_of(i / 2);
            let win = if side == 0 {
                // every cop picks a move; any joint choice that wins will do
                let moves: Vec<Vec<usize>> = (1..=k).map(|c| closed_nbhd(digits[c])).collect();
                let mut choice = vec![0usize; k];
                let mut any = false;
                'joint: loop {
                    let mut pos = digits[0];
                    for c in 0..k {
                        pos += moves[c][choice[c]] * pows[c + 1];
                    }
                    if winning[1 + 2 * pos] {
                        any = true;
                        break;
                    }
                    let mut c = 0;
                    loop {
                        if c == k {
                            break 'joint;
                        }
                        choice[c] += 1;
                        if choice[c] < moves[c].len() {
                            break;
                        }
                        choice[c] = 0;
                        c += 1;
                    }
                }
                any
            } else {
                // the robber must lose everywhere it can go
                let rest = i / 2 - digits[0];
                closed_nbhd(digits[0])
                    .into_iter()
                    .all(|u| winning[2 * (rest + u)])
            };
            if win {
                winning[i] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    // cops place first and move first; the robber answers the placement
    let mut placement = vec![0usize; k];
    loop {
        let mut base = 0usize;
        for c in 0..k {
            base += placement[c] * pows[c + 1];
        }
        if (0..n).all(|p0| winning[2 * (base + p0)]) {
            return Ok(true);
        }
        let mut c = 0;
        loop {
            if c == k {
                return Ok(false);
            }
            placement[c] += 1;
            if placement[c] < n {
                break;
            }
            placement[c] = 0;
            c += 1;
        }
    }
}

/// Audits a finished solve against the defining equations of the game,
/// state by state, with this module's own move enumeration:
/// capture states are wins with time 0; a cop-to-move state wins iff some
/// successor wins, with time 1 + min; a robber-to-move state wins iff all
/// successors win, with time 1 + max; losing states carry [`ESCAPE`].
/// Returns a description of the violations if there are any.
pub fn verify_bellman(result: &SolveResult) -> std::result::Result<(), String> {
    let ts = result.transition_system();
    let sp = Space::new(ts.graph(), ts.k(), ts.rule().kind(), usize::MAX)
        .map_err(|e| e.to_string())?;
    let sc = sp.state_count;
    let mut succ = Vec::new();
    let mut problems: Vec<String> = Vec::new();

    for i in 0..sc {
        let flag = result.copswin(i);
        let time = result.capture_time(i);
        if sp.is_capture(i) {
            if !flag || time != 0 {
                problems.push(format!(
                    "state {i}: capture must be a win with time 0, got {flag}/{time}"
                ));
            }
            continue;
        }
        if flag == (time == ESCAPE) {
            problems.push(format!(
                "state {i}: flag {flag} inconsistent with time {time}"
            ));
            continue;
        }
        sp.successors(i, &mut succ);
        let robber = sp.robber_to_move(i);
        let expect_flag = if robber {
            succ.iter().all(|&s| result.copswin(s))
        } else {
            succ.iter().any(|&s| result.copswin(s))
        };
        if flag != expect_flag {
            problems.push(format!(
                "state {i}: flag {flag}, successors say {expect_flag}"
            ));
            continue;
        }
        if flag {
            let over = succ.iter().map(|&s| result.capture_time(s));
            let m = if robber { over.max() } else { over.min() }.unwrap();
            if m == ESCAPE || time != m + 1 {
                problems.push(format!(
                    "state {i}: time {time} disagrees with successors (extreme {m})"
                ));
            }
        }
    }

    if problems.is_empty() {
        Ok(())
    } else {
        Err(format!(
            "{} violation(s); first: {}",
            problems.len(),
            problems[0]
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};
    use crate::graph::Graph;
    use crate::solver::{solve, SolveOptions};
    use crate::statespace::{MoveRule, State, TransitionSystem};

    fn run_both(family: Family, k: usize, kind: RuleKind) -> (SolveResult, OracleResult) {
        let g = generate(family, None).unwrap();
        let rule = MoveRule::from_kind(kind, &g);
        let ts = TransitionSystem::new(g.clone(), k, rule).unwrap();
        let fast = solve(ts, &SolveOptions::default()).unwrap();
        let slow = oracle_fixedpoint(&g, k, kind).unwrap();
        (fast, slow)
    }

    #[test]
    fn single_edge_all_states_winning() {
        let g = generate(Family::Path { n: 2 }, None).unwrap();
        let r = oracle_fixedpoint(&g, 1, RuleKind::Classic).unwrap();
        assert_eq!(r.winning, vec![true; 8]);
        // hand-checked capture times, dense order
        let sys = TransitionSystem::new(g, 1, MoveRule::Classic).unwrap();
        let at = |p0, p1, tag| r.value[sys.encode(&State::new(vec![p0, p1], tag)).unwrap()];
        assert_eq!(at(0, 0, 0), 0);
        assert_eq!(at(1, 0, 0), 1);
        assert_eq!(at(0, 1, 1), 2);
    }

    #[test]
    fn four_cycle_keeps_distance_two_safe() {
        let g = generate(Family::Cycle { n: 4 }, None).unwrap();
        let r = oracle_fixedpoint(&g, 1, RuleKind::Classic).unwrap();
        let sys = TransitionSystem::new(g, 1, MoveRule::Classic).unwrap();
        for p0 in 0..4usize {
            for p1 in 0..4usize {
                let i = sys.encode(&State::new(vec![p0, p1], 0)).unwrap();
                let far = (p0 as i32 - p1 as i32).rem_euclid(4) == 2;
                assert_eq!(r.winning[i], !far, "robber {p0} cop {p1}");
            }
        }
    }

    #[test]
    fn oracle_and_solver_agree_on_mixed_instances() {
        for (family, k, kind) in [
            (Family::Path { n: 4 }, 1, RuleKind::Classic),
            (Family::Cycle { n: 5 }, 1, RuleKind::Classic),
            (Family::Cycle { n: 5 }, 2, RuleKind::Classic),
            (Family::Cycle { n: 5 }, 1, RuleKind::Zombie),
            (Family::Cycle { n: 6 }, 2, RuleKind::Zombie),
            (Family::Star { leaves: 5 }, 1, RuleKind::Zombie),
            (Family::Grid { rows: 2, cols: 3 }, 1, RuleKind::Classic),
        ] {
            let (fast, slow) = run_both(family, k, kind);
            for i in 0..fast.stats().states_total {
                assert_eq!(fast.copswin(i), slow.winning[i], "{family:?} k={k} state {i}");
                assert_eq!(fast.capture_time(i), slow.value[i], "{family:?} k={k} state {i}");
            }
        }
    }

    #[test]
    fn disconnected_zombie_agreement() {
        let g = Graph::from_edges(5, vec![(0, 1), (1, 2), (3, 4)]).unwrap();
        for kind in [RuleKind::Classic, RuleKind::Zombie] {
            let rule = MoveRule::from_kind(kind, &g);
            let ts = TransitionSystem::new(g.clone(), 1, rule).unwrap();
            let fast = solve(ts, &SolveOptions::default()).unwrap();
            let slow = oracle_fixedpoint(&g, 1, kind).unwrap();
            for i in 0..fast.stats().states_total {
                assert_eq!(fast.copswin(i), slow.winning[i], "{kind:?} state {i}");
                assert_eq!(fast.capture_time(i), slow.value[i], "{kind:?} state {i}");
            }
        }
    }

    #[test]
    fn simultaneous_matches_known_cycles() {
        let c4 = generate(Family::Cycle { n: 4 }, None).unwrap();
        assert!(!oracle_simultaneous(&c4, 1).unwrap());
        assert!(oracle_simultaneous(&c4, 2).unwrap());
        let p2 = generate(Family::Path { n: 2 }, None).unwrap();
        assert!(oracle_simultaneous(&p2, 1).unwrap());
    }

    #[test]
    fn caps_are_enforced() {
        let g = generate(Family::Complete { n: 40 }, None).unwrap();
        assert!(matches!(
            oracle_fixedpoint(&g, 3, RuleKind::Classic),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(matches!(
            oracle_simultaneous(&g, 3),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn bellman_audit_passes_on_solved_games() {
        for kind in [RuleKind::Classic, RuleKind::Zombie] {
            let (fast, _) = run_both(Family::Cycle { n: 6 }, 2, kind);
            verify_bellman(&fast).unwrap();
            let (fast, _) = run_both(Family::Petersen, 1, kind);
            verify_bellman(&fast).unwrap();
        }
    }
}
