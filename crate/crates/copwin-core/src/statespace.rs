//! Game states and the implicit move graph over them.
//!
//! A state is (p_0, p_1, …, p_k; t): the robber's position, each cop's
//! position, and a tag naming the piece that moved last. Piece
//! (t+1) mod (k+1) moves next, so play cycles robber, cop 1, …, cop k.
//! Every transition changes exactly one position — the piece named by the
//! destination's tag — and the transition relation is generated on demand,
//! never materialized.
//!
//! States also carry a dense integer index (tag least significant, then
//! p_0, …, p_k as base-n digits). The layout is a compatibility contract:
//! the dump format and any external consumer of solved tables rely on it.

use crate::dist::{apsp, DistanceMatrix, UNREACHABLE};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Dense state index: `tag + (k+1)·(p_0 + n·p_1 + n²·p_2 + … + nᵏ·p_k)`.
pub type StateIndex = usize;

/// One game position: where every piece stands, and whose turn is next
/// (encoded as whose turn was last).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct State {
    /// `positions[0]` is the robber; `positions[i]` is cop `i` for i ≥ 1.
    pub positions: Vec<Vertex>,
    /// Index of the piece that moved last, in {0, …, k}. The piece
    /// (tag+1) mod (k+1) moves next.
    pub tag: usize,
}

impl State {
    pub fn new(positions: Vec<Vertex>, tag: usize) -> Self {
        State { positions, tag }
    }

    /// Number of cops (positions minus the robber).
    pub fn k(&self) -> usize {
        self.positions.len() - 1
    }

    /// The robber's vertex.
    pub fn robber(&self) -> Vertex {
        self.positions[0]
    }

    /// The cops' vertices, in cop order.
    pub fn cops(&self) -> &[Vertex] {
        &self.positions[1..]
    }

    /// True when some cop stands on the robber, regardless of tag.
    pub fn is_capture(&self) -> bool {
        self.positions[1..].contains(&self.positions[0])
    }

    /// Which piece moves next: 0 for the robber, i ≥ 1 for cop i.
    pub fn next_mover(&self) -> usize {
        (self.tag + 1) % self.positions.len()
    }
}

/// Which movement rule the cops follow. The robber moves the same way under
/// both: to a neighbor or staying put.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleKind {
    /// Cops move to a neighbor or stay.
    Classic,
    /// Cops are zombies: each must step along a geodesic toward the robber
    /// (distance strictly decreases), and only stays put when the robber is
    /// unreachable from it.
    Zombie,
}

impl std::fmt::Display for RuleKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RuleKind::Classic => "classic",
            RuleKind::Zombie => "zombie",
        })
    }
}

impl std::str::FromStr for RuleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classic" => Ok(RuleKind::Classic),
            "zombie" => Ok(RuleKind::Zombie),
            other => Err(Error::InvalidArgument(format!(
                "unknown rule '{other}' (expected 'classic' or 'zombie')"
            ))),
        }
    }
}

/// A movement rule plus the data it needs: the zombie rule carries the
/// graph's distance matrix to recognize geodesic steps.
#[derive(Debug, Clone)]
pub enum MoveRule {
    Classic,
    Zombie { dist: DistanceMatrix },
}

impl MoveRule {
    /// Builds the rule for `g`, computing all-pairs distances when the
    /// zombie rule asks for them (the one potentially non-trivial cost here).
    pub fn from_kind(kind: RuleKind, g: &Graph) -> MoveRule {
        match kind {
            RuleKind::Classic => MoveRule::Classic,
            RuleKind::Zombie => MoveRule::Zombie { dist: apsp(g) },
        }
    }

    pub fn kind(&self) -> RuleKind {
        match self {
            MoveRule::Classic => RuleKind::Classic,
            MoveRule::Zombie { .. } => RuleKind::Zombie,
        }
    }
}

/// The full game arena for one graph, cop count, and rule: state encoding
/// plus forward and backward move enumeration. Immutable after construction;
/// all enumeration is pure, so shared references are safe across threads.
#[derive(Debug, Clone)]
pub struct TransitionSystem {
    graph: Graph,
    k: usize,
    rule: MoveRule,
    /// pows[i] = n^i for i in 0..=k.
    pows: Vec<usize>,
    /// n^(k+1) distinct position tuples.
    position_count: usize,
    /// (k+1) · n^(k+1) states in total.
    state_count: usize,
}

impl TransitionSystem {
    /// Lays out the state space for `k` cops on `graph` under `rule`.
    ///
    /// Fails on k = 0, an empty graph, a zombie distance matrix sized for a
    /// different graph, or a state count that cannot be indexed in memory.
    pub fn new(graph: Graph, k: usize, rule: MoveRule) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument(
                "the game needs at least one cop (k >= 1)".into(),
            ));
        }
        let n = graph.n();
        if n == 0 {
            return Err(Error::InvalidArgument(
                "the game needs at least one vertex".into(),
            ));
        }
        if let MoveRule::Zombie { dist } = &rule {
            if dist.n() != n {
                return Err(Error::InvalidArgument(format!(
                    "distance matrix covers {} vertices but the graph has {}",
                    dist.n(),
                    n
                )));
            }
        }

        let k1 = k + 1;
        let mut pos128: u128 = 1;
        for _ in 0..k1 {
            pos128 = pos128.saturating_mul(n as u128);
        }
        let states128 = (k1 as u128).saturating_mul(pos128);
        if states128 > usize::MAX as u128 {
            return Err(Error::ResourceLimit {
                states: states128,
                cap: usize::MAX as u128,
            });
        }

        let mut pows = Vec::with_capacity(k1);
        let mut p = 1usize;
        for _ in 0..k1 {
            pows.push(p);
            p *= n;
        }
        Ok(TransitionSystem {
            graph,
            k,
            rule,
            pows,
            position_count: pos128 as usize,
            state_count: states128 as usize,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rule(&self) -> &MoveRule {
        &self.rule
    }

    /// Number of position tuples, n^(k+1).
    pub fn position_count(&self) -> usize {
        self.position_count
    }

    /// Number of states, (k+1) · n^(k+1).
    pub fn state_count(&self) -> usize {
        self.state_count
    }

    /// Packs a state into its dense index.
    pub fn encode(&self, s: &State) -> Result<StateIndex> {
        let k1 = self.k + 1;
        if s.positions.len() != k1 {
            return Err(Error::InvalidArgument(format!(
                "state has {} positions, expected {} (robber plus {} cops)",
                s.positions.len(),
                k1,
                self.k
            )));
        }
        if s.tag > self.k {
            return Err(Error::InvalidArgument(format!(
                "tag {} out of range 0..={}",
                s.tag, self.k
            )));
        }
        let n = self.graph.n();
        let mut pos = 0usize;
        for (i, &p) in s.positions.iter().enumerate() {
            if p >= n {
                return Err(Error::InvalidArgument(format!(
                    "piece {i} stands on vertex {p}, but the graph has only {n} vertices"
                )));
            }
            pos += p * self.pows[i];
        }
        Ok(s.tag + k1 * pos)
    }

    /// Unpacks a dense index back into a state. Inverse of [`encode`].
    ///
    /// [`encode`]: TransitionSystem::encode
    pub fn decode(&self, i: StateIndex) -> Result<State> {
        if i >= self.state_count {
            return Err(Error::InvalidArgument(format!(
                "state index {i} out of range 0..{}",
                self.state_count
            )));
        }
        let k1 = self.k + 1;
        let tag = i % k1;
        let mut pos = i / k1;
        let n = self.graph.n();
        let mut positions = Vec::with_capacity(k1);
        for _ in 0..k1 {
            positions.push(pos % n);
            pos /= n;
        }
        Ok(State { positions, tag })
    }

    /// The vertices piece `j` may move to (including staying put where the
    /// rule allows it), ascending. `j` must be the piece whose turn it is.
    ///
    /// Under the zombie rule a cop with the robber reachable at distance
    /// d ≥ 1 must step to a neighbor at distance d−1; with the robber
    /// unreachable, or already caught (distance 0), it holds position. The
    /// caught case never arises during solving — capture ends the game —
    /// but is defined so enumeration stays total.
    pub fn legal_piece_moves(&self, s: &State, j: usize) -> Result<Vec<Vertex>> {
        let mover = s.next_mover();
        if j != mover {
            return Err(Error::InvalidArgument(format!(
                "piece {j} is not the next mover (tag {} puts piece {mover} on turn)",
                s.tag
            )));
        }
        let mut out = Vec::new();
        self.move_dests_into(j, s.positions[j], s.positions[0], &mut out);
        Ok(out)
    }

    /// Destinations piece `j` standing on `pj` may move to, with the robber
    /// on `p0`; ascending order.
    fn move_dests_into(&self, j: usize, pj: Vertex, p0: Vertex, out: &mut Vec<Vertex>) {
        out.clear();
        match (&self.rule, j) {
            (MoveRule::Classic, _) | (MoveRule::Zombie { .. }, 0) => {
                out.extend_from_slice(self.graph.neighbors(pj));
                if let Err(at) = out.binary_search(&pj) {
                    out.insert(at, pj);
                }
            }
            (MoveRule::Zombie { dist }, _) => {
                let d = dist.get(pj, p0);
                if d == UNREACHABLE || d == 0 {
                    out.push(pj);
                } else {
                    out.extend(
                        self.graph
                            .neighbors(pj)
                            .iter()
                            .copied()
                            .filter(|&u| dist.get(u, p0) == d - 1),
                    );
                }
            }
        }
    }

    /// Vertices piece `j` could have moved FROM to stand on `pj` now, with
    /// the robber on `p0` in the destination state; ascending order.
    ///
    /// Exact mirror of [`move_dests_into`]: `c` is a source iff `pj` is a
    /// destination of `c`. For a zombie cop that means neighbors one step
    /// farther from the robber; the stay move contributes `pj` itself when
    /// the robber is unreachable, and when d = 0 (a cop already on the
    /// robber holds position, and every neighbor is one step away).
    fn move_sources_into(&self, j: usize, pj: Vertex, p0: Vertex, out: &mut Vec<Vertex>) {
        out.clear();
        match (&self.rule, j) {
            (MoveRule::Classic, _) | (MoveRule::Zombie { .. }, 0) => {
                out.extend_from_slice(self.graph.neighbors(pj));
                if let Err(at) = out.binary_search(&pj) {
                    out.insert(at, pj);
                }
            }
            (MoveRule::Zombie { dist }, _) => {
                let d = dist.get(pj, p0);
                if d == UNREACHABLE {
                    out.push(pj);
                } else {
                    out.extend(
                        self.graph
                            .neighbors(pj)
                            .iter()
                            .copied()
                            .filter(|&c| dist.get(c, p0) == d + 1),
                    );
                    if d == 0 {
                        if let Err(at) = out.binary_search(&pj) {
                            out.insert(at, pj);
                        }
                    }
                }
            }
        }
    }

    /// All successors of `q`: the next mover takes each of its legal moves,
    /// every other piece stays, and the tag advances to name the mover.
    /// Ordered by ascending destination vertex.
    pub fn enumerate_out(&self, q: &State) -> Vec<State> {
        let j = q.next_mover();
        let mut dests = Vec::new();
        self.move_dests_into(j, q.positions[j], q.positions[0], &mut dests);
        dests
            .into_iter()
            .map(|d| {
                let mut s = q.clone();
                s.positions[j] = d;
                s.tag = j;
                s
            })
            .collect()
    }

    /// All predecessors of `s`: states from which the piece named by `s`'s
    /// tag legally moved into place. Ordered by ascending source vertex.
    pub fn enumerate_in(&self, s: &State) -> Vec<State> {
        let j = s.tag;
        let t = (s.tag + self.k) % (self.k + 1);
        let mut sources = Vec::new();
        self.move_sources_into(j, s.positions[j], s.positions[0], &mut sources);
        sources
            .into_iter()
            .map(|c| {
                let mut q = s.clone();
                q.positions[j] = c;
                q.tag = t;
                q
            })
            .collect()
    }

    /// Index-level [`enumerate_in`]: writes the predecessor indices of state
    /// `i` into `out`, ascending. `scratch` holds the intermediate source
    /// vertices so the solver's hot loop allocates nothing once the buffers
    /// have warmed up.
    ///
    /// [`enumerate_in`]: TransitionSystem::enumerate_in
    pub fn in_indices_into(
        &self,
        i: StateIndex,
        scratch: &mut Vec<Vertex>,
        out: &mut Vec<StateIndex>,
    ) {
        debug_assert!(i < self.state_count);
        let k1 = self.k + 1;
        let tag = i % k1;
        let pos = i / k1;
        let n = self.graph.n();
        let j = tag;
        let pj = (pos / self.pows[j]) % n;
        let p0 = pos % n;
        let t = (tag + self.k) % k1;
        let base = t + k1 * (pos - pj * self.pows[j]);
        let stride = k1 * self.pows[j];
        self.move_sources_into(j, pj, p0, scratch);
        out.clear();
        out.extend(scratch.iter().map(|&c| base + stride * c));
    }
}
