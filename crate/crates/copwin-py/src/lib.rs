//! Python bindings for the pursuit-game solver.
//!
//! The module exposes the library's main types and operations: build or
//! generate a [`Graph`], ask [`decide`] whether a cop team wins, search the
//! least team size with [`cop_number`], replay best play with [`trace`], or
//! keep a full [`Solution`] table for per-state queries.
//!
//! Unlike the command-line tool (which speaks 1-based vertex labels),
//! everything here is 0-based, matching Python indexing habits.

use pyo3::exceptions::{PyOSError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use copwin_core::dismantle;
use copwin_core::dump::write_dump;
use copwin_core::generate::{generate, Family};
use copwin_core::parse::{parse_dimacs, parse_edge_list};
use copwin_core::solver::{self, SolveOptions, SolveResult, TraceOutcome, ESCAPE};
use copwin_core::{MoveRule, RuleKind, State, TransitionSystem};

fn to_py_err(e: copwin_core::Error) -> PyErr {
    use copwin_core::Error;
    match e {
        Error::InvalidArgument(_) | Error::Parse { .. } | Error::Dump(_) => {
            PyValueError::new_err(e.to_string())
        }
        Error::ResourceLimit { .. } => PyRuntimeError::new_err(e.to_string()),
        Error::Io(_) => PyOSError::new_err(e.to_string()),
    }
}

fn parse_rule(rule: &str) -> PyResult<RuleKind> {
    rule.parse::<RuleKind>().map_err(to_py_err)
}

const DEFAULT_MAX_STATES: u64 = 1 << 31;

/// An immutable simple undirected graph with vertices 0..n.
#[pyclass(frozen, module = "copwin")]
pub struct Graph {
    inner: copwin_core::Graph,
}

#[pymethods]
impl Graph {
    /// Graph(n, edges): n vertices and a list of (u, v) pairs.
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = copwin_core::Graph::from_edges(n, edges).map_err(to_py_err)?;
        Ok(Graph { inner })
    }

    /// Parse the plain edge-list format ("n N" header, one "u v" per line).
    /// Vertex labels in the text are 1-based, as in the file format.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: parse_edge_list(text).map_err(to_py_err)?,
        })
    }

    /// Parse the DIMACS format ("p edge N M" and "e u v" lines, 1-based).
    #[staticmethod]
    fn from_dimacs(text: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: parse_dimacs(text).map_err(to_py_err)?,
        })
    }

    /// Generate a named family: "path:N", "cycle:N", "complete:N",
    /// "star:N", "grid:RxC", "petersen", "random_gnp:N,P" (needs seed).
    #[staticmethod]
    #[pyo3(signature = (family, seed=None))]
    fn generate(family: &str, seed: Option<u64>) -> PyResult<Self> {
        let family: Family = family.parse().map_err(to_py_err)?;
        Ok(Graph {
            inner: generate(family, seed).map_err(to_py_err)?,
        })
    }

    /// Number of vertices.
    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    /// Number of edges.
    #[getter]
    fn m(&self) -> usize {
        self.inner.edges().len()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!(
                "vertex {v} out of range for n = {}",
                self.inner.n()
            )));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn is_adjacent(&self, u: usize, v: usize) -> PyResult<bool> {
        let n = self.inner.n();
        if u >= n || v >= n {
            return Err(PyValueError::new_err(format!(
                "edge ({u}, {v}) out of range for n = {n}"
            )));
        }
        Ok(self.inner.is_adjacent(u, v))
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    fn to_dimacs(&self) -> String {
        self.inner.to_dimacs()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// True when the graph collapses to one vertex by repeatedly deleting
    /// dominated vertices — exactly the graphs where one cop wins.
    fn is_dismantlable(&self) -> PyResult<bool> {
        dismantle::is_dismantlable(&self.inner).map_err(to_py_err)
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edges().len())
    }
}

/// Outcome of a decide() call.
#[pyclass(frozen, get_all, module = "copwin")]
pub struct DecideResult {
    /// True when the cop team has a winning placement.
    pub copwin: bool,
    /// A winning placement (lexicographically least), if any.
    pub witness: Option<Vec<usize>>,
    /// Piece-moves to capture from the witness against the robber's best
    /// reply; None when the robber wins.
    pub capture_time: Option<u32>,
    pub states_total: usize,
    pub enqueue_count: usize,
}

#[pymethods]
impl DecideResult {
    fn __repr__(&self) -> String {
        format!(
            "DecideResult(copwin={}, witness={:?}, capture_time={:?})",
            self.copwin, self.witness, self.capture_time
        )
    }
}

/// Outcome of a cop_number() search.
#[pyclass(frozen, get_all, module = "copwin")]
pub struct CopNumberResult {
    /// The least winning team size, or None if the search stopped early.
    pub cop_number: Option<usize>,
    pub witness: Option<Vec<usize>>,
    /// (k, copwin, states_total) per attempted team size.
    pub attempts: Vec<(usize, bool, usize)>,
    /// Why the search stopped without an answer, when it did.
    pub inconclusive: Option<String>,
}

#[pymethods]
impl CopNumberResult {
    fn __repr__(&self) -> String {
        format!(
            "CopNumberResult(cop_number={:?}, attempts={})",
            self.cop_number,
            self.attempts.len()
        )
    }
}

/// One played-out game.
#[pyclass(frozen, get_all, module = "copwin")]
pub struct TraceResult {
    /// "captured" or "escaped".
    pub outcome: String,
    pub placement: Vec<usize>,
    pub robber_start: usize,
    /// Piece-moves to capture from the start with best play; None when the
    /// robber escapes.
    pub initial_value: Option<u32>,
    /// (piece, from, to) per piece-move; piece 0 is the robber, i >= 1 cop i.
    pub steps: Vec<(usize, usize, usize)>,
}

#[pymethods]
impl TraceResult {
    fn __repr__(&self) -> String {
        format!(
            "TraceResult(outcome={:?}, steps={}, initial_value={:?})",
            self.outcome,
            self.steps.len(),
            self.initial_value
        )
    }
}

/// A solved game: per-state win flags and capture times.
#[pyclass(frozen, module = "copwin")]
pub struct Solution {
    inner: SolveResult,
}

impl Solution {
    fn index_of(&self, positions: &[usize], tag: usize) -> PyResult<usize> {
        let s = State::new(positions.to_vec(), tag);
        self.inner.transition_system().encode(&s).map_err(to_py_err)
    }
}

#[pymethods]
impl Solution {
    #[getter]
    fn n(&self) -> usize {
        self.inner.transition_system().graph().n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.transition_system().k()
    }

    #[getter]
    fn rule(&self) -> String {
        self.inner.transition_system().rule().kind().to_string()
    }

    #[getter]
    fn states_total(&self) -> usize {
        self.inner.stats().states_total
    }

    #[getter]
    fn states_winning(&self) -> usize {
        self.inner.stats().states_winning
    }

    /// Do the cops win from ([robber, cop1, ..., copk], tag)? The tag names
    /// the piece that moved last (0 = robber, so the first cop moves next).
    #[pyo3(signature = (positions, tag=0))]
    fn copswin(&self, positions: Vec<usize>, tag: usize) -> PyResult<bool> {
        Ok(self.inner.copswin(self.index_of(&positions, tag)?))
    }

    /// Optimal piece-moves to capture from the state, or None if the robber
    /// escapes.
    #[pyo3(signature = (positions, tag=0))]
    fn capture_time(&self, positions: Vec<usize>, tag: usize) -> PyResult<Option<u32>> {
        let t = self.inner.capture_time(self.index_of(&positions, tag)?);
        Ok((t != ESCAPE).then_some(t))
    }

    /// The lexicographically least placement that wins against every robber
    /// start, if any.
    fn winning_placement(&self) -> Option<Vec<usize>> {
        self.inner.winning_placement()
    }

    /// Capture time when the cops stand on `placement` and the robber picks
    /// its best start; None if some reply escapes.
    fn placement_value(&self, placement: Vec<usize>) -> PyResult<Option<u32>> {
        let t = self.inner.placement_value(&placement).map_err(to_py_err)?;
        Ok((t != ESCAPE).then_some(t))
    }

    /// Write the full table to a file in the binary dump format.
    fn save(&self, path: &str) -> PyResult<()> {
        let mut buf = Vec::new();
        write_dump(&self.inner, &mut buf).map_err(to_py_err)?;
        std::fs::write(path, buf).map_err(|e| PyOSError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        format!(
            "Solution(n={}, k={}, rule={:?}, winning={}/{})",
            self.n(),
            self.k(),
            self.rule(),
            self.states_winning(),
            self.states_total()
        )
    }
}

/// Decide whether `cops` cops capture the robber on `graph`.
#[pyfunction]
#[pyo3(signature = (graph, cops, rule="classic", max_states=DEFAULT_MAX_STATES))]
fn decide(graph: &Graph, cops: usize, rule: &str, max_states: u64) -> PyResult<DecideResult> {
    let kind = parse_rule(rule)?;
    let opts = SolveOptions { max_states };
    let mv = MoveRule::from_kind(kind, &graph.inner);
    let d = solver::decide(&graph.inner, cops, mv, &opts).map_err(to_py_err)?;
    let capture_time = match (&d.witness, &d.result) {
        (Some(w), Some(r)) => Some(r.placement_value(w).map_err(to_py_err)?),
        (Some(_), None) => Some(0), // every vertex holds a cop
        _ => None,
    };
    let stats = d.result.as_ref().map(|r| r.stats());
    Ok(DecideResult {
        copwin: d.copwin,
        witness: d.witness,
        capture_time,
        states_total: stats.map_or(0, |s| s.states_total),
        enqueue_count: stats.map_or(0, |s| s.enqueue_count),
    })
}

/// Solve the full game and keep the per-state table.
#[pyfunction]
#[pyo3(signature = (graph, cops, rule="classic", max_states=DEFAULT_MAX_STATES))]
fn solve(graph: &Graph, cops: usize, rule: &str, max_states: u64) -> PyResult<Solution> {
    let kind = parse_rule(rule)?;
    let mv = MoveRule::from_kind(kind, &graph.inner);
    let ts = TransitionSystem::new(graph.inner.clone(), cops, mv).map_err(to_py_err)?;
    let inner = solver::solve(ts, &SolveOptions { max_states }).map_err(to_py_err)?;
    Ok(Solution { inner })
}

/// Least team size that captures the robber. Disconnected graphs are solved
/// per component unless `max_k` bounds a whole-graph scan.
#[pyfunction]
#[pyo3(signature = (graph, rule="classic", max_k=None, max_states=DEFAULT_MAX_STATES))]
fn cop_number(
    graph: &Graph,
    rule: &str,
    max_k: Option<usize>,
    max_states: u64,
) -> PyResult<CopNumberResult> {
    use copwin_core::copnumber;
    let kind = parse_rule(rule)?;
    let opts = SolveOptions { max_states };
    let report = match max_k {
        Some(_) => copwin_core::copnumber::cop_number(&graph.inner, kind, max_k, &opts),
        None => copnumber::cop_number_by_components(&graph.inner, kind, &opts),
    }
    .map_err(to_py_err)?;
    Ok(CopNumberResult {
        cop_number: report.cop_number,
        witness: report.witness,
        attempts: report
            .attempts
            .iter()
            .map(|a| (a.k, a.copwin, a.states_total))
            .collect(),
        inconclusive: report.inconclusive,
    })
}

/// Play one game with best play on both sides. Defaults: cops on their best
/// placement (all on vertex 0 when every placement loses), robber on its
/// best reply.
#[pyfunction]
#[pyo3(signature = (graph, cops, rule="classic", placement=None, robber=None,
                    max_steps=10_000, max_states=DEFAULT_MAX_STATES))]
fn trace(
    graph: &Graph,
    cops: usize,
    rule: &str,
    placement: Option<Vec<usize>>,
    robber: Option<usize>,
    max_steps: usize,
    max_states: u64,
) -> PyResult<TraceResult> {
    let kind = parse_rule(rule)?;
    let mv = MoveRule::from_kind(kind, &graph.inner);
    let rec = solver::trace(
        &graph.inner,
        cops,
        mv,
        placement.as_deref(),
        robber,
        max_steps,
        &SolveOptions { max_states },
    )
    .map_err(to_py_err)?;
    Ok(TraceResult {
        outcome: match rec.outcome {
            TraceOutcome::Captured => "captured".into(),
            TraceOutcome::Escaped => "escaped".into(),
        },
        placement: rec.placement,
        robber_start: rec.robber_start,
        initial_value: (rec.initial_value != ESCAPE).then_some(rec.initial_value),
        steps: rec.steps.iter().map(|s| (s.piece, s.from, s.to)).collect(),
    })
}

#[pymodule]
fn copwin(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<DecideResult>()?;
    m.add_class::<CopNumberResult>()?;
    m.add_class::<TraceResult>()?;
    m.add_class::<Solution>()?;
    m.add_function(wrap_pyfunction!(decide, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(cop_number, m)?)?;
    m.add_function(wrap_pyfunction!(trace, m)?)?;
    m.add("ESCAPE", ESCAPE)?;
    Ok(())
}
