//! Core library for pursuit games on finite simple graphs.
//!
//! The central question: can `k` cops, moving one piece per turn along
//! edges, always capture a robber who sees everything and plays optimally?
//! This crate answers it exactly by retrograde analysis over the full game
//! state space, and builds the rest of the toolkit on top:
//!
//! - [`graph::Graph`]: immutable simple graphs with parsing
//!   ([`parse`]) and generation ([`generate`]).
//! - [`statespace::TransitionSystem`]: the game's states and legal moves,
//!   for classic cops and for deterministic zombies ([`statespace::MoveRule`]).
//! - [`solver::solve`] / [`solver::decide`]: the counter-based backward
//!   induction that labels every state cop-winning or robber-winning, with
//!   exact capture times and extractable strategies ([`solver::trace`]).
//! - [`copnumber::cop_number`]: the least `k` that suffices.
//! - [`oracle`]: slow, independent reference solvers used to audit the
//!   fast path in tests.
//! - [`dump`]: a compact binary format for solved tables.

pub mod copnumber;
pub mod dismantle;
pub mod dist;
pub mod dump;
pub mod error;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod parse;
pub mod solver;
pub mod statespace;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
pub use statespace::{MoveRule, RuleKind, State, StateIndex, TransitionSystem};
