//! Graph families for testing and benchmarking, plus a seeded G(n, p) model.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named graph family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    /// Path on `n` vertices: 0-1-2-…-(n-1).
    Path { n: usize },
    /// Cycle on `n >= 3` vertices.
    Cycle { n: usize },
    /// Complete graph on `n` vertices.
    Complete { n: usize },
    /// Star with a center (vertex 0) and `leaves` leaves.
    Star { leaves: usize },
    /// `rows x cols` grid with 4-neighbour adjacency.
    Grid { rows: usize, cols: usize },
    /// The Petersen graph: 10 vertices, 15 edges, 3-regular.
    Petersen,
    /// Erdos-Renyi G(n, p); each pair is an edge independently with
    /// probability `p`. Requires an explicit seed at generation time.
    RandomGnp { n: usize, p: f64 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path { n } => write!(f, "path:{n}"),
            Family::Cycle { n } => write!(f, "cycle:{n}"),
            Family::Complete { n } => write!(f, "complete:{n}"),
            Family::Star { leaves } => write!(f, "star:{leaves}"),
            Family::Grid { rows, cols } => write!(f, "grid:{rows}x{cols}"),
            Family::Petersen => write!(f, "petersen"),
            Family::RandomGnp { n, p } => write!(f, "random_gnp:{n},{p}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts `path:N`, `cycle:N`, `complete:N`, `star:N`, `grid:RxC`,
    /// `petersen`, `random_gnp:N,P`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidArgument(msg);
        let (kind, params) = match s.split_once(':') {
            Some((k, p)) => (k, Some(p)),
            None => (s, None),
        };
        let want_usize = |kind: &str| -> Result<usize> {
            let p = params
                .ok_or_else(|| bad(format!("family '{kind}' needs a parameter, e.g. {kind}:5")))?;
            p.parse()
                .map_err(|_| bad(format!("malformed parameter '{p}' for family '{kind}'")))
        };
        match kind {
            "path" => Ok(Family::Path { n: want_usize("path")? }),
            "cycle" => Ok(Family::Cycle { n: want_usize("cycle")? }),
            "complete" => Ok(Family::Complete { n: want_usize("complete")? }),
            "star" => Ok(Family::Star { leaves: want_usize("star")? }),
            "grid" => {
                let p = params.ok_or_else(|| bad("family 'grid' needs RxC, e.g. grid:3x4".into()))?;
                let (r, c) = p
                    .split_once('x')
                    .ok_or_else(|| bad(format!("grid parameter '{p}' must be RxC")))?;
                let rows = r
                    .parse()
                    .map_err(|_| bad(format!("malformed grid rows '{r}'")))?;
                let cols = c
                    .parse()
                    .map_err(|_| bad(format!("malformed grid cols '{c}'")))?;
                Ok(Family::Grid { rows, cols })
            }
            "petersen" => {
                if params.is_some() {
                    return Err(bad("family 'petersen' takes no parameters".into()));
                }
                Ok(Family::Petersen)
            }
            "random_gnp" => {
                let p = params
                    .ok_or_else(|| bad("family 'random_gnp' needs N,P, e.g. random_gnp:8,0.5".into()))?;
                let (n_s, p_s) = p
                    .split_once(',')
                    .ok_or_else(|| bad(format!("random_gnp parameter '{p}' must be N,P")))?;
                let n = n_s
                    .parse()
                    .map_err(|_| bad(format!("malformed vertex count '{n_s}'")))?;
                let prob: f64 = p_s
                    .parse()
                    .map_err(|_| bad(format!("malformed probability '{p_s}'")))?;
                Ok(Family::RandomGnp { n, p: prob })
            }
            other => Err(bad(format!("unknown graph family '{other}'"))),
        }
    }
}

/// Tiny deterministic RNG (splitmix64). Kept local so generated graphs are
/// reproducible across platforms and independent of external crate versions.
struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Builds a graph of the given family. `seed` is consulted only by
/// `RandomGnp`, which requires it; deterministic families ignore it.
pub fn generate(family: Family, seed: Option<u64>) -> Result<Graph> {
    match family {
        Family::Path { n } => {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, edges)
        }
        Family::Cycle { n } => {
            if n < 3 {
                return Err(Error::InvalidArgument(format!(
                    "cycle needs at least 3 vertices, got {n}"
                )));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, edges)
        }
        Family::Complete { n } => {
            let mut edges = Vec::with_capacity(n.saturating_sub(1) * n / 2);
            for u in 0..n {
                for v in (u + 1)..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, edges)
        }
        Family::Star { leaves } => {
            let edges: Vec<_> = (1..=leaves).map(|leaf| (0, leaf)).collect();
            Graph::from_edges(leaves + 1, edges)
        }
        Family::Grid { rows, cols } => {
            if rows == 0 || cols == 0 {
                return Err(Error::InvalidArgument(format!(
                    "grid needs positive dimensions, got {rows}x{cols}"
                )));
            }
            let at = |r: usize, c: usize| r * cols + c;
            let mut edges = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        edges.push((at(r, c), at(r, c + 1)));
                    }
                    if r + 1 < rows {
                        edges.push((at(r, c), at(r + 1, c)));
                    }
                }
            }
            Graph::from_edges(rows * cols, edges)
        }
        Family::Petersen => {
            let mut edges = Vec::with_capacity(15);
            for i in 0..5 {
                edges.push((i, (i + 1) % 5)); // outer cycle
                edges.push((5 + i, 5 + ((i + 2) % 5))); // inner pentagram
                edges.push((i, 5 + i)); // spokes
            }
            Graph::from_edges(10, edges)
        }
        Family::RandomGnp { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidArgument(format!(
                    "edge probability must lie in [0, 1], got {p}"
                )));
            }
            let seed = seed.ok_or_else(|| {
                Error::InvalidArgument("random_gnp requires an explicit seed".into())
            })?;
            let mut rng = SplitMix64::new(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.next_f64() < p {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trips_display() {
        for s in [
            "path:5",
            "cycle:4",
            "complete:3",
            "star:6",
            "grid:2x3",
            "petersen",
            "random_gnp:8,0.5",
        ] {
            let fam: Family = s.parse().unwrap();
            assert_eq!(fam.to_string(), s);
        }
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!("ring:4".parse::<Family>().is_err());
        assert!("cycle".parse::<Family>().is_err());
        assert!("grid:3".parse::<Family>().is_err());
        assert!("random_gnp:8".parse::<Family>().is_err());
        assert!("petersen:1".parse::<Family>().is_err());
    }

    #[test]
    fn path_shape() {
        let g = generate(Family::Path { n: 4 }, None).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn single_vertex_path_and_empty() {
        assert_eq!(generate(Family::Path { n: 1 }, None).unwrap().n(), 1);
        assert_eq!(generate(Family::Path { n: 0 }, None).unwrap().n(), 0);
    }

    #[test]
    fn cycle_minimum_size() {
        assert!(generate(Family::Cycle { n: 2 }, None).is_err());
        let c3 = generate(Family::Cycle { n: 3 }, None).unwrap();
        assert_eq!(c3.edge_count(), 3);
    }

    #[test]
    fn complete_edge_count() {
        let k5 = generate(Family::Complete { n: 5 }, None).unwrap();
        assert_eq!(k5.edge_count(), 10);
        for v in 0..5 {
            assert_eq!(k5.degree(v), 4);
        }
    }

    #[test]
    fn star_center_is_vertex_zero() {
        let g = generate(Family::Star { leaves: 4 }, None).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree(0), 4);
        for leaf in 1..5 {
            assert_eq!(g.degree(leaf), 1);
        }
    }

    #[test]
    fn grid_shape() {
        let g = generate(Family::Grid { rows: 2, cols: 3 }, None).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 7); // 2*2 horizontal + 3 vertical
        assert!(generate(Family::Grid { rows: 0, cols: 3 }, None).is_err());
    }

    #[test]
    fn petersen_is_three_regular() {
        let g = generate(Family::Petersen, None).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        for v in 0..10 {
            assert_eq!(g.degree(v), 3);
        }
        assert!(g.is_connected());
    }

    #[test]
    fn gnp_is_deterministic_per_seed() {
        let fam = Family::RandomGnp { n: 12, p: 0.4 };
        let a = generate(fam, Some(7)).unwrap();
        let b = generate(fam, Some(7)).unwrap();
        assert_eq!(a, b);
        let c = generate(fam, Some(8)).unwrap();
        // Different seeds almost surely give different graphs at this size.
        assert_ne!(a, c);
    }

    #[test]
    fn gnp_needs_seed_and_valid_probability() {
        assert!(generate(Family::RandomGnp { n: 5, p: 0.5 }, None).is_err());
        assert!(generate(Family::RandomGnp { n: 5, p: 1.5 }, Some(1)).is_err());
    }

    #[test]
    fn gnp_extremes() {
        let empty = generate(Family::RandomGnp { n: 6, p: 0.0 }, Some(3)).unwrap();
        assert_eq!(empty.edge_count(), 0);
        let full = generate(Family::RandomGnp { n: 6, p: 1.0 }, Some(3)).unwrap();
        assert_eq!(full.edge_count(), 15);
    }
}
