//! All-pairs shortest-path distances via one BFS per vertex.

use std::collections::VecDeque;

use crate::graph::{Graph, Vertex};

/// Marker for "no path": `u32::MAX`.
pub const UNREACHABLE: u32 = u32::MAX;

/// Dense n-by-n matrix of hop distances. Entries between vertices in
/// different components hold [`UNREACHABLE`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// Distance from `u` to `v` in edges, or [`UNREACHABLE`].
    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.d[u * self.n + v]
    }

    /// Number of vertices the matrix covers.
    pub fn n(&self) -> usize {
        self.n
    }
}

/// Computes all-pairs distances with a breadth-first search from every
/// vertex; O(n(n + m)) total.
pub fn apsp(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![UNREACHABLE; n * n];
    let mut queue = VecDeque::new();
    for src in 0..n {
        let row = &mut d[src * n..(src + 1) * n];
        row[src] = 0;
        queue.clear();
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &w in g.neighbors(u) {
                if row[w] == UNREACHABLE {
                    row[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};

    #[test]
    fn path_distances() {
        let g = generate(Family::Path { n: 4 }, None).unwrap();
        let d = apsp(&g);
        assert_eq!(d.get(0, 3), 3);
        assert_eq!(d.get(3, 0), 3);
        assert_eq!(d.get(1, 1), 0);
        assert_eq!(d.get(1, 2), 1);
    }

    #[test]
    fn cycle_wraps_both_ways() {
        let g = generate(Family::Cycle { n: 6 }, None).unwrap();
        let d = apsp(&g);
        assert_eq!(d.get(0, 3), 3);
        assert_eq!(d.get(0, 5), 1);
        assert_eq!(d.get(1, 4), 3);
    }

    #[test]
    fn disconnected_pairs_are_unreachable() {
        let g = Graph::from_edges(4, vec![(0, 1), (2, 3)]).unwrap();
        let d = apsp(&g);
        assert_eq!(d.get(0, 1), 1);
        assert_eq!(d.get(0, 2), UNREACHABLE);
        assert_eq!(d.get(3, 1), UNREACHABLE);
    }

    #[test]
    fn petersen_diameter_two() {
        let g = generate(Family::Petersen, None).unwrap();
        let d = apsp(&g);
        let mut diameter = 0;
        for u in 0..10 {
            for v in 0..10 {
                diameter = diameter.max(d.get(u, v));
            }
        }
        assert_eq!(diameter, 2);
    }
}
