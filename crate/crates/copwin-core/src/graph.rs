//! Undirected simple graphs as sorted adjacency lists.
//!
//! Vertices are `0..n-1` internally; all text formats and the CLI use
//! 1-based labels.

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Finite undirected simple graph.
///
/// Immutable after construction. Adjacency lists are sorted and
/// duplicate-free; self-loops are rejected at construction because staying
/// in place is already a legal game move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list (0-based endpoints).
    /// Duplicate edges collapse; self-loops and out-of-range endpoints error.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidArgument(format!(
                    "self-loop at vertex {u} is not allowed"
                )));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph {
            adjacency,
            edge_count,
        })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    /// Average degree 2m/n.
    pub fn average_degree(&self) -> f64 {
        if self.n() == 0 {
            0.0
        } else {
            2.0 * self.edge_count as f64 / self.n() as f64
        }
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// All edges as (u, v) with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n() {
            for &v in &self.adjacency[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Checks the structural invariants: symmetry, no self-loops, no
    /// duplicates, consistent edge count.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let mut half_edges = 0usize;
        for u in 0..n {
            let list = &self.adjacency[u];
            for w in list.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::InvalidArgument(format!(
                        "adjacency list of {u} not sorted/deduplicated"
                    )));
                }
            }
            for &v in list {
                if v >= n {
                    return Err(Error::InvalidArgument(format!(
                        "neighbor {v} of {u} out of range"
                    )));
                }
                if v == u {
                    return Err(Error::InvalidArgument(format!("self-loop at {u}")));
                }
                if !self.is_adjacent(v, u) {
                    return Err(Error::InvalidArgument(format!(
                        "asymmetric edge ({u}, {v})"
                    )));
                }
            }
            half_edges += list.len();
        }
        if half_edges != 2 * self.edge_count {
            return Err(Error::InvalidArgument(format!(
                "edge count {} does not match adjacency ({} half-edges)",
                self.edge_count, half_edges
            )));
        }
        Ok(())
    }

    /// Connected components, each a sorted vertex list; components ordered
    /// by their smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    /// Subgraph induced by `vertices` (must be sorted, duplicate-free and in
    /// range). Returns the subgraph and the map from new to old labels.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<(Graph, Vec<Vertex>)> {
        let n = self.n();
        let mut old_to_new = vec![usize::MAX; n];
        for (new, &old) in vertices.iter().enumerate() {
            if old >= n {
                return Err(Error::InvalidArgument(format!("vertex {old} out of range")));
            }
            if old_to_new[old] != usize::MAX {
                return Err(Error::InvalidArgument(format!("duplicate vertex {old}")));
            }
            old_to_new[old] = new;
        }
        let mut edges = Vec::new();
        for (new_u, &old_u) in vertices.iter().enumerate() {
            for &old_v in &self.adjacency[old_u] {
                let new_v = old_to_new[old_v];
                if new_v != usize::MAX && new_u < new_v {
                    edges.push((new_u, new_v));
                }
            }
        }
        let sub = Graph::from_edges(vertices.len(), edges)?;
        Ok((sub, vertices.to_vec()))
    }

    /// Edge-list text: "n <count>" header, then "u v" lines, 1-based,
    /// lexicographically sorted. Stable under parse/serialize round trips.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n());
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }

    /// DIMACS text: "p edge n m" then "e u v" lines, 1-based.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n(), self.edge_count);
        for (u, v) in self.edges() {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_collapses_duplicates() {
        let g = Graph::from_edges(2, vec![(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
        g.validate().unwrap();
    }

    #[test]
    fn from_edges_rejects_self_loop() {
        assert!(Graph::from_edges(2, vec![(1, 1)]).is_err());
    }

    #[test]
    fn from_edges_rejects_out_of_range() {
        assert!(Graph::from_edges(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn components_and_induced() {
        // two disjoint edges
        let g = Graph::from_edges(4, vec![(0, 1), (2, 3)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3]]);
        assert!(!g.is_connected());
        let (sub, map) = g.induced_subgraph(&comps[1]).unwrap();
        assert_eq!(sub.n(), 2);
        assert_eq!(sub.edge_count(), 1);
        assert_eq!(map, vec![2, 3]);
    }

    #[test]
    fn isolated_vertices_counted() {
        let g = Graph::from_edges(5, vec![(0, 1)]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree(4), 0);
        assert!((g.average_degree() - 0.4).abs() < 1e-12);
    }
}
