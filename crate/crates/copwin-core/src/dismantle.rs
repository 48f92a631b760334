//! Dismantlability check: a connected graph is catchable by a single cop
//! exactly when repeatedly deleting dominated vertices (often called corners)
//! empties it down to one vertex. Used as an independent cross-check for the
//! one-cop game.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Returns a deletion order that dismantles `g` down to a single vertex, or
/// `None` if the process gets stuck with no dominated vertex left.
///
/// Vertex `u` is dominated by a neighbor `v` when every alive vertex in
/// `N[u]` also lies in `N[v]`. Each pass deletes the smallest dominated
/// vertex, so the order is deterministic. Disconnected input is an error:
/// domination arguments only apply per component.
pub fn dismantling_order(g: &Graph) -> Result<Option<Vec<Vertex>>> {
    if g.n() == 0 {
        return Err(Error::InvalidArgument(
            "dismantlability is undefined for the empty graph".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::InvalidArgument(
            "dismantlability requires a connected graph".into(),
        ));
    }

    let n = g.n();
    let mut alive = vec![true; n];
    let mut alive_count = n;
    let mut order = Vec::with_capacity(n - 1);

    // Closed-neighborhood containment over alive vertices only.
    let dominated = |u: Vertex, v: Vertex, alive: &[bool]| -> bool {
        g.neighbors(u)
            .iter()
            .filter(|&&w| alive[w] && w != v)
            .all(|&w| g.is_adjacent(v, w))
    };

    while alive_count > 1 {
        let mut removed = None;
        'scan: for u in 0..n {
            if !alive[u] {
                continue;
            }
            for &v in g.neighbors(u) {
                if alive[v] && dominated(u, v, &alive) {
                    removed = Some(u);
                    break 'scan;
                }
            }
        }
        match removed {
            Some(u) => {
                alive[u] = false;
                alive_count -= 1;
                order.push(u);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(order))
}

/// Whether `g` dismantles to a single vertex. See [`dismantling_order`].
pub fn is_dismantlable(g: &Graph) -> Result<bool> {
    Ok(dismantling_order(g)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};

    #[test]
    fn paths_and_trees_dismantle() {
        let p5 = generate(Family::Path { n: 5 }, None).unwrap();
        assert!(is_dismantlable(&p5).unwrap());
        let star = generate(Family::Star { leaves: 6 }, None).unwrap();
        assert!(is_dismantlable(&star).unwrap());
        // a less regular tree
        let t = Graph::from_edges(6, vec![(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert!(is_dismantlable(&t).unwrap());
    }

    #[test]
    fn complete_graphs_dismantle() {
        let k4 = generate(Family::Complete { n: 4 }, None).unwrap();
        assert!(is_dismantlable(&k4).unwrap());
    }

    #[test]
    fn long_cycles_do_not() {
        for n in 4..=8 {
            let c = generate(Family::Cycle { n }, None).unwrap();
            assert!(!is_dismantlable(&c).unwrap(), "C_{n} should be stuck");
        }
        // C_3 is complete, hence dismantlable.
        let c3 = generate(Family::Cycle { n: 3 }, None).unwrap();
        assert!(is_dismantlable(&c3).unwrap());
    }

    #[test]
    fn chordal_cycle_dismantles() {
        // C_4 plus a chord is two triangles glued; every triangle corner folds.
        let g = Graph::from_edges(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(is_dismantlable(&g).unwrap());
    }

    #[test]
    fn petersen_is_not_dismantlable() {
        let g = generate(Family::Petersen, None).unwrap();
        assert!(!is_dismantlable(&g).unwrap());
    }

    #[test]
    fn order_has_full_length() {
        let g = generate(Family::Path { n: 7 }, None).unwrap();
        let order = dismantling_order(&g).unwrap().unwrap();
        assert_eq!(order.len(), 6);
        // all distinct
        let mut sorted = order.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 6);
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::from_edges(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(dismantling_order(&g).is_err());
    }

    #[test]
    fn single_vertex_is_trivially_dismantled() {
        let g = Graph::from_edges(1, vec![]).unwrap();
        assert_eq!(dismantling_order(&g).unwrap(), Some(vec![]));
    }
}
