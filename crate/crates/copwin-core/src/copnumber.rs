//! Cop number: the least k for which k cops win.
//!
//! A linear scan k = 1, 2, … is the right shape here: the decision is
//! monotone in k (an extra cop can shadow another), and the state space
//! grows as n^(k+1), so every k we rule out costs a vanishing fraction of
//! the k that finally answers. At k = n the decision is true by the
//! cover-every-vertex shortcut, so the scan always terminates.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::solver::{decide, SolveOptions};
use crate::statespace::{MoveRule, RuleKind};

/// One decision in a cop-number search.
#[derive(Debug, Clone)]
pub struct KAttempt {
    pub k: usize,
    pub copwin: bool,
    /// 0 when the k ≥ n shortcut answered without a solve.
    pub states_total: usize,
    pub wall: Duration,
}

/// Result of a cop-number search, including the ruled-out k values.
#[derive(Debug, Clone)]
pub struct CopNumberReport {
    /// The least winning k, or None when the search stopped early.
    pub cop_number: Option<usize>,
    /// A winning placement at the answer; present exactly when an answer is.
    pub witness: Option<Vec<Vertex>>,
    /// The per-k decisions made, in order. Empty for multi-component
    /// searches, which report per component sums instead.
    pub attempts: Vec<KAttempt>,
    /// Why the search is inconclusive, when it is.
    pub inconclusive: Option<String>,
}

/// Finds c(G) by deciding k = 1, 2, … up to `k_max` (default n, where the
/// answer is always yes). Hitting the state cap mid-search produces a
/// partial report — the attempts list shows which k were ruled out — rather
/// than an error; anything else fails loudly.
pub fn cop_number(
    g: &Graph,
    kind: RuleKind,
    k_max: Option<usize>,
    opts: &SolveOptions,
) -> Result<CopNumberReport> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidArgument(
            "the cop number needs at least one vertex".into(),
        ));
    }
    if let Some(km) = k_max {
        if km == 0 || km > n {
            return Err(Error::InvalidArgument(format!(
                "k_max must lie in 1..={n}, got {km}"
            )));
        }
    }
    let upper = k_max.unwrap_or(n);
    let rule = MoveRule::from_kind(kind, g);

    let mut attempts = Vec::new();
    for k in 1..=upper {
        let start = Instant::now();
        let decision = match decide(g, k, rule.clone(), opts) {
            Ok(d) => d,
            Err(Error::ResourceLimit { states, cap }) => {
                return Ok(CopNumberReport {
                    cop_number: None,
                    witness: None,
                    attempts,
                    inconclusive: Some(format!(
                        "k = {k} needs {states} states, over the cap of {cap}"
                    )),
                });
            }
            Err(e) => return Err(e),
        };
        attempts.push(KAttempt {
            k,
            copwin: decision.copwin,
            states_total: decision.result.as_ref().map_or(0, |r| r.stats().states_total),
            wall: start.elapsed(),
        });
        if decision.copwin {
            return Ok(CopNumberReport {
                cop_number: Some(k),
                witness: decision.witness,
                attempts,
                inconclusive: None,
            });
        }
    }
    Ok(CopNumberReport {
        cop_number: None,
        witness: None,
        attempts,
        inconclusive: Some(format!("no k <= {upper} suffices; raise k_max")),
    })
}

/// Cop number via connected components: solves each component separately
/// and sums, since play never crosses between components. Far cheaper than
/// the whole-graph search when G is disconnected, and equal to it. The
/// witness concatenates the per-component placements (translated back to
/// whole-graph vertex labels); a single-component graph falls through to
/// [`cop_number`] unchanged.
///
/// An empty graph needs no cops: the report says 0 with an empty witness.
pub fn cop_number_by_components(
    g: &Graph,
    kind: RuleKind,
    opts: &SolveOptions,
) -> Result<CopNumberReport> {
    let components = g.connected_components();
    if components.len() == 1 {
        return cop_number(g, kind, None, opts);
    }
    let mut total = 0usize;
    let mut witness = Vec::new();
    for comp in &components {
        let (sub, back) = g.induced_subgraph(comp)?;
        let report = cop_number(&sub, kind, None, opts)?;
        match report.cop_number {
            Some(c) => {
                total += c;
                witness.extend(report.witness.unwrap().into_iter().map(|v| back[v]));
            }
            None => {
                return Ok(CopNumberReport {
                    cop_number: None,
                    witness: None,
                    attempts: Vec::new(),
                    inconclusive: Some(format!(
                        "component containing vertex {} is inconclusive: {}",
                        comp[0],
                        report.inconclusive.unwrap_or_default()
                    )),
                });
            }
        }
    }
    Ok(CopNumberReport {
        cop_number: Some(total),
        witness: Some(witness),
        attempts: Vec::new(),
        inconclusive: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};

    fn classic(g: &Graph) -> CopNumberReport {
        cop_number(g, RuleKind::Classic, None, &SolveOptions::default()).unwrap()
    }

    #[test]
    fn paths_and_stars_need_one_cop() {
        for g in [
            generate(Family::Path { n: 6 }, None).unwrap(),
            generate(Family::Star { leaves: 7 }, None).unwrap(),
            generate(Family::Complete { n: 5 }, None).unwrap(),
        ] {
            let r = classic(&g);
            assert_eq!(r.cop_number, Some(1));
            assert_eq!(r.attempts.len(), 1);
            assert!(r.witness.is_some());
        }
    }

    #[test]
    fn cycles_need_two() {
        for n in 4..=7 {
            let g = generate(Family::Cycle { n }, None).unwrap();
            let r = classic(&g);
            assert_eq!(r.cop_number, Some(2), "C_{n}");
            assert_eq!(
                r.attempts.iter().map(|a| a.copwin).collect::<Vec<_>>(),
                vec![false, true]
            );
        }
    }

    #[test]
    fn petersen_needs_three() {
        let g = generate(Family::Petersen, None).unwrap();
        let r = classic(&g);
        assert_eq!(r.cop_number, Some(3));
        // monotone: false, false, true
        assert_eq!(
            r.attempts.iter().map(|a| a.copwin).collect::<Vec<_>>(),
            vec![false, false, true]
        );
    }

    #[test]
    fn single_vertex_needs_one() {
        let g = Graph::from_edges(1, vec![]).unwrap();
        let r = classic(&g);
        assert_eq!(r.cop_number, Some(1));
        // answered by the k >= n shortcut: no states visited
        assert_eq!(r.attempts[0].states_total, 0);
    }

    #[test]
    fn k_max_can_stop_the_search_early() {
        let g = generate(Family::Petersen, None).unwrap();
        let r = cop_number(&g, RuleKind::Classic, Some(2), &SolveOptions::default()).unwrap();
        assert_eq!(r.cop_number, None);
        assert!(r.inconclusive.is_some());
        assert_eq!(r.attempts.len(), 2);
        assert!(r.attempts.iter().all(|a| !a.copwin));
    }

    #[test]
    fn state_cap_yields_partial_report() {
        let g = generate(Family::Petersen, None).unwrap();
        let opts = SolveOptions { max_states: 300 }; // allows k=1 (200), not k=2
        let r = cop_number(&g, RuleKind::Classic, None, &opts).unwrap();
        assert_eq!(r.cop_number, None);
        assert!(r.inconclusive.unwrap().contains("cap"));
        assert_eq!(r.attempts.len(), 1);
    }

    #[test]
    fn bad_arguments_are_rejected() {
        let g = generate(Family::Path { n: 3 }, None).unwrap();
        let opts = SolveOptions::default();
        assert!(cop_number(&g, RuleKind::Classic, Some(9), &opts).is_err());
        assert!(cop_number(&g, RuleKind::Classic, Some(0), &opts).is_err());
        let empty = Graph::from_edges(0, vec![]).unwrap();
        assert!(cop_number(&empty, RuleKind::Classic, None, &opts).is_err());
    }

    #[test]
    fn disjoint_triangles_sum_to_two() {
        let g = Graph::from_edges(6, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
            .unwrap();
        let r = cop_number_by_components(&g, RuleKind::Classic, &SolveOptions::default()).unwrap();
        assert_eq!(r.cop_number, Some(2));
        let w = r.witness.unwrap();
        assert_eq!(w.len(), 2);
        assert!(w[0] < 3 && w[1] >= 3, "one cop per triangle: {w:?}");
    }

    #[test]
    fn triangle_plus_four_cycle_sums_to_three() {
        let g = Graph::from_edges(
            7,
            vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (3, 6)],
        )
        .unwrap();
        let r = cop_number_by_components(&g, RuleKind::Classic, &SolveOptions::default()).unwrap();
        assert_eq!(r.cop_number, Some(3)); // 1 for the triangle, 2 for the cycle
    }

    #[test]
    fn single_component_delegates() {
        let g = generate(Family::Cycle { n: 5 }, None).unwrap();
        let whole = classic(&g);
        let comp = cop_number_by_components(&g, RuleKind::Classic, &SolveOptions::default())
            .unwrap();
        assert_eq!(whole.cop_number, comp.cop_number);
        assert_eq!(whole.witness, comp.witness);
        assert_eq!(comp.attempts.len(), 2);
    }

    #[test]
    fn empty_graph_needs_no_cops() {
        let g = Graph::from_edges(0, vec![]).unwrap();
        let r = cop_number_by_components(&g, RuleKind::Classic, &SolveOptions::default()).unwrap();
        assert_eq!(r.cop_number, Some(0));
        assert_eq!(r.witness, Some(vec![]));
    }

    #[test]
    fn zombie_cycle_needs_two() {
        let g = generate(Family::Cycle { n: 6 }, None).unwrap();
        let r = cop_number(&g, RuleKind::Zombie, None, &SolveOptions::default()).unwrap();
        assert_eq!(r.cop_number, Some(2));
    }
}
