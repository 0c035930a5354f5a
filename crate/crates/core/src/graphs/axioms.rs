use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use super::{iso, sdeg_standard, Scheme, SignedColoredGraph};
use crate::tableaux::StrictPartition;

/// Largest interval examined by the local axiom, and the largest shape kept
/// in the precomputed catalog.
pub const LOCAL_WINDOW: usize = 9;

/// `SG_λ` for every strict `λ` with `|λ| ≤ 9`, smallest first.
pub fn catalog() -> &'static [(StrictPartition, SignedColoredGraph)] {
    static CATALOG: OnceLock<Vec<(StrictPartition, SignedColoredGraph)>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        StrictPartition::all_up_to(LOCAL_WINDOW)
            .into_par_iter()
            .map(|lam| {
                let g = sdeg_standard(&lam);
                (lam, g)
            })
            .collect()
    })
}

/// The shape `λ` with `SG_λ ≅ g`, for a connected peak-signed graph.
pub fn standard_shape_of(g: &SignedColoredGraph) -> Option<StrictPartition> {
    if g.scheme() != Scheme::Peak {
        return None;
    }
    let n = g.degree();
    let candidates: Vec<(StrictPartition, SignedColoredGraph)> = if n <= LOCAL_WINDOW {
        catalog()
            .iter()
            .filter(|(lam, h)| lam.size() == n && h.num_vertices() == g.num_vertices())
            .cloned()
            .collect()
    } else {
        StrictPartition::all_of_size(n)
            .into_iter()
            .filter(|lam| lam.count_sst() == g.num_vertices() as u64)
            .map(|lam| {
                let h = sdeg_standard(&lam);
                (lam, h)
            })
            .collect()
    };
    if n == 0 {
        return (g.num_vertices() == 1).then(StrictPartition::empty);
    }
    candidates
        .into_iter()
        .find(|(_, h)| iso(g, h).is_some())
        .map(|(lam, _)| lam)
}

/// Every component is isomorphic to a standard graph.
pub fn is_sdeg(g: &SignedColoredGraph) -> bool {
    g.components()
        .iter()
        .all(|c| standard_shape_of(&g.induced(c)).is_some())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalFailure {
    pub interval: (usize, usize),
    /// Labels of the offending component.
    pub component: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutingFailure {
    pub colors: (usize, usize),
    pub u: String,
    pub v: String,
    pub w: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub intervals_checked: usize,
    pub locally_standard: Vec<LocalFailure>,
    pub commuting: Vec<CommutingFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.locally_standard.is_empty() && self.commuting.is_empty()
    }
}

fn local_failures(g: &SignedColoredGraph) -> (usize, Vec<LocalFailure>) {
    let n = g.degree();
    let intervals: Vec<(usize, usize)> = (1..=n)
        .flat_map(|a| (a..=n.min(a + LOCAL_WINDOW - 1)).map(move |b| (a, b)))
        .collect();
    let failures = intervals
        .par_iter()
        .filter_map(|&(a, b)| {
            let r = g.restrict(a, b).expect("interval inside [n]");
            r.components().into_iter().find_map(|c| {
                standard_shape_of(&r.induced(&c)).is_none().then(|| LocalFailure {
                    interval: (a, b),
                    component: c.iter().map(|&v| g.label(v).to_string()).collect(),
                })
            })
        })
        .collect();
    (intervals.len(), failures)
}

fn commuting_failures(g: &SignedColoredGraph) -> Vec<CommutingFailure> {
    let adj = g.adjacency();
    let colors: Vec<usize> = g.colors().collect();
    let mut out = Vec::new();
    for &i in &colors {
        for &j in &colors {
            if i.abs_diff(j) <= 3 {
                continue;
            }
            for u in 0..g.num_vertices() {
                let (Some(vs), Some(ws)) = (adj[u].get(&i), adj[u].get(&j)) else {
                    continue;
                };
                for &v in vs {
                    for &w in ws {
                        let closes = adj[v]
                            .get(&j)
                            .into_iter()
                            .flatten()
                            .any(|&y| g.has_edge(i, w, y));
                        if !closes {
                            out.push(CommutingFailure {
                                colors: (i, j),
                                u: g.label(u).to_string(),
                                v: g.label(v).to_string(),
                                w: g.label(w).to_string(),
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// The Locally Standard axiom over every interval of length at most 9, and
/// the Commuting axiom for all color pairs more than 3 apart.
pub fn check_axioms(g: &SignedColoredGraph) -> AxiomReport {
    let (intervals_checked, locally_standard) = local_failures(g);
    AxiomReport {
        intervals_checked,
        locally_standard,
        commuting: commuting_failures(g),
    }
}
