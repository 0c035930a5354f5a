use itertools::Itertools;

use super::{Scheme, SignedColoredGraph};
use crate::permutations::{beta_i, ck_move_a, reduced_words, SignedPermutation};
use crate::tableaux::{enumerate_sst, h_move_tableau, ShiftedTableau, StrictPartition};
use crate::{Error, Result};

/// Type A Coxeter-Knuth graph with ascent signatures.
pub fn ck_graph_a(w: &SignedPermutation) -> Result<SignedColoredGraph> {
    if w.window().iter().any(|&x| x < 0) {
        return Err(Error::Precondition(format!("{w} is not a permutation")));
    }
    let words = reduced_words(w);
    let p = w.length();
    let mut g = SignedColoredGraph::new(
        Scheme::Ascent,
        p.saturating_sub(1),
        words.iter().map(ToString::to_string).collect(),
        words.iter().map(|a| a.ascents()).collect(),
    );
    for (u, a) in words.iter().enumerate() {
        for i in 1..=p.saturating_sub(2) {
            let b = ck_move_a(a, i)?;
            if b != *a {
                let v = words.binary_search(&b).expect("moves stay in R(w)");
                g.add_edge(i, u, v);
            }
        }
    }
    Ok(g)
}

/// Type B Coxeter-Knuth graph: `i`-edges from `β_i`, peak signatures.
pub fn ck_graph_b(w: &SignedPermutation) -> SignedColoredGraph {
    let words = reduced_words(w);
    let p = w.length();
    let mut g = SignedColoredGraph::new(
        Scheme::Peak,
        p,
        words.iter().map(ToString::to_string).collect(),
        words.iter().map(|a| a.peaks()).collect(),
    );
    for (u, a) in words.iter().enumerate() {
        for i in 1..=p.saturating_sub(3) {
            let b = beta_i(a, i).expect("reduced window");
            if b != *a {
                let v = words.binary_search(&b).expect("moves stay in R(w)");
                g.add_edge(i, u, v);
            }
        }
    }
    g
}

/// Rows top first, separated by `/`.
pub(crate) fn tableau_label(t: &ShiftedTableau) -> String {
    let sep = if t.size() < 10 { "" } else { "," };
    t.rows().iter().rev().map(|r| r.iter().join(sep)).join("/")
}

/// `SG_λ`: standard shifted tableaux joined by the nontrivial orbits of `h_i`.
/// Vertex `k` is the `k`-th tableau of [`enumerate_sst`].
pub fn sdeg_standard(lambda: &StrictPartition) -> SignedColoredGraph {
    let all = enumerate_sst(lambda);
    let n = lambda.size();
    let mut g = SignedColoredGraph::new(
        Scheme::Peak,
        n,
        all.iter().map(tableau_label).collect(),
        all.iter().map(ShiftedTableau::peaks).collect(),
    );
    for (u, t) in all.iter().enumerate() {
        for i in 1..=n.saturating_sub(3) {
            let h = h_move_tableau(t, i).expect("h_i keeps tableaux standard");
            if h != *t {
                let v = all.binary_search(&h).expect("same shape");
                g.add_edge(i, u, v);
            }
        }
    }
    g
}
