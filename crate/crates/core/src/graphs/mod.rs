//! Signed colored graphs: Coxeter-Knuth graphs, standard shifted dual
//! equivalence graphs, and the axioms that characterize the latter.

mod axioms;
mod build;
mod iso;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Serialize, Serializer};

use crate::{Error, Result};

pub use axioms::{
    catalog, check_axioms, is_sdeg, standard_shape_of, AxiomReport, CommutingFailure,
    LocalFailure,
};
pub use build::{ck_graph_a, ck_graph_b, sdeg_standard};
pub use iso::{iso, is_morphism};

/// How signatures were produced. Graphs from different schemes are never
/// isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    /// Ascent sets of type A words, of length `p - 1`.
    Ascent,
    /// Peak sets, of length `n`.
    Peak,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedColoredGraph {
    scheme: Scheme,
    degree: usize,
    labels: Vec<String>,
    sigma: Vec<BTreeSet<usize>>,
    edges: BTreeMap<usize, BTreeSet<(usize, usize)>>,
}

impl SignedColoredGraph {
    pub fn new(scheme: Scheme, degree: usize, labels: Vec<String>, sigma: Vec<BTreeSet<usize>>) -> Self {
        assert_eq!(labels.len(), sigma.len());
        Self {
            scheme,
            degree,
            labels,
            sigma,
            edges: BTreeMap::new(),
        }
    }

    pub fn add_edge(&mut self, color: usize, u: usize, v: usize) {
        self.edges.entry(color).or_default().insert((u.min(v), u.max(v)));
    }

    pub fn remove_edge(&mut self, color: usize, u: usize, v: usize) -> bool {
        let removed = self
            .edges
            .get_mut(&color)
            .is_some_and(|e| e.remove(&(u.min(v), u.max(v))));
        if self.edges.get(&color).is_some_and(BTreeSet::is_empty) {
            self.edges.remove(&color);
        }
        removed
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    /// Length of the signature vectors.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn sigma(&self, v: usize) -> &BTreeSet<usize> {
        &self.sigma[v]
    }

    /// `σ(v)` as a `+`/`-` string over positions `1..=degree`.
    pub fn signature_string(&self, v: usize) -> String {
        (1..=self.degree)
            .map(|k| if self.sigma[v].contains(&k) { '+' } else { '-' })
            .collect()
    }

    pub fn edges(&self) -> &BTreeMap<usize, BTreeSet<(usize, usize)>> {
        &self.edges
    }

    pub fn colors(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.keys().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.values().map(BTreeSet::len).sum()
    }

    pub fn has_edge(&self, color: usize, u: usize, v: usize) -> bool {
        self.edges
            .get(&color)
            .is_some_and(|e| e.contains(&(u.min(v), u.max(v))))
    }

    /// `adj[v][color]` lists the `color`-neighbours of `v`.
    pub fn adjacency(&self) -> Vec<BTreeMap<usize, Vec<usize>>> {
        let mut adj = vec![BTreeMap::<usize, Vec<usize>>::new(); self.num_vertices()];
        for (&c, es) in &self.edges {
            for &(u, v) in es {
                adj[u].entry(c).or_default().push(v);
                adj[v].entry(c).or_default().push(u);
            }
        }
        adj
    }

    /// Colors whose edges are a partial matching, as they are for edges
    /// coming from involutions.
    pub fn is_matching(&self) -> bool {
        self.adjacency()
            .iter()
            .all(|m| m.values().all(|ns| ns.len() <= 1))
    }

    /// The colors on the edges between `u` and `v`.
    pub fn edge_colors(&self, u: usize, v: usize) -> BTreeSet<usize> {
        self.edges
            .iter()
            .filter(|(_, es)| es.contains(&(u.min(v), u.max(v))))
            .map(|(&c, _)| c)
            .collect()
    }

    pub fn find_vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.num_vertices()];
        let mut out = Vec::new();
        for s in 0..self.num_vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in adj[u].values().flatten() {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let index: BTreeMap<usize, usize> =
            vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let mut g = Self::new(
            self.scheme,
            self.degree,
            vertices.iter().map(|&v| self.labels[v].clone()).collect(),
            vertices.iter().map(|&v| self.sigma[v].clone()).collect(),
        );
        for (&c, es) in &self.edges {
            for &(u, v) in es {
                if let (Some(&a), Some(&b)) = (index.get(&u), index.get(&v)) {
                    g.add_edge(c, a, b);
                }
            }
        }
        g
    }

    fn check_interval(&self, a: usize, b: usize) -> Result<()> {
        if a == 0 || a > b || b > self.degree {
            return Err(Error::InvalidInterval(a, b));
        }
        Ok(())
    }

    /// `G^I`: same vertices and signatures, only colors `a..=b-3`.
    pub fn subgraph_interval(&self, a: usize, b: usize) -> Result<Self> {
        self.check_interval(a, b)?;
        let mut g = self.clone();
        g.edges.retain(|&c, _| c >= a && c + 3 <= b);
        Ok(g)
    }

    /// `G|_I`: signatures cut to the open interval `(a, b)` and shifted, colors
    /// `a + i - 1` renamed `i`.
    pub fn restrict(&self, a: usize, b: usize) -> Result<Self> {
        self.check_interval(a, b)?;
        let sigma = self
            .sigma
            .iter()
            .map(|s| s.iter().filter(|&&x| a < x && x < b).map(|&x| x - a + 1).collect())
            .collect();
        let mut g = Self::new(self.scheme, b - a + 1, self.labels.clone(), sigma);
        for (&c, es) in &self.edges {
            if c >= a && c + 3 <= b {
                g.edges.insert(c - a + 1, es.clone());
            }
        }
        Ok(g)
    }

    /// DOT with edges labelled by color and vertices by label and signature.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.num_vertices() {
            let _ = writeln!(
                s,
                "  v{v} [label=\"{}\\n{}\"];",
                self.labels[v],
                self.signature_string(v)
            );
        }
        for (c, es) in &self.edges {
            for (u, v) in es {
                let _ = writeln!(s, "  v{u} -- v{v} [label=\"{c}\"];");
            }
        }
        s.push_str("}\n");
        s
    }
}

impl Serialize for SignedColoredGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            scheme: Scheme,
            degree: usize,
            vertices: &'a [String],
            sigma: Vec<String>,
            edges: BTreeMap<String, Vec<[usize; 2]>>,
        }
        Repr {
            scheme: self.scheme,
            degree: self.degree,
            vertices: &self.labels,
            sigma: (0..self.num_vertices()).map(|v| self.signature_string(v)).collect(),
            edges: self
                .edges
                .iter()
                .map(|(c, es)| (c.to_string(), es.iter().map(|&(u, v)| [u, v]).collect()))
                .collect(),
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::StrictPartition;

    fn sp(v: &[usize]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn restriction_rules() {
        let g = sdeg_standard(&sp(&[4, 2]));
        assert_eq!(g.restrict(1, 6).unwrap(), g);
        let r = g.restrict(2, 5).unwrap();
        assert_eq!(r.degree(), 4);
        assert_eq!(r.colors().collect::<Vec<_>>(), vec![1]);
        assert_eq!(r.edges()[&1], g.edges()[&2]);
        for v in 0..g.num_vertices() {
            let expect: BTreeSet<usize> =
                g.sigma(v).iter().filter(|&&s| 2 < s && s < 5).map(|s| s - 1).collect();
            assert_eq!(r.sigma(v), &expect);
        }
        let sub = g.subgraph_interval(1, 5).unwrap();
        assert_eq!(sub.colors().collect::<Vec<_>>(), vec![1, 2]);
        assert!(g.restrict(0, 3).is_err());
        assert!(g.restrict(4, 7).is_err());
    }

    #[test]
    fn json_shape() {
        let g = sdeg_standard(&sp(&[3, 1]));
        let v: serde_json::Value = serde_json::to_value(&g).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 2);
        assert_eq!(v["edges"]["1"], serde_json::json!([[0, 1]]));
        assert!(g.to_dot().contains("--"));
    }
}
