use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::SignedColoredGraph;

type Profile = (BTreeSet<usize>, Vec<(usize, usize)>);

fn profiles(g: &SignedColoredGraph, adj: &[BTreeMap<usize, Vec<usize>>]) -> Vec<Profile> {
    (0..g.num_vertices())
        .map(|v| {
            let degs = adj[v].iter().map(|(&c, ns)| (c, ns.len())).collect();
            (g.sigma(v).clone(), degs)
        })
        .collect()
}

struct Search<'a> {
    g: &'a SignedColoredGraph,
    h: &'a SignedColoredGraph,
    gadj: &'a [BTreeMap<usize, Vec<usize>>],
    hadj: &'a [BTreeMap<usize, Vec<usize>>],
    gprof: &'a [Profile],
    hprof: &'a [Profile],
    order: Vec<usize>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn consistent(&self, v: usize, x: usize) -> bool {
        if self.gprof[v] != self.hprof[x] || self.used[x] {
            return false;
        }
        for (&c, ns) in &self.gadj[v] {
            for &u in ns {
                if let Some(y) = self.map[u] {
                    if !self.h.has_edge(c, x, y) {
                        return false;
                    }
                }
            }
        }
        // Edges of H at x towards mapped vertices must come from G.
        for (&c, ns) in &self.hadj[x] {
            for &y in ns {
                if let Some(u) = self.map.iter().position(|&m| m == Some(y)) {
                    if !self.g.has_edge(c, v, u) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, depth: usize, candidates: &[usize]) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        // A mapped neighbour pins the image to its neighbourhood in H.
        let pinned: Option<Vec<usize>> = self.gadj[v].iter().find_map(|(&c, ns)| {
            ns.iter().find_map(|&u| {
                self.map[u].map(|y| self.hadj[y].get(&c).cloned().unwrap_or_default())
            })
        });
        let pool = pinned.unwrap_or_else(|| candidates.to_vec());
        for x in pool {
            if !self.consistent(v, x) {
                continue;
            }
            self.map[v] = Some(x);
            self.used[x] = true;
            if self.run(depth + 1, candidates) {
                return true;
            }
            self.map[v] = None;
            self.used[x] = false;
        }
        false
    }
}

fn bfs_order(adj: &[BTreeMap<usize, Vec<usize>>], comp: &[usize]) -> Vec<usize> {
    let mut seen = BTreeSet::from([comp[0]]);
    let mut order = vec![comp[0]];
    let mut queue = VecDeque::from([comp[0]]);
    while let Some(u) = queue.pop_front() {
        for &v in adj[u].values().flatten() {
            if seen.insert(v) {
                order.push(v);
                queue.push_back(v);
            }
        }
    }
    order
}

/// A signature- and color-preserving bijection `G → H` whose inverse is
/// also a morphism, as `map[v]` for each vertex `v` of `G`.
pub fn iso(g: &SignedColoredGraph, h: &SignedColoredGraph) -> Option<Vec<usize>> {
    if g.scheme() != h.scheme()
        || g.degree() != h.degree()
        || g.num_vertices() != h.num_vertices()
        || g.edges().iter().map(|(c, e)| (c, e.len())).ne(h.edges().iter().map(|(c, e)| (c, e.len())))
    {
        return None;
    }
    let (gadj, hadj) = (g.adjacency(), h.adjacency());
    let (gprof, hprof) = (profiles(g, &gadj), profiles(h, &hadj));
    let mut gp = gprof.clone();
    let mut hp = hprof.clone();
    gp.sort();
    hp.sort();
    if gp != hp {
        return None;
    }
    let mut map = vec![None; g.num_vertices()];
    let mut used = vec![false; h.num_vertices()];
    let hcomps = h.components();
    let mut hcomp_used = vec![false; hcomps.len()];
    for comp in g.components() {
        let order = bfs_order(&gadj, &comp);
        let mut matched = false;
        for (k, hc) in hcomps.iter().enumerate() {
            if hcomp_used[k] || hc.len() != comp.len() {
                continue;
            }
            let mut s = Search {
                g,
                h,
                gadj: &gadj,
                hadj: &hadj,
                gprof: &gprof,
                hprof: &hprof,
                order: order.clone(),
                map: map.clone(),
                used: used.clone(),
            };
            if s.run(0, hc) {
                map = s.map;
                used = s.used;
                hcomp_used[k] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return None;
        }
    }
    map.into_iter().collect()
}

/// Whether `map` (indexed by vertices of `g`) is a bijective morphism onto
/// `h` with morphism inverse.
pub fn is_morphism(g: &SignedColoredGraph, h: &SignedColoredGraph, map: &[usize]) -> bool {
    let images: BTreeSet<usize> = map.iter().copied().collect();
    if map.len() != g.num_vertices()
        || images.len() != h.num_vertices()
        || images.iter().any(|&x| x >= h.num_vertices())
    {
        return false;
    }
    if (0..g.num_vertices()).any(|v| g.sigma(v) != h.sigma(map[v])) {
        return false;
    }
    let mapped: BTreeMap<usize, BTreeSet<(usize, usize)>> = g
        .edges()
        .iter()
        .map(|(&c, es)| {
            let es = es
                .iter()
                .map(|&(u, v)| (map[u].min(map[v]), map[u].max(map[v])))
                .collect();
            (c, es)
        })
        .collect();
    &mapped == h.edges()
}
