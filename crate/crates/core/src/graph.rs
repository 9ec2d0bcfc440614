//! Undirected simple graphs: complements, chordality, split and bipartite
//! recognition, simplicial vertices and vertex covers.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, Var};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    names: Vec<String>,
    adj: Vec<Vec<bool>>,
}

/// Outcome of the chordality test, with a certificate either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    /// Perfect elimination order: each vertex is simplicial among itself and
    /// the vertices after it.
    Chordal(Vec<usize>),
    /// Vertices of an induced cycle of length at least four, in cycle order.
    NotChordal(Vec<usize>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Clique / independent-set partition of a split graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

/// `{"vertices": [...], "edges": [[u, v], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl SimpleGraph {
    pub fn new(
        names: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = names.len();
        let mut seen = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if seen.insert(name.as_str(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex '{name}'")));
            }
        }
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at '{}'", names[u])));
            }
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Ok(SimpleGraph { names, adj })
    }

    /// Vertices named `x1, ..., xn`.
    pub fn numbered(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("x{i}")).collect(), edges)
    }

    pub fn empty(n: usize) -> Self {
        Self::numbered(n, []).expect("no edges")
    }

    pub fn complete(n: usize) -> Self {
        Self::empty(n).complement()
    }

    pub fn cycle(n: usize) -> Self {
        Self::numbered(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        Self::numbered(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn from_json(g: &GraphJson) -> Result<Self> {
        let index: HashMap<&str, usize> = g
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex '{name}'")))
        };
        let edges = g
            .edges
            .iter()
            .map(|[a, b]| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(g.vertices.clone(), edges)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.names.clone(),
            edges: self
                .edges()
                .map(|(u, v)| [self.names[u].clone(), self.names[v].clone()])
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v]
            .iter()
            .enumerate()
            .filter(|&(_, &a)| a)
            .map(|(i, _)| i)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&a| a).count()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |u| (u + 1..n).filter(move |&v| self.adj[u][v]).map(move |v| (u, v)))
    }

    pub fn num_edges(&self) -> usize {
        self.edges().count()
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.adj[u][v]))
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !self.adj[u][v]))
    }

    pub fn is_complete(&self) -> bool {
        self.num_edges() * 2 == self.len() * self.len().saturating_sub(1)
    }

    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.len();
        let adj = (0..n)
            .map(|u| (0..n).map(|v| u != v && !self.adj[u][v]).collect())
            .collect();
        SimpleGraph {
            names: self.names.clone(),
            adj,
        }
    }

    /// `G[A]`, keeping the order of `vs`.
    pub fn induced_subgraph(&self, vs: &[usize]) -> SimpleGraph {
        SimpleGraph {
            names: vs.iter().map(|&v| self.names[v].clone()).collect(),
            adj: vs
                .iter()
                .map(|&u| vs.iter().map(|&v| self.adj[u][v]).collect())
                .collect(),
        }
    }

    /// `G \ x`.
    pub fn remove_vertex(&self, x: usize) -> SimpleGraph {
        let keep: Vec<usize> = (0..self.len()).filter(|&v| v != x).collect();
        self.induced_subgraph(&keep)
    }

    /// Maximum cardinality search; the returned order is the reverse of the
    /// visiting order, which is a perfect elimination order iff `G` is chordal.
    fn mcs_order(&self) -> Vec<usize> {
        let n = self.len();
        let mut weight = vec![0usize; n];
        let mut done = vec![false; n];
        let mut visit = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !done[v])
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .expect("unvisited vertex remains");
            done[v] = true;
            visit.push(v);
            for u in self.neighbors(v) {
                if !done[u] {
                    weight[u] += 1;
                }
            }
        }
        visit.reverse();
        visit
    }

    fn is_perfect_elimination_order(&self, order: &[usize]) -> bool {
        let mut pos = vec![0; self.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        for &v in order {
            let later: Vec<usize> = self.neighbors(v).filter(|&u| pos[u] > pos[v]).collect();
            if let Some(&parent) = later.iter().min_by_key(|&&u| pos[u]) {
                if later.iter().any(|&u| u != parent && !self.adj[parent][u]) {
                    return false;
                }
            }
        }
        true
    }

    /// Some induced cycle of length `>= 4`, found by extending induced paths
    /// from their smallest vertex. Exponential in the worst case.
    pub fn find_long_induced_cycle(&self) -> Option<Vec<usize>> {
        fn extend(g: &SimpleGraph, path: &mut Vec<usize>) -> Option<Vec<usize>> {
            let s = path[0];
            let last = *path.last().unwrap();
            for w in g.neighbors(last) {
                if w <= s || path.contains(&w) {
                    continue;
                }
                let inner = &path[1..path.len().max(2) - 1];
                if inner.iter().any(|&p| g.adj[p][w]) {
                    continue;
                }
                if path.len() >= 2 && g.adj[s][w] {
                    if path.len() >= 3 {
                        let mut cycle = path.clone();
                        cycle.push(w);
                        return Some(cycle);
                    }
                    continue;
                }
                path.push(w);
                if let Some(c) = extend(g, path) {
                    return Some(c);
                }
                path.pop();
            }
            None
        }
        (0..self.len()).find_map(|s| extend(self, &mut vec![s]))
    }

    pub fn chordality(&self) -> Chordality {
        let order = self.mcs_order();
        if self.is_perfect_elimination_order(&order) {
            Chordality::Chordal(order)
        } else {
            Chordality::NotChordal(
                self.find_long_induced_cycle()
                    .expect("a graph without a perfect elimination order has a long induced cycle"),
            )
        }
    }

    pub fn is_chordal(&self) -> bool {
        self.is_perfect_elimination_order(&self.mcs_order())
    }

    pub fn is_co_chordal(&self) -> bool {
        self.complement().is_chordal()
    }

    /// Two-colouring by BFS; `None` when an odd cycle exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.len();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in self.neighbors(u) {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Split graphs are exactly those with `G` and its complement chordal. The
    /// partition takes the `m` highest-degree vertices as the clique, where
    /// `m = max { i : d_i >= i - 1 }` over the degree sequence sorted downwards.
    pub fn split_partition(&self) -> Option<SplitPartition> {
        if !(self.is_chordal() && self.is_co_chordal()) {
            return None;
        }
        let mut by_degree: Vec<usize> = (0..self.len()).collect();
        by_degree.sort_by(|&a, &b| self.degree(b).cmp(&self.degree(a)).then(a.cmp(&b)));
        let m = (1..=by_degree.len())
            .filter(|&i| self.degree(by_degree[i - 1]) + 1 >= i)
            .max()
            .unwrap_or(0);
        let mut clique = by_degree[..m].to_vec();
        let mut independent = by_degree[m..].to_vec();
        clique.sort_unstable();
        independent.sort_unstable();
        debug_assert!(self.is_clique(&clique) && self.is_independent(&independent));
        Some(SplitPartition {
            clique,
            independent,
        })
    }

    pub fn is_split(&self) -> bool {
        self.split_partition().is_some()
    }

    /// Vertices whose closed neighbourhood is a clique.
    pub fn simplicial_vertices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| {
                let nbrs: Vec<usize> = self.neighbors(v).collect();
                self.is_clique(&nbrs)
            })
            .collect()
    }

    pub fn is_vertex_cover(&self, cover: &[usize]) -> bool {
        let mut inside = vec![false; self.len()];
        for &c in cover {
            inside[c] = true;
        }
        self.edges().all(|(u, v)| inside[u] || inside[v])
    }

    /// A cover is minimal iff every member has a neighbour outside the cover.
    pub fn is_minimal_vertex_cover(&self, cover: &[usize]) -> bool {
        if !self.is_vertex_cover(cover) {
            return false;
        }
        let mut inside = vec![false; self.len()];
        for &c in cover {
            inside[c] = true;
        }
        cover.iter().all(|&c| self.neighbors(c).any(|u| !inside[u]))
    }

    /// Witness `[a, b, c, d]` with `a-b-c-d-a` an induced 4-cycle.
    pub fn induced_four_cycle(&self) -> Option<[usize; 4]> {
        let n = self.len();
        let a = &self.adj;
        for p in 0..n {
            for q in p + 1..n {
                for r in q + 1..n {
                    for s in r + 1..n {
                        // The three ways of arranging {p, q, r, s} as a 4-cycle.
                        for [w, x, y, z] in [[p, q, r, s], [p, q, s, r], [p, r, q, s]] {
                            if a[w][x] && a[x][y] && a[y][z] && a[z][w] && !a[w][y] && !a[x][z] {
                                return Some([w, x, y, z]);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    pub fn has_induced_four_cycle(&self) -> bool {
        self.induced_four_cycle().is_some()
    }

    /// `I(G)`, with vertex `i` as `Var(i)`.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let gens = self
            .edges()
            .map(|(u, v)| Monomial::from_pairs([(Var(u as u32), 1), (Var(v as u32), 1)]))
            .collect();
        MonomialIdeal::in_vars(gens, self.len()).expect("vertex indices are in range")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> SimpleGraph {
        SimpleGraph::numbered(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn complement_involution_and_small_cases() {
        let c5 = SimpleGraph::cycle(5);
        assert_eq!(c5.complement().complement(), c5);
        let cc = c5.complement();
        assert!(cc.is_connected() && (0..5).all(|v| cc.degree(v) == 2));
        // P4 complement is again a path: x2 - x4 - x1 - x3
        let p4c = SimpleGraph::path(4).complement();
        let edges: Vec<_> = p4c.edges().collect();
        assert_eq!(edges, vec![(0, 2), (0, 3), (1, 3)]);
    }

    #[test]
    fn chordality_certificates() {
        match SimpleGraph::cycle(4).chordality() {
            Chordality::NotChordal(c) => assert_eq!(c.len(), 4),
            other => panic!("{other:?}"),
        }
        assert!(SimpleGraph::complete(4).is_chordal());
        let c6 = SimpleGraph::cycle(6);
        assert!(!c6.is_chordal());
        // the complement of C6 is the triangular prism, whose square faces are induced C4s
        match c6.complement().chordality() {
            Chordality::NotChordal(c) => assert_eq!(c.len(), 4),
            other => panic!("{other:?}"),
        }
        if let Chordality::Chordal(order) = SimpleGraph::complete(4).chordality() {
            assert_eq!(order.len(), 4);
        }
    }

    #[test]
    fn class_recognition() {
        let c5 = SimpleGraph::cycle(5);
        assert!(!c5.is_co_chordal() && !c5.is_bipartite() && !c5.is_split());
        let s = star(4);
        assert!(s.is_bipartite() && s.is_split());
        let p = s.split_partition().unwrap();
        assert_eq!(p.clique.len() + p.independent.len(), 5);
        assert!(s.is_clique(&p.clique) && s.is_independent(&p.independent));
    }

    #[test]
    fn simplicial_and_covers() {
        let p3 = SimpleGraph::path(3);
        assert_eq!(p3.simplicial_vertices(), vec![0, 2]);
        assert_eq!(SimpleGraph::complete(5).simplicial_vertices().len(), 5);
        let tri = SimpleGraph::complete(3);
        assert!(tri.is_minimal_vertex_cover(&[0, 1]));
        assert!(!tri.is_minimal_vertex_cover(&[0, 1, 2]));
        assert!(!tri.is_minimal_vertex_cover(&[0]));
    }

    #[test]
    fn induced_subgraphs_and_four_cycles() {
        let c5 = SimpleGraph::cycle(5);
        let p = c5.induced_subgraph(&[1, 2, 3]);
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert!(SimpleGraph::cycle(4).has_induced_four_cycle());
        assert!(!c5.complement().has_induced_four_cycle());
        assert!(!c5.has_induced_four_cycle());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SimpleGraph::numbered(2, [(0, 0)]).is_err());
        assert!(SimpleGraph::numbered(2, [(0, 2)]).is_err());
        assert!(SimpleGraph::new(vec!["a".into(), "a".into()], []).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = SimpleGraph::cycle(5);
        let back = SimpleGraph::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
    }
}
