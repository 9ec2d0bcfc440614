//! Weighted oriented graphs and their edge ideals.
//!
//! Input forms:
//!
//! * JSON: `{"vertices": [{"id": "x1", "weight": 1}, ...], "arcs": [["x1", "x2"], ...]}`
//! * text: one statement per line, `#` comments allowed:
//!
//! ```text
//! x1 -> x2
//! x1 -> x4
//! weight x4 = 2
//! vertex x7          # declares an isolated vertex
//! ```
//!
//! Vertices take their order from first appearance. Weights default to 1,
//! and every source (in-degree 0) is normalized to weight 1 on construction
//! since its weight never enters the edge ideal.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::monomial::{Monomial, MonomialIdeal, NamedIdeal, Var, VarNames};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedOrientedGraph {
    names: Vec<String>,
    weights: Vec<u32>,
    arcs: BTreeSet<(usize, usize)>,
}

/// The four three-vertex induced configurations that rule out componentwise
/// linearity. Roles are reported as `[a, b, c]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ForbiddenKind {
    /// Directed path `a -> b -> c`, `a`, `c` non-adjacent, `w(b), w(c) > 1`.
    D1,
    /// Out-fork `b -> a`, `b -> c`, `a`, `c` non-adjacent, `w(a), w(c) > 1`.
    D2,
    /// Directed triangle `a -> b -> c -> a` with all weights `> 1`.
    D3,
    /// Transitive triangle `a -> b`, `c -> b`, `a -> c`, `w(b), w(c) > 1`.
    D4,
}

impl fmt::Display for ForbiddenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ForbiddenMatch {
    pub kind: ForbiddenKind,
    pub vertices: [usize; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: String,
    #[serde(default = "one")]
    pub weight: u32,
}

fn one() -> u32 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientedGraphJson {
    pub vertices: Vec<VertexJson>,
    pub arcs: Vec<[String; 2]>,
}

impl WeightedOrientedGraph {
    pub fn new(
        names: Vec<String>,
        weights: Vec<u32>,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = names.len();
        if weights.len() != n {
            return Err(Error::InvalidGraph(format!(
                "{} weights for {n} vertices",
                weights.len()
            )));
        }
        let mut seen = HashMap::new();
        for name in &names {
            if seen.insert(name.as_str(), ()).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex '{name}'")));
            }
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidGraph(format!("vertex '{}' has weight 0", names[i])));
        }
        let mut set = BTreeSet::new();
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("arc ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at '{}'", names[u])));
            }
            if set.contains(&(v, u)) {
                return Err(Error::InvalidGraph(format!(
                    "anti-parallel arcs between '{}' and '{}'",
                    names[u], names[v]
                )));
            }
            if !set.insert((u, v)) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate arc '{}' -> '{}'",
                    names[u], names[v]
                )));
            }
        }
        let mut g = WeightedOrientedGraph {
            names,
            weights,
            arcs: set,
        };
        for v in 0..n {
            if g.in_degree(v) == 0 {
                g.weights[v] = 1;
            }
        }
        Ok(g)
    }

    /// Vertices named `x1, ..., xn`.
    pub fn numbered(
        weights: Vec<u32>,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let names = (1..=weights.len()).map(|i| format!("x{i}")).collect();
        Self::new(names, weights, arcs)
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

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn max_weight(&self) -> u32 {
        self.weights.iter().copied().max().unwrap_or(1)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        self.arcs.iter().filter(|a| a.0 == v).map(|a| a.1).collect()
    }

    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        self.arcs.iter().filter(|a| a.1 == v).map(|a| a.0).collect()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.1 == v).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.0 == v).count()
    }

    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph::new(self.names.clone(), self.arcs()).expect("arcs were validated")
    }

    /// Vertices of weight greater than one.
    pub fn v_plus(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.weights[v] > 1).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.out_degree(v) == 0).collect()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.in_degree(v) == 0).collect()
    }

    pub fn v_plus_are_sinks(&self) -> bool {
        self.v_plus().into_iter().all(|v| self.out_degree(v) == 0)
    }

    /// `D[A]` in the order of `vs`, with source weights re-normalized.
    pub fn induced(&self, vs: &[usize]) -> WeightedOrientedGraph {
        let pos: HashMap<usize, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let arcs: Vec<(usize, usize)> = self
            .arcs()
            .filter_map(|(u, v)| Some((*pos.get(&u)?, *pos.get(&v)?)))
            .collect();
        WeightedOrientedGraph::new(
            vs.iter().map(|&v| self.names[v].clone()).collect(),
            vs.iter().map(|&v| self.weights[v]).collect(),
            arcs,
        )
        .expect("restriction of a valid graph")
    }

    /// Same graph with the weight of `v` replaced (then re-normalized).
    pub fn with_weight(&self, v: usize, w: u32) -> Result<WeightedOrientedGraph> {
        let mut weights = self.weights.clone();
        weights[v] = w;
        WeightedOrientedGraph::new(self.names.clone(), weights, self.arcs())
    }

    /// `I(D)`: one generator `x_i x_j^{w(x_j)}` per arc `(x_i, x_j)`; vertex `i`
    /// is `Var(i)` and the ambient ring has one variable per vertex.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let gens = self
            .arcs()
            .map(|(u, v)| {
                Monomial::from_pairs([(Var(u as u32), 1), (Var(v as u32), self.weights[v])])
            })
            .collect();
        MonomialIdeal::in_vars(gens, self.len()).expect("vertex indices are in range")
    }

    pub fn var_names(&self) -> VarNames {
        VarNames::new(self.names.iter().cloned())
    }

    pub fn named_edge_ideal(&self) -> NamedIdeal {
        NamedIdeal {
            ideal: self.edge_ideal(),
            names: self.var_names(),
        }
    }

    /// The graph `H` with `I(H)` equal to the degree-two component of `I(D)`:
    /// the arcs whose target has weight one.
    pub fn quadratic_part_graph(&self) -> SimpleGraph {
        SimpleGraph::new(
            self.names.clone(),
            self.arcs().filter(|&(_, v)| self.weights[v] == 1),
        )
        .expect("subset of valid arcs")
    }

    fn arcs_among(&self, t: [usize; 3]) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for &u in &t {
            for &v in &t {
                if self.has_arc(u, v) {
                    out.insert((u, v));
                }
            }
        }
        out
    }

    /// Every vertex triple inducing one of the [`ForbiddenKind`] configurations.
    pub fn forbidden_configurations(&self) -> Vec<ForbiddenMatch> {
        let n = self.len();
        let heavy = |v: usize| self.weights[v] > 1;
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let present = self.arcs_among([a, b, c]);
                    if present.len() < 2 {
                        continue;
                    }
                    let want = |pairs: &[(usize, usize)]| {
                        pairs.len() == present.len() && pairs.iter().all(|p| present.contains(p))
                    };
                    let perms = [
                        [a, b, c],
                        [a, c, b],
                        [b, a, c],
                        [b, c, a],
                        [c, a, b],
                        [c, b, a],
                    ];
                    let found = perms.iter().find_map(|&[p, q, r]| {
                        if want(&[(p, q), (q, r)]) && heavy(q) && heavy(r) {
                            Some((ForbiddenKind::D1, [p, q, r]))
                        } else if p < r && want(&[(q, p), (q, r)]) && heavy(p) && heavy(r) {
                            Some((ForbiddenKind::D2, [p, q, r]))
                        } else if p < q
                            && p < r
                            && want(&[(p, q), (q, r), (r, p)])
                            && heavy(p)
                            && heavy(q)
                            && heavy(r)
                        {
                            Some((ForbiddenKind::D3, [p, q, r]))
                        } else if want(&[(p, q), (r, q), (p, r)]) && heavy(q) && heavy(r) {
                            Some((ForbiddenKind::D4, [p, q, r]))
                        } else {
                            None
                        }
                    });
                    if let Some((kind, vertices)) = found {
                        out.push(ForbiddenMatch { kind, vertices });
                    }
                }
            }
        }
        out
    }

    /// `Some(root)` when every arc points at one common vertex. A graph without
    /// arcs counts as a degenerate star, reported as `Some(None)`.
    pub fn star_root(&self) -> Option<Option<usize>> {
        let mut arcs = self.arcs();
        match arcs.next() {
            None => Some(None),
            Some((_, r)) => arcs.all(|(_, t)| t == r).then_some(Some(r)),
        }
    }

    pub fn is_star_all_to_root(&self) -> bool {
        self.star_root().is_some()
    }

    pub fn to_json(&self) -> OrientedGraphJson {
        OrientedGraphJson {
            vertices: self
                .names
                .iter()
                .zip(&self.weights)
                .map(|(id, &weight)| VertexJson {
                    id: id.clone(),
                    weight,
                })
                .collect(),
            arcs: self
                .arcs()
                .map(|(u, v)| [self.names[u].clone(), self.names[v].clone()])
                .collect(),
        }
    }

    pub fn from_json(g: &OrientedGraphJson) -> Result<Self> {
        let names: Vec<String> = g.vertices.iter().map(|v| v.id.clone()).collect();
        let index: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::InvalidGraph(format!("arc mentions unknown vertex '{name}'")))
        };
        let arcs = g
            .arcs
            .iter()
            .map(|[a, b]| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(names, g.vertices.iter().map(|v| v.weight).collect(), arcs)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for name in &self.names {
            out.push_str(&format!("vertex {name}\n"));
        }
        for (u, v) in self.arcs() {
            out.push_str(&format!("{} -> {}\n", self.names[u], self.names[v]));
        }
        for v in self.v_plus() {
            out.push_str(&format!("weight {} = {}\n", self.names[v], self.weights[v]));
        }
        out
    }
}

/// JSON when the input starts with `{`, the line format otherwise.
pub fn parse_oriented_graph(input: &str) -> Result<WeightedOrientedGraph> {
    if input.trim_start().starts_with('{') {
        let g: OrientedGraphJson = serde_json::from_str(input)
            .map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
        WeightedOrientedGraph::from_json(&g)
    } else {
        parse_oriented_text(input)
    }
}

fn valid_id(s: &str) -> bool {
    let mut chars = s.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_oriented_text(input: &str) -> Result<WeightedOrientedGraph> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut weights: Vec<Option<u32>> = Vec::new();
    let mut arcs = Vec::new();

    let mut intern = |name: &str, names: &mut Vec<String>, weights: &mut Vec<Option<u32>>| {
        *index.entry(name.to_string()).or_insert_with(|| {
            names.push(name.to_string());
            weights.push(None);
            names.len() - 1
        })
    };

    for (i, raw) in input.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let col_of = |needle: &str| raw.find(needle).map_or(1, |p| p + 1);
        let trimmed = line.trim();
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let check_id = |tok: &str| {
            if valid_id(tok) {
                Ok(())
            } else {
                Err(Error::parse(lineno, col_of(tok), format!("invalid vertex name '{tok}'")))
            }
        };
        match tokens.as_slice() {
            ["vertex", v] => {
                check_id(v)?;
                intern(v, &mut names, &mut weights);
            }
            ["weight", v, "=", w] => {
                check_id(v)?;
                let w: u32 = w.parse().map_err(|_| {
                    Error::parse(lineno, col_of(w), format!("invalid weight '{w}'"))
                })?;
                if w == 0 {
                    return Err(Error::parse(lineno, col_of("="), "weights must be positive"));
                }
                let id = intern(v, &mut names, &mut weights);
                if weights[id].replace(w).is_some() {
                    return Err(Error::parse(lineno, col_of(v), format!("weight of '{v}' set twice")));
                }
            }
            _ => {
                let Some((lhs, rhs)) = trimmed.split_once("->") else {
                    return Err(Error::parse(
                        lineno,
                        raw.len() - raw.trim_start().len() + 1,
                        "expected 'u -> v', 'weight v = w' or 'vertex v'",
                    ));
                };
                let (lhs, rhs) = (lhs.trim(), rhs.trim());
                check_id(lhs)?;
                if rhs.is_empty() {
                    return Err(Error::parse(lineno, raw.len() + 1, "missing arc target"));
                }
                check_id(rhs)?;
                let u = intern(lhs, &mut names, &mut weights);
                let v = intern(rhs, &mut names, &mut weights);
                arcs.push((u, v, lineno));
            }
        }
    }
    let weights: Vec<u32> = weights.into_iter().map(|w| w.unwrap_or(1)).collect();
    // Structural errors are reported against the line that introduced them.
    let mut seen = BTreeSet::new();
    for &(u, v, line) in &arcs {
        if u == v || seen.contains(&(u, v)) || seen.contains(&(v, u)) {
            let msg = WeightedOrientedGraph::new(
                names.clone(),
                weights.clone(),
                seen.iter().copied().chain([(u, v)]),
            )
            .err()
            .map_or_else(|| "invalid arc".to_string(), |e| e.to_string());
            return Err(Error::parse(line, 1, msg));
        }
        seen.insert((u, v));
    }
    WeightedOrientedGraph::new(names, weights, arcs.into_iter().map(|(u, v, _)| (u, v)))
}
