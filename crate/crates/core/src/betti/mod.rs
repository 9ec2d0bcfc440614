//! Multigraded Betti numbers of monomial ideals.
//!
//! For a multidegree `α` the upper-Koszul complex is
//! `K^α = {F ⊆ supp α : x^α / x^F ∈ I}`, and `β_{i,α}(I)` is the rank of its
//! reduced homology in degree `i - 1`. Only lcm-lattice points can carry
//! nonzero Betti numbers, so those are the only points visited.
//!
//! `K^α` is generated by the facets `T(g) = {j : g_j < α_j}` for the
//! generators `g | α`, which makes simplex and cone detection cheap.

mod linalg;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use linalg::{rank, rank_mod_p, rank_rational};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, Var};

/// Coefficient field for homology ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FieldSpec {
    #[default]
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("prime {p} is too large")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `q` or `fp:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let p = s
            .strip_prefix("fp:")
            .ok_or_else(|| Error::InvalidField(format!("expected q or fp:<p>, got {s:?}")))?;
        let p: u64 = p
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad prime {p:?}")))?;
        FieldSpec::prime(p)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Nonzero multigraded Betti numbers of an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Monomial), usize>,
    ideal: MonomialIdeal,
    field: FieldSpec,
}

/// One row of the JSON dump.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRow {
    pub i: usize,
    pub multidegree: String,
    pub degree: u32,
    pub rank: usize,
}

impl BettiTable {
    pub fn entries(&self) -> &BTreeMap<(usize, Monomial), usize> {
        &self.entries
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, alpha: &Monomial) -> usize {
        self.entries.get(&(i, alpha.clone())).copied().unwrap_or(0)
    }

    /// Graded Betti numbers `β_{i,j}` keyed by `(i, j)`.
    pub fn graded(&self) -> BTreeMap<(usize, u32), usize> {
        let mut out = BTreeMap::new();
        for ((i, a), r) in &self.entries {
            *out.entry((*i, a.degree())).or_insert(0) += r;
        }
        out
    }

    /// Total Betti numbers `β_i`.
    pub fn totals(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for ((i, _), r) in &self.entries {
            if out.len() <= *i {
                out.resize(i + 1, 0);
            }
            out[*i] += r;
        }
        out
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// `max(deg α - i)`; `None` for the zero ideal.
    pub fn regularity(&self) -> Option<u32> {
        self.entries
            .keys()
            .map(|(i, a)| a.degree() - *i as u32)
            .max()
    }

    pub fn rows(&self, render: impl Fn(&Monomial) -> String) -> Vec<BettiRow> {
        self.entries
            .iter()
            .map(|((i, a), r)| BettiRow {
                i: *i,
                multidegree: render(a),
                degree: a.degree(),
                rank: *r,
            })
            .collect()
    }
}

/// Dense exponent view of an ideal restricted to the variables it uses.
struct Dense {
    vars: Vec<Var>,
    gens: Vec<Vec<u32>>,
}

impl Dense {
    fn new(ideal: &MonomialIdeal) -> Self {
        let vars = ideal.used_variables();
        let pos: HashMap<Var, usize> = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let gens = ideal
            .generators()
            .iter()
            .map(|g| {
                let mut row = vec![0; vars.len()];
                for (v, e) in g.pairs() {
                    row[pos[v]] = *e;
                }
                row
            })
            .collect();
        Dense { vars, gens }
    }

    fn monomial(&self, alpha: &[u32]) -> Monomial {
        Monomial::from_pairs(self.vars.iter().copied().zip(alpha.iter().copied()))
    }

    fn lattice(&self) -> Vec<Vec<u32>> {
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut frontier: Vec<Vec<u32>> = Vec::new();
        for g in &self.gens {
            if seen.insert(g.clone()) {
                frontier.push(g.clone());
            }
        }
        let mut all = frontier.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for g in &self.gens {
                    let l: Vec<u32> = p.iter().zip(g).map(|(a, b)| *a.max(b)).collect();
                    if !seen.contains(&l) {
                        seen.insert(l.clone());
                        next.push(l);
                    }
                }
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all.sort();
        all
    }

    /// Nonzero `(i, rank)` pairs at `alpha`.
    fn betti_at(&self, alpha: &[u32], field: FieldSpec) -> Vec<(usize, usize)> {
        let support: Vec<usize> = (0..alpha.len()).filter(|&j| alpha[j] > 0).collect();
        if support.is_empty() {
            // the unit ideal: K is {∅}
            return vec![(0, 1)];
        }
        let full: u64 = if support.len() == 64 {
            u64::MAX
        } else {
            (1u64 << support.len()) - 1
        };
        let mut facets: Vec<u64> = Vec::new();
        for g in &self.gens {
            if g.iter().zip(alpha).any(|(a, b)| a > b) {
                continue;
            }
            let mut t = 0u64;
            for (bit, &j) in support.iter().enumerate() {
                if g[j] < alpha[j] {
                    t |= 1 << bit;
                }
            }
            if t == full {
                return Vec::new();
            }
            facets.push(t);
        }
        facets.sort_unstable();
        facets.dedup();
        let maximal: Vec<u64> = facets
            .iter()
            .copied()
            .filter(|&f| !facets.iter().any(|&h| h != f && h & f == f))
            .collect();
        if maximal.is_empty() {
            return Vec::new();
        }
        let common = maximal.iter().fold(full, |acc, f| acc & f);
        if common != 0 {
            return Vec::new();
        }
        reduced_homology(&maximal, field)
            .into_iter()
            .enumerate()
            .filter(|(_, r)| *r > 0)
            .collect()
    }
}

/// Ranks of reduced homology `H̃_{k-1}` for `k = 0, 1, …` of the complex
/// generated by `facets` (bitmasks). Index `k` is the face size.
fn reduced_homology(facets: &[u64], field: FieldSpec) -> Vec<usize> {
    let mut faces: HashSet<u64> = HashSet::new();
    for &f in facets {
        // all subsets of f
        let mut s = f;
        loop {
            faces.insert(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & f;
        }
    }
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    for level in &mut by_size {
        level.sort_unstable();
    }
    // rank of boundary from size k to size k-1
    let mut bd_rank = vec![0usize; top + 2];
    for k in 1..=top {
        let index: HashMap<u64, usize> = by_size[k - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (*f, i))
            .collect();
        let mut rows = vec![vec![0i64; by_size[k].len()]; by_size[k - 1].len()];
        for (c, &face) in by_size[k].iter().enumerate() {
            let mut rest = face;
            let mut pos = 0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                rows[index[&(face ^ bit)]][c] = sign;
                pos += 1;
            }
        }
        bd_rank[k] = rank(&rows, field);
    }
    (0..=top)
        .map(|k| by_size[k].len() - bd_rank[k] - bd_rank[k + 1])
        .collect()
}

/// All distinct lcms of nonempty sets of minimal generators.
pub fn lcm_lattice_points(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let dense = Dense::new(ideal);
    let mut pts: Vec<Monomial> = dense.lattice().iter().map(|a| dense.monomial(a)).collect();
    pts.sort();
    pts
}

const PARALLEL_THRESHOLD: usize = 64;

type Entry = (usize, Vec<u32>, usize);

enum Scan {
    Complete(Vec<Entry>),
    Exceeded,
}

/// Evaluates every lattice point; with `bound = Some(r)` stops as soon as an
/// entry with `deg α - i > r` appears.
fn scan(ideal: &MonomialIdeal, field: FieldSpec, budget: &Budget, bound: Option<u32>) -> Result<Scan> {
    let dense = Dense::new(ideal);
    if dense.vars.len() > 64 {
        return Err(Error::TooManyVariables(dense.vars.len()));
    }
    let points = dense.lattice();
    let eval = |alpha: &Vec<u32>| -> Result<Option<Vec<Entry>>> {
        budget.check()?;
        let deg: u32 = alpha.iter().sum();
        let found: Vec<_> = dense
            .betti_at(alpha, field)
            .into_iter()
            .map(|(i, r)| (i, alpha.clone(), r))
            .collect();
        if let Some(b) = bound {
            if found.iter().any(|(i, _, _)| deg as i64 - *i as i64 > b as i64) {
                return Ok(None);
            }
        }
        Ok(Some(found))
    };
    let results: Vec<Result<Option<Vec<_>>>> = if points.len() >= PARALLEL_THRESHOLD {
        if bound.is_some() {
            // short-circuit on the first overshoot or error
            let hit = points.par_iter().map(eval).find_any(|r| !matches!(r, Ok(Some(_))));
            match hit {
                Some(Err(e)) => return Err(e),
                Some(Ok(None)) => return Ok(Scan::Exceeded),
                _ => points.par_iter().map(eval).collect(),
            }
        } else {
            points.par_iter().map(eval).collect()
        }
    } else {
        points.iter().map(eval).collect()
    };
    let mut out = Vec::new();
    for r in results {
        match r? {
            Some(v) => out.extend(v),
            None => return Ok(Scan::Exceeded),
        }
    }
    Ok(Scan::Complete(out))
}

/// Errors only when more than 64 variables occur in the generators.
pub fn betti_table(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    betti_table_within(ideal, field, &Budget::unlimited())
}

pub fn betti_table_within(ideal: &MonomialIdeal, field: FieldSpec, budget: &Budget) -> Result<BettiTable> {
    let dense = Dense::new(ideal);
    let entries = match scan(ideal, field, budget, None)? {
        Scan::Complete(v) => v
            .into_iter()
            .map(|(i, a, r)| ((i, dense.monomial(&a)), r))
            .collect(),
        Scan::Exceeded => unreachable!("no bound given"),
    };
    Ok(BettiTable {
        entries,
        ideal: ideal.clone(),
        field,
    })
}

pub fn regularity(ideal: &MonomialIdeal, field: FieldSpec) -> Result<u32> {
    regularity_within(ideal, field, &Budget::unlimited())
}

pub fn regularity_within(ideal: &MonomialIdeal, field: FieldSpec, budget: &Budget) -> Result<u32> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    Ok(betti_table_within(ideal, field, budget)?
        .regularity()
        .expect("nonzero ideal has a generator"))
}

/// True iff an equigenerated ideal has a linear resolution. The zero ideal
/// counts as linear.
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    has_linear_resolution_within(ideal, field, &Budget::unlimited())
}

pub fn has_linear_resolution_within(ideal: &MonomialIdeal, field: FieldSpec, budget: &Budget) -> Result<bool> {
    if ideal.is_zero() {
        return Ok(true);
    }
    if !ideal.is_equigenerated() {
        return Err(Error::NotEquigenerated);
    }
    let d = ideal.min_degree().expect("nonzero");
    Ok(matches!(scan(ideal, field, budget, Some(d))?, Scan::Complete(_)))
}
