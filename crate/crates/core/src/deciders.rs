//! Exact deciders for vertex splittability, linear quotients and
//! componentwise linearity.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::betti::{self, FieldSpec};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::monomial::{minimal_generators, Monomial, MonomialIdeal, Var};

/// Witness that an ideal is vertex splittable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitTree {
    Zero,
    Unit,
    Principal(Monomial),
    /// `I = x·I₁ + I₂`, with `left` for `I₁` and `right` for `I₂`.
    Split {
        variable: Var,
        left: Box<SplitTree>,
        right: Box<SplitTree>,
    },
}

impl SplitTree {
    pub fn depth(&self) -> usize {
        match self {
            SplitTree::Split { left, right, .. } => 1 + left.depth().max(right.depth()),
            _ => 0,
        }
    }

    /// Generators of the ideal this tree describes.
    pub fn generators(&self) -> Vec<Monomial> {
        match self {
            SplitTree::Zero => Vec::new(),
            SplitTree::Unit => vec![Monomial::one()],
            SplitTree::Principal(m) => vec![m.clone()],
            SplitTree::Split {
                variable,
                left,
                right,
            } => {
                let x = Monomial::var(*variable);
                let mut gens: Vec<Monomial> = left.generators().iter().map(|g| g.mul(&x)).collect();
                gens.extend(right.generators());
                minimal_generators(gens)
            }
        }
    }

    /// Checks every split node against the definition, and that the tree
    /// reproduces `ideal`.
    pub fn verify(&self, ideal: &MonomialIdeal) -> bool {
        self.verify_gens(ideal.generators())
    }

    fn verify_gens(&self, gens: &[Monomial]) -> bool {
        match self {
            SplitTree::Zero => gens.is_empty(),
            SplitTree::Unit => gens.len() == 1 && gens[0].is_one(),
            SplitTree::Principal(m) => gens.len() == 1 && &gens[0] == m,
            SplitTree::Split {
                variable,
                left,
                right,
            } => {
                let x = *variable;
                if gens.iter().any(|g| g.exponent(x) > 1) {
                    return false;
                }
                let xm = Monomial::var(x);
                let i1: Vec<Monomial> = minimal_generators(
                    gens.iter()
                        .filter(|g| g.exponent(x) == 1)
                        .map(|g| g.colon(&xm))
                        .collect(),
                );
                let i2: Vec<Monomial> = gens.iter().filter(|g| g.exponent(x) == 0).cloned().collect();
                !i1.is_empty()
                    && i2.iter().all(|g| i1.iter().any(|h| h.divides(g)))
                    && left.verify_gens(&i1)
                    && right.verify_gens(&i2)
            }
        }
    }
}

/// Decides vertex splittability, returning a witness tree when it holds.
pub fn is_vertex_splittable(ideal: &MonomialIdeal) -> Option<SplitTree> {
    is_vertex_splittable_within(ideal, &Budget::unlimited()).expect("unlimited budget")
}

pub fn is_vertex_splittable_within(ideal: &MonomialIdeal, budget: &Budget) -> Result<Option<SplitTree>> {
    let mut memo = HashMap::new();
    vs_rec(ideal.generators().to_vec(), &mut memo, budget)
}

fn vs_rec(
    gens: Vec<Monomial>,
    memo: &mut HashMap<Vec<Monomial>, Option<SplitTree>>,
    budget: &Budget,
) -> Result<Option<SplitTree>> {
    match gens.len() {
        0 => return Ok(Some(SplitTree::Zero)),
        1 if gens[0].is_one() => return Ok(Some(SplitTree::Unit)),
        1 => return Ok(Some(SplitTree::Principal(gens[0].clone()))),
        _ => {}
    }
    if let Some(hit) = memo.get(&gens) {
        return Ok(hit.clone());
    }
    budget.check()?;
    let mut vars: Vec<Var> = gens.iter().flat_map(|g| g.support()).collect();
    vars.sort();
    vars.dedup();
    let mut found = None;
    for x in vars {
        if gens.iter().any(|g| g.exponent(x) > 1) {
            continue;
        }
        let xm = Monomial::var(x);
        let i1 = minimal_generators(
            gens.iter()
                .filter(|g| g.exponent(x) == 1)
                .map(|g| g.colon(&xm))
                .collect(),
        );
        let i2: Vec<Monomial> = gens.iter().filter(|g| g.exponent(x) == 0).cloned().collect();
        if !i2.iter().all(|g| i1.iter().any(|h| h.divides(g))) {
            continue;
        }
        let Some(left) = vs_rec(i1, memo, budget)? else {
            continue;
        };
        let Some(right) = vs_rec(i2, memo, budget)? else {
            continue;
        };
        found = Some(SplitTree::Split {
            variable: x,
            left: Box::new(left),
            right: Box::new(right),
        });
        break;
    }
    memo.insert(gens, found.clone());
    Ok(found)
}

/// A linear-quotient order, as indices into the ideal's generator list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientOrder {
    pub order: Vec<usize>,
}

impl QuotientOrder {
    pub fn monomials<'a>(&'a self, ideal: &'a MonomialIdeal) -> impl Iterator<Item = &'a Monomial> + 'a {
        self.order.iter().map(|&i| &ideal.generators()[i])
    }

    /// Checks the order is a permutation with variable-generated colons.
    pub fn verify(&self, ideal: &MonomialIdeal) -> bool {
        let gens = ideal.generators();
        let mut seen = vec![false; gens.len()];
        for &i in &self.order {
            if i >= gens.len() || seen[i] {
                return false;
            }
            seen[i] = true;
        }
        if seen.iter().any(|s| !s) {
            return false;
        }
        (1..self.order.len()).all(|k| {
            let prefix: Vec<Monomial> = self.order[..k].iter().map(|&i| gens[i].clone()).collect();
            let colon = MonomialIdeal::from_generators(prefix).colon(&gens[self.order[k]]);
            colon.generators().iter().all(|g| g.as_variable().is_some())
        })
    }
}

/// Outcome of a node-limited linear-quotient search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LqSearch {
    Found(QuotientOrder),
    Refuted,
    GaveUp,
}

/// Decides linear quotients by exact search, returning an order when one exists.
pub fn is_linear_quotient(ideal: &MonomialIdeal) -> Option<QuotientOrder> {
    match linear_quotient_search(ideal, None, &Budget::unlimited()).expect("unlimited budget") {
        LqSearch::Found(o) => Some(o),
        _ => None,
    }
}

pub fn is_linear_quotient_within(ideal: &MonomialIdeal, budget: &Budget) -> Result<Option<QuotientOrder>> {
    Ok(match linear_quotient_search(ideal, None, budget)? {
        LqSearch::Found(o) => Some(o),
        _ => None,
    })
}

/// Depth-first search over prefixes. A prefix's fate depends only on its
/// set of generators, so failed sets are memoized. Candidates are tried in
/// generator order, which is degree-nondecreasing.
pub fn linear_quotient_search(ideal: &MonomialIdeal, max_nodes: Option<u64>, budget: &Budget) -> Result<LqSearch> {
    let gens = ideal.generators();
    let m = gens.len();
    if m <= 1 {
        return Ok(LqSearch::Found(QuotientOrder {
            order: (0..m).collect(),
        }));
    }
    let ctx = ColonTable::new(gens);
    let mut search = Search {
        ctx: &ctx,
        m,
        failed: HashSet::new(),
        used: vec![0u64; m.div_ceil(64)],
        order: Vec::with_capacity(m),
        nodes: 0,
        max_nodes,
        budget,
    };
    for first in 0..m {
        search.push(first);
        let r = search.extend()?;
        if !matches!(r, Step::Done) {
            search.pop();
        }
        match r {
            Step::Done => {
                return Ok(LqSearch::Found(QuotientOrder {
                    order: search.order,
                }))
            }
            Step::GaveUp => return Ok(LqSearch::GaveUp),
            Step::Dead => {}
        }
    }
    Ok(LqSearch::Refuted)
}

/// Support masks of `g_h / gcd(g_h, g_u)` for every ordered pair.
struct ColonTable {
    words: usize,
    m: usize,
    masks: Vec<u64>,
    single: Vec<bool>,
}

impl ColonTable {
    fn new(gens: &[Monomial]) -> Self {
        let mut vars: Vec<Var> = gens.iter().flat_map(|g| g.support()).collect();
        vars.sort();
        vars.dedup();
        let pos: HashMap<Var, usize> = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let words = vars.len().div_ceil(64).max(1);
        let m = gens.len();
        let mut masks = vec![0u64; m * m * words];
        let mut single = vec![false; m * m];
        for h in 0..m {
            for u in 0..m {
                if h == u {
                    continue;
                }
                let q = gens[h].colon(&gens[u]);
                single[h * m + u] = q.degree() == 1;
                let base = (h * m + u) * words;
                for v in q.support() {
                    let p = pos[&v];
                    masks[base + p / 64] |= 1 << (p % 64);
                }
            }
        }
        ColonTable {
            words,
            m,
            masks,
            single,
        }
    }

    fn mask(&self, h: usize, u: usize) -> &[u64] {
        let base = (h * self.m + u) * self.words;
        &self.masks[base..base + self.words]
    }

    /// Whether `(prefix) : g_u` is generated by variables.
    fn admits(&self, prefix: &[usize], u: usize) -> bool {
        let mut vars = vec![0u64; self.words];
        for &h in prefix {
            if self.single[h * self.m + u] {
                for (a, b) in vars.iter_mut().zip(self.mask(h, u)) {
                    *a |= b;
                }
            }
        }
        prefix
            .iter()
            .all(|&h| self.mask(h, u).iter().zip(&vars).any(|(a, b)| a & b != 0))
    }
}

enum Step {
    Done,
    Dead,
    GaveUp,
}

struct Search<'a> {
    ctx: &'a ColonTable,
    m: usize,
    failed: HashSet<Vec<u64>>,
    used: Vec<u64>,
    order: Vec<usize>,
    nodes: u64,
    max_nodes: Option<u64>,
    budget: &'a Budget,
}

impl Search<'_> {
    fn push(&mut self, i: usize) {
        self.used[i / 64] |= 1 << (i % 64);
        self.order.push(i);
    }

    fn pop(&mut self) {
        if let Some(i) = self.order.pop() {
            self.used[i / 64] &= !(1 << (i % 64));
        }
    }

    fn is_used(&self, i: usize) -> bool {
        self.used[i / 64] >> (i % 64) & 1 == 1
    }

    fn extend(&mut self) -> Result<Step> {
        if self.order.len() == self.m {
            return Ok(Step::Done);
        }
        if self.failed.contains(&self.used) {
            return Ok(Step::Dead);
        }
        self.nodes += 1;
        if self.max_nodes.is_some_and(|cap| self.nodes > cap) {
            return Ok(Step::GaveUp);
        }
        if self.nodes.is_multiple_of(1024) {
            self.budget.check()?;
        }
        for u in 0..self.m {
            if self.is_used(u) || !self.ctx.admits(&self.order, u) {
                continue;
            }
            self.push(u);
            let r = self.extend()?;
            if matches!(r, Step::Done) {
                return Ok(r);
            }
            self.pop();
            if matches!(r, Step::GaveUp) {
                return Ok(r);
            }
        }
        self.failed.insert(self.used.clone());
        Ok(Step::Dead)
    }
}

/// How one degree component was settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LinearityMethod {
    LinearQuotients,
    BettiNumbers,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub degree: u32,
    pub generators: usize,
    pub linear: bool,
    pub method: LinearityMethod,
}

/// Per-degree outcome of the componentwise-linearity test. Checking stops at
/// the first component without a linear resolution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentwiseReport {
    pub linear: bool,
    pub degrees: Vec<DegreeCheck>,
}

/// Search nodes per generator spent on the linear-quotient shortcut before
/// falling back to Betti numbers.
const COMPONENT_LQ_NODES_PER_GENERATOR: u64 = 4;

/// Tests every degree component from the minimal to the maximal generator
/// degree. The zero ideal counts as componentwise linear.
pub fn is_componentwise_linear(ideal: &MonomialIdeal, field: FieldSpec) -> Result<ComponentwiseReport> {
    is_componentwise_linear_within(ideal, field, &Budget::unlimited())
}

pub fn is_componentwise_linear_within(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    budget: &Budget,
) -> Result<ComponentwiseReport> {
    let mut report = ComponentwiseReport {
        linear: true,
        degrees: Vec::new(),
    };
    let (Some(lo), Some(hi)) = (ideal.min_degree(), ideal.max_degree()) else {
        return Ok(report);
    };
    for d in lo..=hi {
        budget.check()?;
        let comp = ideal.component(d);
        if comp.is_zero() {
            continue;
        }
        let (linear, method) = component_is_linear(&comp, field, budget)?;
        report.degrees.push(DegreeCheck {
            degree: d,
            generators: comp.num_generators(),
            linear,
            method,
        });
        if !linear {
            report.linear = false;
            break;
        }
    }
    Ok(report)
}

fn component_is_linear(comp: &MonomialIdeal, field: FieldSpec, budget: &Budget) -> Result<(bool, LinearityMethod)> {
    if let LqSearch::Found(_) = linear_quotient_search(comp, Some(COMPONENT_LQ_NODES_PER_GENERATOR * comp.num_generators() as u64), budget)? {
        return Ok((true, LinearityMethod::LinearQuotients));
    }
    let linear = betti::has_linear_resolution_within(comp, field, budget)?;
    Ok((linear, LinearityMethod::BettiNumbers))
}

/// A proven implication that failed, which can only be a bug.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ImplicationViolation {
    SplittableWithoutQuotients,
    QuotientsWithoutComponentwise,
    RegularityAboveMaxDegree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckAll {
    pub cl: ComponentwiseReport,
    pub lq: Option<QuotientOrder>,
    pub vs: Option<SplitTree>,
    /// `None` for the zero ideal.
    pub regularity: Option<u32>,
    pub max_gen_degree: Option<u32>,
    pub implication_violation: Option<ImplicationViolation>,
}

impl CheckAll {
    pub fn is_cl(&self) -> bool {
        self.cl.linear
    }

    pub fn is_lq(&self) -> bool {
        self.lq.is_some()
    }

    pub fn is_vs(&self) -> bool {
        self.vs.is_some()
    }

    /// All three properties agree.
    pub fn conjecture_consistent(&self) -> bool {
        self.is_cl() == self.is_lq() && self.is_lq() == self.is_vs()
    }

    /// Componentwise linear but missing linear quotients or splittability.
    pub fn is_counterexample(&self) -> bool {
        self.is_cl() && !(self.is_lq() && self.is_vs())
    }
}

pub fn check_all(ideal: &MonomialIdeal, field: FieldSpec) -> Result<CheckAll> {
    check_all_within(ideal, field, &Budget::unlimited())
}

pub fn check_all_within(ideal: &MonomialIdeal, field: FieldSpec, budget: &Budget) -> Result<CheckAll> {
    let cl = is_componentwise_linear_within(ideal, field, budget)?;
    let lq = is_linear_quotient_within(ideal, budget)?;
    let vs = is_vertex_splittable_within(ideal, budget)?;
    let regularity = regularity_or_none(ideal, field, budget)?;
    Ok(CheckAll::assemble(ideal, cl, lq, vs, regularity))
}

/// Regularity, with `None` for the zero ideal.
pub fn regularity_or_none(ideal: &MonomialIdeal, field: FieldSpec, budget: &Budget) -> Result<Option<u32>> {
    match betti::regularity_within(ideal, field, budget) {
        Ok(r) => Ok(Some(r)),
        Err(Error::ZeroIdeal) => Ok(None),
        Err(e) => Err(e),
    }
}

impl CheckAll {
    /// Combines separately computed decider results and checks the proven
    /// implications between them.
    pub fn assemble(
        ideal: &MonomialIdeal,
        cl: ComponentwiseReport,
        lq: Option<QuotientOrder>,
        vs: Option<SplitTree>,
        regularity: Option<u32>,
    ) -> CheckAll {
        let max_gen_degree = ideal.max_degree();
        let implication_violation = if vs.is_some() && lq.is_none() {
            Some(ImplicationViolation::SplittableWithoutQuotients)
        } else if lq.is_some() && !cl.linear {
            Some(ImplicationViolation::QuotientsWithoutComponentwise)
        } else if cl.linear && regularity != max_gen_degree {
            Some(ImplicationViolation::RegularityAboveMaxDegree)
        } else {
            None
        };
        if let Some(v) = implication_violation {
            log::error!("implication violated ({v:?}) for {ideal}");
        }
        CheckAll {
            cl,
            lq,
            vs,
            regularity,
            max_gen_degree,
            implication_violation,
        }
    }
}
