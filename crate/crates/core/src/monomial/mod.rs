//! Exact monomial and monomial-ideal algebra.
//!
//! A [`Monomial`] is a sparse exponent vector over [`Var`] indices. A
//! [`MonomialIdeal`] always holds its minimal generating set in canonical
//! order (total degree, then lex with `x0 > x1 > ...`), so two ideals are
//! equal exactly when their representations are equal.

mod format;

pub use format::{parse_ideal, parse_ideal_json, parse_ideal_text, NamedIdeal, VarNames};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a polynomial ring variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Var(pub u32);

impl Var {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// A monomial `x^a`, stored as `(variable, exponent)` pairs sorted by variable
/// with no zero exponents. The unit monomial has no pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: Var) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        Self::from_pairs([(v, e)])
    }

    /// Builds a monomial from arbitrary pairs; repeated variables multiply.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0u32) += e;
        }
        Monomial {
            exps: map.into_iter().filter(|&(_, e)| e > 0).collect(),
        }
    }

    /// Dense exponent vector, position `i` is the exponent of `Var(i)`.
    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial {
            exps: exps
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(i, &e)| (Var(i as u32), e))
                .collect(),
        }
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        match self.exps.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => self.exps[i].1,
            Err(_) => 0,
        }
    }

    pub fn support(&self) -> impl Iterator<Item = Var> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    /// `Some(x)` when the monomial is the single variable `x`.
    pub fn as_variable(&self) -> Option<Var> {
        match self.exps.as_slice() {
            [(v, 1)] => Some(*v),
            _ => None,
        }
    }

    /// Product of the support variables, i.e. the radical of `(self)`.
    pub fn support_product(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(v, _)| (v, 1)).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < v {
                j += 1;
            }
            match other.exps.get(j) {
                Some(&(w, f)) if w == v && f >= e => j += 1,
                _ => return false,
            }
        }
        true
    }

    fn merge(&self, other: &Monomial, op: impl Fn(u32, u32) -> u32) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let (v, e) = match (a.get(i), b.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        i += 1;
                        (va, op(ea, 0))
                    }
                    Ordering::Greater => {
                        j += 1;
                        (vb, op(0, eb))
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (va, op(ea, eb))
                    }
                },
                (Some(&(va, ea)), None) => {
                    i += 1;
                    (va, op(ea, 0))
                }
                (None, Some(&(vb, eb))) => {
                    j += 1;
                    (vb, op(0, eb))
                }
                (None, None) => unreachable!(),
            };
            if e > 0 {
                out.push((v, e));
            }
        }
        Monomial { exps: out }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::min)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.gcd(other).is_one()
    }

    /// `self / gcd(self, other)`: the generator contributed to a colon ideal.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a.saturating_sub(b))
    }

    /// Exact quotient, `None` unless `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.colon(other))
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: if k == 0 {
                Vec::new()
            } else {
                self.exps.iter().map(|&(v, e)| (v, e * k)).collect()
            },
        }
    }

    pub fn max_var(&self) -> Option<Var> {
        self.exps.last().map(|&(v, _)| v)
    }

    /// Lexicographic comparison with `x0 > x1 > ...`; larger monomials sort first.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        for (&(va, ea), &(vb, eb)) in self.exps.iter().zip(&other.exps) {
            if va != vb {
                return va.cmp(&vb);
            }
            if ea != eb {
                return eb.cmp(&ea);
            }
        }
        other.exps.len().cmp(&self.exps.len())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (i, &(v, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Keeps the divisibility-minimal elements, sorted canonically and deduplicated.
pub fn minimal_generators(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // Sorted by degree, so only earlier elements can divide `g`.
        if !kept.iter().any(|h| h.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// Result of the semi-gcd scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemiGcd {
    Holds,
    /// A coprime generator pair with no third generator supported in their union.
    Violated(Monomial, Monomial),
}

impl SemiGcd {
    pub fn holds(&self) -> bool {
        matches!(self, SemiGcd::Holds)
    }
}

/// Squarefree lift of an ideal. Variable `Var(k)` of the polarized ring stands
/// for slot `origin[k].1` (starting at 1) of the original variable `origin[k].0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    pub origin: Vec<(Var, u32)>,
}

/// A monomial ideal given by its canonical minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
    ambient: Vec<Var>,
}

impl MonomialIdeal {
    /// Minimalizes `gens` inside the ring on `ambient`.
    pub fn new(gens: Vec<Monomial>, ambient: impl IntoIterator<Item = Var>) -> Result<Self> {
        let mut ambient: Vec<Var> = ambient.into_iter().collect();
        ambient.sort();
        ambient.dedup();
        for g in &gens {
            if let Some(v) = g.support().find(|v| ambient.binary_search(v).is_err()) {
                return Err(Error::UnknownVariable(v.to_string()));
            }
        }
        Ok(MonomialIdeal {
            gens: minimal_generators(gens),
            ambient,
        })
    }

    /// Ambient ring is the set of variables that occur in `gens`.
    pub fn from_generators(gens: Vec<Monomial>) -> Self {
        let ambient: Vec<Var> = gens.iter().flat_map(|g| g.support()).collect();
        Self::new(gens, ambient).expect("ambient covers every generator")
    }

    /// Ring `K[Var(0), ..., Var(n-1)]`.
    pub fn in_vars(gens: Vec<Monomial>, n: usize) -> Result<Self> {
        Self::new(gens, (0..n as u32).map(Var))
    }

    pub fn zero(ambient: impl IntoIterator<Item = Var>) -> Self {
        Self::new(Vec::new(), ambient).expect("no generators to check")
    }

    pub fn unit(ambient: impl IntoIterator<Item = Var>) -> Self {
        Self::new(vec![Monomial::one()], ambient).expect("unit has no variables")
    }

    fn with_gens(&self, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            gens: minimal_generators(gens),
            ambient: self.ambient.clone(),
        }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn ambient(&self) -> &[Var] {
        &self.ambient
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.first().map(Monomial::degree)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.last().map(Monomial::degree)
    }

    pub fn is_equigenerated(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// Variables occurring in some generator, ascending.
    pub fn used_variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.gens.iter().flat_map(|g| g.support()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Same generators, ambient shrunk to the variables actually used.
    pub fn trimmed(&self) -> Self {
        MonomialIdeal {
            gens: self.gens.clone(),
            ambient: self.used_variables(),
        }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// `(I : u)`, generated by `g / gcd(g, u)`.
    pub fn colon(&self, u: &Monomial) -> Self {
        self.with_gens(self.gens.iter().map(|g| g.colon(u)).collect())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(self.with_gens(self.gens.iter().chain(&other.gens).cloned().collect()))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.mul(h));
            }
        }
        Ok(self.with_gens(gens))
    }

    /// `I^k` for `k >= 1`; `I^0` is the unit ideal.
    pub fn power(&self, k: u32) -> Self {
        let mut acc = MonomialIdeal::unit(self.ambient.iter().copied());
        for _ in 0..k {
            acc = acc.product(self).expect("same ambient");
        }
        acc
    }

    /// `I_<d>`: the ideal generated by the degree-`d` monomials of `I`.
    ///
    /// Expands every generator of degree `<= d` by all monomials of the
    /// complementary degree, `C(n + d - 1, d)` candidates at worst.
    pub fn component(&self, d: u32) -> Self {
        let mut gens = Vec::new();
        for g in self.gens.iter().filter(|g| g.degree() <= d) {
            let rest = d - g.degree();
            for_each_monomial_of_degree(&self.ambient, rest, &mut |m| gens.push(g.mul(m)));
        }
        self.with_gens(gens)
    }

    pub fn polarize(&self) -> Polarization {
        let mut top: BTreeMap<Var, u32> = BTreeMap::new();
        for g in &self.gens {
            for &(v, e) in g.pairs() {
                let t = top.entry(v).or_insert(0);
                *t = (*t).max(e);
            }
        }
        let mut origin = Vec::new();
        let mut first_slot = BTreeMap::new();
        for (&v, &a) in &top {
            first_slot.insert(v, origin.len() as u32);
            origin.extend((1..=a).map(|s| (v, s)));
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                Monomial::from_pairs(g.pairs().iter().flat_map(|&(v, e)| {
                    let base = first_slot[&v];
                    (0..e).map(move |s| (Var(base + s), 1))
                }))
            })
            .collect();
        let ideal = MonomialIdeal::new(gens, (0..origin.len() as u32).map(Var))
            .expect("polarized variables are in range");
        Polarization { ideal, origin }
    }

    /// Semi-gcd scan. Fails with [`Error::VariableGenerator`] when some generator
    /// is a single variable, where the condition is not meant to apply.
    pub fn semi_gcd_condition(&self) -> Result<SemiGcd> {
        if let Some(g) = self.gens.iter().find(|g| g.as_variable().is_some()) {
            return Err(Error::VariableGenerator(g.to_string()));
        }
        for (i, u) in self.gens.iter().enumerate() {
            for v in &self.gens[i + 1..] {
                if !u.is_coprime(v) {
                    continue;
                }
                let union = u.lcm(v).support_product();
                let witnessed = self
                    .gens
                    .iter()
                    .any(|w| w != u && w != v && w.support_product().divides(&union));
                if !witnessed {
                    return Ok(SemiGcd::Violated(u.clone(), v.clone()));
                }
            }
        }
        Ok(SemiGcd::Holds)
    }

    /// The ideal on the generators not divisible by `x`.
    pub fn drop_divisible_by(&self, x: Var) -> Result<Self> {
        if self.ambient.binary_search(&x).is_err() {
            return Err(Error::UnknownVariable(x.to_string()));
        }
        Ok(MonomialIdeal {
            gens: self
                .gens
                .iter()
                .filter(|g| g.exponent(x) == 0)
                .cloned()
                .collect(),
            ambient: self.ambient.clone(),
        })
    }

    pub fn radical(&self) -> Self {
        self.with_gens(self.gens.iter().map(Monomial::support_product).collect())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Calls `f` on every monomial of total degree `d` in `vars`.
pub fn for_each_monomial_of_degree(vars: &[Var], d: u32, f: &mut impl FnMut(&Monomial)) {
    fn rec(
        vars: &[Var],
        left: u32,
        acc: &mut Vec<(Var, u32)>,
        f: &mut impl FnMut(&Monomial),
    ) {
        match vars {
            [] => {
                if left == 0 {
                    f(&Monomial { exps: acc.clone() });
                }
            }
            [v, rest @ ..] => {
                for e in (0..=left).rev() {
                    if e > 0 {
                        acc.push((*v, e));
                    }
                    rec(rest, left - e, acc, f);
                    if e > 0 {
                        acc.pop();
                    }
                }
            }
        }
    }
    rec(vars, d, &mut Vec::new(), f);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(u32, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().map(|&(v, e)| (Var(v), e)))
    }

    fn ideal(gens: &[&[(u32, u32)]], n: usize) -> MonomialIdeal {
        MonomialIdeal::in_vars(gens.iter().map(|g| m(g)).collect(), n).unwrap()
    }

    fn edge_ideal_c5() -> MonomialIdeal {
        ideal(
            &[
                &[(0, 1), (1, 1)],
                &[(1, 1), (2, 1)],
                &[(2, 1), (3, 1)],
                &[(3, 1), (4, 1)],
                &[(4, 1), (0, 1)],
            ],
            5,
        )
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = ideal(&[&[(0, 1), (1, 1)], &[(0, 1), (1, 1), (2, 1)]], 3);
        assert_eq!(i.generators(), &[m(&[(0, 1), (1, 1)])]);
        assert!(ideal(&[], 3).is_zero());
    }

    #[test]
    fn minimalize_mixed_degrees() {
        // x2*x1^4, x2*x3, x1*x3, x2*x1^4*x3 (vars x1..x3 -> 0..2)
        let i = ideal(
            &[
                &[(1, 1), (0, 4)],
                &[(1, 1), (2, 1)],
                &[(0, 1), (2, 1)],
                &[(1, 1), (0, 4), (2, 1)],
            ],
            3,
        );
        assert_eq!(
            i.generators(),
            &[m(&[(0, 1), (2, 1)]), m(&[(1, 1), (2, 1)]), m(&[(0, 4), (1, 1)])]
        );
    }

    #[test]
    fn unknown_variable_is_rejected() {
        let err = MonomialIdeal::in_vars(vec![m(&[(5, 1)])], 3).unwrap_err();
        assert!(matches!(err, Error::UnknownVariable(_)));
    }

    #[test]
    fn canonical_order() {
        let a = m(&[(0, 1), (1, 1)]);
        let b = m(&[(0, 1), (2, 1)]);
        let c = m(&[(1, 1), (2, 1)]);
        let d = m(&[(0, 2)]);
        assert!(d < a && a < b && b < c);
        assert!(m(&[(0, 1)]) < a);
    }

    #[test]
    fn colon_examples() {
        // (x1 x2^w, x3 x2^w, x1 x3^w) : x2^w = (x1, x3), with w = 3
        let i = ideal(&[&[(0, 1), (1, 3)], &[(2, 1), (1, 3)], &[(0, 1), (2, 3)]], 3);
        let c = i.colon(&m(&[(1, 3)]));
        assert_eq!(c, ideal(&[&[(0, 1)], &[(2, 1)]], 3));
        assert_eq!(i.colon(&Monomial::one()), i);
        let j = ideal(&[&[(0, 1), (1, 1)], &[(1, 1), (2, 1)]], 3);
        assert_eq!(j.colon(&m(&[(1, 1)])), ideal(&[&[(0, 1)], &[(2, 1)]], 3));
    }

    #[test]
    fn sum_product_power() {
        let x1 = ideal(&[&[(0, 1)]], 2);
        let x2 = ideal(&[&[(1, 1)]], 2);
        assert_eq!(x1.sum(&x2).unwrap(), ideal(&[&[(0, 1)], &[(1, 1)]], 2));
        let unit = MonomialIdeal::unit((0..2).map(Var));
        assert_eq!(x1.product(&unit).unwrap(), x1);
        let c5sq = edge_ideal_c5().power(2);
        assert_eq!(c5sq.num_generators(), 15);
        assert!(c5sq.generators().iter().all(|g| g.degree() == 4));
        let other = ideal(&[&[(0, 1)]], 3);
        assert_eq!(x1.sum(&other), Err(Error::AmbientMismatch));
    }

    #[test]
    fn component_ideals() {
        // I = (x1 x2, x2 x5^4) in 5 variables
        let i = ideal(&[&[(0, 1), (1, 1)], &[(1, 1), (4, 4)]], 5);
        assert_eq!(i.component(2), ideal(&[&[(0, 1), (1, 1)]], 5));
        assert!(i.component(1).is_zero());
        let c5 = i.component(5);
        // direct expansion: x1x2 * (all 35 cubics) plus x2x5^4 * x_i, minimalized
        let mut brute = Vec::new();
        for_each_monomial_of_degree(&(0..5).map(Var).collect::<Vec<_>>(), 5, &mut |mm| {
            if i.contains(mm) {
                brute.push(mm.clone());
            }
        });
        assert_eq!(c5.generators().len(), brute.len());
        assert!(c5.generators().iter().all(|g| g.degree() == 5 && i.contains(g)));
    }

    #[test]
    fn polarization() {
        // x1 x4^2 -> x(1,1) x(4,1) x(4,2)
        let i = ideal(&[&[(0, 1), (3, 2)]], 4);
        let p = i.polarize();
        assert_eq!(p.origin, vec![(Var(0), 1), (Var(3), 1), (Var(3), 2)]);
        assert_eq!(p.ideal.generators(), &[m(&[(0, 1), (1, 1), (2, 1)])]);

        // x2 x1^4 -> x(1,1..4) x(2,1)
        let j = ideal(&[&[(1, 1), (0, 4)]], 2);
        let q = j.polarize();
        assert_eq!(q.origin.len(), 5);
        assert_eq!(q.origin[4], (Var(1), 1));
        assert_eq!(q.ideal.generators()[0].degree(), 5);
        assert!(q.ideal.is_squarefree());

        let c5 = edge_ideal_c5();
        assert_eq!(c5.polarize().ideal, c5);
    }

    #[test]
    fn semi_gcd() {
        // 4-cycle: (x1x2, x3x4) is witnessed by x2x3
        let c4 = ideal(
            &[
                &[(0, 1), (1, 1)],
                &[(1, 1), (2, 1)],
                &[(2, 1), (3, 1)],
                &[(3, 1), (0, 1)],
            ],
            4,
        );
        assert!(c4.semi_gcd_condition().unwrap().holds());
        let pair = ideal(&[&[(0, 1), (2, 2)], &[(1, 1), (3, 3)]], 4);
        assert!(matches!(
            pair.semi_gcd_condition().unwrap(),
            SemiGcd::Violated(_, _)
        ));
        assert!(ideal(&[&[(0, 1), (1, 1)]], 2)
            .semi_gcd_condition()
            .unwrap()
            .holds());
        assert!(matches!(
            ideal(&[&[(0, 1)], &[(1, 1), (2, 1)]], 3).semi_gcd_condition(),
            Err(Error::VariableGenerator(_))
        ));
    }

    #[test]
    fn drop_and_radical() {
        let tri = ideal(&[&[(0, 1), (1, 1)], &[(1, 1), (2, 1)], &[(0, 1), (2, 1)]], 3);
        assert_eq!(
            tri.drop_divisible_by(Var(1)).unwrap(),
            ideal(&[&[(0, 1), (2, 1)]], 3)
        );
        let single = ideal(&[&[(0, 1), (1, 1)]], 3);
        assert_eq!(single.drop_divisible_by(Var(2)).unwrap(), single);
        assert!(single.drop_divisible_by(Var(7)).is_err());

        let i = ideal(&[&[(0, 1), (1, 2)], &[(1, 1), (2, 1)]], 3);
        assert_eq!(
            i.radical(),
            ideal(&[&[(0, 1), (1, 1)], &[(1, 1), (2, 1)]], 3)
        );
        assert!(ideal(&[], 3).radical().is_zero());
    }
}
