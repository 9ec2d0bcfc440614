//! Betti numbers against two independent computations: the Taylor complex
//! tensored with the field, and the K-polynomial from the colon recursion.

use std::collections::BTreeMap;

use proptest::prelude::*;

use cwl::betti::{betti_table, has_linear_resolution, lcm_lattice_points, regularity, FieldSpec};
use cwl::fixtures;
use cwl::{Monomial, MonomialIdeal, Var};

type Table = BTreeMap<(usize, Monomial), usize>;

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Rank over the rationals with reduced fractions.
fn rank_q(mut m: Vec<Vec<(i128, i128)>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c].0 != 0) else {
            continue;
        };
        m.swap(rank, p);
        let (pn, pd) = m[rank][c];
        let prow = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[c].0 == 0 {
                continue;
            }
            // factor = row[c] / pivot
            let (fn_, fd) = (row[c].0 * pd, row[c].1 * pn);
            for (x, &(bn, bd)) in row[c..].iter_mut().zip(&prow[c..]) {
                let (an, ad) = *x;
                let (tn, td) = (fn_ * bn, fd * bd);
                let (n, d) = (an * td - tn * ad, ad * td);
                let g = gcd(n, d).max(1) * d.signum();
                *x = (n / g, d / g);
            }
        }
        rank += 1;
    }
    rank
}

fn rank_p(mut m: Vec<Vec<i64>>, p: i64) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let inv = |a: i64| {
        let (mut r, mut b, mut e) = (1i64, a.rem_euclid(p), p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c].rem_euclid(p) != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let iv = inv(m[rank][c]);
        let prow = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            let f = row[c].rem_euclid(p) * iv % p;
            if r == rank || f == 0 {
                continue;
            }
            for (x, &b) in row[c..].iter_mut().zip(&prow[c..]) {
                *x = (*x - f * b).rem_euclid(p);
            }
        }
        rank += 1;
    }
    rank
}

fn rank(rows: &[Vec<i64>], field: FieldSpec) -> usize {
    if rows.is_empty() {
        return 0;
    }
    match field {
        FieldSpec::Rationals => rank_q(rows.iter().map(|r| r.iter().map(|&x| (x as i128, 1)).collect()).collect()),
        FieldSpec::Prime(p) => rank_p(rows.to_vec(), p as i64),
    }
}

/// `Tor_i(I, k)_alpha` from the Taylor complex: faces are generator subsets
/// with lcm exactly `alpha`, and the differential drops one generator.
fn taylor_betti(ideal: &MonomialIdeal, field: FieldSpec) -> Table {
    let gens = ideal.generators();
    let m = gens.len();
    assert!(m <= 12, "oracle is exponential in the number of generators");
    let mut by_lcm: BTreeMap<Monomial, Vec<u32>> = BTreeMap::new();
    for mask in 1u32..1 << m {
        let l = (0..m)
            .filter(|k| mask >> k & 1 == 1)
            .fold(Monomial::one(), |acc, k| acc.lcm(&gens[k]));
        by_lcm.entry(l).or_default().push(mask);
    }
    let mut out = Table::new();
    for (alpha, faces) in by_lcm {
        let size = |f: &u32| f.count_ones() as usize;
        let top = faces.iter().map(size).max().unwrap();
        let layer: Vec<Vec<u32>> = (0..=top + 1)
            .map(|s| faces.iter().copied().filter(|f| size(f) == s).collect())
            .collect();
        // boundary from faces of size s to faces of size s - 1
        let boundary_rank = |s: usize| -> usize {
            if s < 2 || s > top {
                return 0;
            }
            let rows: Vec<Vec<i64>> = layer[s]
                .iter()
                .map(|&f| {
                    layer[s - 1]
                        .iter()
                        .map(|&g| {
                            if g & f != g {
                                return 0;
                            }
                            let dropped = (f ^ g).trailing_zeros();
                            let before = (f & ((1 << dropped) - 1)).count_ones();
                            if before % 2 == 0 {
                                1
                            } else {
                                -1
                            }
                        })
                        .collect()
                })
                .collect();
            rank(&rows, field)
        };
        for (s, faces) in layer.iter().enumerate().take(top + 1).skip(1) {
            let b = faces.len() - boundary_rank(s) - boundary_rank(s + 1);
            if b > 0 {
                out.insert((s - 1, alpha.clone()), b);
            }
        }
    }
    out
}

/// Numerator of the multigraded Hilbert series of `S / I`, via
/// `K(S/(J + u)) = K(S/J) - x^u K(S/(J : u))`.
fn k_polynomial(gens: &[Monomial]) -> BTreeMap<Monomial, i64> {
    let mut k = BTreeMap::new();
    k.insert(Monomial::one(), 1);
    if gens.is_empty() {
        return k;
    }
    let (last, rest) = gens.split_last().unwrap();
    let mut k = k_polynomial(rest);
    let colon: Vec<Monomial> = minimal(rest.iter().map(|g| g.colon(last)).collect());
    for (m, c) in k_polynomial(&colon) {
        *k.entry(m.mul(last)).or_insert(0) -= c;
    }
    k.retain(|_, c| *c != 0);
    k
}

fn minimal(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if out.iter().any(|h| h.divides(&g)) {
            continue;
        }
        out.retain(|h| !g.divides(h));
        out.push(g);
    }
    out
}

/// `sum_i (-1)^i beta_{i,alpha}` for every `alpha`, which equals `-K` off the origin.
fn euler_of(table: &Table) -> BTreeMap<Monomial, i64> {
    let mut e = BTreeMap::new();
    for ((i, alpha), &b) in table {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        *e.entry(alpha.clone()).or_insert(0) += sign * b as i64;
    }
    e.retain(|_, c| *c != 0);
    e
}

fn expected_euler(ideal: &MonomialIdeal) -> BTreeMap<Monomial, i64> {
    let mut k = k_polynomial(ideal.generators());
    k.remove(&Monomial::one());
    k.into_iter().map(|(m, c)| (m, -c)).collect()
}

fn m(exps: &[u32]) -> Monomial {
    Monomial::from_exponents(exps)
}

fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
    let n = gens.iter().map(|g| g.len()).max().unwrap_or(0);
    MonomialIdeal::in_vars(gens.iter().map(|g| m(g)).collect(), n).unwrap()
}

/// Non-faces of size three of the six-vertex real projective plane.
fn projective_plane() -> MonomialIdeal {
    let faces = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 1, 5],
        [1, 2, 4],
        [2, 3, 5],
        [1, 3, 4],
        [2, 4, 5],
        [1, 3, 5],
    ];
    let mut gens = Vec::new();
    for a in 0..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                if !faces.iter().any(|f| f == &[a, b, c]) {
                    gens.push(Monomial::from_pairs([a, b, c].map(|v| (Var(v), 1))));
                }
            }
        }
    }
    MonomialIdeal::in_vars(gens, 6).unwrap()
}

const Q: FieldSpec = FieldSpec::Rationals;

#[test]
fn oracle_sanity() {
    // two coprime squares: Koszul complex
    let t = taylor_betti(&ideal(&[&[2, 0], &[0, 2]]), Q);
    assert_eq!(t.len(), 3);
    assert_eq!(t[&(1, m(&[2, 2]))], 1);
    // three collinear generators: one syzygy is redundant
    let t = taylor_betti(&ideal(&[&[2, 0], &[1, 1], &[0, 2]]), Q);
    assert_eq!(t.iter().filter(|((i, _), _)| *i == 1).count(), 2);
    assert!(!t.keys().any(|(i, _)| *i == 2));
}

#[test]
fn five_cycle_matches_taylor() {
    let c5 = fixtures::five_cycle_ideal();
    for field in [Q, FieldSpec::Prime(2)] {
        let t = taylor_betti(&c5, field);
        assert_eq!(betti_table(&c5, field).unwrap().entries(), &t);
    }
    let table = betti_table(&c5, Q).unwrap();
    let graded: Vec<_> = table.graded().into_iter().collect();
    assert_eq!(graded, vec![((0, 2), 5), ((1, 3), 5), ((2, 5), 1)]);
}

#[test]
fn five_cycle_square_matches_k_polynomial() {
    let sq = fixtures::five_cycle_ideal().power(2);
    let table = betti_table(&sq, Q).unwrap();
    assert_eq!(euler_of(table.entries()), expected_euler(&sq));
    // linear, so the graded numbers are read off the K-polynomial
    let mut by_degree: BTreeMap<u32, i64> = BTreeMap::new();
    for (mono, c) in expected_euler(&sq) {
        *by_degree.entry(mono.degree()).or_insert(0) += c;
    }
    assert_eq!(by_degree, BTreeMap::from([(4, 15), (5, -24), (6, 10)]));
    assert_eq!(table.totals(), vec![15, 24, 10]);
    assert_eq!(lcm_lattice_points(&sq).len(), 102);
}

#[test]
fn forbidden_configurations_match_taylor() {
    use cwl::oriented::ForbiddenKind::*;
    for kind in [D1, D2, D3, D4] {
        for w in [[1, 2, 3], [2, 2, 2], [3, 1, 2], [4, 3, 2]] {
            let i = fixtures::forbidden_instance(kind, w).edge_ideal();
            assert_eq!(betti_table(&i, Q).unwrap().entries(), &taylor_betti(&i, Q), "{kind} {w:?}");
        }
    }
}

#[test]
fn projective_plane_depends_on_characteristic() {
    let i = projective_plane();
    assert_eq!(i.num_generators(), 10);
    for field in [Q, FieldSpec::Prime(2), FieldSpec::Prime(3)] {
        assert_eq!(betti_table(&i, field).unwrap().entries(), &taylor_betti(&i, field), "{field}");
    }
    // top multidegree carries the mod-2 homology of the plane
    let top = Monomial::from_pairs((0..6).map(|v| (Var(v), 1)));
    let f2 = betti_table(&i, FieldSpec::Prime(2)).unwrap();
    assert_eq!(f2.get(2, &top), 1);
    assert_eq!(f2.get(3, &top), 1);
    assert_eq!(betti_table(&i, Q).unwrap().get(2, &top), 0);
    assert!(has_linear_resolution(&i, Q).unwrap());
    assert!(has_linear_resolution(&i, FieldSpec::Prime(3)).unwrap());
    assert!(!has_linear_resolution(&i, FieldSpec::Prime(2)).unwrap());
    assert_eq!(regularity(&i, Q).unwrap(), 3);
    assert_eq!(regularity(&i, FieldSpec::Prime(2)).unwrap(), 4);
}

#[test]
fn mixed_degrees_match_taylor() {
    let cases: [&[&[u32]]; 4] = [
        &[&[3, 0, 0], &[1, 1, 0], &[0, 2, 1], &[0, 0, 2]],
        &[&[1, 1, 1], &[2, 0, 0], &[0, 2, 0]],
        &[&[1, 2, 0, 0], &[0, 1, 2, 0], &[0, 0, 1, 2], &[2, 0, 0, 1]],
        &[&[2, 1], &[1, 2], &[3, 0], &[0, 3]],
    ];
    for gens in cases {
        let i = ideal(gens);
        for field in [Q, FieldSpec::Prime(2)] {
            assert_eq!(betti_table(&i, field).unwrap().entries(), &taylor_betti(&i, field));
        }
    }
}

fn small_ideal(vars: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, vars), 1..=max_gens).prop_filter_map(
        "needs a non-constant generator",
        move |rows| {
            let gens: Vec<Monomial> = rows.iter().map(|r| m(r)).filter(|g| !g.is_one()).collect();
            (!gens.is_empty()).then(|| MonomialIdeal::in_vars(gens, vars).unwrap())
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn engine_matches_taylor_over_q(i in small_ideal(4, 7, 3)) {
        prop_assert_eq!(betti_table(&i, Q).unwrap().entries().clone(), taylor_betti(&i, Q));
    }

    #[test]
    fn engine_matches_taylor_mod_two(i in small_ideal(5, 7, 2)) {
        let f2 = FieldSpec::Prime(2);
        prop_assert_eq!(betti_table(&i, f2).unwrap().entries().clone(), taylor_betti(&i, f2));
    }

    #[test]
    fn alternating_sums_match_k_polynomial(i in small_ideal(5, 10, 3)) {
        prop_assert_eq!(euler_of(betti_table(&i, Q).unwrap().entries()), expected_euler(&i));
    }

    #[test]
    fn zeroth_betti_numbers_are_the_generators(i in small_ideal(5, 10, 3)) {
        let t = betti_table(&i, Q).unwrap();
        for g in i.generators() {
            prop_assert_eq!(t.get(0, g), 1);
        }
        prop_assert_eq!(t.totals()[0], i.num_generators());
        let lattice = lcm_lattice_points(&i);
        for (_, alpha) in t.entries().keys() {
            prop_assert!(lattice.contains(alpha));
        }
    }
}
