//! Exact matrix rank over the rationals and over prime fields.

use num_bigint::BigInt;

use super::FieldSpec;

pub fn rank(rows: &[Vec<i64>], field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => rank_rational(rows),
        FieldSpec::Prime(p) => rank_mod_p(rows, p),
    }
}

/// Rank over Q by fraction-free integer elimination. Each reduced row is
/// divided by its content; on `i128` overflow the work is redone in `BigInt`.
pub fn rank_rational(rows: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    match eliminate_i128(small) {
        Some(r) => r,
        None => eliminate_big(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        ),
    }
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn eliminate_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        let pivot = prow[c];
        for row in rest {
            let a = row[c];
            if a == 0 {
                continue;
            }
            let mut content = 0;
            for (x, &b) in row[c..].iter_mut().zip(&prow[c..]) {
                *x = pivot.checked_mul(*x)?.checked_sub(a.checked_mul(b)?)?;
                content = gcd_i128(content, *x);
            }
            if content > 1 {
                for v in &mut row[c..] {
                    *v /= content;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn eliminate_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let zero = BigInt::from(0);
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != zero) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        let pivot = &prow[c];
        for row in rest {
            let a = row[c].clone();
            if a == zero {
                continue;
            }
            for (x, b) in row[c..].iter_mut().zip(&prow[c..]) {
                *x = pivot * &*x - &a * b;
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let pi = p as i64;
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(pi) as u64).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest {
            let a = row[c];
            if a == 0 {
                continue;
            }
            let f = a * inv % p;
            for (x, &b) in row[c..].iter_mut().zip(&prow[c..]) {
                *x = (*x + p - f * b % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_mod_p(&m, 7), 2);
        assert_eq!(rank_rational(&[]), 0);
        assert_eq!(rank_rational(&[vec![0, 0]]), 0);
    }

    #[test]
    fn characteristic_matters() {
        // det = 2: full rank over Q, rank 1 over F_2
        let m = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 2);
    }

    #[test]
    fn big_fallback_agrees() {
        // Rows with entries that overflow i128 cross-multiplication quickly.
        let n = 12;
        let m: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| ((i + 2) as i64).pow(((j * 3) % 11) as u32)).collect())
            .collect();
        let big = eliminate_big(
            m.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        );
        assert_eq!(rank_rational(&m), big);
    }
}
