//! Exact rank computations.
//!
//! Rows are first divided by their leading entry. Rows of the operators
//! built here are a surd times a rational vector, so this usually leaves a
//! rational matrix, which is cleared of denominators and reduced with
//! fraction-free (Bareiss) elimination over the integers. Anything still
//! irrational goes through plain Gaussian elimination over the surd field.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::coefficients::{Rational, Surd};

/// Rank of a dense matrix given by rows.
pub fn rank(rows: &[Vec<Surd>]) -> usize {
    let mut normalized = Vec::with_capacity(rows.len());
    for row in rows {
        let Some(lead) = row.iter().find(|c| !c.is_zero()) else {
            continue;
        };
        let inv = lead.inverse().expect("leading entry is nonzero");
        normalized.push(row.iter().map(|c| c * &inv).collect::<Vec<Surd>>());
    }
    let rational: Option<Vec<Vec<Rational>>> = normalized
        .iter()
        .map(|r| r.iter().map(Surd::to_rational).collect())
        .collect();
    match rational {
        Some(q) => rank_rational(&q),
        None => rank_surd(normalized),
    }
}

/// Rank of a rational matrix via integer Bareiss elimination.
pub fn rank_rational(rows: &[Vec<Rational>]) -> usize {
    let ints: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let den = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter().map(|q| q.numer() * (&den / q.denom())).collect()
        })
        .collect();
    rank_integer(ints)
}

/// Fraction-free elimination; every intermediate entry is a minor of the
/// input, so each division below is exact.
pub fn rank_integer(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Gaussian elimination over the surd field.
pub fn rank_surd(mut m: Vec<Vec<Surd>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inverse().expect("pivot is nonzero");
        let pivot: Vec<Surd> = m[r].iter().map(|x| x * &inv).collect();
        for row in m.iter_mut().skip(r + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot).skip(c) {
                *x = &*x - &(&f * y);
            }
        }
        m[r] = pivot;
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::rational;
    use alloc::vec;
    use proptest::prelude::*;

    fn s(n: i64) -> Surd {
        Surd::from_integer(n)
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&[vec![s(1), s(2)], vec![s(2), s(4)]]), 1);
        assert_eq!(rank(&[vec![s(1), s(2)], vec![s(3), s(4)]]), 2);
        assert_eq!(rank(&[vec![s(0), s(0)]]), 0);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn surd_multiples_reduce_to_rational_rows() {
        let r2 = Surd::term(2, rational(1, 1));
        let rows = vec![vec![r2.clone(), &r2 * &s(3)], vec![s(1), s(3)]];
        assert_eq!(rank(&rows), 1);
        let mixed = vec![vec![s(1), r2.clone()], vec![r2.clone(), s(2)]];
        assert_eq!(rank(&mixed), 1);
        let full = vec![vec![s(1), r2.clone()], vec![r2, s(1)]];
        assert_eq!(rank(&full), 2);
    }

    proptest! {
        #[test]
        fn bareiss_agrees_with_field_elimination(
            entries in proptest::collection::vec(-3i64..4, 20),
            rows in 1usize..5,
        ) {
            let cols = 20 / rows;
            let m: Vec<Vec<Rational>> = (0..rows)
                .map(|i| (0..cols).map(|j| rational(entries[i * cols + j], 1 + (j as i64 % 3))).collect())
                .collect();
            let surd: Vec<Vec<Surd>> = m.iter().map(|r| r.iter().cloned().map(Surd::from_rational).collect()).collect();
            prop_assert_eq!(rank_rational(&m), rank_surd(surd));
        }
    }
}
