//! Packed multiplication kernel for the group algebra.
//!
//! An element is split by radicand; each part is a rational scale times a
//! primitive integer vector indexed by permutation rank. Convolution then
//! runs on machine integers through the cached Cayley table, falling back
//! to big integers only on overflow. The packed form is canonical (gcd 1,
//! first entry positive), so packed equality is element equality.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::coefficients::{radicand_product, Rational};
use crate::group::SymmetricGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Ints {
    Small(Vec<(u32, i64)>),
    Big(Vec<(u32, BigInt)>),
}

impl Ints {
    fn len(&self) -> usize {
        match self {
            Ints::Small(v) => v.len(),
            Ints::Big(v) => v.len(),
        }
    }

    fn to_big(&self) -> Vec<(u32, BigInt)> {
        match self {
            Ints::Small(v) => v.iter().map(|(r, c)| (*r, BigInt::from(*c))).collect(),
            Ints::Big(v) => v.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Part {
    pub radicand: u64,
    pub scale: Rational,
    pub ints: Ints,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Packed {
    pub degree: usize,
    pub parts: Vec<Part>,
}

/// Divides out the content and fixes the sign; returns the removed factor.
fn primitive_big(mut v: Vec<(u32, BigInt)>) -> (BigInt, Ints) {
    let mut g = BigInt::zero();
    for (_, c) in &v {
        g = g.gcd(c);
    }
    if v[0].1.is_negative() {
        g = -g;
    }
    for (_, c) in v.iter_mut() {
        *c /= &g;
    }
    let small: Option<Vec<(u32, i64)>> = v.iter().map(|(r, c)| c.to_i64().map(|c| (*r, c))).collect();
    (g, small.map(Ints::Small).unwrap_or(Ints::Big(v)))
}

fn primitive_wide(mut v: Vec<(u32, i128)>) -> (BigInt, Ints) {
    let mut g: i128 = 0;
    for (_, c) in &v {
        g = g.gcd(c);
    }
    if v[0].1 < 0 {
        g = -g;
    }
    for (_, c) in v.iter_mut() {
        *c /= g;
    }
    let small: Option<Vec<(u32, i64)>> = v.iter().map(|(r, c)| i64::try_from(*c).ok().map(|c| (*r, c))).collect();
    match small {
        Some(s) => (BigInt::from(g), Ints::Small(s)),
        None => (
            BigInt::from(g),
            Ints::Big(v.into_iter().map(|(r, c)| (r, BigInt::from(c))).collect()),
        ),
    }
}

impl Part {
    /// Packs rank-sorted rational entries; `None` if all vanish.
    pub fn from_rationals(radicand: u64, entries: Vec<(u32, Rational)>) -> Option<Part> {
        let entries: Vec<_> = entries.into_iter().filter(|(_, q)| !q.is_zero()).collect();
        if entries.is_empty() {
            return None;
        }
        let mut den = BigInt::one();
        for (_, q) in &entries {
            den = den.lcm(q.denom());
        }
        let ints: Vec<(u32, BigInt)> = entries
            .iter()
            .map(|(r, q)| (*r, q.numer() * (&den / q.denom())))
            .collect();
        let (g, ints) = primitive_big(ints);
        Some(Part {
            radicand,
            scale: Rational::new(g, den),
            ints,
        })
    }

    fn to_rationals(&self) -> Vec<(u32, Rational)> {
        self.ints
            .to_big()
            .into_iter()
            .map(|(r, c)| (r, &self.scale * Rational::from_integer(c)))
            .collect()
    }
}

fn convolve_small(g: &SymmetricGroup, a: &[(u32, i64)], b: &[(u32, i64)]) -> Option<Vec<(u32, i128)>> {
    let mut acc = vec![0i128; g.order];
    for &(i, x) in a {
        let row = g.row(i as usize);
        let x = x as i128;
        for &(j, y) in b {
            let slot = &mut acc[row[j as usize] as usize];
            *slot = slot.checked_add(x * y as i128)?;
        }
    }
    Some(
        acc.into_iter()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .map(|(r, c)| (r as u32, c))
            .collect(),
    )
}

fn convolve_big(g: &SymmetricGroup, a: &[(u32, BigInt)], b: &[(u32, BigInt)]) -> Vec<(u32, BigInt)> {
    let mut acc = vec![BigInt::zero(); g.order];
    for (i, x) in a {
        let row = g.row(*i as usize);
        for (j, y) in b {
            acc[row[*j as usize] as usize] += x * y;
        }
    }
    acc.into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(r, c)| (r as u32, c))
        .collect()
}

fn convolve(g: &SymmetricGroup, a: &Ints, b: &Ints) -> Option<(BigInt, Ints)> {
    if let (Ints::Small(x), Ints::Small(y)) = (a, b) {
        if let Some(v) = convolve_small(g, x, y) {
            return if v.is_empty() { None } else { Some(primitive_wide(v)) };
        }
    }
    let v = convolve_big(g, &a.to_big(), &b.to_big());
    if v.is_empty() {
        None
    } else {
        Some(primitive_big(v))
    }
}

impl Packed {
    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.parts.iter().map(|p| p.ints.len()).sum()
    }

    pub fn multiply(&self, other: &Packed, g: &SymmetricGroup) -> Packed {
        let mut by_radicand: BTreeMap<u64, Vec<Part>> = BTreeMap::new();
        for p in &self.parts {
            for q in &other.parts {
                let (r, sq) = radicand_product(p.radicand, q.radicand);
                if let Some((content, ints)) = convolve(g, &p.ints, &q.ints) {
                    let scale = &p.scale * &q.scale * Rational::from_integer(content * BigInt::from(sq));
                    by_radicand.entry(r).or_default().push(Part {
                        radicand: r,
                        scale,
                        ints,
                    });
                }
            }
        }
        let mut parts = Vec::with_capacity(by_radicand.len());
        for (r, mut group) in by_radicand {
            if group.len() == 1 {
                parts.push(group.pop().expect("one part"));
                continue;
            }
            let mut sum: BTreeMap<u32, Rational> = BTreeMap::new();
            for part in group {
                for (k, q) in part.to_rationals() {
                    *sum.entry(k).or_insert_with(Rational::zero) += q;
                }
            }
            if let Some(p) = Part::from_rationals(r, sum.into_iter().collect()) {
                parts.push(p);
            }
        }
        Packed {
            degree: self.degree,
            parts,
        }
    }

    /// `(rank, radicand, coefficient)` triples.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u64, Rational)> + '_ {
        self.parts
            .iter()
            .flat_map(|p| p.to_rationals().into_iter().map(move |(k, q)| (k, p.radicand, q)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::rational;
    use crate::group::group;

    #[test]
    fn packing_is_canonical() {
        let a = Part::from_rationals(1, vec![(0, rational(-2, 3)), (3, rational(4, 9))]).unwrap();
        assert_eq!(a.ints, Ints::Small(vec![(0, 3), (3, -2)]));
        assert_eq!(a.scale, rational(-2, 9));
        let b = Part::from_rationals(1, vec![(0, rational(6, 9)), (3, rational(-4, 9))]).unwrap();
        assert_eq!(b.ints, a.ints);
        assert_eq!(b.scale, -a.scale.clone());
        assert!(Part::from_rationals(1, vec![(2, rational(0, 1))]).is_none());
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let g = group(2).unwrap();
        let huge = i64::MAX;
        let a = Ints::Small(vec![(0, huge), (1, huge - 1)]);
        let (content, ints) = convolve(g, &a, &a).unwrap();
        let x = BigInt::from(huge);
        let y = BigInt::from(huge - 1);
        let expected0 = &x * &x + &y * &y;
        let expected1 = BigInt::from(2) * &x * &y;
        let got = ints.to_big();
        assert_eq!(&got[0].1 * &content, expected0);
        assert_eq!(&got[1].1 * &content, expected1);
    }
}
