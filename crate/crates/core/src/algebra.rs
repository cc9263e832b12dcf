//! The group algebra of `S_m` with [`Surd`] coefficients: the space of
//! linear invariants on `V^{⊗m}`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::coefficients::{PolyN, Rational, Surd};
use crate::error::{Error, Result};
use crate::group::{group, SymmetricGroup};
use crate::kernel::{Packed, Part};
use crate::permutations::Permutation;

/// A finitely supported map `Permutation → Surd`. Zero coefficients are
/// never stored, so derived equality is exact equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, Surd>,
}

impl AlgebraElement {
    pub fn zero(degree: usize) -> Self {
        AlgebraElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(degree: usize) -> Self {
        Self::from_permutation(Permutation::identity(degree))
    }

    pub fn from_permutation(p: Permutation) -> Self {
        Self::monomial(p, Surd::one())
    }

    pub fn monomial(p: Permutation, c: Surd) -> Self {
        let mut a = Self::zero(p.degree());
        a.add_term(p, &c);
        a
    }

    pub fn from_terms<I: IntoIterator<Item = (Permutation, Surd)>>(degree: usize, terms: I) -> Result<Self> {
        let mut a = Self::zero(degree);
        for (p, c) in terms {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: p.degree(),
                });
            }
            a.add_term(p, &c);
        }
        Ok(a)
    }

    /// Same as [`AlgebraElement::from_terms`] with rational coefficients.
    pub fn from_rational_terms<I: IntoIterator<Item = (Permutation, Rational)>>(
        degree: usize,
        terms: I,
    ) -> Result<Self> {
        Self::from_terms(degree, terms.into_iter().map(|(p, q)| (p, Surd::from_rational(q))))
    }

    pub(crate) fn add_term(&mut self, p: Permutation, c: &Surd) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(p.degree(), self.degree);
        match self.terms.entry(p) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic (rank) order of the permutations.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Surd)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, p: &Permutation) -> Surd {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn identity_coefficient(&self) -> Surd {
        self.coefficient(&Permutation::identity(self.degree))
    }

    pub fn is_rational(&self) -> bool {
        self.terms.values().all(Surd::is_rational)
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    pub fn scale(&self, c: &Surd) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        AlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.scale(&Surd::from_rational(q.clone()))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    /// The product `self · other`, i.e. `other` acts first.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.degree));
        }
        match group(self.degree) {
            Some(g) => Ok(Self::unpack(&self.pack().multiply(&other.pack(), g), g)),
            None => Ok(self.multiply_naive(other)),
        }
    }

    /// Term-by-term convolution through [`Permutation::compose`]; the
    /// reference implementation the packed kernel is checked against.
    pub fn multiply_naive(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose_unchecked(q), &(a * b));
            }
        }
        out
    }

    /// Product of several factors, left to right.
    pub fn product<'a, I: IntoIterator<Item = &'a AlgebraElement>>(degree: usize, factors: I) -> Result<Self> {
        let mut acc = Self::identity(degree);
        for f in factors {
            acc = acc.multiply(f)?;
        }
        Ok(acc)
    }

    /// `σ ↦ σ⁻¹` on every term.
    pub fn dagger(&self) -> Self {
        AlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, c)| (p.inverse(), c.clone())).collect(),
        }
    }

    /// `tr(σ) = N^{#cycles(σ)}`, extended linearly.
    pub fn trace(&self) -> PolyN {
        let mut out = PolyN::zero();
        for (p, c) in &self.terms {
            out.add_term(p.cycle_count() as u32, c);
        }
        out
    }

    /// `⟨a, b⟩ = tr(a† b)`.
    pub fn scalar_product(&self, other: &Self) -> Result<PolyN> {
        Ok(self.dagger().multiply(other)?.trace())
    }

    /// `ρ · self`.
    pub fn left_permute(&self, rho: &Permutation) -> Result<Self> {
        self.check_degree(&Self::zero(rho.degree()))?;
        Ok(AlgebraElement {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (rho.compose_unchecked(p), c.clone()))
                .collect(),
        })
    }

    /// `self · ρ`.
    pub fn right_permute(&self, rho: &Permutation) -> Result<Self> {
        self.check_degree(&Self::zero(rho.degree()))?;
        Ok(AlgebraElement {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.compose_unchecked(rho), c.clone()))
                .collect(),
        })
    }

    /// `ρ · self · ρ⁻¹`.
    pub fn conjugate(&self, rho: &Permutation) -> Result<Self> {
        self.check_degree(&Self::zero(rho.degree()))?;
        let inv = rho.inverse();
        Ok(AlgebraElement {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (rho.compose_unchecked(&p.compose_unchecked(&inv)), c.clone()))
                .collect(),
        })
    }

    /// Canonical embedding into degree `m`.
    pub fn embed(&self, degree: usize) -> Result<Self> {
        let mut out = Self::zero(degree);
        for (p, c) in &self.terms {
            out.terms.insert(p.embed(degree)?, c.clone());
        }
        Ok(out)
    }

    /// The scalar `c` with `self = c · other`, if one exists. `other` must be
    /// nonzero.
    pub fn ratio_to(&self, other: &Self) -> Option<Surd> {
        if self.degree != other.degree || other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Surd::zero());
        }
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let (p, b) = other.terms.iter().next()?;
        let c = self.terms.get(p)?.checked_div(b).ok()?;
        if &other.scale(&c) == self {
            Some(c)
        } else {
            None
        }
    }

    pub(crate) fn pack(&self) -> Packed {
        let mut by_radicand: BTreeMap<u64, Vec<(u32, Rational)>> = BTreeMap::new();
        for (p, c) in &self.terms {
            let r = p.rank() as u32;
            for (d, q) in c.terms() {
                by_radicand.entry(d).or_default().push((r, q.clone()));
            }
        }
        Packed {
            degree: self.degree,
            parts: by_radicand
                .into_iter()
                .filter_map(|(d, v)| Part::from_rationals(d, v))
                .collect(),
        }
    }

    pub(crate) fn unpack(packed: &Packed, g: &SymmetricGroup) -> Self {
        let mut acc: BTreeMap<u32, Vec<(u64, Rational)>> = BTreeMap::new();
        for (r, d, q) in packed.entries() {
            acc.entry(r).or_default().push((d, q));
        }
        let terms = acc
            .into_iter()
            .map(|(r, v)| {
                let c = Surd::from_terms(v).expect("radicands are already square-free");
                (g.elements[r as usize].clone(), c)
            })
            .collect();
        AlgebraElement {
            degree: packed.degree,
            terms,
        }
    }

    /// Precomputes the packed form for repeated products.
    pub fn prepare(&self) -> PreparedElement {
        PreparedElement {
            packed: self.pack(),
            element: self.clone(),
        }
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, perm: impl Fn(&Permutation) -> String) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            let (negative, mag) = match c.to_rational() {
                Some(q) if q < Rational::from_integer(0.into()) => (true, Surd::from_rational(-q)),
                _ => (false, c.clone()),
            };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag.is_rational() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "({mag})")?;
            }
            write!(f, "·{}", perm(p))?;
        }
        Ok(())
    }

    /// LaTeX rendering as a signed sum of cycle-notation permutations.
    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        if self.is_zero() {
            out.push('0');
            return out;
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            let (negative, mag) = match c.to_rational() {
                Some(q) if q < Rational::from_integer(0.into()) => (true, Surd::from_rational(-q)),
                _ => (false, c.clone()),
            };
            if negative {
                out.push_str(if k == 0 { "-" } else { " - " });
            } else if k > 0 {
                out.push_str(" + ");
            }
            out.push_str(&surd_latex(&mag));
            out.push_str(if p.is_identity() { r"\,\mathrm{id}" } else { r"\," });
            if !p.is_identity() {
                out.push_str(&p.cycle_string());
            }
        }
        out
    }
}

fn surd_latex(s: &Surd) -> String {
    use alloc::format;
    let parts: Vec<String> = s
        .terms()
        .map(|(d, q)| {
            let q = if q.denom() == &1.into() {
                format!("{}", q.numer())
            } else {
                format!(r"\tfrac{{{}}}{{{}}}", q.numer(), q.denom())
            };
            if d == 1 {
                q
            } else {
                format!(r"{q}\sqrt{{{d}}}")
            }
        })
        .collect();
    if parts.len() == 1 {
        parts.into_iter().next().expect("one part")
    } else {
        format!(r"\left({}\right)", parts.join(" + "))
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, |p| p.cycle_string())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[m={}] ", self.degree)?;
        fmt::Display::fmt(self, f)
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

/// Panics on a degree mismatch; use [`AlgebraElement::checked_add`] otherwise.
impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_add(rhs).expect("degree mismatch in addition")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_sub(rhs).expect("degree mismatch in subtraction")
    }
}

/// Panics on a degree mismatch; use [`AlgebraElement::multiply`] otherwise.
impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.multiply(rhs).expect("degree mismatch in product")
    }
}

/// An element together with its canonical packed form, for verification
/// loops that multiply and compare the same operators many times.
#[derive(Clone, Debug)]
pub struct PreparedElement {
    packed: Packed,
    element: AlgebraElement,
}

impl PreparedElement {
    pub fn element(&self) -> &AlgebraElement {
        &self.element
    }

    pub fn degree(&self) -> usize {
        self.element.degree
    }

    pub fn is_zero(&self) -> bool {
        self.packed.is_zero()
    }

    /// `self · other` in packed form.
    pub fn multiply(&self, other: &PreparedElement) -> Result<PreparedElement> {
        self.element.check_degree(&other.element)?;
        match group(self.degree()) {
            Some(g) => {
                let packed = self.packed.multiply(&other.packed, g);
                let element = AlgebraElement::unpack(&packed, g);
                Ok(PreparedElement { packed, element })
            }
            None => Ok(self.element.multiply(&other.element)?.prepare()),
        }
    }

    /// Whether `self · other == expected`, skipping the unpacking step.
    pub fn product_equals(&self, other: &PreparedElement, expected: &PreparedElement) -> Result<bool> {
        self.element.check_degree(&other.element)?;
        match group(self.degree()) {
            Some(g) => Ok(self.packed.multiply(&other.packed, g) == expected.packed),
            None => Ok(self.element.multiply(&other.element)? == expected.element),
        }
    }

    /// Whether `self · other` vanishes.
    pub fn product_is_zero(&self, other: &PreparedElement) -> Result<bool> {
        self.element.check_degree(&other.element)?;
        match group(self.degree()) {
            Some(g) => Ok(self.packed.multiply(&other.packed, g).is_zero()),
            None => Ok(self.element.multiply(&other.element)?.is_zero()),
        }
    }

    /// Number of nonzero terms of the packed product, a cheap size probe.
    pub fn term_count(&self) -> usize {
        self.packed.term_count()
    }
}

impl PartialEq for PreparedElement {
    fn eq(&self, other: &Self) -> bool {
        self.packed == other.packed
    }
}

impl Eq for PreparedElement {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::rational;
    use alloc::vec;
    use proptest::prelude::*;

    fn cyc(m: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(m, cycles).unwrap()
    }

    fn half_sum(m: usize, t: &[usize], sign: i64) -> AlgebraElement {
        AlgebraElement::from_rational_terms(
            m,
            vec![
                (Permutation::identity(m), rational(1, 2)),
                (cyc(m, &[t]), rational(sign, 2)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn two_leg_symmetrizers() {
        let s = half_sum(2, &[1, 2], 1);
        let a = half_sum(2, &[1, 2], -1);
        assert_eq!(&s * &s, s);
        assert_eq!(&a * &a, a);
        assert!((&a * &s).is_zero());
        assert_eq!(&AlgebraElement::identity(2) * &s, s);
    }

    #[test]
    fn dagger_inverts_permutations() {
        let x = AlgebraElement::from_permutation(cyc(3, &[&[1, 2, 3]]));
        assert_eq!(x.dagger(), AlgebraElement::from_permutation(cyc(3, &[&[1, 3, 2]])));
        assert_eq!(x.dagger().dagger(), x);
    }

    #[test]
    fn traces() {
        let t = AlgebraElement::from_permutation(cyc(3, &[&[2, 3]])).trace();
        assert_eq!(t, PolyN::monomial(2, Surd::one()));
        assert_eq!(AlgebraElement::identity(3).trace(), PolyN::monomial(3, Surd::one()));
        let id = AlgebraElement::identity(2);
        assert_eq!(id.scalar_product(&id).unwrap(), PolyN::monomial(2, Surd::one()));
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = AlgebraElement::identity(2);
        let b = AlgebraElement::identity(3);
        assert!(matches!(a.multiply(&b), Err(Error::DegreeMismatch { .. })));
        assert!(a.scalar_product(&b).is_err());
    }

    #[test]
    fn ratio_detection() {
        let s = half_sum(3, &[1, 2], 1);
        let c = Surd::sqrt(&rational(4, 3)).unwrap();
        assert_eq!(s.scale(&c).ratio_to(&s), Some(c));
        assert_eq!(half_sum(3, &[1, 3], 1).ratio_to(&s), None);
        assert_eq!(AlgebraElement::zero(3).ratio_to(&s), Some(Surd::zero()));
    }

    #[test]
    fn display_is_a_signed_sum() {
        let a = half_sum(2, &[1, 2], -1);
        assert_eq!(a.to_string(), "1/2·() - 1/2·(1 2)");
        assert_eq!(a.to_latex(), r"\tfrac{1}{2}\,\mathrm{id} - \tfrac{1}{2}\,(1 2)");
    }

    fn arb_element(m: usize) -> impl Strategy<Value = AlgebraElement> {
        arb_element_with(m, true)
    }

    fn arb_element_with(m: usize, surds: bool) -> impl Strategy<Value = AlgebraElement> {
        let order: usize = (1..=m).product();
        proptest::collection::vec(
            (
                0..order,
                -4i64..5,
                1i64..4,
                prop::bool::weighted(if surds { 0.5 } else { 0.0 }),
            ),
            0..8,
        )
        .prop_map(move |v| {
            let mut a = AlgebraElement::zero(m);
            for (r, n, d, irrational) in v {
                let q = rational(n, d);
                let c = if irrational {
                    Surd::term(2, q)
                } else {
                    Surd::from_rational(q)
                };
                a.add_term(Permutation::unrank(m, r), &c);
            }
            a
        })
    }

    proptest! {
        #[test]
        fn packed_product_matches_naive(a in arb_element(4), b in arb_element(4)) {
            prop_assert_eq!(a.multiply(&b).unwrap(), a.multiply_naive(&b));
        }

        #[test]
        fn associativity(a in arb_element(3), b in arb_element(3), c in arb_element(3)) {
            let (ab, bc) = (&a * &b, &b * &c);
            prop_assert_eq!(&ab * &c, &a * &bc);
        }

        #[test]
        fn dagger_reverses_products(a in arb_element(4), b in arb_element(4)) {
            prop_assert_eq!((&a * &b).dagger(), &b.dagger() * &a.dagger());
        }

        #[test]
        fn trace_is_cyclic(a in arb_element(4), b in arb_element(4)) {
            prop_assert_eq!((&a * &b).trace(), (&b * &a).trace());
        }

        #[test]
        fn prepared_products_agree(a in arb_element(4), b in arb_element(4)) {
            let (pa, pb) = (a.prepare(), b.prepare());
            let expected = (&a * &b).prepare();
            prop_assert!(pa.product_equals(&pb, &expected).unwrap());
            let product = pa.multiply(&pb).unwrap();
            prop_assert_eq!(product.element(), expected.element());
        }

        #[test]
        fn norm_is_positive_for_large_n(a in arb_element_with(3, false), n in 3u64..6) {
            prop_assume!(!a.is_zero());
            let value = a.scalar_product(&a).unwrap().eval(n).to_rational().unwrap();
            prop_assert!(value > Rational::from_integer(0.into()));
        }
    }
}
