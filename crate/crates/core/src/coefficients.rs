//! Exact scalars: rationals, the ℚ-span of square roots of square-free
//! integers, and polynomials in the symbolic dimension `N`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_from_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` for every rational, integers included (`3/1`).
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Splits `n = s² · f` with `f` square-free.
fn squarefree_split(n: &BigUint) -> Result<(BigUint, u64)> {
    let mut rest = n.clone();
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    let mut p: u64 = 2;
    while p <= TRIAL_LIMIT {
        let pp = BigUint::from(p) * BigUint::from(p);
        if pp > rest {
            break;
        }
        let mut e = 0u32;
        loop {
            let (q, r) = rest.div_rem(&BigUint::from(p));
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        square *= BigUint::from(p).pow(e / 2);
        if e % 2 == 1 {
            free *= BigUint::from(p);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        let limit = BigUint::from(TRIAL_LIMIT);
        if &limit * &limit > rest {
            // no factor below the limit, so `rest` is prime
            free *= rest;
        } else {
            let root = rest.sqrt();
            if &root * &root == rest {
                square *= root;
            } else if &limit * &limit * &limit > rest {
                // at most two prime factors, all above the limit, not a square
                free *= rest;
            } else {
                return Err(Error::RadicandTooLarge(n.to_string()));
            }
        }
    }
    let free = free.to_u64().ok_or_else(|| Error::RadicandTooLarge(n.to_string()))?;
    Ok((square, free))
}

fn smallest_prime_factor(d: u64) -> u64 {
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            return p;
        }
        p += 1;
    }
    d
}

/// An element `Σ q_d·√d` of the ℚ-span of square roots of distinct
/// square-free positive integers. Terms are kept sorted by radicand with no
/// zero coefficients, so structural equality is numerical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Surd {
    terms: Vec<(u64, Rational)>,
}

impl Surd {
    pub fn zero() -> Self {
        Surd { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::term(1, q)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(rational_from_int(n))
    }

    /// `q·√d` for a square-free radicand `d`.
    pub fn term(radicand: u64, coeff: Rational) -> Self {
        assert!(radicand > 0, "radicand must be positive");
        debug_assert_eq!(
            smallest_square_divisor(radicand),
            None,
            "radicand {radicand} is not square-free"
        );
        if coeff.is_zero() {
            Self::zero()
        } else {
            Surd {
                terms: alloc::vec![(radicand, coeff)],
            }
        }
    }

    /// Assembles from arbitrary `(d, q)` pairs; `d` need not be square-free.
    pub fn from_terms<I: IntoIterator<Item = (u64, Rational)>>(terms: I) -> Result<Self> {
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        for (d, q) in terms {
            if d == 0 {
                continue;
            }
            let (s, f) = squarefree_split(&BigUint::from(d))?;
            let q = q * Rational::from_integer(BigInt::from(s));
            *acc.entry(f).or_insert_with(Rational::zero) += q;
        }
        Ok(Surd {
            terms: acc.into_iter().filter(|(_, q)| !q.is_zero()).collect(),
        })
    }

    /// The positive square root of a positive rational, as `a·√d`.
    pub fn sqrt(q: &Rational) -> Result<Self> {
        if !q.is_positive() {
            return Err(Error::NonPositiveRadicand(format_rational(q)));
        }
        // √(p/r) = √(p·r) / r
        let pr = (q.numer() * q.denom()).to_biguint().expect("positive");
        let (s, f) = squarefree_split(&pr)?;
        let coeff = Rational::new(BigInt::from(s), q.denom().clone());
        Ok(Self::term(f, coeff))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 1 && self.terms[0].1.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.iter().all(|(d, _)| *d == 1)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(1, q)] => Some(q.clone()),
            _ => None,
        }
    }

    /// `(radicand, coefficient)` pairs in increasing radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(d, q)| (*d, q))
    }

    pub fn coefficient(&self, radicand: u64) -> Rational {
        self.terms
            .iter()
            .find(|(d, _)| *d == radicand)
            .map(|(_, q)| q.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Surd {
            terms: self.terms.iter().map(|(d, c)| (*d, c * q)).collect(),
        }
    }

    /// Galois conjugate flipping `√p ↦ -√p` for a prime `p`.
    fn conjugate_at(&self, p: u64) -> Self {
        Surd {
            terms: self
                .terms
                .iter()
                .map(|(d, q)| {
                    if (*d).is_multiple_of(p) {
                        (*d, -q)
                    } else {
                        (*d, q.clone())
                    }
                })
                .collect(),
        }
    }

    /// Multiplicative inverse in the multiquadratic field spanned by the
    /// radicands present.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Self::from_rational(q.recip()));
        }
        let largest = self.terms.last().expect("nonzero").0;
        let p = smallest_prime_factor(largest);
        // x·σ(x) has no radicand divisible by p
        let conj = self.conjugate_at(p);
        let norm = self * &conj;
        Ok(&conj * &norm.inverse()?)
    }

    pub fn checked_div(&self, other: &Surd) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Surd::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

fn smallest_square_divisor(d: u64) -> Option<u64> {
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p * p) {
            return Some(p);
        }
        p += 1;
    }
    None
}

fn merge_add(a: &[(u64, Rational)], b: &[(u64, Rational)], negate_b: bool) -> Vec<(u64, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let q = if negate_b { -&b[j].1 } else { b[j].1.clone() };
            out.push((b[j].0, q));
            j += 1;
        } else {
            let q = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
            if !q.is_zero() {
                out.push((a[i].0, q));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Add for &Surd {
    type Output = Surd;
    fn add(self, rhs: &Surd) -> Surd {
        Surd {
            terms: merge_add(&self.terms, &rhs.terms, false),
        }
    }
}

impl Sub for &Surd {
    type Output = Surd;
    fn sub(self, rhs: &Surd) -> Surd {
        Surd {
            terms: merge_add(&self.terms, &rhs.terms, true),
        }
    }
}

impl Add for Surd {
    type Output = Surd;
    fn add(self, rhs: Surd) -> Surd {
        &self + &rhs
    }
}

impl Sub for Surd {
    type Output = Surd;
    fn sub(self, rhs: Surd) -> Surd {
        &self - &rhs
    }
}

impl AddAssign<&Surd> for Surd {
    fn add_assign(&mut self, rhs: &Surd) {
        self.terms = merge_add(&self.terms, &rhs.terms, false);
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            terms: self.terms.iter().map(|(d, q)| (*d, -q)).collect(),
        }
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        -&self
    }
}

/// `√a·√b = g·√(ab/g²)` with `g = gcd(a, b)`; the result radicand is again
/// square-free because `a/g` and `b/g` are coprime square-free integers.
pub(crate) fn radicand_product(a: u64, b: u64) -> (u64, u64) {
    let g = a.gcd(&b);
    let r = (a / g).checked_mul(b / g).expect("radicand overflow");
    (r, g)
}

impl Mul for &Surd {
    type Output = Surd;
    fn mul(self, rhs: &Surd) -> Surd {
        if self.is_zero() || rhs.is_zero() {
            return Surd::zero();
        }
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        for (a, p) in &self.terms {
            for (b, q) in &rhs.terms {
                let (r, g) = radicand_product(*a, *b);
                let c = p * q * Rational::from_integer(BigInt::from(g));
                *acc.entry(r).or_insert_with(Rational::zero) += c;
            }
        }
        Surd {
            terms: acc.into_iter().filter(|(_, q)| !q.is_zero()).collect(),
        }
    }
}

impl Mul for Surd {
    type Output = Surd;
    fn mul(self, rhs: Surd) -> Surd {
        &self * &rhs
    }
}

impl From<Rational> for Surd {
    fn from(q: Rational) -> Self {
        Surd::from_rational(q)
    }
}

impl From<i64> for Surd {
    fn from(n: i64) -> Self {
        Surd::from_integer(n)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &Rational) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (d, q)) in self.terms.iter().enumerate() {
            let mag = q.abs();
            if k == 0 {
                if q.is_negative() {
                    f.write_str("-")?;
                }
            } else if q.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if *d == 1 {
                write_rational(f, &mag)?;
            } else {
                if !mag.is_one() {
                    write_rational(f, &mag)?;
                }
                write!(f, "√{d}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A polynomial in the symbolic dimension `N` with [`Surd`] coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyN {
    coeffs: BTreeMap<u32, Surd>,
}

impl PolyN {
    pub fn zero() -> Self {
        PolyN {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(c: Surd) -> Self {
        Self::monomial(0, c)
    }

    pub fn one() -> Self {
        Self::constant(Surd::one())
    }

    /// The polynomial `N`.
    pub fn n() -> Self {
        Self::monomial(1, Surd::one())
    }

    pub fn monomial(exponent: u32, c: Surd) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exponent, c);
        }
        PolyN { coeffs }
    }

    /// `N + c` for an integer shift `c`.
    pub fn n_plus(c: i64) -> Self {
        &Self::n() + &Self::constant(Surd::from_integer(c))
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, Surd)>>(terms: I) -> Self {
        let mut p = PolyN::zero();
        for (k, c) in terms {
            p.add_term(k, &c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, exponent: u32, c: &Surd) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exponent).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coefficient(&self, exponent: u32) -> Surd {
        self.coeffs.get(&exponent).cloned().unwrap_or_default()
    }

    /// `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Surd)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn scale(&self, c: &Surd) -> Self {
        PolyN::from_terms(self.coeffs.iter().map(|(k, v)| (*k, v * c)))
    }

    /// Exact value at `N = n`.
    pub fn eval(&self, n: u64) -> Surd {
        let n = Rational::from_integer(BigInt::from(n));
        let mut acc = Surd::zero();
        for (k, c) in &self.coeffs {
            let power = num_traits::pow(n.clone(), *k as usize);
            acc += &c.scale(&power);
        }
        acc
    }
}

impl Add for &PolyN {
    type Output = PolyN;
    fn add(self, rhs: &PolyN) -> PolyN {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub for &PolyN {
    type Output = PolyN;
    fn sub(self, rhs: &PolyN) -> PolyN {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, &-c);
        }
        out
    }
}

impl Neg for &PolyN {
    type Output = PolyN;
    fn neg(self) -> PolyN {
        PolyN::from_terms(self.coeffs.iter().map(|(k, c)| (*k, -c)))
    }
}

impl Mul for &PolyN {
    type Output = PolyN;
    fn mul(self, rhs: &PolyN) -> PolyN {
        let mut out = PolyN::zero();
        for (a, p) in &self.coeffs {
            for (b, q) in &rhs.coeffs {
                out.add_term(a + b, &(p * q));
            }
        }
        out
    }
}

impl Add for PolyN {
    type Output = PolyN;
    fn add(self, rhs: PolyN) -> PolyN {
        &self + &rhs
    }
}

impl Sub for PolyN {
    type Output = PolyN;
    fn sub(self, rhs: PolyN) -> PolyN {
        &self - &rhs
    }
}

impl Mul for PolyN {
    type Output = PolyN;
    fn mul(self, rhs: PolyN) -> PolyN {
        &self * &rhs
    }
}

impl fmt::Display for PolyN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.coeffs.iter().rev().enumerate() {
            let (negative, mag) = match c.to_rational() {
                Some(q) => (q.is_negative(), Surd::from_rational(q.abs())),
                None => (false, c.clone()),
            };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let simple = mag.to_rational().is_some();
            let unit = mag.is_one();
            if *k == 0 || !unit {
                if simple {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match *k {
                0 => {}
                1 if unit => f.write_str("N")?,
                1 => f.write_str("*N")?,
                _ if unit => write!(f, "N^{k}")?,
                _ => write!(f, "*N^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
