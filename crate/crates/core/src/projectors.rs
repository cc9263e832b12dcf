//! Symmetrizers, Young projectors and Hermitian Young projectors.
//!
//! Every normalization constant (`α` for Young projectors, `β` for the
//! MOLD form) is forced by idempotency: the bare operator `O` is squared,
//! `O² = c·O` is checked term by term, and the constant is `1/c`. The
//! closed form `α_Θ = Π(row lengths)! · Π(column lengths)! / H_Θ` agrees
//! with this for every tableau and is kept only as a cross-check.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::algebra::AlgebraElement;
use crate::coefficients::{PolyN, Rational, Surd};
use crate::error::{Error, Result};
use crate::permutations::Permutation;
use crate::tableaux::YoungTableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SetKind {
    Symmetric,
    Antisymmetric,
}

impl SetKind {
    pub fn opposite(self) -> Self {
        match self {
            SetKind::Symmetric => SetKind::Antisymmetric,
            SetKind::Antisymmetric => SetKind::Symmetric,
        }
    }

    fn letter(self) -> char {
        match self {
            SetKind::Symmetric => 'S',
            SetKind::Antisymmetric => 'A',
        }
    }
}

/// A product of mutually commuting (anti)symmetrizers over disjoint index
/// blocks, embedded at degree `m`.
#[derive(Clone, Debug, Eq)]
pub struct SymmetrizerSet {
    degree: usize,
    blocks: Vec<Vec<usize>>,
    kind: SetKind,
}

impl SymmetrizerSet {
    /// Blocks must be disjoint subsets of `1..=m`; they are sorted and may
    /// include singletons (which act trivially).
    pub fn new(degree: usize, mut blocks: Vec<Vec<usize>>, kind: SetKind) -> Result<Self> {
        let mut seen = alloc::vec![false; degree + 1];
        for b in blocks.iter_mut() {
            b.sort_unstable();
            for &v in b.iter() {
                if v == 0 || v > degree || seen[v] {
                    return Err(Error::InvalidBlocks(degree));
                }
                seen[v] = true;
            }
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_unstable();
        Ok(SymmetrizerSet { degree, blocks, kind })
    }

    /// `S_Θ`: symmetrizers over the rows of `t`, embedded at degree `m`.
    pub fn rows(t: &YoungTableau, degree: usize) -> Result<Self> {
        Self::new(degree, t.rows().to_vec(), SetKind::Symmetric)
    }

    /// `A_Θ`: antisymmetrizers over the columns of `t`.
    pub fn columns(t: &YoungTableau, degree: usize) -> Result<Self> {
        Self::new(degree, t.columns(), SetKind::Antisymmetric)
    }

    /// The sets `kind` of `t`, rows for symmetric and columns otherwise.
    pub fn of_tableau(t: &YoungTableau, kind: SetKind, degree: usize) -> Result<Self> {
        match kind {
            SetKind::Symmetric => Self::rows(t, degree),
            SetKind::Antisymmetric => Self::columns(t, degree),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn kind(&self) -> SetKind {
        self.kind
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    fn nontrivial(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.blocks.iter().filter(|b| b.len() > 1)
    }

    pub fn is_trivial(&self) -> bool {
        self.nontrivial().next().is_none()
    }

    /// `ρ X ρ⁻¹`: every block `b` becomes `ρ(b)`.
    pub fn conjugate(&self, rho: &Permutation) -> Result<Self> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&v| rho.image(v)).collect())
            .collect();
        Self::new(self.degree, blocks, self.kind)
    }

    pub fn element(&self) -> AlgebraElement {
        let mut acc = AlgebraElement::identity(self.degree);
        for b in self.nontrivial() {
            acc = &acc * &block_element(self.degree, b, self.kind);
        }
        acc
    }
}

/// Equality as operators: singleton blocks are ignored.
impl PartialEq for SymmetrizerSet {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.kind == other.kind && self.nontrivial().eq(other.nontrivial())
    }
}

impl core::hash::Hash for SymmetrizerSet {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.kind.hash(state);
        for b in self.nontrivial() {
            b.hash(state);
        }
    }
}

impl fmt::Display for SymmetrizerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        write!(f, "{}", self.kind.letter())?;
        for b in self.nontrivial() {
            let cells: Vec<String> = b.iter().map(|v| format!("{v}")).collect();
            write!(f, "{{{}}}", cells.join(","))?;
        }
        Ok(())
    }
}

fn block_element(degree: usize, block: &[usize], kind: SetKind) -> AlgebraElement {
    let k = block.len();
    let fact: i64 = (1..=k as i64).product();
    let mut terms = Vec::with_capacity(fact as usize);
    for local in Permutation::all(k) {
        let mut images: Vec<usize> = (1..=degree).collect();
        for (i, &a) in block.iter().enumerate() {
            images[a - 1] = block[local.image(i + 1) - 1];
        }
        let sign = match kind {
            SetKind::Symmetric => 1,
            SetKind::Antisymmetric => local.sign() as i64,
        };
        let p = Permutation::from_images(&images).expect("block permutation");
        terms.push((p, Rational::new(BigInt::from(sign), BigInt::from(fact))));
    }
    AlgebraElement::from_rational_terms(degree, terms).expect("degrees agree")
}

/// `Π_b (1/|b|!) Σ_{σ ∈ S_b} (sign σ) σ` at degree `m`.
pub fn symmetrizer(blocks: &[Vec<usize>], degree: usize, kind: SetKind) -> Result<AlgebraElement> {
    Ok(SymmetrizerSet::new(degree, blocks.to_vec(), kind)?.element())
}

/// A factor of an [`OperatorWord`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Set(SymmetrizerSet),
    Perm(Permutation),
}

impl Factor {
    fn element(&self) -> AlgebraElement {
        match self {
            Factor::Set(s) => s.element(),
            Factor::Perm(p) => AlgebraElement::from_permutation(p.clone()),
        }
    }

    fn dagger(&self) -> Factor {
        match self {
            Factor::Set(s) => Factor::Set(s.clone()),
            Factor::Perm(p) => Factor::Perm(p.inverse()),
        }
    }
}

/// A scalar times a product of symmetrizer sets and permutations, the
/// unexpanded form of a birdtrack operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorWord {
    degree: usize,
    scale: Surd,
    factors: Vec<Factor>,
}

impl OperatorWord {
    pub fn new(degree: usize, scale: Surd, factors: Vec<Factor>) -> Self {
        OperatorWord { degree, scale, factors }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn scale(&self) -> &Surd {
        &self.scale
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn with_scale(mut self, scale: Surd) -> Self {
        self.scale = scale;
        self
    }

    /// Drops a factor equal to its left neighbour (both are idempotents).
    pub fn merge_repeats(mut self) -> Self {
        self.factors.retain(|f| !matches!(f, Factor::Set(s) if s.is_trivial()));
        self.factors
            .dedup_by(|b, a| matches!((a, b), (Factor::Set(x), Factor::Set(y)) if x == y));
        self
    }

    pub fn dagger(&self) -> Self {
        OperatorWord {
            degree: self.degree,
            scale: self.scale.clone(),
            factors: self.factors.iter().rev().map(Factor::dagger).collect(),
        }
    }

    /// Expands the word in the permutation basis.
    pub fn evaluate(&self) -> AlgebraElement {
        let mut acc = AlgebraElement::identity(self.degree);
        for f in &self.factors {
            acc = match f {
                Factor::Perm(p) => acc.right_permute(p).expect("degrees agree"),
                Factor::Set(_) => &acc * &f.element(),
            };
        }
        acc.scale(&self.scale)
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale.terms().count() <= 1 {
            write!(f, "{}", self.scale)?;
        } else {
            write!(f, "({})", self.scale)?;
        }
        for factor in &self.factors {
            match factor {
                Factor::Set(s) => write!(f, "·{s}")?,
                Factor::Perm(p) => write!(f, "·{p}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProjectorKind {
    Young,
    Staircase,
    Mold,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projector {
    pub tableau: YoungTableau,
    pub kind: ProjectorKind,
    pub element: AlgebraElement,
    /// The scalar in front of the bare product (`α`, `β`, or the staircase
    /// product of the `α`s).
    pub normalization: Surd,
    pub word: OperatorWord,
}

impl Projector {
    pub fn dimension(&self) -> PolyN {
        dimension_poly(self)
    }
}

/// `1/c` for `x² = c·x`.
pub(crate) fn idempotent_scale(x: &AlgebraElement, label: &YoungTableau) -> Result<Surd> {
    let c = (x * x)
        .ratio_to(x)
        .filter(|c| !c.is_zero())
        .ok_or_else(|| Error::NotProportional(label.bracket()))?;
    c.inverse()
}

/// `Y_Θ = α_Θ S_Θ A_Θ` at the tableau's own degree.
pub fn young_projector(t: &YoungTableau) -> Result<Projector> {
    young_projector_at(t, t.size())
}

/// `Y_Θ` canonically embedded at degree `m ≥ |Θ|`.
pub fn young_projector_at(t: &YoungTableau, degree: usize) -> Result<Projector> {
    let s = SymmetrizerSet::rows(t, degree)?;
    let a = SymmetrizerSet::columns(t, degree)?;
    let bare = &s.element() * &a.element();
    let alpha = idempotent_scale(&bare, t)?;
    Ok(Projector {
        tableau: t.clone(),
        kind: ProjectorKind::Young,
        element: bare.scale(&alpha),
        word: OperatorWord::new(degree, alpha.clone(), alloc::vec![Factor::Set(s), Factor::Set(a)]).merge_repeats(),
        normalization: alpha,
    })
}

/// The printed closed form `Π(row lengths)! · Π(column lengths)! / H_Θ`.
pub fn alpha_closed_form(t: &YoungTableau) -> Rational {
    let fact = |n: usize| -> BigInt { (1..=n).map(BigInt::from).product() };
    let rows: BigInt = t.shape().rows().iter().map(|&r| fact(r)).product();
    let cols: BigInt = t.shape().columns().iter().map(|&c| fact(c)).product();
    Rational::new(rows * cols, BigInt::from(t.shape().hook_length()))
}

/// Rebuilds the tableau whose row and column sets are `s` and `a`.
fn tableau_from_sets(s: &SymmetrizerSet, a: &SymmetrizerSet) -> Result<YoungTableau> {
    let bad = || Error::InvalidTableau(format!("{s} and {a} are not the sets of one tableau"));
    if s.kind() != SetKind::Symmetric || a.kind() != SetKind::Antisymmetric || s.degree() != a.degree() {
        return Err(bad());
    }
    let mut rows = s.blocks().to_vec();
    rows.sort_by_key(|r| r[0]);
    let t = YoungTableau::new(rows).map_err(|_| bad())?;
    let mut cols = t.columns();
    let mut given = a.blocks().to_vec();
    cols.sort();
    given.sort();
    if cols != given {
        return Err(bad());
    }
    Ok(t)
}

/// Evaluates `O = S · M · A` for the row and column sets of one tableau
/// `Θ` and returns `λ` with `O = λ·Y_Θ`, together with `Θ`.
pub fn cancel_simplify(s: &SymmetrizerSet, mid: &AlgebraElement, a: &SymmetrizerSet) -> Result<(Surd, YoungTableau)> {
    let t = tableau_from_sets(s, a)?;
    let o = &(&s.element() * mid) * &a.element();
    let y = young_projector_at(&t, s.degree())?.element;
    if o.is_zero() {
        return Ok((Surd::zero(), t));
    }
    let lambda = o.identity_coefficient().checked_div(&y.identity_coefficient())?;
    if y.scale(&lambda) != o {
        return Err(Error::NotProportional(t.bracket()));
    }
    Ok((lambda, t))
}

/// `Y_{Θ(n-2)} ⋯ Y_{Θ(1)} Y_Θ Y_{Θ(1)} ⋯ Y_{Θ(n-2)}`, rescaled to be idempotent.
pub fn hermitian_staircase(t: &YoungTableau) -> Result<Projector> {
    let n = t.size();
    let depth = n.saturating_sub(2);
    let mut factors = Vec::new();
    let mut scale = Surd::one();
    let mut levels: Vec<usize> = (1..=depth).rev().collect();
    levels.push(0);
    levels.extend(1..=depth);
    for k in levels {
        let y = young_projector_at(&t.ancestor(k)?, n)?;
        scale = &scale * &y.normalization;
        factors.extend(y.word.factors().iter().cloned());
    }
    let word = OperatorWord::new(n, scale, factors);
    let raw = word.evaluate();
    let fix = idempotent_scale(&raw, t)?;
    let normalization = word.scale() * &fix;
    Ok(Projector {
        tableau: t.clone(),
        kind: ProjectorKind::Staircase,
        element: raw.scale(&fix),
        word: word.with_scale(normalization.clone()),
        normalization,
    })
}

/// Which branch of the MOLD construction applies to `t`.
pub fn mold_branch(t: &YoungTableau) -> (usize, SetKind) {
    let k = t.mold();
    let anc = t.ancestor(k).expect("mold never exceeds the depth");
    // tie-break: a tableau ordered both ways takes the row branch
    let first = if anc.is_row_ordered() {
        SetKind::Symmetric
    } else {
        SetKind::Antisymmetric
    };
    (k, first)
}

/// The unnormalized MOLD word
/// `X_{Θ(k)} ⋯ X_{Θ(1)} · X_Θ X'_Θ X_Θ · X_{Θ(1)} ⋯ X_{Θ(k)}` of length
/// `2k + 3`, with set kinds alternating outward from the ordered ancestor.
pub fn mold_word(t: &YoungTableau) -> Result<OperatorWord> {
    let n = t.size();
    let (k, first) = mold_branch(t);
    let kind_at = |level: usize| {
        if (k - level).is_multiple_of(2) {
            first
        } else {
            first.opposite()
        }
    };
    let mut factors = Vec::with_capacity(2 * k + 3);
    for level in (1..=k).rev() {
        factors.push(Factor::Set(SymmetrizerSet::of_tableau(
            &t.ancestor(level)?,
            kind_at(level),
            n,
        )?));
    }
    let middle = kind_at(0);
    for kind in [middle, middle.opposite(), middle] {
        factors.push(Factor::Set(SymmetrizerSet::of_tableau(t, kind, n)?));
    }
    for level in 1..=k {
        factors.push(Factor::Set(SymmetrizerSet::of_tableau(
            &t.ancestor(level)?,
            kind_at(level),
            n,
        )?));
    }
    Ok(OperatorWord::new(n, Surd::one(), factors))
}

/// `β_Θ · P̄_Θ` with `P̄_Θ` the MOLD word and `β_Θ` forced by idempotency.
pub fn hermitian_mold(t: &YoungTableau) -> Result<Projector> {
    let word = mold_word(t)?;
    let bare = word.evaluate();
    let beta = idempotent_scale(&bare, t)?;
    Ok(Projector {
        tableau: t.clone(),
        kind: ProjectorKind::Mold,
        element: bare.scale(&beta),
        word: word.merge_repeats().with_scale(beta.clone()),
        normalization: beta,
    })
}

pub fn projector(t: &YoungTableau, kind: ProjectorKind) -> Result<Projector> {
    match kind {
        ProjectorKind::Young => young_projector(t),
        ProjectorKind::Staircase => hermitian_staircase(t),
        ProjectorKind::Mold => hermitian_mold(t),
    }
}

/// `tr(P)`, the dimension of the irreducible as a polynomial in `N`.
pub fn dimension_poly(p: &Projector) -> PolyN {
    p.element.trace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::rational;
    use alloc::vec;

    fn t(rows: &[&[usize]]) -> YoungTableau {
        YoungTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn cyc(m: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(m, cycles).unwrap()
    }

    fn sym(m: usize, blocks: &[&[usize]]) -> AlgebraElement {
        symmetrizer(
            &blocks.iter().map(|b| b.to_vec()).collect::<Vec<_>>(),
            m,
            SetKind::Symmetric,
        )
        .unwrap()
    }

    fn asym(m: usize, blocks: &[&[usize]]) -> AlgebraElement {
        symmetrizer(
            &blocks.iter().map(|b| b.to_vec()).collect::<Vec<_>>(),
            m,
            SetKind::Antisymmetric,
        )
        .unwrap()
    }

    fn q(n: i64, d: i64) -> Surd {
        Surd::from_rational(rational(n, d))
    }

    #[test]
    fn symmetrizer_support() {
        let s = sym(5, &[&[1, 3, 4]]);
        assert_eq!(s.len(), 6);
        for (p, c) in s.terms() {
            assert_eq!(c, &q(1, 6));
            assert_eq!(p.image(2), 2);
            assert_eq!(p.image(5), 5);
        }
        let a = asym(2, &[&[1, 2]]);
        let expected = AlgebraElement::from_rational_terms(
            2,
            vec![
                (Permutation::identity(2), rational(1, 2)),
                (cyc(2, &[&[1, 2]]), rational(-1, 2)),
            ],
        )
        .unwrap();
        assert_eq!(a, expected);
        assert_eq!(&sym(3, &[&[1, 2]]) * &sym(3, &[&[1, 2, 3]]), sym(3, &[&[1, 2, 3]]));
        assert_eq!(
            symmetrizer(&[vec![1, 2], vec![2, 3]], 3, SetKind::Symmetric),
            Err(Error::InvalidBlocks(3))
        );
    }

    #[test]
    fn young_projectors() {
        assert_eq!(
            young_projector(&t(&[&[1, 2, 3]])).unwrap().element,
            sym(3, &[&[1, 2, 3]])
        );
        let y = young_projector(&t(&[&[1, 3], &[2]])).unwrap();
        let expected = AlgebraElement::from_rational_terms(
            3,
            vec![
                (Permutation::identity(3), rational(1, 3)),
                (cyc(3, &[&[1, 2]]), rational(-1, 3)),
                (cyc(3, &[&[1, 3]]), rational(1, 3)),
                (cyc(3, &[&[1, 2, 3]]), rational(-1, 3)),
            ],
        )
        .unwrap();
        assert_eq!(y.element, expected);
        assert_eq!(
            young_projector(&t(&[&[1, 2, 3], &[4, 5]])).unwrap().normalization,
            q(2, 1)
        );
    }

    #[test]
    fn alpha_matches_closed_form() {
        for n in 1..=5 {
            for tab in YoungTableau::all(n) {
                let y = young_projector(&tab).unwrap();
                assert_eq!(y.normalization, Surd::from_rational(alpha_closed_form(&tab)), "{tab}");
            }
        }
    }

    #[test]
    fn cancellation_with_identity_middle() {
        let tab = t(&[&[1, 2], &[3]]);
        let s = SymmetrizerSet::rows(&tab, 3).unwrap();
        let a = SymmetrizerSet::columns(&tab, 3).unwrap();
        let (lambda, back) = cancel_simplify(&s, &AlgebraElement::identity(3), &a).unwrap();
        assert_eq!(back, tab);
        assert_eq!(lambda, q(3, 4));
    }

    #[test]
    fn cancellation_of_wedged_ancestors() {
        // O = S_Θ A_{Θ(2)} S_{Θ(1)} A_Θ for Θ = [[1,2,5],[3,4]]
        let tab = t(&[&[1, 2, 5], &[3, 4]]);
        let s = SymmetrizerSet::rows(&tab, 5).unwrap();
        let a = SymmetrizerSet::columns(&tab, 5).unwrap();
        let mid = &SymmetrizerSet::columns(&tab.ancestor(2).unwrap(), 5).unwrap().element()
            * &SymmetrizerSet::rows(&tab.ancestor(1).unwrap(), 5).unwrap().element();
        let (lambda, _) = cancel_simplify(&s, &mid, &a).unwrap();
        // brute force over all 120 permutations of the product
        let o = s.element().multiply_naive(&mid).multiply_naive(&a.element());
        let y = young_projector(&tab).unwrap().element;
        assert!(!lambda.is_zero());
        assert_eq!(o, y.scale(&lambda));
        assert_eq!(lambda, q(3, 8));
    }

    #[test]
    fn cancellation_rejects_foreign_sets() {
        let tab = t(&[&[1, 2], &[3]]);
        let s = SymmetrizerSet::rows(&tab, 3).unwrap();
        let a = SymmetrizerSet::columns(&t(&[&[1, 3], &[2]]), 3).unwrap();
        assert!(matches!(
            cancel_simplify(&s, &AlgebraElement::identity(3), &a),
            Err(Error::InvalidTableau(_))
        ));
    }

    #[test]
    fn three_box_hermitian_projectors() {
        let p2 = hermitian_staircase(&t(&[&[1, 2], &[3]])).unwrap();
        let expected = AlgebraElement::from_rational_terms(
            3,
            vec![
                (Permutation::identity(3), rational(2, 6)),
                (cyc(3, &[&[1, 2]]), rational(2, 6)),
                (cyc(3, &[&[1, 3]]), rational(-1, 6)),
                (cyc(3, &[&[2, 3]]), rational(-1, 6)),
                (cyc(3, &[&[1, 2, 3]]), rational(-1, 6)),
                (cyc(3, &[&[1, 3, 2]]), rational(-1, 6)),
            ],
        )
        .unwrap();
        assert_eq!(p2.element, expected);
        let s12 = sym(3, &[&[1, 2]]);
        let a13 = asym(3, &[&[1, 3]]);
        assert_eq!(p2.element, (&(&s12 * &a13) * &s12).scale(&q(4, 3)));
        let p3 = hermitian_staircase(&t(&[&[1, 3], &[2]])).unwrap();
        let a12 = asym(3, &[&[1, 2]]);
        let s13 = sym(3, &[&[1, 3]]);
        assert_eq!(p3.element, (&(&a12 * &s13) * &a12).scale(&q(4, 3)));
        assert_eq!(
            hermitian_staircase(&t(&[&[1, 2, 3, 4]])).unwrap().element,
            sym(4, &[&[1, 2, 3, 4]])
        );
    }

    #[test]
    fn mold_words() {
        let p = hermitian_mold(&t(&[&[1, 2], &[3]])).unwrap();
        assert_eq!(p.normalization, q(4, 3));
        assert_eq!(p.word.to_string(), "4/3·S{1,2}·A{1,3}·S{1,2}");
        let p = hermitian_mold(&t(&[&[1, 3], &[2]])).unwrap();
        assert_eq!(p.word.to_string(), "4/3·A{1,2}·S{1,3}·A{1,2}");
        let p = hermitian_mold(&t(&[&[1, 4], &[2], &[3]])).unwrap();
        assert_eq!(p.word.to_string(), "3/2·A{1,2,3}·S{1,4}·A{1,2,3}");
        let p = hermitian_mold(&t(&[&[1, 3], &[2], &[4]])).unwrap();
        assert_eq!(p.word.to_string(), "2·A{1,2}·S{1,3}·A{1,2,4}·S{1,3}·A{1,2}");
    }

    #[test]
    fn dimensions() {
        let n = PolyN::n();
        let d = dimension_poly(&hermitian_mold(&t(&[&[1, 2], &[3]])).unwrap());
        let expected = (&n * &(&n * &n - PolyN::one())).scale(&q(1, 3));
        assert_eq!(d, expected);
        let row = dimension_poly(&young_projector(&t(&[&[1, 2, 3, 4]])).unwrap());
        let expected = (&(&(&n * &PolyN::n_plus(1)) * &PolyN::n_plus(2)) * &PolyN::n_plus(3)).scale(&q(1, 24));
        assert_eq!(row, expected);
        let hook = dimension_poly(&hermitian_staircase(&t(&[&[1, 4], &[2], &[3]])).unwrap());
        let expected = (&(&n * &PolyN::n_plus(-2)) * &(&n * &n - PolyN::one())).scale(&q(1, 8));
        assert_eq!(hook, expected);
    }

    #[test]
    fn hermitian_and_idempotent_up_to_four() {
        for n in 1..=4 {
            for tab in YoungTableau::all(n) {
                let stair = hermitian_staircase(&tab).unwrap();
                let mold = hermitian_mold(&tab).unwrap();
                assert_eq!(stair.element, mold.element, "{tab}");
                assert_eq!(stair.element.dagger(), stair.element);
                assert_eq!(&stair.element * &stair.element, stair.element);
                let y = young_projector(&tab).unwrap().element;
                assert_eq!(&y * &y, y);
            }
        }
    }

    #[test]
    fn young_projectors_are_not_hermitian() {
        for tab in YoungTableau::all(4) {
            let y = young_projector(&tab).unwrap().element;
            let nontrivial = tab.shape().rows()[0] > 1 && tab.shape().rows().len() > 1;
            assert_eq!(y.dagger() != y, nontrivial, "{tab}");
        }
    }
}
