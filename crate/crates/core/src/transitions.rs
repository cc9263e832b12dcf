//! Transition operators between equivalent irreducibles.
//!
//! `T_{ΘΦ}` maps the image of the projector for `Φ` onto that of `Θ`:
//! `P_Θ T = T = T P_Φ`. The Young kind uses non-Hermitian Young projectors
//! and only closes into a matrix-unit basis for `m ≤ 4`. The unitary kinds
//! satisfy `T_{ΘΦ} T_{ΘΦ}† = P_Θ`, which fixes `τ²` as a positive rational;
//! `τ` is always the positive root.

use alloc::vec::Vec;

use num_traits::Signed;

use crate::algebra::AlgebraElement;
use crate::coefficients::{format_rational, Rational, Surd};
use crate::error::{Error, Result};
use crate::projectors::{hermitian_mold, mold_branch, mold_word, young_projector, Factor, OperatorWord, SetKind};
use crate::tableaux::{tableau_permutation, YoungTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransitionKind {
    Young,
    General,
    Compact,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionOperator {
    /// Target tableau `Θ`.
    pub to_tableau: YoungTableau,
    /// Source tableau `Φ`.
    pub from_tableau: YoungTableau,
    pub kind: TransitionKind,
    pub element: AlgebraElement,
    /// `τ²`; `1` for the Young kind, which carries no extra normalization.
    pub tau_squared: Rational,
    pub word: OperatorWord,
}

impl TransitionOperator {
    pub fn tau(&self) -> Surd {
        Surd::sqrt(&self.tau_squared).expect("τ² is positive")
    }
}

fn same_shape(theta: &YoungTableau, phi: &YoungTableau) -> Result<()> {
    if theta.shape() != phi.shape() {
        return Err(Error::ShapeMismatch(theta.bracket(), phi.bracket()));
    }
    Ok(())
}

/// `T_{ΘΦ} = ρ_{ΘΦ} Y_Φ` (which equals `Y_Θ ρ_{ΘΦ}`), for `m ≤ 4`.
pub fn young_transition(theta: &YoungTableau, phi: &YoungTableau) -> Result<TransitionOperator> {
    same_shape(theta, phi)?;
    if theta.size() > 4 {
        return Err(Error::YoungBeyondFour(theta.size()));
    }
    let rho = tableau_permutation(theta, phi)?;
    let y = young_projector(phi)?;
    let mut factors = alloc::vec![Factor::Perm(rho.clone())];
    factors.extend(y.word.factors().iter().cloned());
    Ok(TransitionOperator {
        to_tableau: theta.clone(),
        from_tableau: phi.clone(),
        kind: TransitionKind::Young,
        element: y.element.left_permute(&rho)?,
        tau_squared: Rational::from_integer(1.into()),
        word: OperatorWord::new(theta.size(), y.normalization, factors),
    })
}

/// Finds `τ²` with `(τ T)(τ T)† = P_Θ`.
fn normalize(
    bare: &AlgebraElement,
    p_theta: &AlgebraElement,
    theta: &YoungTableau,
    phi: &YoungTableau,
) -> Result<Rational> {
    if bare.is_zero() {
        return Err(Error::VanishingNormalization(theta.bracket(), phi.bracket()));
    }
    let mu = (bare * &bare.dagger())
        .ratio_to(p_theta)
        .ok_or_else(|| Error::NotProportional(theta.bracket()))?;
    let mu = mu
        .to_rational()
        .ok_or_else(|| Error::BadNormalization(alloc::format!("1/({mu})")))?;
    if !mu.is_positive() {
        return Err(Error::BadNormalization(format_rational(&mu.recip())));
    }
    Ok(mu.recip())
}

/// `T_{ΘΦ} = τ · P_Θ ρ_{ΘΦ} P_Φ` with Hermitian projectors in MOLD form.
pub fn unitary_transition_general(theta: &YoungTableau, phi: &YoungTableau) -> Result<TransitionOperator> {
    same_shape(theta, phi)?;
    let rho = tableau_permutation(theta, phi)?;
    let p_theta = hermitian_mold(theta)?;
    let p_phi = hermitian_mold(phi)?;
    let bare = &p_theta.element.right_permute(&rho)? * &p_phi.element;
    let tau_squared = normalize(&bare, &p_theta.element, theta, phi)?;
    let tau = Surd::sqrt(&tau_squared)?;
    let mut factors: Vec<Factor> = p_theta.word.factors().to_vec();
    factors.push(Factor::Perm(rho));
    factors.extend(p_phi.word.factors().iter().cloned());
    let scale = &(&tau * &p_theta.normalization) * &p_phi.normalization;
    Ok(TransitionOperator {
        to_tableau: theta.clone(),
        from_tableau: phi.clone(),
        kind: TransitionKind::General,
        element: bare.scale(&tau),
        tau_squared,
        word: OperatorWord::new(theta.size(), scale, factors),
    })
}

/// Positions of `A_Θ` among the three middle factors of an unmerged MOLD
/// word: one copy when the middle reads `S A S`, two for `A S A`.
fn antisymmetrizer_sites(t: &YoungTableau) -> Vec<usize> {
    let (k, first) = mold_branch(t);
    let middle = if k % 2 == 0 { first } else { first.opposite() };
    match middle {
        SetKind::Symmetric => alloc::vec![k + 1],
        SetKind::Antisymmetric => alloc::vec![k, k + 2],
    }
}

/// Index of the cut in each MOLD word.
fn cut_sites(theta: &YoungTableau, phi: &YoungTableau) -> Result<(usize, usize)> {
    let a = antisymmetrizer_sites(theta);
    let b = antisymmetrizer_sites(phi);
    match (a.as_slice(), b.as_slice()) {
        ([x], [y]) => Ok((*x, *y)),
        // one copy against two: left-most in Θ, right-most in Φ
        ([x], [.., y]) | ([x, ..], [y]) => Ok((*x, *y)),
        // two against two: left-most in both
        ([x, _], [y, _]) => Ok((*x, *y)),
        _ => Err(Error::CutSite(alloc::format!("{theta} / {phi}"))),
    }
}

/// The cut-and-glue form: the MOLD word of `Θ` up to and including the
/// chosen `A_Θ`, then `ρ_{ΘΦ}`, then the MOLD word of `Φ` strictly after
/// the chosen `A_Φ`. Gluing is valid because `A_Θ ρ_{ΘΦ} = ρ_{ΘΦ} A_Φ`.
pub fn unitary_transition_compact(theta: &YoungTableau, phi: &YoungTableau) -> Result<TransitionOperator> {
    same_shape(theta, phi)?;
    let rho = tableau_permutation(theta, phi)?;
    let (cut_theta, cut_phi) = cut_sites(theta, phi)?;
    let w_theta = mold_word(theta)?;
    let w_phi = mold_word(phi)?;
    let mut factors: Vec<Factor> = w_theta.factors()[..=cut_theta].to_vec();
    factors.push(Factor::Perm(rho));
    factors.extend(w_phi.factors()[cut_phi + 1..].iter().cloned());
    let word = OperatorWord::new(theta.size(), Surd::one(), factors).merge_repeats();
    let bare = word.evaluate();
    let p_theta = hermitian_mold(theta)?;
    let tau_squared = normalize(&bare, &p_theta.element, theta, phi)?;
    let tau = Surd::sqrt(&tau_squared)?;
    Ok(TransitionOperator {
        to_tableau: theta.clone(),
        from_tableau: phi.clone(),
        kind: TransitionKind::Compact,
        element: bare.scale(&tau),
        tau_squared,
        word: word.with_scale(tau),
    })
}

pub fn transition(theta: &YoungTableau, phi: &YoungTableau, kind: TransitionKind) -> Result<TransitionOperator> {
    match kind {
        TransitionKind::Young => young_transition(theta, phi),
        TransitionKind::General => unitary_transition_general(theta, phi),
        TransitionKind::Compact => unitary_transition_compact(theta, phi),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::rational;
    use crate::permutations::Permutation;
    use crate::projectors::symmetrizer;

    fn t(rows: &[&[usize]]) -> YoungTableau {
        YoungTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn set(m: usize, blocks: &[&[usize]], kind: SetKind) -> AlgebraElement {
        symmetrizer(&blocks.iter().map(|b| b.to_vec()).collect::<Vec<_>>(), m, kind).unwrap()
    }

    #[test]
    fn three_box_young_transition() {
        let (a, b) = (t(&[&[1, 2], &[3]]), t(&[&[1, 3], &[2]]));
        let tr = young_transition(&a, &b).unwrap();
        let s12 = set(3, &[&[1, 2]], SetKind::Symmetric);
        let a12 = set(3, &[&[1, 2]], SetKind::Antisymmetric);
        let swap = AlgebraElement::from_permutation(Permutation::transposition(3, 2, 3).unwrap());
        let expected = (&(&s12 * &swap) * &a12).scale(&Surd::from_rational(rational(4, 3)));
        assert_eq!(tr.element, expected);
        let back = young_transition(&b, &a).unwrap();
        assert_ne!(tr.element.dagger(), back.element);
        assert_eq!(
            young_transition(&a, &a).unwrap().element,
            young_projector(&a).unwrap().element
        );
    }

    #[test]
    fn young_transitions_stop_at_four() {
        let x = t(&[&[1, 2, 3], &[4, 5]]);
        assert_eq!(young_transition(&x, &x), Err(Error::YoungBeyondFour(5)));
        let err = young_transition(&t(&[&[1, 2]]), &t(&[&[1], &[2]]));
        assert!(matches!(err, Err(Error::ShapeMismatch(..))));
    }

    #[test]
    fn three_box_unitary_transitions() {
        let (a, b) = (t(&[&[1, 2], &[3]]), t(&[&[1, 3], &[2]]));
        let s12 = set(3, &[&[1, 2]], SetKind::Symmetric);
        let a12 = set(3, &[&[1, 2]], SetKind::Antisymmetric);
        let swap = AlgebraElement::from_permutation(Permutation::transposition(3, 2, 3).unwrap());
        let tau = Surd::sqrt(&rational(4, 3)).unwrap();
        let expected = (&(&s12 * &swap) * &a12).scale(&tau);
        for kind in [TransitionKind::General, TransitionKind::Compact] {
            let tr = transition(&a, &b, kind).unwrap();
            assert_eq!(tr.tau_squared, rational(4, 3));
            assert!(
                tr.element == expected || tr.element == -&expected,
                "{kind:?}: {}",
                tr.element
            );
        }
        let gen = unitary_transition_general(&a, &a).unwrap();
        assert_eq!(gen.element, hermitian_mold(&a).unwrap().element);
    }

    #[test]
    fn four_box_compact_example() {
        let theta = t(&[&[1, 4], &[2], &[3]]);
        let phi = t(&[&[1, 3], &[2], &[4]]);
        let tr = unitary_transition_compact(&theta, &phi).unwrap();
        assert_eq!(tr.tau_squared, rational(2, 1));
        assert_eq!(tr.word.to_string(), "√2·A{1,2,3}·(3 4)·S{1,3}·A{1,2}");
    }

    #[test]
    fn compact_matches_general_up_to_four() {
        for n in 1..=4 {
            let all = YoungTableau::all(n);
            for a in &all {
                for b in all.iter().filter(|b| b.shape() == a.shape()) {
                    let g = unitary_transition_general(a, b).unwrap();
                    let c = unitary_transition_compact(a, b).unwrap();
                    assert_eq!(g.element, c.element, "{a} {b}");
                    assert_eq!(&g.element * &g.element.dagger(), hermitian_mold(a).unwrap().element);
                }
            }
        }
    }
}
