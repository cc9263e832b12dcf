use std::time::Instant;

use ybasis_core::basis::young_orthogonality_witness;
use ybasis_core::projectors::{hermitian_mold, young_projector};
use ybasis_core::transitions::young_transition;
use ybasis_core::{tableau_permutation, YoungTableau};

fn t(rows: &[&[usize]]) -> YoungTableau {
    YoungTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

#[test]
fn young_projectors_overlap_at_five() {
    let (a, b) = young_orthogonality_witness(5).unwrap().expect("a witness exists");
    assert_ne!(a, b);
    assert_eq!(a.shape(), b.shape());
    let ya = young_projector(&a).unwrap().element;
    let yb = young_projector(&b).unwrap().element;
    assert!(!(&ya * &yb).is_zero());
}

#[test]
fn young_transition_adjoint_is_not_the_reverse() {
    let (a, b) = (t(&[&[1, 2], &[3]]), t(&[&[1, 3], &[2]]));
    let forward = young_transition(&a, &b).unwrap().element;
    let back = young_transition(&b, &a).unwrap().element;
    assert_ne!(forward.dagger(), back);
}

#[test]
fn conjugated_hermitian_projectors_overlap_at_six() {
    let start = Instant::now();
    let theta = t(&[&[1, 3, 5], &[2, 4], &[6]]);
    let phi = t(&[&[1, 2, 6], &[3, 5], &[4]]);
    let rho = tableau_permutation(&theta, &phi).unwrap();
    assert_eq!(rho.cycle_string(), "(2 3)(4 6 5)");
    let p_theta = hermitian_mold(&theta).unwrap().element;
    let moved = hermitian_mold(&phi).unwrap().element.conjugate(&rho).unwrap();
    assert_ne!(p_theta, moved);
    assert!(!(&p_theta * &moved).is_zero());
    // The Young projectors still conjugate into each other.
    let y_moved = young_projector(&phi).unwrap().element.conjugate(&rho).unwrap();
    assert_eq!(young_projector(&theta).unwrap().element, y_moved);
    assert!(start.elapsed().as_secs() < 60);
}
