use std::time::Instant;

use ybasis_core::basis::{self, assemble, BasisKind};

#[test]
fn four_box_suite() {
    for kind in [BasisKind::Young, BasisKind::Hermitian] {
        let b = assemble(4, kind).unwrap();
        assert_eq!(b.block_sizes(), [1, 3, 2, 3, 1]);
        let table = basis::verify_multiplication_table(&b);
        assert!(table.passed(), "{table}");
        assert_eq!(table.checks.iter().map(|c| c.checked).sum::<usize>(), 576);
        assert!(basis::verify_linear_independence(&b).passed());
    }
    let h = assemble(4, BasisKind::Hermitian).unwrap();
    let ortho = basis::verify_orthonormality(&h).unwrap();
    assert!(ortho.passed(), "{ortho}");
}

#[test]
fn five_box_table() {
    let t = Instant::now();
    let b = assemble(5, BasisKind::Hermitian).unwrap();
    eprintln!("assemble {:?}", t.elapsed());
    let r = basis::verify_multiplication_table(&b);
    eprintln!("table {:?}", t.elapsed());
    assert!(r.passed(), "{r}");
}

#[test]
fn five_box_core_suite() {
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let b = assemble(5, BasisKind::Hermitian).unwrap();
    assert_eq!(b.block_sizes(), [1, 4, 5, 6, 5, 4, 1]);
    assert!(basis::verify_counting(&b).passed());
    assert!(basis::verify_linear_independence(&b).passed());
    assert!(basis::verify_completeness_and_nesting(5).unwrap().passed());
    let mut rng = StdRng::seed_from_u64(5);
    let n = b.len();
    let pairs: Vec<(usize, usize)> = (0..500).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    let r = basis::verify_orthonormality_pairs(&b, &pairs).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.checks[0].checked, 500);
}
