use proptest::prelude::*;
use ybasis_core::basis::{assemble, BasisKind};
use ybasis_core::coefficients::rational;
use ybasis_core::matrix_rep::represent;
use ybasis_core::{AlgebraElement, Permutation, Surd};

#[test]
fn long_columns_vanish_blockwise() {
    let pairs = (1..=4).flat_map(|m| (1..=4).map(move |n| (m, n)));
    for (m, n) in pairs {
        let b = assemble(m, BasisKind::Hermitian).unwrap();
        for blk in &b.blocks {
            let dead = blk.diagram.longest_column() > n;
            for (i, row) in blk.operators.iter().enumerate() {
                for (j, op) in row.iter().enumerate() {
                    let r = represent(op, n).unwrap();
                    assert_eq!(r.is_zero(), dead, "m={m} n={n} {} {i} {j}", blk.diagram);
                    if i == j {
                        let dim = op.trace().eval(n as u64);
                        assert_eq!(Surd::from_integer(r.rank() as i64), dim);
                        assert_eq!(r.multiply(&r).unwrap(), r);
                    }
                }
            }
        }
    }
}

#[test]
fn symbolic_and_concrete_traces_agree() {
    for m in 1..=4 {
        let b = assemble(m, BasisKind::Hermitian).unwrap();
        for n in 1..=4 {
            for s in b.sites() {
                let op = b.get(s);
                assert_eq!(represent(op, n).unwrap().trace(), op.trace().eval(n as u64));
            }
        }
    }
}

#[test]
fn permutations_become_dependent_below_m() {
    let vectors: Vec<Vec<Surd>> = Permutation::all(3)
        .map(|p| represent(&AlgebraElement::from_permutation(p), 2).unwrap().to_vector())
        .collect();
    assert_eq!(vectors.len(), 6);
    assert_eq!(vectors[0].len(), 64);
    assert_eq!(ybasis_core::linalg::rank(&vectors), 5);
    let full: Vec<Vec<Surd>> = Permutation::all(3)
        .map(|p| represent(&AlgebraElement::from_permutation(p), 3).unwrap().to_vector())
        .collect();
    assert_eq!(ybasis_core::linalg::rank(&full), 6);
}

#[test]
fn three_box_projector_rank() {
    let b = assemble(3, BasisKind::Hermitian).unwrap();
    let p2 = &b.blocks[1].operators[0][0];
    assert_eq!(represent(p2, 3).unwrap().rank(), 8);
    let a123 = &b.blocks[2].operators[0][0];
    assert_eq!(represent(a123, 2).unwrap().rank(), 0);
}

fn arb_element() -> impl Strategy<Value = AlgebraElement> {
    (1usize..=4).prop_flat_map(|m| {
        let order: usize = (1..=m).product();
        let term = (0..order, -5i64..6, 1i64..4, prop::sample::select(vec![1u64, 2, 5]));
        prop::collection::vec(term, 0..6).prop_map(move |terms| {
            let perms: Vec<Permutation> = Permutation::all(m).collect();
            AlgebraElement::from_terms(
                m,
                terms
                    .into_iter()
                    .map(|(p, n, d, r)| (perms[p].clone(), Surd::term(r, rational(n, d)))),
            )
            .unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn concrete_trace_matches_symbolic(a in arb_element(), n in 1usize..=4) {
        prop_assert_eq!(represent(&a, n).unwrap().trace(), a.trace().eval(n as u64));
    }

    #[test]
    fn represent_is_a_homomorphism(a in arb_element(), n in 1usize..=3) {
        let b = a.dagger();
        let (ra, rb) = (represent(&a, n).unwrap(), represent(&b, n).unwrap());
        prop_assert_eq!(&rb, &ra.transpose());
        prop_assert_eq!(represent(&(&a * &b), n).unwrap(), ra.multiply(&rb).unwrap());
    }
}
