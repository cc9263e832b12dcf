//! Exact symbolic construction of the multiplet basis of the algebra of
//! SU(N) invariants on `V^{⊗m}`.
//!
//! Every invariant is an element of the group algebra of `S_m` with exact
//! coefficients (rationals extended by square roots). `N` stays symbolic:
//! traces and dimensions come out as polynomials in `N`. The crate builds
//!
//! * Young projectors `Y_Θ = α_Θ S_Θ A_Θ` and their transition operators
//!   (valid for `m ≤ 4`),
//! * Hermitian Young projectors in staircase and MOLD form,
//! * unitary transition operators, both the general sandwich form and the
//!   compact cut-and-glue form,
//!
//! assembles them into the block matrix of matrix units, and verifies its
//! multiplication table, orthonormality, completeness and rank exactly.
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is
//! disabled. The `parallel` feature spreads the verification loops over a
//! rayon thread pool.
//!
//! # Conventions
//!
//! Permutations compose right to left: `p.compose(&q)` applies `q` first,
//! matching the right-to-left reading of birdtracks. With this convention
//! `(1 2)∘(1 3) = (1 3 2)`.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod algebra;
pub mod basis;
pub mod coefficients;
mod error;
mod group;
mod kernel;
pub mod linalg;
pub mod matrix_rep;
pub mod permutations;
pub mod projectors;
pub mod tableaux;
pub mod transitions;

pub use algebra::{AlgebraElement, PreparedElement};
pub use basis::{BasisKind, BasisMatrix, Block, Check, Report};

pub use coefficients::{PolyN, Rational, Surd};
pub use error::{Error, Result};

pub use matrix_rep::ConcreteMatrix;
pub use permutations::Permutation;
pub use projectors::{OperatorWord, Projector, ProjectorKind, SetKind, SymmetrizerSet};
pub use tableaux::{tableau_permutation, YoungDiagram, YoungTableau};
pub use transitions::{TransitionKind, TransitionOperator};
