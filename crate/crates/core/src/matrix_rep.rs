//! Concrete matrices of algebra elements on `V^{⊗m}` with `dim V = n`.
//!
//! A permutation `σ` moves tensor factor `k` to position `σ(k)`:
//! `e_{i_1} ⊗ ⋯ ⊗ e_{i_m} ↦ e_{j_1} ⊗ ⋯ ⊗ e_{j_m}` with `j_{σ(k)} = i_k`.
//! This makes `represent` an algebra homomorphism, and `dagger` maps to the
//! transpose. Basis index `i_1 … i_m` is encoded in base `n`, first factor
//! most significant.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::AlgebraElement;
use crate::coefficients::Surd;
use crate::error::{Error, Result};
use crate::linalg;

/// Default limit on the number of rows `n^m`.
pub const DEFAULT_SIZE_CAP: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcreteMatrix {
    n: usize,
    m: usize,
    dim: usize,
    entries: BTreeMap<(usize, usize), Surd>,
}

fn digits(mut index: usize, n: usize, m: usize) -> Vec<usize> {
    let mut d = vec![0; m];
    for slot in d.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    d
}

fn encode(d: &[usize], n: usize) -> usize {
    d.iter().fold(0, |acc, &x| acc * n + x)
}

/// `n^m`, or `None` past `usize`.
fn checked_dim(n: usize, m: usize) -> Option<usize> {
    (0..m).try_fold(1usize, |acc, _| acc.checked_mul(n))
}

/// The matrix of `a` on `V^{⊗m}` with `dim V = n`, refusing more than
/// [`DEFAULT_SIZE_CAP`] rows.
pub fn represent(a: &AlgebraElement, n: usize) -> Result<ConcreteMatrix> {
    represent_with_cap(a, n, DEFAULT_SIZE_CAP)
}

pub fn represent_with_cap(a: &AlgebraElement, n: usize, cap: usize) -> Result<ConcreteMatrix> {
    let m = a.degree();
    let dim = checked_dim(n, m).unwrap_or(usize::MAX);
    if n == 0 || dim > cap {
        return Err(Error::SizeCap { rows: dim, cap });
    }
    let mut out = ConcreteMatrix {
        n,
        m,
        dim,
        entries: BTreeMap::new(),
    };
    let mut target = vec![0; m];
    for col in 0..dim {
        let source = digits(col, n, m);
        for (p, c) in a.terms() {
            for (k, &i) in source.iter().enumerate() {
                target[p.image(k + 1) - 1] = i;
            }
            out.add(encode(&target, n), col, c);
        }
    }
    Ok(out)
}

impl ConcreteMatrix {
    fn add(&mut self, r: usize, c: usize, v: &Surd) {
        let slot = self.entries.entry((r, c)).or_default();
        *slot += v;
        if slot.is_zero() {
            self.entries.remove(&(r, c));
        }
    }

    pub fn identity(n: usize, m: usize) -> Result<Self> {
        represent(&AlgebraElement::identity(m), n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of rows (and columns), `n^m`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, r: usize, c: usize) -> Surd {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    /// Nonzero entries as `(row, column, value)` in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Surd)> {
        self.entries.iter().map(|((r, c), v)| (*r, *c, v))
    }

    pub fn trace(&self) -> Surd {
        let mut t = Surd::zero();
        for ((r, c), v) in &self.entries {
            if r == c {
                t += v;
            }
        }
        t
    }

    pub fn transpose(&self) -> Self {
        ConcreteMatrix {
            entries: self.entries.iter().map(|((r, c), v)| ((*c, *r), v.clone())).collect(),
            ..self.clone()
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DegreeMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let mut by_row: BTreeMap<usize, Vec<(usize, &Surd)>> = BTreeMap::new();
        for ((r, c), v) in &other.entries {
            by_row.entry(*r).or_default().push((*c, v));
        }
        let mut out = ConcreteMatrix {
            entries: BTreeMap::new(),
            ..self.clone()
        };
        for ((r, k), a) in &self.entries {
            if let Some(row) = by_row.get(k) {
                for (c, b) in row {
                    out.add(*r, *c, &(a * b));
                }
            }
        }
        Ok(out)
    }

    /// Exact rank, computed on each connected block of the sparsity graph.
    /// Permutations preserve the multiset of tensor indices, so operators
    /// split into small weight blocks.
    pub fn rank(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.dim).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (r, c) in self.entries.keys() {
            let (a, b) = (find(&mut parent, *r), find(&mut parent, *c));
            if a != b {
                parent[a] = b;
            }
        }
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..self.dim {
            let root = find(&mut parent, i);
            blocks.entry(root).or_default().push(i);
        }
        let mut total = 0;
        for members in blocks.values() {
            if members.len() == 1 && self.get(members[0], members[0]).is_zero() {
                continue;
            }
            let rows: Vec<Vec<Surd>> = members
                .iter()
                .map(|&r| members.iter().map(|&c| self.get(r, c)).collect())
                .collect();
            total += linalg::rank(&rows);
        }
        total
    }

    /// Entries flattened row-major, for rank tests of families of matrices.
    pub fn to_vector(&self) -> Vec<Surd> {
        let mut v = vec![Surd::zero(); self.dim * self.dim];
        for ((r, c), x) in &self.entries {
            v[r * self.dim + c] = x.clone();
        }
        v
    }
}
