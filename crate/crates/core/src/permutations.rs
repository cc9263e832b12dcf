//! Elements of the symmetric group `S_m`, the primitive invariants.
//!
//! A [`Permutation`] is stored in one-line form. The public API is 1-based:
//! `image(i)` is the image of point `i ∈ 1..=m`. Composition applies the
//! right factor first, `(p∘q)(i) = p(q(i))`, which is the right-to-left
//! reading order of birdtracks.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // 0-based one-line form
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= u8::MAX as usize, "degree {degree} too large");
        Permutation {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from its 1-based one-line form.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let m = images.len();
        if m == 0 || m > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("degree {m} out of range")));
        }
        let mut seen = alloc::vec![false; m];
        let mut out = Vec::with_capacity(m);
        for &v in images {
            if v == 0 || v > m || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 1..={m}"
                )));
            }
            seen[v - 1] = true;
            out.push((v - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    /// Builds a permutation of degree `m` from disjoint 1-based cycles.
    ///
    /// ```
    /// use ybasis_core::Permutation;
    /// let p = Permutation::from_cycles(3, &[&[1, 3, 2]]).unwrap();
    /// assert_eq!(p.to_images(), vec![3, 1, 2]);
    /// ```
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut touched = alloc::vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > degree || touched[a - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "bad cycle {cycle:?} for degree {degree}"
                    )));
                }
                touched[a - 1] = true;
                images[a - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(&images)
    }

    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self> {
        Self::from_cycles(degree, &[&[a, b]])
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// 1-based one-line form.
    pub fn to_images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self ∘ other`: `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Self {
        Permutation {
            images: other.images.iter().map(|&j| self.images[j as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0u8; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn sign(&self) -> i32 {
        // each cycle of length l contributes l - 1 transpositions
        if (self.degree() - self.cycle_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Number of disjoint cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let mut seen = alloc::vec![false; self.degree()];
        let mut count = 0;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
            }
        }
        count
    }

    /// Nontrivial cycles in 1-based notation, each starting at its least
    /// element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Canonical embedding into `S_m`: acts as `self` on the first
    /// `self.degree()` points and fixes the rest.
    pub fn embed(&self, degree: usize) -> Result<Self> {
        if degree < self.degree() {
            return Err(Error::Embedding {
                from: self.degree(),
                to: degree,
            });
        }
        let mut images = self.images.clone();
        images.extend(self.degree() as u8..degree as u8);
        Ok(Permutation { images })
    }

    /// Lexicographic rank of the one-line form in `0..m!`.
    pub fn rank(&self) -> usize {
        let m = self.degree();
        let mut rank = 0usize;
        for i in 0..m {
            let smaller = self.images[i + 1..].iter().filter(|&&v| v < self.images[i]).count();
            rank = rank * (m - i) + smaller;
        }
        rank
    }

    /// Inverse of [`Permutation::rank`].
    pub fn unrank(degree: usize, mut rank: usize) -> Self {
        let mut digits = alloc::vec![0usize; degree];
        for i in (0..degree).rev() {
            let base = degree - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<u8> = (0..degree as u8).collect();
        let images = digits.into_iter().map(|d| pool.remove(d)).collect();
        Permutation { images }
    }

    /// All of `S_m` in lexicographic (rank) order.
    pub fn all(degree: usize) -> impl Iterator<Item = Permutation> {
        let count: usize = (1..=degree).product();
        (0..count).map(move |r| Permutation::unrank(degree, r))
    }

    /// Cycle notation, e.g. `(1 3 2)`; the identity prints as `()`.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return String::from("()");
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            for (k, v) in c.iter().enumerate() {
                if k > 0 {
                    s.push(' ');
                }
                s.push_str(&format!("{v}"));
            }
            s.push(')');
        }
        s
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.cycle_string(), self.to_images())
    }
}
