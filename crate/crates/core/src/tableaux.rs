//! Young diagrams and standard Young tableaux.
//!
//! Tableaux of a given size are listed diagram by diagram, with diagrams in
//! decreasing lexicographic order (`(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`)
//! and tableaux inside a diagram in increasing order of their row word.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::permutations::Permutation;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() || rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTableau(format!("{rows:?} is not a partition")));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Column lengths, i.e. the transposed diagram.
    pub fn columns(&self) -> Vec<usize> {
        (0..self.rows[0])
            .map(|c| self.rows.iter().filter(|&&r| r > c).count())
            .collect()
    }

    pub fn longest_column(&self) -> usize {
        self.rows.len()
    }

    /// Product over all cells of `arm + leg + 1`.
    pub fn hook_length(&self) -> BigUint {
        let cols = self.columns();
        let mut h = BigUint::one();
        for (r, &len) in self.rows.iter().enumerate() {
            for (c, &depth) in cols.iter().enumerate().take(len) {
                h *= BigUint::from((len - c - 1) + (depth - r - 1) + 1);
            }
        }
        h
    }

    /// Number of standard tableaux, `n!/H`.
    pub fn tableau_count(&self) -> BigUint {
        let fact: BigUint = (1..=self.size()).map(BigUint::from).product();
        fact / self.hook_length()
    }

    /// All partitions of `n` in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<YoungDiagram> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
            if rest == 0 {
                out.push(YoungDiagram { rows: prefix.clone() });
                return;
            }
            for first in (1..=rest.min(max)).rev() {
                prefix.push(first);
                go(rest - first, first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PartialOrd for YoungDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Listing order: by size, then by decreasing lexicographic order of rows.
impl Ord for YoungDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.rows.cmp(&self.rows))
    }
}

/// A standard Young tableau, stored row by row with 1-based entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct YoungTableau {
    shape: YoungDiagram,
    rows: Vec<Vec<usize>>,
}

impl YoungTableau {
    /// Validates that the rows form a standard filling of `1..=n`.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = YoungDiagram::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::InvalidTableau(format!("{rows:?} has no valid shape")))?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n || seen[v] {
                    return Err(Error::InvalidTableau(format!("{rows:?} is not a filling of 1..={n}")));
                }
                seen[v] = true;
                let left_ok = c == 0 || row[c - 1] < v;
                let above_ok = r == 0 || rows[r - 1][c] < v;
                if !left_ok || !above_ok {
                    return Err(Error::InvalidTableau(format!("{rows:?} is not standard")));
                }
            }
        }
        Ok(YoungTableau { shape, rows })
    }

    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let mut cols: Vec<Vec<usize>> = vec![Vec::new(); self.rows[0].len()];
        for row in &self.rows {
            for (c, &v) in row.iter().enumerate() {
                cols[c].push(v);
            }
        }
        cols
    }

    /// Entries read row by row, top to bottom.
    pub fn row_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Entries read column by column, left to right.
    pub fn column_word(&self) -> Vec<usize> {
        self.columns().into_iter().flatten().collect()
    }

    pub fn is_row_ordered(&self) -> bool {
        self.row_word().windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_column_ordered(&self) -> bool {
        self.column_word().windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_ordered(&self) -> bool {
        self.is_row_ordered() || self.is_column_ordered()
    }

    /// The tableau with the box holding `n` removed.
    pub fn parent(&self) -> Result<Self> {
        let n = self.size();
        if n < 2 {
            return Err(Error::NoParent);
        }
        let mut rows = self.rows.clone();
        let r = rows
            .iter()
            .position(|row| row.last() == Some(&n))
            .expect("largest entry sits at a corner");
        rows[r].pop();
        if rows[r].is_empty() {
            rows.pop();
        }
        Ok(YoungTableau {
            shape: YoungDiagram {
                rows: rows.iter().map(Vec::len).collect(),
            },
            rows,
        })
    }

    /// `Θ_(k)`: the parent map applied `k` times.
    pub fn ancestor(&self, k: usize) -> Result<Self> {
        let mut t = self.clone();
        for _ in 0..k {
            t = t.parent()?;
        }
        Ok(t)
    }

    /// All standard tableaux obtained by adding the box `n + 1`, in row order
    /// of the new box.
    pub fn descendants(&self) -> Vec<Self> {
        let next = self.size() + 1;
        let mut out = Vec::new();
        for r in 0..=self.rows.len() {
            let len = self.rows.get(r).map_or(0, Vec::len);
            let fits = r == 0 || self.rows[r - 1].len() > len;
            if !fits {
                continue;
            }
            let mut rows = self.rows.clone();
            if r == rows.len() {
                rows.push(Vec::new());
            }
            rows[r].push(next);
            out.push(YoungTableau {
                shape: YoungDiagram {
                    rows: rows.iter().map(Vec::len).collect(),
                },
                rows,
            });
        }
        out
    }

    /// Measure of lexical disorder: the least `k` with `Θ_(k)` ordered.
    pub fn mold(&self) -> usize {
        let mut t = self.clone();
        let mut k = 0;
        while !t.is_ordered() {
            t = t.parent().expect("tableaux with at most three boxes are ordered");
            k += 1;
        }
        k
    }

    /// Row/column location (0-based) of the entry `v`.
    pub fn position(&self, v: usize) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&x| x == v).map(|c| (r, c)))
    }

    /// All standard tableaux of a fixed shape, sorted by row word.
    pub fn of_shape(shape: &YoungDiagram) -> Vec<Self> {
        Self::all(shape.size())
            .into_iter()
            .filter(|t| &t.shape == shape)
            .collect()
    }

    /// All standard tableaux with `n` boxes in the canonical listing order.
    pub fn all(n: usize) -> Vec<Self> {
        if n == 0 {
            return Vec::new();
        }
        let mut level = vec![YoungTableau {
            shape: YoungDiagram { rows: vec![1] },
            rows: vec![vec![1]],
        }];
        for _ in 1..n {
            level = level.iter().flat_map(YoungTableau::descendants).collect();
        }
        level.sort_by(|a, b| a.shape.cmp(&b.shape).then_with(|| a.row_word().cmp(&b.row_word())));
        level
    }

    /// Bracket form, e.g. `[[1,2],[3]]`.
    pub fn bracket(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|v| format!("{v}")).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bracket())
    }
}

impl fmt::Debug for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bracket())
    }
}

/// The permutation `ρ_{ΘΦ}` sending the entry of each cell of `Φ` to the
/// entry of the same cell of `Θ`, so that `Θ = ρ_{ΘΦ}(Φ)`.
pub fn tableau_permutation(theta: &YoungTableau, phi: &YoungTableau) -> Result<Permutation> {
    if theta.shape != phi.shape {
        return Err(Error::ShapeMismatch(theta.bracket(), phi.bracket()));
    }
    let mut images = vec![0; theta.size()];
    for (rt, rp) in theta.rows.iter().zip(&phi.rows) {
        for (&t, &p) in rt.iter().zip(rp) {
            images[p - 1] = t;
        }
    }
    Permutation::from_images(&images)
}
