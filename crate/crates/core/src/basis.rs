//! The block matrix of matrix units and its verification suite.
//!
//! Each Young diagram contributes one square block indexed by its standard
//! tableaux. Diagonal sites hold projectors and off-diagonal sites hold
//! transition operators, `𝔪_ij = T_{Θ_i Θ_j}`. Blocks are ordered by
//! diagram in descending lexicographic order and, inside a block, by the
//! canonical tableau order. The global index runs over all blocks in turn.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{AlgebraElement, PreparedElement};
use crate::coefficients::{PolyN, Rational, Surd};
use crate::error::{Error, Result};
use crate::linalg;
use crate::permutations::Permutation;
use crate::projectors::{hermitian_mold, young_projector};
use crate::tableaux::{YoungDiagram, YoungTableau};
use crate::transitions::{transition, TransitionKind};

/// Witnesses kept per identity; the failure count is always exact.
const MAX_WITNESSES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Young,
    Hermitian,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub diagram: YoungDiagram,
    pub tableaux: Vec<YoungTableau>,
    /// `operators[i][j]` maps the image of `tableaux[j]` onto that of
    /// `tableaux[i]`.
    pub operators: Vec<Vec<AlgebraElement>>,
}

impl Block {
    pub fn size(&self) -> usize {
        self.tableaux.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMatrix {
    pub m: usize,
    pub kind: BasisKind,
    pub blocks: Vec<Block>,
}

/// Location of one global entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Site {
    pub block: usize,
    pub row: usize,
    pub col: usize,
}

/// The basis of the given kind, with compact transitions in the Hermitian case.
pub fn assemble(m: usize, kind: BasisKind) -> Result<BasisMatrix> {
    let transitions = match kind {
        BasisKind::Young => TransitionKind::Young,
        BasisKind::Hermitian => TransitionKind::Compact,
    };
    assemble_with(m, kind, transitions)
}

/// Like [`assemble`], choosing the transition construction. The Young kind
/// only accepts Young transitions and the Hermitian kind only unitary ones.
pub fn assemble_with(m: usize, kind: BasisKind, transitions: TransitionKind) -> Result<BasisMatrix> {
    if kind == BasisKind::Young && m > 4 {
        return Err(Error::YoungBeyondFour(m));
    }
    let transitions = match (kind, transitions) {
        (BasisKind::Young, _) => TransitionKind::Young,
        (BasisKind::Hermitian, TransitionKind::Young) => TransitionKind::Compact,
        (_, t) => t,
    };
    let mut blocks = Vec::new();
    for diagram in YoungDiagram::all(m) {
        let tableaux = YoungTableau::of_shape(&diagram);
        let mut operators = Vec::with_capacity(tableaux.len());
        for a in &tableaux {
            let mut row = Vec::with_capacity(tableaux.len());
            for b in &tableaux {
                let op = if a == b {
                    match kind {
                        BasisKind::Young => young_projector(a)?.element,
                        BasisKind::Hermitian => hermitian_mold(a)?.element,
                    }
                } else {
                    transition(a, b, transitions)?.element
                };
                row.push(op);
            }
            operators.push(row);
        }
        blocks.push(Block {
            diagram,
            tableaux,
            operators,
        });
    }
    Ok(BasisMatrix { m, kind, blocks })
}

impl BasisMatrix {
    /// Total number of operators, `m!`.
    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.size() * b.size()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Block::size).collect()
    }

    /// Sizes of the global index range, the number of tableaux.
    pub fn dimension(&self) -> usize {
        self.blocks.iter().map(Block::size).sum()
    }

    pub fn sites(&self) -> Vec<Site> {
        let mut out = Vec::with_capacity(self.len());
        for (block, b) in self.blocks.iter().enumerate() {
            for row in 0..b.size() {
                for col in 0..b.size() {
                    out.push(Site { block, row, col });
                }
            }
        }
        out
    }

    pub fn get(&self, s: Site) -> &AlgebraElement {
        &self.blocks[s.block].operators[s.row][s.col]
    }

    /// The tableau labelling global index `i`.
    pub fn tableau(&self, mut i: usize) -> Option<&YoungTableau> {
        for b in &self.blocks {
            if i < b.size() {
                return Some(&b.tableaux[i]);
            }
            i -= b.size();
        }
        None
    }

    fn label(&self, s: Site) -> String {
        let b = &self.blocks[s.block];
        format!("m[{} <- {}]", b.tableaux[s.row].bracket(), b.tableaux[s.col].bracket())
    }

    /// Replaces block `index` by `O M Oᵀ` for a rational orthogonal `O`.
    pub fn rotate_block(&mut self, index: usize, o: &[Vec<Rational>]) -> Result<()> {
        let block = self.blocks.get_mut(index).ok_or(Error::InvalidBlocks(index))?;
        let n = block.size();
        if o.len() != n || o.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidBlocks(n));
        }
        let zero = AlgebraElement::zero(self.m);
        let mut out = alloc::vec![alloc::vec![zero; n]; n];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                for a in 0..n {
                    for b in 0..n {
                        let c = &o[i][a] * &o[j][b];
                        if c != Rational::from_integer(0.into()) {
                            *slot = &*slot + &block.operators[a][b].scale_rational(&c);
                        }
                    }
                }
            }
        }
        block.operators = out;
        Ok(())
    }
}

/// Outcome of one identity checked over many instances.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Check {
    pub identity: String,
    pub checked: usize,
    pub failures: usize,
    pub witnesses: Vec<String>,
}

impl Check {
    pub fn new(identity: impl Into<String>) -> Self {
        Check {
            identity: identity.into(),
            ..Check::default()
        }
    }

    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn check(&self, identity: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.identity == identity)
    }
}

impl core::fmt::Display for Report {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "pass" } else { "FAIL" };
            writeln!(
                f,
                "{status} {} ({} checked, {} failed)",
                c.identity, c.checked, c.failures
            )?;
            for w in &c.witnesses {
                writeln!(f, "    {w}")?;
            }
        }
        Ok(())
    }
}

/// Maps `f` over `0..n`, in parallel when the `parallel` feature is on.
/// Results come back in index order either way.
fn map_indices<T: Send, F: Fn(usize) -> T + Sync + Send>(n: usize, f: F) -> Vec<T> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// `𝔪_ij 𝔪_kl = δ_jk 𝔪_il` over all ordered pairs of basis operators;
/// products across blocks must vanish.
pub fn verify_multiplication_table(b: &BasisMatrix) -> Report {
    let sites = b.sites();
    let prepared: Vec<PreparedElement> = sites.iter().map(|s| b.get(*s).prepare()).collect();
    let offsets: Vec<usize> = b
        .blocks
        .iter()
        .scan(0, |acc, blk| {
            let start = *acc;
            *acc += blk.size() * blk.size();
            Some(start)
        })
        .collect();
    let position = |s: Site| offsets[s.block] + s.row * b.blocks[s.block].size() + s.col;
    let outcomes = map_indices(sites.len(), |x| {
        let sx = sites[x];
        let mut v = Vec::with_capacity(sites.len());
        for (y, sy) in sites.iter().enumerate() {
            let chained = sx.block == sy.block && sx.col == sy.row;
            let ok = if chained {
                let target = position(Site {
                    block: sx.block,
                    row: sx.row,
                    col: sy.col,
                });
                prepared[x].product_equals(&prepared[y], &prepared[target])
            } else {
                prepared[x].product_is_zero(&prepared[y])
            };
            v.push((y, chained, ok.unwrap_or(false)));
        }
        v
    });
    let mut within = Check::new("m_ij m_jl = m_il");
    let mut vanish = Check::new("m_ij m_kl = 0 for j != k");
    for (x, row) in outcomes.into_iter().enumerate() {
        for (y, chained, ok) in row {
            let w = || format!("{} · {}", b.label(sites[x]), b.label(sites[y]));
            if chained {
                within.record(ok, w);
            } else {
                vanish.record(ok, w);
            }
        }
    }
    Report {
        checks: alloc::vec![within, vanish],
    }
}

/// `⟨𝔪_ij, 𝔪_kl⟩ = δ_ik δ_jl dim(Θ_j)` for the given global pairs.
pub fn verify_orthonormality_pairs(b: &BasisMatrix, pairs: &[(usize, usize)]) -> Result<Report> {
    if b.kind == BasisKind::Young {
        return Err(Error::OrthonormalityOnYoung);
    }
    let sites = b.sites();
    let dims: Vec<Vec<PolyN>> = b
        .blocks
        .iter()
        .map(|blk| (0..blk.size()).map(|i| blk.operators[i][i].trace()).collect())
        .collect();
    let daggers: Vec<Option<PreparedElement>> = {
        let mut used = alloc::vec![false; sites.len()];
        for &(x, _) in pairs {
            used[x] = true;
        }
        sites
            .iter()
            .zip(used)
            .map(|(s, u)| u.then(|| b.get(*s).dagger().prepare()))
            .collect()
    };
    let prepared: Vec<PreparedElement> = sites.iter().map(|s| b.get(*s).prepare()).collect();
    let outcomes = map_indices(pairs.len(), |n| {
        let (x, y) = pairs[n];
        let (sx, sy) = (sites[x], sites[y]);
        let expected = if sx == sy {
            dims[sx.block][sx.col].clone()
        } else {
            PolyN::zero()
        };
        let got = daggers[x]
            .as_ref()
            .expect("dagger prepared")
            .multiply(&prepared[y])
            .map(|p| p.element().trace());
        match got {
            Ok(g) if g == expected => (true, String::new()),
            Ok(g) => (
                false,
                format!("<{}, {}> = {g}, expected {expected}", b.label(sx), b.label(sy)),
            ),
            Err(e) => (false, format!("{e}")),
        }
    });
    let mut check = Check::new("<m_ij, m_kl> = δ_ik δ_jl dim");
    for (ok, w) in outcomes {
        check.record(ok, || w);
    }
    Ok(Report {
        checks: alloc::vec![check],
    })
}

/// Orthonormality over every ordered pair.
pub fn verify_orthonormality(b: &BasisMatrix) -> Result<Report> {
    let n = b.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
    verify_orthonormality_pairs(b, &pairs)
}

/// `Σ P_Θ = id` at degree `m` and, for each `Θ` of size `m-1`, the sum of
/// its descendants' projectors equals the embedded `P_Θ`.
pub fn verify_completeness_and_nesting(m: usize) -> Result<Report> {
    let mut complete = Check::new("sum of projectors = id");
    let mut nesting = Check::new("sum over descendants = parent");
    let mut total = AlgebraElement::zero(m);
    for t in YoungTableau::all(m) {
        total = &total + &hermitian_mold(&t)?.element;
    }
    complete.record(total == AlgebraElement::identity(m), || format!("sum = {total}"));
    if m >= 2 {
        for t in YoungTableau::all(m - 1) {
            let parent = hermitian_mold(&t)?.element.embed(m)?;
            let mut sum = AlgebraElement::zero(m);
            for d in t.descendants() {
                sum = &sum + &hermitian_mold(&d)?.element;
            }
            nesting.record(sum == parent, || format!("descendants of {}", t.bracket()));
        }
    }
    Ok(Report {
        checks: alloc::vec![complete, nesting],
    })
}

/// Rank of the `m! × m!` coefficient matrix in the permutation basis.
pub fn coefficient_rank(b: &BasisMatrix) -> usize {
    let perms: Vec<Permutation> = Permutation::all(b.m).collect();
    let rows: Vec<Vec<Surd>> = b
        .sites()
        .into_iter()
        .map(|s| {
            let op = b.get(s);
            perms.iter().map(|p| op.coefficient(p)).collect()
        })
        .collect();
    linalg::rank(&rows)
}

pub fn verify_linear_independence(b: &BasisMatrix) -> Report {
    let mut check = Check::new("basis spans the group algebra");
    let n = Permutation::all(b.m).count();
    let rank = coefficient_rank(b);
    check.record(rank == n && b.len() == n, || format!("rank {rank} of {n}"));
    Report {
        checks: alloc::vec![check],
    }
}

/// Block sizes equal the tableau counts and their squares sum to `m!`.
pub fn verify_counting(b: &BasisMatrix) -> Report {
    let mut check = Check::new("block sizes and sum of squares");
    let factorial: usize = (1..=b.m).product();
    for blk in &b.blocks {
        let expected = blk.diagram.tableau_count();
        check.record(num_bigint::BigUint::from(blk.size()) == expected, || {
            format!("{} has {} tableaux, expected {expected}", blk.diagram, blk.size())
        });
    }
    check.record(b.len() == factorial, || {
        format!("{} operators for m! = {factorial}", b.len())
    });
    Report {
        checks: alloc::vec![check],
    }
}

/// A pair of distinct tableaux whose Young projectors fail to annihilate
/// each other, the first found in canonical order.
pub fn young_orthogonality_witness(m: usize) -> Result<Option<(YoungTableau, YoungTableau)>> {
    let all = YoungTableau::all(m);
    let ys: Vec<PreparedElement> = all
        .iter()
        .map(|t| young_projector(t).map(|p| p.element.prepare()))
        .collect::<Result<_>>()?;
    for (i, a) in all.iter().enumerate() {
        for (j, b) in all.iter().enumerate() {
            if i != j && a.shape() == b.shape() && !ys[i].product_is_zero(&ys[j])? {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}
