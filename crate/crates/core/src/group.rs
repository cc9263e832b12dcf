//! Cached multiplication tables of `S_m` for small `m`.

use alloc::boxed::Box;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::permutations::Permutation;

/// Largest degree with a cached Cayley table (`720² · 2` bytes at `m = 6`).
pub(crate) const MAX_TABLE_DEGREE: usize = 6;

pub(crate) struct SymmetricGroup {
    pub order: usize,
    pub elements: Vec<Permutation>,
    // table[a * order + b] = rank(elements[a] ∘ elements[b])
    table: Vec<u16>,
}

impl SymmetricGroup {
    fn build(degree: usize) -> Self {
        let elements: Vec<Permutation> = Permutation::all(degree).collect();
        let order = elements.len();
        let mut table = Vec::with_capacity(order * order);
        for a in &elements {
            for b in &elements {
                table.push(a.compose_unchecked(b).rank() as u16);
            }
        }
        SymmetricGroup { order, elements, table }
    }

    #[inline]
    pub fn row(&self, a: usize) -> &[u16] {
        &self.table[a * self.order..(a + 1) * self.order]
    }
}

static TABLES: [OnceBox<SymmetricGroup>; MAX_TABLE_DEGREE + 1] = [
    OnceBox::new(),
    OnceBox::new(),
    OnceBox::new(),
    OnceBox::new(),
    OnceBox::new(),
    OnceBox::new(),
    OnceBox::new(),
];

/// The cached group of the given degree, if it is small enough to tabulate.
pub(crate) fn group(degree: usize) -> Option<&'static SymmetricGroup> {
    if degree == 0 || degree > MAX_TABLE_DEGREE {
        return None;
    }
    Some(TABLES[degree].get_or_init(|| Box::new(SymmetricGroup::build(degree))))
}
