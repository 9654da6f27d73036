//! The star operation on `I x (J ∪ J̄)` and its extension `phi` to subsets.

use std::fmt;

use crate::error::Result;
use crate::table::ActionTable;

/// A W-index, possibly barred. Barring is an involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step {
    pub j: usize,
    pub barred: bool,
}

impl Step {
    pub fn forward(j: usize) -> Self {
        Step { j, barred: false }
    }

    pub fn barred(j: usize) -> Self {
        Step { j, barred: true }
    }

    pub fn bar(self) -> Self {
        Step {
            j: self.j,
            barred: !self.barred,
        }
    }

    /// Every step over a W-basis of the given size, forward first.
    pub fn all(w_size: usize) -> impl Iterator<Item = Step> {
        (0..w_size)
            .map(Step::forward)
            .chain((0..w_size).map(Step::barred))
    }

    /// Renders as `w<j>` or `w<j>~`, using the table's W labels when present.
    pub fn render(self, table: &ActionTable) -> String {
        let name = table.w_name(self.j);
        if self.barred {
            name + "~"
        } else {
            name
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{}{}", self.j, if self.barred { "~" } else { "" })
    }
}

/// A sorted, duplicate-free set of V-indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new() -> Self {
        IndexSet(Vec::new())
    }

    pub fn singleton(i: usize) -> Self {
        IndexSet(vec![i])
    }

    /// Wraps an ascending, duplicate-free vector.
    pub(crate) fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        IndexSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.0.iter().all(|&i| other.contains(i))
    }

    pub fn intersects(&self, other: &IndexSet) -> bool {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small.iter().any(|i| large.contains(i))
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        IndexSet(v)
    }
}

impl From<Vec<usize>> for IndexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for IndexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, i) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

fn check_step(table: &ActionTable, i: usize, x: Step) -> Result<()> {
    table.check_v(i)?;
    table.check_w(x.j)
}

/// `i ⋆ x`: the target of `v_i w_j` for forward `x`, or every `k` with
/// `v_k w_j ∈ F v_i` for barred `x`.
pub fn star(table: &ActionTable, i: usize, x: Step) -> Result<IndexSet> {
    check_step(table, i, x)?;
    Ok(star_unchecked(table, i, x).collect())
}

// Results come out ascending: forward yields at most one index, and the
// inverse index orders sources within a column.
pub(crate) fn star_unchecked(
    table: &ActionTable,
    i: usize,
    x: Step,
) -> impl Iterator<Item = usize> + '_ {
    let forward = if x.barred {
        None
    } else {
        table.target_of(i, x.j)
    };
    let barred = x.barred.then(|| table.sources_into(i, x.j));
    forward.into_iter().chain(barred.into_iter().flatten())
}

/// `phi(U, x)`: the union of `i ⋆ x` over `i ∈ U`.
pub fn phi(table: &ActionTable, u: &IndexSet, x: Step) -> Result<IndexSet> {
    table.check_w(x.j)?;
    for i in u.iter() {
        table.check_v(i)?;
    }
    Ok(phi_unchecked(table, u, x))
}

pub(crate) fn phi_unchecked(table: &ActionTable, u: &IndexSet, x: Step) -> IndexSet {
    u.iter().flat_map(|i| star_unchecked(table, i, x)).collect()
}
