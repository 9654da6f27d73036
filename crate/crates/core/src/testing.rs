//! Shared fixtures for unit tests.

use proptest::prelude::*;

use crate::scalar::{FieldSpec, Scalar};
use crate::table::{ActionTable, Entry};

pub(crate) fn table(v: usize, w: usize, entries: &[(usize, usize, usize, i64)]) -> ActionTable {
    let f = FieldSpec::Rational;
    let entries = entries
        .iter()
        .map(|&(i, j, k, c)| Entry::new(i, j, k, Scalar::from_i64(f, c)))
        .collect();
    ActionTable::new(entries, v, w, f).unwrap()
}

/// v_size 3, w_size 1, entries (0,0,1,1) and (2,0,2,1).
pub(crate) fn e1() -> ActionTable {
    table(3, 1, &[(0, 0, 1, 1), (2, 0, 2, 1)])
}

/// v_size 4, w_size 2, entries (0,0,1,1), (1,1,2,1), (3,0,3,1).
pub(crate) fn chain4() -> ActionTable {
    table(4, 2, &[(0, 0, 1, 1), (1, 1, 2, 1), (3, 0, 3, 1)])
}

/// Tables with up to `max_v` V-indices and `max_w` W-indices; each pair is
/// populated with probability 0.3.
pub(crate) fn random_table(
    max_v: usize,
    max_w: usize,
    field: FieldSpec,
) -> impl Strategy<Value = ActionTable> {
    (1..=max_v, 1..=max_w).prop_flat_map(move |(v, w)| {
        prop::collection::vec(
            prop::option::weighted(0.3, (0..v, 1i64..=9, any::<bool>())),
            v * w,
        )
        .prop_map(move |cells| {
            let entries = cells
                .into_iter()
                .enumerate()
                .filter_map(|(n, cell)| {
                    cell.map(|(k, c, neg)| {
                        let c = if neg { -c } else { c };
                        Entry::new(n / w, n % w, k, Scalar::from_i64(field, c))
                    })
                })
                .filter(|e| !e.c.is_zero())
                .collect();
            ActionTable::new(entries, v, w, field).unwrap()
        })
    })
}
