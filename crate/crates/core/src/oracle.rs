//! Brute-force reference implementations for small instances. Everything
//! here works from a full scan of the entry list and the literal
//! definitions, sharing no index structures with the fast paths.

use std::collections::{HashSet, VecDeque};

use crate::connect::Decomposition;
use crate::error::{Error, Result};
use crate::star::{IndexSet, Step};
use crate::table::ActionTable;

/// Largest `|I|` accepted by [`oracle_components`].
pub const COMPONENTS_LIMIT: usize = 16;
/// Largest `|I|` accepted by [`oracle_minimal_closed`].
pub const POWERSET_LIMIT: usize = 20;

/// `i ⋆ x` by scanning every entry.
pub fn scan_star(table: &ActionTable, i: usize, x: Step) -> IndexSet {
    table
        .support()
        .filter_map(|(src, j, k)| {
            if j != x.j {
                None
            } else if !x.barred && src == i {
                Some(k)
            } else if x.barred && k == i {
                Some(src)
            } else {
                None
            }
        })
        .collect()
}

fn scan_phi(table: &ActionTable, u: &IndexSet, x: Step) -> IndexSet {
    u.iter()
        .flat_map(|i| scan_star(table, i, x).into_vec())
        .collect()
}

/// `|I| · 2|J|`, at least one.
pub fn default_max_len(table: &ActionTable) -> usize {
    (table.v_size() * 2 * table.w_size()).max(1)
}

/// Searches label sequences over `J ∪ J̄` of length at most `max_len` for
/// one whose phi-chain from `{i}` keeps every intermediate set nonempty and
/// ends in a set containing `k`. Chains are explored breadth-first over
/// distinct intermediate sets, which is exhaustive because the next set
/// depends only on the current one.
pub fn oracle_connected(table: &ActionTable, i: usize, k: usize, max_len: usize) -> bool {
    let n = table.v_size();
    if i >= n || k >= n {
        return false;
    }
    if i == k {
        return true;
    }
    let start = IndexSet::singleton(i);
    let mut seen: HashSet<IndexSet> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((u, depth)) = queue.pop_front() {
        if depth >= max_len {
            continue;
        }
        for x in Step::all(table.w_size()) {
            let next = scan_phi(table, &u, x);
            if next.contains(k) {
                return true;
            }
            if !next.is_empty() && seen.insert(next.clone()) {
                queue.push_back((next, depth + 1));
            }
        }
    }
    false
}

/// The partition induced by pairwise [`oracle_connected`] calls.
pub fn oracle_components(table: &ActionTable) -> Result<Decomposition> {
    let n = table.v_size();
    if n > COMPONENTS_LIMIT {
        return Err(Error::SizeLimitExceeded {
            size: n,
            limit: COMPONENTS_LIMIT,
        });
    }
    let max_len = default_max_len(table);
    let mut class: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        if class[i].is_some() {
            continue;
        }
        class[i] = Some(i);
        for (k, slot) in class.iter_mut().enumerate().skip(i + 1) {
            if slot.is_none() && oracle_connected(table, i, k, max_len) {
                *slot = Some(i);
            }
        }
    }
    Ok(Decomposition::from_keys(n, |i| class[i].unwrap()))
}

/// All inclusion-minimal nonempty closed subsets, found by filtering the
/// whole power set of `I`.
pub fn oracle_minimal_closed(table: &ActionTable) -> Result<Vec<IndexSet>> {
    let n = table.v_size();
    if n > POWERSET_LIMIT {
        return Err(Error::SizeLimitExceeded {
            size: n,
            limit: POWERSET_LIMIT,
        });
    }
    let support: Vec<(usize, usize)> = table.support().map(|(i, _, k)| (i, k)).collect();
    let closed = |mask: u32| {
        support
            .iter()
            .all(|&(i, k)| mask & (1 << i) == 0 || mask & (1 << k) != 0)
    };
    let mut masks: Vec<u32> = (1..(1u32 << n)).collect();
    masks.sort_by_key(|m| m.count_ones());
    // Any closed set with a closed proper subset contains a minimal one,
    // so visiting by size and comparing against earlier finds is enough.
    let mut minimal: Vec<u32> = Vec::new();
    for m in masks {
        if minimal.iter().any(|&s| s & !m == 0) {
            continue;
        }
        if closed(m) {
            minimal.push(m);
        }
    }
    let mut out: Vec<IndexSet> = minimal
        .into_iter()
        .map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
        .collect();
    out.sort_by_key(|s: &IndexSet| s.as_slice()[0]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{chain4, e1, table};

    fn blocks(d: &Decomposition) -> Vec<Vec<usize>> {
        d.blocks().iter().map(|b| b.as_slice().to_vec()).collect()
    }

    #[test]
    fn connected_on_e1() {
        let t = e1();
        let m = default_max_len(&t);
        assert!(oracle_connected(&t, 0, 1, m));
        assert!(oracle_connected(&t, 1, 0, m));
        assert!(!oracle_connected(&t, 0, 2, m));
        assert!(oracle_connected(&t, 2, 2, 0));
        assert!(!oracle_connected(&t, 0, 1, 0));
    }

    #[test]
    fn components_on_fixtures() {
        assert_eq!(
            blocks(&oracle_components(&e1()).unwrap()),
            vec![vec![0, 1], vec![2]]
        );
        assert_eq!(
            blocks(&oracle_components(&table(3, 0, &[])).unwrap()),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(
            blocks(&oracle_components(&chain4()).unwrap()),
            vec![vec![0, 1, 2], vec![3]]
        );
        assert!(matches!(
            oracle_components(&table(17, 1, &[])),
            Err(Error::SizeLimitExceeded {
                size: 17,
                limit: 16
            })
        ));
    }

    #[test]
    fn minimal_closed_on_fixtures() {
        assert_eq!(
            oracle_minimal_closed(&e1()).unwrap(),
            vec![IndexSet::from([1]), IndexSet::from([2])]
        );
        assert_eq!(
            oracle_minimal_closed(&table(2, 1, &[(0, 0, 1, 1), (1, 0, 0, 1)])).unwrap(),
            vec![IndexSet::from([0, 1])]
        );
        assert_eq!(
            oracle_minimal_closed(&table(2, 1, &[])).unwrap(),
            vec![IndexSet::from([0]), IndexSet::from([1])]
        );
        assert!(oracle_minimal_closed(&table(21, 1, &[])).is_err());
    }

    #[test]
    fn scan_star_matches_definition() {
        let t = e1();
        assert_eq!(scan_star(&t, 1, Step::barred(0)), IndexSet::from([0]));
        assert_eq!(scan_star(&t, 0, Step::forward(0)), IndexSet::from([1]));
        assert!(scan_star(&t, 1, Step::forward(0)).is_empty());
    }
}
