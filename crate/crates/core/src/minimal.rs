//! Forward closures, star-multiplicativity, minimality, and the minimal
//! closed subsets of the index set.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use petgraph::algo::kosaraju_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::connect::components;
use crate::error::{Error, Result};
use crate::star::{IndexSet, Step};
use crate::table::ActionTable;

/// How a member entered a closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Origin {
    Seed,
    /// Produced as the target of the entry `(source, column, member)`.
    Entry {
        source: usize,
        column: usize,
    },
}

/// The least closed superset of a seed, with the entry that first produced
/// each member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub seed: IndexSet,
    pub closure: IndexSet,
    /// One record per closure member, ascending by member.
    pub trace: Vec<(usize, Origin)>,
}

/// Worklist fixpoint of `s ↦ s ∪ ⋃ { a ⋆ j : a ∈ s, j ∈ J }`. The smallest
/// pending index is expanded first, so the trace is deterministic.
pub fn forward_closure(table: &ActionTable, seed: &IndexSet) -> Result<ClosureReport> {
    for i in seed.iter() {
        table.check_v(i)?;
    }
    let mut origin: Vec<Option<Origin>> = vec![None; table.v_size()];
    let mut pending: BinaryHeap<Reverse<usize>> = BinaryHeap::new();
    for i in seed.iter() {
        origin[i] = Some(Origin::Seed);
        pending.push(Reverse(i));
    }
    while let Some(Reverse(a)) = pending.pop() {
        for p in table.row(a) {
            let k = table.target(p);
            if origin[k].is_none() {
                origin[k] = Some(Origin::Entry {
                    source: a,
                    column: table.column(p),
                });
                pending.push(Reverse(k));
            }
        }
    }
    let trace: Vec<(usize, Origin)> = origin
        .into_iter()
        .enumerate()
        .filter_map(|(i, o)| o.map(|o| (i, o)))
        .collect();
    let closure = IndexSet::from_sorted(trace.iter().map(|(i, _)| *i).collect());
    Ok(ClosureReport {
        seed: seed.clone(),
        closure,
        trace,
    })
}

/// A relation `b ∈ a ⋆ x` with no product `v_a w_j' ∈ F v_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarViolation {
    pub a: usize,
    pub b: usize,
    pub x: Step,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarMultReport {
    pub violations: Vec<StarViolation>,
}

impl StarMultReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every star relation, barred ones included, is realized by
/// an actual product. Forward relations realize themselves, so only the
/// barred ones are scanned: each entry `(b, j, a)` needs some `(a, _, b)`.
pub fn check_star_multiplicative(table: &ActionTable) -> StarMultReport {
    let mut pairs: Vec<(u32, u32)> = table
        .support()
        .map(|(i, _, k)| (i as u32, k as u32))
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    let mut violations: Vec<StarViolation> = table
        .support()
        .filter(|&(b, _, a)| pairs.binary_search(&(a as u32, b as u32)).is_err())
        .map(|(b, j, a)| StarViolation {
            a,
            b,
            x: Step::barred(j),
        })
        .collect();
    violations.sort_unstable();
    StarMultReport { violations }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MinimalityMethod {
    /// The basis is star-multiplicative, so minimality is equivalent to the
    /// index set forming a single connection class.
    StarConnected,
    /// Every singleton closure was compared against the whole index set.
    ClosureScan,
}

impl MinimalityMethod {
    pub fn tag(self) -> &'static str {
        match self {
            MinimalityMethod::StarConnected => "theorem-2",
            MinimalityMethod::ClosureScan => "closure-scan",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Minimality {
    pub minimal: bool,
    pub method: MinimalityMethod,
}

/// Whether the only nonempty closed subset of `I` is `I` itself.
pub fn is_minimal(table: &ActionTable) -> Result<Minimality> {
    if table.v_size() == 0 {
        return Err(Error::EmptyModule);
    }
    if check_star_multiplicative(table).holds() {
        return Ok(Minimality {
            minimal: components(table).len() == 1,
            method: MinimalityMethod::StarConnected,
        });
    }
    Ok(Minimality {
        minimal: closure_scan(table),
        method: MinimalityMethod::ClosureScan,
    })
}

/// True iff `forward_closure({i}) = I` for every `i`.
///
/// That holds exactly when the directed support graph `i -> k` is strongly
/// connected, which one forward and one backward sweep from index 0 decide.
pub fn closure_scan(table: &ActionTable) -> bool {
    let n = table.v_size();
    if n == 0 {
        return true;
    }
    let sweep = |forward: bool| {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut reached = 1;
        let mut queue = VecDeque::from([0usize]);
        while let Some(a) = queue.pop_front() {
            let next: Box<dyn Iterator<Item = usize>> = if forward {
                Box::new(table.row(a).map(|p| table.target(p)))
            } else {
                Box::new(table.incoming(a).iter().map(|&p| table.source(p as usize)))
            };
            for b in next {
                if !seen[b] {
                    seen[b] = true;
                    reached += 1;
                    queue.push_back(b);
                }
            }
        }
        reached == n
    };
    sweep(true) && sweep(false)
}

/// The inclusion-minimal nonempty closed subsets of `I`, ordered by their
/// smallest member.
///
/// A singleton closure is minimal exactly when its seed lies in a sink
/// strongly connected component of the directed support graph, and then the
/// closure is that component.
pub fn minimal_closed_subsets(table: &ActionTable) -> Vec<IndexSet> {
    let n = table.v_size();
    let mut graph: DiGraph<(), (), u32> = DiGraph::with_capacity(n, table.len());
    for _ in 0..n {
        graph.add_node(());
    }
    for (i, _, k) in table.support() {
        graph.add_edge(NodeIndex::new(i), NodeIndex::new(k), ());
    }
    let sccs = kosaraju_scc(&graph);
    let mut scc_of = vec![0usize; n];
    for (c, scc) in sccs.iter().enumerate() {
        for node in scc {
            scc_of[node.index()] = c;
        }
    }
    let mut sink = vec![true; sccs.len()];
    for (i, _, k) in table.support() {
        if scc_of[i] != scc_of[k] {
            sink[scc_of[i]] = false;
        }
    }
    let mut out: Vec<IndexSet> = sccs
        .into_iter()
        .zip(sink)
        .filter(|(_, s)| *s)
        .map(|(scc, _)| scc.into_iter().map(|node| node.index()).collect())
        .collect();
    out.sort_unstable_by_key(|s: &IndexSet| s.as_slice()[0]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::is_closed_subset;
    use crate::scalar::FieldSpec;
    use crate::testing::{e1, random_table, table};
    use proptest::prelude::*;

    fn two_cycle() -> ActionTable {
        table(2, 1, &[(0, 0, 1, 1), (1, 0, 0, 1)])
    }

    fn literal_minimal_closed(t: &ActionTable) -> Vec<IndexSet> {
        let closures: Vec<IndexSet> = (0..t.v_size())
            .map(|i| forward_closure(t, &IndexSet::singleton(i)).unwrap().closure)
            .collect();
        let mut out: Vec<IndexSet> = closures
            .iter()
            .filter(|c| !closures.iter().any(|d| d != *c && d.is_subset(c)))
            .cloned()
            .collect();
        out.sort();
        out.dedup();
        out.sort_by_key(|s| s.as_slice()[0]);
        out
    }

    #[test]
    fn closures_on_e1() {
        let t = e1();
        let r = forward_closure(&t, &IndexSet::from([0])).unwrap();
        assert_eq!(r.closure, IndexSet::from([0, 1]));
        assert_eq!(
            r.trace,
            vec![
                (0, Origin::Seed),
                (
                    1,
                    Origin::Entry {
                        source: 0,
                        column: 0
                    }
                )
            ]
        );
        assert_eq!(
            forward_closure(&t, &IndexSet::from([1])).unwrap().closure,
            IndexSet::from([1])
        );
        assert!(forward_closure(&t, &IndexSet::new())
            .unwrap()
            .closure
            .is_empty());
        assert!(forward_closure(&t, &IndexSet::from([3])).is_err());
    }

    #[test]
    fn star_multiplicativity_fixtures() {
        let r = check_star_multiplicative(&e1());
        assert!(!r.holds());
        assert_eq!(
            r.violations,
            vec![StarViolation {
                a: 1,
                b: 0,
                x: Step::barred(0)
            }]
        );
        assert!(check_star_multiplicative(&two_cycle()).holds());
        assert!(check_star_multiplicative(&table(3, 2, &[])).holds());
    }

    #[test]
    fn minimality_fixtures() {
        assert_eq!(
            is_minimal(&e1()).unwrap(),
            Minimality {
                minimal: false,
                method: MinimalityMethod::ClosureScan
            }
        );
        assert_eq!(
            is_minimal(&two_cycle()).unwrap(),
            Minimality {
                minimal: true,
                method: MinimalityMethod::StarConnected
            }
        );
        // connected, but not star-multiplicative and not minimal
        let t = table(2, 1, &[(0, 0, 1, 1)]);
        assert_eq!(components(&t).len(), 1);
        assert!(!check_star_multiplicative(&t).holds());
        assert!(!is_minimal(&t).unwrap().minimal);
        assert_eq!(is_minimal(&table(0, 1, &[])), Err(Error::EmptyModule));
        assert!(is_minimal(&table(1, 0, &[])).unwrap().minimal);
    }

    #[test]
    fn minimal_closed_fixtures() {
        assert_eq!(
            minimal_closed_subsets(&e1()),
            vec![IndexSet::from([1]), IndexSet::from([2])]
        );
        assert_eq!(
            minimal_closed_subsets(&two_cycle()),
            vec![IndexSet::from([0, 1])]
        );
        assert_eq!(
            minimal_closed_subsets(&table(3, 1, &[])),
            vec![
                IndexSet::from([0]),
                IndexSet::from([1]),
                IndexSet::from([2])
            ]
        );
        assert!(minimal_closed_subsets(&table(0, 1, &[])).is_empty());
    }

    proptest! {
        #[test]
        fn closure_is_least_closed_superset(
            t in random_table(12, 3, FieldSpec::Rational),
            picks in prop::collection::vec(0usize..12, 0..4),
        ) {
            let seed: IndexSet = picks.into_iter().filter(|&i| i < t.v_size()).collect();
            let r = forward_closure(&t, &seed).unwrap();
            prop_assert!(seed.is_subset(&r.closure));
            prop_assert!(is_closed_subset(&t, &r.closure));
            // removing any non-seed member breaks closedness or drops the seed
            for i in r.closure.iter().filter(|&i| !seed.contains(i)) {
                let smaller: IndexSet = r.closure.iter().filter(|&x| x != i).collect();
                prop_assert!(!is_closed_subset(&t, &smaller));
            }
            prop_assert_eq!(&forward_closure(&t, &r.closure).unwrap().closure, &r.closure);
            prop_assert_eq!(r.trace.len(), r.closure.len());
        }

        #[test]
        fn closure_is_monotone(
            t in random_table(12, 3, FieldSpec::Prime(3)),
            a in prop::collection::vec(0usize..12, 0..3),
            b in prop::collection::vec(0usize..12, 0..3),
        ) {
            let n = t.v_size();
            let small: IndexSet = a.iter().copied().filter(|&i| i < n).collect();
            let big: IndexSet = a.iter().chain(&b).copied().filter(|&i| i < n).collect();
            let cs = forward_closure(&t, &small).unwrap().closure;
            let cb = forward_closure(&t, &big).unwrap().closure;
            prop_assert!(cs.is_subset(&cb));
        }

        #[test]
        fn sink_components_match_singleton_closures(t in random_table(12, 3, FieldSpec::Rational)) {
            let fast = minimal_closed_subsets(&t);
            prop_assert_eq!(&fast, &literal_minimal_closed(&t));
            for (n, x) in fast.iter().enumerate() {
                for y in &fast[n + 1..] {
                    prop_assert!(!x.intersects(y));
                }
            }
        }

        #[test]
        fn closure_scan_matches_singleton_closures(t in random_table(10, 3, FieldSpec::Rational)) {
            let literal = (0..t.v_size()).all(|i| {
                forward_closure(&t, &IndexSet::singleton(i)).unwrap().closure.len() == t.v_size()
            });
            prop_assert_eq!(closure_scan(&t), literal);
            prop_assert_eq!(is_minimal(&t).unwrap().minimal, literal);
        }
    }
}
