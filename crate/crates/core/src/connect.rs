//! The connection relation on V-indices: components, witnesses, and their
//! verification against the literal phi-chain definition.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::star::{phi_unchecked, IndexSet, Step};
use crate::table::ActionTable;

/// Disjoint-set forest with path halving and union by rank.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len as u32).collect(),
            rank: vec![0; len],
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut x = x as u32;
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x as usize
    }

    /// Returns `false` if `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb as u32,
            std::cmp::Ordering::Greater => self.parent[rb] = ra as u32,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra as u32;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// A partition of `0..v_size`. Blocks are listed by their smallest member,
/// which is also the block's representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    blocks: Vec<IndexSet>,
    block_of: Vec<usize>,
}

impl Decomposition {
    /// Canonicalizes an arbitrary labelling `key(i)` into a partition.
    pub fn from_keys(len: usize, mut key: impl FnMut(usize) -> usize) -> Self {
        const UNSEEN: usize = usize::MAX;
        let mut id_of_key = vec![UNSEEN; len];
        let mut block_of = Vec::with_capacity(len);
        let mut members: Vec<Vec<usize>> = Vec::new();
        for i in 0..len {
            let k = key(i);
            if id_of_key[k] == UNSEEN {
                id_of_key[k] = members.len();
                members.push(Vec::new());
            }
            let b = id_of_key[k];
            members[b].push(i);
            block_of.push(b);
        }
        Decomposition {
            blocks: members.into_iter().map(IndexSet::from_sorted).collect(),
            block_of,
        }
    }

    pub fn blocks(&self) -> &[IndexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn representative(&self, block: usize) -> usize {
        self.blocks[block].as_slice()[0]
    }

    pub fn block_of(&self, i: usize) -> usize {
        self.block_of[i]
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.block_of[a] == self.block_of[b]
    }

    /// The class `[i]`.
    pub fn class_of(&self, i: usize) -> &IndexSet {
        &self.blocks[self.block_of[i]]
    }
}

/// The classes of the connection relation.
///
/// Two indices are connected exactly when they are joined by a path of
/// support edges `{i, k}` (one per entry `(i, j, k, _)`), so a single pass
/// of union-find over the entries suffices.
pub fn components(table: &ActionTable) -> Decomposition {
    let mut uf = UnionFind::new(table.v_size());
    for p in 0..table.len() {
        uf.union(table.source(p), table.target(p));
    }
    Decomposition::from_keys(table.v_size(), |i| uf.find(i))
}

/// Undirected support graph with labelled arcs: `(b, x)` is an arc out of
/// `a` whenever `b ∈ a ⋆ x`.
#[derive(Debug, Clone)]
pub struct SupportGraph {
    offsets: Vec<usize>,
    arcs: Vec<(u32, Step)>,
}

impl SupportGraph {
    pub fn new(table: &ActionTable) -> Self {
        let n = table.v_size();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut arcs = Vec::with_capacity(2 * table.len());
        offsets.push(0);
        for a in 0..n {
            let start = arcs.len();
            for p in table.row(a) {
                arcs.push((table.target(p) as u32, Step::forward(table.column(p))));
            }
            for &p in table.incoming(a) {
                let p = p as usize;
                arcs.push((table.source(p) as u32, Step::barred(table.column(p))));
            }
            arcs[start..].sort_unstable_by_key(|&(b, x)| (b, x.j, x.barred));
            offsets.push(arcs.len());
        }
        SupportGraph { offsets, arcs }
    }

    pub fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Arcs out of `a`, by neighbour then label, forward before barred.
    pub fn arcs(&self, a: usize) -> impl Iterator<Item = (usize, Step)> + '_ {
        self.arcs[self.offsets[a]..self.offsets[a + 1]]
            .iter()
            .map(|&(b, x)| (b as usize, x))
    }

    /// Shortest connection from `from` to `to` by breadth-first search.
    pub fn find_witness(&self, from: usize, to: usize) -> Result<ConnectionWitness> {
        let n = self.len();
        for i in [from, to] {
            if i >= n {
                return Err(Error::IndexOutOfRange {
                    space: crate::error::Space::V,
                    index: i,
                    size: n,
                });
            }
        }
        if from == to {
            return Ok(ConnectionWitness::trivial(from));
        }
        let mut parent: Vec<Option<(u32, Step)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(a) = queue.pop_front() {
            for (b, x) in self.arcs(a) {
                if seen[b] {
                    continue;
                }
                seen[b] = true;
                parent[b] = Some((a as u32, x));
                if b == to {
                    let mut steps = Vec::new();
                    let mut cur = to;
                    while let Some((prev, x)) = parent[cur] {
                        steps.push(x);
                        cur = prev as usize;
                    }
                    steps.reverse();
                    return Ok(ConnectionWitness { from, to, steps });
                }
                queue.push_back(b);
            }
        }
        Err(Error::NotConnected { from, to })
    }
}

/// A label sequence `j_1, ..., j_n` over `J ∪ J̄` connecting `from` to `to`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConnectionWitness {
    pub from: usize,
    pub to: usize,
    pub steps: Vec<Step>,
}

impl ConnectionWitness {
    pub fn trivial(i: usize) -> Self {
        ConnectionWitness {
            from: i,
            to: i,
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Shortest witness from `from` to `to`. Builds a [`SupportGraph`]; reuse
/// one directly when issuing many queries.
pub fn find_witness(table: &ActionTable, from: usize, to: usize) -> Result<ConnectionWitness> {
    table.check_v(from)?;
    table.check_v(to)?;
    SupportGraph::new(table).find_witness(from, to)
}

/// Evaluates the phi-chain `U_1 = phi({from}, j_1)`, `U_m = phi(U_{m-1}, j_m)`
/// and accepts iff every intermediate set is nonempty and `to ∈ U_n`.
/// Malformed witnesses are rejected, never reported as errors.
pub fn verify_witness(table: &ActionTable, w: &ConnectionWitness) -> bool {
    if w.from >= table.v_size() || w.to >= table.v_size() {
        return false;
    }
    if w.steps.iter().any(|x| x.j >= table.w_size()) {
        return false;
    }
    let Some((last, init)) = w.steps.split_last() else {
        return w.from == w.to;
    };
    let mut current = IndexSet::singleton(w.from);
    for &x in init {
        current = phi_unchecked(table, &current, x);
        if current.is_empty() {
            return false;
        }
    }
    phi_unchecked(table, &current, *last).contains(w.to)
}

/// Swaps the endpoints, reverses the steps and bars each one.
pub fn reverse_witness(w: &ConnectionWitness) -> ConnectionWitness {
    ConnectionWitness {
        from: w.to,
        to: w.from,
        steps: w.steps.iter().rev().map(|x| x.bar()).collect(),
    }
}

/// Joins `a: i -> h` and `b: h -> k` into `i -> k`; `None` if `a.to != b.from`.
pub fn concat_witness(a: &ConnectionWitness, b: &ConnectionWitness) -> Option<ConnectionWitness> {
    (a.to == b.from).then(|| ConnectionWitness {
        from: a.from,
        to: b.to,
        steps: a.steps.iter().chain(&b.steps).copied().collect(),
    })
}
