//! The sparse action table `(i, j) -> (k, c)` meaning `v_i w_j = c v_k`,
//! and evaluation of the bilinear action on coordinate vectors.

use std::collections::{BTreeMap, HashMap};
use std::ops::Range;

use rayon::prelude::*;

use crate::error::{Error, Result, Space};
use crate::scalar::{Coefficients, FieldSpec, Scalar};

/// One product `v_i w_j = c v_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: Scalar,
}

impl Entry {
    pub fn new(i: usize, j: usize, k: usize, c: Scalar) -> Self {
        Entry { i, j, k, c }
    }
}

/// External names for the indices of one basis, bijective with `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labels {
    names: Vec<String>,
    ids: HashMap<String, usize>,
}

impl Labels {
    pub fn new(space: Space, names: Vec<String>, expected: usize) -> Result<Self> {
        if names.len() != expected {
            return Err(Error::LabelCount {
                space,
                expected,
                found: names.len(),
            });
        }
        let mut ids = HashMap::with_capacity(names.len());
        for (id, name) in names.iter().enumerate() {
            if ids.insert(name.clone(), id).is_some() {
                return Err(Error::DuplicateLabel {
                    space,
                    label: name.clone(),
                });
            }
        }
        Ok(Labels { names, ids })
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn id(&self, name: &str) -> Option<usize> {
        self.ids.get(name).copied()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// A validated multiplicative action table. Immutable once built.
///
/// Entries are stored column-wise in canonical `(i, j)` order, with a row
/// index over `i` and an inverse index over `(k, j)`.
#[derive(Debug, Clone)]
pub struct ActionTable {
    field: FieldSpec,
    v_size: usize,
    w_size: usize,
    v_labels: Option<Labels>,
    w_labels: Option<Labels>,
    sources: Vec<u32>,
    columns: Vec<u32>,
    targets: Vec<u32>,
    coeffs: Coefficients,
    row_offsets: Vec<usize>,
    // entry positions grouped by target, ordered by (k, j, i)
    inverse_offsets: Vec<usize>,
    inverse_positions: Vec<u32>,
}

impl PartialEq for ActionTable {
    fn eq(&self, other: &Self) -> bool {
        // the indexes are derived from the entries
        self.field == other.field
            && self.v_size == other.v_size
            && self.w_size == other.w_size
            && self.v_labels == other.v_labels
            && self.w_labels == other.w_labels
            && self.sources == other.sources
            && self.columns == other.columns
            && self.targets == other.targets
            && self.coeffs == other.coeffs
    }
}

impl Eq for ActionTable {}

/// Validates raw entries into an [`ActionTable`].
pub fn build_table(
    entries: Vec<Entry>,
    v_size: usize,
    w_size: usize,
    field: FieldSpec,
) -> Result<ActionTable> {
    ActionTable::new(entries, v_size, w_size, field)
}

/// Column-wise entry data, not yet validated.
pub(crate) struct Parts {
    pub sources: Vec<u32>,
    pub columns: Vec<u32>,
    pub targets: Vec<u32>,
    pub coeffs: Coefficients,
}

impl ActionTable {
    pub fn new(
        entries: Vec<Entry>,
        v_size: usize,
        w_size: usize,
        field: FieldSpec,
    ) -> Result<Self> {
        let field = field.validate()?;
        check_size(Space::V, v_size)?;
        check_size(Space::W, w_size)?;
        if entries.len() > u32::MAX as usize {
            return Err(Error::TooLarge {
                space: Space::V,
                size: entries.len(),
            });
        }
        let mut parts = Parts {
            sources: Vec::with_capacity(entries.len()),
            columns: Vec::with_capacity(entries.len()),
            targets: Vec::with_capacity(entries.len()),
            coeffs: Coefficients::with_capacity(field, entries.len()),
        };
        for e in entries {
            check_index(Space::V, e.i, v_size)?;
            check_index(Space::W, e.j, w_size)?;
            check_index(Space::V, e.k, v_size)?;
            if e.c.field() != field {
                return Err(Error::FieldMismatch {
                    expected: field,
                    found: e.c.field(),
                });
            }
            if e.c.is_zero() {
                return Err(Error::ZeroCoefficient { i: e.i, j: e.j });
            }
            parts.sources.push(e.i as u32);
            parts.columns.push(e.j as u32);
            parts.targets.push(e.k as u32);
            parts.coeffs.push(e.c);
        }
        Self::from_parts(field, v_size, w_size, parts)
    }

    /// Assembles a table from column data whose indices are in range and
    /// whose coefficients are nonzero. Sorts if needed and rejects duplicates.
    pub(crate) fn from_parts(
        field: FieldSpec,
        v_size: usize,
        w_size: usize,
        parts: Parts,
    ) -> Result<Self> {
        let Parts {
            mut sources,
            mut columns,
            mut targets,
            mut coeffs,
        } = parts;
        let n = sources.len();
        let key = |p: usize| ((sources[p] as u64) << 32) | columns[p] as u64;
        let sorted = (1..n).all(|p| key(p - 1) <= key(p));
        if !sorted {
            let mut order: Vec<u32> = (0..n as u32).collect();
            order.par_sort_by_key(|&p| key(p as usize));
            sources = order.iter().map(|&p| sources[p as usize]).collect();
            columns = order.iter().map(|&p| columns[p as usize]).collect();
            targets = order.iter().map(|&p| targets[p as usize]).collect();
            coeffs = coeffs.permuted(&order);
        }
        if let Some(p) =
            (1..n).find(|&p| sources[p - 1] == sources[p] && columns[p - 1] == columns[p])
        {
            return Err(Error::DuplicatePair {
                i: sources[p] as usize,
                j: columns[p] as usize,
            });
        }

        let row_offsets = offsets(v_size, &sources);

        let inverse_offsets = offsets(v_size, &targets);
        let mut fill = inverse_offsets.clone();
        let mut inverse_positions = vec![0u32; n];
        for (p, &k) in targets.iter().enumerate() {
            inverse_positions[fill[k as usize]] = p as u32;
            fill[k as usize] += 1;
        }
        // Positions arrive in (i, j) order; each bucket needs (j, i).
        for k in 0..v_size {
            inverse_positions[inverse_offsets[k]..inverse_offsets[k + 1]]
                .sort_unstable_by_key(|&p| (columns[p as usize], sources[p as usize]));
        }

        Ok(ActionTable {
            field,
            v_size,
            w_size,
            v_labels: None,
            w_labels: None,
            sources,
            columns,
            targets,
            coeffs,
            row_offsets,
            inverse_offsets,
            inverse_positions,
        })
    }

    /// Attaches external labels. Either side may be `None`.
    pub fn with_labels(
        mut self,
        v_labels: Option<Vec<String>>,
        w_labels: Option<Vec<String>>,
    ) -> Result<Self> {
        self.v_labels = v_labels
            .map(|names| Labels::new(Space::V, names, self.v_size))
            .transpose()?;
        self.w_labels = w_labels
            .map(|names| Labels::new(Space::W, names, self.w_size))
            .transpose()?;
        Ok(self)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn v_size(&self) -> usize {
        self.v_size
    }

    pub fn w_size(&self) -> usize {
        self.w_size
    }

    /// Number of nonzero products.
    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }

    pub fn v_labels(&self) -> Option<&Labels> {
        self.v_labels.as_ref()
    }

    pub fn w_labels(&self) -> Option<&Labels> {
        self.w_labels.as_ref()
    }

    /// Display name of a V-index: its label if labelled, else the id.
    pub fn v_name(&self, i: usize) -> String {
        match &self.v_labels {
            Some(l) => l.name(i).to_string(),
            None => i.to_string(),
        }
    }

    /// Display name of a W-index: its label if labelled, else `w<id>`.
    pub fn w_name(&self, j: usize) -> String {
        match &self.w_labels {
            Some(l) => l.name(j).to_string(),
            None => format!("w{j}"),
        }
    }

    /// Resolves a V-index given as a label or a numeral. Labels win.
    pub fn resolve_v(&self, text: &str) -> Option<usize> {
        if let Some(id) = self.v_labels.as_ref().and_then(|l| l.id(text)) {
            return Some(id);
        }
        text.parse().ok().filter(|&i| i < self.v_size)
    }

    pub fn source(&self, pos: usize) -> usize {
        self.sources[pos] as usize
    }

    pub fn column(&self, pos: usize) -> usize {
        self.columns[pos] as usize
    }

    pub fn target(&self, pos: usize) -> usize {
        self.targets[pos] as usize
    }

    pub fn coeff(&self, pos: usize) -> Scalar {
        self.coeffs.get(pos)
    }

    pub fn entry(&self, pos: usize) -> Entry {
        Entry::new(
            self.source(pos),
            self.column(pos),
            self.target(pos),
            self.coeff(pos),
        )
    }

    /// All entries in canonical `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = Entry> + '_ {
        (0..self.len()).map(move |p| self.entry(p))
    }

    /// `(i, j, k)` triples in canonical order, without coefficients.
    pub fn support(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.len()).map(move |p| (self.source(p), self.column(p), self.target(p)))
    }

    /// Entry positions with source `i`, ordered by `j`.
    pub fn row(&self, i: usize) -> Range<usize> {
        self.row_offsets[i]..self.row_offsets[i + 1]
    }

    /// Position of the entry for `(i, j)`, if any.
    pub fn position(&self, i: usize, j: usize) -> Option<usize> {
        let row = self.row(i);
        let start = row.start;
        self.columns[row]
            .binary_search(&(j as u32))
            .ok()
            .map(|off| start + off)
    }

    /// The target `k` of `v_i w_j`, or `None` when the product is zero.
    pub fn target_of(&self, i: usize, j: usize) -> Option<usize> {
        self.position(i, j).map(|p| self.target(p))
    }

    /// Entry positions with target `k`, ordered by `(j, i)`.
    pub fn incoming(&self, k: usize) -> &[u32] {
        &self.inverse_positions[self.inverse_offsets[k]..self.inverse_offsets[k + 1]]
    }

    /// Sources `i` with an entry `(i, j, k, _)`, ascending.
    pub fn sources_into(&self, k: usize, j: usize) -> impl Iterator<Item = usize> + '_ {
        let bucket = self.incoming(k);
        let lo = bucket.partition_point(|&p| (self.columns[p as usize] as usize) < j);
        bucket[lo..]
            .iter()
            .take_while(move |&&p| self.columns[p as usize] as usize == j)
            .map(|&p| self.sources[p as usize] as usize)
    }

    /// The inverse index flattened to `(k, j, i)` triples in canonical order.
    pub fn inverse_index(&self) -> Vec<(usize, usize, usize)> {
        self.inverse_positions
            .iter()
            .map(|&p| {
                let p = p as usize;
                (self.target(p), self.column(p), self.source(p))
            })
            .collect()
    }

    /// The same table with every coefficient multiplied by `a`.
    pub fn scaled(&self, a: &Scalar) -> Result<ActionTable> {
        if a.is_zero() {
            return Err(Error::ZeroScale);
        }
        let entries = self
            .entries()
            .map(|mut e| {
                e.c = e.c.checked_mul(a)?;
                Ok(e)
            })
            .collect::<Result<Vec<_>>>()?;
        ActionTable::new(entries, self.v_size, self.w_size, self.field)?.with_labels(
            self.v_labels.as_ref().map(|l| l.names().to_vec()),
            self.w_labels.as_ref().map(|l| l.names().to_vec()),
        )
    }

    /// Checks a V-index against this table.
    pub fn check_v(&self, i: usize) -> Result<()> {
        check_index(Space::V, i, self.v_size)
    }

    /// Checks a W-index against this table.
    pub fn check_w(&self, j: usize) -> Result<()> {
        check_index(Space::W, j, self.w_size)
    }
}

fn offsets(size: usize, keys: &[u32]) -> Vec<usize> {
    let mut offsets = vec![0usize; size + 1];
    for &k in keys {
        offsets[k as usize + 1] += 1;
    }
    for x in 1..=size {
        offsets[x] += offsets[x - 1];
    }
    offsets
}

fn check_size(space: Space, size: usize) -> Result<()> {
    if size > u32::MAX as usize {
        Err(Error::TooLarge { space, size })
    } else {
        Ok(())
    }
}

fn check_index(space: Space, index: usize, size: usize) -> Result<()> {
    if index < size {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { space, index, size })
    }
}

/// A sparse coordinate vector over the basis of V or of W.
///
/// Terms are kept sorted by index with nonzero scalars only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordVector {
    space: Space,
    terms: Vec<(usize, Scalar)>,
}

impl CoordVector {
    pub fn zero(space: Space) -> Self {
        CoordVector {
            space,
            terms: Vec::new(),
        }
    }

    /// The basis vector `e_index`.
    pub fn basis(space: Space, index: usize, field: FieldSpec) -> Self {
        CoordVector {
            space,
            terms: vec![(index, Scalar::one(field))],
        }
    }

    /// Builds a canonical vector, summing repeated indices and dropping zeros.
    pub fn from_terms(
        space: Space,
        terms: impl IntoIterator<Item = (usize, Scalar)>,
    ) -> Result<Self> {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (index, a) in terms {
            match acc.get_mut(&index) {
                Some(slot) => *slot = slot.checked_add(&a)?,
                None => {
                    if let Some((_, first)) = acc.first_key_value() {
                        if first.field() != a.field() {
                            return Err(Error::FieldMismatch {
                                expected: first.field(),
                                found: a.field(),
                            });
                        }
                    }
                    acc.insert(index, a);
                }
            }
        }
        Ok(CoordVector {
            space,
            terms: acc.into_iter().filter(|(_, a)| !a.is_zero()).collect(),
        })
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn terms(&self) -> &[(usize, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &CoordVector) -> Result<CoordVector> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch {
                expected: self.space,
                found: other.space,
            });
        }
        CoordVector::from_terms(
            self.space,
            self.terms.iter().chain(other.terms.iter()).cloned(),
        )
    }

    pub fn scale(&self, a: &Scalar) -> Result<CoordVector> {
        let terms = self
            .terms
            .iter()
            .map(|(i, b)| Ok((*i, a.checked_mul(b)?)))
            .collect::<Result<Vec<_>>>()?;
        CoordVector::from_terms(self.space, terms)
    }

    fn check_against(&self, space: Space, table: &ActionTable) -> Result<()> {
        if self.space != space {
            return Err(Error::SpaceMismatch {
                expected: space,
                found: self.space,
            });
        }
        let size = match space {
            Space::V => table.v_size(),
            Space::W => table.w_size(),
        };
        for (index, a) in &self.terms {
            check_index(space, *index, size)?;
            if a.field() != table.field() {
                return Err(Error::FieldMismatch {
                    expected: table.field(),
                    found: a.field(),
                });
            }
        }
        Ok(())
    }
}

/// Evaluates the bilinear action `v w`.
pub fn apply_action(table: &ActionTable, v: &CoordVector, w: &CoordVector) -> Result<CoordVector> {
    v.check_against(Space::V, table)?;
    w.check_against(Space::W, table)?;
    let w_indices: Vec<usize> = w.terms.iter().map(|(j, _)| *j).collect();
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (i, a) in &v.terms {
        for p in table.row(*i) {
            let Ok(at) = w_indices.binary_search(&table.column(p)) else {
                continue;
            };
            let term = a
                .mul_unchecked(&w.terms[at].1)
                .mul_unchecked(&table.coeff(p));
            acc.entry(table.target(p))
                .and_modify(|s| *s = s.add_unchecked(&term))
                .or_insert(term);
        }
    }
    Ok(CoordVector {
        space: Space::V,
        terms: acc.into_iter().filter(|(_, a)| !a.is_zero()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{e1, random_table};
    use proptest::prelude::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_i64(FieldSpec::Rational, n)
    }

    fn vector(space: Space, field: FieldSpec, terms: &[(usize, i64)]) -> CoordVector {
        CoordVector::from_terms(
            space,
            terms.iter().map(|&(i, a)| (i, Scalar::from_i64(field, a))),
        )
        .unwrap()
    }

    #[test]
    fn builds_e1() {
        let t = e1();
        assert_eq!((t.v_size(), t.w_size(), t.len()), (3, 1, 2));
        assert_eq!(t.target_of(0, 0), Some(1));
        assert_eq!(t.target_of(1, 0), None);
        assert_eq!(t.sources_into(2, 0).collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn rejects_duplicates_zeros_and_ranges() {
        let f = FieldSpec::Rational;
        let dup = vec![Entry::new(0, 0, 1, q(1)), Entry::new(0, 0, 2, q(1))];
        assert_eq!(
            build_table(dup, 3, 1, f),
            Err(Error::DuplicatePair { i: 0, j: 0 })
        );
        let zero = vec![Entry::new(0, 0, 1, q(0))];
        assert_eq!(
            build_table(zero, 3, 1, f),
            Err(Error::ZeroCoefficient { i: 0, j: 0 })
        );
        let out = vec![Entry::new(0, 1, 1, q(1))];
        assert!(matches!(
            build_table(out, 3, 1, f),
            Err(Error::IndexOutOfRange {
                space: Space::W,
                index: 1,
                size: 1
            })
        ));
        let bad_field = vec![Entry::new(0, 0, 1, Scalar::one(FieldSpec::Prime(3)))];
        assert!(matches!(
            build_table(bad_field, 3, 1, f),
            Err(Error::FieldMismatch { .. })
        ));
        assert_eq!(
            build_table(vec![], 1, 1, FieldSpec::Prime(6)),
            Err(Error::NonPrimeModulus(6))
        );
    }

    #[test]
    fn empty_bases_are_valid() {
        let t = build_table(vec![], 0, 0, FieldSpec::Rational).unwrap();
        assert!(t.is_empty());
        assert_eq!(t.v_size(), 0);
    }

    #[test]
    fn sorts_entries_canonically() {
        let f = FieldSpec::Rational;
        let t = build_table(
            vec![
                Entry::new(2, 0, 2, q(1)),
                Entry::new(0, 1, 0, q(3)),
                Entry::new(0, 0, 1, q(1)),
            ],
            3,
            2,
            f,
        )
        .unwrap();
        assert_eq!(
            t.support().collect::<Vec<_>>(),
            vec![(0, 0, 1), (0, 1, 0), (2, 0, 2)]
        );
        assert_eq!(t.coeff(1), q(3));
    }

    #[test]
    fn labels_must_be_bijective() {
        let t = e1();
        assert!(matches!(
            t.clone()
                .with_labels(Some(vec!["a".into(), "a".into(), "b".into()]), None),
            Err(Error::DuplicateLabel { .. })
        ));
        assert!(matches!(
            t.clone().with_labels(None, Some(vec![])),
            Err(Error::LabelCount { .. })
        ));
        // a label that is also a numeral resolves as the label
        let t = t
            .with_labels(Some(vec!["2".into(), "x".into(), "y".into()]), None)
            .unwrap();
        assert_eq!(t.resolve_v("2"), Some(0));
        assert_eq!(t.resolve_v("1"), Some(1));
        assert_eq!(t.resolve_v("x"), Some(1));
        assert_eq!(t.resolve_v("9"), None);
    }

    #[test]
    fn apply_single_entry() {
        let t = build_table(vec![Entry::new(0, 0, 1, q(1))], 2, 1, FieldSpec::Rational).unwrap();
        let f = FieldSpec::Rational;
        let out = apply_action(
            &t,
            &vector(Space::V, f, &[(0, 1)]),
            &vector(Space::W, f, &[(0, 1)]),
        )
        .unwrap();
        assert_eq!(out, vector(Space::V, f, &[(1, 1)]));
        let zero = apply_action(
            &t,
            &CoordVector::zero(Space::V),
            &vector(Space::W, f, &[(0, 5)]),
        )
        .unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn apply_cancels_in_gf5() {
        let f = FieldSpec::Prime(5);
        let s = |n| Scalar::from_i64(f, n);
        let t = build_table(
            vec![Entry::new(0, 0, 1, s(2)), Entry::new(2, 0, 1, s(4))],
            3,
            1,
            f,
        )
        .unwrap();
        // 1*1*2 + 2*1*4 = 10 = 0 mod 5
        let out = apply_action(
            &t,
            &vector(Space::V, f, &[(0, 1), (2, 2)]),
            &vector(Space::W, f, &[(0, 1)]),
        )
        .unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn apply_checks_operands() {
        let t = e1();
        let f = FieldSpec::Rational;
        let v = vector(Space::V, f, &[(0, 1)]);
        let w_gf = vector(Space::W, FieldSpec::Prime(3), &[(0, 1)]);
        assert!(matches!(
            apply_action(&t, &v, &w_gf),
            Err(Error::FieldMismatch { .. })
        ));
        assert!(matches!(
            apply_action(&t, &v, &v),
            Err(Error::SpaceMismatch { .. })
        ));
        let far = vector(Space::V, f, &[(5, 1)]);
        assert!(matches!(
            apply_action(&t, &far, &vector(Space::W, f, &[(0, 1)])),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    fn small_vector(size: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
        prop::collection::vec((0..size, -4i64..=4), 0..5)
    }

    proptest! {
        #[test]
        fn inverse_index_is_the_transpose(t in random_table(15, 5, FieldSpec::Rational)) {
            let mut back: Vec<_> = t.inverse_index().into_iter().map(|(k, j, i)| (i, j, k)).collect();
            back.sort_unstable();
            prop_assert_eq!(back, t.support().collect::<Vec<_>>());
            let inv = t.inverse_index();
            prop_assert!(inv.windows(2).all(|w| w[0] < w[1]));
        }

        #[test]
        fn basis_products_follow_the_table(t in random_table(10, 4, FieldSpec::Prime(7))) {
            let f = t.field();
            for i in 0..t.v_size() {
                for j in 0..t.w_size() {
                    let out = apply_action(&t, &CoordVector::basis(Space::V, i, f), &CoordVector::basis(Space::W, j, f)).unwrap();
                    match t.position(i, j) {
                        Some(p) => prop_assert_eq!(out.terms(), &[(t.target(p), t.coeff(p))][..]),
                        None => prop_assert!(out.is_zero()),
                    }
                }
            }
        }

        #[test]
        fn action_is_bilinear(
            t in random_table(8, 3, FieldSpec::Rational),
            v1 in small_vector(8),
            v2 in small_vector(8),
            w1 in small_vector(3),
            w2 in small_vector(3),
        ) {
            let f = t.field();
            let clip = |v: &[(usize, i64)], n: usize| v.iter().filter(|&&(i, _)| i < n).copied().collect::<Vec<_>>();
            let v1 = vector(Space::V, f, &clip(&v1, t.v_size()));
            let v2 = vector(Space::V, f, &clip(&v2, t.v_size()));
            let w1 = vector(Space::W, f, &clip(&w1, t.w_size()));
            let w2 = vector(Space::W, f, &clip(&w2, t.w_size()));
            let lhs = apply_action(&t, &v1.add(&v2).unwrap(), &w1).unwrap();
            let rhs = apply_action(&t, &v1, &w1).unwrap().add(&apply_action(&t, &v2, &w1).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = apply_action(&t, &v1, &w1.add(&w2).unwrap()).unwrap();
            let rhs = apply_action(&t, &v1, &w1).unwrap().add(&apply_action(&t, &v1, &w2).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            let a = Scalar::ratio(f, -5, 3);
            prop_assert_eq!(
                apply_action(&t, &v1.scale(&a).unwrap(), &w1).unwrap(),
                apply_action(&t, &v1, &w1).unwrap().scale(&a).unwrap()
            );
        }
    }
}
