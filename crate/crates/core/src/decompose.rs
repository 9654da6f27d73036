//! Direct-sum decomposition of V into the spans of its connection classes.

use crate::connect::{components, Decomposition};
use crate::error::Result;
use crate::star::IndexSet;
use crate::table::{ActionTable, Parts};

/// The submodule spanned by `{v_i : i ∈ component}`, viewed inside its
/// parent table. The basis vectors are inherited from the parent basis.
#[derive(Debug, Clone, Copy)]
pub struct ComponentModule<'a> {
    table: &'a ActionTable,
    component: &'a IndexSet,
}

impl<'a> ComponentModule<'a> {
    pub fn component(&self) -> &'a IndexSet {
        self.component
    }

    /// Indices of the inherited basis vectors; identical to the component.
    pub fn inherited_basis(&self) -> &'a IndexSet {
        self.component
    }

    pub fn representative(&self) -> usize {
        self.component.as_slice()[0]
    }

    pub fn parent(&self) -> &'a ActionTable {
        self.table
    }

    /// Positions in the parent table of the entries whose source lies in
    /// the component.
    pub fn entry_positions(&self) -> impl Iterator<Item = usize> + 'a {
        let table = self.table;
        self.component.iter().flat_map(move |i| table.row(i))
    }

    pub fn entry_count(&self) -> usize {
        self.component.iter().map(|i| self.table.row(i).len()).sum()
    }

    /// Copies the restriction out as a standalone table. V-indices are
    /// renumbered by their rank within the component; W is unchanged.
    pub fn materialize(&self) -> Result<ActionTable> {
        let t = self.table;
        let local = |i: usize| self.component.as_slice().binary_search(&i).ok();
        let n = self.entry_count();
        let mut parts = Parts {
            sources: Vec::with_capacity(n),
            columns: Vec::with_capacity(n),
            targets: Vec::with_capacity(n),
            coeffs: crate::scalar::Coefficients::with_capacity(t.field(), n),
        };
        for p in self.entry_positions() {
            let k = local(t.target(p)).expect("component is closed under the action");
            parts.sources.push(local(t.source(p)).unwrap() as u32);
            parts.columns.push(t.column(p) as u32);
            parts.targets.push(k as u32);
            parts.coeffs.push(t.coeff(p));
        }
        let restricted =
            ActionTable::from_parts(t.field(), self.component.len(), t.w_size(), parts)?;
        let v_labels = t.v_labels().map(|l| {
            self.component
                .iter()
                .map(|i| l.name(i).to_string())
                .collect()
        });
        let w_labels = t.w_labels().map(|l| l.names().to_vec());
        restricted.with_labels(v_labels, w_labels)
    }
}

/// The decomposition together with the classes it was built from.
#[derive(Debug, Clone)]
pub struct ModuleDecomposition<'a> {
    table: &'a ActionTable,
    classes: Decomposition,
}

impl<'a> ModuleDecomposition<'a> {
    pub fn classes(&self) -> &Decomposition {
        &self.classes
    }

    pub fn modules(&self) -> impl Iterator<Item = ComponentModule<'_>> + '_ {
        self.classes
            .blocks()
            .iter()
            .map(move |component| ComponentModule {
                table: self.table,
                component,
            })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Splits V into one component module per connection class, ordered by
/// representative.
pub fn decompose(table: &ActionTable) -> ModuleDecomposition<'_> {
    ModuleDecomposition {
        table,
        classes: components(table),
    }
}

/// Whether `span{v_a : a ∈ s}` is closed under the action, i.e. every
/// forward star image of a member stays in `s`.
pub fn is_closed_subset(table: &ActionTable, s: &IndexSet) -> bool {
    s.iter()
        .all(|a| a < table.v_size() && table.row(a).all(|p| s.contains(table.target(p))))
}
