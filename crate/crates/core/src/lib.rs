//! Structure theory for modules over linear spaces that carry a
//! multiplicative basis.
//!
//! A module is given by an [`ActionTable`]: for basis vectors `v_i` of V and
//! `w_j` of W, each product `v_i w_j` is either zero or `c v_k` for a single
//! `k`. From that table the crate computes the connection classes of the
//! index set, the direct-sum decomposition into the submodules they span,
//! explicit connection witnesses, forward closures, star-multiplicativity,
//! minimality, and the minimal closed subsets. Brute-force oracles for small
//! instances live in [`oracle`].

pub mod connect;
pub mod decompose;
pub mod error;
pub mod format;
pub mod gen;
pub mod minimal;
pub mod oracle;
pub mod scalar;
pub mod star;
pub mod table;

#[cfg(test)]
mod testing;

pub use connect::{
    components, concat_witness, find_witness, reverse_witness, verify_witness, ConnectionWitness,
    Decomposition, SupportGraph, UnionFind,
};
pub use decompose::{decompose, is_closed_subset, ComponentModule, ModuleDecomposition};
pub use error::{Error, Result, Space};
pub use format::{parse_instance, serialize_instance, FormatError, InstanceFile};
pub use gen::{generate, symmetrize, GenSpec};
pub use minimal::{
    check_star_multiplicative, closure_scan, forward_closure, is_minimal, minimal_closed_subsets,
    ClosureReport, Minimality, MinimalityMethod, Origin, StarMultReport, StarViolation,
};
pub use scalar::{FieldSpec, Scalar};
pub use star::{phi, star, IndexSet, Step};
pub use table::{apply_action, build_table, ActionTable, CoordVector, Entry, Labels};
