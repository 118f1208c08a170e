//! Brute-force finite-field geometry: subspaces and flags of `F_p^n`, with or
//! without a symplectic or quadratic form, their generating series, canonical
//! bases, standard flags and Rothe diagrams.

mod canonical;
mod flags;
mod rothe;
mod space;
mod subspace;

pub use canonical::{
    canonical_basis, count_canonical_bases, refinement_count, standard_flag, standard_subflag, CanonicalBasis,
    StandardFlag,
};
pub use flags::{enumerate_all_flags, enumerate_flags, flag_series, Flag, WeightedFlag};
pub use rothe::{rothe_diagram, Cell, RotheDiagram};
pub use space::{Field, FlagType, Form, FqSpace};
pub use subspace::{enumerate_subspaces, Subspace, SubspaceIter};
