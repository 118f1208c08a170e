//! Signed permutations and the Weyl groups of types A, BC and D.
//!
//! Elements are written in one-line notation. Statistics: inversions in the
//! signed order, Coxeter length, Weyl-Major index and the descent number.
//! Word lengths are also computed independently by breadth-first search.

mod cayley;
mod group;
mod perm;

pub use cayley::{coxeter_word_length, greedy_reduced_word, CayleyDistances};
pub use group::{
    descent_count, enumerate_group, inversions, length, pm_descents, wmaj, Family, GroupFamily, GroupIter,
};
pub use perm::{pm_less, SignedPerm};

#[allow(unused_imports)]
pub(crate) use group::{descent_count_unchecked, length_unchecked, wmaj_unchecked};
