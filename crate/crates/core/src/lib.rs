//! Weyl-Mahonian polynomials of types A, BC and D.

pub mod algebra;
pub mod error;
pub mod flaggeom;
pub mod limits;
pub mod statistics;
pub mod weylgroups;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/signed-permutations.md")]
    mod signed_permutations {}
    #[doc = include_str!("../../../book/src/mahonian.md")]
    mod mahonian {}
    #[doc = include_str!("../../../book/src/flags.md")]
    mod flags {}
    #[doc = include_str!("../../../book/src/canonical-bases.md")]
    mod canonical_bases {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
