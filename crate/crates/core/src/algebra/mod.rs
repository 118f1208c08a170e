//! Exact polynomials in `q, t, s` and power series in `t` truncated at a fixed degree.

mod poly;
mod series;

pub use poly::{Assignment, Exp, MultiPoly, Subst, Var};
pub use series::{TruncSeries, DEFAULT_BOUND};
