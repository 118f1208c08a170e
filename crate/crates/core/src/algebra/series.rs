use std::fmt;

use serde::{Deserialize, Serialize};

use super::poly::{Exp, MultiPoly, Var};
use crate::error::{Error, Result};

/// Default truncation degree in `t`.
pub const DEFAULT_BOUND: usize = 12;

/// Power series in `t` truncated after `t^bound`, with coefficients in `q, s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncSeries {
    bound: usize,
    coeffs: Vec<MultiPoly>,
}

impl TruncSeries {
    pub fn zero(bound: usize) -> Self {
        TruncSeries { bound, coeffs: vec![MultiPoly::zero(); bound + 1] }
    }

    pub fn one(bound: usize) -> Self {
        let mut s = Self::zero(bound);
        s.coeffs[0] = MultiPoly::one();
        s
    }

    /// Splits `p` by powers of `t`, dropping everything above the bound.
    pub fn from_poly(p: &MultiPoly, bound: usize) -> Self {
        let mut s = Self::zero(bound);
        for (e, c) in p.terms() {
            let k = e.t as usize;
            if k <= bound {
                s.coeffs[k].add_term(Exp::new(e.q, 0, e.s), c.clone());
            }
        }
        s
    }

    /// `1/(1 - x t^j)` truncated, with `x = s` or `x = 1`.
    ///
    /// For `j = 0` the factor would not converge; it is rejected.
    pub fn geometric_factor(j: usize, with_s: bool, bound: usize) -> Result<Self> {
        if j == 0 {
            return Err(Error::InvalidArgument("geometric factor needs j >= 1".into()));
        }
        let mut s = Self::zero(bound);
        for n in 0..=bound / j {
            let es = if with_s { n as u32 } else { 0 };
            s.coeffs[n * j] = MultiPoly::term(1, 0, 0, es);
        }
        Ok(s)
    }

    /// `∏_{j in js} 1/(1 - x t^j)` truncated.
    pub fn geometric_product(
        js: impl IntoIterator<Item = usize>,
        with_s: bool,
        bound: usize,
    ) -> Result<Self> {
        let mut acc = Self::one(bound);
        for j in js {
            acc = acc.mul(&Self::geometric_factor(j, with_s, bound)?)?;
        }
        Ok(acc)
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Coefficient of `t^n`; zero above the bound.
    pub fn coeff(&self, n: usize) -> MultiPoly {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    /// Reassembles the retained part as a polynomial in `q, t, s`.
    pub fn to_poly(&self) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            p += &c.mul_monomial(Exp::new(0, k as u32, 0));
        }
        p
    }

    fn check_bound(&self, other: &Self) -> Result<()> {
        if self.bound != other.bound {
            return Err(Error::BoundMismatch { left: self.bound, right: other.bound });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_bound(other)?;
        Ok(TruncSeries {
            bound: self.bound,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_bound(other)?;
        Ok(TruncSeries {
            bound: self.bound,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_bound(other)?;
        let mut out = Self::zero(self.bound);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(self.bound + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by an integer.
    pub fn scale(&self, c: &num_bigint::BigInt) -> Self {
        TruncSeries { bound: self.bound, coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    /// Returns whether any coefficient involves `v` (`t` never appears).
    pub fn uses(&self, v: Var) -> bool {
        self.coeffs.iter().any(|c| c.uses(v))
    }

    /// Index and values of the first coefficient where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, MultiPoly, MultiPoly)> {
        (0..=self.bound.max(other.bound))
            .find(|&k| self.coeff(k) != other.coeff(k))
            .map(|k| (k, self.coeff(k), other.coeff(k)))
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(t^{})", self.to_poly(), self.bound + 1)
    }
}
