use std::fmt;
use std::str::FromStr;

use crate::algebra::{MultiPoly, Var};
use crate::error::{Error, Result};
use crate::weylgroups::Family;

/// `1 - v^n`.
pub(crate) fn one_minus(v: Var, n: u32) -> MultiPoly {
    MultiPoly::one() - MultiPoly::var_pow(v, n)
}

/// `(1 - v^n) / (1 - v)`, by exact division.
pub fn q_integer(v: Var, n: u32) -> Result<MultiPoly> {
    one_minus(v, n).div_exact(&one_minus(v, 1))
}

/// Gaussian binomial `[d choose k]_q` by the Pascal-type recursion
/// `[d, k] = [d-1, k-1] + q^k [d-1, k]`. Zero when `k > d`.
pub fn q_binomial(d: usize, k: usize) -> MultiPoly {
    if k > d {
        return MultiPoly::zero();
    }
    let mut row = vec![MultiPoly::one()];
    for n in 1..=d {
        let mut next = Vec::with_capacity(n + 1);
        for i in 0..=n.min(k) {
            let mut c = if i == 0 { MultiPoly::zero() } else { row[i - 1].clone() };
            if i < row.len() {
                c += &row[i].mul_monomial(crate::algebra::Exp::new(i as u32, 0, 0));
            }
            next.push(c);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// Gaussian binomial as `∏_{j=1}^{k} (1 - q^{d+1-j}) / (1 - q^j)`, dividing exactly.
pub fn q_binomial_product(d: usize, k: usize) -> Result<MultiPoly> {
    if k > d {
        return Ok(MultiPoly::zero());
    }
    let mut num = MultiPoly::one();
    for j in 1..=k {
        num = num * one_minus(Var::Q, (d + 1 - j) as u32);
    }
    for j in 1..=k {
        num = num.div_exact(&one_minus(Var::Q, j as u32))?;
    }
    Ok(num)
}

/// Number of isotropic subspaces, as a polynomial in the field size `q`.
///
/// Type BC: `k`-dimensional isotropic subspaces of a `2d`-dimensional
/// symplectic space, `∏_{j<k} (1 - q^{2d-2j}) / (1 - q^{k-j})`; `l` must be
/// absent. Type D: `k`-dimensional isotropic subspaces `V` of the sum of `d`
/// hyperbolic planes with `dim V - dim(V ∩ I) = l`, namely
/// `q^{l(2d+l-2k-1)/2} [d, k]_q [k, l]_q`; with `l` absent all `l` are summed.
pub fn isotropic_subspace_count(family: Family, d: usize, k: usize, l: Option<usize>) -> Result<MultiPoly> {
    if k > d {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds d = {d}")));
    }
    match family {
        Family::A => Err(Error::InvalidArgument("isotropic counts are defined for types BC and D".into())),
        Family::BC => {
            if let Some(l) = l {
                return Err(Error::InvalidArgument(format!("type BC takes no parity parameter (got l = {l})")));
            }
            let mut num = MultiPoly::one();
            for j in 0..k {
                num = num * one_minus(Var::Q, (2 * d - 2 * j) as u32);
            }
            for j in 0..k {
                num = num.div_exact(&one_minus(Var::Q, (k - j) as u32))?;
            }
            Ok(num)
        }
        Family::D => match l {
            None => (0..=k).map(|l| isotropic_subspace_count(Family::D, d, k, Some(l))).sum(),
            Some(l) => {
                if l > k {
                    return Err(Error::InvalidArgument(format!("l = {l} exceeds k = {k}")));
                }
                let twice = l as i64 * (2 * d as i64 + l as i64 - 2 * k as i64 - 1);
                if twice < 0 || twice % 2 != 0 {
                    return Err(Error::InvalidArgument(format!(
                        "exponent {twice}/2 is not a nonnegative integer for (d, k, l) = ({d}, {k}, {l})"
                    )));
                }
                let power = MultiPoly::var_pow(Var::Q, (twice / 2) as u32);
                Ok(power * q_binomial(d, k) * q_binomial(k, l))
            }
        },
    }
}

/// Number of isotropic `k`-subspaces of even parity in type D, in the form
/// `[d, k]_q Σ_l [k, 2l]_q q^{l(2d+2l-2k-1)}`.
pub fn even_isotropic_count(d: usize, k: usize) -> MultiPoly {
    let inner: MultiPoly = (0..=k / 2)
        .map(|l| {
            let e = l as i64 * (2 * d as i64 + 2 * l as i64 - 2 * k as i64 - 1);
            debug_assert!(e >= 0);
            q_binomial(k, 2 * l) * MultiPoly::var_pow(Var::Q, e as u32)
        })
        .sum();
    q_binomial(d, k) * inner
}

/// Product formulas for specializations of the Mahonian polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClosedForm {
    /// `∏_{j≤d} [j]_q`: length generating function of the symmetric group.
    LengthA,
    /// `∏_{j≤d} [j]_t`: type A at `q = 1`.
    MahonianAtQOne,
    /// `∏_{j≤d} [2j]_q`: type BC at `t = 1`.
    BcAtTOne,
    /// `(1 + t)^d ∏_{j≤d} [j]_t`: type BC at `q = 1`.
    BcAtQOne,
    /// `((1 - t)^d + (1 + t)^d) / 2 · ∏_{j≤d} [j]_t`: type D at `q = 1`.
    DWmaj,
    /// `[d]_q ∏_{j<d} [2j]_q`: type D at `t = 1`.
    DAtTOne,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 6] = [
        ClosedForm::LengthA,
        ClosedForm::MahonianAtQOne,
        ClosedForm::BcAtTOne,
        ClosedForm::BcAtQOne,
        ClosedForm::DWmaj,
        ClosedForm::DAtTOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::LengthA => "length-a",
            ClosedForm::MahonianAtQOne => "mahonian-q1",
            ClosedForm::BcAtTOne => "bc-t1",
            ClosedForm::BcAtQOne => "bc-q1",
            ClosedForm::DWmaj => "d-wmaj",
            ClosedForm::DAtTOne => "d-t1",
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosedForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ClosedForm::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

fn q_factorial(v: Var, d: usize) -> Result<MultiPoly> {
    (1..=d as u32).map(|j| q_integer(v, j)).product()
}

/// Evaluates a named product formula.
pub fn closed_form(name: ClosedForm, d: usize) -> Result<MultiPoly> {
    let one = MultiPoly::one();
    let t = MultiPoly::var(Var::T);
    match name {
        ClosedForm::LengthA => q_factorial(Var::Q, d),
        ClosedForm::MahonianAtQOne => q_factorial(Var::T, d),
        ClosedForm::BcAtTOne => (1..=d as u32).map(|j| q_integer(Var::Q, 2 * j)).product(),
        ClosedForm::BcAtQOne => Ok((&one + &t).pow(d as u32) * q_factorial(Var::T, d)?),
        ClosedForm::DWmaj => {
            let sum = (&one - &t).pow(d as u32) + (&one + &t).pow(d as u32);
            Ok(sum.div_exact(&MultiPoly::constant(2))? * q_factorial(Var::T, d)?)
        }
        ClosedForm::DAtTOne => {
            if d == 0 {
                return Ok(one);
            }
            let rest: Result<MultiPoly> = (1..d as u32).map(|j| q_integer(Var::Q, 2 * j)).product();
            Ok(q_integer(Var::Q, d as u32)? * rest?)
        }
    }
}

fn choose2(n: u32) -> u32 {
    n * n.saturating_sub(1) / 2
}

/// Both sides of the `q`-binomial theorem
/// `Σ_j [d, j]_q q^{C(j+a, 2)} t^j = q^{C(a, 2)} ∏_{j<d} (1 + t q^{j+a})`.
pub fn qbinomial_theorem_sides(d: usize, a: u32) -> (MultiPoly, MultiPoly) {
    let lhs: MultiPoly = (0..=d)
        .map(|j| q_binomial(d, j) * MultiPoly::term(1, choose2(j as u32 + a), j as u32, 0))
        .sum();
    let rhs: MultiPoly = (0..d as u32)
        .map(|j| MultiPoly::one() + MultiPoly::term(1, j + a, 1, 0))
        .product::<MultiPoly>()
        * MultiPoly::term(1, choose2(a), 0, 0);
    (lhs, rhs)
}
