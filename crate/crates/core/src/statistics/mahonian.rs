use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::formulas::{even_isotropic_count, isotropic_subspace_count, one_minus, q_binomial};
use crate::algebra::{Exp, MultiPoly, Var};
use crate::error::{Error, Result};
use crate::limits;
use crate::weylgroups::{descent_count_unchecked, length_unchecked, wmaj_unchecked, Family, GroupFamily, GroupIter};

/// Which polynomial to build: `Σ q^length t^wmaj`, optionally times `s^β`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StatisticSpec {
    pub family: Family,
    pub euler_extended: bool,
}

impl StatisticSpec {
    pub fn plain(family: Family) -> Self {
        StatisticSpec { family, euler_extended: false }
    }

    pub fn euler(family: Family) -> Self {
        StatisticSpec { family, euler_extended: true }
    }
}

/// Sums `q^l(σ) t^wmaj(σ) [s^β(σ)]` over the whole group.
///
/// The group is split by first image and the pieces are counted in parallel.
pub fn mahonian_direct(spec: StatisticSpec, d: usize) -> Result<MultiPoly> {
    let fam = GroupFamily::new(spec.family, d);
    limits::ensure_within(format!("group {}{d}", spec.family), fam.order(), limits::max_cells())?;
    if d == 0 {
        return Ok(MultiPoly::one());
    }
    let firsts: Vec<i32> = match spec.family {
        Family::A => (1..=d as i32).collect(),
        _ => (-(d as i32)..=d as i32).filter(|&x| x != 0).collect(),
    };
    let counts = firsts
        .par_iter()
        .map(|&x| {
            let mut tally: HashMap<Exp, u64> = HashMap::new();
            for p in GroupIter::with_prefix(&fam, &[x]).expect("single-image prefix is valid") {
                let v = p.images();
                let es = if spec.euler_extended { descent_count_unchecked(v) as u32 } else { 0 };
                let e = Exp::new(length_unchecked(v, spec.family) as u32, wmaj_unchecked(v) as u32, es);
                *tally.entry(e).or_default() += 1;
            }
            tally
        })
        .reduce(HashMap::new, |mut a, b| {
            for (e, c) in b {
                *a.entry(e).or_default() += c;
            }
            a
        });
    Ok(MultiPoly::from_terms(counts))
}

fn t_pow(n: usize) -> MultiPoly {
    MultiPoly::var_pow(Var::T, n as u32)
}

/// `∏_{j=from}^{to} (1 - x t^j)` with `x = s` or `x = 1`; empty products are 1.
fn t_product(from: usize, to: usize, with_s: bool) -> MultiPoly {
    (from..=to)
        .map(|j| {
            if with_s {
                MultiPoly::one() - MultiPoly::term(1, 0, j as u32, 1)
            } else {
                one_minus(Var::T, j as u32)
            }
        })
        .product()
}

/// Type A polynomials `M_0, …, M_d` (or their `s`-extended versions).
fn type_a_table(d: usize, euler: bool) -> Vec<MultiPoly> {
    let s = MultiPoly::var(Var::S);
    let mut table: Vec<MultiPoly> = vec![MultiPoly::one()];
    for n in 1..=d {
        let m = if euler {
            let rest: MultiPoly = (1..n)
                .map(|k| t_pow(k) * q_binomial(n, k) * t_product(k + 1, n - 1, true) * &table[k])
                .sum();
            t_product(1, n - 1, true) + &s * &rest
        } else {
            (0..n)
                .map(|i| t_pow(i) * t_product(i + 1, n - 1, false) * q_binomial(n, i) * &table[i])
                .sum()
        };
        table.push(m);
    }
    table
}

/// The coefficient counting isotropic `k`-subspaces in the type-BC or type-D
/// recursion.
fn isotropic_factor(family: Family, d: usize, k: usize) -> Result<MultiPoly> {
    match family {
        Family::BC => isotropic_subspace_count(Family::BC, d, k, None),
        Family::D => {
            let c = even_isotropic_count(d, k);
            let by_parity: MultiPoly = (0..=k)
                .step_by(2)
                .map(|l| isotropic_subspace_count(Family::D, d, k, Some(l)))
                .sum::<Result<MultiPoly>>()?;
            if c != by_parity {
                return Err(Error::Inconsistent(format!("even isotropic counts disagree at d = {d}, k = {k}")));
            }
            Ok(c)
        }
        Family::A => unreachable!("type A has its own recursion"),
    }
}

/// Builds the polynomial from the flag-counting recursions.
///
/// Type A uses `M_d = Σ_{i<d} t^i ∏_{j=i+1}^{d-1}(1 - t^j) [d, i]_q M_i`.
/// Types BC and D sum over the dimension `k` of the largest isotropic member
/// of a flag, weighting `M_k` by the number of such subspaces. The
/// `s`-extended versions replace `1 - t^j` by `1 - s t^j`.
pub fn mahonian_recursive(spec: StatisticSpec, d: usize) -> Result<MultiPoly> {
    let euler = spec.euler_extended;
    let table = type_a_table(d, euler);
    match spec.family {
        Family::A => Ok(table[d].clone()),
        fam if euler => {
            let mut rest = MultiPoly::zero();
            for (k, a) in table.iter().enumerate().skip(1) {
                rest += &(t_pow(k) * isotropic_factor(fam, d, k)? * t_product(k + 1, d, true) * a);
            }
            Ok(t_product(1, d, true) + MultiPoly::var(Var::S) * rest)
        }
        fam => {
            let mut out = MultiPoly::zero();
            for (k, a) in table.iter().enumerate() {
                out += &(t_pow(k) * isotropic_factor(fam, d, k)? * t_product(k + 1, d, false) * a);
            }
            Ok(out)
        }
    }
}
