use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::formulas::{
    closed_form, isotropic_subspace_count, q_binomial, q_binomial_product, qbinomial_theorem_sides, ClosedForm,
};
use super::mahonian::{mahonian_direct, mahonian_recursive, StatisticSpec};
use crate::algebra::{Assignment, Exp, MultiPoly, TruncSeries, Var, DEFAULT_BOUND};
use crate::error::{Error, Result};
use crate::flaggeom::{
    canonical_basis, count_canonical_bases, enumerate_all_flags, enumerate_flags, enumerate_subspaces, flag_series,
    refinement_count, rothe_diagram, standard_flag, standard_subflag, Flag, FlagType, FqSpace, Subspace,
};
use crate::weylgroups::{
    enumerate_group, greedy_reduced_word, inversions, length, wmaj, CayleyDistances, Family, GroupFamily, SignedPerm,
};

/// Named parameters of a check, kept as strings so reports print and
/// serialize them verbatim.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CheckParams(BTreeMap<String, String>);

impl CheckParams {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.0.insert(key.to_string(), value.to_string());
        self
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<T> {
        let raw = self.0.get(key).ok_or_else(|| Error::InvalidArgument(format!("missing parameter `{key}`")))?;
        raw.parse().map_err(|_| Error::InvalidArgument(format!("bad value `{raw}` for `{key}`")))
    }

    pub fn get_or<T: FromStr>(&self, key: &str, default: T) -> Result<T> {
        if self.0.contains_key(key) {
            self.get(key)
        } else {
            Ok(default)
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &String)> {
        self.0.iter()
    }
}

impl fmt::Display for CheckParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// One side of a compared identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum Side {
    Poly(MultiPoly),
    Series(TruncSeries),
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Poly(p) => write!(f, "{p}"),
            Side::Series(s) => write!(f, "{s}"),
        }
    }
}

/// Outcome of one identity check: both sides exactly, and the first
/// differing term when they disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub params: CheckParams,
    pub passed: bool,
    pub lhs: Side,
    pub rhs: Side,
    pub discrepancy: Option<String>,
}

impl CheckReport {
    fn polys(name: &str, params: &CheckParams, lhs: MultiPoly, rhs: MultiPoly) -> Self {
        let diff = &lhs - &rhs;
        let discrepancy = diff.terms().next().map(|(&e, _)| {
            let m = MultiPoly::monomial(1, e).to_text();
            format!("coefficient of {m}: {} vs {}", lhs.coeff(e), rhs.coeff(e))
        });
        CheckReport {
            name: name.to_string(),
            params: params.clone(),
            passed: discrepancy.is_none(),
            lhs: Side::Poly(lhs),
            rhs: Side::Poly(rhs),
            discrepancy,
        }
    }

    fn series(name: &str, params: &CheckParams, lhs: TruncSeries, rhs: TruncSeries) -> Self {
        let discrepancy = if lhs.bound() != rhs.bound() {
            Some(format!("bounds differ: {} vs {}", lhs.bound(), rhs.bound()))
        } else {
            lhs.first_difference(&rhs).map(|(n, a, b)| format!("coefficient of t^{n}: {a} vs {b}"))
        };
        CheckReport {
            name: name.to_string(),
            params: params.clone(),
            passed: discrepancy.is_none(),
            lhs: Side::Series(lhs),
            rhs: Side::Series(rhs),
            discrepancy,
        }
    }

    fn fail_with(mut self, reason: Option<String>) -> Self {
        if let Some(r) = reason {
            self.passed = false;
            self.discrepancy = Some(match self.discrepancy.take() {
                Some(d) => format!("{d}; {r}"),
                None => r,
            });
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

/// Registered check names, in the order `verify --all` runs them.
pub const CHECK_NAMES: &[&str] = &[
    "coefficient_table",
    "direct_vs_recursive",
    "length_vs_word_length",
    "flag_series",
    "subspace_counts",
    "canonical_basis_counts",
    "canonical_fibering",
    "qbinomial_theorem",
    "qbinomial_product",
    "even_binomial_identity",
    "d_wmaj",
    "length_a",
    "mahonian_q1",
    "bc_t1",
    "bc_q1",
    "d_t1",
    "symmetry_A",
    "bc_reciprocal_symmetry",
    "low_degree_agreement",
    "standard_weights",
    "canonical_spans",
    "standard_fibering",
    "refinement_counts",
    "rothe_tallies",
    "rothe_examples",
];

fn mono(q: usize, t: usize, s: usize) -> MultiPoly {
    MultiPoly::term(1, q as u32, t as u32, s as u32)
}

fn at(p: &MultiPoly, v: Var, x: i64) -> MultiPoly {
    p.specialize(&Assignment::new().int(v, x))
}

fn plain(fam: Family, d: usize) -> Result<MultiPoly> {
    mahonian_recursive(StatisticSpec::plain(fam), d)
}

fn table_poly(rows: &[&[i64]]) -> MultiPoly {
    MultiPoly::from_terms(
        rows.iter()
            .enumerate()
            .flat_map(|(t, row)| row.iter().enumerate().map(move |(q, &c)| (Exp::new(q as u32, t as u32, 0), c))),
    )
}

/// Printed coefficient tables of the type BC and type D polynomials for
/// `d ≤ 4`; row `k` lists the coefficients of `t^k q^0, t^k q^1, …`.
pub fn printed_table(family: Family, d: usize) -> Option<MultiPoly> {
    let rows: &[&[i64]] = match (family, d) {
        (Family::BC, 1) => &[&[1], &[0, 1]],
        (Family::BC, 2) => &[&[1], &[0, 1, 1, 1], &[0, 1, 1, 1], &[0, 0, 0, 0, 1]],
        (Family::BC, 3) => &[
            &[1],
            &[0, 1, 1, 1, 1, 1],
            &[0, 1, 2, 2, 2, 2, 1, 1],
            &[0, 1, 1, 3, 2, 2, 3, 1, 1],
            &[0, 0, 1, 1, 2, 2, 2, 2, 1],
            &[0, 0, 0, 0, 1, 1, 1, 1, 1],
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        ],
        (Family::BC, 4) => &[
            &[1],
            &[0, 1, 1, 1, 1, 1, 1, 1],
            &[0, 1, 2, 2, 3, 3, 3, 3, 2, 2, 1, 1],
            &[0, 1, 2, 4, 4, 6, 6, 6, 6, 5, 4, 2, 2],
            &[0, 1, 2, 4, 6, 7, 8, 9, 9, 8, 7, 5, 3, 2, 1],
            &[0, 0, 1, 3, 5, 7, 9, 10, 12, 10, 9, 7, 5, 3, 1],
            &[0, 0, 1, 2, 3, 5, 7, 8, 9, 9, 8, 7, 6, 4, 2, 1],
            &[0, 0, 0, 0, 2, 2, 4, 5, 6, 6, 6, 6, 4, 4, 2, 1],
            &[0, 0, 0, 0, 0, 1, 1, 2, 2, 3, 3, 3, 3, 2, 2, 1],
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1],
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        ],
        (Family::D, 1) => &[&[1]],
        (Family::D, 2) => &[&[1], &[0, 1], &[0, 1], &[0, 0, 1]],
        (Family::D, 3) => &[
            &[1],
            &[0, 1, 1],
            &[0, 1, 1, 1, 1, 1],
            &[0, 1, 1, 2, 1, 1, 1],
            &[0, 0, 1, 2, 2, 1],
            &[0, 0, 1, 1, 1],
        ],
        (Family::D, 4) => &[
            &[1],
            &[0, 1, 1, 1],
            &[0, 1, 2, 1, 1, 1, 1, 2, 1, 1],
            &[0, 1, 1, 3, 3, 4, 4, 3, 3, 1, 1],
            &[0, 1, 2, 3, 4, 5, 6, 6, 5, 3, 1],
            &[0, 0, 1, 3, 6, 7, 8, 7, 6, 3, 1],
            &[0, 0, 1, 3, 5, 6, 6, 5, 4, 3, 2, 1],
            &[0, 0, 1, 1, 3, 3, 4, 4, 3, 3, 1, 1],
            &[0, 0, 0, 1, 1, 2, 1, 1, 1, 1, 2, 1],
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        ],
        _ => return None,
    };
    Some(table_poly(rows))
}

fn space_of(params: &CheckParams) -> Result<FqSpace> {
    let kind: FlagType = params.get("type")?;
    FqSpace::of_type(kind, params.get("p")?, params.get("d")?)
}

/// Runs one named check.
///
/// Parameters by check (`family` is A, BC or D; `type` is A, C, B or D):
/// `d` for the single-family checks; `family, d, euler` for
/// `direct_vs_recursive`; `family, d` for `coefficient_table`,
/// `length_vs_word_length`; `d, a, t1` for `qbinomial_theorem`; `d, k` for
/// `qbinomial_product`; `type, p, d, trunc, alpha` for `flag_series` and the
/// flag structure checks; `type, p, d` for `subspace_counts`,
/// `canonical_basis_counts`, `canonical_fibering`, `refinement_counts`;
/// `type, d` for `rothe_tallies`; none for `rothe_examples`.
pub fn run_identity_check(name: &str, params: &CheckParams) -> Result<CheckReport> {
    let r = match name {
        "symmetry_A" => {
            let m = plain(Family::A, params.get("d")?)?;
            let swapped = m.specialize(&Assignment::new().swap(Var::Q, Var::T));
            CheckReport::polys(name, params, m, swapped)
        }
        "direct_vs_recursive" => {
            let spec = StatisticSpec { family: params.get("family")?, euler_extended: params.get_or("euler", false)? };
            let d = params.get("d")?;
            CheckReport::polys(name, params, mahonian_direct(spec, d)?, mahonian_recursive(spec, d)?)
        }
        "low_degree_agreement" => {
            let d: usize = params.get("d")?;
            let a = plain(Family::A, d)?.truncate_total_degree(d as u32);
            let bc = plain(Family::BC, d)?.truncate_total_degree(d as u32);
            CheckReport::polys(name, params, a, bc)
        }
        "coefficient_table" => {
            let fam: Family = params.get("family")?;
            let d = params.get("d")?;
            let table = printed_table(fam, d)
                .ok_or_else(|| Error::InvalidArgument(format!("no printed table for {fam} d = {d}")))?;
            CheckReport::polys(name, params, mahonian_direct(StatisticSpec::plain(fam), d)?, table)
        }
        "length_vs_word_length" => length_vs_word_length(name, params)?,
        "length_a" | "mahonian_q1" | "bc_t1" | "bc_q1" | "d_wmaj" | "d_t1" => {
            let d = params.get("d")?;
            let (form, lhs) = match name {
                "length_a" => (ClosedForm::LengthA, at(&plain(Family::A, d)?, Var::T, 1)),
                "mahonian_q1" => (ClosedForm::MahonianAtQOne, at(&plain(Family::A, d)?, Var::Q, 1)),
                "bc_t1" => (ClosedForm::BcAtTOne, at(&plain(Family::BC, d)?, Var::T, 1)),
                "bc_q1" => (ClosedForm::BcAtQOne, at(&plain(Family::BC, d)?, Var::Q, 1)),
                // Wmaj over the even signed permutations, by enumeration
                "d_wmaj" => (ClosedForm::DWmaj, at(&mahonian_direct(StatisticSpec::plain(Family::D), d)?, Var::Q, 1)),
                _ => (ClosedForm::DAtTOne, at(&plain(Family::D, d)?, Var::T, 1)),
            };
            CheckReport::polys(name, params, lhs, closed_form(form, d)?)
        }
        "bc_reciprocal_symmetry" => {
            let d: u32 = params.get("d")?;
            let m = mahonian_direct(StatisticSpec::plain(Family::BC), d as usize)?;
            let r = m.reciprocal_conjugate(d * d, d * (d + 1) / 2)?;
            CheckReport::polys(name, params, m, r)
        }
        "qbinomial_theorem" => {
            let (mut lhs, mut rhs) = qbinomial_theorem_sides(params.get("d")?, params.get_or("a", 0)?);
            if params.get_or("t1", false)? {
                lhs = at(&lhs, Var::T, 1);
                rhs = at(&rhs, Var::T, 1);
            }
            CheckReport::polys(name, params, lhs, rhs)
        }
        "qbinomial_product" => {
            let (d, k) = (params.get("d")?, params.get("k")?);
            CheckReport::polys(name, params, q_binomial(d, k), q_binomial_product(d, k)?)
        }
        "even_binomial_identity" => {
            let d: usize = params.get("d")?;
            let lhs: MultiPoly = (0..=d / 2).map(|l| q_binomial(d, 2 * l) * mono(l * (2 * l).saturating_sub(1), 0, 0)).sum();
            let rhs: MultiPoly = (1..d).map(|j| MultiPoly::one() + mono(j, 0, 0)).product();
            CheckReport::polys(name, params, lhs, rhs)
        }
        "flag_series" => flag_series_check(name, params)?,
        "subspace_counts" => subspace_counts(name, params)?,
        "canonical_basis_counts" | "canonical_fibering" => canonical_counts(name, params)?,
        "standard_weights" | "canonical_spans" => flag_structure(name, params)?,
        "standard_fibering" => standard_fibering(name, params)?,
        "refinement_counts" => refinement_counts(name, params)?,
        "rothe_tallies" => rothe_tallies(name, params)?,
        "rothe_examples" => {
            let a = rothe_diagram(&"6,3,8,1,4,9,7,2,5".parse()?, FlagType::A)?;
            let c = rothe_diagram(&"-5,3,-1,6,4,-2".parse()?, FlagType::C)?;
            let tags: MultiPoly = c.tensor_counts().iter().map(|(&i, &n)| mono(0, 0, i).scale(&n.into())).sum();
            let lhs = mono(a.cross_count(), 0, 0) + mono(0, c.cross_count(), 0) * tags;
            let printed = mono(0, 0, 1).scale(&2.into()) + mono(0, 0, 3).scale(&6.into()) + mono(0, 0, 6).scale(&5.into());
            let rhs = mono(18, 0, 0) + mono(0, 7, 0) * printed;
            CheckReport::polys(name, params, lhs, rhs)
        }
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(r)
}

/// Pairs `q^{length} t^{Cayley distance} s^{greedy word length}` against the
/// diagonal `q^l t^l s^l`; the sides agree exactly when all three coincide
/// for every element.
fn length_vs_word_length(name: &str, params: &CheckParams) -> Result<CheckReport> {
    let fam = GroupFamily::new(params.get("family")?, params.get("d")?);
    let bfs = CayleyDistances::new(&fam)?;
    let mut lhs = MultiPoly::zero();
    let mut rhs = MultiPoly::zero();
    let mut bad_word = None;
    for p in enumerate_group(&fam)? {
        let l = length(&p, &fam)?;
        let word = greedy_reduced_word(&p, &fam)?;
        if bad_word.is_none() && fam.compose_word(&word)? != p {
            bad_word = Some(format!("greedy word of {p} does not compose to it"));
        }
        lhs += &mono(l, bfs.distance(&p)?, word.len());
        rhs += &mono(l, l, l);
    }
    Ok(CheckReport::polys(name, params, lhs, rhs).fail_with(bad_word))
}

fn flag_series_check(name: &str, params: &CheckParams) -> Result<CheckReport> {
    let space = space_of(params)?;
    let trunc = params.get_or("trunc", DEFAULT_BOUND)?;
    let alpha = params.get_or("alpha", false)?;
    let lhs = flag_series(&space, trunc, alpha)?;
    let rhs = match space.flag_type() {
        FlagType::B => flag_series(&FqSpace::symplectic(space.p(), space.rank())?, trunc, alpha)?,
        kind => {
            let spec = StatisticSpec { family: kind.family(), euler_extended: alpha };
            let m = at(&mahonian_recursive(spec, space.rank())?, Var::Q, space.p() as i64);
            TruncSeries::from_poly(&m, trunc).mul(&TruncSeries::geometric_product(1..=space.rank(), alpha, trunc)?)?
        }
    };
    Ok(CheckReport::series(name, params, lhs, rhs))
}

/// Subspace counts by dimension `t^k`, split by parity defect `s^l` in type D.
fn subspace_counts(name: &str, params: &CheckParams) -> Result<CheckReport> {
    let space = space_of(params)?;
    let d = space.rank();
    let p = space.p() as i64;
    let kind = space.flag_type();
    let mut lhs = MultiPoly::zero();
    let mut rhs = MultiPoly::zero();
    for k in 0..=d {
        for v in enumerate_subspaces(&space, k, space.has_form())? {
            let l = if kind == FlagType::D { space.parity_defect(v.rows()) } else { 0 };
            lhs += &mono(0, k, l);
        }
        let formula = |l: Option<usize>| -> Result<MultiPoly> {
            let c = match kind {
                FlagType::A => q_binomial(d, k),
                FlagType::C | FlagType::B => isotropic_subspace_count(Family::BC, d, k, None)?,
                FlagType::D => isotropic_subspace_count(Family::D, d, k, l)?,
            };
            Ok(at(&c, Var::Q, p))
        };
        if kind == FlagType::D {
            for l in 0..=k {
                rhs += &(formula(Some(l))? * mono(0, k, l));
            }
        } else {
            rhs += &(formula(None)? * mono(0, k, 0));
        }
    }
    Ok(CheckReport::polys(name, params, lhs, rhs))
}

fn canonical_counts(name: &str, params: &CheckParams) -> Result<CheckReport> {
    let space = space_of(params)?;
    let fam = GroupFamily::new(space.flag_type().family(), space.rank());
    let p = space.p() as usize;
    let mut lhs = MultiPoly::zero();
    let mut rhs = MultiPoly::zero();
    for sigma in enumerate_group(&fam)? {
        let n = count_canonical_bases(&space, &sigma)?;
        let l = length(&sigma, &fam)?;
        if name == "canonical_basis_counts" {
            // exponent pairs: the sides agree iff every count is p^l
            lhs += &mono(l, n as usize, 0);
            rhs += &mono(l, p.pow(l as u32), 0);
        } else {
            lhs += &mono(0, standard_flag(&sigma, space.flag_type())?.weight, 0).scale(&n.into());
        }
    }
    if name == "canonical_fibering" {
        rhs = at(&plain(fam.family, space.rank())?, Var::Q, p as i64);
    }
    Ok(CheckReport::polys(name, params, lhs, rhs))
}

/// Per enumerated flag `F` with canonical basis permutation `σ`:
/// `standard_weights` pairs the weight of the standard subflag with
/// `Wmaj(σ)`; `canonical_spans` counts the members of `F` spanned by basis
/// prefixes (`t`) and marks (`s`) that the standard subflag refines into `F`
/// and reproduces the same basis.
fn flag_structure(name: &str, params: &CheckParams) -> Result<CheckReport> {
    let space = space_of(params)?;
    let f = space.field();
    let mut lhs = MultiPoly::zero();
    let mut rhs = MultiPoly::zero();
    for fl in enumerate_flags(&space)? {
        let b = canonical_basis(&space, &fl)?;
        let st = standard_subflag(&space, &b)?;
        if name == "standard_weights" {
            let w = wmaj(&b.perm);
            lhs += &mono(st.dims().iter().sum(), w, 0);
            rhs += &mono(w, w, 0);
        } else {
            let spanned = fl
                .members()
                .iter()
                .filter(|v| Subspace::span(f, space.dim(), &b.vectors[..v.dim()]).is_ok_and(|s| &s == *v))
                .count();
            let refines = st.members().iter().all(|m| fl.members().contains(m));
            let same = canonical_basis(&space, &st)? == b;
            lhs += &mono(0, spanned, usize::from(refines) + usize::from(same));
            rhs += &mono(0, fl.len(), 2);
        }
    }
    Ok(CheckReport::polys(name, params, lhs, rhs))
}

/// Groups flags by standard subflag and sums `t^{w}` over all weightings of
/// each flag with weight at most the bound, enumerated one weight vector at
/// a time. Each group should give `t^{w_st} ∏_{j≤d} 1/(1 - t^j)`; groups are
/// told apart by the marker `s^index`.
fn standard_fibering(name: &str, params: &CheckParams) -> Result<CheckReport> {
    let space = space_of(params)?;
    let trunc = params.get_or("trunc", DEFAULT_BOUND)?;
    let mut groups: BTreeMap<Flag, Vec<usize>> = BTreeMap::new();
    for fl in enumerate_flags(&space)? {
        let st = standard_subflag(&space, &canonical_basis(&space, &fl)?)?;
        let weights = groups.entry(st).or_default();
        weighted_totals(&fl.dims(), trunc, 0, weights);
    }
    let base = TruncSeries::geometric_product(1..=space.rank(), false, trunc)?;
    let mut lhs = TruncSeries::zero(trunc);
    let mut rhs = TruncSeries::zero(trunc);
    for (idx, (st, weights)) in groups.iter().enumerate() {
        let marker = mono(0, 0, idx);
        let found = MultiPoly::from_terms(weights.iter().map(|&w| (Exp::new(0, w as u32, 0), 1)));
        lhs = lhs.add(&TruncSeries::from_poly(&(found * &marker), trunc))?;
        let w_st = st.dims().iter().sum::<usize>();
        rhs = rhs.add(&TruncSeries::from_poly(&(mono(0, w_st, 0) * &marker), trunc).mul(&base)?)?;
    }
    Ok(CheckReport::series(name, params, lhs, rhs))
}

/// Pushes `Σ w_i dims_i` for every weight vector with positive entries and
/// total at most `bound`.
fn weighted_totals(dims: &[usize], bound: usize, acc: usize, out: &mut Vec<usize>) {
    let Some((&m, rest)) = dims.split_first() else {
        out.push(acc);
        return;
    };
    let mut total = acc + m;
    // later members need at least their own dimension
    let reserve: usize = rest.iter().sum();
    while total + reserve <= bound {
        weighted_totals(rest, bound, total, out);
        total += m;
    }
}

/// Flags of `F_p^d` grouped by canonical basis; each group size is paired
/// with the predicted refinement count.
fn refinement_counts(name: &str, params: &CheckParams) -> Result<CheckReport> {
    let space = space_of(params)?;
    if space.flag_type() != FlagType::A {
        return Err(Error::InvalidArgument("refinement counts are defined for type A".into()));
    }
    let fam = GroupFamily::new(Family::A, space.rank());
    let mut groups: BTreeMap<(Vec<Vec<u32>>, SignedPerm), usize> = BTreeMap::new();
    for fl in enumerate_all_flags(&space)? {
        let b = canonical_basis(&space, &fl)?;
        *groups.entry((b.vectors, b.perm)).or_default() += 1;
    }
    let mut lhs = MultiPoly::zero();
    let mut rhs = MultiPoly::zero();
    for ((_, perm), size) in groups {
        let predicted = refinement_count(&perm, &fam)? as usize;
        lhs += &mono(size, predicted, 0);
        rhs += &mono(predicted, predicted, 0);
    }
    Ok(CheckReport::polys(name, params, lhs, rhs))
}

/// `q^{crosses} t^{tensors} s^{tags with the wrong count}` against
/// `q^{inversions} t^{length - inversions}`.
fn rothe_tallies(name: &str, params: &CheckParams) -> Result<CheckReport> {
    let kind: FlagType = params.get("type")?;
    let d: usize = params.get("d")?;
    let fam = GroupFamily::new(kind.family(), d);
    let extra = if kind == FlagType::D { 0 } else { 1 };
    let mut lhs = MultiPoly::zero();
    let mut rhs = MultiPoly::zero();
    for p in enumerate_group(&fam)? {
        let r = rothe_diagram(&p, kind)?;
        let counts = r.tensor_counts();
        let wrong = p
            .images()
            .iter()
            .enumerate()
            .filter(|&(i, &s)| {
                let expect = if s < 0 { (d as i32 + extra + s) as usize } else { 0 };
                counts.get(&(i + 1)).copied().unwrap_or(0) != expect
            })
            .count();
        let tensors: usize = counts.values().sum();
        lhs += &mono(r.cross_count(), tensors, wrong);
        let inv = inversions(&p);
        rhs += &mono(inv, length(&p, &fam)? - inv, 0);
    }
    Ok(CheckReport::polys(name, params, lhs, rhs))
}

/// Grid options for [`default_grid`]. `None` selects the per-check default.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridOptions {
    pub max_d: Option<usize>,
    pub primes: Option<Vec<u32>>,
    pub trunc: usize,
}

impl Default for GridOptions {
    fn default() -> Self {
        GridOptions { max_d: None, primes: None, trunc: DEFAULT_BOUND }
    }
}

/// Parameter sets run by `verify` for one check name.
pub fn default_grid(name: &str, opts: &GridOptions) -> Result<Vec<CheckParams>> {
    let upto = |default: usize| 1..=opts.max_d.unwrap_or(default);
    let typed_primes = opts.primes.clone().unwrap_or_else(|| vec![3, 5]);
    let a_primes = opts.primes.clone().unwrap_or_else(|| vec![2, 3]);
    let primes_for = |kind: FlagType| if kind == FlagType::A { a_primes.clone() } else { typed_primes.clone() };
    let by_d = |default: usize| upto(default).map(|d| CheckParams::new().with("d", d)).collect::<Vec<_>>();
    let mut out = Vec::new();
    match name {
        "symmetry_A" | "length_a" | "mahonian_q1" => out = by_d(7),
        "low_degree_agreement" | "bc_t1" | "bc_q1" | "bc_reciprocal_symmetry" => out = by_d(5),
        "d_wmaj" | "d_t1" => out = by_d(6),
        "even_binomial_identity" => out = by_d(8),
        "direct_vs_recursive" => {
            for (fam, default) in [(Family::A, 7), (Family::BC, 5), (Family::D, 5)] {
                for euler in [false, true] {
                    for d in upto(default) {
                        out.push(CheckParams::new().with("family", fam).with("d", d).with("euler", euler));
                    }
                }
            }
        }
        "coefficient_table" => {
            for fam in [Family::BC, Family::D] {
                for d in 1..=opts.max_d.unwrap_or(4).min(4) {
                    out.push(CheckParams::new().with("family", fam).with("d", d));
                }
            }
        }
        "length_vs_word_length" => {
            for fam in Family::ALL {
                for d in upto(5) {
                    out.push(CheckParams::new().with("family", fam).with("d", d));
                }
            }
        }
        "qbinomial_theorem" => {
            for d in 0..=opts.max_d.unwrap_or(8) {
                for a in 0..=4 {
                    out.push(CheckParams::new().with("d", d).with("a", a));
                }
                out.push(CheckParams::new().with("d", d).with("a", 0).with("t1", true));
            }
        }
        "qbinomial_product" => {
            for d in 0..=opts.max_d.unwrap_or(8) {
                for k in 0..=d {
                    out.push(CheckParams::new().with("d", d).with("k", k));
                }
            }
        }
        "flag_series" | "standard_weights" | "canonical_spans" | "standard_fibering" => {
            let alphas: &[bool] = if name == "flag_series" { &[false, true] } else { &[false] };
            for kind in FlagType::ALL {
                let top = if kind == FlagType::A { 3 } else { 2 };
                for p in primes_for(kind) {
                    for d in 1..=opts.max_d.unwrap_or(top).min(top) {
                        for &alpha in alphas {
                            let mut params =
                                CheckParams::new().with("type", kind).with("p", p).with("d", d).with("trunc", opts.trunc);
                            if name == "flag_series" {
                                params = params.with("alpha", alpha);
                            }
                            out.push(params);
                        }
                    }
                }
            }
        }
        "subspace_counts" => {
            for kind in FlagType::ALL {
                // ambient dimension at most 6
                let top = match kind {
                    FlagType::A => 6,
                    FlagType::B => 2,
                    _ => 3,
                };
                for p in primes_for(kind) {
                    for d in 1..=opts.max_d.unwrap_or(top).min(top) {
                        out.push(CheckParams::new().with("type", kind).with("p", p).with("d", d));
                    }
                }
            }
        }
        "canonical_basis_counts" | "canonical_fibering" => {
            for kind in FlagType::ALL {
                let (top, primes) = match kind {
                    FlagType::A => (3, a_primes.clone()),
                    _ => (2, opts.primes.clone().unwrap_or_else(|| vec![3])),
                };
                for p in primes {
                    for d in 1..=opts.max_d.unwrap_or(top).min(top) {
                        out.push(CheckParams::new().with("type", kind).with("p", p).with("d", d));
                    }
                }
            }
        }
        "refinement_counts" => {
            for p in opts.primes.clone().unwrap_or_else(|| vec![2]) {
                for d in upto(3) {
                    out.push(CheckParams::new().with("type", FlagType::A).with("p", p).with("d", d));
                }
            }
        }
        "rothe_tallies" => {
            for kind in FlagType::ALL {
                for d in upto(4) {
                    out.push(CheckParams::new().with("type", kind).with("d", d));
                }
            }
        }
        "rothe_examples" => out.push(CheckParams::new()),
        _ => return Err(Error::UnknownName(name.to_string())),
    }
    Ok(out)
}

/// Runs checks in parallel; results keep the input order.
pub fn run_checks(jobs: &[(String, CheckParams)]) -> Vec<Result<CheckReport>> {
    jobs.par_iter().map(|(name, params)| run_identity_check(name, params)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(name: &str, params: CheckParams) -> CheckReport {
        run_identity_check(name, &params).unwrap()
    }

    #[test]
    fn named_examples() {
        assert!(run("symmetry_A", CheckParams::new().with("d", 3)).passed);
        assert!(run("direct_vs_recursive", CheckParams::new().with("family", "BC").with("d", 3)).passed);
        assert!(run("low_degree_agreement", CheckParams::new().with("d", 4)).passed);
        assert!(run("rothe_examples", CheckParams::new()).passed);
    }

    #[test]
    fn discrepancies_are_reported() {
        let r = CheckReport::polys("x", &CheckParams::new(), mono(1, 0, 0), mono(1, 0, 0).scale(&2.into()));
        assert!(!r.passed);
        assert_eq!(r.discrepancy.as_deref(), Some("coefficient of q: 1 vs 2"));
        // M_2^± differs from M_2 in degree 3
        let r = run("low_degree_agreement", CheckParams::new().with("d", 2));
        assert!(r.passed);
        let a = plain(Family::A, 2).unwrap();
        let bc = plain(Family::BC, 2).unwrap();
        assert!(!CheckReport::polys("x", &CheckParams::new(), a, bc).passed);
    }

    #[test]
    fn unknown_names_and_missing_params() {
        assert!(matches!(run_identity_check("nope", &CheckParams::new()), Err(Error::UnknownName(_))));
        assert!(run_identity_check("symmetry_A", &CheckParams::new()).is_err());
        assert!(default_grid("nope", &GridOptions::default()).is_err());
    }

    #[test]
    fn every_registered_name_has_a_grid() {
        for name in CHECK_NAMES {
            assert!(!default_grid(name, &GridOptions::default()).unwrap().is_empty(), "{name}");
        }
    }

    #[test]
    fn small_grid_passes() {
        let opts = GridOptions { max_d: Some(2), primes: Some(vec![3]), trunc: 6 };
        let jobs: Vec<(String, CheckParams)> = CHECK_NAMES
            .iter()
            .flat_map(|n| default_grid(n, &opts).unwrap().into_iter().map(move |p| (n.to_string(), p)))
            .collect();
        for r in run_checks(&jobs) {
            let r = r.unwrap();
            assert!(r.passed, "{} {} {:?}", r.name, r.params, r.discrepancy);
        }
    }

    #[test]
    fn weight_vectors() {
        let mut out = Vec::new();
        weighted_totals(&[1, 2], 5, 0, &mut out);
        out.sort_unstable();
        // (1,1) (2,1) (3,1) (1,2)
        assert_eq!(out, vec![3, 4, 5, 5]);
    }

    #[test]
    fn reports_serialize() {
        let r = run("qbinomial_theorem", CheckParams::new().with("d", 1));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["passed"], true);
        assert_eq!(v["params"]["d"], "1");
        assert_eq!(v["lhs"]["kind"], "poly");
        let back: CheckReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn printed_tables_exist_for_small_ranks() {
        for fam in [Family::BC, Family::D] {
            for d in 1..=4 {
                let t = printed_table(fam, d).unwrap();
                assert_eq!(t.coefficient_sum(), num_bigint::BigInt::from(GroupFamily::new(fam, d).order()));
            }
        }
        assert!(printed_table(Family::A, 2).is_none());
    }
}
