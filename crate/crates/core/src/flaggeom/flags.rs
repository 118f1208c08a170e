use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::space::{FlagType, FqSpace};
use super::subspace::{enumerate_subspaces, Subspace};
use crate::algebra::TruncSeries;
use crate::error::{Error, Result};
use crate::limits;

/// Strictly increasing chain of nonzero subspaces. The empty chain is the
/// empty flag.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Flag {
    members: Vec<Subspace>,
}

impl Flag {
    pub fn empty() -> Self {
        Flag { members: Vec::new() }
    }

    /// Checks strict inclusions and, for spaces with a form, isotropy.
    pub fn new(space: &FqSpace, members: Vec<Subspace>) -> Result<Self> {
        let f = space.field();
        for (i, v) in members.iter().enumerate() {
            if v.rows().iter().any(|r| r.len() != space.dim()) {
                return Err(Error::InvalidFlag(format!("member {} has the wrong ambient dimension", i + 1)));
            }
            if v.dim() == 0 {
                return Err(Error::InvalidFlag("members must be nonzero".into()));
            }
            if i > 0 {
                let u = &members[i - 1];
                if u.dim() >= v.dim() || !v.contains(f, u) {
                    return Err(Error::InvalidFlag(format!("member {i} is not strictly contained in member {}", i + 1)));
                }
            }
        }
        if let Some(top) = members.last() {
            if !space.is_isotropic(top.rows()) {
                return Err(Error::InvalidFlag("flag is not isotropic".into()));
            }
            if top.dim() > space.max_flag_dim() {
                return Err(Error::InvalidFlag(format!("member of dimension {} is too large", top.dim())));
            }
        }
        Ok(Flag { members })
    }

    pub(crate) fn from_members_unchecked(members: Vec<Subspace>) -> Self {
        Flag { members }
    }

    pub fn members(&self) -> &[Subspace] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.members.iter().map(Subspace::dim).collect()
    }

    /// Even parity of the largest member with respect to the metabolizer.
    /// Only meaningful in type D; always true for the empty flag.
    pub fn is_even(&self, space: &FqSpace) -> bool {
        self.members.last().map_or(true, |v| space.parity_defect(v.rows()) % 2 == 0)
    }

    /// Lists of RREF rows, outermost list indexed by member.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("flag serialization cannot fail")
    }
}

/// Flag with a positive weight on each member.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightedFlag {
    pub flag: Flag,
    pub weights: Vec<u32>,
}

impl WeightedFlag {
    pub fn new(flag: Flag, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != flag.len() || weights.contains(&0) {
            return Err(Error::InvalidFlag("one positive weight per member is required".into()));
        }
        Ok(WeightedFlag { flag, weights })
    }

    /// `Σ w_i dim V_i`.
    pub fn weight(&self) -> usize {
        self.weights.iter().zip(self.flag.dims()).map(|(&w, d)| w as usize * d).sum()
    }

    /// `Σ w_i`.
    pub fn alpha(&self) -> usize {
        self.weights.iter().map(|&w| w as usize).sum()
    }
}

/// All flags of nonzero (isotropic) subspaces, empty flag first, then in
/// depth-first order. Type D flags of odd parity are included.
pub fn enumerate_all_flags(space: &FqSpace) -> Result<Vec<Flag>> {
    let f = space.field();
    let top = space.max_flag_dim();
    let isotropic = space.has_form();
    let mut layers: Vec<Vec<Subspace>> = vec![Vec::new()];
    for k in 1..=top {
        layers.push(enumerate_subspaces(space, k, isotropic)?.collect());
    }
    let total: usize = layers.iter().map(Vec::len).sum();
    limits::ensure_within(format!("subspaces of {space}"), total as u128, limits::max_cells())?;

    // above[k][i]: members of higher layers containing layers[k][i]
    let mut above: Vec<Vec<Vec<(usize, usize)>>> = layers.iter().map(|l| vec![Vec::new(); l.len()]).collect();
    for k in 1..=top {
        for m in k + 1..=top {
            for (j, w) in layers[m].iter().enumerate() {
                for (i, u) in layers[k].iter().enumerate() {
                    if w.contains(f, u) {
                        above[k][i].push((m, j));
                    }
                }
            }
        }
    }
    for list in above.iter_mut().flatten() {
        list.sort_unstable();
    }

    let mut out = vec![Flag::empty()];
    let mut chain: Vec<(usize, usize)> = Vec::new();
    fn walk(
        chain: &mut Vec<(usize, usize)>,
        layers: &[Vec<Subspace>],
        above: &[Vec<Vec<(usize, usize)>>],
        out: &mut Vec<Flag>,
    ) -> Result<()> {
        out.push(Flag::from_members_unchecked(chain.iter().map(|&(k, i)| layers[k][i].clone()).collect()));
        limits::ensure_within("flags", out.len() as u128, limits::max_cells())?;
        let &(k, i) = chain.last().expect("chain is nonempty");
        for &next in &above[k][i] {
            chain.push(next);
            walk(chain, layers, above, out)?;
            chain.pop();
        }
        Ok(())
    }
    for (k, layer) in layers.iter().enumerate().skip(1) {
        for i in 0..layer.len() {
            chain.push((k, i));
            walk(&mut chain, &layers, &above, &mut out)?;
            chain.pop();
        }
    }
    Ok(out)
}

/// The flags counted by the flag-series identities: all (isotropic) flags,
/// and in type D only those of even parity.
pub fn enumerate_flags(space: &FqSpace) -> Result<Vec<Flag>> {
    let mut flags = enumerate_all_flags(space)?;
    if space.flag_type() == FlagType::D {
        flags.retain(|fl| fl.is_even(space));
    }
    Ok(flags)
}

/// `Σ_F ∏_i x t^{dim V_i} / (1 - x t^{dim V_i})` over the flags of
/// [`enumerate_flags`], truncated after `t^bound`; `x = s` with `with_alpha`.
///
/// This is the sum of `t^{w(F)} [s^{α(F)}]` over all weighted flags, since
/// each member with weight `w` contributes `(x t^{dim})^w`.
pub fn flag_series(space: &FqSpace, bound: usize, with_alpha: bool) -> Result<TruncSeries> {
    let mut by_dims: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for fl in enumerate_flags(space)? {
        *by_dims.entry(fl.dims()).or_default() += 1;
    }
    let one = TruncSeries::one(bound);
    let mut total = TruncSeries::zero(bound);
    for (dims, count) in by_dims {
        let mut term = one.clone();
        for m in dims {
            let factor = TruncSeries::geometric_factor(m, with_alpha, bound)?.sub(&one)?;
            term = term.mul(&factor)?;
        }
        total = total.add(&term.scale(&BigInt::from(count)))?;
    }
    Ok(total)
}
