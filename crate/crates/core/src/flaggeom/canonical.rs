use serde::{Deserialize, Serialize};

use super::flags::Flag;
use super::rothe::{rothe_diagram, Cell};
use super::space::{FlagType, FqSpace};
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::limits;
use crate::weylgroups::{pm_descents, GroupFamily, SignedPerm};

/// Basis adapted to a flag, with the (signed) permutation recording the
/// index of the last relevant coordinate of each vector.
///
/// In type A the basis spans the whole space. For spaces with a form it is a
/// half-basis `f_1, …, f_d` spanning a Lagrangian that contains the flag.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalBasis {
    pub vectors: Vec<Vec<u32>>,
    pub perm: SignedPerm,
}

/// Dimensions and weight of the standard flag attached to a permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StandardFlag {
    pub dims: Vec<usize>,
    pub weight: usize,
}

fn flag_rank(space: &FqSpace, flag: &Flag) -> Result<()> {
    if flag.members().iter().any(|v| v.rows().iter().any(|r| r.len() != space.dim())) {
        return Err(Error::InvalidFlag("flag lives in a different space".into()));
    }
    let checked = Flag::new(space, flag.members().to_vec())?;
    if space.flag_type() == FlagType::D && !checked.is_even(space) {
        return Err(Error::InvalidFlag("type D flags must end with a subspace of even parity".into()));
    }
    Ok(())
}

/// Computes the canonical basis (type A) or half-basis (types C, B, D).
///
/// Step `i` works in the smallest member of dimension at least `i`, removes
/// the coordinates already used as pivots by earlier vectors, and keeps the
/// shortest remaining vector, scaled so its last relevant coordinate is 1.
/// For forms, "relevant" skips the coordinates paired with earlier pivots.
/// Past the top of the flag, a half-basis is completed by the next unused
/// positive basis vector corrected to be orthogonal to the earlier ones.
pub fn canonical_basis(space: &FqSpace, flag: &Flag) -> Result<CanonicalBasis> {
    flag_rank(space, flag)?;
    let f = space.field();
    let n = space.dim();
    let d = space.rank();
    let typed = space.has_form();

    let mut basis: Vec<Vec<u32>> = Vec::with_capacity(d);
    let mut pivots: Vec<usize> = Vec::with_capacity(d);
    let mut images: Vec<i32> = Vec::with_capacity(d);

    for i in 1..=d {
        // past the top of a plain flag, continue inside the whole space
        let member: Option<Vec<Vec<u32>>> = match flag.members().iter().find(|v| v.dim() >= i) {
            Some(v) => Some(v.rows().to_vec()),
            None if !typed => Some((0..n).map(|j| (0..n).map(|c| u32::from(c == j)).collect()).collect()),
            None => None,
        };
        match member {
            Some(mut rows) => {
                for row in rows.iter_mut() {
                    for (b, &pv) in basis.iter().zip(&pivots) {
                        let c = row[pv];
                        f.axpy(row, c, b);
                    }
                }
                // relevant coordinates: not an earlier pivot, nor paired with one
                let skip: Vec<usize> = if typed {
                    images.iter().map(|&s| space.position_of(-s)).collect()
                } else {
                    Vec::new()
                };
                let relevant = |j: usize| !pivots.contains(&j) && !skip.contains(&j);
                let last_relevant = |r: &[u32]| (0..n).rev().find(|&j| relevant(j) && r[j] != 0);

                // echelon form keyed by the last relevant nonzero coordinate
                let mut echelon: Vec<(usize, Vec<u32>)> = Vec::new();
                for mut row in rows {
                    while let Some(l) = last_relevant(&row) {
                        match echelon.iter().find(|(pl, _)| *pl == l) {
                            Some((_, e)) => {
                                let c = f.mul(row[l], f.inv(e[l]));
                                f.axpy(&mut row, c, e);
                            }
                            None => {
                                echelon.push((l, row));
                                break;
                            }
                        }
                    }
                }
                let Some((l, mut best)) = echelon.into_iter().min_by_key(|(l, _)| *l) else {
                    return Err(Error::Inconsistent(format!("no vector left at step {i}")));
                };
                let inv = f.inv(best[l]);
                f.scale(&mut best, inv);
                let idx = space.index_at(l);
                if typed && idx == 0 {
                    return Err(Error::Inconsistent("half-basis pivot on the anisotropic coordinate".into()));
                }
                basis.push(best);
                pivots.push(l);
                images.push(idx);
            }
            None => {
                let used: Vec<i32> = images.iter().map(|s| s.abs()).collect();
                let m = (1..=d as i32).find(|a| !used.contains(a)).expect("an index is unused");
                let mut v = vec![0; n];
                v[space.position_of(m)] = 1;
                let k = basis.len();
                // B(v + Σ λ_j b_{-σ(j)}, f_r) = 0 for every earlier f_r
                let a: Vec<Vec<u32>> = basis
                    .iter()
                    .map(|fr| {
                        images
                            .iter()
                            .map(|&s| {
                                let mut e = vec![0; n];
                                e[space.position_of(-s)] = 1;
                                space.bilinear(&e, fr)
                            })
                            .collect()
                    })
                    .collect();
                let rhs: Vec<u32> = basis.iter().map(|fr| f.neg(space.bilinear(&v, fr))).collect();
                let lambda = f
                    .solve(a, rhs)
                    .ok_or_else(|| Error::Inconsistent("orthogonality system is singular".into()))?;
                for j in 0..k {
                    let pos = space.position_of(-images[j]);
                    v[pos] = f.add(v[pos], lambda[j]);
                }
                basis.push(v);
                pivots.push(space.position_of(m));
                images.push(m);
            }
        }
    }
    Ok(CanonicalBasis { vectors: basis, perm: SignedPerm::new(images)? })
}

/// Standard flag of a permutation: usual descents in type A, signed descents
/// below `d` plus `d` when `σ(d) < 0` in types C, B, D. The weight is the sum
/// of the dimensions.
pub fn standard_flag(perm: &SignedPerm, kind: FlagType) -> Result<StandardFlag> {
    let d = perm.rank();
    let fam = GroupFamily::new(kind.family(), d);
    fam.check(perm)?;
    let dims: Vec<usize> = match kind {
        FlagType::A => {
            let v = perm.images();
            (1..d).filter(|&i| v[i - 1] > v[i]).collect()
        }
        _ => {
            let mut dims = pm_descents(perm);
            if perm.images().last().is_some_and(|&x| x < 0) {
                dims.push(d);
            }
            dims
        }
    };
    let weight = dims.iter().sum();
    Ok(StandardFlag { dims, weight })
}

/// The flag spanned by prefixes of a canonical basis at the standard dimensions.
pub fn standard_subflag(space: &FqSpace, basis: &CanonicalBasis) -> Result<Flag> {
    let st = standard_flag(&basis.perm, space.flag_type())?;
    let members = st
        .dims
        .iter()
        .map(|&m| Subspace::span(space.field(), space.dim(), &basis.vectors[..m]))
        .collect::<Result<Vec<_>>>()?;
    Flag::new(space, members)
}

/// Number of canonical bases with permutation `perm`.
///
/// Every assignment of the free cells of the Rothe diagram is completed by
/// solving for the cells fixed by isotropy and orthogonality; the resulting
/// basis counts when recomputing the canonical basis of its standard flag
/// returns it unchanged.
pub fn count_canonical_bases(space: &FqSpace, perm: &SignedPerm) -> Result<u64> {
    let kind = space.flag_type();
    let d = space.rank();
    let fam = GroupFamily::new(kind.family(), d);
    fam.check(perm)?;
    let f = space.field();
    let n = space.dim();
    let diagram = rothe_diagram(perm, kind)?;

    let free: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| (0..n).map(move |c| (i, c)))
        .filter(|&(i, c)| matches!(diagram.cell(i, c), Cell::Cross | Cell::Tensor(_)))
        .collect();
    let total = (space.p() as u128).checked_pow(free.len() as u32).unwrap_or(u128::MAX);
    limits::ensure_within("free-cell assignments", total, limits::max_cells())?;

    let mut digits = vec![0u32; free.len()];
    let mut count = 0u64;
    loop {
        let mut vectors = vec![vec![0u32; n]; d];
        for (i, row) in vectors.iter_mut().enumerate() {
            row[space.position_of(perm.images()[i])] = 1;
        }
        for (&(i, c), &x) in free.iter().zip(&digits) {
            vectors[i][c] = x;
        }
        if complete_perp_cells(space, perm, &diagram, &mut vectors)? {
            let candidate = CanonicalBasis { vectors, perm: perm.clone() };
            let st = standard_subflag(space, &candidate)?;
            if canonical_basis(space, &st)? == candidate {
                count += 1;
            }
        }

        let mut pos = digits.len();
        loop {
            if pos == 0 {
                return Ok(count);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < f.p() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Fills the `⊥` cells row by row. Returns `false` if some row cannot be
/// completed.
fn complete_perp_cells(
    space: &FqSpace,
    perm: &SignedPerm,
    diagram: &super::rothe::RotheDiagram,
    vectors: &mut [Vec<u32>],
) -> Result<bool> {
    let f = space.field();
    let n = space.dim();
    let img = perm.images();
    for i in 0..vectors.len() {
        let perp: Vec<usize> = (0..n).filter(|&c| diagram.cell(i, c) == Cell::Perp).collect();
        let own = space.position_of(-img[i]);
        if perp.contains(&own) {
            // isotropy fixes the coordinate paired with the pivot
            vectors[i][own] = 0;
            let q = space.quadratic(&vectors[i]).unwrap_or(0);
            vectors[i][own] = f.neg(q);
        }
        let orth: Vec<usize> = perp.iter().copied().filter(|&c| c != own).collect();
        if orth.is_empty() {
            continue;
        }
        // unknowns: coordinates paired with earlier pivots
        let earlier: Vec<usize> = (0..i).collect();
        if orth.len() != earlier.len() {
            return Err(Error::Inconsistent(format!("row {} has {} orthogonality cells", i + 1, orth.len())));
        }
        let a: Vec<Vec<u32>> = earlier
            .iter()
            .map(|&j| {
                orth.iter()
                    .map(|&c| {
                        let mut e = vec![0; n];
                        e[c] = 1;
                        space.bilinear(&e, &vectors[j])
                    })
                    .collect()
            })
            .collect();
        let rhs: Vec<u32> = earlier.iter().map(|&j| f.neg(space.bilinear(&vectors[i], &vectors[j]))).collect();
        match f.solve(a, rhs) {
            Some(x) => {
                for (&c, v) in orth.iter().zip(x) {
                    vectors[i][c] = v;
                }
            }
            None => return Ok(false),
        }
        if space.quadratic(&vectors[i]).is_some_and(|q| q != 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of flags sharing a type A canonical basis with permutation `perm`:
/// the flags whose dimensions contain the descent set, `2^{d-k}` for `k`
/// descents.
pub fn refinement_count(perm: &SignedPerm, fam: &GroupFamily) -> Result<u64> {
    if fam.family != crate::weylgroups::Family::A {
        return Err(Error::InvalidArgument("refinement counts are defined for type A".into()));
    }
    let st = standard_flag(perm, FlagType::A)?;
    let d = perm.rank();
    // any subset of {1, …, d} containing the descents
    let count = (0u64..1 << d)
        .filter(|mask| st.dims.iter().all(|&m| mask >> (m - 1) & 1 == 1))
        .count() as u64;
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flaggeom::enumerate_all_flags;
    use crate::weylgroups::{enumerate_group, inversions, length, wmaj, Family};

    fn perm(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    #[test]
    fn empty_flag_gives_standard_basis() {
        for space in [FqSpace::plain(3, 3).unwrap(), FqSpace::symplectic(3, 2).unwrap(), FqSpace::quadratic_odd(3, 2).unwrap()] {
            let b = canonical_basis(&space, &Flag::empty()).unwrap();
            assert!(b.perm.is_identity());
            for (i, v) in b.vectors.iter().enumerate() {
                let mut e = vec![0; space.dim()];
                e[i] = 1;
                assert_eq!(*v, e);
            }
        }
    }

    #[test]
    fn plane_example() {
        let s = FqSpace::plain(2, 2).unwrap();
        let line = Subspace::span(s.field(), 2, &[vec![1, 1]]).unwrap();
        let b = canonical_basis(&s, &Flag::new(&s, vec![line]).unwrap()).unwrap();
        assert_eq!(b.vectors, vec![vec![1, 1], vec![1, 0]]);
        assert_eq!(b.perm, perm("2,1"));
    }

    #[test]
    fn flags_inside_the_metabolizer_have_unsigned_perms() {
        let s = FqSpace::symplectic(3, 2).unwrap();
        for fl in enumerate_all_flags(&s).unwrap() {
            let inside = fl.members().last().map_or(true, |v| s.parity_defect(v.rows()) == 0);
            let b = canonical_basis(&s, &fl).unwrap();
            assert_eq!(b.perm.is_unsigned(), inside);
        }
    }

    #[test]
    fn standard_flag_examples() {
        let a = standard_flag(&perm("6,3,8,1,4,9,7,2,5"), FlagType::A).unwrap();
        assert_eq!(a, StandardFlag { dims: vec![1, 3, 6, 7], weight: 17 });
        let c = standard_flag(&perm("-5,3,-1,6,4,-2"), FlagType::C).unwrap();
        assert_eq!(c, StandardFlag { dims: vec![1, 3, 4, 6], weight: 14 });
        assert!(standard_flag(&SignedPerm::identity(4), FlagType::D).unwrap().dims.is_empty());
    }

    #[test]
    fn standard_weight_is_major_index() {
        for d in 1..=5 {
            for p in enumerate_group(&GroupFamily::new(Family::BC, d)).unwrap() {
                let st = standard_flag(&p, FlagType::C).unwrap();
                assert_eq!(st.weight, wmaj(&p));
                assert_eq!(st.dims.len(), crate::weylgroups::descent_count(&p));
                if p.is_unsigned() {
                    assert_eq!(standard_flag(&p, FlagType::A).unwrap().weight, wmaj(&p));
                }
            }
        }
    }

    #[test]
    fn canonical_basis_counts_small() {
        let s = FqSpace::plain(3, 2).unwrap();
        assert_eq!(count_canonical_bases(&s, &SignedPerm::identity(2)).unwrap(), 1);
        assert_eq!(count_canonical_bases(&s, &perm("2,1")).unwrap(), 3);
        let c = FqSpace::symplectic(3, 1).unwrap();
        assert_eq!(count_canonical_bases(&c, &perm("-1")).unwrap(), 3);
    }

    #[test]
    fn canonical_basis_counts_are_field_powers() {
        for kind in FlagType::ALL {
            let d = if kind == FlagType::A { 3 } else { 2 };
            let space = FqSpace::of_type(kind, 3, d).unwrap();
            let fam = GroupFamily::new(kind.family(), d);
            for p in enumerate_group(&fam).unwrap() {
                let expect = 3u64.pow(length(&p, &fam).unwrap() as u32);
                assert_eq!(count_canonical_bases(&space, &p).unwrap(), expect, "{kind} {p}");
            }
        }
    }

    #[test]
    fn every_flag_is_spanned_by_its_basis() {
        for kind in FlagType::ALL {
            let d = 3;
            let space = FqSpace::of_type(kind, 3, d).unwrap();
            for fl in crate::flaggeom::enumerate_flags(&space).unwrap() {
                let b = canonical_basis(&space, &fl).unwrap();
                assert!(GroupFamily::new(kind.family(), d).contains(&b.perm));
                for v in fl.members() {
                    let span = Subspace::span(space.field(), space.dim(), &b.vectors[..v.dim()]).unwrap();
                    assert_eq!(&span, v);
                }
                if space.has_form() {
                    assert!(space.is_isotropic(&b.vectors));
                }
                let st = standard_subflag(&space, &b).unwrap();
                assert!(st.members().iter().all(|m| fl.members().contains(m)));
                assert_eq!(canonical_basis(&space, &st).unwrap(), b);
            }
        }
    }

    #[test]
    fn refinement_examples() {
        let a3 = GroupFamily::new(Family::A, 3);
        assert_eq!(refinement_count(&SignedPerm::identity(3), &a3).unwrap(), 8);
        assert_eq!(refinement_count(&perm("2,1"), &GroupFamily::new(Family::A, 2)).unwrap(), 2);
        assert_eq!(refinement_count(&perm("3,2,1"), &a3).unwrap(), 2);
        assert!(refinement_count(&perm("-1"), &GroupFamily::new(Family::BC, 1)).is_err());
        for p in enumerate_group(&a3).unwrap() {
            let k = (1..3).filter(|&i| p.images()[i - 1] > p.images()[i]).count();
            assert_eq!(refinement_count(&p, &a3).unwrap(), 1 << (3 - k));
            assert!(inversions(&p) <= 3);
        }
    }
}
