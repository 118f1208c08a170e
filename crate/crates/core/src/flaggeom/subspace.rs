use serde::{Deserialize, Serialize};

use super::space::{Field, FqSpace};
use crate::error::{Error, Result};
use crate::limits;

/// Subspace of `F_p^n`, stored as its reduced row-echelon basis.
///
/// Pivots are leading nonzero coordinates in coordinate order, which for
/// spaces with a form is the signed order of indices. Two subspaces are equal
/// exactly when their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subspace {
    rows: Vec<Vec<u32>>,
}

/// Reduces `rows` to reduced row-echelon form, dropping zero rows.
pub(crate) fn rref(f: Field, mut rows: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let n = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..n {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(r, piv);
        let inv = f.inv(rows[r][col]);
        f.scale(&mut rows[r], inv);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let c = row[col];
                f.axpy(row, c, &pivot_row);
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows
}

pub(crate) fn rank(f: Field, rows: Vec<Vec<u32>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rref(f, rows).len()
}

impl Subspace {
    /// Span of the given vectors of length `n`.
    pub fn span(f: Field, n: usize, vectors: &[Vec<u32>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != n) {
            return Err(Error::InvalidArgument(format!("vector of length {} in a space of dimension {n}", v.len())));
        }
        let reduced: Vec<Vec<u32>> = vectors.iter().map(|v| v.iter().map(|&x| x % f.p()).collect()).collect();
        Ok(Subspace { rows: rref(f, reduced) })
    }

    pub(crate) fn from_rref_unchecked(rows: Vec<Vec<u32>>) -> Self {
        Subspace { rows }
    }

    pub fn zero() -> Self {
        Subspace { rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.iter().position(|&x| x != 0).expect("rows are nonzero")).collect()
    }

    /// Whether `v` lies in the subspace.
    pub fn contains_vector(&self, f: Field, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        for (row, piv) in self.rows.iter().zip(self.pivots()) {
            let c = w[piv];
            f.axpy(&mut w, c, row);
        }
        w.iter().all(|&x| x == 0)
    }

    pub fn contains(&self, f: Field, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains_vector(f, v))
    }
}

/// Deterministic stream of the `k`-dimensional subspaces of a space,
/// optionally only the totally isotropic ones.
///
/// Subspaces are produced by pivot set (lexicographic) and then by the values
/// of the free entries, read as a base-`p` counter.
#[derive(Clone, Debug)]
pub struct SubspaceIter {
    space: FqSpace,
    k: usize,
    isotropic_only: bool,
    pivots: Option<Vec<usize>>,
    free: Vec<(usize, usize)>,
    digits: Vec<u32>,
}

pub fn enumerate_subspaces(space: &FqSpace, k: usize, isotropic_only: bool) -> Result<SubspaceIter> {
    let n = space.dim();
    if k > n {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds the dimension {n}")));
    }
    let vectors = (space.p() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    limits::ensure_within(format!("vectors of {space}"), vectors, limits::max_cells())?;
    let mut it = SubspaceIter {
        space: *space,
        k,
        isotropic_only,
        pivots: Some((0..k).collect()),
        free: Vec::new(),
        digits: Vec::new(),
    };
    it.reset_free();
    Ok(it)
}

impl SubspaceIter {
    fn reset_free(&mut self) {
        let Some(piv) = &self.pivots else { return };
        let n = self.space.dim();
        self.free = piv
            .iter()
            .enumerate()
            .flat_map(|(r, &c)| (c + 1..n).filter(|j| !piv.contains(j)).map(move |j| (r, j)))
            .collect();
        self.digits = vec![0; self.free.len()];
    }

    fn current(&self) -> Vec<Vec<u32>> {
        let piv = self.pivots.as_ref().expect("called while active");
        let mut rows = vec![vec![0; self.space.dim()]; self.k];
        for (r, &c) in piv.iter().enumerate() {
            rows[r][c] = 1;
        }
        for (&(r, j), &x) in self.free.iter().zip(&self.digits) {
            rows[r][j] = x;
        }
        rows
    }

    fn advance(&mut self) {
        let p = self.space.p();
        for x in self.digits.iter_mut().rev() {
            *x += 1;
            if *x < p {
                return;
            }
            *x = 0;
        }
        // counter wrapped: move to the next pivot set
        let n = self.space.dim();
        let k = self.k;
        let Some(piv) = self.pivots.as_mut() else { return };
        let mut i = k;
        loop {
            if i == 0 {
                self.pivots = None;
                return;
            }
            i -= 1;
            if piv[i] < n - k + i {
                piv[i] += 1;
                for j in i + 1..k {
                    piv[j] = piv[j - 1] + 1;
                }
                break;
            }
        }
        self.reset_free();
    }
}

impl Iterator for SubspaceIter {
    type Item = Subspace;
    fn next(&mut self) -> Option<Subspace> {
        loop {
            self.pivots.as_ref()?;
            let rows = self.current();
            self.advance();
            if !self.isotropic_only || self.space.is_isotropic(&rows) {
                return Some(Subspace::from_rref_unchecked(rows));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statistics::{isotropic_subspace_count, q_binomial};
    use crate::weylgroups::Family;
    use num_bigint::BigInt;

    #[test]
    fn enumeration_examples() {
        let f2 = FqSpace::plain(2, 3).unwrap();
        assert_eq!(enumerate_subspaces(&f2, 1, false).unwrap().count(), 7);
        let c = FqSpace::symplectic(3, 2).unwrap();
        assert_eq!(enumerate_subspaces(&c, 1, true).unwrap().count(), 40);
        let h = FqSpace::hyperbolic(3, 1).unwrap();
        assert_eq!(enumerate_subspaces(&h, 1, true).unwrap().count(), 2);
        assert_eq!(enumerate_subspaces(&f2, 0, false).unwrap().collect::<Vec<_>>(), vec![Subspace::zero()]);
    }

    #[test]
    fn counts_match_gaussian_binomials() {
        for p in [2, 3] {
            for d in 0..=4 {
                let s = FqSpace::plain(p, d).unwrap();
                for k in 0..=d {
                    let all: Vec<_> = enumerate_subspaces(&s, k, false).unwrap().collect();
                    assert_eq!(BigInt::from(all.len()), q_binomial(d, k).evaluate(p as i64, 0, 0));
                    assert!(all.windows(2).all(|w| w[0] != w[1]));
                    for v in &all {
                        assert_eq!(Subspace::span(s.field(), d, v.rows()).unwrap(), *v);
                    }
                }
            }
        }
    }

    #[test]
    fn symplectic_counts_small() {
        for p in [2, 3] {
            for d in 1..=2 {
                let s = FqSpace::symplectic(p, d).unwrap();
                for k in 0..=d {
                    let n = enumerate_subspaces(&s, k, true).unwrap().count();
                    let expect = isotropic_subspace_count(Family::BC, d, k, None).unwrap().evaluate(p as i64, 0, 0);
                    assert_eq!(BigInt::from(n), expect);
                }
            }
        }
    }

    #[test]
    fn span_and_containment() {
        let f = Field::new(3).unwrap();
        let v = Subspace::span(f, 3, &[vec![1, 1, 0], vec![2, 2, 0], vec![0, 1, 1]]).unwrap();
        assert_eq!(v.rows(), &[vec![1, 0, 2], vec![0, 1, 1]]);
        assert!(v.contains_vector(f, &[1, 2, 1]));
        assert!(!v.contains_vector(f, &[1, 0, 0]));
        let line = Subspace::span(f, 3, &[vec![2, 2, 0]]).unwrap();
        assert!(v.contains(f, &line));
        assert!(Subspace::span(f, 2, &[vec![1, 1, 0]]).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let s = FqSpace::plain(5, 20).unwrap();
        assert!(matches!(enumerate_subspaces(&s, 1, false), Err(Error::OverCap { .. })));
    }
}
