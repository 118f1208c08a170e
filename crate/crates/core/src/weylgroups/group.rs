use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::perm::{pm_lt, SignedPerm};
use crate::error::{Error, Result};
use crate::limits;

/// Weyl group type. `BC` is the full group of signed permutations, `D` its
/// subgroup with an even number of sign changes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    BC,
    D,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::A, Family::BC, Family::D];

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::BC => "BC",
            Family::D => "D",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Accepts `A`, `BC`, `B`, `C` and `D` in either case.
impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "BC" | "B" | "C" => Ok(Family::BC),
            "D" => Ok(Family::D),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// A family together with its rank `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupFamily {
    pub family: Family,
    pub rank: usize,
}

impl GroupFamily {
    pub fn new(family: Family, rank: usize) -> Self {
        GroupFamily { family, rank }
    }

    /// `d!`, `2^d d!` or `2^(d-1) d!`.
    pub fn order(&self) -> u128 {
        let fact: u128 = (1..=self.rank as u128).product();
        match self.family {
            Family::A => fact,
            Family::BC => fact << self.rank,
            Family::D => {
                if self.rank == 0 {
                    1
                } else {
                    fact << (self.rank - 1)
                }
            }
        }
    }

    pub fn contains(&self, p: &SignedPerm) -> bool {
        p.rank() == self.rank
            && match self.family {
                Family::A => p.is_unsigned(),
                Family::BC => true,
                Family::D => p.is_even(),
            }
    }

    pub fn check(&self, p: &SignedPerm) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotInFamily { perm: p.to_string(), family: format!("{}{}", self.family, self.rank) })
        }
    }

    /// Indices of the Coxeter generators `s_i`.
    ///
    /// `s_i` for `i < d` exchanges positions `i` and `i + 1`. In type BC, `s_d`
    /// negates position `d`; in type D it exchanges positions `d - 1` and `d`
    /// and negates both. Type D of rank one has no generators.
    pub fn generators(&self) -> std::ops::RangeInclusive<usize> {
        let d = self.rank;
        let top = match self.family {
            Family::A => d.saturating_sub(1),
            Family::BC => d,
            Family::D if d >= 2 => d,
            Family::D => 0,
        };
        1..=top
    }

    /// `p ∘ s_i`.
    pub fn right_multiply(&self, p: &SignedPerm, i: usize) -> SignedPerm {
        let mut v = p.images().to_vec();
        apply_generator(&mut v, self.family, i);
        SignedPerm::from_images_unchecked(v)
    }

    /// Composition `s_{w_1} ∘ … ∘ s_{w_l}`.
    pub fn compose_word(&self, word: &[usize]) -> Result<SignedPerm> {
        let gens = self.generators();
        let mut v: Vec<i32> = (1..=self.rank as i32).collect();
        for &i in word {
            if !gens.contains(&i) {
                return Err(Error::InvalidArgument(format!("s_{i} is not a generator of type {}", self.family)));
            }
            apply_generator(&mut v, self.family, i);
        }
        Ok(SignedPerm::from_images_unchecked(v))
    }
}

pub(crate) fn apply_generator(v: &mut [i32], family: Family, i: usize) {
    let d = v.len();
    if i < d {
        v.swap(i - 1, i);
    } else {
        match family {
            Family::A => unreachable!("type A has no generator s_d"),
            Family::BC => v[d - 1] = -v[d - 1],
            Family::D => {
                let (a, b) = (v[d - 2], v[d - 1]);
                v[d - 2] = -b;
                v[d - 1] = -a;
            }
        }
    }
}

/// Pairs `i < j` with `σ(i) >_± σ(j)`.
pub fn inversions(p: &SignedPerm) -> usize {
    let v = p.images();
    let mut n = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if pm_lt(v[j], v[i]) {
                n += 1;
            }
        }
    }
    n
}

/// Length with respect to the family's Coxeter generators.
pub fn length(p: &SignedPerm, fam: &GroupFamily) -> Result<usize> {
    fam.check(p)?;
    Ok(length_unchecked(p.images(), fam.family))
}

pub(crate) fn length_unchecked(v: &[i32], family: Family) -> usize {
    let d = v.len() as i32;
    let mut n = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if pm_lt(v[j], v[i]) {
                n += 1;
            }
        }
    }
    let shift = match family {
        Family::A => return n,
        Family::BC => d + 1,
        Family::D => d,
    };
    n + v.iter().filter(|&&x| x < 0).map(|&x| (shift + x) as usize).sum::<usize>()
}

/// Weyl-Major index: sum of usual descent positions plus the number of
/// negative images. On unsigned permutations this is the major index.
pub fn wmaj(p: &SignedPerm) -> usize {
    wmaj_unchecked(p.images())
}

pub(crate) fn wmaj_unchecked(v: &[i32]) -> usize {
    let mut m = 0;
    for i in 1..v.len() {
        if v[i - 1] > v[i] {
            m += i;
        }
    }
    m + v.iter().filter(|&&x| x < 0).count()
}

/// Positions `i < d` with `σ(i) >_± σ(i + 1)`.
pub fn pm_descents(p: &SignedPerm) -> Vec<usize> {
    let v = p.images();
    (1..v.len()).filter(|&i| pm_lt(v[i], v[i - 1])).collect()
}

/// Descent number β: signed descents below `d`, plus one if `σ(d) < 0`.
pub fn descent_count(p: &SignedPerm) -> usize {
    descent_count_unchecked(p.images())
}

pub(crate) fn descent_count_unchecked(v: &[i32]) -> usize {
    let inner = (1..v.len()).filter(|&i| pm_lt(v[i], v[i - 1])).count();
    inner + usize::from(v.last().is_some_and(|&x| x < 0))
}

/// Lexicographic stream over the elements of a group family.
///
/// Elements can be restricted to those starting with a fixed prefix, which is
/// how enumeration is split across threads.
#[derive(Clone, Debug)]
pub struct GroupIter {
    family: Family,
    fixed: usize,
    cur: Option<Vec<i32>>,
}

/// Streams the group in lexicographic one-line order.
///
/// Refuses groups larger than [`limits::max_cells`].
pub fn enumerate_group(fam: &GroupFamily) -> Result<GroupIter> {
    limits::ensure_within(format!("group {}{}", fam.family, fam.rank), fam.order(), limits::max_cells())?;
    Ok(GroupIter::with_prefix(fam, &[]).expect("empty prefix is always valid"))
}

impl GroupIter {
    /// Elements of `fam` whose first images are `prefix`.
    pub fn with_prefix(fam: &GroupFamily, prefix: &[i32]) -> Result<Self> {
        let d = fam.rank;
        if prefix.len() > d {
            return Err(Error::InvalidArgument(format!("prefix longer than rank {d}")));
        }
        let mut used = vec![false; d + 1];
        for &x in prefix {
            let a = x.unsigned_abs() as usize;
            if x == 0 || a > d || used[a] || (fam.family == Family::A && x < 0) {
                return Err(Error::InvalidArgument(format!("invalid prefix {prefix:?} for {}{d}", fam.family)));
            }
            used[a] = true;
        }
        let mut v = prefix.to_vec();
        fill_smallest(&mut v, d, fam.family);
        let mut it = GroupIter { family: fam.family, fixed: prefix.len(), cur: Some(v) };
        it.skip_odd();
        Ok(it)
    }

    fn skip_odd(&mut self) {
        if self.family != Family::D {
            return;
        }
        while let Some(v) = &self.cur {
            if v.iter().filter(|&&x| x < 0).count() % 2 == 0 {
                break;
            }
            self.advance();
        }
    }

    fn advance(&mut self) {
        let Some(v) = self.cur.as_mut() else { return };
        let d = v.len();
        for i in (self.fixed..d).rev() {
            let mut used = vec![false; d + 1];
            for &x in &v[..i] {
                used[x.unsigned_abs() as usize] = true;
            }
            let next = candidate_values(d, self.family)
                .filter(|&x| x > v[i] && !used[x.unsigned_abs() as usize])
                .min();
            if let Some(x) = next {
                v[i] = x;
                v.truncate(i + 1);
                fill_smallest(v, d, self.family);
                return;
            }
        }
        self.cur = None;
    }
}

fn candidate_values(d: usize, family: Family) -> impl Iterator<Item = i32> {
    let d = d as i32;
    let lo = if family == Family::A { 1 } else { -d };
    (lo..=d).filter(|&x| x != 0)
}

/// Extends `v` to length `d` with the lexicographically smallest completion.
fn fill_smallest(v: &mut Vec<i32>, d: usize, family: Family) {
    let mut used = vec![false; d + 1];
    for &x in v.iter() {
        used[x.unsigned_abs() as usize] = true;
    }
    let free: Vec<i32> = (1..=d as i32).filter(|&a| !used[a as usize]).collect();
    match family {
        Family::A => v.extend(free),
        _ => v.extend(free.iter().rev().map(|&a| -a)),
    }
}

impl Iterator for GroupIter {
    type Item = SignedPerm;
    fn next(&mut self) -> Option<SignedPerm> {
        let out = self.cur.clone()?;
        self.advance();
        self.skip_odd();
        Some(SignedPerm::from_images_unchecked(out))
    }
}
