use std::collections::VecDeque;

use super::group::{apply_generator, length_unchecked, GroupFamily};
use super::perm::SignedPerm;
use crate::error::{Error, Result};
use crate::limits;

/// Breadth-first distances from the identity in the Cayley graph of a family
/// with respect to its Coxeter generators.
///
/// Independent of the closed-form length: it only uses the generators.
#[derive(Clone, Debug)]
pub struct CayleyDistances {
    fam: GroupFamily,
    dist: Vec<u16>,
}

const UNSEEN: u16 = u16::MAX;

/// Lehmer rank of the absolute values times `2^d`, plus the sign mask.
fn rank_of(v: &[i32]) -> usize {
    let d = v.len();
    let mut lehmer = 0usize;
    for i in 0..d {
        let smaller = v[i + 1..].iter().filter(|x| x.abs() < v[i].abs()).count();
        lehmer = lehmer * (d - i) + smaller;
    }
    let mut signs = 0usize;
    for (i, &x) in v.iter().enumerate() {
        if x < 0 {
            signs |= 1 << i;
        }
    }
    (lehmer << d) | signs
}

impl CayleyDistances {
    pub fn new(fam: &GroupFamily) -> Result<Self> {
        let d = fam.rank;
        let table: u128 = (1..=d as u128).product::<u128>() << d;
        let cap = limits::MAX_CAYLEY_TABLE.min(limits::max_cells());
        limits::ensure_within(format!("Cayley table of {}{}", fam.family, d), table, cap)?;

        let mut dist = vec![UNSEEN; table as usize];
        let start: Vec<i32> = (1..=d as i32).collect();
        dist[rank_of(&start)] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let here = dist[rank_of(&v)];
            for i in fam.generators() {
                let mut w = v.clone();
                apply_generator(&mut w, fam.family, i);
                let r = rank_of(&w);
                if dist[r] == UNSEEN {
                    dist[r] = here + 1;
                    queue.push_back(w);
                }
            }
        }
        Ok(CayleyDistances { fam: *fam, dist })
    }

    pub fn distance(&self, p: &SignedPerm) -> Result<usize> {
        self.fam.check(p)?;
        match self.dist[rank_of(p.images())] {
            UNSEEN => Err(Error::Inconsistent(format!("{p} unreachable from the identity"))),
            k => Ok(k as usize),
        }
    }

    /// Number of group elements reached by the search.
    pub fn reached(&self) -> usize {
        self.dist.iter().filter(|&&k| k != UNSEEN).count()
    }
}

/// Word length of `p` in the family's generators, by breadth-first search.
pub fn coxeter_word_length(p: &SignedPerm, fam: &GroupFamily) -> Result<usize> {
    fam.check(p)?;
    CayleyDistances::new(fam)?.distance(p)
}

/// Reduced word found by repeatedly applying the largest generator that
/// lowers the length. The result `w` satisfies `p = s_{w_1} ∘ … ∘ s_{w_l}`.
pub fn greedy_reduced_word(p: &SignedPerm, fam: &GroupFamily) -> Result<Vec<usize>> {
    fam.check(p)?;
    let mut v = p.images().to_vec();
    let mut len = length_unchecked(&v, fam.family);
    let mut steps = Vec::with_capacity(len);
    while len > 0 {
        let step = fam.generators().rev().find_map(|i| {
            let mut w = v.clone();
            apply_generator(&mut w, fam.family, i);
            let l = length_unchecked(&w, fam.family);
            (l < len).then_some((i, w, l))
        });
        let Some((i, w, l)) = step else {
            return Err(Error::Inconsistent(format!("no generator shortens {}", SignedPerm::from_images_unchecked(v))));
        };
        steps.push(i);
        v = w;
        len = l;
    }
    steps.reverse();
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylgroups::{enumerate_group, length, Family};

    fn perm(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    #[test]
    fn worked_examples() {
        let bc3 = GroupFamily::new(Family::BC, 3);
        let d4 = GroupFamily::new(Family::D, 4);
        assert_eq!(coxeter_word_length(&perm("-2,-3,1"), &bc3).unwrap(), 6);
        assert_eq!(coxeter_word_length(&perm("-2,4,-3,1"), &d4).unwrap(), 8);
        assert_eq!(greedy_reduced_word(&perm("-2,-3,1"), &bc3).unwrap(), vec![2, 3, 2, 1, 3, 2]);
        // the greedy rule prefers s_4 at (-2,1,4,-3), so it differs from the
        // hand reduction below while having the same length
        let w = greedy_reduced_word(&perm("-2,4,-3,1"), &d4).unwrap();
        assert_eq!(w, vec![2, 3, 4, 2, 1, 4, 2, 3]);
        assert_eq!(d4.compose_word(&w).unwrap(), perm("-2,4,-3,1"));
        assert_eq!(d4.compose_word(&[3, 2, 3, 4, 2, 1, 2, 3]).unwrap(), perm("-2,4,-3,1"));
        for fam in [bc3, d4] {
            let id = SignedPerm::identity(fam.rank);
            assert_eq!(coxeter_word_length(&id, &fam).unwrap(), 0);
            assert!(greedy_reduced_word(&id, &fam).unwrap().is_empty());
        }
    }

    #[test]
    fn bfs_reaches_whole_group() {
        for fam in Family::ALL {
            for d in 1..=4 {
                let g = GroupFamily::new(fam, d);
                assert_eq!(CayleyDistances::new(&g).unwrap().reached() as u128, g.order());
            }
        }
    }

    #[test]
    fn greedy_words_are_reduced_and_correct() {
        for fam in Family::ALL {
            for d in 1..=4 {
                let g = GroupFamily::new(fam, d);
                for p in enumerate_group(&g).unwrap() {
                    let w = greedy_reduced_word(&p, &g).unwrap();
                    assert_eq!(w.len(), length(&p, &g).unwrap());
                    assert_eq!(g.compose_word(&w).unwrap(), p);
                }
            }
        }
    }

    #[test]
    fn rank_is_injective() {
        let g = GroupFamily::new(Family::BC, 4);
        let mut seen = std::collections::HashSet::new();
        for p in enumerate_group(&g).unwrap() {
            let r = rank_of(p.images());
            assert!(r < 24 * 16);
            assert!(seen.insert(r));
        }
    }
}
