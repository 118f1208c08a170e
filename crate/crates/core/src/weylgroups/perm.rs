use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Signed permutation in one-line notation: `images[i - 1] = σ(i)`.
///
/// Extended to negative arguments by `σ(-j) = -σ(j)`. The derived ordering is
/// lexicographic on the image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedPerm {
    images: Vec<i32>,
}

impl SignedPerm {
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d + 1];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if x == 0 || a > d {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} outside ±1..±{d} in {images:?}"
                )));
            }
            if seen[a] {
                return Err(Error::InvalidPermutation(format!(
                    "absolute value {a} repeated in {images:?}"
                )));
            }
            seen[a] = true;
        }
        Ok(SignedPerm { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<i32>) -> Self {
        SignedPerm { images }
    }

    pub fn identity(d: usize) -> Self {
        SignedPerm { images: (1..=d as i32).collect() }
    }

    /// The central element `i ↦ -i`.
    pub fn central(d: usize) -> Self {
        SignedPerm { images: (1..=d as i32).map(|i| -i).collect() }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// `σ(i)` for `1 ≤ |i| ≤ d`, using `σ(-i) = -σ(i)`.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.images[i.unsigned_abs() as usize - 1];
        if i > 0 {
            v
        } else {
            -v
        }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &SignedPerm) -> Result<SignedPerm> {
        if self.rank() != other.rank() {
            return Err(Error::InvalidArgument(format!(
                "cannot compose ranks {} and {}",
                self.rank(),
                other.rank()
            )));
        }
        Ok(SignedPerm { images: other.images.iter().map(|&j| self.apply(j)).collect() })
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut inv = vec![0; self.rank()];
        for (i, &v) in self.images.iter().enumerate() {
            let pos = v.unsigned_abs() as usize - 1;
            inv[pos] = if v > 0 { i as i32 + 1 } else { -(i as i32 + 1) };
        }
        SignedPerm { images: inv }
    }

    pub fn is_unsigned(&self) -> bool {
        self.images.iter().all(|&x| x > 0)
    }

    pub fn negative_count(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }

    /// Even number of negative images.
    pub fn is_even(&self) -> bool {
        self.negative_count() % 2 == 0
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i as i32 + 1)
    }
}

impl TryFrom<Vec<i32>> for SignedPerm {
    type Error = Error;
    fn try_from(v: Vec<i32>) -> Result<Self> {
        SignedPerm::new(v)
    }
}

impl From<SignedPerm> for Vec<i32> {
    fn from(p: SignedPerm) -> Vec<i32> {
        p.images
    }
}

/// Parses comma-separated images such as `-5,3,-1,6,4,-2`; surrounding
/// parentheses and whitespace are ignored.
impl FromStr for SignedPerm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if body.is_empty() {
            return SignedPerm::new(Vec::new());
        }
        let images = body
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::InvalidPermutation(format!("cannot parse `{}`", x.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPerm::new(images)
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The order `1 < 2 < … < d < -d < … < -1` on nonzero integers.
pub fn pm_less(a: i32, b: i32) -> Result<bool> {
    if a == 0 || b == 0 {
        return Err(Error::ZeroInOrder);
    }
    Ok(pm_lt(a, b))
}

#[inline]
pub(crate) fn pm_lt(a: i32, b: i32) -> bool {
    (a as i64) * (b as i64) * (a as i64 - b as i64) < 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pm_order_examples() {
        assert!(pm_less(3, -5).unwrap());
        assert!(pm_less(-2, -1).unwrap());
        assert!(!pm_less(4, 2).unwrap());
        assert_eq!(pm_less(0, 1), Err(Error::ZeroInOrder));
    }

    #[test]
    fn pm_order_is_positions_order() {
        let order = [1, 2, 3, 4, -4, -3, -2, -1];
        for (i, &a) in order.iter().enumerate() {
            for (j, &b) in order.iter().enumerate() {
                assert_eq!(pm_lt(a, b), i < j, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn validation_and_parsing() {
        assert!(SignedPerm::new(vec![1, -1]).is_err());
        assert!(SignedPerm::new(vec![1, 3]).is_err());
        assert!(SignedPerm::new(vec![0]).is_err());
        let p: SignedPerm = "-5,3,-1,6,4,-2".parse().unwrap();
        assert_eq!(p.images(), &[-5, 3, -1, 6, 4, -2]);
        assert_eq!(p.to_string(), "(-5,3,-1,6,4,-2)");
        assert_eq!(p.to_string().parse::<SignedPerm>().unwrap(), p);
        assert!("1,x".parse::<SignedPerm>().is_err());
        assert_eq!(p.negative_count(), 3);
        assert!(!p.is_even());
    }

    #[test]
    fn composition_uses_sign_rule() {
        let s: SignedPerm = "-2,-3,1".parse().unwrap();
        let t: SignedPerm = "1,-2,3".parse().unwrap();
        // s(t(2)) = s(-2) = 3
        assert_eq!(s.compose(&t).unwrap().images(), &[-2, 3, 1]);
        assert!(s.compose(&SignedPerm::identity(2)).is_err());
    }

    fn arb_perm() -> impl Strategy<Value = SignedPerm> {
        (1usize..7).prop_flat_map(|d| {
            (Just((1..=d as i32).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), d))
                .prop_map(|(v, signs)| {
                    SignedPerm::new(v.into_iter().zip(signs).map(|(x, s)| if s { -x } else { x }).collect()).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn inverse_composes_to_identity(p in arb_perm()) {
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
            prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
        }

        #[test]
        fn composition_is_associative(a in arb_perm(), seed in any::<u64>()) {
            let d = a.rank();
            let mut imgs: Vec<i32> = (1..=d as i32).collect();
            imgs.rotate_left((seed % d as u64) as usize);
            let b = SignedPerm::new(imgs.iter().map(|&x| if seed >> (x as u64 % 60) & 1 == 1 { -x } else { x }).collect()).unwrap();
            let c = b.inverse();
            prop_assert_eq!(a.compose(&b).unwrap().compose(&c).unwrap(), a.compose(&b.compose(&c).unwrap()).unwrap());
        }
    }
}
