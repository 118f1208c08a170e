use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arithmetic in the prime field `F_p`, with elements stored as `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
}

impl Field {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || (2..p).take_while(|k| k * k <= p).any(|k| p % k == 0) {
            return Err(Error::NotPrime(p));
        }
        if p > 1 << 15 {
            return Err(Error::InvalidArgument(format!("prime {p} is too large for this oracle")));
        }
        Ok(Field { p })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        a * b % self.p
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        (self.p - a) % self.p
    }

    pub fn from_i64(self, a: i64) -> u32 {
        a.rem_euclid(self.p as i64) as u32
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a % self.p != 0, "zero has no inverse");
        let mut r = 1;
        let mut base = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        r
    }

    /// `v ← v - c·w`.
    pub fn axpy(self, v: &mut [u32], c: u32, w: &[u32]) {
        if c == 0 {
            return;
        }
        for (x, &y) in v.iter_mut().zip(w) {
            *x = self.sub(*x, self.mul(c, y));
        }
    }

    pub fn scale(self, v: &mut [u32], c: u32) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    /// Solves `a x = b` for square `a`; `None` if `a` is singular.
    pub fn solve(self, mut a: Vec<Vec<u32>>, mut b: Vec<u32>) -> Option<Vec<u32>> {
        let n = b.len();
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r][col] != 0)?;
            a.swap(col, piv);
            b.swap(col, piv);
            let inv = self.inv(a[col][col]);
            self.scale(&mut a[col], inv);
            b[col] = self.mul(b[col], inv);
            for r in 0..n {
                if r != col && a[r][col] != 0 {
                    let c = a[r][col];
                    let pivot_row = a[col].clone();
                    self.axpy(&mut a[r], c, &pivot_row);
                    b[r] = self.sub(b[r], self.mul(c, b[col]));
                }
            }
        }
        Some(b)
    }
}

/// Type of flags carried by a space: plain (A), symplectic (C), odd
/// orthogonal (B) or even orthogonal with a fixed metabolizer (D).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FlagType {
    A,
    C,
    B,
    D,
}

impl FlagType {
    pub const ALL: [FlagType; 4] = [FlagType::A, FlagType::C, FlagType::B, FlagType::D];

    pub fn name(self) -> &'static str {
        match self {
            FlagType::A => "A",
            FlagType::C => "C",
            FlagType::B => "B",
            FlagType::D => "D",
        }
    }

    /// The Weyl group family indexing the cells of this type.
    pub fn family(self) -> crate::weylgroups::Family {
        use crate::weylgroups::Family;
        match self {
            FlagType::A => Family::A,
            FlagType::C | FlagType::B => Family::BC,
            FlagType::D => Family::D,
        }
    }
}

impl fmt::Display for FlagType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FlagType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(FlagType::A),
            "C" | "BC" => Ok(FlagType::C),
            "B" => Ok(FlagType::B),
            "D" => Ok(FlagType::D),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// Form carried by an [`FqSpace`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    /// No form, dimension `dim`.
    None { dim: usize },
    /// `ω(x, y) = Σ_i (x_i y_{-i} - x_{-i} y_i)` on `F_p^{2d}`.
    Symplectic { d: usize },
    /// `Q(x) = x_0² + Σ_i x_i x_{-i}` on `F_p^{2d+1}`.
    QuadraticOdd { d: usize },
    /// `Q(x) = Σ_i x_i x_{-i}` on `F_p^{2d}`, with metabolizer `I = span(b_1, …, b_d)`.
    HyperbolicD { d: usize },
}

/// Finite-dimensional vector space over a prime field, possibly with a form.
///
/// Coordinates are stored in the signed order of their indices: `1, …, d`,
/// then `0` for type B, then `-d, …, -1`. Plain spaces use `1, …, dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FqSpace {
    field: Field,
    form: Form,
}

impl FqSpace {
    pub fn plain(p: u32, dim: usize) -> Result<Self> {
        Ok(FqSpace { field: Field::new(p)?, form: Form::None { dim } })
    }

    pub fn symplectic(p: u32, d: usize) -> Result<Self> {
        Ok(FqSpace { field: Field::new(p)?, form: Form::Symplectic { d } })
    }

    pub fn quadratic_odd(p: u32, d: usize) -> Result<Self> {
        let field = Field::new(p)?;
        if p == 2 {
            return Err(Error::EvenPrime(p));
        }
        Ok(FqSpace { field, form: Form::QuadraticOdd { d } })
    }

    pub fn hyperbolic(p: u32, d: usize) -> Result<Self> {
        let field = Field::new(p)?;
        if p == 2 {
            return Err(Error::EvenPrime(p));
        }
        Ok(FqSpace { field, form: Form::HyperbolicD { d } })
    }

    /// The space whose flags realize type `kind` in rank `d`.
    pub fn of_type(kind: FlagType, p: u32, d: usize) -> Result<Self> {
        match kind {
            FlagType::A => Self::plain(p, d),
            FlagType::C => Self::symplectic(p, d),
            FlagType::B => Self::quadratic_odd(p, d),
            FlagType::D => Self::hyperbolic(p, d),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn flag_type(&self) -> FlagType {
        match self.form {
            Form::None { .. } => FlagType::A,
            Form::Symplectic { .. } => FlagType::C,
            Form::QuadraticOdd { .. } => FlagType::B,
            Form::HyperbolicD { .. } => FlagType::D,
        }
    }

    /// Rank `d` of the associated Weyl group.
    pub fn rank(&self) -> usize {
        match self.form {
            Form::None { dim } => dim,
            Form::Symplectic { d } | Form::QuadraticOdd { d } | Form::HyperbolicD { d } => d,
        }
    }

    pub fn dim(&self) -> usize {
        match self.form {
            Form::None { dim } => dim,
            Form::Symplectic { d } | Form::HyperbolicD { d } => 2 * d,
            Form::QuadraticOdd { d } => 2 * d + 1,
        }
    }

    pub fn has_form(&self) -> bool {
        !matches!(self.form, Form::None { .. })
    }

    /// Largest dimension of a member of a flag: `dim` for plain spaces, `d`
    /// for isotropic flags.
    pub fn max_flag_dim(&self) -> usize {
        self.rank()
    }

    /// Signed index of the coordinate at `pos`.
    pub fn index_at(&self, pos: usize) -> i32 {
        let d = self.rank();
        match self.form {
            Form::None { .. } => pos as i32 + 1,
            Form::QuadraticOdd { .. } if pos == d => 0,
            Form::QuadraticOdd { .. } => {
                if pos < d {
                    pos as i32 + 1
                } else {
                    pos as i32 - 2 * d as i32 - 1
                }
            }
            _ => {
                if pos < d {
                    pos as i32 + 1
                } else {
                    pos as i32 - 2 * d as i32
                }
            }
        }
    }

    /// Coordinate position of the signed index `i`.
    pub fn position_of(&self, i: i32) -> usize {
        let d = self.rank() as i32;
        if i > 0 {
            return (i - 1) as usize;
        }
        match self.form {
            Form::QuadraticOdd { .. } if i == 0 => d as usize,
            Form::QuadraticOdd { .. } => (2 * d + 1 + i) as usize,
            _ => (2 * d + i) as usize,
        }
    }

    /// Column labels in coordinate order.
    pub fn indices(&self) -> Vec<i32> {
        (0..self.dim()).map(|p| self.index_at(p)).collect()
    }

    /// Value of the bilinear form on basis vectors `b_a`, `b_b`: the
    /// symplectic form, or the polar form `Q(x+y) - Q(x) - Q(y)`.
    pub fn pairing(&self, a: i32, b: i32) -> u32 {
        let f = self.field;
        match self.form {
            Form::None { .. } => 0,
            Form::Symplectic { .. } => {
                if a == -b && a > 0 {
                    1
                } else if a == -b && a < 0 {
                    f.neg(1)
                } else {
                    0
                }
            }
            Form::QuadraticOdd { .. } | Form::HyperbolicD { .. } => {
                if a == 0 && b == 0 {
                    f.from_i64(2)
                } else if a == -b {
                    1
                } else {
                    0
                }
            }
        }
    }

    /// Bilinear form on coordinate vectors.
    pub fn bilinear(&self, x: &[u32], y: &[u32]) -> u32 {
        let f = self.field;
        let d = self.rank();
        let mut acc = 0;
        match self.form {
            Form::None { .. } => {}
            Form::Symplectic { .. } => {
                for i in 1..=d as i32 {
                    let (pi, ni) = (self.position_of(i), self.position_of(-i));
                    acc = f.add(acc, f.mul(x[pi], y[ni]));
                    acc = f.sub(acc, f.mul(x[ni], y[pi]));
                }
            }
            Form::QuadraticOdd { .. } | Form::HyperbolicD { .. } => {
                for i in 1..=d as i32 {
                    let (pi, ni) = (self.position_of(i), self.position_of(-i));
                    acc = f.add(acc, f.mul(x[pi], y[ni]));
                    acc = f.add(acc, f.mul(x[ni], y[pi]));
                }
                if let Form::QuadraticOdd { .. } = self.form {
                    let z = self.position_of(0);
                    acc = f.add(acc, f.mul(2, f.mul(x[z], y[z])));
                }
            }
        }
        acc
    }

    /// Quadratic form, or `None` for plain and symplectic spaces.
    pub fn quadratic(&self, x: &[u32]) -> Option<u32> {
        let f = self.field;
        let d = self.rank() as i32;
        let mut acc = match self.form {
            Form::QuadraticOdd { .. } => {
                let z = x[self.position_of(0)];
                f.mul(z, z)
            }
            Form::HyperbolicD { .. } => 0,
            _ => return None,
        };
        for i in 1..=d {
            acc = f.add(acc, f.mul(x[self.position_of(i)], x[self.position_of(-i)]));
        }
        Some(acc)
    }

    /// Whether the span of `rows` is totally isotropic. Always true for plain spaces.
    pub fn is_isotropic(&self, rows: &[Vec<u32>]) -> bool {
        if !self.has_form() {
            return true;
        }
        for (a, x) in rows.iter().enumerate() {
            if self.quadratic(x).is_some_and(|v| v != 0) {
                return false;
            }
            for y in &rows[a + 1..] {
                if self.bilinear(x, y) != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// `dim V - dim(V ∩ I)` for the metabolizer `I` spanned by the positive
    /// basis vectors: the rank of the projection onto negative coordinates.
    pub fn parity_defect(&self, rows: &[Vec<u32>]) -> usize {
        let d = self.rank();
        let neg: Vec<Vec<u32>> = rows
            .iter()
            .map(|r| (1..=d as i32).map(|i| r[self.position_of(-i)]).collect())
            .collect();
        super::subspace::rank(self.field, neg)
    }
}

impl fmt::Display for FqSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.p();
        match self.form {
            Form::None { dim } => write!(f, "F_{p}^{dim}"),
            Form::Symplectic { d } => write!(f, "(F_{p}^{}, symplectic)", 2 * d),
            Form::QuadraticOdd { d } => write!(f, "(F_{p}^{}, quadratic)", 2 * d + 1),
            Form::HyperbolicD { d } => write!(f, "(F_{p}^{}, hyperbolic)", 2 * d),
        }
    }
}
