use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the three indeterminates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q,
    T,
    S,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Q, Var::T, Var::S];

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::S => "s",
        }
    }
}

/// Exponent triple of a monomial `q^q t^t s^s`.
///
/// The derived ordering is lexicographic in `(q, t, s)`, which is the term
/// order used everywhere, including the emitters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exp {
    pub q: u32,
    pub t: u32,
    pub s: u32,
}

impl Exp {
    pub const ZERO: Exp = Exp { q: 0, t: 0, s: 0 };

    pub const fn new(q: u32, t: u32, s: u32) -> Self {
        Exp { q, t, s }
    }

    pub fn get(self, v: Var) -> u32 {
        match v {
            Var::Q => self.q,
            Var::T => self.t,
            Var::S => self.s,
        }
    }

    fn get_mut(&mut self, v: Var) -> &mut u32 {
        match v {
            Var::Q => &mut self.q,
            Var::T => &mut self.t,
            Var::S => &mut self.s,
        }
    }

    pub fn total(self) -> u32 {
        self.q + self.t + self.s
    }

    fn plus(self, o: Exp) -> Exp {
        Exp::new(self.q + o.q, self.t + o.t, self.s + o.s)
    }
}

/// Exact polynomial in `q, t, s` with arbitrary-precision integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Exp, BigInt>,
}

/// Target of a substitution in [`MultiPoly::specialize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subst {
    Int(BigInt),
    Var(Var),
}

/// Partial map from variables to integers or variables.
///
/// All substitutions are applied simultaneously, so `swap(Q, T)` really
/// exchanges the two variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    map: BTreeMap<Var, Subst>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn int(mut self, v: Var, value: impl Into<BigInt>) -> Self {
        self.map.insert(v, Subst::Int(value.into()));
        self
    }

    pub fn var(mut self, v: Var, target: Var) -> Self {
        self.map.insert(v, Subst::Var(target));
        self
    }

    pub fn swap(self, a: Var, b: Var) -> Self {
        self.var(a, b).var(b, a)
    }

    pub fn get(&self, v: Var) -> Option<&Subst> {
        self.map.get(&v)
    }
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, Exp::ZERO)
    }

    pub fn monomial(c: impl Into<BigInt>, e: Exp) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MultiPoly { terms }
    }

    /// `c * q^eq * t^et * s^es`.
    pub fn term(c: impl Into<BigInt>, eq: u32, et: u32, es: u32) -> Self {
        Self::monomial(c, Exp::new(eq, et, es))
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, n: u32) -> Self {
        let mut e = Exp::ZERO;
        *e.get_mut(v) = n;
        Self::monomial(1, e)
    }

    /// Builds a polynomial from arbitrary terms, summing repeats and dropping zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exp, C)>,
        C: Into<BigInt>,
    {
        let mut p = MultiPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Univariate polynomial `Σ coeffs[i] v^i`.
    pub fn univariate<C: Into<BigInt> + Clone>(v: Var, coeffs: &[C]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, c)| {
            let mut e = Exp::ZERO;
            *e.get_mut(v) = i as u32;
            (e, c.clone().into())
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic `(q, t, s)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exp) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Largest exponent of `v`, or `None` for the zero polynomial.
    pub fn degree(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|e| e.get(v)).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.total()).max()
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|e| e.get(v) > 0)
    }

    /// Sum of all coefficients, i.e. the value at `q = t = s = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, e: Exp, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, e: Exp) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(k, v)| (k.plus(e), v.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = MultiPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Keeps only the terms of total degree at most `n`.
    pub fn truncate_total_degree(&self, n: u32) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total() <= n)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Simultaneous substitution of integers or variables.
    pub fn specialize(&self, a: &Assignment) -> Self {
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut ne = Exp::ZERO;
            for v in Var::ALL {
                let k = e.get(v);
                match a.get(v) {
                    None => *ne.get_mut(v) += k,
                    Some(Subst::Var(w)) => *ne.get_mut(*w) += k,
                    Some(Subst::Int(x)) => coeff *= num_traits::pow(x.clone(), k as usize),
                }
            }
            out.add_term(ne, coeff);
        }
        out
    }

    /// Value at integer points.
    pub fn evaluate(&self, q: i64, t: i64, s: i64) -> BigInt {
        let p = self.specialize(&Assignment::new().int(Var::Q, q).int(Var::T, t).int(Var::S, s));
        p.coeff(Exp::ZERO)
    }

    /// `q^dq t^dt p(1/q, 1/t)`.
    pub fn reciprocal_conjugate(&self, dq: u32, dt: u32) -> Result<Self> {
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            if e.q > dq || e.t > dt {
                return Err(Error::NegativeExponent(format!(
                    "term q^{} t^{} exceeds (dq, dt) = ({dq}, {dt})",
                    e.q, e.t
                )));
            }
            out.add_term(Exp::new(dq - e.q, dt - e.t, e.s), c.clone());
        }
        Ok(out)
    }

    /// Exact division by a divisor involving at most one variable.
    ///
    /// Fails with [`Error::InexactDivision`] when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::UnsupportedDivisor("division by zero".into()));
        }
        let used: Vec<Var> = Var::ALL.into_iter().filter(|v| divisor.uses(*v)).collect();
        if used.len() > 1 {
            return Err(Error::UnsupportedDivisor(format!(
                "divisor {divisor} is not univariate"
            )));
        }
        let v = used.first().copied().unwrap_or(Var::Q);
        let m = divisor.degree(v).unwrap_or(0);
        let lead = divisor.coeff({
            let mut e = Exp::ZERO;
            *e.get_mut(v) = m;
            e
        });

        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some(top) = rem.degree(v) {
            if top < m {
                break;
            }
            let mut step = MultiPoly::zero();
            for (e, c) in rem.terms.iter().filter(|(e, _)| e.get(v) == top) {
                if !(c % &lead).is_zero() {
                    return Err(Error::InexactDivision);
                }
                let mut qe = *e;
                *qe.get_mut(v) -= m;
                step.add_term(qe, c / &lead);
            }
            rem -= &(&step * divisor);
            quot += &step;
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Plain-text rendering such as `1 + q*t - 2*q^2*s`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = monomial_text(*e, "*");
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => out.push_str(&abs.to_string()),
                (false, true) => out.push_str(&mono),
                (false, false) => {
                    out.push_str(&abs.to_string());
                    out.push('*');
                    out.push_str(&mono);
                }
            }
        }
        out
    }

    /// Coefficient table with rows indexed by powers of `t` and columns by
    /// powers of `q`. Cells holding an `s`-polynomial are written out in full.
    pub fn to_latex_table(&self) -> String {
        let max_q = self.degree(Var::Q).unwrap_or(0);
        let max_t = self.degree(Var::T).unwrap_or(0);
        let mut out = format!("\\begin{{array}}{{c|{}}}\n", "c".repeat(max_q as usize + 1));
        for j in 0..=max_q {
            out.push('&');
            out.push_str(&power_label("q", j));
        }
        out.push_str("\\\\\n\\hline\n");
        for i in 0..=max_t {
            out.push_str(&power_label("t", i));
            let cells: Vec<String> = (0..=max_q)
                .map(|j| {
                    let cell = MultiPoly::from_terms(
                        self.terms
                            .iter()
                            .filter(|(e, _)| e.q == j && e.t == i)
                            .map(|(e, c)| (Exp::new(0, 0, e.s), c.clone())),
                    );
                    if cell.is_zero() {
                        String::new()
                    } else {
                        cell.to_text()
                    }
                })
                .collect();
            let last = cells.iter().rposition(|c| !c.is_empty());
            if let Some(last) = last {
                for c in &cells[..=last] {
                    out.push('&');
                    out.push_str(c);
                }
            }
            out.push_str("\\\\\n");
        }
        out.push_str("\\end{array}");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidArgument(e.to_string()))
    }
}

fn power_label(var: &str, n: u32) -> String {
    match n {
        0 => "1".into(),
        1 => var.into(),
        2..=9 => format!("{var}^{n}"),
        _ => format!("{var}^{{{n}}}"),
    }
}

fn monomial_text(e: Exp, sep: &str) -> String {
    let parts: Vec<String> = Var::ALL
        .into_iter()
        .filter(|v| e.get(*v) > 0)
        .map(|v| match e.get(v) {
            1 => v.name().to_string(),
            k => format!("{}^{k}", v.name()),
        })
        .collect();
    parts.join(sep)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<BigInt> for MultiPoly {
    fn from(c: BigInt) -> Self {
        MultiPoly::constant(c)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    e: [u32; 3],
    c: String,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    vars: Vec<String>,
    terms: Vec<JsonTerm>,
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        JsonPoly {
            vars: Var::ALL.iter().map(|v| v.name().to_string()).collect(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| JsonTerm { e: [e.q, e.t, e.s], c: c.to_string() })
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = JsonPoly::deserialize(de)?;
        if raw.vars != ["q", "t", "s"] {
            return Err(D::Error::custom(format!("expected vars [q, t, s], got {:?}", raw.vars)));
        }
        let mut p = MultiPoly::zero();
        for term in raw.terms {
            let c: BigInt = term
                .c
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient `{}`", term.c)))?;
            p.add_term(Exp::new(term.e[0], term.e[1], term.e[2]), c);
        }
        Ok(p)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.plus(*eb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        iter.fold(MultiPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for MultiPoly {
    fn product<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        iter.fold(MultiPoly::one(), |acc, p| acc * p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> MultiPoly {
        MultiPoly::var(Var::Q)
    }
    fn t() -> MultiPoly {
        MultiPoly::var(Var::T)
    }

    #[test]
    fn small_arithmetic() {
        let one = MultiPoly::one();
        let qt = &q() * &t();
        assert_eq!(&(&one + &qt) + &qt, MultiPoly::term(1, 0, 0, 0) + MultiPoly::term(2, 1, 1, 0));
        assert_eq!((&one + &q()) * (&one - &q()), &one - &q().pow(2));
        assert!((&(&one + &qt) * &MultiPoly::zero()).is_zero());
    }

    #[test]
    fn specialize_and_swap() {
        let m1 = MultiPoly::one() + q() * t();
        let at_q1 = m1.specialize(&Assignment::new().int(Var::Q, 1));
        assert_eq!(at_q1, MultiPoly::one() + t());

        let p = MultiPoly::one() + q().pow(2) * t();
        let swapped = p.specialize(&Assignment::new().swap(Var::Q, Var::T));
        assert_eq!(swapped, MultiPoly::one() + t().pow(2) * q());

        let r = MultiPoly::term(3, 1, 2, 1) - MultiPoly::term(5, 0, 0, 4);
        assert_eq!(r.evaluate(1, 1, 1), BigInt::from(-2));
        assert_eq!(r.coefficient_sum(), BigInt::from(-2));
    }

    #[test]
    fn reciprocal_conjugation() {
        let p = MultiPoly::one() + q() * t();
        assert_eq!(p.reciprocal_conjugate(1, 1).unwrap(), p);
        assert_eq!(MultiPoly::one().reciprocal_conjugate(2, 3).unwrap(), MultiPoly::term(1, 2, 3, 0));
        assert!(matches!(p.reciprocal_conjugate(0, 1), Err(Error::NegativeExponent(_))));
    }

    #[test]
    fn exact_division() {
        let one = MultiPoly::one();
        let num = &one - &q().pow(6);
        let den = &one - &q().pow(2);
        assert_eq!(num.div_exact(&den).unwrap(), &one + &q().pow(2) + q().pow(4));
        assert_eq!((&one - &q().pow(5)).div_exact(&den), Err(Error::InexactDivision));
        let even = MultiPoly::term(4, 1, 0, 0) + MultiPoly::term(2, 0, 3, 1);
        assert_eq!(even.div_exact(&MultiPoly::constant(2)).unwrap(), MultiPoly::term(2, 1, 0, 0) + MultiPoly::term(1, 0, 3, 1));
        assert_eq!(MultiPoly::term(3, 1, 0, 0).div_exact(&MultiPoly::constant(2)), Err(Error::InexactDivision));
        // coefficients may involve other variables
        let mixed = (&one - &q().pow(4)) * (&one + &t());
        assert_eq!(mixed.div_exact(&(&one - &q())).unwrap(), (&one + &q() + q().pow(2) + q().pow(3)) * (&one + &t()));
        assert!(matches!(mixed.div_exact(&(&q() + &t())), Err(Error::UnsupportedDivisor(_))));
    }

    #[test]
    fn text_output() {
        let p = MultiPoly::one() + q() * t();
        assert_eq!(p.to_text(), "1 + q*t");
        let r = MultiPoly::term(-1, 2, 0, 0) + MultiPoly::term(-3, 0, 1, 2) + MultiPoly::one();
        assert_eq!(r.to_text(), "1 - 3*t*s^2 - q^2");
        assert_eq!(MultiPoly::zero().to_text(), "0");
        assert_eq!((-q()).to_text(), "-q");
    }

    #[test]
    fn latex_table_layout() {
        let p = MultiPoly::one() + MultiPoly::term(1, 1, 1, 0) + MultiPoly::term(1, 2, 3, 0);
        let expected = "\\begin{array}{c|ccc}\n&1&q&q^2\\\\\n\\hline\n1&1\\\\\nt&&1\\\\\nt^2\\\\\nt^3&&&1\\\\\n\\end{array}";
        assert_eq!(p.to_latex_table(), expected);
    }

    #[test]
    fn json_round_trip_and_schema() {
        let p = MultiPoly::one() + MultiPoly::term(-12345678901234567890i128, 1, 2, 3);
        let s = p.to_json();
        assert_eq!(s, r#"{"vars":["q","t","s"],"terms":[{"e":[0,0,0],"c":"1"},{"e":[1,2,3],"c":"-12345678901234567890"}]}"#);
        assert_eq!(MultiPoly::from_json(&s).unwrap(), p);
        assert!(MultiPoly::from_json(r#"{"vars":["x"],"terms":[]}"#).is_err());
        assert!(MultiPoly::from_json(r#"{"vars":["q","t","s"],"terms":[{"e":[0,0,0],"c":"x"}]}"#).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec(((0u32..4, 0u32..4, 0u32..3), -5i64..=5), 0..6).prop_map(|ts| {
            MultiPoly::from_terms(ts.into_iter().map(|((a, b, c), k)| (Exp::new(a, b, c), k)))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn no_zero_coefficients(a in arb_poly(), b in arb_poly()) {
            for p in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(p.terms().all(|(_, c)| !c.is_zero()));
            }
        }

        #[test]
        fn double_reciprocal_is_identity(a in arb_poly(), extra_q in 0u32..3, extra_t in 0u32..3) {
            let dq = a.degree(Var::Q).unwrap_or(0) + extra_q;
            let dt = a.degree(Var::T).unwrap_or(0) + extra_t;
            let once = a.reciprocal_conjugate(dq, dt).unwrap();
            prop_assert_eq!(once.reciprocal_conjugate(dq, dt).unwrap(), a);
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), d in prop::collection::vec(-3i64..=3, 1..4)) {
            let mut coeffs = d.clone();
            if coeffs.iter().all(|c| *c == 0) {
                coeffs[0] = 1;
            }
            let divisor = MultiPoly::univariate(Var::Q, &coeffs);
            let prod = &a * &divisor;
            prop_assert_eq!(prod.div_exact(&divisor).unwrap(), a);
        }

        #[test]
        fn json_round_trips(a in arb_poly()) {
            prop_assert_eq!(MultiPoly::from_json(&a.to_json()).unwrap(), a);
        }
    }
}
