use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde_json::{json, Value};
use smallvec::SmallVec;

use crate::error::{check_dim, Error, Result};
use crate::scalar::Scalar;

/// Exponent vector `(e_q; e_1, .., e_m)`. The derived order is lexicographic
/// on `(e_q, e_1, .., e_m)`, which is also the serialization order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub q: i32,
    pub u: SmallVec<[u32; 4]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            q: 0,
            u: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn is_one(&self) -> bool {
        self.q == 0 && self.u.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            q: self.q + other.q,
            u: self.u.iter().zip(&other.u).map(|(a, b)| a + b).collect(),
        }
    }
}

/// A Laurent polynomial in `q` and ordinary polynomial in `u_1, .., u_m`
/// with exact coefficients.
///
/// Terms live in a `BTreeMap` and zero coefficients are never stored, so two
/// values are equal exactly when their term maps are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly<C> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> MultiPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, C::from_int(c))
    }

    pub fn q(nvars: usize) -> Self {
        Self::q_pow(nvars, 1)
    }

    /// `q^e`; `e` may be negative.
    pub fn q_pow(nvars: usize, e: i32) -> Self {
        let mut mono = Monomial::one(nvars);
        mono.q = e;
        Self::from_monomial(nvars, mono, C::one())
    }

    /// `u_i`, with `i` one-based.
    pub fn u(nvars: usize, i: usize) -> Self {
        Self::u_pow(nvars, i, 1)
    }

    /// `u_i^e`, with `i` one-based.
    pub fn u_pow(nvars: usize, i: usize, e: u32) -> Self {
        assert!(
            (1..=nvars).contains(&i),
            "u-variable index {i} out of range 1..={nvars}"
        );
        let mut mono = Monomial::one(nvars);
        mono.u[i - 1] = e;
        Self::from_monomial(nvars, mono, C::one())
    }

    /// A single term `c * q^eq * u_1^eu[0] * ..`.
    pub fn monomial(c: C, eq: i32, eu: &[u32]) -> Self {
        let mono = Monomial {
            q: eq,
            u: eu.iter().copied().collect(),
        };
        Self::from_monomial(eu.len(), mono, c)
    }

    fn from_monomial(nvars: usize, mono: Monomial, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(mono, c);
        p
    }

    /// `1 - q`.
    pub fn one_minus_q(nvars: usize) -> Self {
        Self::one(nvars) - Self::q(nvars)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (ascending lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> C {
        self.terms.get(mono).cloned().unwrap_or_else(C::zero)
    }

    /// The constant term when the polynomial is a constant, `None` otherwise.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// True when no term carries a power of `q`.
    pub fn is_q_free(&self) -> bool {
        self.terms.keys().all(|m| m.q == 0)
    }

    pub fn min_q_exponent(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.q).min()
    }

    pub fn add_term(&mut self, mono: Monomial, c: C) {
        debug_assert_eq!(mono.u.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_dim("number of u-variables", self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        check_dim("number of u-variables", self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_dim("number of u-variables", self.nvars, other.nvars)?;
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.clone() * c.clone());
        }
        out
    }

    /// Multiply by `q^e`.
    pub fn shift_q(&self, e: i32) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.q += e;
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// The same polynomial viewed in a ring with `nvars` u-variables.
    /// Fails if a dropped variable actually occurs.
    pub fn with_nvars(&self, nvars: usize) -> Result<Self> {
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            if m.u.iter().skip(nvars).any(|&e| e > 0) {
                return Err(Error::InvalidArgument(format!(
                    "polynomial uses more than {nvars} u-variables"
                )));
            }
            let mut u: SmallVec<[u32; 4]> = m.u.iter().take(nvars).copied().collect();
            u.resize(nvars, 0);
            out.add_term(Monomial { q: m.q, u }, c.clone());
        }
        Ok(out)
    }

    /// Substitute `u_i = 1` (one-based `i`); the variable stays in the
    /// exponent vector with exponent zero.
    pub fn set_u_to_one(&self, i: usize) -> Self {
        assert!((1..=self.nvars).contains(&i));
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut m = m.clone();
            m.u[i - 1] = 0;
            out.add_term(m, c.clone());
        }
        out
    }

    /// Substitute `q = 1`.
    pub fn at_q_one(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut m = m.clone();
            m.q = 0;
            out.add_term(m, c.clone());
        }
        out
    }

    /// Evaluate every variable at an integer point.
    /// Panics when `q = 0` and a negative `q`-power is present.
    pub fn eval_int(&self, q: i64, u: &[i64]) -> C {
        assert_eq!(u.len(), self.nvars);
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            let qc = C::from_int(q);
            if m.q >= 0 {
                v = v * num_traits::pow(qc, m.q as usize);
            } else {
                let d = num_traits::pow(qc, (-m.q) as usize);
                assert!(!d.is_zero(), "negative power of q evaluated at q = 0");
                assert!((v.clone() % d.clone()).is_zero(), "non-integral evaluation");
                v = v / d;
            }
            for (e, &x) in m.u.iter().zip(u) {
                v = v * num_traits::pow(C::from_int(x), *e as usize);
            }
            total = total + v;
        }
        total
    }

    /// Parse the canonical text form (`2 - 2*q + u1^2*q^-1`, ..). Any
    /// ordering and spacing is accepted; the result is canonical.
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        Parser::new(text, nvars).parse()
    }

    /// `{"terms":[{"c":..,"eq":..,"eu":[..]}]}`; `c` is a JSON number when it
    /// fits in `i64` and a decimal string otherwise.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                json!({
                    "c": scalar_to_json(c),
                    "eq": m.q,
                    "eu": m.u.to_vec(),
                })
            })
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(value: &Value, nvars: usize) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("polynomial JSON: {msg}"));
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"terms\" array"))?;
        let mut out = Self::zero(nvars);
        for t in terms {
            let c = scalar_from_json::<C>(t.get("c").ok_or_else(|| bad("missing \"c\""))?)?;
            let eq = t
                .get("eq")
                .and_then(Value::as_i64)
                .ok_or_else(|| bad("missing integer \"eq\""))?;
            let eu = t
                .get("eu")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing \"eu\" array"))?;
            check_dim("number of u-variables", eu.len(), nvars)?;
            let mut mono = Monomial::one(nvars);
            mono.q = i32::try_from(eq).map_err(|_| bad("q exponent out of range"))?;
            for (slot, e) in mono.u.iter_mut().zip(eu) {
                *slot = e
                    .as_u64()
                    .and_then(|e| u32::try_from(e).ok())
                    .ok_or_else(|| bad("u exponents must be nonnegative integers"))?;
            }
            out.add_term(mono, c);
        }
        Ok(out)
    }
}

pub(crate) fn scalar_to_json<C: Scalar>(c: &C) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

pub(crate) fn scalar_from_json<C: Scalar>(v: &Value) -> Result<C> {
    if let Some(i) = v.as_i64() {
        return Ok(C::from_int(i));
    }
    if let Some(s) = v.as_str() {
        return C::from_str_radix(s.trim(), 10)
            .map_err(|_| Error::Parse(format!("bad integer coefficient {s:?}")));
    }
    Err(Error::Parse(format!("bad coefficient {v}")))
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    let mut sep = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
        if !first {
            write!(f, "*")?;
        }
        first = false;
        Ok(())
    };
    if m.q != 0 {
        sep(f)?;
        if m.q == 1 {
            write!(f, "q")?;
        } else {
            write!(f, "q^{}", m.q)?;
        }
    }
    for (i, &e) in m.u.iter().enumerate() {
        if e == 0 {
            continue;
        }
        sep(f)?;
        if e == 1 {
            write!(f, "u{}", i + 1)?;
        } else {
            write!(f, "u{}^{}", i + 1, e)?;
        }
    }
    Ok(())
}

impl<C: Scalar> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    nvars: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, nvars: usize) -> Self {
        Parser {
            chars: text.chars().peekable(),
            nvars,
            text,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} in polynomial {:?}", self.text))
    }

    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_ascii_digit() {
                s.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        s
    }

    fn exponent(&mut self) -> Result<i64> {
        self.skip_ws();
        if self.chars.peek() != Some(&'^') {
            return Ok(1);
        }
        self.chars.next();
        self.skip_ws();
        let neg = if self.chars.peek() == Some(&'-') {
            self.chars.next();
            true
        } else {
            false
        };
        let d = self.digits();
        let v: i64 = d.parse().map_err(|_| self.err("bad exponent"))?;
        Ok(if neg { -v } else { v })
    }

    fn parse<C: Scalar>(mut self) -> Result<MultiPoly<C>> {
        let mut out = MultiPoly::zero(self.nvars);
        self.skip_ws();
        if self.chars.peek().is_none() {
            return Err(self.err("empty input"));
        }
        let mut sign = 1i64;
        if self.chars.peek() == Some(&'-') {
            self.chars.next();
            sign = -1;
        } else if self.chars.peek() == Some(&'+') {
            self.chars.next();
        }
        loop {
            let (mono, c) = self.term::<C>()?;
            out.add_term(mono, if sign < 0 { -c } else { c });
            self.skip_ws();
            match self.chars.next() {
                None => break,
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                Some(_) => return Err(self.err("unexpected character")),
            }
        }
        Ok(out)
    }

    fn term<C: Scalar>(&mut self) -> Result<(Monomial, C)> {
        let mut mono = Monomial::one(self.nvars);
        let mut coeff = C::one();
        loop {
            self.skip_ws();
            match self.chars.peek().copied() {
                Some(c) if c.is_ascii_digit() => {
                    let d = self.digits();
                    let v = C::from_str_radix(&d, 10).map_err(|_| self.err("bad integer"))?;
                    coeff = coeff * v;
                }
                Some('q') => {
                    self.chars.next();
                    let e = self.exponent()?;
                    mono.q += i32::try_from(e).map_err(|_| self.err("exponent out of range"))?;
                }
                Some('u') => {
                    self.chars.next();
                    let idx: usize = self
                        .digits()
                        .parse()
                        .map_err(|_| self.err("expected variable index after 'u'"))?;
                    if idx == 0 || idx > self.nvars {
                        return Err(self.err("u-variable index out of range"));
                    }
                    let e = self.exponent()?;
                    if e < 0 {
                        return Err(self.err("negative u exponent"));
                    }
                    mono.u[idx - 1] += e as u32;
                }
                _ => return Err(self.err("expected a factor")),
            }
            self.skip_ws();
            if self.chars.peek() == Some(&'*') {
                self.chars.next();
            } else {
                break;
            }
        }
        Ok((mono, coeff))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<C: Scalar> $trait<&MultiPoly<C>> for &MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $method(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<C: Scalar> $trait<MultiPoly<C>> for MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $method(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
                (&self).$method(&rhs)
            }
        }
        impl<C: Scalar> $trait<&MultiPoly<C>> for MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $method(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
                (&self).$method(rhs)
            }
        }
        impl<C: Scalar> $trait<MultiPoly<C>> for &MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $method(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<C: Scalar> AddAssign<&MultiPoly<C>> for MultiPoly<C> {
    fn add_assign(&mut self, rhs: &MultiPoly<C>) {
        assert_eq!(self.nvars, rhs.nvars, "number of u-variables differs");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<C: Scalar> SubAssign<&MultiPoly<C>> for MultiPoly<C> {
    fn sub_assign(&mut self, rhs: &MultiPoly<C>) {
        assert_eq!(self.nvars, rhs.nvars, "number of u-variables differs");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<C: Scalar> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(mut self) -> MultiPoly<C> {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<C: Scalar> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        -self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = MultiPoly<BigInt>;

    #[test]
    fn cancellations() {
        let one_minus_q = P::one_minus_q(0);
        assert_eq!(&one_minus_q + &P::q(0), P::one(0));
        assert_eq!(P::q(0) * P::q_pow(0, -1), P::one(0));
        let prod = P::one_minus_q(0) * (P::one(0) + P::q(0));
        assert_eq!(prod, P::one(0) - P::q_pow(0, 2));
    }

    #[test]
    fn text_form() {
        let p = P::from_int(2, 2) - P::q(2).scale(&BigInt::from(2));
        assert_eq!(p.to_string(), "2 - 2*q");
        let r = P::u(2, 1) + P::u(2, 2) + P::q_pow(2, -1) * P::u_pow(2, 2, 3);
        assert_eq!(r.to_string(), "q^-1*u2^3 + u2 + u1");
        assert_eq!(P::parse(&r.to_string(), 2).unwrap(), r);
        assert_eq!(P::zero(1).to_string(), "0");
        assert_eq!(P::parse("0", 1).unwrap(), P::zero(1));
        assert_eq!(P::parse(" -q + 3 * q ^ 2 - 1", 0).unwrap().to_string(), "-1 - q + 3*q^2");
    }

    #[test]
    fn parse_errors() {
        assert!(P::parse("", 1).is_err());
        assert!(P::parse("u3", 2).is_err());
        assert!(P::parse("2 +", 1).is_err());
        assert!(P::parse("x", 1).is_err());
        assert!(P::parse("u1^-1", 1).is_err());
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(
            P::one(1).checked_add(&P::one(2)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(P::one(1).checked_mul(&P::one(3)).is_err());
    }

    #[test]
    fn json_round_trip_with_big_coefficient() {
        let big = BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        let p = P::monomial(big, -2, &[1, 0]) + P::u(2, 2);
        let v = p.to_json();
        assert!(v["terms"][0]["c"].is_string());
        assert_eq!(P::from_json(&v, 2).unwrap(), p);
    }

    #[test]
    fn pow_and_eval() {
        let p = P::one_minus_q(1) + P::u(1, 1);
        assert_eq!(p.pow(3), &p * &p * &p);
        assert_eq!(p.pow(0), P::one(1));
        assert_eq!(p.eval_int(3, &[5]), BigInt::from(3));
    }
}
