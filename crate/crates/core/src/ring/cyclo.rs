use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde_json::{json, Value};

use super::poly::{scalar_from_json, scalar_to_json};
use crate::error::{check_dim, Error, Result};
use crate::scalar::Scalar;

/// Coefficients of `Phi_m(x)`, lowest degree first.
///
/// Computed by exact division of `x^m - 1` by `Phi_d` for every proper
/// divisor `d` of `m`.
pub fn cyclotomic_polynomial<C: Scalar>(m: usize) -> Result<Vec<C>> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "cyclotomic polynomial of order 0".into(),
        ));
    }
    let mut memo = HashMap::new();
    Ok(cyclotomic_memo(m, &mut memo))
}

fn cyclotomic_memo<C: Scalar>(m: usize, memo: &mut HashMap<usize, Vec<C>>) -> Vec<C> {
    if let Some(p) = memo.get(&m) {
        return p.clone();
    }
    let mut num = vec![C::zero(); m + 1];
    num[0] = -C::one();
    num[m] = C::one();
    for d in (1..m).filter(|d| m % d == 0) {
        let phi_d = cyclotomic_memo(d, memo);
        let (quot, rem) = divide_monic(&num, &phi_d);
        debug_assert!(rem.iter().all(|c| c.is_zero()));
        num = quot;
    }
    memo.insert(m, num.clone());
    num
}

/// Long division by a monic polynomial; returns `(quotient, remainder)`.
pub fn divide_monic<C: Scalar>(num: &[C], den: &[C]) -> (Vec<C>, Vec<C>) {
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem: Vec<C> = num.to_vec();
    if num.len() <= dd {
        return (vec![C::zero()], rem);
    }
    let mut quot = vec![C::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dc) in den.iter().enumerate() {
            rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
        }
        quot[k] = c;
    }
    rem.truncate(dd.max(1));
    (quot, rem)
}

/// Euler's totient.
pub fn totient(m: usize) -> usize {
    (1..=m).filter(|&k| gcd(k, m) == 1).count()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct Modulus<C> {
    m: usize,
    phi: Vec<C>,
}

/// The ring `Z[x]/Phi_m(x)`, i.e. the integers adjoined a primitive `m`-th
/// root of unity `x`. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloRing<C> {
    modulus: Arc<Modulus<C>>,
}

impl<C: Scalar> CycloRing<C> {
    pub fn new(m: usize) -> Result<Self> {
        let phi = cyclotomic_polynomial(m)?;
        Ok(CycloRing {
            modulus: Arc::new(Modulus { m, phi }),
        })
    }

    pub fn order(&self) -> usize {
        self.modulus.m
    }

    /// `phi(m)`, the length of every coefficient vector.
    pub fn degree(&self) -> usize {
        self.modulus.phi.len() - 1
    }

    pub fn modulus_polynomial(&self) -> &[C] {
        &self.modulus.phi
    }

    pub fn zero(&self) -> CycloElem<C> {
        CycloElem {
            ring: self.clone(),
            coeffs: vec![C::zero(); self.degree()],
        }
    }

    pub fn from_int(&self, c: i64) -> CycloElem<C> {
        self.reduce(vec![C::from_int(c)])
    }

    /// Class of `x^k`. Since `x^m = 1` the exponent is taken mod `m`.
    pub fn x_pow(&self, k: usize) -> CycloElem<C> {
        let k = k % self.order();
        let mut v = vec![C::zero(); k + 1];
        v[k] = C::one();
        self.reduce(v)
    }

    /// Reduce an arbitrary integer polynomial (lowest degree first).
    pub fn reduce(&self, coeffs: Vec<C>) -> CycloElem<C> {
        let d = self.degree();
        let mut rem = if coeffs.len() > d {
            divide_monic(&coeffs, &self.modulus.phi).1
        } else {
            coeffs
        };
        rem.resize(d, C::zero());
        CycloElem {
            ring: self.clone(),
            coeffs: rem,
        }
    }

    pub fn elem(&self, coeffs: Vec<C>) -> CycloElem<C> {
        self.reduce(coeffs)
    }
}

/// A residue class in `Z[x]/Phi_m(x)`, stored by its representative of
/// degree `< phi(m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloElem<C> {
    ring: CycloRing<C>,
    coeffs: Vec<C>,
}

impl<C: Scalar> CycloElem<C> {
    pub fn ring(&self) -> &CycloRing<C> {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.ring.order()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The integer this element equals, when it lies in `Z`.
    pub fn as_integer(&self) -> Option<C> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        check_dim("cyclotomic order", self.order(), other.order())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(CycloElem {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(CycloElem {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut prod = vec![C::zero(); self.coeffs.len() + other.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                prod[i + j] = prod[i + j].clone() + a.clone() * b.clone();
            }
        }
        Ok(self.ring.reduce(prod))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(self.ring.from_int(1), |acc, _| &acc * self)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.order(),
            "coeffs": self.coeffs.iter().map(scalar_to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("cyclotomic JSON: {msg}"));
        let m = value
            .get("m")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing \"m\""))? as usize;
        let ring = CycloRing::new(m)?;
        let coeffs = value
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"coeffs\""))?
            .iter()
            .map(scalar_from_json)
            .collect::<Result<Vec<C>>>()?;
        check_dim("cyclotomic coefficient count", coeffs.len(), ring.degree())?;
        Ok(ring.reduce(coeffs))
    }
}

impl<C: Scalar> fmt::Display for CycloElem<C> {
    /// Polynomial in `x` (a primitive `m`-th root of unity), ascending degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            match (wrote, c.is_negative()) {
                (false, true) => write!(f, "-")?,
                (false, false) => {}
                (true, true) => write!(f, " - ")?,
                (true, false) => write!(f, " + ")?,
            }
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! cyclo_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<C: Scalar> $trait<&CycloElem<C>> for &CycloElem<C> {
            type Output = CycloElem<C>;
            fn $method(self, rhs: &CycloElem<C>) -> CycloElem<C> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<C: Scalar> $trait<CycloElem<C>> for CycloElem<C> {
            type Output = CycloElem<C>;
            fn $method(self, rhs: CycloElem<C>) -> CycloElem<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

cyclo_binop!(Add, add, checked_add);
cyclo_binop!(Sub, sub, checked_sub);
cyclo_binop!(Mul, mul, checked_mul);

impl<C: Scalar> Neg for CycloElem<C> {
    type Output = CycloElem<C>;
    fn neg(self) -> CycloElem<C> {
        CycloElem {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
            ring: self.ring,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi(m: usize) -> Vec<i64> {
        cyclotomic_polynomial::<i64>(m).unwrap()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(phi(1), vec![-1, 1]);
        assert_eq!(phi(2), vec![1, 1]);
        assert_eq!(phi(4), vec![1, 0, 1]);
        assert_eq!(phi(6), vec![1, -1, 1]);
        assert_eq!(phi(12), vec![1, 0, -1, 0, 1]);
        assert!(cyclotomic_polynomial::<i64>(0).is_err());
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        // first cyclotomic polynomial with a coefficient outside {-1,0,1}
        assert!(phi(105).contains(&-2));
        assert_eq!(phi(105).len() - 1, totient(105));
    }

    #[test]
    fn reduction() {
        let r3 = CycloRing::<i64>::new(3).unwrap();
        // 1 + x + x^2 = 0
        let s = r3.from_int(1) + r3.x_pow(1) + r3.x_pow(2);
        assert!(s.is_zero());
        let r4 = CycloRing::<i64>::new(4).unwrap();
        assert_eq!(r4.x_pow(1).coeffs(), &[0, 1]);
        assert_eq!((r4.x_pow(1) * r4.x_pow(1)).as_integer(), Some(-1));
        assert_eq!(r4.x_pow(5), r4.x_pow(1));
        let r1 = CycloRing::<i64>::new(1).unwrap();
        assert_eq!(r1.x_pow(3).as_integer(), Some(1));
    }

    #[test]
    fn text_and_json() {
        let r = CycloRing::<i64>::new(5).unwrap();
        let e = r.from_int(2) - r.x_pow(1) + r.x_pow(3).pow(1);
        assert_eq!(e.to_string(), "2 - x + x^3");
        assert_eq!(CycloElem::<i64>::from_json(&e.to_json()).unwrap(), e);
        assert_eq!(r.zero().to_string(), "0");
    }

    #[test]
    fn order_mismatch() {
        let a = CycloRing::<i64>::new(3).unwrap().from_int(1);
        let b = CycloRing::<i64>::new(4).unwrap().from_int(1);
        assert!(a.checked_add(&b).is_err());
    }
}
