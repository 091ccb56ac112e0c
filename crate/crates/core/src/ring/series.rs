use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use super::poly::MultiPoly;
use crate::error::{check_dim, Error, Result};
use crate::scalar::Scalar;

/// `sum_j c_j t^j mod t^D` with `t = 1 - q`; the `c_j` are polynomials in
/// `u_1..u_m` only.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries<C> {
    nvars: usize,
    coeffs: Vec<MultiPoly<C>>,
}

impl<C: Scalar> TruncSeries<C> {
    pub fn zero(nvars: usize, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidArgument("truncation order must be >= 1".into()));
        }
        Ok(TruncSeries {
            nvars,
            coeffs: vec![MultiPoly::zero(nvars); order],
        })
    }

    /// Build from coefficients; anything at `t^order` or beyond is dropped.
    pub fn from_coeffs(nvars: usize, order: usize, coeffs: Vec<MultiPoly<C>>) -> Result<Self> {
        let mut s = Self::zero(nvars, order)?;
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            check_dim("number of u-variables", c.nvars(), nvars)?;
            if !c.is_q_free() {
                return Err(Error::InvalidArgument(
                    "series coefficients must not involve q".into(),
                ));
            }
            *slot = c;
        }
        Ok(s)
    }

    pub fn constant(order: usize, c: MultiPoly<C>) -> Result<Self> {
        let nvars = c.nvars();
        Self::from_coeffs(nvars, order, vec![c])
    }

    /// The series `t`.
    pub fn t(nvars: usize, order: usize) -> Result<Self> {
        Self::from_coeffs(
            nvars,
            order,
            vec![MultiPoly::zero(nvars), MultiPoly::one(nvars)],
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeffs(&self) -> &[MultiPoly<C>] {
        &self.coeffs
    }

    /// Coefficient of `t^j` (zero past the truncation order).
    pub fn coeff(&self, j: usize) -> MultiPoly<C> {
        self.coeffs
            .get(j)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(self.nvars))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MultiPoly::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        check_dim("number of u-variables", self.nvars, other.nvars)?;
        check_dim("truncation order", self.order(), other.order())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(TruncSeries {
            nvars: self.nvars,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(TruncSeries {
            nvars: self.nvars,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = self.order();
        let mut coeffs = vec![MultiPoly::zero(self.nvars); d];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(d - i).enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        Ok(TruncSeries {
            nvars: self.nvars,
            coeffs,
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let one = Self::constant(self.order(), MultiPoly::one(self.nvars)).expect("order >= 1");
        (0..e).fold(one, |acc, _| &acc * self)
    }

    pub fn map_coeffs(&self, f: impl Fn(&MultiPoly<C>) -> MultiPoly<C>) -> Self {
        TruncSeries {
            nvars: self.nvars,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order(),
            "coeffs": self.coeffs.iter().map(MultiPoly::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value, nvars: usize) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("series JSON: {msg}"));
        let order = value
            .get("order")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing \"order\""))? as usize;
        let coeffs = value
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"coeffs\""))?
            .iter()
            .map(|c| MultiPoly::from_json(c, nvars))
            .collect::<Result<Vec<_>>>()?;
        check_dim("series coefficient count", coeffs.len(), order)?;
        Self::from_coeffs(nvars, order, coeffs)
    }
}

impl<C: Scalar> fmt::Display for TruncSeries<C> {
    /// `c0 + (c1)*t + (c2)*t^2 + O(t^D)`, skipping zero coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match j {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{j}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order())
    }
}

macro_rules! series_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<C: Scalar> $trait<&TruncSeries<C>> for &TruncSeries<C> {
            type Output = TruncSeries<C>;
            fn $method(self, rhs: &TruncSeries<C>) -> TruncSeries<C> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<C: Scalar> $trait<TruncSeries<C>> for TruncSeries<C> {
            type Output = TruncSeries<C>;
            fn $method(self, rhs: TruncSeries<C>) -> TruncSeries<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

series_binop!(Add, add, checked_add);
series_binop!(Sub, sub, checked_sub);
series_binop!(Mul, mul, checked_mul);

impl<C: Scalar> Neg for TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn neg(self) -> TruncSeries<C> {
        TruncSeries {
            nvars: self.nvars,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}
