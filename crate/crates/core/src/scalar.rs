//! Coefficient types.
//!
//! Everything in this crate is exact, so the scalar is an integer-like ring
//! rather than a float. `BigInt` is the default; `i64` and `i128` work for
//! small sweeps where overflow cannot happen.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

pub trait Scalar:
    Num + Signed + Neg<Output = Self> + Clone + Eq + Hash + Debug + Display + FromPrimitive + ToPrimitive
    + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("scalar cannot represent a small integer")
    }
}

impl<T> Scalar for T where
    T: Num
        + Signed
        + Neg<Output = T>
        + Clone
        + Eq
        + Hash
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// `C(n, k)` by Pascal's rule, so no division is needed in `C`.
pub fn binomial<C: Scalar>(n: usize, k: usize) -> C {
    if k > n {
        return C::zero();
    }
    let mut row = vec![C::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i + 1);
        next.push(C::one());
        for j in 1..i {
            next.push(row[j - 1].clone() + row[j].clone());
        }
        next.push(C::one());
        row = next;
    }
    row[k].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn binomials() {
        assert_eq!(binomial::<i64>(5, 2), 10);
        assert_eq!(binomial::<i64>(2, 3), 0);
        assert_eq!(binomial::<i64>(0, 0), 1);
        assert_eq!(binomial::<BigInt>(60, 30).to_string(), "118264581564861424");
    }
}
