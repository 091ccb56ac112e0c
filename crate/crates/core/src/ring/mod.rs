//! Exact coefficient rings and the two specialization maps.
//!
//! * [`MultiPoly`]: Laurent in `q`, polynomial in `u_1..u_m`;
//! * [`CycloElem`]: `Z[x]/Phi_m(x)`, the values at `q = 1`, `u_i = x^{i-1}`;
//! * [`TruncSeries`]: the `(1-q)`-adic expansion truncated at `t^D`.

mod cyclo;
mod poly;
mod series;

pub use cyclo::{cyclotomic_polynomial, divide_monic, totient, CycloElem, CycloRing};
pub use poly::{Monomial, MultiPoly};
pub use series::TruncSeries;

use crate::error::{check_dim, Result};
use crate::scalar::{binomial, Scalar};

/// Default truncation order for `(1-q)`-adic comparisons.
pub const DEFAULT_ORDER: usize = 2;

/// The ring map `q -> 1`, `u_i -> x^{i-1}` into `Z[x]/Phi_m(x)`.
pub fn specialize_to_group<C: Scalar>(p: &MultiPoly<C>, ring: &CycloRing<C>) -> Result<CycloElem<C>> {
    check_dim("number of u-variables vs cyclotomic order", p.nvars(), ring.order())?;
    let m = ring.order();
    let mut acc = vec![C::zero(); m];
    for (mono, c) in p.terms() {
        let k: usize = mono
            .u
            .iter()
            .enumerate()
            .map(|(i, &e)| i * e as usize)
            .sum::<usize>()
            % m;
        acc[k] = acc[k].clone() + c.clone();
    }
    Ok(ring.reduce(acc))
}

/// Substitute `q = 1 - t` and truncate at `t^order`; `q^{-1}` becomes the
/// geometric series `1 + t + t^2 + ..`.
pub fn expand_at_q1<C: Scalar>(p: &MultiPoly<C>, order: usize) -> Result<TruncSeries<C>> {
    let nvars = p.nvars();
    let mut coeffs = vec![MultiPoly::zero(nvars); order];
    for (mono, c) in p.terms() {
        let mut u_part = mono.clone();
        u_part.q = 0;
        for (j, slot) in coeffs.iter_mut().enumerate() {
            let b: C = if mono.q >= 0 {
                let b = binomial::<C>(mono.q as usize, j);
                if j % 2 == 1 {
                    -b
                } else {
                    b
                }
            } else {
                let s = (-mono.q) as usize;
                binomial::<C>(s + j - 1, j)
            };
            if b.is_zero() {
                continue;
            }
            slot.add_term(u_part.clone(), c.clone() * b);
        }
    }
    TruncSeries::from_coeffs(nvars, order, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = MultiPoly<i64>;

    #[test]
    fn group_specialization_examples() {
        let r5 = CycloRing::<i64>::new(5).unwrap();
        let one_minus_q = P::one_minus_q(5);
        assert!(specialize_to_group(&one_minus_q, &r5).unwrap().is_zero());

        let r4 = CycloRing::<i64>::new(4).unwrap();
        let u2 = P::u(4, 2);
        assert_eq!(specialize_to_group(&u2, &r4).unwrap(), r4.x_pow(1));

        let r3 = CycloRing::<i64>::new(3).unwrap();
        let p = P::one(3) + P::u(3, 2) + P::u(3, 3);
        assert!(specialize_to_group(&p, &r3).unwrap().is_zero());

        assert!(specialize_to_group(&P::one(2), &r3).is_err());
    }

    #[test]
    fn expansion_examples() {
        let inv = expand_at_q1(&P::q_pow(0, -1), 3).unwrap();
        assert_eq!(inv.coeffs(), &[P::one(0), P::one(0), P::one(0)]);
        // q * q^{-1} = 1 in the truncated ring
        let q = expand_at_q1(&P::q(0), 3).unwrap();
        assert_eq!(
            &q * &inv,
            TruncSeries::constant(3, P::one(0)).unwrap()
        );
        assert_eq!(
            expand_at_q1(&P::one_minus_q(0), 2).unwrap(),
            TruncSeries::t(0, 2).unwrap()
        );
        let q2 = expand_at_q1(&P::q_pow(0, 2), 2).unwrap();
        assert_eq!(q2.coeffs(), &[P::one(0), P::from_int(0, -2)]);
    }
}
