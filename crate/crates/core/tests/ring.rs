use akregev::ring::{
    cyclotomic_polynomial, expand_at_q1, specialize_to_group, totient, CycloRing, MultiPoly, TruncSeries,
};
use akregev::{Poly, Series};
use num_bigint::BigInt;
use proptest::prelude::*;

type P = MultiPoly<i64>;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Schoolbook product of integer coefficient lists.
fn mul_coeffs(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[test]
fn ring_op_examples() {
    let m = 2;
    assert_eq!(&P::one_minus_q(m) + &P::q(m), P::one(m));
    assert_eq!(&P::q(m) * &P::q_pow(m, -1), P::one(m));
    let one_plus_q = &P::one(m) + &P::q(m);
    assert_eq!(&P::one_minus_q(m) * &one_plus_q, P::parse("1 - q^2", m).unwrap());
    assert!(P::one(1).checked_add(&P::one(2)).is_err());
}

#[test]
fn cyclotomic_examples() {
    assert_eq!(cyclotomic_polynomial::<i64>(1).unwrap(), vec![-1, 1]);
    assert_eq!(cyclotomic_polynomial::<i64>(2).unwrap(), vec![1, 1]);
    assert_eq!(cyclotomic_polynomial::<i64>(6).unwrap(), vec![1, -1, 1]);
    assert!(cyclotomic_polynomial::<i64>(0).is_err());
}

#[test]
fn cyclotomic_divides_and_has_totient_degree() {
    for m in 1..=24 {
        let phi = cyclotomic_polynomial::<i64>(m).unwrap();
        let naive_totient = (1..=m).filter(|&k| gcd(k, m) == 1).count();
        assert_eq!(phi.len() - 1, naive_totient, "m={m}");
        assert_eq!(totient(m), naive_totient);
        // the product over all divisors is exactly x^m - 1
        let mut prod = vec![1];
        for d in (1..=m).filter(|d| m % d == 0) {
            prod = mul_coeffs(&prod, &cyclotomic_polynomial::<i64>(d).unwrap());
        }
        let mut want = vec![0; m + 1];
        want[0] = -1;
        want[m] = 1;
        assert_eq!(prod, want, "m={m}");
    }
}

#[test]
fn root_of_unity_sums_vanish() {
    for m in 2..=12 {
        let ring = CycloRing::<i64>::new(m).unwrap();
        for t in 1..m {
            let mut s = ring.zero();
            for i in 1..=m {
                s = &s + &ring.x_pow(t * (i - 1));
            }
            assert!(s.is_zero(), "m={m} t={t}");
        }
    }
}

#[test]
fn specialization_examples() {
    let r4 = CycloRing::<i64>::new(4).unwrap();
    assert!(specialize_to_group(&P::one_minus_q(4), &r4).unwrap().is_zero());
    assert_eq!(specialize_to_group(&P::u(4, 2), &r4).unwrap(), r4.x_pow(1));
    let r3 = CycloRing::<i64>::new(3).unwrap();
    let p = P::parse("1 + u2 + u3", 3).unwrap();
    assert!(specialize_to_group(&p, &r3).unwrap().is_zero());
    assert!(specialize_to_group(&P::u(2, 1), &r3).is_err());
}

#[test]
fn expansion_examples() {
    let s = expand_at_q1(&P::q_pow(0, -1), 3).unwrap();
    assert_eq!(s.coeffs(), &[P::one(0), P::one(0), P::one(0)]);
    let back = &s * &expand_at_q1(&P::q(0), 3).unwrap();
    assert_eq!(back, TruncSeries::constant(3, P::one(0)).unwrap());
    assert_eq!(
        expand_at_q1(&P::one_minus_q(0), 2).unwrap(),
        TruncSeries::t(0, 2).unwrap()
    );
    let s = expand_at_q1(&P::q_pow(0, 2), 2).unwrap();
    assert_eq!(s.coeffs(), &[P::one(0), P::from_int(0, -2)]);
}

#[test]
fn big_coefficients_round_trip() {
    let big: BigInt = "123456789012345678901234567890".parse().unwrap();
    let p = Poly::constant(1, big.clone()) * Poly::q_pow(1, -2);
    let j = p.to_json();
    assert!(j["terms"][0]["c"].is_string());
    assert_eq!(Poly::from_json(&j, 1).unwrap(), p);
    assert_eq!(Poly::parse(&p.to_string(), 1).unwrap(), p);
    let s = Series::constant(2, Poly::constant(1, big)).unwrap();
    assert_eq!(Series::from_json(&s.to_json(), 1).unwrap(), s);
}

const NVARS: usize = 3;

fn poly_strategy() -> impl Strategy<Value = P> {
    prop::collection::vec(
        (-5i64..=5, -3i32..=3, prop::collection::vec(0u32..=3, NVARS)),
        0..6,
    )
    .prop_map(|terms| {
        terms.into_iter().fold(P::zero(NVARS), |acc, (c, eq, eu)| {
            &acc + &P::monomial(c, eq, &eu)
        })
    })
}

proptest! {
    #[test]
    fn text_and_json_round_trip(p in poly_strategy()) {
        prop_assert_eq!(P::parse(&p.to_string(), NVARS).unwrap(), p.clone());
        prop_assert_eq!(P::from_json(&p.to_json(), NVARS).unwrap(), p);
    }

    #[test]
    fn group_specialization_is_a_homomorphism(a in poly_strategy(), b in poly_strategy()) {
        let ring = CycloRing::<i64>::new(NVARS).unwrap();
        let f = |p: &P| specialize_to_group(p, &ring).unwrap();
        prop_assert_eq!(f(&(&a * &b)), &f(&a) * &f(&b));
        prop_assert_eq!(f(&(&a + &b)), &f(&a) + &f(&b));
    }

    #[test]
    fn expansion_is_a_homomorphism(a in poly_strategy(), b in poly_strategy(), d in 1usize..=4) {
        let f = |p: &P| expand_at_q1(p, d).unwrap();
        prop_assert_eq!(f(&(&a * &b)), &f(&a) * &f(&b));
        prop_assert_eq!(f(&(&a - &b)), &f(&a) - &f(&b));
    }

    #[test]
    fn expansion_matches_evaluation_at_q_one(a in poly_strategy()) {
        // the constant coefficient is the value at q = 1
        let s = expand_at_q1(&a, 1).unwrap();
        prop_assert_eq!(s.coeff(0), a.at_q_one());
    }
}
