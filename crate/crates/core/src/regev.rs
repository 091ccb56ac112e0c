//! Closed-form character values.
//!
//! [`theta`] is the trace of one block `xi_a^{r-1} g_{a-1} .. g_1`, written
//! as a sum over graded composition pairs; [`character_value`] multiplies
//! the block values. The rest are the specializations and the `k = l = 1_m`
//! expansions used around `q = 1`.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::combin::{list_graded_pairs, MultiPartition};
use crate::error::{check_dim, Error, Result};
use crate::ring::{expand_at_q1, specialize_to_group, CycloElem, CycloRing, MultiPoly, TruncSeries};
use crate::scalar::{binomial, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketSign {
    /// `[a]_q`
    Q,
    /// `[a]_{-q}`
    MinusQ,
}

/// `[a]_{+-q} = sum_{j<a} (+-q)^j`; `[0] = 0`.
pub fn bracket<C: Scalar>(nvars: usize, a: usize, sign: BracketSign) -> MultiPoly<C> {
    let mut out = MultiPoly::zero(nvars);
    for j in 0..a {
        let c = if sign == BracketSign::MinusQ && j % 2 == 1 { -1 } else { 1 };
        out += &MultiPoly::q_pow(nvars, j as i32).scale(&C::from_int(c));
    }
    out
}

fn minus_q_pow<C: Scalar>(nvars: usize, e: usize) -> MultiPoly<C> {
    let c = if e % 2 == 1 { -1 } else { 1 };
    MultiPoly::q_pow(nvars, e as i32).scale(&C::from_int(c))
}

/// Which ring a character value is reported in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    /// `Z[q^{+-1}, u_1..u_m]`.
    Generic,
    /// `q = 1`, `u_i = x^{i-1}` in `Z[x]/Phi_m`.
    Group,
    /// `(1-q)`-adic expansion mod `t^D`.
    TAdic(usize),
}

impl FromStr for Specialization {
    type Err = Error;

    /// `generic`, `group`, `t2` (order 2) or `t2:D`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "generic" => Ok(Specialization::Generic),
            "group" => Ok(Specialization::Group),
            "t2" => Ok(Specialization::TAdic(2)),
            _ => {
                let d = s
                    .strip_prefix("t2:")
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&d| d >= 1)
                    .ok_or_else(|| Error::Parse(format!("unknown specialization {s:?}")))?;
                Ok(Specialization::TAdic(d))
            }
        }
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Specialization::Generic => write!(f, "generic"),
            Specialization::Group => write!(f, "group"),
            Specialization::TAdic(d) => write!(f, "t2:{d}"),
        }
    }
}

/// Dimensions of the graded space and the tensor power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSpec {
    k: Vec<usize>,
    l: Vec<usize>,
    n: usize,
    spec: Specialization,
}

impl CharSpec {
    pub fn new(k: Vec<usize>, l: Vec<usize>, n: usize, spec: Specialization) -> Result<Self> {
        check_dim("length of k vs l", k.len(), l.len())?;
        if k.is_empty() {
            return Err(Error::InvalidArgument("need at least one color".into()));
        }
        if k.iter().chain(&l).sum::<usize>() == 0 {
            return Err(Error::InvalidArgument("k + l must be at least 1".into()));
        }
        if n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        Ok(CharSpec { k, l, n, spec })
    }

    pub fn generic(k: &[usize], l: &[usize], n: usize) -> Result<Self> {
        Self::new(k.to_vec(), l.to_vec(), n, Specialization::Generic)
    }

    pub fn m(&self) -> usize {
        self.k.len()
    }

    pub fn k(&self) -> &[usize] {
        &self.k
    }

    pub fn l(&self) -> &[usize] {
        &self.l
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn specialization(&self) -> Specialization {
        self.spec
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m(),
            "k": self.k,
            "l": self.l,
            "n": self.n,
            "spec": self.spec.to_string(),
        })
    }
}

/// A value in whichever ring the specialization selects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharValue<C> {
    Generic(MultiPoly<C>),
    Group(CycloElem<C>),
    Series(TruncSeries<C>),
}

impl<C: Scalar> CharValue<C> {
    pub fn to_json(&self) -> Value {
        match self {
            CharValue::Generic(p) => p.to_json(),
            CharValue::Group(c) => c.to_json(),
            CharValue::Series(s) => s.to_json(),
        }
    }
}

impl<C: Scalar> fmt::Display for CharValue<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharValue::Generic(p) => p.fmt(f),
            CharValue::Group(c) => c.fmt(f),
            CharValue::Series(s) => s.fmt(f),
        }
    }
}

/// Trace of `xi_a^{r-1} g_{a-1} .. g_1` on `V^{(x)a}`:
///
/// `sum u_{last}^{r-1} (-q)^{|beta| - l(beta)} (1-q)^{l - 1} prod_i C(k_i, l(alpha_i)) C(l_i, l(beta_i))`
///
/// over all graded pairs of size `a`.
pub fn theta<C: Scalar>(r: usize, a: usize, spec: &CharSpec) -> Result<MultiPoly<C>> {
    let m = spec.m();
    if r == 0 || r > m {
        return Err(Error::InvalidArgument(format!("color {r} outside 1..={m}")));
    }
    let pairs = list_graded_pairs(a, &spec.k, &spec.l)?;
    let one_minus_q = MultiPoly::<C>::one_minus_q(m);
    let mut out = MultiPoly::zero(m);
    for p in &pairs {
        let st = p.stats();
        let mut mult = C::one();
        for i in 0..m {
            mult = mult * binomial::<C>(spec.k[i], p.alpha[i].len()) * binomial::<C>(spec.l[i], p.beta[i].len());
        }
        let mut term = &minus_q_pow::<C>(m, st.beta_size - st.beta_length) * &one_minus_q.pow(st.length as u32 - 1);
        if r > 1 {
            term = &term * &MultiPoly::u_pow(m, st.last_color, r as u32 - 1);
        }
        out += &term.scale(&mult);
    }
    Ok(out)
}

fn check_mu(mu: &MultiPartition, spec: &CharSpec) -> Result<()> {
    check_dim("number of colors of mu", mu.m(), spec.m())?;
    check_dim("size of mu vs n", mu.size(), spec.n)
}

/// The product of block traces over every part of every component.
pub fn character_value<C: Scalar>(mu: &MultiPartition, spec: &CharSpec) -> Result<MultiPoly<C>> {
    check_mu(mu, spec)?;
    let mut cache: HashMap<(usize, usize), MultiPoly<C>> = HashMap::new();
    let mut out = MultiPoly::one(spec.m());
    for (r, a) in mu.colored_parts() {
        let block = match cache.entry((r, a)) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(theta(r, a, spec)?),
        };
        out = &out * &*block;
    }
    Ok(out)
}

/// The value at `q = 1`, `u_i = x^{i-1}`, from the block formula
/// `sum_i (k_i - (-1)^a l_i) x^{(r-1)(i-1)}`.
pub fn group_character_value<C: Scalar>(mu: &MultiPartition, spec: &CharSpec) -> Result<CycloElem<C>> {
    check_mu(mu, spec)?;
    let m = spec.m();
    let ring = CycloRing::<C>::new(m)?;
    let mut out = ring.from_int(1);
    for (r, a) in mu.colored_parts() {
        let mut block = vec![C::zero(); m];
        for i in 0..m {
            let sign = if a % 2 == 1 { 1 } else { -1 };
            let c = spec.k[i] as i64 + sign * spec.l[i] as i64;
            let e = ((r - 1) * i) % m;
            block[e] = block[e].clone() + C::from_int(c);
        }
        out = &out * &ring.reduce(block);
    }
    Ok(out)
}

/// `character_value` reported in the ring chosen by `spec`.
pub fn evaluate<C: Scalar>(mu: &MultiPartition, spec: &CharSpec) -> Result<CharValue<C>> {
    Ok(match spec.spec {
        Specialization::Generic => CharValue::Generic(character_value(mu, spec)?),
        Specialization::Group => CharValue::Group(group_character_value(mu, spec)?),
        Specialization::TAdic(d) => CharValue::Series(expand_at_q1(&character_value(mu, spec)?, d)?),
    })
}

/// Specialize an already computed generic value.
pub fn specialize<C: Scalar>(p: &MultiPoly<C>, spec: Specialization) -> Result<CharValue<C>> {
    Ok(match spec {
        Specialization::Generic => CharValue::Generic(p.clone()),
        Specialization::Group => CharValue::Group(specialize_to_group(p, &CycloRing::new(p.nvars())?)?),
        Specialization::TAdic(d) => CharValue::Series(expand_at_q1(p, d)?),
    })
}

/// With `k = l = 1_i`: the part of the pair sum with exactly `j` parts in
/// total and component `i` occupied. A polynomial in `q` only.
pub fn theta_j<C: Scalar>(j: usize, i: usize, a: usize) -> Result<MultiPoly<C>> {
    if i == 0 || j == 0 || j > 2 * i {
        return Err(Error::InvalidArgument(format!("need 1 <= j <= 2i, got j={j}, i={i}")));
    }
    let ones = vec![1; i];
    let mut out = MultiPoly::zero(0);
    let weight = MultiPoly::<C>::one_minus_q(0).pow(j as u32 - 1);
    for p in list_graded_pairs(a, &ones, &ones)? {
        let st = p.stats();
        if st.length == j && st.last_color == i {
            out += &minus_q_pow::<C>(0, st.beta_size - st.beta_length);
        }
    }
    Ok(&out * &weight)
}

/// `Theta_1(i, a) = 1 + (-q)^{a-1}`.
pub fn theta_1_closed<C: Scalar>(a: usize) -> MultiPoly<C> {
    &MultiPoly::one(0) + &minus_q_pow(0, a - 1)
}

/// `Theta_2(i, a) = (1-q)((i-1)(a-1)(1 + (-q)^{a-2}) + (2i-1)[a-1]_{-q})`.
pub fn theta_2_closed<C: Scalar>(i: usize, a: usize) -> MultiPoly<C> {
    let mut inner = bracket::<C>(0, a - 1, BracketSign::MinusQ).scale(&C::from_int(2 * i as i64 - 1));
    if a >= 2 {
        let c = C::from_int(((i - 1) * (a - 1)) as i64);
        inner += &(&MultiPoly::one(0) + &minus_q_pow(0, a - 2)).scale(&c);
    }
    &MultiPoly::one_minus_q(0) * &inner
}

/// Coefficient of `u_i^{r-1}` in `theta(r, a)` for `k = l = 1_m`
/// (independent of `r` and of `m >= i`).
pub fn coef<C: Scalar>(a: usize, i: usize) -> Result<MultiPoly<C>> {
    let mut out = MultiPoly::zero(0);
    for j in 1..=2 * i {
        out += &theta_j::<C>(j, i, a)?;
    }
    Ok(out)
}

/// `2[a]_{-q} + 2(i-1) a (1-q) [a-1]_{-q}`, which agrees with `coef(a, i)`
/// modulo `(1-q)^2`.
pub fn coef_first_order<C: Scalar>(a: usize, i: usize) -> MultiPoly<C> {
    let two = C::from_int(2);
    let lead = bracket::<C>(0, a, BracketSign::MinusQ).scale(&two);
    let corr = &MultiPoly::one_minus_q(0) * &bracket::<C>(0, a.saturating_sub(1), BracketSign::MinusQ);
    &lead + &corr.scale(&C::from_int(2 * ((i - 1) * a) as i64))
}

fn check_mu_nonempty(mu: &MultiPartition) -> Result<()> {
    if mu.size() == 0 {
        Err(Error::InvalidArgument("multipartition of 0".into()))
    } else {
        Ok(())
    }
}

/// `[x] + x (i-1) (1-q) [x-1]`, brackets at `-q`.
fn hook_factor<C: Scalar>(nvars: usize, x: usize, i: usize) -> MultiPoly<C> {
    let corr = &MultiPoly::one_minus_q(nvars) * &bracket::<C>(nvars, x - 1, BracketSign::MinusQ);
    &bracket::<C>(nvars, x, BracketSign::MinusQ) + &corr.scale(&C::from_int((x * (i - 1)) as i64))
}

/// `2^{l(mu)} prod_{r,j} sum_i ([x] + x(i-1)(1-q)[x-1]) u_i^{r-1}` with
/// `x = mu^(r)_j`, expanded mod `t^order`.
pub fn hook_sum_rhs<C: Scalar>(mu: &MultiPartition, m: usize, order: usize) -> Result<TruncSeries<C>> {
    check_dim("number of colors of mu", mu.m(), m)?;
    check_mu_nonempty(mu)?;
    let mut prod = MultiPoly::from_int(m, 1 << mu.length());
    for (r, x) in mu.colored_parts() {
        let mut factor = MultiPoly::zero(m);
        for i in 1..=m {
            factor += &(&hook_factor::<C>(m, x, i) * &MultiPoly::u_pow(m, i, r as u32 - 1));
        }
        prod = &prod * &factor;
    }
    expand_at_q1(&prod, order)
}

/// `(2m)^{l(mu^(1))}` if every part lies in the first component and is odd,
/// else `0`.
pub fn wreath_hook_value<C: Scalar>(mu: &MultiPartition, m: usize) -> Result<C> {
    check_dim("number of colors of mu", mu.m(), m)?;
    check_mu_nonempty(mu)?;
    let first = mu.component(1);
    let rest_empty = mu.components()[1..].iter().all(|p| p.is_empty());
    if rest_empty && first.parts().iter().all(|x| x % 2 == 1) {
        Ok(num_traits::pow(C::from_int(2 * m as i64), first.len()))
    } else {
        Ok(C::zero())
    }
}

/// The type `B` pair formula taken literally, with `u_1 = 1`, `u_2 = u`
/// (printed as `u2`):
///
/// * series: `2^{l(mu)-1} prod_{mu^(1)} ([x] + x(1-q)[x-1]) prod_{mu^(2)} ([x] + x(1-q)[x-1] u)`;
/// * group value: `(2m)^{l(mu)} / 2` if `mu^(1)` carries all of `n` in odd parts, else `0`.
///
/// Meant for side-by-side reports against the trace; not an identity.
pub fn pair_regev_rhs<C: Scalar>(mu: &MultiPartition, order: usize) -> Result<(TruncSeries<C>, C)> {
    check_dim("number of colors of a pair", mu.m(), 2)?;
    check_mu_nonempty(mu)?;
    let nv = 2;
    let mut prod = MultiPoly::from_int(nv, 1 << (mu.length() - 1));
    for (r, x) in mu.colored_parts() {
        let lead = bracket::<C>(nv, x, BracketSign::MinusQ);
        let mut corr = (&MultiPoly::one_minus_q(nv) * &bracket::<C>(nv, x - 1, BracketSign::MinusQ))
            .scale(&C::from_int(x as i64));
        if r == 2 {
            corr = &corr * &MultiPoly::u(nv, 2);
        }
        prod = &prod * &(&lead + &corr);
    }
    let series = expand_at_q1(&prod, order)?;
    let first = mu.component(1);
    let odd_first = mu.component(2).is_empty() && first.parts().iter().all(|x| x % 2 == 1);
    let group = if odd_first {
        // (2m)^l / 2 with m = 2
        num_traits::pow(C::from_int(2), 2 * mu.length() - 1)
    } else {
        C::zero()
    };
    Ok((series, group))
}
