//! Verification sweeps: each suite enumerates a family of cases, checks
//! one identity per case in parallel and reports the first failure in
//! enumeration order, so reports do not depend on scheduling.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::combin::{
    count_semistandard, count_standard_multitableaux, list_hook_multipartitions, list_multipartitions,
    MultiPartition,
};
use crate::error::{Error, Result};
use crate::regev::{
    character_value, coef, coef_first_order, group_character_value, hook_sum_rhs, theta,
    theta_1_closed, theta_2_closed, theta_j, wreath_hook_value, BracketSign, CharSpec, Specialization,
};
use crate::ring::{expand_at_q1, specialize_to_group, CycloRing, MultiPoly, DEFAULT_ORDER};
use crate::superrep::{char_value_oracle, check_ak_presentation, check_shoji_presentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Oracle,
    AkRelations,
    ShojiRelations,
    Specialization,
    ThetaClosedForms,
    Coef,
    HookSum,
    Wreath,
    DimensionIdentity,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Oracle,
        Suite::AkRelations,
        Suite::ShojiRelations,
        Suite::Specialization,
        Suite::ThetaClosedForms,
        Suite::Coef,
        Suite::HookSum,
        Suite::Wreath,
        Suite::DimensionIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::AkRelations => "ak-relations",
            Suite::ShojiRelations => "shoji-relations",
            Suite::Specialization => "specialization",
            Suite::ThetaClosedForms => "theta-closed-forms",
            Suite::Coef => "coef",
            Suite::HookSum => "hook-sum",
            Suite::Wreath => "wreath",
            Suite::DimensionIdentity => "dimension-identity",
        }
    }

    /// The sweep ranges each suite runs with unless overridden.
    pub fn default_bounds(self) -> Bounds {
        let b = |max_m, max_n, per_color, total| Bounds {
            max_m,
            max_n,
            per_color,
            total,
            fixed_m: None,
            fixed_n: None,
        };
        match self {
            Suite::Oracle => b(3, 4, 2, 4),
            Suite::AkRelations | Suite::ShojiRelations => b(3, 3, 3, 3),
            Suite::Specialization => b(4, 4, 2, 4),
            // here m bounds the component index i and n the part size a
            Suite::ThetaClosedForms | Suite::Coef => b(3, 8, 1, 2),
            Suite::HookSum => b(3, 4, 1, 6),
            Suite::Wreath => b(3, 5, 1, 6),
            Suite::DimensionIdentity => b(2, 5, 2, 8),
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Sweep ranges: colors `1..=max_m`, sizes `1..=max_n`, `k_i, l_i <=
/// per_color`, `1 <= sum(k + l) <= total`. `fixed_*` pins a single value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_m: usize,
    pub max_n: usize,
    pub per_color: usize,
    pub total: usize,
    pub fixed_m: Option<usize>,
    pub fixed_n: Option<usize>,
}

impl Bounds {
    fn ms(&self) -> Vec<usize> {
        match self.fixed_m {
            Some(m) => vec![m],
            None => (1..=self.max_m).collect(),
        }
    }

    fn ns(&self, from: usize) -> Vec<usize> {
        match self.fixed_n {
            Some(n) => vec![n],
            None => (from..=self.max_n).collect(),
        }
    }
}

/// All `(k, l)` of length `m` within the bounds, in odometer order over
/// `(k_1, .., k_m, l_1, .., l_m)`.
pub fn dimension_vectors(m: usize, per_color: usize, total: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let slots = 2 * m;
    let mut out = Vec::new();
    let mut cur = vec![0usize; slots];
    loop {
        let s: usize = cur.iter().sum();
        if s >= 1 && s <= total {
            out.push((cur[..m].to_vec(), cur[m..].to_vec()));
        }
        let mut i = 0;
        loop {
            if i == slots {
                return out;
            }
            if cur[i] < per_color {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub case: Value,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checked: usize,
    pub passed: usize,
    pub counterexample: Option<Counterexample>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.passed == self.checked
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "checked": self.checked,
            "passed": self.passed,
            "status": if self.ok() { "pass" } else { "fail" },
            "counterexample": self.counterexample.as_ref().map(|c| json!({
                "case": c.case,
                "expected": c.expected,
                "actual": c.actual,
            })),
        })
    }
}

struct Outcome {
    case: Value,
    expected: String,
    actual: String,
    ok: bool,
}

impl Outcome {
    fn compare<T: PartialEq + fmt::Display>(case: Value, expected: &T, actual: &T) -> Self {
        Outcome {
            case,
            ok: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    fn error(case: Value, e: Error) -> Self {
        Outcome {
            case,
            expected: "a value".into(),
            actual: format!("error: {e}"),
            ok: false,
        }
    }
}

fn summarize(suite: Suite, outcomes: Vec<Outcome>) -> SuiteReport {
    let checked = outcomes.len();
    let passed = outcomes.iter().filter(|o| o.ok).count();
    let counterexample = outcomes.into_iter().find(|o| !o.ok).map(|o| Counterexample {
        case: o.case,
        expected: o.expected,
        actual: o.actual,
    });
    SuiteReport {
        suite,
        checked,
        passed,
        counterexample,
    }
}

fn run_cases<T: Sync>(cases: &[T], f: impl Fn(&T) -> Result<Outcome> + Sync, label: impl Fn(&T) -> Value + Sync) -> Vec<Outcome> {
    cases
        .par_iter()
        .map(|c| f(c).unwrap_or_else(|e| Outcome::error(label(c), e)))
        .collect()
}

fn mu_case(mu: &MultiPartition, k: &[usize], l: &[usize]) -> Value {
    json!({ "mu": mu.to_json(), "k": k, "l": l })
}

/// `(mu, k, l)` for every `m`, `(k, l)`, `n` in range.
fn mu_cases(bounds: &Bounds) -> Vec<(MultiPartition, Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for n in bounds.ns(1) {
        for m in bounds.ms() {
            let mus = list_multipartitions(m, n);
            for (k, l) in dimension_vectors(m, bounds.per_color, bounds.total) {
                for mu in &mus {
                    out.push((mu.clone(), k.clone(), l.clone()));
                }
            }
        }
    }
    out
}

/// `mu` for every `m` and `n` in range, with `k = l = 1_m`.
fn unit_cases(bounds: &Bounds) -> Vec<(MultiPartition, Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for n in bounds.ns(1) {
        for m in bounds.ms() {
            for mu in list_multipartitions(m, n) {
                out.push((mu, vec![1; m], vec![1; m]));
            }
        }
    }
    out
}

fn oracle(mu: &MultiPartition, k: &[usize], l: &[usize]) -> Result<MultiPoly<BigInt>> {
    char_value_oracle::<BigInt>(mu, k, l)
}

fn relation_suite(suite: Suite, bounds: &Bounds) -> Vec<Outcome> {
    let mut cases = Vec::new();
    for n in bounds.ns(if suite == Suite::ShojiRelations { 2 } else { 1 }) {
        for m in bounds.ms() {
            for (k, l) in dimension_vectors(m, bounds.per_color, bounds.total) {
                cases.push((n, k, l));
            }
        }
    }
    let label = |(n, k, l): &(usize, Vec<usize>, Vec<usize>)| json!({ "n": n, "k": k, "l": l });
    // each relation check is already parallel over basis words
    cases
        .iter()
        .flat_map(|c| {
            let (n, k, l) = c;
            let report = if suite == Suite::AkRelations {
                check_ak_presentation::<BigInt>(*n, k, l)
            } else {
                check_shoji_presentation::<BigInt>(*n, k, l)
            };
            match report {
                Err(e) => vec![Outcome::error(label(c), e)],
                Ok(r) => r
                    .into_iter()
                    .map(|rc| {
                        let mut case = label(c);
                        case["relation"] = Value::from(rc.relation.clone());
                        Outcome {
                            case,
                            expected: "identity on every basis word".into(),
                            actual: match &rc.witness {
                                None => "identity on every basis word".into(),
                                Some(w) => format!("differs on basis word {w:?}"),
                            },
                            ok: rc.passed,
                        }
                    })
                    .collect(),
            }
        })
        .collect()
}

/// Run one suite.
pub fn run_suite(suite: Suite, bounds: &Bounds) -> SuiteReport {
    let triple_label = |(mu, k, l): &(MultiPartition, Vec<usize>, Vec<usize>)| mu_case(mu, k, l);
    let outcomes = match suite {
        Suite::Oracle => run_cases(
            &mu_cases(bounds),
            |(mu, k, l)| {
                let spec = CharSpec::generic(k, l, mu.size())?;
                let formula = character_value::<BigInt>(mu, &spec)?;
                Ok(Outcome::compare(mu_case(mu, k, l), &formula, &oracle(mu, k, l)?))
            },
            triple_label,
        ),
        Suite::AkRelations | Suite::ShojiRelations => relation_suite(suite, bounds),
        Suite::Specialization => run_cases(
            &mu_cases(bounds),
            |(mu, k, l)| {
                let spec = CharSpec::new(k.clone(), l.clone(), mu.size(), Specialization::Group)?;
                let ring = CycloRing::<BigInt>::new(k.len())?;
                let formula = group_character_value::<BigInt>(mu, &spec)?;
                let traced = specialize_to_group(&oracle(mu, k, l)?, &ring)?;
                Ok(Outcome::compare(mu_case(mu, k, l), &formula, &traced))
            },
            triple_label,
        ),
        Suite::ThetaClosedForms => {
            let mut cases = Vec::new();
            for i in bounds.ms() {
                for a in bounds.ns(1) {
                    cases.push((1, i, a));
                    if a >= 2 {
                        cases.push((2, i, a));
                    }
                }
            }
            run_cases(
                &cases,
                |&(j, i, a)| {
                    let closed = if j == 1 {
                        theta_1_closed::<BigInt>(a)
                    } else {
                        theta_2_closed::<BigInt>(i, a)
                    };
                    let enumerated = theta_j::<BigInt>(j, i, a)?;
                    Ok(Outcome::compare(json!({ "j": j, "i": i, "a": a }), &closed, &enumerated))
                },
                |&(j, i, a)| json!({ "j": j, "i": i, "a": a }),
            )
        }
        Suite::Coef => {
            let mut cases = Vec::new();
            for i in bounds.ms() {
                for a in bounds.ns(1) {
                    if i == 1 {
                        cases.push(("exact", i, a));
                    }
                    cases.push(("first-order", i, a));
                    cases.push(("theta", i, a));
                }
            }
            run_cases(
                &cases,
                |&(kind, i, a)| {
                    let case = json!({ "check": kind, "i": i, "a": a });
                    match kind {
                        // coef(a, 1) = 2 [a]_{-q}
                        "exact" => {
                            let want = crate::regev::bracket::<BigInt>(0, a, BracketSign::MinusQ)
                                .scale(&BigInt::from(2));
                            Ok(Outcome::compare(case, &want, &coef::<BigInt>(a, 1)?))
                        }
                        "first-order" => {
                            let want = expand_at_q1(&coef_first_order::<BigInt>(a, i), DEFAULT_ORDER)?;
                            let got = expand_at_q1(&coef::<BigInt>(a, i)?, DEFAULT_ORDER)?;
                            Ok(Outcome::compare(case, &want, &got))
                        }
                        _ => {
                            // sum_c coef(a, c) u_c^{r-1} = theta(r, a) for k = l = 1_i, r = 1..=i
                            let m = i;
                            let spec = CharSpec::generic(&vec![1; m], &vec![1; m], a)?;
                            let mut ok = true;
                            let mut first = None;
                            for r in 1..=m {
                                let mut sum = MultiPoly::zero(m);
                                for c in 1..=m {
                                    let term = &coef::<BigInt>(a, c)?.with_nvars(m)?
                                        * &MultiPoly::u_pow(m, c, r as u32 - 1);
                                    sum += &term;
                                }
                                let th = theta::<BigInt>(r, a, &spec)?;
                                if sum != th && first.is_none() {
                                    ok = false;
                                    first = Some((th, sum));
                                }
                            }
                            Ok(match first {
                                None => Outcome { case, expected: "equal".into(), actual: "equal".into(), ok },
                                Some((th, sum)) => Outcome::compare(case, &th, &sum),
                            })
                        }
                    }
                },
                |&(kind, i, a)| json!({ "check": kind, "i": i, "a": a }),
            )
        }
        Suite::HookSum => run_cases(
            &unit_cases(bounds),
            |(mu, k, l)| {
                let m = k.len();
                let lhs = expand_at_q1(&oracle(mu, k, l)?, DEFAULT_ORDER)?;
                let rhs = hook_sum_rhs::<BigInt>(mu, m, DEFAULT_ORDER)?;
                Ok(Outcome::compare(mu_case(mu, k, l), &rhs, &lhs))
            },
            triple_label,
        ),
        Suite::Wreath => run_cases(
            &unit_cases(bounds),
            |(mu, k, l)| {
                let m = k.len();
                let ring = CycloRing::<BigInt>::new(m)?;
                let traced = specialize_to_group(&oracle(mu, k, l)?, &ring)?;
                let want = ring.reduce(vec![wreath_hook_value::<BigInt>(mu, m)?]);
                Ok(Outcome::compare(mu_case(mu, k, l), &want, &traced))
            },
            triple_label,
        ),
        Suite::DimensionIdentity => {
            let mut cases = Vec::new();
            for n in bounds.ns(1) {
                for m in bounds.ms() {
                    for (k, l) in dimension_vectors(m, bounds.per_color, bounds.total) {
                        cases.push((n, k, l));
                    }
                }
            }
            run_cases(
                &cases,
                |(n, k, l)| {
                    let case = json!({ "n": n, "k": k, "l": l });
                    let hooks = list_hook_multipartitions(*n, k, l)?;
                    // s > 0 exactly on hook multipartitions
                    for lam in list_multipartitions(k.len(), *n) {
                        let s = count_semistandard(&lam, k, l)?;
                        if (s > 0) != hooks.contains(&lam) {
                            return Ok(Outcome {
                                case: json!({ "n": n, "k": k, "l": l, "lambda": lam.to_json() }),
                                expected: format!("hook = {}", hooks.contains(&lam)),
                                actual: format!("s = {s}"),
                                ok: false,
                            });
                        }
                    }
                    let unit = k.iter().chain(l.iter()).all(|&x| x == 1);
                    for lam in hooks.iter().filter(|_| unit) {
                        let s = count_semistandard(lam, k, l)?;
                        let want = 1u128 << lam.num_nonzero();
                        if s != want {
                            return Ok(Outcome::compare(
                                json!({ "n": n, "k": k, "l": l, "lambda": lam.to_json() }),
                                &want,
                                &s,
                            ));
                        }
                    }
                    let mut total: u128 = 0;
                    for lam in &hooks {
                        total += count_semistandard(lam, k, l)? * count_standard_multitableaux(lam);
                    }
                    let dim: usize = k.iter().chain(l.iter()).sum();
                    let want = (dim as u128).pow(*n as u32);
                    Ok(Outcome::compare(case, &want, &total))
                },
                |(n, k, l)| json!({ "n": n, "k": k, "l": l }),
            )
        }
    };
    summarize(suite, outcomes)
}
