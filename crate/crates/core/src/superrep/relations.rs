use rayon::prelude::*;
use serde_json::{json, Value};

use super::expr::OpExpr;
use super::rep::{Generator, SuperRep};
use super::vandermonde::vandermonde_data;
use crate::error::{Error, Result};
use crate::ring::MultiPoly;
use crate::scalar::Scalar;

/// Outcome of one operator identity checked on every basis word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: String,
    pub passed: bool,
    /// First basis word (one-based letters) on which the sides differ.
    pub witness: Option<Vec<usize>>,
}

impl RelationCheck {
    pub fn to_json(&self) -> Value {
        json!({
            "relation": self.relation,
            "status": if self.passed { "pass" } else { "fail" },
            "witness": self.witness,
        })
    }
}

pub fn all_passed(report: &[RelationCheck]) -> bool {
    report.iter().all(|r| r.passed)
}

/// Compare `lhs` and `rhs` on every basis word.
pub fn check_identity<C: Scalar>(
    rep: &SuperRep<C>,
    name: impl Into<String>,
    lhs: &OpExpr<C>,
    rhs: &OpExpr<C>,
) -> RelationCheck {
    let witness = (0..rep.dim()).into_par_iter().find_first(|&idx| {
        let v = rep.basis_state(idx);
        !lhs.apply(rep, &v).sub_state(&rhs.apply(rep, &v)).is_zero()
    });
    RelationCheck {
        relation: name.into(),
        passed: witness.is_none(),
        witness: witness.map(|idx| rep.basis_word(idx).iter().map(|&x| x as usize + 1).collect()),
    }
}

struct Builder<'a, C> {
    rep: &'a SuperRep<C>,
    m: usize,
    out: Vec<RelationCheck>,
}

impl<C: Scalar> Builder<'_, C> {
    fn g(&self, g: Generator) -> OpExpr<C> {
        OpExpr::gen(self.m, g)
    }

    fn word(&self, w: &[Generator]) -> OpExpr<C> {
        OpExpr::word(self.m, w.to_vec())
    }

    fn scalar(&self, p: MultiPoly<C>) -> OpExpr<C> {
        OpExpr::scalar(p)
    }

    fn zero(&self) -> OpExpr<C> {
        OpExpr::zero(self.m)
    }

    fn push(&mut self, name: String, lhs: OpExpr<C>, rhs: OpExpr<C>) {
        let check = check_identity(self.rep, name, &lhs, &rhs);
        self.out.push(check);
    }

    /// `prod_c (X - u_c) = 0`.
    fn cyclotomic(&mut self, name: String, x: OpExpr<C>) {
        let mut lhs = self.scalar(MultiPoly::one(self.m));
        for c in 1..=self.m {
            lhs = lhs * (x.clone() - self.scalar(MultiPoly::u(self.m, c)));
        }
        let zero = self.zero();
        self.push(name, lhs, zero);
    }

    /// `T_i^2 = (1-q) T_i + q`.
    fn quadratic(&mut self, i: usize) {
        let t = self.g(Generator::Braid(i));
        let lhs = t.clone() * t.clone();
        let rhs = t.scale(&MultiPoly::one_minus_q(self.m)) + self.scalar(MultiPoly::q(self.m));
        self.push(format!("quadratic T{i}"), lhs, rhs);
    }

    fn braid3(&mut self, i: usize) {
        let (a, b) = (Generator::Braid(i), Generator::Braid(i + 1));
        let lhs = self.word(&[a, b, a]);
        let rhs = self.word(&[b, a, b]);
        self.push(format!("braid T{i} T{}", i + 1), lhs, rhs);
    }

    fn commute(&mut self, name: String, a: Generator, b: Generator) {
        let lhs = self.word(&[a, b]);
        let rhs = self.word(&[b, a]);
        self.push(name, lhs, rhs);
    }

    fn hecke_part(&mut self, n: usize) {
        for i in 1..n {
            self.quadratic(i);
        }
        for i in 1..n.saturating_sub(1) {
            self.braid3(i);
        }
        for i in 1..n {
            for j in i + 2..n {
                self.commute(format!("commute T{i} T{j}"), Generator::Braid(i), Generator::Braid(j));
            }
        }
    }
}

fn make_rep<C: Scalar>(n: usize, k: &[usize], l: &[usize]) -> Result<SuperRep<C>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    SuperRep::with_dims(k, l, n)
}

/// Check the Ariki-Koike presentation with `g_0 -> T_0`, `g_i -> T_i`.
pub fn check_ak_presentation<C: Scalar>(n: usize, k: &[usize], l: &[usize]) -> Result<Vec<RelationCheck>> {
    let rep = make_rep::<C>(n, k, l)?;
    let m = rep.nvars();
    let mut b = Builder { rep: &rep, m, out: Vec::new() };
    let t0 = Generator::Cyclotomic;
    b.cyclotomic("cyclotomic T0".into(), b.g(t0));
    if n >= 2 {
        let t1 = Generator::Braid(1);
        let lhs = b.word(&[t0, t1, t0, t1]);
        let rhs = b.word(&[t1, t0, t1, t0]);
        b.push("braid T0 T1 T0 T1".into(), lhs, rhs);
    }
    for j in 2..n {
        b.commute(format!("commute T0 T{j}"), t0, Generator::Braid(j));
    }
    b.hecke_part(n);
    Ok(b.out)
}

/// `sum_k v_k omega_pos^k`.
fn f_of_omega<C: Scalar>(m: usize, coeffs: &[MultiPoly<C>], pos: usize) -> OpExpr<C> {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(OpExpr::zero(m), |acc, (e, c)| {
            acc + OpExpr::omega(m, pos, e as u32).scale(c)
        })
}

/// Check Shoji's presentation with `g_i -> T_i` and `xi_j -> omega_j`.
///
/// The exchange relations are checked with both sides multiplied by
/// `Delta^2`, in the form satisfied by `T_i` (whose eigenvalues are `1` and
/// `-q`):
///
/// `T_i omega_{i+1} = omega_i T_i - X_i`, `T_i omega_i = omega_{i+1} T_i + X_i`,
///
/// with `X_i = Delta^{-2} sum_{a<b} (u_a - u_b)(1-q) F_a(omega_i) F_b(omega_{i+1})`.
pub fn check_shoji_presentation<C: Scalar>(n: usize, k: &[usize], l: &[usize]) -> Result<Vec<RelationCheck>> {
    let rep = make_rep::<C>(n, k, l)?;
    let m = rep.nvars();
    let mut b = Builder { rep: &rep, m, out: Vec::new() };
    b.hecke_part(n);
    for i in 1..=n {
        b.cyclotomic(format!("cyclotomic omega{i}"), OpExpr::omega(m, i, 1));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            b.commute(
                format!("commute omega{i} omega{j}"),
                Generator::Omega { pos: i, power: 1 },
                Generator::Omega { pos: j, power: 1 },
            );
        }
    }
    for j in 1..n {
        for i in (1..=n).filter(|&i| i != j && i != j + 1) {
            b.commute(
                format!("commute T{j} omega{i}"),
                Generator::Braid(j),
                Generator::Omega { pos: i, power: 1 },
            );
        }
    }

    let (delta, f) = vandermonde_data::<C>(m);
    let delta_sq = delta.pow(2);
    let one_minus_q = MultiPoly::one_minus_q(m);
    for i in 1..n {
        let mut x = OpExpr::zero(m);
        for a in 1..=m {
            for c in a + 1..=m {
                let w = &(&MultiPoly::u(m, a) - &MultiPoly::u(m, c)) * &one_minus_q;
                x = x + (f_of_omega(m, &f[a - 1], i) * f_of_omega(m, &f[c - 1], i + 1)).scale(&w);
            }
        }
        let t = b.g(Generator::Braid(i));
        let (w_i, w_next) = (OpExpr::omega(m, i, 1), OpExpr::omega(m, i + 1, 1));

        let lhs = (t.clone() * w_next.clone()).scale(&delta_sq);
        let rhs = (w_i.clone() * t.clone()).scale(&delta_sq) - x.clone();
        b.push(format!("exchange T{i} omega{}", i + 1), lhs, rhs);

        let lhs = (t.clone() * w_i).scale(&delta_sq);
        let rhs = (w_next * t).scale(&delta_sq) + x;
        b.push(format!("exchange T{i} omega{i}"), lhs, rhs);
    }
    Ok(b.out)
}
