use std::ops::{Add, Mul, Neg, Sub};

use super::rep::{Generator, SuperRep};
use super::state::TensorState;
use crate::ring::MultiPoly;
use crate::scalar::Scalar;

/// A linear combination of generator words with polynomial coefficients,
/// i.e. an element of the algebra before it is mapped to operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpExpr<C> {
    nvars: usize,
    terms: Vec<(MultiPoly<C>, Vec<Generator>)>,
}

impl<C: Scalar> OpExpr<C> {
    pub fn zero(nvars: usize) -> Self {
        OpExpr {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn scalar(c: MultiPoly<C>) -> Self {
        OpExpr {
            nvars: c.nvars(),
            terms: vec![(c, Vec::new())],
        }
    }

    pub fn word(nvars: usize, word: Vec<Generator>) -> Self {
        OpExpr {
            nvars,
            terms: vec![(MultiPoly::one(nvars), word)],
        }
    }

    pub fn gen(nvars: usize, g: Generator) -> Self {
        Self::word(nvars, vec![g])
    }

    /// `omega_pos^power`, with power 0 the identity.
    pub fn omega(nvars: usize, pos: usize, power: u32) -> Self {
        if power == 0 {
            Self::scalar(MultiPoly::one(nvars))
        } else {
            Self::gen(nvars, Generator::Omega { pos, power })
        }
    }

    pub fn terms(&self) -> &[(MultiPoly<C>, Vec<Generator>)] {
        &self.terms
    }

    pub fn scale(&self, c: &MultiPoly<C>) -> Self {
        OpExpr {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(p, w)| (p * c, w.clone())).collect(),
        }
    }

    pub fn apply(&self, rep: &SuperRep<C>, state: &TensorState<C>) -> TensorState<C> {
        let mut out = TensorState::zero(state.n(), state.nvars());
        for (c, w) in &self.terms {
            let image = rep.apply_word_unchecked(w, state);
            out.add_state(&image, c);
        }
        out
    }
}

impl<C: Scalar> Add for OpExpr<C> {
    type Output = OpExpr<C>;
    fn add(mut self, rhs: OpExpr<C>) -> OpExpr<C> {
        self.terms.extend(rhs.terms);
        self
    }
}

impl<C: Scalar> Neg for OpExpr<C> {
    type Output = OpExpr<C>;
    fn neg(self) -> OpExpr<C> {
        OpExpr {
            nvars: self.nvars,
            terms: self.terms.into_iter().map(|(c, w)| (-c, w)).collect(),
        }
    }
}

impl<C: Scalar> Sub for OpExpr<C> {
    type Output = OpExpr<C>;
    fn sub(self, rhs: OpExpr<C>) -> OpExpr<C> {
        self + (-rhs)
    }
}

impl<C: Scalar> Mul for OpExpr<C> {
    type Output = OpExpr<C>;
    /// Product in the algebra: `(a A)(b B) = ab (A B)`, so `B` acts first.
    fn mul(self, rhs: OpExpr<C>) -> OpExpr<C> {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (a, wa) in &self.terms {
            for (b, wb) in &rhs.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                terms.push((a * b, w));
            }
        }
        OpExpr {
            nvars: self.nvars,
            terms,
        }
    }
}
