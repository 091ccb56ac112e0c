use rayon::prelude::*;
use smallvec::SmallVec;

use super::alphabet::GradedAlphabet;
use super::state::{BasisWord, TensorState};
use crate::combin::{word_hecke, GeneratorWord, MultiPartition, WordSymbol};
use crate::error::{check_dim, Error, Result};
use crate::ring::MultiPoly;
use crate::scalar::Scalar;

/// Operators on `V^{(x)n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `T_i` on tensor positions `i, i+1`.
    Braid(usize),
    /// `T_i^{-1}`.
    BraidInv(usize),
    /// `S_i`: `T_i` on equal colors, a (q-weighted) signed swap otherwise.
    ColorSwap(usize),
    /// `omega_pos^power`: multiply by `u_c^power`, `c` the color at `pos`.
    Omega { pos: usize, power: u32 },
    /// `T_0 = T_1^{-1} .. T_{n-1}^{-1} S_{n-1} .. S_1 omega_1`.
    Cyclotomic,
}

#[derive(Clone, Copy)]
enum Factor {
    One,
    OneMinusQ,
    MinusQ,
    Q,
    QInv,
    MinusQInv,
    OneMinusQInv,
}

/// One branch of a local two-site action: `sign * factor * (a, b)`.
type Branch = (bool, Factor, u8, u8);

/// The permutation super representation on `V^{(x)n}`.
///
/// Operators are applied to one basis word at a time with sparse
/// accumulation; nothing is stored as a matrix.
#[derive(Clone, Debug)]
pub struct SuperRep<C> {
    alphabet: GradedAlphabet,
    n: usize,
    nvars: usize,
    one_minus_q: MultiPoly<C>,
    minus_q: MultiPoly<C>,
    q: MultiPoly<C>,
    q_inv: MultiPoly<C>,
    minus_q_inv: MultiPoly<C>,
    one_minus_q_inv: MultiPoly<C>,
}

impl<C: Scalar> SuperRep<C> {
    pub fn new(alphabet: GradedAlphabet, n: usize) -> Self {
        let m = alphabet.m();
        let one = MultiPoly::<C>::one(m);
        let q = MultiPoly::q(m);
        let q_inv = MultiPoly::q_pow(m, -1);
        SuperRep {
            alphabet,
            n,
            nvars: m,
            one_minus_q: &one - &q,
            minus_q: -&q,
            minus_q_inv: -&q_inv,
            one_minus_q_inv: &one - &q_inv,
            q,
            q_inv,
        }
    }

    pub fn with_dims(k: &[usize], l: &[usize], n: usize) -> Result<Self> {
        Ok(Self::new(GradedAlphabet::new(k, l)?, n))
    }

    pub fn alphabet(&self) -> &GradedAlphabet {
        &self.alphabet
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `(k + l)^n`.
    pub fn dim(&self) -> usize {
        self.alphabet.size().pow(self.n as u32)
    }

    /// The `idx`-th basis word in lexicographic order.
    pub fn basis_word(&self, idx: usize) -> BasisWord {
        let base = self.alphabet.size();
        let mut w: BasisWord = SmallVec::from_elem(0, self.n);
        let mut rest = idx;
        for slot in w.iter_mut().rev() {
            *slot = (rest % base) as u8;
            rest /= base;
        }
        w
    }

    pub fn basis_state(&self, idx: usize) -> TensorState<C> {
        TensorState::basis(self.basis_word(idx), self.nvars)
    }

    fn factor(&self, f: Factor) -> Option<&MultiPoly<C>> {
        match f {
            Factor::One => None,
            Factor::OneMinusQ => Some(&self.one_minus_q),
            Factor::MinusQ => Some(&self.minus_q),
            Factor::Q => Some(&self.q),
            Factor::QInv => Some(&self.q_inv),
            Factor::MinusQInv => Some(&self.minus_q_inv),
            Factor::OneMinusQInv => Some(&self.one_minus_q_inv),
        }
    }

    fn swap_sign(&self, x: u8, y: u8) -> bool {
        self.alphabet.parity(x) * self.alphabet.parity(y) == 1
    }

    /// `T(x, y)`:
    /// `x < y`: `(1-q)(x,y) + s(y,x)`; `x = y`: `1` (even) or `-q` (odd);
    /// `x > y`: `s q (y,x)`, with `s = (-1)^{|x||y|}`.
    fn local_t(&self, x: u8, y: u8) -> SmallVec<[Branch; 2]> {
        let s = self.swap_sign(x, y);
        let mut out = SmallVec::new();
        if x < y {
            out.push((false, Factor::OneMinusQ, x, y));
            out.push((s, Factor::One, y, x));
        } else if x == y {
            if self.alphabet.parity(x) == 0 {
                out.push((false, Factor::One, x, x));
            } else {
                out.push((false, Factor::MinusQ, x, x));
            }
        } else {
            out.push((s, Factor::Q, y, x));
        }
        out
    }

    /// `T^{-1} = q^{-1} T - (1-q) q^{-1}`.
    fn local_t_inv(&self, x: u8, y: u8) -> SmallVec<[Branch; 2]> {
        let s = self.swap_sign(x, y);
        let mut out = SmallVec::new();
        if x < y {
            out.push((s, Factor::QInv, y, x));
        } else if x == y {
            if self.alphabet.parity(x) == 0 {
                out.push((false, Factor::One, x, x));
            } else {
                out.push((false, Factor::MinusQInv, x, x));
            }
        } else {
            out.push((false, Factor::OneMinusQInv, x, y));
            out.push((s, Factor::One, y, x));
        }
        out
    }

    /// `S(x, y)`: `T(x, y)` on equal colors, otherwise the swap part of `T`.
    fn local_s(&self, x: u8, y: u8) -> SmallVec<[Branch; 2]> {
        let (cx, cy) = (self.alphabet.color(x), self.alphabet.color(y));
        if cx == cy {
            return self.local_t(x, y);
        }
        let s = self.swap_sign(x, y);
        let mut out = SmallVec::new();
        if cx < cy {
            out.push((s, Factor::One, y, x));
        } else {
            out.push((s, Factor::Q, y, x));
        }
        out
    }

    fn check_generator(&self, g: &Generator) -> Result<()> {
        let ok = match *g {
            Generator::Braid(i) | Generator::BraidInv(i) | Generator::ColorSwap(i) => {
                i >= 1 && i < self.n
            }
            Generator::Omega { pos, .. } => pos >= 1 && pos <= self.n,
            Generator::Cyclotomic => self.n >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "generator {g:?} out of range for n = {}",
                self.n
            )))
        }
    }

    fn check_state(&self, state: &TensorState<C>) -> Result<()> {
        check_dim("tensor length", state.n(), self.n)?;
        check_dim("number of u-variables", state.nvars(), self.nvars)
    }

    /// Apply one generator to a state.
    pub fn apply(&self, g: &Generator, state: &TensorState<C>) -> Result<TensorState<C>> {
        self.check_generator(g)?;
        self.check_state(state)?;
        Ok(self.apply_unchecked(g, state))
    }

    fn apply_unchecked(&self, g: &Generator, state: &TensorState<C>) -> TensorState<C> {
        match *g {
            Generator::Braid(i) => self.apply_local(i, state, Self::local_t),
            Generator::BraidInv(i) => self.apply_local(i, state, Self::local_t_inv),
            Generator::ColorSwap(i) => self.apply_local(i, state, Self::local_s),
            Generator::Omega { pos, power } => {
                let mut out = TensorState::zero(self.n, self.nvars);
                for (w, c) in state.terms() {
                    let color = self.alphabet.color(w[pos - 1]);
                    let scale = MultiPoly::u_pow(self.nvars, color, power);
                    out.add(w.clone(), c * &scale);
                }
                out
            }
            Generator::Cyclotomic => {
                let mut cur = self.apply_unchecked(&Generator::Omega { pos: 1, power: 1 }, state);
                for i in 1..self.n {
                    cur = self.apply_local(i, &cur, Self::local_s);
                }
                for i in (1..self.n).rev() {
                    cur = self.apply_local(i, &cur, Self::local_t_inv);
                }
                cur
            }
        }
    }

    fn apply_local(
        &self,
        i: usize,
        state: &TensorState<C>,
        local: fn(&Self, u8, u8) -> SmallVec<[Branch; 2]>,
    ) -> TensorState<C> {
        let mut out = TensorState::zero(self.n, self.nvars);
        for (w, c) in state.terms() {
            for (neg, f, a, b) in local(self, w[i - 1], w[i]) {
                let mut nw = w.clone();
                nw[i - 1] = a;
                nw[i] = b;
                let mut coef = match self.factor(f) {
                    None => c.clone(),
                    Some(p) => c * p,
                };
                if neg {
                    coef = -coef;
                }
                out.add(nw, coef);
            }
        }
        out
    }

    /// Apply a word of generators; the rightmost acts first.
    pub fn apply_word(&self, word: &[Generator], state: &TensorState<C>) -> Result<TensorState<C>> {
        self.check_state(state)?;
        for g in word {
            self.check_generator(g)?;
        }
        Ok(self.apply_word_unchecked(word, state))
    }

    pub(crate) fn apply_word_unchecked(&self, word: &[Generator], state: &TensorState<C>) -> TensorState<C> {
        let mut cur = state.clone();
        for g in word.iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = self.apply_unchecked(g, &cur);
        }
        cur
    }

    /// Trace of a word of generators: the sum over all basis words of the
    /// diagonal coefficient. Parallel over basis words.
    pub fn trace(&self, word: &[Generator]) -> Result<MultiPoly<C>> {
        for g in word {
            self.check_generator(g)?;
        }
        let zero = MultiPoly::zero(self.nvars);
        Ok((0..self.dim())
            .into_par_iter()
            .map(|idx| {
                let w = self.basis_word(idx);
                let image = self.apply_word_unchecked(word, &TensorState::basis(w.clone(), self.nvars));
                image.coeff(&w)
            })
            .reduce(|| zero.clone(), |a, b| a + b))
    }
}

/// Map `g_i -> T_i` and `xi_j^e -> omega_j^e`; group symbols are rejected.
pub fn hecke_generators(word: &GeneratorWord) -> Result<Vec<Generator>> {
    word.symbols
        .iter()
        .map(|s| match *s {
            WordSymbol::Hecke(i) => Ok(Generator::Braid(i)),
            WordSymbol::Xi { pos, power } => Ok(Generator::Omega { pos, power }),
            WordSymbol::Group(i) => Err(Error::InvalidArgument(format!(
                "group symbol s{i} in a Hecke trace"
            ))),
        })
        .collect()
}

/// Literal trace of a Hecke word on `V^{(x)n}`.
pub fn trace_of_word<C: Scalar>(word: &GeneratorWord, rep: &SuperRep<C>) -> Result<MultiPoly<C>> {
    check_dim("word length parameter n", word.n, rep.n())?;
    rep.trace(&hecke_generators(word)?)
}

/// The character value on `g_mu`, computed as a literal trace.
pub fn char_value_oracle<C: Scalar>(mu: &MultiPartition, k: &[usize], l: &[usize]) -> Result<MultiPoly<C>> {
    check_dim("length of k vs multipartition", k.len(), mu.m())?;
    if mu.size() == 0 {
        return Err(Error::InvalidArgument("multipartition of 0".into()));
    }
    let rep = SuperRep::<C>::with_dims(k, l, mu.size())?;
    trace_of_word(&word_hecke(mu), &rep)
}
