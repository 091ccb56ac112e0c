use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::ring::MultiPoly;
use crate::scalar::Scalar;

/// A basis tensor `v_{i_1} (x) .. (x) v_{i_n}`, zero-based letters.
pub type BasisWord = SmallVec<[u8; 8]>;

/// A sparse vector of `V^{(x)n}` with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorState<C> {
    n: usize,
    nvars: usize,
    terms: BTreeMap<BasisWord, MultiPoly<C>>,
}

impl<C: Scalar> TensorState<C> {
    pub fn zero(n: usize, nvars: usize) -> Self {
        TensorState {
            n,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(word: BasisWord, nvars: usize) -> Self {
        let mut s = Self::zero(word.len(), nvars);
        s.terms.insert(word, MultiPoly::one(nvars));
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisWord, &MultiPoly<C>)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &[u8]) -> MultiPoly<C> {
        self.terms
            .get(word)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(self.nvars))
    }

    pub fn add(&mut self, word: BasisWord, c: MultiPoly<C>) {
        debug_assert_eq!(word.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_state(&mut self, other: &TensorState<C>, scale: &MultiPoly<C>) {
        for (w, c) in &other.terms {
            self.add(w.clone(), c * scale);
        }
    }

    pub fn sub_state(&self, other: &TensorState<C>) -> TensorState<C> {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add(w.clone(), -c);
        }
        out
    }
}

impl<C: Scalar> fmt::Display for TensorState<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let letters: Vec<String> = w.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({c})[{}]", letters.join(","))?;
        }
        Ok(())
    }
}
