use crate::error::{check_dim, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Letter {
    /// One-based color.
    pub color: usize,
    pub odd: bool,
}

/// The homogeneous basis `v_1 < .. < v_{k+l}` of `V`: color blocks in
/// order, and inside color `i` the `k_i` even letters before the `l_i` odd
/// ones. Letters are zero-based internally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlphabet {
    k: Vec<usize>,
    l: Vec<usize>,
    letters: Vec<Letter>,
}

impl GradedAlphabet {
    pub fn new(k: &[usize], l: &[usize]) -> Result<Self> {
        check_dim("length of k vs l", k.len(), l.len())?;
        if k.is_empty() {
            return Err(Error::InvalidArgument("need at least one color".into()));
        }
        let mut letters = Vec::new();
        for (i, (&ki, &li)) in k.iter().zip(l).enumerate() {
            letters.extend((0..ki).map(|_| Letter { color: i + 1, odd: false }));
            letters.extend((0..li).map(|_| Letter { color: i + 1, odd: true }));
        }
        if letters.len() > u8::MAX as usize {
            return Err(Error::InvalidArgument("alphabet too large".into()));
        }
        Ok(GradedAlphabet {
            k: k.to_vec(),
            l: l.to_vec(),
            letters,
        })
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

    /// `k + l`, the dimension of `V`.
    pub fn size(&self) -> usize {
        self.letters.len()
    }

    pub fn letter(&self, x: u8) -> Letter {
        self.letters[x as usize]
    }

    pub fn color(&self, x: u8) -> usize {
        self.letters[x as usize].color
    }

    pub fn parity(&self, x: u8) -> u8 {
        self.letters[x as usize].odd as u8
    }

    /// `d_i = sum_{j <= i} (k_j + l_j)`.
    pub fn block_offsets(&self) -> Vec<usize> {
        self.k
            .iter()
            .zip(&self.l)
            .scan(0, |acc, (a, b)| {
                *acc += a + b;
                Some(*acc)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout() {
        let a = GradedAlphabet::new(&[1, 0, 2], &[1, 1, 0]).unwrap();
        assert_eq!(a.size(), 5);
        assert_eq!(a.block_offsets(), vec![2, 3, 5]);
        let colors: Vec<_> = (0..5).map(|x| a.color(x)).collect();
        assert_eq!(colors, vec![1, 1, 2, 3, 3]);
        let parities: Vec<_> = (0..5).map(|x| a.parity(x)).collect();
        assert_eq!(parities, vec![0, 1, 1, 0, 0]);
        assert!(GradedAlphabet::new(&[1], &[1, 1]).is_err());
    }
}
