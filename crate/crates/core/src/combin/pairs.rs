use crate::error::{check_dim, Error, Result};

/// A pair `(alpha; beta)` of `m`-multicompositions with positive parts,
/// enumerated under row bounds `l(alpha^(i)) <= k_i`, `l(beta^(i)) <= l_i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedPair {
    pub alpha: Vec<Vec<usize>>,
    pub beta: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairStats {
    /// Total number of parts over `alpha` and `beta`.
    pub length: usize,
    /// Largest one-based color with a part in `alpha` or `beta`.
    pub last_color: usize,
    pub beta_size: usize,
    pub beta_length: usize,
}

impl GradedPair {
    pub fn m(&self) -> usize {
        self.alpha.len()
    }

    pub fn size(&self) -> usize {
        self.alpha.iter().chain(&self.beta).flatten().sum()
    }

    pub fn stats(&self) -> PairStats {
        pair_stats(self)
    }
}

/// `(l(alpha;beta), last occupied color, |beta|, l(beta))`.
pub fn pair_stats(p: &GradedPair) -> PairStats {
    let length = p.alpha.iter().chain(&p.beta).map(Vec::len).sum();
    let last_color = (0..p.m())
        .rev()
        .find(|&i| !p.alpha[i].is_empty() || !p.beta[i].is_empty())
        .map_or(0, |i| i + 1);
    PairStats {
        length,
        last_color,
        beta_size: p.beta.iter().flatten().sum(),
        beta_length: p.beta.iter().map(Vec::len).sum(),
    }
}

/// Compositions of `n` into at most `max_parts` positive parts, largest
/// first part first.
fn compositions(n: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if left == 0 {
            return;
        }
        for p in (1..=rest).rev() {
            cur.push(p);
            rec(rest - p, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_parts, &mut Vec::new(), &mut out);
    out
}

/// All of `C(a; k|l)`.
///
/// The `2m` slots are visited in the order `alpha^(1), beta^(1), alpha^(2),
/// ..`; each slot takes its size largest first, then its compositions.
pub fn list_graded_pairs(a: usize, k: &[usize], l: &[usize]) -> Result<Vec<GradedPair>> {
    check_dim("length of k vs l", k.len(), l.len())?;
    if a == 0 {
        return Err(Error::InvalidArgument("graded pairs need a >= 1".into()));
    }
    let m = k.len();
    let bounds: Vec<usize> = (0..2 * m)
        .map(|s| if s % 2 == 0 { k[s / 2] } else { l[s / 2] })
        .collect();

    fn rec(
        slot: usize,
        rest: usize,
        bounds: &[usize],
        cur: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if slot == bounds.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // remaining slots must be able to absorb what is left
        let capacity: usize = if bounds[slot..].iter().any(|&b| b > 0) {
            rest
        } else {
            0
        };
        if capacity < rest {
            return;
        }
        let top = if bounds[slot] == 0 { 0 } else { rest };
        for s in (0..=top).rev() {
            for c in compositions(s, bounds[slot]) {
                cur.push(c);
                rec(slot + 1, rest - s, bounds, cur, out);
                cur.pop();
            }
        }
    }

    let mut raw = Vec::new();
    rec(0, a, &bounds, &mut Vec::new(), &mut raw);
    Ok(raw
        .into_iter()
        .map(|slots| {
            let mut alpha = Vec::with_capacity(m);
            let mut beta = Vec::with_capacity(m);
            for (s, c) in slots.into_iter().enumerate() {
                if s % 2 == 0 {
                    alpha.push(c);
                } else {
                    beta.push(c);
                }
            }
            GradedPair { alpha, beta }
        })
        .collect())
}
