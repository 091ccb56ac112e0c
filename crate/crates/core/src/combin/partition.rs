use std::fmt;
use std::str::FromStr;

use serde_json::Value;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts. The empty partition is
/// allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "partition {parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `lambda_j` with one-based `j`; zero past the last part.
    pub fn part(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.0.get(j - 1).copied().unwrap_or(0)
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count())
                .collect(),
        )
    }
}

/// Partitions of `n`, largest first: `(3), (2,1), (1,1,1)`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// An `m`-tuple of partitions; component order matters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        MultiPartition { components }
    }

    pub fn from_parts(parts: Vec<Vec<usize>>) -> Result<Self> {
        Ok(MultiPartition {
            components: parts.into_iter().map(Partition::new).collect::<Result<_>>()?,
        })
    }

    pub fn m(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Component `r`, one-based.
    pub fn component(&self, r: usize) -> &Partition {
        &self.components[r - 1]
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// Total number of parts over all components.
    pub fn length(&self) -> usize {
        self.components.iter().map(Partition::len).sum()
    }

    /// Number of nonempty components.
    pub fn num_nonzero(&self) -> usize {
        self.components.iter().filter(|p| !p.is_empty()).count()
    }

    /// Parts tagged by their one-based color, in block order.
    pub fn colored_parts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(r, p)| p.parts().iter().map(move |&a| (r + 1, a)))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.components
                .iter()
                .map(|p| Value::Array(p.parts().iter().map(|&x| Value::from(x)).collect()))
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("multipartition must be an array of arrays of positive integers, got {value}"));
        let outer = value.as_array().ok_or_else(bad)?;
        let mut comps = Vec::with_capacity(outer.len());
        for c in outer {
            let parts = c
                .as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(bad))
                .collect::<Result<Vec<_>>>()?;
            comps.push(Partition::new(parts)?);
        }
        if comps.is_empty() {
            return Err(Error::Parse("multipartition needs at least one component".into()));
        }
        Ok(MultiPartition::new(comps))
    }
}

impl FromStr for MultiPartition {
    type Err = Error;

    /// `[[3,1],[],[2]]`
    fn from_str(s: &str) -> Result<Self> {
        let v: Value =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("multipartition {s:?}: {e}")))?;
        MultiPartition::from_json(&v)
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// All `m`-multipartitions of `n`. Order: size of the first component
/// descending, then its partitions largest first, then recursively the rest.
pub fn list_multipartitions(m: usize, n: usize) -> Vec<MultiPartition> {
    fn rec(m: usize, n: usize) -> Vec<Vec<Partition>> {
        if m == 1 {
            return partitions(n).into_iter().map(|p| vec![p]).collect();
        }
        let mut out = Vec::new();
        for a in (0..=n).rev() {
            let tails = rec(m - 1, n - a);
            for p in partitions(a) {
                for t in &tails {
                    let mut v = Vec::with_capacity(m);
                    v.push(p.clone());
                    v.extend(t.iter().cloned());
                    out.push(v);
                }
            }
        }
        out
    }
    if m == 0 {
        return Vec::new();
    }
    rec(m, n).into_iter().map(MultiPartition::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> MultiPartition {
        s.parse().unwrap()
    }

    #[test]
    fn partitions_of_three() {
        let ps: Vec<_> = partitions(3).into_iter().map(|p| p.0).collect();
        assert_eq!(ps, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(partitions(0), vec![Partition::empty()]);
    }

    #[test]
    fn multipartition_examples() {
        let l = list_multipartitions(1, 3);
        assert_eq!(l, vec![mp("[[3]]"), mp("[[2,1]]"), mp("[[1,1,1]]")]);
        assert_eq!(list_multipartitions(2, 1), vec![mp("[[1],[]]"), mp("[[],[1]]")]);
        assert_eq!(list_multipartitions(2, 2).len(), 5);
        assert_eq!(list_multipartitions(3, 0), vec![mp("[[],[],[]]")]);
    }

    #[test]
    fn parsing() {
        let m = mp("[[3,1],[],[2]]");
        assert_eq!(m.m(), 3);
        assert_eq!(m.size(), 6);
        assert_eq!(m.length(), 3);
        assert_eq!(m.num_nonzero(), 2);
        assert_eq!(m.to_string(), "[[3,1],[],[2]]");
        assert!("[[2,]]".parse::<MultiPartition>().is_err());
        assert!("[[1,2]]".parse::<MultiPartition>().is_err());
        assert!("[[0]]".parse::<MultiPartition>().is_err());
        assert!("[]".parse::<MultiPartition>().is_err());
        assert!("[[1],3]".parse::<MultiPartition>().is_err());
    }

    #[test]
    fn conjugate() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[2, 1, 1]);
        assert_eq!(p.part(2), 1);
        assert_eq!(p.part(3), 0);
    }
}
