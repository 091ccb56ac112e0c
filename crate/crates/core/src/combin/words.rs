use std::fmt;

use super::partition::MultiPartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WordSymbol {
    /// Group generator `s_i`, `0 <= i < n`.
    Group(usize),
    /// Hecke braid generator `g_i`, `1 <= i <= n-1`.
    Hecke(usize),
    /// `xi_pos^power` with `1 <= pos <= n`, `power >= 1`.
    Xi { pos: usize, power: u32 },
}

impl fmt::Display for WordSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            WordSymbol::Group(i) => write!(f, "s{i}"),
            WordSymbol::Hecke(i) => write!(f, "g{i}"),
            WordSymbol::Xi { pos, power: 1 } => write!(f, "xi{pos}"),
            WordSymbol::Xi { pos, power } => write!(f, "xi{pos}^{power}"),
        }
    }
}

/// A product of generators, written left to right; as an operator the
/// rightmost symbol acts first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorWord {
    pub n: usize,
    pub symbols: Vec<WordSymbol>,
}

impl GeneratorWord {
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// True when every index is in range for `n`.
    pub fn is_valid(&self) -> bool {
        self.symbols.iter().all(|s| match *s {
            WordSymbol::Group(i) => i < self.n,
            WordSymbol::Hecke(i) => i >= 1 && i < self.n,
            WordSymbol::Xi { pos, power } => pos >= 1 && pos <= self.n && power >= 1,
        })
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.symbols.is_empty() {
            return write!(f, "1");
        }
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// `w_mu`: for each part `a` of `mu^(r)` (blocks laid out left to right),
/// `t_a^{r-1} s_{a-1} .. s_1` embedded into its block.
///
/// Inside a block starting after position `o`, the local `s_i` is the global
/// `s_{o+i}` and the local `t_a` is the global
/// `t_{o+a} = s_{o+a-1} .. s_1 s_0 s_1 .. s_{o+a-1}`.
pub fn word_group(mu: &MultiPartition) -> GeneratorWord {
    let mut symbols = Vec::new();
    let mut offset = 0;
    for (r, a) in mu.colored_parts() {
        let top = offset + a;
        for _ in 1..r {
            symbols.extend((1..top).rev().map(WordSymbol::Group));
            symbols.push(WordSymbol::Group(0));
            symbols.extend((1..top).map(WordSymbol::Group));
        }
        symbols.extend((offset + 1..top).rev().map(WordSymbol::Group));
        offset = top;
    }
    GeneratorWord {
        n: mu.size(),
        symbols,
    }
}

/// `g_mu`: for each block `o+1..o+a` with color `r`, the symbols
/// `xi_{o+a}^{r-1} g_{o+a-1} .. g_{o+1}` (the `xi` factor is dropped when
/// `r = 1`).
pub fn word_hecke(mu: &MultiPartition) -> GeneratorWord {
    let mut symbols = Vec::new();
    let mut offset = 0;
    for (r, a) in mu.colored_parts() {
        let top = offset + a;
        if r > 1 {
            symbols.push(WordSymbol::Xi {
                pos: top,
                power: (r - 1) as u32,
            });
        }
        symbols.extend((offset + 1..top).rev().map(WordSymbol::Hecke));
        offset = top;
    }
    GeneratorWord {
        n: mu.size(),
        symbols,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use WordSymbol::*;

    fn mp(s: &str) -> MultiPartition {
        s.parse().unwrap()
    }

    #[test]
    fn group_words() {
        assert!(word_group(&mp("[[1],[]]")).is_empty());
        assert_eq!(word_group(&mp("[[],[1]]")).symbols, vec![Group(0)]);
        assert_eq!(word_group(&mp("[[2]]")).symbols, vec![Group(1)]);
        // second block (position 2), color 2: t_2 = s1 s0 s1
        assert_eq!(
            word_group(&mp("[[1],[1]]")).symbols,
            vec![Group(1), Group(0), Group(1)]
        );
        assert!(word_group(&mp("[[]]")).is_empty());
    }

    #[test]
    fn hecke_words() {
        assert_eq!(word_hecke(&mp("[[2]]")).symbols, vec![Hecke(1)]);
        assert_eq!(
            word_hecke(&mp("[[],[1,1]]")).symbols,
            vec![Xi { pos: 1, power: 1 }, Xi { pos: 2, power: 1 }]
        );
        assert_eq!(word_hecke(&mp("[[1],[1]]")).symbols, vec![Xi { pos: 2, power: 1 }]);
        assert_eq!(
            word_hecke(&mp("[[2,1],[],[3]]")).symbols,
            vec![
                Hecke(1),
                Xi { pos: 6, power: 2 },
                Hecke(5),
                Hecke(4)
            ]
        );
        let w = word_hecke(&mp("[[2,1],[],[3]]"));
        assert!(w.is_valid());
        assert_eq!(w.to_string(), "g1 xi6^2 g5 g4");
    }
}
