use std::collections::BTreeSet;

use akregev::combin::{
    count_semistandard, count_semistandard_single, count_standard_multitableaux, count_standard_tableaux,
    is_hook_partition, list_graded_pairs, list_hook_multipartitions, list_multipartitions, pair_stats,
    partitions, word_group, word_hecke, GradedPair, MultiPartition, Partition, WordSymbol,
};

fn mp(s: &str) -> MultiPartition {
    s.parse().unwrap()
}

/// Partition numbers by the dynamic program over largest parts.
fn partition_numbers(n: usize) -> Vec<u64> {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for s in part..=n {
            p[s] += p[s - part];
        }
    }
    p
}

/// Coefficient of `x^n` in `(sum_k p(k) x^k)^m`.
fn multipartition_count(m: usize, n: usize) -> u64 {
    let p = partition_numbers(n);
    let mut acc = vec![0u64; n + 1];
    acc[0] = 1;
    for _ in 0..m {
        let mut next = vec![0u64; n + 1];
        for i in 0..=n {
            for j in 0..=n - i {
                next[i + j] += acc[i] * p[j];
            }
        }
        acc = next;
    }
    acc[n]
}

#[test]
fn multipartition_examples() {
    let l = list_multipartitions(1, 3);
    let shown: Vec<String> = l.iter().map(ToString::to_string).collect();
    assert_eq!(shown, vec!["[[3]]", "[[2,1]]", "[[1,1,1]]"]);
    let l = list_multipartitions(2, 1);
    assert_eq!(l, vec![mp("[[1],[]]"), mp("[[],[1]]")]);
    assert_eq!(list_multipartitions(2, 2).len(), 5);
}

#[test]
fn multipartition_counts_match_generating_function() {
    for m in 1..=3 {
        for n in 0..=8 {
            let l = list_multipartitions(m, n);
            assert_eq!(l.len() as u64, multipartition_count(m, n), "m={m} n={n}");
            let distinct: BTreeSet<String> = l.iter().map(ToString::to_string).collect();
            assert_eq!(distinct.len(), l.len());
            assert!(l.iter().all(|mu| mu.size() == n && mu.m() == m));
        }
    }
}

#[test]
fn multipartition_parsing() {
    assert!("[[2,]]".parse::<MultiPartition>().is_err());
    assert!("[[1,2]]".parse::<MultiPartition>().is_err());
    assert!("[[0]]".parse::<MultiPartition>().is_err());
    let mu = mp("[[3,1],[],[2]]");
    assert_eq!(mu.size(), 6);
    assert_eq!(mu.length(), 3);
    assert_eq!(mu.num_nonzero(), 2);
    assert_eq!(mu.to_string(), "[[3,1],[],[2]]");
}

/// Compositions of `s` with positive parts, any length.
fn all_compositions(s: usize) -> Vec<Vec<usize>> {
    if s == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=s {
        for mut rest in all_compositions(s - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every pair of `m`-multicompositions of total size `a`, no length bounds.
fn unrestricted_pairs(a: usize, m: usize) -> Vec<GradedPair> {
    fn rec(slot: usize, slots: usize, rest: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if slot == slots {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for s in 0..=rest {
            for c in all_compositions(s) {
                cur.push(c);
                rec(slot + 1, slots, rest - s, cur, out);
                cur.pop();
            }
        }
    }
    let mut raw = Vec::new();
    rec(0, 2 * m, a, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|slots| GradedPair {
            alpha: slots[..m].to_vec(),
            beta: slots[m..].to_vec(),
        })
        .collect()
}

#[test]
fn graded_pair_examples() {
    assert_eq!(list_graded_pairs(1, &[1], &[1]).unwrap().len(), 2);
    assert_eq!(list_graded_pairs(2, &[1], &[1]).unwrap().len(), 3);
    let only_beta = list_graded_pairs(1, &[0], &[1]).unwrap();
    assert_eq!(only_beta, vec![GradedPair { alpha: vec![vec![]], beta: vec![vec![1]] }]);
    assert!(list_graded_pairs(0, &[1], &[1]).is_err());
    assert!(list_graded_pairs(1, &[0], &[0]).unwrap().is_empty());

    let st = pair_stats(&GradedPair { alpha: vec![vec![1]], beta: vec![vec![1]] });
    assert_eq!((st.length, st.last_color, st.beta_size, st.beta_length), (2, 1, 1, 1));
    let st = pair_stats(&GradedPair { alpha: vec![vec![1], vec![]], beta: vec![vec![], vec![2]] });
    assert_eq!((st.length, st.last_color, st.beta_size, st.beta_length), (2, 2, 2, 1));
    let st = pair_stats(&GradedPair { alpha: vec![vec![2, 1], vec![]], beta: vec![vec![], vec![]] });
    assert_eq!((st.length, st.last_color, st.beta_size, st.beta_length), (2, 1, 0, 0));
}

#[test]
fn graded_pairs_match_filtered_unrestricted_enumeration() {
    for m in 1..=2 {
        for a in 1..=5 {
            let all = unrestricted_pairs(a, m);
            // generous bounds: everything
            let big = vec![a; m];
            let got: BTreeSet<_> = list_graded_pairs(a, &big, &big).unwrap().into_iter().collect();
            let want: BTreeSet<_> = all.iter().cloned().collect();
            assert_eq!(got, want, "m={m} a={a}");
            for k0 in 0..=2 {
                for l0 in 0..=2 {
                    let k: Vec<usize> = (0..m).map(|i| (k0 + i) % 3).collect();
                    let l: Vec<usize> = (0..m).map(|i| (l0 + 2 * i) % 3).collect();
                    let list = list_graded_pairs(a, &k, &l).unwrap();
                    let got: BTreeSet<_> = list.iter().cloned().collect();
                    assert_eq!(got.len(), list.len(), "duplicates");
                    let want: BTreeSet<_> = all
                        .iter()
                        .filter(|p| (0..m).all(|i| p.alpha[i].len() <= k[i] && p.beta[i].len() <= l[i]))
                        .cloned()
                        .collect();
                    assert_eq!(got, want, "m={m} a={a} k={k:?} l={l:?}");
                }
            }
        }
    }
}

/// Standard tableaux by removing the cell holding the largest entry.
fn standard_by_corners(parts: &[usize]) -> u128 {
    if parts.iter().sum::<usize>() == 0 {
        return 1;
    }
    let mut total = 0;
    for r in 0..parts.len() {
        let is_corner = parts[r] > 0 && (r + 1 == parts.len() || parts[r + 1] < parts[r]);
        if is_corner {
            let mut smaller = parts.to_vec();
            smaller[r] -= 1;
            total += standard_by_corners(&smaller);
        }
    }
    total
}

#[test]
fn standard_tableaux_match_corner_recursion() {
    for n in 0..=6 {
        for p in partitions(n) {
            assert_eq!(count_standard_tableaux(&p), standard_by_corners(p.parts()), "{p:?}");
        }
    }
    assert_eq!(count_standard_tableaux(&Partition::new(vec![2, 1]).unwrap()), 2);
    assert_eq!(count_standard_multitableaux(&mp("[[1],[1]]")), 2);
    assert_eq!(count_standard_multitableaux(&mp("[[4]]")), 1);
}

#[test]
fn semistandard_examples() {
    let p = |v: Vec<usize>| Partition::new(v).unwrap();
    assert_eq!(count_semistandard_single(&p(vec![2]), 1, 1), 2);
    assert_eq!(count_semistandard_single(&p(vec![2, 2]), 1, 1), 0);
    assert_eq!(count_semistandard(&mp("[[1],[1]]"), &[1, 1], &[1, 1]).unwrap(), 4);
    assert!(!is_hook_partition(&p(vec![2, 2]), 1, 1));
}

#[test]
fn hook_lists() {
    assert_eq!(list_hook_multipartitions(3, &[1], &[1]).unwrap().len(), 3);
    assert_eq!(list_hook_multipartitions(3, &[1], &[0]).unwrap(), vec![mp("[[3]]")]);
    assert_eq!(list_hook_multipartitions(2, &[1, 1], &[1, 1]).unwrap().len(), 5);
}

#[test]
fn semistandard_support_and_unit_alphabet() {
    let vectors: Vec<Vec<usize>> = (0..3).flat_map(|a| (0..3).map(move |b| vec![a, b])).collect();
    for n in 1..=5 {
        for m in 1..=2 {
            for k in vectors.iter().filter(|v| m == 2 || v[1] == 0).map(|v| v[..m].to_vec()) {
                for l in vectors.iter().filter(|v| m == 2 || v[1] == 0).map(|v| v[..m].to_vec()) {
                    let hooks = list_hook_multipartitions(n, &k, &l).unwrap();
                    for lam in list_multipartitions(m, n) {
                        let s = count_semistandard(&lam, &k, &l).unwrap();
                        assert_eq!(s > 0, hooks.contains(&lam), "{lam} k={k:?} l={l:?}");
                    }
                }
            }
        }
    }
    for n in 1..=5 {
        for m in 1..=3 {
            let ones = vec![1; m];
            for lam in list_hook_multipartitions(n, &ones, &ones).unwrap() {
                let s = count_semistandard(&lam, &ones, &ones).unwrap();
                assert_eq!(s, 1 << lam.num_nonzero(), "{lam}");
            }
        }
    }
}

#[test]
fn word_examples() {
    assert!(word_group(&mp("[[1],[]]")).is_empty());
    assert_eq!(word_group(&mp("[[],[1]]")).symbols, vec![WordSymbol::Group(0)]);
    assert_eq!(word_group(&mp("[[2]]")).symbols, vec![WordSymbol::Group(1)]);
    assert_eq!(word_hecke(&mp("[[2]]")).symbols, vec![WordSymbol::Hecke(1)]);
    assert_eq!(
        word_hecke(&mp("[[],[1,1]]")).symbols,
        vec![WordSymbol::Xi { pos: 1, power: 1 }, WordSymbol::Xi { pos: 2, power: 1 }]
    );
    assert_eq!(word_hecke(&mp("[[1],[1]]")).symbols, vec![WordSymbol::Xi { pos: 2, power: 1 }]);
}

#[test]
fn hecke_word_symbol_counts() {
    for m in 1..=3 {
        for n in 1..=6 {
            for mu in list_multipartitions(m, n) {
                let w = word_hecke(&mu);
                assert!(w.is_valid());
                let braids = w.symbols.iter().filter(|s| matches!(s, WordSymbol::Hecke(_))).count();
                assert_eq!(braids, n - mu.length());
                let xi_power: u32 = w
                    .symbols
                    .iter()
                    .map(|s| match s {
                        WordSymbol::Xi { power, .. } => *power,
                        _ => 0,
                    })
                    .sum();
                let want: usize = (1..=m).map(|r| (r - 1) * mu.component(r).len()).sum();
                assert_eq!(xi_power as usize, want);
            }
        }
    }
}

/// Cycle type of a word in `G(m,1,n)`, modelled as permutations of
/// positions carrying a color increment: `s_0` adds one to the color of
/// whatever sits at position 1, `s_i` swaps positions `i, i+1`.
/// Returns sorted `(cycle length, total color mod m)`.
fn colored_cycle_type(word: &[WordSymbol], n: usize, m: usize) -> Vec<(usize, usize)> {
    let mut image = vec![0; n];
    let mut incr = vec![0; n];
    for start in 0..n {
        let (mut pos, mut color) = (start, 0);
        for s in word.iter().rev() {
            match *s {
                WordSymbol::Group(0) => {
                    if pos == 0 {
                        color += 1;
                    }
                }
                WordSymbol::Group(i) => {
                    if pos == i - 1 {
                        pos = i;
                    } else if pos == i {
                        pos = i - 1;
                    }
                }
                _ => panic!("not a group word"),
            }
        }
        image[start] = pos;
        incr[start] = color;
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let (mut len, mut color, mut p) = (0, 0, start);
        while !seen[p] {
            seen[p] = true;
            len += 1;
            color += incr[p];
            p = image[p];
        }
        out.push((len, color % m));
    }
    out.sort();
    out
}

#[test]
fn group_word_has_the_expected_conjugacy_class() {
    for m in 1..=3 {
        for n in 1..=5 {
            for mu in list_multipartitions(m, n) {
                let w = word_group(&mu);
                assert!(w.is_valid());
                let mut want: Vec<(usize, usize)> = mu.colored_parts().map(|(r, a)| (a, (r - 1) % m)).collect();
                want.sort();
                assert_eq!(colored_cycle_type(&w.symbols, n, m), want, "{mu}");
            }
        }
    }
}
