use super::partition::{list_multipartitions, MultiPartition, Partition};
use crate::error::{check_dim, Result};

/// `lambda_{k+1} <= l`.
pub fn is_hook_partition(p: &Partition, k: usize, l: usize) -> bool {
    p.part(k + 1) <= l
}

/// `H(k|l; n)`: multipartitions whose `i`-th component is a
/// `(k_i, l_i)`-hook partition, in [`list_multipartitions`] order.
pub fn list_hook_multipartitions(n: usize, k: &[usize], l: &[usize]) -> Result<Vec<MultiPartition>> {
    check_dim("length of k vs l", k.len(), l.len())?;
    Ok(list_multipartitions(k.len(), n)
        .into_iter()
        .filter(|lam| {
            lam.components()
                .iter()
                .enumerate()
                .all(|(i, p)| is_hook_partition(p, k[i], l[i]))
        })
        .collect())
}

/// Number of `(k|l)`-semistandard fillings of one partition, by exhaustive
/// search.
///
/// Symbols `0..k` are the even letters `x_1 < .. < x_k`, `k..k+l` the odd
/// letters `y_1 < .. < y_l`. Rows and columns weakly increase; `x` letters
/// strictly increase down columns and `y` letters strictly increase along
/// rows.
pub fn count_semistandard_single(p: &Partition, k: usize, l: usize) -> u128 {
    let rows = p.parts();
    let cells: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    if cells.is_empty() {
        return 1;
    }
    let alphabet = k + l;
    if alphabet == 0 {
        return 0;
    }
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&len| vec![0; len]).collect();

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        k: usize,
        alphabet: usize,
    ) -> u128 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let mut lo = 0;
        if c > 0 {
            let left = grid[r][c - 1];
            // y strictly increasing along rows
            lo = lo.max(if left >= k { left + 1 } else { left });
        }
        if r > 0 {
            let up = grid[r - 1][c];
            // x strictly increasing down columns
            lo = lo.max(if up < k { up + 1 } else { up });
        }
        let mut total = 0;
        for v in lo..alphabet {
            grid[r][c] = v;
            total += fill(idx + 1, cells, grid, k, alphabet);
        }
        total
    }

    fill(0, &cells, &mut grid, k, alphabet)
}

/// `s_{k|l}(lambda)`: the count factorizes over components.
pub fn count_semistandard(lambda: &MultiPartition, k: &[usize], l: &[usize]) -> Result<u128> {
    check_dim("length of k vs multipartition", k.len(), lambda.m())?;
    check_dim("length of l vs multipartition", l.len(), lambda.m())?;
    Ok(lambda
        .components()
        .iter()
        .enumerate()
        .map(|(i, p)| count_semistandard_single(p, k[i], l[i]))
        .product())
}

/// `f^lambda` by the hook-length formula.
pub fn count_standard_tableaux(p: &Partition) -> u128 {
    let n = p.size();
    let conj = p.conjugate();
    let mut hooks: u128 = 1;
    for (r, &len) in p.parts().iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = conj.parts()[c] - r - 1;
            hooks *= (arm + leg + 1) as u128;
        }
    }
    factorial(n) / hooks
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Standard multitableaux: `n! / prod |lambda^(i)|! * prod f^{lambda^(i)}`.
pub fn count_standard_multitableaux(lambda: &MultiPartition) -> u128 {
    let mut total = factorial(lambda.size());
    for p in lambda.components() {
        total /= factorial(p.size());
    }
    for p in lambda.components() {
        total *= count_standard_tableaux(p);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> MultiPartition {
        s.parse().unwrap()
    }

    #[test]
    fn semistandard_examples() {
        assert_eq!(count_semistandard(&mp("[[2]]"), &[1], &[1]).unwrap(), 2);
        assert_eq!(count_semistandard(&mp("[[1],[1]]"), &[1, 1], &[1, 1]).unwrap(), 4);
        assert_eq!(count_semistandard(&mp("[[2,2]]"), &[1], &[1]).unwrap(), 0);
        // ordinary semistandard tableaux of shape (2,1) over 2 letters
        assert_eq!(count_semistandard(&mp("[[2,1]]"), &[2], &[0]).unwrap(), 2);
        // conjugate shape over 2 odd letters
        assert_eq!(count_semistandard(&mp("[[2,1]]"), &[0], &[2]).unwrap(), 2);
        assert_eq!(count_semistandard(&mp("[[]]"), &[0], &[0]).unwrap(), 1);
        assert!(count_semistandard(&mp("[[1]]"), &[1, 1], &[1, 1]).is_err());
    }

    #[test]
    fn standard_examples() {
        assert_eq!(count_standard_multitableaux(&mp("[[2,1]]")), 2);
        assert_eq!(count_standard_multitableaux(&mp("[[1],[1]]")), 2);
        for n in 0..7 {
            assert_eq!(count_standard_multitableaux(&mp(&format!("[[{}]]", n.max(1)))), 1);
        }
        assert_eq!(count_standard_multitableaux(&mp("[[3,2]]")), 5);
    }

    #[test]
    fn hook_lists() {
        assert_eq!(list_hook_multipartitions(3, &[1], &[1]).unwrap().len(), 3);
        assert_eq!(list_hook_multipartitions(3, &[1], &[0]).unwrap(), vec![mp("[[3]]")]);
        assert_eq!(list_hook_multipartitions(2, &[1, 1], &[1, 1]).unwrap().len(), 5);
    }
}
