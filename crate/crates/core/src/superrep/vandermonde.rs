use crate::ring::MultiPoly;
use crate::scalar::Scalar;

/// Determinant by cofactor expansion along the first row.
pub fn determinant<C: Scalar>(matrix: &[Vec<MultiPoly<C>>], nvars: usize) -> MultiPoly<C> {
    let n = matrix.len();
    if n == 0 {
        return MultiPoly::one(nvars);
    }
    if n == 1 {
        return matrix[0][0].clone();
    }
    let mut det = MultiPoly::zero(nvars);
    for col in 0..n {
        if matrix[0][col].is_zero() {
            continue;
        }
        let minor = minor(matrix, 0, col);
        let term = &matrix[0][col] * &determinant(&minor, nvars);
        if col % 2 == 0 {
            det += &term;
        } else {
            det -= &term;
        }
    }
    det
}

fn minor<C: Scalar>(matrix: &[Vec<MultiPoly<C>>], row: usize, col: usize) -> Vec<Vec<MultiPoly<C>>> {
    matrix
        .iter()
        .enumerate()
        .filter(|(r, _)| *r != row)
        .map(|(_, cells)| {
            cells
                .iter()
                .enumerate()
                .filter(|(c, _)| *c != col)
                .map(|(_, p)| p.clone())
                .collect()
        })
        .collect()
}

/// The Vandermonde matrix with `(a, b)` entry `u_b^a`, rows `a = 0..m`,
/// columns `b = 1..=m`.
pub fn vandermonde_matrix<C: Scalar>(m: usize) -> Vec<Vec<MultiPoly<C>>> {
    (0..m)
        .map(|a| (1..=m).map(|b| MultiPoly::u_pow(m, b, a as u32)).collect())
        .collect()
}

/// `Delta` and the coefficient vectors of `F_1 .. F_m`.
///
/// `F_c(x) = sum_i v_{ci} x^i` where `(v_{ci})` is the adjugate of the
/// Vandermonde matrix, so `F_c(u_d) = delta_{cd} Delta`.
pub fn vandermonde_data<C: Scalar>(m: usize) -> (MultiPoly<C>, Vec<Vec<MultiPoly<C>>>) {
    let v = vandermonde_matrix::<C>(m);
    let delta = determinant(&v, m);
    let f = (0..m)
        .map(|c| {
            (0..m)
                .map(|i| {
                    // adj(V)_{c,i} = (-1)^{i+c} det(V without row i, column c)
                    let cof = determinant(&minor(&v, i, c), m);
                    if (i + c) % 2 == 0 {
                        cof
                    } else {
                        -cof
                    }
                })
                .collect()
        })
        .collect();
    (delta, f)
}

/// `F(x)` evaluated at a polynomial `x`.
pub fn eval_f<C: Scalar>(coeffs: &[MultiPoly<C>], x: &MultiPoly<C>) -> MultiPoly<C> {
    let mut acc = MultiPoly::zero(x.nvars());
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}
