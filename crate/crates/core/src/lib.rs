//! Exact character values of the permutation super representation of the
//! Ariki-Koike algebra `H_n(u, q)`.
//!
//! Two independent routes produce the same numbers:
//!
//! * [`regev`] evaluates the closed product formulas (sums over graded
//!   multicomposition pairs) for the value on each standard element `g_mu`;
//! * [`superrep`] builds the graded tensor space `V^{(x)n}`, applies the
//!   operators `T_i`, `omega_j`, `T_0` word by word and takes literal traces.
//!
//! All arithmetic is exact. Coefficients are generic over [`Scalar`]; the
//! aliases at the crate root fix them to arbitrary-precision integers.

pub mod combin;
pub mod error;
pub mod regev;
pub mod ring;
pub mod scalar;
pub mod superrep;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;

use num_bigint::BigInt;

/// Laurent polynomial in `q`, polynomial in `u_1..u_m`, big-integer coefficients.
pub type Poly = ring::MultiPoly<BigInt>;
/// Element of `Z[x]/Phi_m(x)` with big-integer coefficients.
pub type Cyclo = ring::CycloElem<BigInt>;
/// Truncated `(1-q)`-adic series with big-integer coefficients.
pub type Series = ring::TruncSeries<BigInt>;
/// Tensor-space vector with big-integer polynomial coefficients.
pub type State = superrep::TensorState<BigInt>;

/// Machine-integer variants; fast, but overflow is not checked.
pub mod small {
    pub type Poly = crate::ring::MultiPoly<i64>;
    pub type Cyclo = crate::ring::CycloElem<i64>;
    pub type Series = crate::ring::TruncSeries<i64>;
}
