//! The permutation super representation on `V^{(x)n}` and the literal
//! trace oracle.

mod alphabet;
mod expr;
mod relations;
mod rep;
mod state;
mod vandermonde;

pub use alphabet::{GradedAlphabet, Letter};
pub use expr::OpExpr;
pub use relations::{
    all_passed, check_ak_presentation, check_identity, check_shoji_presentation, RelationCheck,
};
pub use rep::{char_value_oracle, hecke_generators, trace_of_word, Generator, SuperRep};
pub use state::{BasisWord, TensorState};
pub use vandermonde::{determinant, eval_f, vandermonde_data, vandermonde_matrix};
