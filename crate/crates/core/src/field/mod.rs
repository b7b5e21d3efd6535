//! Dense linear algebra over a prime field `F_q`, with the unipotent-matrix
//! toolkit the orbit classifier is built on.

mod matrix;
mod prime;
mod subspace;
mod unipotent;

pub use matrix::{Matrix, MatrixJson, Vector};
pub use prime::{is_prime, PrimeField};
pub use subspace::Subspace;
pub use unipotent::{
    apply_algebra, centralizer_algebra, jordan_index, jordan_matrix, jordan_type, kx_span,
    nilpotent_part, quotient_action, random_invertible, random_vector, restrict,
    unipotent_from_nilpotent,
};
