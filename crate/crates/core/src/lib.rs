//! Construction and analysis of quantum XYZ product codes.
//!
//! The library builds stabilizer codes from three binary parity-check
//! matrices, verifies that the construction is valid (Abelian group, no
//! `-1`), computes the code dimension by several independent routes, and
//! bounds the minimum distance with exact capped searches and combinatorial
//! relaxations. Cyclic instances get a polynomial-ring toolkit (fractal
//! operators, low-weight logical constructions, energy-barrier paths) and
//! every code can be converted to a CSS code on four times the qubits.

// Index loops mirror the row/column arithmetic throughout; iterator forms
// obscure the pivoting logic.
#![allow(clippy::needless_range_loop)]

pub mod bits;
pub mod css;
pub mod cyclic;
pub mod dimension;
pub mod distance;
pub mod error;
pub mod invariants;
pub mod io;
pub mod matrix;
pub mod pauli;
pub mod poly;
mod splitmix;
pub mod tensor;
pub mod xyz;

pub use bits::BitVector;
pub use css::{css_convert, css_distance_capped, CssCode};
pub use cyclic::{xyz3d_closed_form_dimension, CyclicSpec, RingPoly3};
pub use dimension::{
    dimension_bruteforce, dimension_formula, modified_chamon_matrix, sylvester_count_direct,
    sylvester_count_gcd, DimensionReport,
};
pub use distance::{
    disjoint_representative_bound, distance_capped, dstar, equal_pair_logical, DstarStrategy,
    SearchOutcome,
};
pub use error::{Error, Result};
pub use invariants::{char_poly, invariant_factors};
pub use matrix::{BitMatrix, Echelon};
pub use pauli::{Membership, Pauli, PauliGroup, PauliOperator};
pub use poly::F2Polynomial;
pub use tensor::Tensor3;
pub use xyz::{chamon_matrix, circulant, in_t, xyz3d_matrix, Block, Check, Syndrome, XYZCode};
