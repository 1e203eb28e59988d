//! Exact computations behind the three-variable Q-factoriality criterion for
//! Laurent rings.
//!
//! Starting from a Laurent polynomial `F` in three variables (or a lattice
//! polytope), this crate builds the normal fan of the Newton polytope, the
//! class-group grading of the Cox ring, the homogenization `f` of `F`, and the
//! graded pieces of the Jacobian ring `R(f) = S / J(f)`. The central test is
//! surjectivity of the multiplication map
//!
//! ```text
//! R(f)_β ⊗ R(f)_{β-β₀} → R(f)_{2β-β₀}
//! ```
//!
//! where `β` is the class of the polytope's line bundle and `β₀` the
//! anticanonical class. All arithmetic is exact; there is no floating point.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod geom;
pub mod jacobian;
pub mod laurent;
pub mod linalg;
pub mod toric;

pub use error::{Error, Result};
pub use geom::{
    convex_hull, faces, is_simplicial, lattice_points, normal_fan, Face, Facet, LatticePoint,
    LatticePolytope, NormalFan,
};
pub use jacobian::{
    graded_piece, hilbert_profile, multiplication_surjective, surjective_with_lifts, GradedPiece,
    HilbertRow, JacobianRing, SurjectivityVerdict,
};
pub use laurent::{
    dehomogenize, homogenize, newton_polytope, parse_laurent, partial_derivatives, CoxPolynomial,
    LaurentPolynomial,
};
pub use linalg::{
    rank, row_space_membership, smith_normal_form, solve_integer, IntMatrix, RatMatrix,
    SmithDecomposition,
};
pub use toric::{
    anticanonical_degree, build_toric_data, monomials_of_degree, picard_number, polytope_degree,
    CoxMonomial, GradedDegree, ToricData,
};
