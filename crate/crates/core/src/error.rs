use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyInput,

    #[error("convex hull has affine dimension {dimension}, expected 3")]
    DegenerateHull { dimension: usize },

    #[error("coordinate {value} outside the supported range ±{limit}")]
    CoordinateRange { value: i64, limit: i64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("normal fan is not simplicial")]
    NotSimplicial,

    #[error("rays of the fan do not span the lattice rationally")]
    IncompleteFan,

    #[error("polytope facets do not match the rays of the toric data")]
    FanMismatch,

    #[error("parse error at position {position}: {message}")]
    Parse {
        position: usize,
        message: &'static str,
    },

    #[error("the zero polynomial defines no hypersurface")]
    EmptyPolynomial,

    #[error("exponent {exponent:?} lies outside the polytope")]
    SupportOutsidePolytope { exponent: [i64; 3] },

    #[error("Cox exponents do not come from a lattice point")]
    InconsistentExponents,

    #[error("graded degree mismatch")]
    DegreeMismatch,

    #[error("integer overflow")]
    Overflow,
}
