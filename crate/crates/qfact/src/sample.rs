//! Seeded coefficient sampling over `Γ(Δ)`.

use num_rational::BigRational;
use qfact_core::{lattice_points, LatticePolytope, LaurentPolynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Polynomial with support exactly `Δ ∩ ℤ³` and coefficients uniform on
/// `[-bound, bound] \ {0}`. Equal to attempt 0 of [`sample_attempt`].
pub fn sample_coefficients(delta: &LatticePolytope, seed: u64, bound: u32) -> LaurentPolynomial {
    sample_attempt(delta, seed, 0, bound)
}

/// Each attempt draws from its own ChaCha stream, so attempt `k` does not
/// depend on how many attempts ran before it.
pub fn sample_attempt(
    delta: &LatticePolytope,
    seed: u64,
    attempt: u64,
    bound: u32,
) -> LaurentPolynomial {
    assert!(bound >= 1, "coefficient bound must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(attempt);
    let b = i64::from(bound);
    LaurentPolynomial::from_terms(lattice_points(delta).into_iter().map(|m| {
        // 2b values, skipping zero
        let k = rng.gen_range(-b..b);
        let c = if k >= 0 { k + 1 } else { k };
        (m.coords(), BigRational::from_integer(c.into()))
    }))
}
