//! Graded pieces of the Jacobian ring `R(f) = S / J(f)` and the surjectivity
//! test for `R(f)_β ⊗ R(f)_{β−β₀} → R(f)_{2β−β₀}`.
//!
//! Everything is linear algebra on one graded piece at a time: `J(f)_γ` is
//! spanned by `m · ∂f/∂zᵢ` with `m` running over monomials of degree
//! `γ − deg ∂f/∂zᵢ`, written in the monomial basis of `S_γ`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::{partial_derivatives, CoxPolynomial};
use crate::linalg::RatMatrix;
use crate::toric::{monomials_of_degree, CoxMonomial, GradedDegree, ToricData};

#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub degree: GradedDegree,
    pub monomial_basis: Vec<CoxMonomial>,
    /// Spanning set of `J(f)_γ` in coordinates of `monomial_basis`.
    pub jacobian_rows: RatMatrix,
    jacobian_rank: usize,
    pivot_columns: Vec<usize>,
    index: BTreeMap<CoxMonomial, usize>,
}

impl GradedPiece {
    pub fn dim_s(&self) -> usize {
        self.monomial_basis.len()
    }

    pub fn rank_j(&self) -> usize {
        self.jacobian_rank
    }

    pub fn r_dimension(&self) -> usize {
        self.dim_s() - self.jacobian_rank
    }

    /// Monomials outside the pivot columns of `J(f)_γ`; their classes form a
    /// basis of `R(f)_γ`.
    pub fn complement_monomials(&self) -> Vec<CoxMonomial> {
        let pivots: BTreeSet<usize> = self.pivot_columns.iter().copied().collect();
        self.monomial_basis
            .iter()
            .enumerate()
            .filter(|(i, _)| !pivots.contains(i))
            .map(|(_, m)| m.clone())
            .collect()
    }

    /// Coordinates of `p` in the monomial basis; `None` if `p` has a monomial
    /// of another degree.
    pub fn coordinates(&self, p: &CoxPolynomial) -> Option<Vec<BigRational>> {
        let mut v = alloc::vec![BigRational::zero(); self.dim_s()];
        for (m, c) in p.terms() {
            v[*self.index.get(m)?] = c.clone();
        }
        Some(v)
    }

    /// The `i`-th spanning element of `J(f)_γ` as a polynomial.
    pub fn jacobian_element(&self, i: usize, t: &ToricData) -> CoxPolynomial {
        let row = self.jacobian_rows.row(i);
        CoxPolynomial::from_terms(
            self.monomial_basis.iter().cloned().zip(row.iter().cloned()),
            self.degree.clone(),
            t,
        )
        .expect("basis monomials have the piece degree")
    }

    pub fn summary(&self) -> HilbertRow {
        HilbertRow {
            degree: self.degree.clone(),
            dim_s: self.dim_s(),
            rank_j: self.rank_j(),
            dim_r: self.r_dimension(),
        }
    }
}

/// One row of a Hilbert-function table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertRow {
    pub degree: GradedDegree,
    pub dim_s: usize,
    pub rank_j: usize,
    pub dim_r: usize,
}

/// `f` together with its partial derivatives.
#[derive(Clone, Debug)]
pub struct JacobianRing<'a> {
    f: &'a CoxPolynomial,
    toric: &'a ToricData,
    partials: Vec<CoxPolynomial>,
}

impl<'a> JacobianRing<'a> {
    pub fn new(f: &'a CoxPolynomial, toric: &'a ToricData) -> Self {
        JacobianRing {
            f,
            toric,
            partials: partial_derivatives(f, toric),
        }
    }

    pub fn polynomial(&self) -> &CoxPolynomial {
        self.f
    }

    pub fn toric(&self) -> &ToricData {
        self.toric
    }

    pub fn piece(&self, gamma: &GradedDegree) -> GradedPiece {
        let basis = monomials_of_degree(self.toric, gamma);
        let index: BTreeMap<CoxMonomial, usize> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut rows = RatMatrix::new(basis.len());
        if !basis.is_empty() {
            for d in self.partials.iter().filter(|d| !d.is_zero()) {
                let shift = gamma.sub(d.degree());
                for m in monomials_of_degree(self.toric, &shift) {
                    let mut row = alloc::vec![BigRational::zero(); basis.len()];
                    for (dm, c) in d.terms() {
                        row[index[&dm.mul(&m)]] = c.clone();
                    }
                    rows.push_row(row).expect("row width matches basis");
                }
            }
        }
        let echelon = rows.echelon();
        GradedPiece {
            degree: gamma.clone(),
            monomial_basis: basis,
            jacobian_rows: rows,
            jacobian_rank: echelon.rank,
            pivot_columns: echelon.pivot_columns,
            index,
        }
    }
}

pub fn graded_piece(f: &CoxPolynomial, t: &ToricData, gamma: &GradedDegree) -> GradedPiece {
    JacobianRing::new(f, t).piece(gamma)
}

pub fn hilbert_profile(
    f: &CoxPolynomial,
    t: &ToricData,
    degrees: &[GradedDegree],
) -> Vec<HilbertRow> {
    let ring = JacobianRing::new(f, t);
    degrees.iter().map(|g| ring.piece(g).summary()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurjectivityVerdict {
    pub surjective: bool,
    /// `(dim R_β, dim R_{β−β₀}, dim R_{2β−β₀})`
    pub dims: (usize, usize, usize),
    /// Rank of products stacked on `J(f)_{2β−β₀}`.
    pub image_rank: usize,
    /// `dim S_{2β−β₀}`
    pub target_needed: usize,
    /// Table rows at `β`, `β−β₀`, `2β−β₀`.
    pub pieces: [HilbertRow; 3],
}

impl SurjectivityVerdict {
    /// Dimension of the image inside `R(f)_{2β−β₀}`.
    pub fn quotient_image_rank(&self) -> usize {
        self.image_rank - self.pieces[2].rank_j
    }
}

/// Decides surjectivity with monomial coset representatives taken off the
/// pivot columns of each Jacobian piece.
pub fn multiplication_surjective(
    f: &CoxPolynomial,
    t: &ToricData,
    beta: &GradedDegree,
    beta0: &GradedDegree,
) -> Result<SurjectivityVerdict> {
    if f.degree() != beta {
        return Err(Error::DegreeMismatch);
    }
    let ring = JacobianRing::new(f, t);
    let lift = |gamma: &GradedDegree| -> Vec<CoxPolynomial> {
        ring.piece(gamma)
            .complement_monomials()
            .into_iter()
            .map(|m| CoxPolynomial::monomial(m, BigRational::one(), t))
            .collect()
    };
    let diff = beta.sub(beta0);
    let lifts_beta = lift(beta);
    let lifts_diff = lift(&diff);
    surjective_with_lifts(&ring, beta0, &lifts_beta, &lifts_diff)
}

/// Same test with caller-chosen representatives for bases of `R_β` and
/// `R_{β−β₀}`. Each list must have exactly `dim R` elements of the right
/// degree whose classes are independent; the verdict is then independent of
/// the choice.
pub fn surjective_with_lifts(
    ring: &JacobianRing<'_>,
    beta0: &GradedDegree,
    lifts_beta: &[CoxPolynomial],
    lifts_diff: &[CoxPolynomial],
) -> Result<SurjectivityVerdict> {
    let beta = ring.polynomial().degree().clone();
    let diff = beta.sub(beta0);
    let target_degree = beta.add(&diff);

    let p_beta = ring.piece(&beta);
    let p_diff = ring.piece(&diff);
    let target = ring.piece(&target_degree);
    if lifts_beta.len() != p_beta.r_dimension() {
        return Err(Error::DimensionMismatch {
            expected: p_beta.r_dimension(),
            found: lifts_beta.len(),
        });
    }
    if lifts_diff.len() != p_diff.r_dimension() {
        return Err(Error::DimensionMismatch {
            expected: p_diff.r_dimension(),
            found: lifts_diff.len(),
        });
    }
    if lifts_beta.iter().any(|l| l.degree() != &beta)
        || lifts_diff.iter().any(|l| l.degree() != &diff)
    {
        return Err(Error::DegreeMismatch);
    }

    let pieces = [p_beta.summary(), p_diff.summary(), target.summary()];
    let dims = (pieces[0].dim_r, pieces[1].dim_r, pieces[2].dim_r);
    let target_needed = target.dim_s();
    if target_needed == 0 {
        return Ok(SurjectivityVerdict {
            surjective: true,
            dims,
            image_rank: 0,
            target_needed,
            pieces,
        });
    }

    let mut products: BTreeSet<Vec<BigRational>> = BTreeSet::new();
    for a in lifts_beta {
        for b in lifts_diff {
            let row = target.coordinates(&a.mul(b)).ok_or(Error::DegreeMismatch)?;
            if row.iter().any(|c| !c.is_zero()) {
                products.insert(row);
            }
        }
    }
    let mut stacked = RatMatrix::new(target_needed);
    for row in products {
        stacked.push_row(row)?;
    }
    for row in target.jacobian_rows.iter_rows() {
        stacked.push_row(row.to_vec())?;
    }
    let image_rank = stacked.rank();
    Ok(SurjectivityVerdict {
        surjective: image_rank == target_needed,
        dims,
        image_rank,
        target_needed,
        pieces,
    })
}
