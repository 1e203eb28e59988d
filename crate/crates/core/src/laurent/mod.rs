//! Laurent polynomials on the torus and their homogenizations in the Cox ring.

mod parse;

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geom::{convex_hull, det3, LatticePoint, LatticePolytope};
use crate::toric::{facet_offsets, polytope_degree, CoxMonomial, GradedDegree, ToricData};

pub use parse::parse_laurent;

/// `F = Σ a_m t^m` over `m ∈ ℤ³`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<[i64; 3], BigRational>,
}

impl LaurentPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ([i64; 3], BigRational)>) -> Self {
        let mut p = Self::new();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: [i64; 3], c: BigRational) {
        let slot = self.terms.entry(m).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> &BTreeMap<[i64; 3], BigRational> {
        &self.terms
    }

    // `is_zero` is the emptiness test
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `supp(F)` in ascending lexicographic order.
    pub fn support(&self) -> Vec<LatticePoint> {
        self.terms.keys().copied().map(LatticePoint).collect()
    }

    pub fn add(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> LaurentPolynomial {
        if c.is_zero() {
            return Self::new();
        }
        LaurentPolynomial {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Substitutes exponents `m ↦ A·m` (a row-major integer matrix).
    pub fn transform_exponents(&self, a: &[[i64; 3]; 3]) -> LaurentPolynomial {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (LatticePoint(*m).transform(a).0, c.clone())),
        )
    }
}

/// Sparse element of the Cox ring with a declared class-group degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxPolynomial {
    terms: BTreeMap<CoxMonomial, BigRational>,
    degree: GradedDegree,
}

impl CoxPolynomial {
    pub fn zero(degree: GradedDegree) -> Self {
        CoxPolynomial {
            terms: BTreeMap::new(),
            degree,
        }
    }

    pub fn monomial(m: CoxMonomial, c: BigRational, t: &ToricData) -> Self {
        let mut p = Self::zero(t.degree_of_monomial(&m));
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial, checking every monomial has degree `degree`.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (CoxMonomial, BigRational)>,
        degree: GradedDegree,
        t: &ToricData,
    ) -> Result<Self> {
        let mut p = Self::zero(degree);
        for (m, c) in terms {
            if t.degree_of_monomial(&m) != p.degree {
                return Err(Error::DegreeMismatch);
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: CoxMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<CoxMonomial, BigRational> {
        &self.terms
    }

    pub fn degree(&self) -> &GradedDegree {
        &self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    // `is_zero` is the emptiness test
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &CoxPolynomial) -> Result<CoxPolynomial> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> CoxPolynomial {
        let mut out = CoxPolynomial::zero(self.degree.clone());
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        }
        out
    }

    pub fn mul(&self, other: &CoxPolynomial) -> CoxPolynomial {
        let mut out = CoxPolynomial::zero(self.degree.add(&other.degree));
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

/// `Δ_F`, the convex hull of the support.
pub fn newton_polytope(f: &LaurentPolynomial) -> Result<LatticePolytope> {
    if f.is_zero() {
        return Err(Error::EmptyPolynomial);
    }
    convex_hull(&f.support())
}

/// `c·t^m ↦ c·∏ zᵢ^{⟨m,vᵢ⟩ + aᵢ}` with `aᵢ` the facet offsets of `delta`.
///
/// The image is a section of the line bundle of `delta`, of degree
/// [`polytope_degree`]. Fails if some exponent of `f` lies outside `delta`.
pub fn homogenize(
    f: &LaurentPolynomial,
    delta: &LatticePolytope,
    t: &ToricData,
) -> Result<CoxPolynomial> {
    if f.is_zero() {
        return Err(Error::EmptyPolynomial);
    }
    let offsets = facet_offsets(t, delta)?;
    let degree = t.degree_of(&offsets);
    let mut out = CoxPolynomial::zero(degree);
    for (m, c) in &f.terms {
        let pairing = t.ray_pairing(m);
        let exps = pairing
            .iter()
            .zip(&offsets)
            .map(|(p, a)| u64::try_from(p + a).ok())
            .collect::<Option<Vec<u64>>>()
            .ok_or(Error::SupportOutsidePolytope { exponent: *m })?;
        out.add_term(CoxMonomial(exps), c.clone());
    }
    Ok(out)
}

/// Inverse of [`homogenize`] on its image.
pub fn dehomogenize(
    f: &CoxPolynomial,
    delta: &LatticePolytope,
    t: &ToricData,
) -> Result<LaurentPolynomial> {
    if &polytope_degree(t, delta)? != f.degree() {
        return Err(Error::DegreeMismatch);
    }
    let offsets = facet_offsets(t, delta)?;
    let rays = t.rays();
    // any maximal cone gives three independent rays
    let cone = t
        .maximal_cones()
        .iter()
        .find(|c| c.len() >= 3 && det3(&rays[c[0]], &rays[c[1]], &rays[c[2]]) != 0)
        .ok_or(Error::IncompleteFan)?;
    let (i, j, k) = (cone[0], cone[1], cone[2]);
    let (a, b, c) = (rays[i], rays[j], rays[k]);
    let det = BigInt::from(det3(&a, &b, &c));
    let cross = |p: &[i64; 3], q: &[i64; 3]| -> [BigInt; 3] {
        let (p, q) = (p.map(i128::from), q.map(i128::from));
        [
            (p[1] * q[2] - p[2] * q[1]).into(),
            (p[2] * q[0] - p[0] * q[2]).into(),
            (p[0] * q[1] - p[1] * q[0]).into(),
        ]
    };
    let cols = [cross(&b, &c), cross(&c, &a), cross(&a, &b)];

    let mut out = LaurentPolynomial::new();
    for (mono, coeff) in f.terms() {
        let e = mono.exponents();
        let rhs = [i, j, k].map(|r| BigInt::from(e[r] as i128 - offsets[r] as i128));
        let mut m = [0i64; 3];
        for r in 0..3 {
            let num: BigInt = (0..3).map(|s| &cols[s][r] * &rhs[s]).sum();
            let (q, rem) = num_integer::Integer::div_rem(&num, &det);
            if !rem.is_zero() {
                return Err(Error::InconsistentExponents);
            }
            m[r] = i64::try_from(q).map_err(|_| Error::InconsistentExponents)?;
        }
        let back = t.ray_pairing(&m);
        if back
            .iter()
            .zip(&offsets)
            .zip(e)
            .any(|((p, a), &x)| p + a != x as i64)
        {
            return Err(Error::InconsistentExponents);
        }
        out.add_term(m, coeff.clone());
    }
    Ok(out)
}

/// `∂f/∂zᵢ` for every variable, each of degree `deg f − deg zᵢ`.
pub fn partial_derivatives(f: &CoxPolynomial, t: &ToricData) -> Vec<CoxPolynomial> {
    (0..t.num_variables())
        .map(|i| {
            let mut d = CoxPolynomial::zero(f.degree.sub(&t.variable_degrees()[i]));
            for (m, c) in &f.terms {
                let e = m.exponents()[i];
                if e == 0 {
                    continue;
                }
                let mut exps = m.0.clone();
                exps[i] -= 1;
                d.add_term(CoxMonomial(exps), c * BigRational::from_integer(e.into()));
            }
            d
        })
        .collect()
}
