//! The certification pipeline: polytope, fan, toric data, sampled sections,
//! surjectivity test.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use qfact_core::{
    anticanonical_degree, build_toric_data, convex_hull, homogenize, is_simplicial,
    multiplication_surjective, newton_polytope, normal_fan, picard_number, polytope_degree, Error,
    GradedDegree, LatticePoint, LatticePolytope, LaurentPolynomial, SurjectivityVerdict, ToricData,
};

use crate::sample::sample_attempt;

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_SAMPLES: u32 = 5;
pub const DEFAULT_COEFF_BOUND: u32 = 10;

pub const CITATION_NOETHER_LEFSCHETZ: &str = "Noether-Lefschetz criterion for hypersurfaces in \
    simplicial toric 3-folds: if R(f)_b (x) R(f)_(b-b0) -> R(f)_(2b-b0) is surjective, a very \
    general X_F has the Picard number of the ambient toric variety";
pub const CITATION_Q_FACTORIAL: &str = "Q-factoriality criterion for d = 3: under the same \
    surjectivity, A_F = C[M]/(F) is Q-factorial for very general F with Newton polytope D";
pub const CITATION_DOLGACHEV: &str = "Dolgachev: for d >= 4 variables, A_F is factorial for \
    generic F";

/// Where the polynomial comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// An explicit `F`; its Newton polytope is `Δ`.
    Laurent(LaurentPolynomial),
    /// Vertices (or any spanning points) of `Δ`; coefficients are sampled.
    Polytope(Vec<LatticePoint>),
    /// Input in a number of variables other than three.
    UnsupportedDimension(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificationRequest {
    pub source: Source,
    pub seed: u64,
    pub samples: u32,
    pub coeff_bound: u32,
    pub use_input_coeffs: bool,
}

impl CertificationRequest {
    pub fn new(source: Source) -> Self {
        CertificationRequest {
            source,
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            coeff_bound: DEFAULT_COEFF_BOUND,
            use_input_coeffs: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    CertifiedQFactorial,
    Inconclusive,
    Unsupported,
    Error,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CertifiedQFactorial => "CERTIFIED_Q_FACTORIAL",
            Verdict::Inconclusive => "INCONCLUSIVE",
            Verdict::Unsupported => "UNSUPPORTED",
            Verdict::Error => "ERROR",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::CertifiedQFactorial => 0,
            Verdict::Inconclusive => 2,
            Verdict::Unsupported => 3,
            Verdict::Error => 1,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricSummary {
    pub rays: Vec<[i64; 3]>,
    pub maximal_cones: Vec<Vec<usize>>,
    pub smith_diagonal: Vec<BigInt>,
    pub torsion: Vec<i64>,
    pub picard_number: usize,
    pub variable_degrees: Vec<GradedDegree>,
}

impl ToricSummary {
    fn new(t: &ToricData) -> Self {
        ToricSummary {
            rays: t.rays().to_vec(),
            maximal_cones: t.maximal_cones().to_vec(),
            smith_diagonal: t.smith_diagonal().to_vec(),
            torsion: t.torsion().to_vec(),
            picard_number: picard_number(t),
            variable_degrees: t.variable_degrees().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSummary {
    pub beta: GradedDegree,
    pub beta0: GradedDegree,
    pub beta_minus_beta0: GradedDegree,
    pub two_beta_minus_beta0: GradedDegree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleSummary {
    pub seed: u64,
    pub coeff_bound: u32,
    /// True when the supplied coefficients were tested instead of samples.
    pub input_coefficients: bool,
    /// Index of the reported attempt.
    pub attempt: u32,
    pub attempts_run: u32,
    pub coefficients: Vec<([i64; 3], BigRational)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificationReport {
    pub verdict: Verdict,
    pub reason: String,
    pub toric: Option<ToricSummary>,
    pub degrees: Option<DegreeSummary>,
    pub dimensions: Option<SurjectivityVerdict>,
    pub sample: Option<SampleSummary>,
    pub citations: Vec<&'static str>,
}

impl CertificationReport {
    fn bare(verdict: Verdict, reason: String) -> Self {
        CertificationReport {
            verdict,
            reason,
            toric: None,
            degrees: None,
            dimensions: None,
            sample: None,
            citations: Vec::new(),
        }
    }

    pub fn error(reason: impl Into<String>) -> Self {
        Self::bare(Verdict::Error, reason.into())
    }

    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code()
    }
}

fn unsupported_dimension(d: usize) -> CertificationReport {
    if d >= 4 {
        let mut r = CertificationReport::bare(
            Verdict::Unsupported,
            format!(
                "input has dimension {d}: factorial by Dolgachev for generic F; \
                 no computation performed"
            ),
        );
        r.citations.push(CITATION_DOLGACHEV);
        r
    } else {
        CertificationReport::bare(
            Verdict::Unsupported,
            format!("Newton polytope has dimension {d}; only d = 3 is in scope"),
        )
    }
}

// early-exit paths carry the finished report
#[allow(clippy::result_large_err)]
fn hull(points: &[LatticePoint]) -> Result<LatticePolytope, CertificationReport> {
    match convex_hull(points) {
        Ok(p) => Ok(p),
        Err(Error::DegenerateHull { dimension }) => Err(unsupported_dimension(dimension)),
        Err(e) => Err(CertificationReport::error(format!("invalid polytope: {e}"))),
    }
}

const VERY_GENERAL_NOTE: &str = " The certificate is a statement about very general members \
    of the coefficient family of this Newton polytope; it transfers to the supplied F only if \
    F is itself very general, which is not checked.";

/// Runs the pipeline. Never panics on bad input; failures become `ERROR`
/// or `UNSUPPORTED` reports.
pub fn certify(req: &CertificationRequest) -> CertificationReport {
    match run(req) {
        Ok(r) | Err(r) => r,
    }
}

#[allow(clippy::result_large_err)]
fn run(req: &CertificationRequest) -> Result<CertificationReport, CertificationReport> {
    if req.samples == 0 {
        return Err(CertificationReport::error("samples must be at least 1"));
    }
    if req.coeff_bound == 0 {
        return Err(CertificationReport::error(
            "coefficient bound must be at least 1",
        ));
    }

    let (delta, input) = match &req.source {
        Source::UnsupportedDimension(d) => return Err(unsupported_dimension(*d)),
        Source::Laurent(f) => {
            if f.is_zero() {
                return Err(CertificationReport::error("polynomial has no terms"));
            }
            let delta = match newton_polytope(f) {
                Ok(p) => p,
                Err(Error::DegenerateHull { dimension }) => {
                    return Err(unsupported_dimension(dimension))
                }
                Err(e) => {
                    return Err(CertificationReport::error(format!(
                        "invalid polynomial: {e}"
                    )))
                }
            };
            (delta, Some(f))
        }
        Source::Polytope(points) => {
            if points.is_empty() {
                return Err(CertificationReport::error("polytope has no vertices"));
            }
            if req.use_input_coeffs {
                return Err(CertificationReport::error(
                    "input coefficients requested but the source is a polytope",
                ));
            }
            (hull(points)?, None)
        }
    };

    let fan = normal_fan(&delta);
    if !is_simplicial(&fan) {
        let bad = fan.maximal_cones.iter().filter(|c| c.len() != 3).count();
        return Err(CertificationReport::bare(
            Verdict::Unsupported,
            format!(
                "normal fan is not simplicial: {bad} of {} maximal cones are not spanned by \
                 3 independent rays",
                fan.maximal_cones.len()
            ),
        ));
    }
    let fail = |e: Error| CertificationReport::error(format!("toric data: {e}"));
    let t = build_toric_data(&fan).map_err(fail)?;
    let beta = polytope_degree(&t, &delta).map_err(fail)?;
    let beta0 = anticanonical_degree(&t);
    let diff = beta.sub(&beta0);
    let degrees = DegreeSummary {
        two_beta_minus_beta0: beta.add(&diff),
        beta: beta.clone(),
        beta0: beta0.clone(),
        beta_minus_beta0: diff,
    };

    let attempts = if req.use_input_coeffs { 1 } else { req.samples };
    let mut first: Option<(u32, LaurentPolynomial, SurjectivityVerdict)> = None;
    let mut witness = None;
    let mut run_count = 0;
    for a in 0..attempts {
        let f = match input {
            Some(f) if req.use_input_coeffs => f.clone(),
            _ => sample_attempt(&delta, req.seed, a.into(), req.coeff_bound),
        };
        let h = homogenize(&f, &delta, &t)
            .map_err(|e| CertificationReport::error(format!("homogenization: {e}")))?;
        let v = multiplication_surjective(&h, &t, &beta, &beta0)
            .map_err(|e| CertificationReport::error(format!("surjectivity test: {e}")))?;
        run_count = a + 1;
        if v.surjective {
            witness = Some((a, f, v));
            break;
        }
        if first.is_none() {
            first = Some((a, f, v));
        }
    }

    let (verdict, (attempt, f, v)) = match witness {
        Some(w) => (Verdict::CertifiedQFactorial, w),
        None => (
            Verdict::Inconclusive,
            first.expect("at least one attempt ran"),
        ),
    };
    let mut reason = match verdict {
        Verdict::CertifiedQFactorial => format!(
            "multiplication map R_b (x) R_(b-b0) -> R_(2b-b0) is surjective at attempt {attempt} \
             (image rank {} = dim S_(2b-b0)); surjectivity is an open condition on the \
             coefficients, so A_F is Q-factorial for very general F with this Newton polytope.",
            v.image_rank
        ),
        _ => format!(
            "multiplication map is not surjective in {run_count} attempt(s): image rank {} \
             (including J) of dim S_(2b-b0) = {}, image in R_(2b-b0) has rank {} of {}. The \
             criterion is sufficient only; this proves nothing about A_F.",
            v.image_rank,
            v.target_needed,
            v.quotient_image_rank(),
            v.dims.2
        ),
    };
    if input.is_some() {
        reason.push_str(VERY_GENERAL_NOTE);
        if !req.use_input_coeffs {
            reason.push_str(" The supplied coefficients were replaced by samples.");
        }
    }

    Ok(CertificationReport {
        verdict,
        reason,
        toric: Some(ToricSummary::new(&t)),
        degrees: Some(degrees),
        dimensions: Some(v),
        sample: Some(SampleSummary {
            seed: req.seed,
            coeff_bound: req.coeff_bound,
            input_coefficients: req.use_input_coeffs,
            attempt,
            attempts_run: run_count,
            coefficients: f.terms().iter().map(|(m, c)| (*m, c.clone())).collect(),
        }),
        citations: vec![CITATION_NOETHER_LEFSCHETZ, CITATION_Q_FACTORIAL],
    })
}
