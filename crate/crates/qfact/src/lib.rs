//! Input formats, sampling, the certification pipeline and report output
//! on top of `qfact-core`.

pub mod certify;
pub mod formats;
pub mod report;
pub mod sample;

pub use certify::{
    certify, CertificationReport, CertificationRequest, DegreeSummary, SampleSummary, Source,
    ToricSummary, Verdict,
};
pub use report::{emit_report, to_json, to_text, Format};
pub use sample::{sample_attempt, sample_coefficients};
