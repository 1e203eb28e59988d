//! Deterministic JSON and text renderings of a [`CertificationReport`].

use std::fmt::Write as _;

use qfact_core::{GradedDegree, HilbertRow};
use serde::Serialize;

use crate::certify::CertificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

// Field order below is the output key order.

#[derive(Serialize)]
struct ReportView<'a> {
    verdict: &'static str,
    reason: &'a str,
    toric: Option<ToricView>,
    degrees: Option<DegreesView>,
    dimensions: Option<DimensionsView>,
    sample: Option<SampleView>,
    citations: &'a [&'static str],
}

#[derive(Serialize)]
struct DegreeView {
    free: Vec<i64>,
    torsion: Vec<i64>,
    display: String,
}

impl DegreeView {
    fn new(g: &GradedDegree) -> Self {
        DegreeView {
            free: g.free_part().to_vec(),
            torsion: g.torsion_part().to_vec(),
            display: g.to_string(),
        }
    }
}

#[derive(Serialize)]
struct ToricView {
    rays: Vec<[i64; 3]>,
    maximal_cones: Vec<Vec<usize>>,
    smith_diagonal: Vec<String>,
    torsion: Vec<i64>,
    picard_number: usize,
    variable_degrees: Vec<DegreeView>,
}

#[derive(Serialize)]
struct DegreesView {
    beta: DegreeView,
    beta0: DegreeView,
    beta_minus_beta0: DegreeView,
    two_beta_minus_beta0: DegreeView,
}

#[derive(Serialize)]
struct RowView {
    label: &'static str,
    degree: DegreeView,
    dim_s: usize,
    rank_j: usize,
    dim_r: usize,
}

impl RowView {
    fn new(label: &'static str, r: &HilbertRow) -> Self {
        RowView {
            label,
            degree: DegreeView::new(&r.degree),
            dim_s: r.dim_s,
            rank_j: r.rank_j,
            dim_r: r.dim_r,
        }
    }
}

#[derive(Serialize)]
struct DimensionsView {
    rows: Vec<RowView>,
    dims: [usize; 3],
    surjective: bool,
    image_rank: usize,
    target_needed: usize,
    quotient_image_rank: usize,
}

#[derive(Serialize)]
struct TermView {
    exponents: [i64; 3],
    coefficient: String,
}

#[derive(Serialize)]
struct SampleView {
    seed: u64,
    coeff_bound: u32,
    input_coefficients: bool,
    attempt: u32,
    attempts_run: u32,
    coefficients: Vec<TermView>,
}

const ROW_LABELS: [&str; 3] = ["beta", "beta_minus_beta0", "two_beta_minus_beta0"];

fn view(r: &CertificationReport) -> ReportView<'_> {
    ReportView {
        verdict: r.verdict.as_str(),
        reason: &r.reason,
        toric: r.toric.as_ref().map(|t| ToricView {
            rays: t.rays.clone(),
            maximal_cones: t.maximal_cones.clone(),
            smith_diagonal: t.smith_diagonal.iter().map(|d| d.to_string()).collect(),
            torsion: t.torsion.clone(),
            picard_number: t.picard_number,
            variable_degrees: t.variable_degrees.iter().map(DegreeView::new).collect(),
        }),
        degrees: r.degrees.as_ref().map(|d| DegreesView {
            beta: DegreeView::new(&d.beta),
            beta0: DegreeView::new(&d.beta0),
            beta_minus_beta0: DegreeView::new(&d.beta_minus_beta0),
            two_beta_minus_beta0: DegreeView::new(&d.two_beta_minus_beta0),
        }),
        dimensions: r.dimensions.as_ref().map(|v| DimensionsView {
            rows: ROW_LABELS
                .iter()
                .zip(&v.pieces)
                .map(|(l, row)| RowView::new(l, row))
                .collect(),
            dims: [v.dims.0, v.dims.1, v.dims.2],
            surjective: v.surjective,
            image_rank: v.image_rank,
            target_needed: v.target_needed,
            quotient_image_rank: v.quotient_image_rank(),
        }),
        sample: r.sample.as_ref().map(|s| SampleView {
            seed: s.seed,
            coeff_bound: s.coeff_bound,
            input_coefficients: s.input_coefficients,
            attempt: s.attempt,
            attempts_run: s.attempts_run,
            coefficients: s
                .coefficients
                .iter()
                .map(|(m, c)| TermView {
                    exponents: *m,
                    coefficient: c.to_string(),
                })
                .collect(),
        }),
        citations: &r.citations,
    }
}

pub fn to_json(r: &CertificationReport) -> String {
    let mut s = serde_json::to_string_pretty(&view(r)).expect("report views always serialize");
    s.push('\n');
    s
}

pub fn to_text(r: &CertificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "verdict: {}", r.verdict);
    let _ = writeln!(s, "reason:  {}", r.reason);
    if let Some(t) = &r.toric {
        let _ = writeln!(s, "toric:");
        let _ = writeln!(s, "  rays ({}):", t.rays.len());
        for (i, v) in t.rays.iter().enumerate() {
            let _ = writeln!(
                s,
                "    z{:<3} {:?}  deg {}",
                i + 1,
                v,
                t.variable_degrees[i]
            );
        }
        let diag: Vec<String> = t.smith_diagonal.iter().map(|d| d.to_string()).collect();
        let _ = writeln!(s, "  smith diagonal: [{}]", diag.join(", "));
        let _ = writeln!(s, "  torsion: {:?}", t.torsion);
        let _ = writeln!(s, "  picard number: {}", t.picard_number);
    }
    if let Some(d) = &r.degrees {
        let _ = writeln!(s, "degrees:");
        let _ = writeln!(s, "  b       = {}", d.beta);
        let _ = writeln!(s, "  b0      = {}", d.beta0);
        let _ = writeln!(s, "  b - b0  = {}", d.beta_minus_beta0);
        let _ = writeln!(s, "  2b - b0 = {}", d.two_beta_minus_beta0);
    }
    if let Some(v) = &r.dimensions {
        let _ = writeln!(s, "dimensions:");
        let labels: Vec<String> = ROW_LABELS
            .iter()
            .zip(&v.pieces)
            .map(|(l, row)| format!("{l} = {}", row.degree))
            .collect();
        let w = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
        let _ = writeln!(
            s,
            "  {:<w$} {:>7} {:>7} {:>7}",
            "degree", "dim S", "rank J", "dim R"
        );
        for (label, row) in labels.iter().zip(&v.pieces) {
            let _ = writeln!(
                s,
                "  {label:<w$} {:>7} {:>7} {:>7}",
                row.dim_s, row.rank_j, row.dim_r
            );
        }
        let _ = writeln!(
            s,
            "  image rank {} / {} (in R: {} / {})",
            v.image_rank,
            v.target_needed,
            v.quotient_image_rank(),
            v.dims.2
        );
    }
    if let Some(p) = &r.sample {
        let _ = writeln!(s, "sample:");
        let _ = writeln!(
            s,
            "  seed {}, bound {}, attempt {} of {} run, {} coefficients",
            p.seed,
            p.coeff_bound,
            p.attempt,
            p.attempts_run,
            if p.input_coefficients {
                "input"
            } else {
                "sampled"
            }
        );
        for (m, c) in &p.coefficients {
            let _ = writeln!(s, "    {:>8} * t^{m:?}", c.to_string());
        }
    }
    if !r.citations.is_empty() {
        let _ = writeln!(s, "citations:");
        for c in &r.citations {
            let _ = writeln!(s, "  - {c}");
        }
    }
    s
}

pub fn emit_report(r: &CertificationReport, format: Format) -> String {
    match format {
        Format::Json => to_json(r),
        Format::Text => to_text(r),
    }
}
