//! Serializable report documents. Big integers are decimal strings; spectra
//! are `[[eigenvalue, multiplicity], ...]` in descending order.

use cdgraph::validity::{CheckResult, Witness};
use cdgraph::{CheckReport, Distance, IntPolynomial, Spectrum, VerificationReport};
use serde::Serialize;

use crate::graph_file::GraphFile;

#[derive(Debug, Serialize)]
pub struct InputEcho {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&GraphFile> for InputEcho {
    fn from(f: &GraphFile) -> Self {
        InputEcho {
            n: f.graph.vertex_count(),
            edges: f.graph.edges().map(|(u, v)| [u, v]).collect(),
            labels: f.labels.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SpectrumDoc {
    pub eigenvalues: Vec<(i64, usize)>,
    /// Ascending coefficients of the unfactored part, when there is one.
    pub residual: Option<Vec<String>>,
}

impl From<&Spectrum> for SpectrumDoc {
    fn from(s: &Spectrum) -> Self {
        SpectrumDoc {
            eigenvalues: s.pairs().to_vec(),
            residual: s.residual().map(coeff_strings),
        }
    }
}

pub fn coeff_strings(p: &IntPolynomial) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessDoc {
    Vertices {
        vertices: Vec<usize>,
    },
    Pairs {
        pairs: Vec<[usize; 2]>,
    },
    Components {
        components: Vec<Vec<usize>>,
    },
    Partition {
        first: Vec<usize>,
        second: Vec<usize>,
    },
}

impl From<&Witness> for WitnessDoc {
    fn from(w: &Witness) -> Self {
        match w {
            Witness::Vertices(v) => WitnessDoc::Vertices {
                vertices: v.clone(),
            },
            Witness::Pairs(p) => WitnessDoc::Pairs {
                pairs: p.iter().map(|&(u, v)| [u, v]).collect(),
            },
            Witness::Components(c) => WitnessDoc::Components {
                components: c.clone(),
            },
            Witness::Partition { first, second } => WitnessDoc::Partition {
                first: first.clone(),
                second: second.clone(),
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckDoc {
    pub name: &'static str,
    pub verdict: &'static str,
    pub necessary: bool,
    pub witness: Option<WitnessDoc>,
}

impl From<&CheckResult> for CheckDoc {
    fn from(c: &CheckResult) -> Self {
        CheckDoc {
            name: c.kind.name(),
            verdict: c.verdict.as_str(),
            necessary: c.kind.is_necessary(),
            witness: c.witness.as_ref().map(WitnessDoc::from),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckResultDoc {
    pub passes_necessary_conditions: bool,
    pub annotation: &'static str,
    pub failures: Vec<&'static str>,
    pub checks: Vec<CheckDoc>,
}

impl From<&CheckReport> for CheckResultDoc {
    fn from(r: &CheckReport) -> Self {
        CheckResultDoc {
            passes_necessary_conditions: r.passes_necessary_conditions(),
            annotation: r.annotation(),
            failures: r.failures().into_iter().map(|k| k.name()).collect(),
            checks: r.checks.iter().map(CheckDoc::from).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckDocument {
    pub command: &'static str,
    pub input: InputEcho,
    pub result: CheckResultDoc,
}

#[derive(Debug, Serialize)]
pub struct SpectrumResultDoc {
    pub char_poly: Vec<String>,
    pub spectrum: SpectrumDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spanning_trees: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct SpectrumDocument {
    pub command: &'static str,
    pub which: &'static str,
    pub input: InputEcho,
    pub result: SpectrumResultDoc,
}

#[derive(Debug, Serialize)]
pub struct ErrorDocument {
    pub command: &'static str,
    pub error: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

#[derive(Debug, Serialize)]
pub struct Compared<T> {
    pub expected: T,
    pub actual: Option<T>,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Serialize)]
pub struct TreeDoc {
    pub computed: String,
    pub corrected: String,
    pub printed: String,
    pub match_corrected: bool,
    pub match_printed: bool,
    pub from_spectrum_agrees: bool,
}

#[derive(Debug, Serialize)]
pub struct PointDoc {
    pub family: &'static str,
    pub n: usize,
    pub n1: usize,
    pub diameter: String,
    pub laplacian: Compared<Vec<(i64, usize)>>,
    pub distance_laplacian_transfer: Compared<Vec<(i64, usize)>>,
    pub distance_laplacian_direct: Compared<Vec<(i64, usize)>>,
    pub spanning_trees: TreeDoc,
    pub all_match: bool,
}

fn distance_text(d: Distance) -> String {
    d.to_string()
}

fn pairs(s: &Spectrum) -> Vec<(i64, usize)> {
    s.pairs().to_vec()
}

impl From<&VerificationReport> for PointDoc {
    fn from(r: &VerificationReport) -> Self {
        let p = &r.prediction;
        PointDoc {
            family: r.params.family().name(),
            n: r.params.n(),
            n1: r.params.n1(),
            diameter: distance_text(r.diameter),
            laplacian: Compared {
                expected: pairs(&p.l_spectrum),
                actual: Some(pairs(&r.l_spectrum)),
                matches: r.l_match,
            },
            distance_laplacian_transfer: Compared {
                expected: pairs(&p.dl_spectrum),
                actual: r.dl_transfer.as_ref().map(pairs),
                matches: r.dl_match,
            },
            distance_laplacian_direct: Compared {
                expected: pairs(&p.dl_spectrum),
                actual: r.dl_direct.as_ref().map(pairs),
                matches: r.dl_direct_match,
            },
            spanning_trees: TreeDoc {
                computed: r.tree_count.to_string(),
                corrected: p.tree_count_corrected.to_string(),
                printed: p.tree_count_as_printed.to_string(),
                match_corrected: r.tree_match_corrected,
                match_printed: r.tree_match_printed,
                from_spectrum_agrees: r.tree_routes_agree,
            },
            all_match: r.all_match(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SweepSummary {
    pub points: usize,
    pub matching: usize,
    pub mismatches: usize,
    /// Points where the determinant count differs from the printed
    /// closed-form value.
    pub printed_tree_discrepancies: usize,
}

#[derive(Debug, Serialize)]
pub struct VerifyDocument {
    pub command: &'static str,
    pub family: &'static str,
    pub n_range: [usize; 2],
    pub n1_range: Option<[usize; 2]>,
    pub summary: SweepSummary,
    pub points: Vec<PointDoc>,
}

/// Compact JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut out = serde_json::to_string(doc).expect("report types serialize");
    out.push('\n');
    out
}
