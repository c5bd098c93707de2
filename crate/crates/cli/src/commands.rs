//! The four subcommands as pure functions from parsed arguments to an exit
//! code plus the text destined for stdout (or `--output`) and stderr.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use cdgraph::closed_forms::sweep_points;
use cdgraph::graph::distances;
use cdgraph::spectral::{
    char_poly_with, distance_laplacian, distance_laplacian_spectrum, laplacian, laplacian_spectrum,
    spanning_tree_count,
};
use cdgraph::{full_report, verify_sweep, Exec, Family, FamilyParams};

use crate::graph_file::{split_labels, Format, GraphFile};
use crate::report::{
    coeff_strings, to_json, CheckDocument, CheckResultDoc, ErrorDocument, InputEcho, PointDoc,
    SpectrumDoc, SpectrumDocument, SpectrumResultDoc, SweepSummary, VerifyDocument, WitnessDoc,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
    pub message: String,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            code: EXIT_OK,
            output,
            message: String::new(),
        }
    }

    pub fn usage(message: impl fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            output: String::new(),
            message: format!("error: {message}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Laplacian,
    DistanceLaplacian,
}

impl Which {
    pub fn name(self) -> &'static str {
        match self {
            Which::Laplacian => "laplacian",
            Which::DistanceLaplacian => "distance-laplacian",
        }
    }
}

/// An inclusive range written `a..b`, or a single value `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    pub fn range(self) -> RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid range `{s}`: expected `a..b` or a single integer"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b)?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("invalid range `{s}`: start exceeds end"));
        }
        Ok(Span { lo, hi })
    }
}

fn attach_labels(file: GraphFile, labels: Option<&str>) -> Result<GraphFile, Outcome> {
    match labels {
        None => Ok(file),
        Some(text) => file.with_labels(split_labels(text)).map_err(Outcome::usage),
    }
}

pub fn construct(
    family: Family,
    n: usize,
    n1: Option<usize>,
    format: Format,
    labels: Option<&str>,
) -> Outcome {
    let n1 = match (family, n1) {
        (Family::CocktailParty, None) => 0,
        (Family::CocktailParty, Some(_)) => return Outcome::usage("cocktail takes no --n1"),
        (_, Some(k)) => k,
        (_, None) => return Outcome::usage(format!("{family} needs --n1")),
    };
    let params = match FamilyParams::new(family, n, n1) {
        Ok(p) => p,
        Err(e) => return Outcome::usage(e),
    };
    match attach_labels(GraphFile::new(params.build()), labels) {
        Ok(file) => Outcome::ok(file.render(format)),
        Err(o) => o,
    }
}

/// Parses graph text, reporting failures as usage errors.
pub fn load(text: &str, labels: Option<&str>) -> Result<GraphFile, Outcome> {
    let file = GraphFile::parse(text).map_err(Outcome::usage)?;
    attach_labels(file, labels)
}

pub fn check(file: &GraphFile) -> Outcome {
    let report = full_report(&file.graph);
    let doc = CheckDocument {
        command: "check",
        input: InputEcho::from(file),
        result: CheckResultDoc::from(&report),
    };
    let passes = report.passes_necessary_conditions();
    let failures: Vec<&str> = report.failures().into_iter().map(|k| k.name()).collect();
    Outcome {
        code: if passes { EXIT_OK } else { EXIT_DOMAIN },
        output: to_json(&doc),
        message: if passes {
            format!("check: {}", report.annotation())
        } else {
            format!(
                "check: {}; failed {}",
                report.annotation(),
                failures.join(", ")
            )
        },
    }
}

pub fn spectrum(file: &GraphFile, which: Which, exec: Exec) -> Outcome {
    let g = &file.graph;
    let (matrix, spectrum, trees) = match which {
        Which::Laplacian => {
            let s = laplacian_spectrum(g, exec);
            (laplacian(g), s, Some(spanning_tree_count(g).to_string()))
        }
        Which::DistanceLaplacian => {
            let m = match distance_laplacian(g) {
                Ok(m) => m,
                Err(e) => {
                    let witness = distances(g)
                        .separated_pair()
                        .map(|(u, v)| WitnessDoc::Pairs {
                            pairs: vec![[u, v]],
                        });
                    let doc = ErrorDocument {
                        command: "spectrum",
                        error: e.to_string(),
                        witness,
                    };
                    return Outcome {
                        code: EXIT_DOMAIN,
                        output: to_json(&doc),
                        message: format!("error: {e}"),
                    };
                }
            };
            (m, distance_laplacian_spectrum(g, exec), None)
        }
    };
    let spectrum = match spectrum {
        Ok(s) => s,
        Err(e) => {
            return Outcome {
                code: EXIT_DOMAIN,
                output: String::new(),
                message: format!("error: {e}"),
            }
        }
    };
    let doc = SpectrumDocument {
        command: "spectrum",
        which: which.name(),
        input: InputEcho::from(file),
        result: SpectrumResultDoc {
            char_poly: coeff_strings(&char_poly_with(&matrix, exec)),
            spectrum: SpectrumDoc::from(&spectrum),
            spanning_trees: trees,
        },
    };
    Outcome {
        code: EXIT_OK,
        output: to_json(&doc),
        message: String::new(),
    }
}

pub fn verify(family: Family, n: Span, n1: Option<Span>, exec: Exec) -> Outcome {
    if family == Family::CocktailParty && n1.is_some() {
        return Outcome::usage("cocktail takes no --n1");
    }
    let points = sweep_points(family, n.range(), n1.map(Span::range));
    if points.is_empty() {
        return Outcome::usage(format!(
            "no admissible {family} points in the requested ranges"
        ));
    }
    let reports = verify_sweep(&points, exec);
    let matching = reports.iter().filter(|r| r.all_match()).count();
    let printed = reports.iter().filter(|r| !r.tree_match_printed).count();
    let summary = SweepSummary {
        points: reports.len(),
        matching,
        mismatches: reports.len() - matching,
        printed_tree_discrepancies: printed,
    };
    let message = format!(
        "verify {family}: {} points, {} match, {} mismatches; printed tree count differs at {} points",
        summary.points, summary.matching, summary.mismatches, summary.printed_tree_discrepancies
    );
    let code = if summary.mismatches == 0 {
        EXIT_OK
    } else {
        EXIT_DOMAIN
    };
    let doc = VerifyDocument {
        command: "verify",
        family: family.name(),
        n_range: [n.lo, n.hi],
        n1_range: n1.map(|s| [s.lo, s.hi]),
        summary,
        points: reports.iter().map(PointDoc::from).collect(),
    };
    Outcome {
        code,
        output: to_json(&doc),
        message,
    }
}
