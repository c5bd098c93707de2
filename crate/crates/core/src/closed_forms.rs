//! Closed-form Laplacian spectra, distance-Laplacian spectra and spanning
//! tree counts for the three families, checked against the exact pipeline.
//!
//! Two tree counts are carried per family. The *printed* count is the
//! product of the nonzero Laplacian eigenvalues, the form in which these
//! counts are usually quoted; the *corrected* count divides that by `n`, as
//! the Matrix-Tree theorem requires. Only the corrected count matches the determinant.

use std::ops::RangeInclusive;

use num_bigint::BigUint;

use crate::constructors::{Family, FamilyParams};
use crate::exec::Exec;
use crate::graph::{diameter, Distance};
use crate::spectral::{
    distance_laplacian_spectrum, dl_spectrum_via_transfer, laplacian_spectrum, spanning_tree_count,
    spanning_tree_count_from_spectrum, Spectrum,
};

/// Closed-form expectations for one family point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub params: FamilyParams,
    pub l_spectrum: Spectrum,
    pub dl_spectrum: Spectrum,
    pub tree_count_corrected: BigUint,
    pub tree_count_as_printed: BigUint,
}

fn pow(base: usize, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}

/// Cocktail party graph on `n` vertices.
pub fn predict_cocktail(n: usize) -> Result<Prediction, crate::ParamError> {
    let params = FamilyParams::cocktail(n)?;
    let (n_i, half) = (n as i64, n / 2);
    let printed = pow(n - 2, half) * pow(n, half - 1);
    Ok(Prediction {
        params,
        l_spectrum: Spectrum::from_pairs([(0, 1), (n_i - 2, half), (n_i, half - 1)]),
        dl_spectrum: Spectrum::from_pairs([(0, 1), (n_i + 2, half), (n_i, half - 1)]),
        tree_count_corrected: pow(n - 2, half) * pow(n, half - 2),
        tree_count_as_printed: printed,
    })
}

/// Cocktail party graph with `n1` antipodal edges filled in.
pub fn predict_supergraph(n: usize, n1: usize) -> Result<Prediction, crate::ParamError> {
    let params = FamilyParams::supergraph(n, n1)?;
    let (n_i, half) = (n as i64, n / 2);
    let low = half - n1;
    let high = half + n1 - 1;
    let printed = pow(n - 2, low) * pow(n, high);
    Ok(Prediction {
        params,
        l_spectrum: Spectrum::from_pairs([(0, 1), (n_i - 2, low), (n_i, high)]),
        dl_spectrum: Spectrum::from_pairs([(0, 1), (n_i + 2, low), (n_i, high)]),
        tree_count_corrected: &printed / BigUint::from(n),
        tree_count_as_printed: printed,
    })
}

/// `K_{n1}` and `K_{n-n1-1}` sharing a cut vertex.
pub fn predict_two_clique(n: usize, n1: usize) -> Result<Prediction, crate::ParamError> {
    let params = FamilyParams::two_clique(n, n1)?;
    let (n_i, m_i) = (n as i64, n1 as i64);
    let small = n1 - 1;
    let large = n - n1 - 2;
    let printed = BigUint::from(n) * pow(n1 + 1, small) * pow(n - n1, large);
    Ok(Prediction {
        params,
        l_spectrum: Spectrum::from_pairs([
            (0, 1),
            (1, 1),
            (n_i, 1),
            (m_i + 1, small),
            (n_i - m_i, large),
        ]),
        dl_spectrum: Spectrum::from_pairs([
            (0, 1),
            (2 * n_i - 1, 1),
            (n_i, 1),
            (2 * n_i - (m_i + 1), small),
            (n_i + m_i, large),
        ]),
        tree_count_corrected: pow(n1 + 1, small) * pow(n - n1, large),
        tree_count_as_printed: printed,
    })
}

pub fn predict(params: FamilyParams) -> Prediction {
    let p = match params.family() {
        Family::CocktailParty => predict_cocktail(params.n()),
        Family::Supergraph => predict_supergraph(params.n(), params.n1()),
        Family::TwoClique => predict_two_clique(params.n(), params.n1()),
    };
    p.expect("params already validated")
}

/// One expected-vs-actual line of a verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Detail {
    pub field: &'static str,
    pub expected: String,
    pub actual: String,
    pub matches: bool,
}

/// Outcome of checking one family point against its closed forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub params: FamilyParams,
    pub prediction: Prediction,
    pub diameter: Distance,
    pub l_spectrum: Spectrum,
    /// `2n - λ` transfer of the computed Laplacian spectrum.
    pub dl_transfer: Option<Spectrum>,
    /// Distance-Laplacian spectrum from the exact characteristic polynomial.
    pub dl_direct: Option<Spectrum>,
    pub tree_count: BigUint,
    /// Computed Laplacian spectrum equals the prediction.
    pub l_match: bool,
    /// Transfer of the computed Laplacian spectrum equals the predicted
    /// distance-Laplacian spectrum.
    pub dl_match: bool,
    /// Direct distance-Laplacian spectrum equals both the prediction and the
    /// transfer. False when the diameter exceeds 2.
    pub dl_direct_match: bool,
    pub tree_match_corrected: bool,
    pub tree_match_printed: bool,
    /// Determinant count equals the eigenvalue-product count.
    pub tree_routes_agree: bool,
    pub details: Vec<Detail>,
}

impl VerificationReport {
    /// The condition a sweep needs for every point.
    pub fn all_match(&self) -> bool {
        self.l_match && self.dl_match && self.tree_match_corrected
    }
}

pub fn verify_family(params: FamilyParams) -> VerificationReport {
    verify_family_with(params, Exec::Sequential)
}

/// Builds the graph, runs the exact pipeline, and compares it with
/// [`predict`]. `exec` parallelizes the characteristic polynomial
/// evaluations.
pub fn verify_family_with(params: FamilyParams, exec: Exec) -> VerificationReport {
    let prediction = predict(params);
    let g = params.build();
    let n = g.vertex_count();
    let diam = diameter(&g).expect("families have at least three vertices");

    let l_spectrum =
        laplacian_spectrum(&g, exec).expect("trace identity holds for exact char polys");
    let dl_transfer = dl_spectrum_via_transfer(&l_spectrum, n).ok();
    let dl_direct = (diam <= Distance::Finite(2))
        .then(|| distance_laplacian_spectrum(&g, exec).ok())
        .flatten();
    let tree_count = spanning_tree_count(&g);
    let tree_from_spectrum = spanning_tree_count_from_spectrum(&l_spectrum, n).ok();

    let l_match = l_spectrum == prediction.l_spectrum;
    let dl_match = dl_transfer.as_ref() == Some(&prediction.dl_spectrum);
    let dl_direct_match = dl_direct
        .as_ref()
        .is_some_and(|d| *d == prediction.dl_spectrum && Some(d) == dl_transfer.as_ref());
    let tree_match_corrected = tree_count == prediction.tree_count_corrected;
    let tree_match_printed = tree_count == prediction.tree_count_as_printed;
    let tree_routes_agree = tree_from_spectrum.as_ref() == Some(&tree_count);

    let show = |s: &Option<Spectrum>| {
        s.as_ref()
            .map_or_else(|| "n/a".to_string(), ToString::to_string)
    };
    let details = vec![
        Detail {
            field: "l_spectrum",
            expected: prediction.l_spectrum.to_string(),
            actual: l_spectrum.to_string(),
            matches: l_match,
        },
        Detail {
            field: "dl_spectrum_transfer",
            expected: prediction.dl_spectrum.to_string(),
            actual: show(&dl_transfer),
            matches: dl_match,
        },
        Detail {
            field: "dl_spectrum_direct",
            expected: prediction.dl_spectrum.to_string(),
            actual: show(&dl_direct),
            matches: dl_direct_match,
        },
        Detail {
            field: "tree_count_corrected",
            expected: prediction.tree_count_corrected.to_string(),
            actual: tree_count.to_string(),
            matches: tree_match_corrected,
        },
        Detail {
            field: "tree_count_as_printed",
            expected: prediction.tree_count_as_printed.to_string(),
            actual: tree_count.to_string(),
            matches: tree_match_printed,
        },
        Detail {
            field: "tree_count_from_spectrum",
            expected: tree_count.to_string(),
            actual: tree_from_spectrum.map_or_else(|| "n/a".to_string(), |t| t.to_string()),
            matches: tree_routes_agree,
        },
    ];

    VerificationReport {
        params,
        prediction,
        diameter: diam,
        l_spectrum,
        dl_transfer,
        dl_direct,
        tree_count,
        l_match,
        dl_match,
        dl_direct_match,
        tree_match_corrected,
        tree_match_printed,
        tree_routes_agree,
        details,
    }
}

/// Verifies many points, one task per point. Output order follows input
/// order regardless of `exec`.
pub fn verify_sweep(points: &[FamilyParams], exec: Exec) -> Vec<VerificationReport> {
    exec.map(points, |&p| verify_family_with(p, Exec::Sequential))
}

/// Every admissible point of `family` with `n` in `n_range` and, when given,
/// `n1` in `n1_range`, ordered by `(n, n1)`.
pub fn sweep_points(
    family: Family,
    n_range: RangeInclusive<usize>,
    n1_range: Option<RangeInclusive<usize>>,
) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for n in n_range {
        let Some(admissible) = family.n1_range(n) else {
            continue;
        };
        for n1 in admissible {
            if family != Family::CocktailParty {
                if let Some(r) = &n1_range {
                    if !r.contains(&n1) {
                        continue;
                    }
                }
            }
            out.push(FamilyParams::new(family, n, n1).expect("admissible"));
        }
    }
    out
}

/// Ratio between the printed and corrected tree counts; `n` for every
/// family.
pub fn printed_over_corrected(p: &Prediction) -> Option<BigUint> {
    if p.tree_count_corrected == BigUint::default() {
        return None;
    }
    let q = &p.tree_count_as_printed / &p.tree_count_corrected;
    (&q * &p.tree_count_corrected == p.tree_count_as_printed).then_some(q)
}
