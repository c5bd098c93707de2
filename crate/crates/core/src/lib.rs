//! Exact spectral toolkit for character degree graphs of solvable groups.
//!
//! The crate builds three graph families (cocktail party graphs, their
//! supergraphs with added antipodal edges, and two cliques glued at a cut
//! vertex), computes Laplacian and distance-Laplacian spectra and spanning
//! tree counts in exact integer arithmetic, checks the known necessary
//! conditions for a graph to be a character degree graph, and compares the
//! computed spectra against closed-form predictions.
//!
//! Data-parallel work (interpolation points, family sweeps) runs on rayon
//! when the default `parallel` feature is on; see [`Exec`].

pub mod closed_forms;
pub mod constructors;
pub mod exec;
pub mod graph;
pub mod spectral;
pub mod validity;

pub use closed_forms::{
    predict, predict_cocktail, predict_supergraph, predict_two_clique, verify_family, verify_sweep,
    Prediction, VerificationReport,
};
pub use constructors::{Family, FamilyParams, ParamError};
pub use exec::Exec;
pub use graph::{Distance, Graph, GraphError};
pub use spectral::{IntMatrix, IntPolynomial, SpectralError, Spectrum};
pub use validity::{full_report, CheckReport, Verdict};
