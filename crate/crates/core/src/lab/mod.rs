//! Corpora and verification campaigns for the spectral factor conditions.

pub mod campaign;
pub mod corpus;
pub mod dense;
pub mod hypothesis;
pub mod interlace;

use thiserror::Error;

use crate::factor::FactorError;
use crate::graph::GraphError;
use crate::oracle::OracleError;
use crate::spectral::SpectralError;

pub use campaign::{
    compare_class_minima, cubic_ordering, verify_even_regular, verify_odd_regular, verify_rho1_minimum,
    verify_rho2_minimum, CampaignReport, Check, Counterexample, CubicOrdering, Margins, MinimumComparison, Variant,
};
pub use corpus::{
    enumerate_connected, enumerate_connected_regular, enumerate_graphs, pendant_blob_graph, random_class_member,
    random_regular, ClassFamily,
};
pub use dense::{check_dense_subgraphs, pieces_are_valid, DenseOutcome, DenseReport};
pub use interlace::{quotient_interlacing, random_disjoint_subsets, random_partition, subgraph_interlacing, InterlaceCheck};
pub use hypothesis::{classify_hypothesis, Condition, HypothesisProfile, Parity};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LabError {
    #[error("{0}")]
    Domain(String),
    #[error("gave up generating a {what} after {attempts} attempts")]
    Generation { what: String, attempts: usize },
    #[error("order {n} exceeds the enumeration limit {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
