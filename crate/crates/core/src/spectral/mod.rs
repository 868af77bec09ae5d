//! Adjacency spectra, quotient matrices of vertex partitions, and the
//! spectral-radius thresholds for near-regular graph classes.

pub mod jacobi;
pub mod quotient;
pub mod threshold;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

pub use quotient::{is_equitable, quotient_matrix, QuotientMatrix};
pub use threshold::{
    cubic_family, largest_root, largest_root_in, rho1, rho2, Cubic, CubicKind, SpectralThreshold,
    ThresholdKind,
};

/// Default slack for strict threshold comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("partition has an empty part at index {0}")]
    EmptyPart(usize),
    #[error("vertex {0} appears in more than one part")]
    RepeatedVertex(usize),
    #[error("vertex {0} is not covered by the partition")]
    Uncovered(usize),
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("no real root of {poly} in [{lo}, {hi}]")]
    NoRootInBracket { poly: String, lo: f64, hi: f64 },
    #[error("{name}({r}, {m}): {reason}")]
    Domain {
        name: &'static str,
        r: usize,
        m: usize,
        reason: String,
    },
}

/// Adjacency eigenvalues sorted in non-increasing order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn from_unsorted(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `i`-th largest eigenvalue, 1-based (`lambda(1)` is the spectral radius).
    pub fn lambda(&self, i: usize) -> Option<f64> {
        i.checked_sub(1).and_then(|j| self.values.get(j).copied())
    }

    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    pub fn trace(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn second_moment(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }
}

pub fn eigenvalues(g: &Graph) -> Result<Spectrum, SpectralError> {
    let n = g.order();
    if n == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    Ok(symmetric_eigenvalues(g.adjacency_matrix(), n))
}

/// Eigenvalues of a symmetric row-major matrix.
pub fn symmetric_eigenvalues(a: Vec<f64>, n: usize) -> Spectrum {
    Spectrum::from_unsorted(jacobi::jacobi_eigenvalues(a, n).eigenvalues)
}

/// Spectral radius of `g`; 0 for the empty graph.
pub fn spectral_radius(g: &Graph) -> f64 {
    eigenvalues(g).map_or(0.0, |s| s.largest())
}
