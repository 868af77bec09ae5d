//! Regular factors of regular graphs and the adjacency-eigenvalue
//! conditions that force them.
//!
//! The crate is split into:
//! - [`graph`]: simple graphs, graph6 I/O, canonical forms and the extremal constructions,
//! - [`spectral`]: Jacobi eigenvalues, quotient matrices and the thresholds `rho1`/`rho2`,
//! - [`factor`]: blossom matching, f-factors, deficiency and k-criticality,
//! - [`oracle`]: brute-force Tutte functional used as ground truth,
//! - [`lab`]: corpora and verification campaigns.

pub mod factor;
pub mod graph;
pub mod lab;
pub mod oracle;
pub mod spectral;

#[cfg(test)]
mod testutil;

pub use graph::{Graph, GraphError};
