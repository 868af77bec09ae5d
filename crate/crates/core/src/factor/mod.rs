//! k-factors, f-factors, deficiency and k-criticality, all reduced to
//! maximum matching.

pub mod gadget;
pub mod matching;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::oracle::{self, STPair};

pub use gadget::{bounded_gadget, gadget_reduce, BoundedGadget, TutteGadget};
pub use matching::{augment_matching, gallai_edmonds, max_matching, GallaiEdmonds, Matching};

pub const DEFAULT_MAX_VERTICES: usize = 2000;

/// Orders up to which a failing k-factor query (k >= 2) is certified by
/// the brute-force sweep.
pub const CERTIFICATE_SWEEP_MAX: usize = 12;

/// Larger orders seed a local search with every pair of at most this many
/// vertices.
pub const BARRIER_SEED_SIZE: usize = 2;

/// Largest order the local barrier search is attempted on.
pub const BARRIER_SEARCH_MAX: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("graph has {n} vertices; the solver is configured for at most {max}")]
    TooLarge { n: usize, max: usize },
    #[error("degree spec has {got} entries for a graph of order {expected}")]
    SpecLength { expected: usize, got: usize },
    #[error("vertex {vertex} has degree {degree} but must reach {target}")]
    InfeasibleAt {
        vertex: usize,
        degree: usize,
        target: usize,
    },
}

/// Target degree per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeSpec {
    targets: Vec<usize>,
}

impl DegreeSpec {
    pub fn new(targets: Vec<usize>) -> Self {
        DegreeSpec { targets }
    }

    pub fn constant(n: usize, k: usize) -> Self {
        DegreeSpec { targets: vec![k; n] }
    }

    /// Same spec with vertex `v` retargeted to `d`.
    pub fn with_target(mut self, v: usize, d: usize) -> Self {
        self.targets[v] = d;
        self
    }

    pub fn target(&self, v: usize) -> usize {
        self.targets[v]
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }

    pub fn total(&self) -> usize {
        self.targets.iter().sum()
    }

    fn check_len(&self, n: usize) -> Result<(), FactorError> {
        if self.targets.len() != n {
            return Err(FactorError::SpecLength {
                expected: n,
                got: self.targets.len(),
            });
        }
        Ok(())
    }

    pub fn is_satisfied_by(&self, n: usize, edges: &[(usize, usize)]) -> bool {
        let mut deg = vec![0; n];
        for &(u, v) in edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg == self.targets
    }
}

/// Outcome of a factor query. `deficiency` is `Σ f − 2ν_f`, where `ν_f`
/// is the largest edge count of a subgraph with `d_H <= f`; it is zero
/// exactly when the factor exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    pub exists: bool,
    pub factor_edges: Option<Vec<(usize, usize)>>,
    pub deficiency: usize,
    /// Pair with `δ(S, T) = −deficiency`, when one was computed.
    pub certificate: Option<STPair>,
}

/// Spanning subgraph meeting `k` everywhere except `degree` at `vertex`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NearFactor {
    pub vertex: usize,
    pub degree: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalReport {
    pub k: usize,
    pub critical: bool,
    pub has_k_factor: bool,
    /// `k·n` odd; otherwise no near-factor can exist.
    pub parity_feasible: bool,
    /// One entry per vertex checked, in vertex order, up to the first failure.
    pub witnesses: Vec<NearFactor>,
    /// First vertex with neither `k − 1` nor `k + 1` achievable.
    pub failed_vertex: Option<usize>,
}

/// Factor queries with a size cap. Holds no state between calls.
#[derive(Debug, Clone, Copy)]
pub struct FactorSolver {
    pub max_vertices: usize,
    /// Attach a Tutte certificate to failing k-factor queries when cheap.
    pub certify: bool,
}

impl Default for FactorSolver {
    fn default() -> Self {
        FactorSolver {
            max_vertices: DEFAULT_MAX_VERTICES,
            certify: true,
        }
    }
}

impl FactorSolver {
    fn check(&self, g: &Graph) -> Result<(), FactorError> {
        if g.order() > self.max_vertices {
            return Err(FactorError::TooLarge {
                n: g.order(),
                max: self.max_vertices,
            });
        }
        Ok(())
    }

    /// Edges of an f-factor, or `None`.
    pub fn f_factor(&self, g: &Graph, spec: &DegreeSpec) -> Result<Option<Vec<(usize, usize)>>, FactorError> {
        self.check(g)?;
        if spec.total() % 2 == 1 {
            spec.check_len(g.order())?;
            return Ok(None);
        }
        let gadget = match gadget_reduce(g, spec) {
            Ok(gadget) => gadget,
            Err(FactorError::InfeasibleAt { .. }) => return Ok(None),
            Err(e) => return Err(e),
        };
        let found = gadget.decode(&max_matching(&gadget.graph));
        if let Some(edges) = &found {
            assert!(spec.is_satisfied_by(g.order(), edges), "decoded factor violates its spec");
        }
        Ok(found)
    }

    /// A largest subgraph with `d_H(v) <= caps(v)`.
    pub fn max_bounded_subgraph(&self, g: &Graph, caps: &DegreeSpec) -> Result<Vec<(usize, usize)>, FactorError> {
        self.check(g)?;
        let gadget = bounded_gadget(g, caps)?;
        let h = gadget.decode(&max_matching(&gadget.graph));
        debug_assert!({
            let mut deg = vec![0; g.order()];
            for &(u, v) in &h {
                deg[u] += 1;
                deg[v] += 1;
            }
            (0..g.order()).all(|v| deg[v] <= caps.target(v))
        });
        Ok(h)
    }

    pub fn has_f_factor(&self, g: &Graph, spec: &DegreeSpec) -> Result<FactorReport, FactorError> {
        let factor = self.f_factor(g, spec)?;
        let h = self.max_bounded_subgraph(g, spec)?;
        let deficiency = spec.total() - 2 * h.len();
        assert_eq!(factor.is_some(), deficiency == 0, "factor and deficiency gadgets disagree");
        Ok(FactorReport {
            exists: factor.is_some(),
            factor_edges: factor,
            deficiency,
            certificate: None,
        })
    }

    pub fn k_factor(&self, g: &Graph, k: usize) -> Result<FactorReport, FactorError> {
        let mut report = self.has_f_factor(g, &DegreeSpec::constant(g.order(), k))?;
        if !report.exists && self.certify {
            report.certificate = self.certificate(g, k);
        }
        Ok(report)
    }

    /// `k·n − 2ν_k`.
    pub fn deficiency(&self, g: &Graph, k: usize) -> Result<usize, FactorError> {
        let h = self.max_bounded_subgraph(g, &DegreeSpec::constant(g.order(), k))?;
        Ok(k * g.order() - 2 * h.len())
    }

    /// A spanning subgraph of maximum degree `k` attaining the deficiency.
    pub fn optimal_subgraph(&self, g: &Graph, k: usize) -> Result<Vec<(usize, usize)>, FactorError> {
        self.max_bounded_subgraph(g, &DegreeSpec::constant(g.order(), k))
    }

    /// Maximizing `(S, T)` for `−δ`: Gallai–Edmonds for `k = 1`, the
    /// brute-force sweep for small orders, and otherwise a local search that
    /// may come back empty.
    pub fn certificate(&self, g: &Graph, k: usize) -> Option<STPair> {
        if k == 1 {
            let ge = gallai_edmonds(g);
            return Some(STPair { s: ge.a, t: Vec::new() });
        }
        if g.order() <= CERTIFICATE_SWEEP_MAX {
            return oracle::brute_force_deficiency_capped(g, k, CERTIFICATE_SWEEP_MAX)
                .ok()
                .map(|(_, pair)| pair);
        }
        if g.order() > BARRIER_SEARCH_MAX {
            return None;
        }
        let def = self.deficiency(g, k).ok()?;
        local_barrier(g, k, def)
    }

    pub fn critical(&self, g: &Graph, k: usize) -> Result<CriticalReport, FactorError> {
        self.check(g)?;
        let n = g.order();
        let has_k_factor = self.f_factor(g, &DegreeSpec::constant(n, k))?.is_some();
        let parity_feasible = k >= 1 && (k * n) % 2 == 1;
        let mut report = CriticalReport {
            k,
            critical: false,
            has_k_factor,
            parity_feasible,
            witnesses: Vec::new(),
            failed_vertex: None,
        };
        if has_k_factor || !parity_feasible {
            return Ok(report);
        }
        // k - 1 and k + 1 share a parity, so both are candidates
        for x in 0..n {
            let mut found = None;
            for d in [k - 1, k + 1] {
                let spec = DegreeSpec::constant(n, k).with_target(x, d);
                if let Some(edges) = self.f_factor(g, &spec)? {
                    found = Some(NearFactor { vertex: x, degree: d, edges });
                    break;
                }
            }
            match found {
                Some(w) => report.witnesses.push(w),
                None => {
                    report.failed_vertex = Some(x);
                    return Ok(report);
                }
            }
        }
        report.critical = n > 0;
        Ok(report)
    }

    pub fn is_k_critical(&self, g: &Graph, k: usize) -> Result<bool, FactorError> {
        Ok(self.critical(g, k)?.critical)
    }
}

pub fn has_f_factor(g: &Graph, spec: &DegreeSpec) -> Result<FactorReport, FactorError> {
    FactorSolver::default().has_f_factor(g, spec)
}

pub fn k_factor(g: &Graph, k: usize) -> Result<FactorReport, FactorError> {
    FactorSolver::default().k_factor(g, k)
}

pub fn deficiency(g: &Graph, k: usize) -> Result<usize, FactorError> {
    FactorSolver::default().deficiency(g, k)
}

pub fn is_k_critical(g: &Graph, k: usize) -> Result<bool, FactorError> {
    FactorSolver::default().is_k_critical(g, k)
}

fn neg_delta(g: &Graph, k: usize, side: &[u8]) -> i64 {
    let pick = |w: u8| (0..side.len()).filter(|&v| side[v] == w).collect::<Vec<_>>();
    let pair = STPair { s: pick(1), t: pick(2) };
    -oracle::delta(g, k, &pair).expect("sides are disjoint").delta
}

/// Best-improvement moves over vertex sides (0 outside, 1 in S, 2 in T),
/// started from every pair with at most `BARRIER_SEED_SIZE` vertices.
fn local_barrier(g: &Graph, k: usize, def: usize) -> Option<STPair> {
    let n = g.order();
    let target = def as i64;
    let mut seeds: Vec<Vec<u8>> = vec![vec![0; n]];
    for size in 1..=BARRIER_SEED_SIZE {
        let mut next = Vec::new();
        for seed in seeds.iter().filter(|s| s.iter().filter(|&&x| x != 0).count() == size - 1) {
            let last = seed.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
            for v in last..n {
                for w in [1, 2] {
                    let mut s = seed.clone();
                    s[v] = w;
                    next.push(s);
                }
            }
        }
        seeds.extend(next);
    }
    seeds.into_iter().find_map(|mut side| {
        let mut value = neg_delta(g, k, &side);
        loop {
            if value == target {
                let pick = |w: u8| (0..n).filter(|&v| side[v] == w).collect::<Vec<_>>();
                return Some(STPair { s: pick(1), t: pick(2) });
            }
            let mut best = (value, None);
            for v in 0..n {
                for w in 0..3u8 {
                    if w != side[v] {
                        let old = std::mem::replace(&mut side[v], w);
                        let x = neg_delta(g, k, &side);
                        side[v] = old;
                        if x > best.0 {
                            best = (x, Some((v, w)));
                        }
                    }
                }
            }
            let (x, Some((v, w))) = best else {
                return None;
            };
            side[v] = w;
            value = x;
        }
    })
}
