//! Structural check: a connected r-regular graph with no k-factor that is
//! not k-critical contains `def + 1` vertex-disjoint induced subgraphs `H`
//! with `2e(H) >= r|H| − (m − 1)`, under the arithmetic side conditions.
//!
//! In an r-regular graph `2e(H) = r|H| − ∂H`, so the requirement reads
//! `∂H <= m − 1` where `∂H` counts edges leaving `H`.

use rayon::prelude::*;
use serde::Serialize;

use crate::factor::FactorSolver;
use crate::graph::Graph;
use crate::oracle::{self, STPair};

use super::hypothesis::{classify_hypothesis, Condition, Parity};
use super::LabError;

/// Largest order for the exhaustive subset search (2^n subsets).
pub const PACKING_MAX: usize = 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// k-odd components of `G − (S ∪ T)` for a deficiency-attaining pair.
    CertificateComponents,
    /// Exhaustive search over vertex subsets.
    SubsetPacking,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum DenseOutcome {
    Inapplicable {
        reason: String,
    },
    Verified {
        deficiency: usize,
        method: Method,
        certificate: Option<STPair>,
        subgraphs: Vec<Vec<usize>>,
    },
    /// Certificate route failed and the graph is too large to search.
    Undetermined {
        deficiency: usize,
        reason: String,
    },
    /// Exhaustive search found fewer than `def + 1` disjoint pieces.
    Violated {
        deficiency: usize,
        best_packing: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DenseReport {
    pub k: usize,
    pub m: usize,
    pub r: Option<usize>,
    pub condition: Option<Condition>,
    #[serde(flatten)]
    pub outcome: DenseOutcome,
}

impl DenseReport {
    pub fn is_applicable(&self) -> bool {
        !matches!(self.outcome, DenseOutcome::Inapplicable { .. })
    }

    pub fn is_failure(&self) -> bool {
        matches!(
            self.outcome,
            DenseOutcome::Violated { .. } | DenseOutcome::Undetermined { .. }
        )
    }
}

fn boundary(g: &Graph, inside: &[bool], vs: &[usize]) -> usize {
    vs.iter()
        .map(|&x| g.neighbors(x).iter().filter(|&&y| !inside[y]).count())
        .sum()
}

/// k-odd components of `G − (S ∪ T)` with at most `m − 1` leaving edges.
fn qualifying_components(g: &Graph, k: usize, m: usize, pair: &STPair) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut removed = vec![false; n];
    let mut in_t = vec![false; n];
    for &v in &pair.s {
        removed[v] = true;
    }
    for &v in &pair.t {
        removed[v] = true;
        in_t[v] = true;
    }
    g.components_avoiding(&removed)
        .into_iter()
        .filter(|c| {
            let mut inside = vec![false; n];
            for &x in c {
                inside[x] = true;
            }
            let to_t: usize = c
                .iter()
                .map(|&x| g.neighbors(x).iter().filter(|&&y| in_t[y]).count())
                .sum();
            (to_t + k * c.len()) % 2 == 1 && boundary(g, &inside, c) < m
        })
        .collect()
}

/// Inclusion-minimal nonempty subsets with boundary `< m`.
fn minimal_dense_sets(g: &Graph, m: usize) -> Vec<u32> {
    let n = g.order();
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |a, &w| a | 1 << w))
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut sets: Vec<u32> = (1..=full)
        .into_par_iter()
        .filter(|&h| {
            let mut b = 0usize;
            let mut x = h;
            while x != 0 {
                let v = x.trailing_zeros() as usize;
                x &= x - 1;
                b += (adj[v] & !h).count_ones() as usize;
                if b >= m {
                    return false;
                }
            }
            true
        })
        .collect();
    sets.sort_by_key(|h| (h.count_ones(), *h));
    let mut minimal: Vec<u32> = Vec::new();
    for h in sets {
        if !minimal.iter().any(|&s| s & h == s) {
            minimal.push(h);
        }
    }
    minimal
}

/// Largest number of pairwise disjoint sets, stopping once `goal` is met.
fn pack(sets: &[u32], goal: usize) -> Vec<u32> {
    fn go(sets: &[u32], from: usize, used: u32, chosen: &mut Vec<u32>, best: &mut Vec<u32>, goal: usize) {
        if chosen.len() > best.len() {
            *best = chosen.clone();
        }
        if best.len() >= goal {
            return;
        }
        for i in from..sets.len() {
            if sets[i] & used == 0 {
                chosen.push(sets[i]);
                go(sets, i + 1, used | sets[i], chosen, best, goal);
                chosen.pop();
                if best.len() >= goal {
                    return;
                }
            }
        }
    }
    let mut best = Vec::new();
    go(sets, 0, 0, &mut Vec::new(), &mut best, goal);
    best
}

fn unpack(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn check_dense_subgraphs(g: &Graph, k: usize, m: usize) -> Result<DenseReport, LabError> {
    check_dense_subgraphs_with(g, k, m, &FactorSolver::default())
}

pub fn check_dense_subgraphs_with(
    g: &Graph,
    k: usize,
    m: usize,
    solver: &FactorSolver,
) -> Result<DenseReport, LabError> {
    let mut report = DenseReport {
        k,
        m,
        r: g.regular_degree(),
        condition: None,
        outcome: DenseOutcome::Inapplicable { reason: String::new() },
    };
    let inapplicable = |mut report: DenseReport, reason: &str| {
        report.outcome = DenseOutcome::Inapplicable { reason: reason.into() };
        Ok(report)
    };
    if !g.is_connected() {
        return inapplicable(report, "graph is disconnected");
    }
    let Some(r) = report.r else {
        return inapplicable(report, "graph is not regular");
    };
    let Ok(profile) = classify_hypothesis(r, k, m, Parity::of(g.order())) else {
        return inapplicable(report, "need 1 <= k < r and m >= 1");
    };
    report.condition = profile.condition;
    if profile.condition.is_none() {
        return inapplicable(report, "no side condition holds");
    }
    let critical = solver.critical(g, k)?;
    if critical.has_k_factor {
        return inapplicable(report, "graph has a k-factor");
    }
    if critical.critical {
        return inapplicable(report, "graph is k-critical");
    }
    let deficiency = solver.deficiency(g, k)?;
    let goal = deficiency + 1;

    let pairs = if g.order() <= oracle::DEFAULT_CAP {
        oracle::maximizing_pairs(g, k, oracle::DEFAULT_CAP)?.1
    } else {
        solver.certificate(g, k).into_iter().collect()
    };
    for pair in pairs {
        let comps = qualifying_components(g, k, m, &pair);
        if comps.len() >= goal {
            report.outcome = DenseOutcome::Verified {
                deficiency,
                method: Method::CertificateComponents,
                certificate: Some(pair),
                subgraphs: comps.into_iter().take(goal).collect(),
            };
            return Ok(report);
        }
    }

    if g.order() > PACKING_MAX {
        report.outcome = DenseOutcome::Undetermined {
            deficiency,
            reason: format!("no certificate sufficed and n = {} exceeds the search limit", g.order()),
        };
        return Ok(report);
    }
    let best = pack(&minimal_dense_sets(g, m), goal);
    report.outcome = if best.len() >= goal {
        DenseOutcome::Verified {
            deficiency,
            method: Method::SubsetPacking,
            certificate: None,
            subgraphs: best.into_iter().map(unpack).collect(),
        }
    } else {
        DenseOutcome::Violated {
            deficiency,
            best_packing: best.len(),
        }
    };
    Ok(report)
}

/// Re-verify a claimed set of pieces: disjoint, nonempty, each dense.
pub fn pieces_are_valid(g: &Graph, m: usize, pieces: &[Vec<usize>]) -> bool {
    let Some(r) = g.regular_degree() else {
        return false;
    };
    let mut used = vec![false; g.order()];
    pieces.iter().all(|p| {
        let fresh = !p.is_empty() && p.iter().all(|&v| !std::mem::replace(&mut used[v], true));
        fresh && 2 * g.edges_within(p) + m > r * p.len()
    })
}
