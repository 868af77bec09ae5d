//! Verification campaigns: minimum spectral radius over the near-regular
//! classes, and eigenvalue conditions forcing k-factors or k-criticality.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::factor::FactorSolver;
use crate::graph::{build, to_graph6, ConstructionSpec, Graph};
use crate::spectral::{
    cubic_family, eigenvalues, largest_root, rho1, rho2, CubicKind, SpectralThreshold, DEFAULT_TOLERANCE,
};

use super::corpus::{random_class_member, ClassFamily};
use super::hypothesis::{in_band, m0, m_star};
use super::LabError;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    /// The eigenvalue compared against the threshold.
    pub value: f64,
    pub reason: String,
}

/// Distance to the threshold of the closest graph on each side.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct Margins {
    /// Smallest `threshold − λ` among graphs meeting the eigenvalue hypothesis.
    pub closest_inside: Option<f64>,
    /// Smallest `λ − threshold` among graphs missing it.
    pub closest_outside: Option<f64>,
}

impl Margins {
    fn record(&mut self, value: f64, threshold: f64) {
        let d = threshold - value;
        let slot = if d > 0.0 {
            (&mut self.closest_inside, d)
        } else {
            (&mut self.closest_outside, 0.0 - d)
        };
        *slot.0 = Some(slot.0.map_or(slot.1, |x: f64| x.min(slot.1)));
    }
}

/// A side comparison reported alongside the main count.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub expected: f64,
    pub holds: bool,
}

/// The same sweep under another threshold choice.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Variant {
    pub name: String,
    pub threshold: f64,
    pub hypothesis_satisfying: usize,
    pub counterexamples: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignReport {
    pub campaign: String,
    pub params: BTreeMap<String, usize>,
    pub corpus: String,
    pub threshold: f64,
    pub tolerance: f64,
    pub graphs_tested: usize,
    /// Corpus graphs outside the campaign's graph class.
    pub skipped: usize,
    pub hypothesis_satisfying: usize,
    pub conclusion_satisfying: usize,
    pub counterexamples: Vec<Counterexample>,
    pub margins: Margins,
    pub checks: Vec<Check>,
    pub variants: Vec<Variant>,
}

impl CampaignReport {
    fn new(campaign: &str, params: &[(&str, usize)], corpus: String, threshold: f64, tolerance: f64) -> Self {
        CampaignReport {
            campaign: campaign.into(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            corpus,
            threshold,
            tolerance,
            graphs_tested: 0,
            skipped: 0,
            hypothesis_satisfying: 0,
            conclusion_satisfying: 0,
            counterexamples: Vec::new(),
            margins: Margins::default(),
            checks: Vec::new(),
            variants: Vec::new(),
        }
    }

    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn lambda1(g: &Graph) -> Result<f64, LabError> {
    Ok(eigenvalues(g)?.largest())
}

/// Extremal attainment plus a lower-bound sweep over random class members.
fn minimum_campaign(
    name: &str,
    threshold: SpectralThreshold,
    extremal: ConstructionSpec,
    family: ClassFamily,
    samples: usize,
    seed: u64,
    tolerance: f64,
    alternates: &[(&str, f64)],
) -> Result<CampaignReport, LabError> {
    let (r, m) = (threshold.r, threshold.m);
    let mut report = CampaignReport::new(
        name,
        &[("r", r), ("m", m), ("samples", samples)],
        format!("{} plus {samples} random class members (seed {seed})", extremal.name()),
        threshold.value,
        tolerance,
    );
    let ext = build(&extremal)?;
    let ext_l1 = lambda1(&ext)?;
    let attained = (ext_l1 - threshold.value).abs() <= tolerance;
    report.checks.push(Check {
        name: format!("lambda1({})", extremal.name()),
        value: ext_l1,
        expected: threshold.value,
        holds: attained,
    });
    report.graphs_tested += 1;
    report.hypothesis_satisfying += 1;
    if attained {
        report.conclusion_satisfying += 1;
    } else {
        report.counterexamples.push(Counterexample {
            graph6: to_graph6(&ext),
            value: ext_l1,
            reason: format!("extremal graph has lambda1 {ext_l1} instead of {}", threshold.value),
        });
    }

    let results: Vec<Result<(Graph, f64), LabError>> = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let g = random_class_member(r, m, family, seed.wrapping_add(i))?;
            let l1 = lambda1(&g)?;
            Ok((g, l1))
        })
        .collect();
    let mut values = vec![ext_l1];
    for res in results {
        let (g, l1) = res?;
        values.push(l1);
        report.graphs_tested += 1;
        report.hypothesis_satisfying += 1;
        report.margins.record(l1, threshold.value);
        if l1 >= threshold.value - tolerance {
            report.conclusion_satisfying += 1;
        } else {
            report.counterexamples.push(Counterexample {
                graph6: to_graph6(&g),
                value: l1,
                reason: format!("lambda1 below {}", threshold.value),
            });
        }
    }
    for &(name, t) in alternates {
        let attained = usize::from((ext_l1 - t).abs() > tolerance);
        report.variants.push(Variant {
            name: name.into(),
            threshold: t,
            hypothesis_satisfying: values.len(),
            counterexamples: attained + values[1..].iter().filter(|&&v| v < t - tolerance).count(),
        });
    }
    Ok(report)
}

/// Class with order parity different from `r`: minimum `λ₁` is `rho1`.
pub fn verify_rho1_minimum(r: usize, m: usize, samples: usize, seed: u64) -> Result<CampaignReport, LabError> {
    let t = rho1(r, m)?;
    minimum_campaign(
        "rho1-minimum",
        t,
        ConstructionSpec::ExtremalEven { r, m },
        ClassFamily::Even,
        samples,
        seed,
        DEFAULT_TOLERANCE,
        &[],
    )
}

/// Class with order parity equal to `r`: minimum `λ₁` is `rho2`.
pub fn verify_rho2_minimum(r: usize, m: usize, samples: usize, seed: u64) -> Result<CampaignReport, LabError> {
    let t = rho2(r, m)?;
    let extremal = match m {
        1 => ConstructionSpec::ExtremalOddM1 { r },
        2 => ConstructionSpec::ExtremalOddM2 { r },
        _ => ConstructionSpec::ExtremalOddM3 { r, m, cycles: None },
    };
    let alternates = if m == 2 {
        vec![("equitable-quotient cubic", largest_root(&cubic_family(CubicKind::F1Equitable, r)))]
    } else {
        Vec::new()
    };
    minimum_campaign("rho2-minimum", t, extremal, ClassFamily::Odd, samples, seed, DEFAULT_TOLERANCE, &alternates)
}

/// Whether a corpus graph meets the eigenvalue hypothesis, and its conclusion.
struct Outcome {
    graph6: String,
    in_class: bool,
    value: f64,
    conclusion: bool,
    which: &'static str,
}

fn sweep(report: &mut CampaignReport, outcomes: &[Outcome], tolerance: f64) {
    for o in outcomes {
        if !o.in_class {
            report.skipped += 1;
            continue;
        }
        report.graphs_tested += 1;
        report.margins.record(o.value, report.threshold);
        if o.value < report.threshold - tolerance {
            report.hypothesis_satisfying += 1;
            if o.conclusion {
                report.conclusion_satisfying += 1;
            } else {
                report.counterexamples.push(Counterexample {
                    graph6: o.graph6.clone(),
                    value: o.value,
                    reason: format!("{} below threshold but conclusion fails", o.which),
                });
            }
        }
    }
}

fn variant(name: &str, threshold: f64, outcomes: &[Outcome], tolerance: f64) -> Variant {
    let inside: Vec<&Outcome> = outcomes
        .iter()
        .filter(|o| o.in_class && o.value < threshold - tolerance)
        .collect();
    Variant {
        name: name.into(),
        threshold,
        hypothesis_satisfying: inside.len(),
        counterexamples: inside.iter().filter(|o| !o.conclusion).count(),
    }
}

/// `r` even, `k` odd, `m >= 3`, `r/m <= k <= r(1 − 1/m)`: with threshold
/// `rho1(r, m0 − 1)`, odd order and small `λ₂` force k-criticality, even
/// order and small `λ₃` force a k-factor.
pub fn verify_even_regular(
    r: usize,
    k: usize,
    m: usize,
    corpus_name: &str,
    corpus: &[Graph],
    tolerance: f64,
) -> Result<CampaignReport, LabError> {
    if r % 2 == 1 || k % 2 == 0 || m < 3 || !in_band(r, k, m) {
        return Err(LabError::Domain(format!(
            "need r even, k odd, m >= 3 and r/m <= k <= r(1 - 1/m); got r = {r}, k = {k}, m = {m}"
        )));
    }
    let mo = m0(m);
    let t1 = rho1(r, mo - 1)?;
    let t2 = rho2(r, mo - 1)?;
    let t2_equitable = if mo - 1 == 2 {
        largest_root(&cubic_family(CubicKind::F1Equitable, r))
    } else {
        t2.value
    };
    let mut report = CampaignReport::new(
        "even-regular",
        &[("r", r), ("k", k), ("m", m), ("m0", mo)],
        corpus_name.to_string(),
        t1.value,
        tolerance,
    );
    // the argument needs both class minima to be at least rho1(r, m0 - 1)
    report.checks.push(Check {
        name: format!("min(rho1, rho2)({r}, {}) equals rho1", mo - 1),
        value: t1.value.min(t2.value),
        expected: t1.value,
        holds: t2.value >= t1.value - tolerance,
    });
    report.checks.push(Check {
        name: format!("min(rho1, rho2 equitable)({r}, {}) equals rho1", mo - 1),
        value: t1.value.min(t2_equitable),
        expected: t1.value,
        holds: t2_equitable >= t1.value - tolerance,
    });

    let solver = FactorSolver { certify: false, ..FactorSolver::default() };
    let outcomes: Vec<Result<Outcome, LabError>> = corpus
        .par_iter()
        .map(|g| {
            let n = g.order();
            let in_class = g.regular_degree() == Some(r) && g.is_connected() && n >= 3;
            if !in_class {
                return Ok(Outcome { graph6: String::new(), in_class, value: 0.0, conclusion: true, which: "" });
            }
            let spec = eigenvalues(g)?;
            let (value, conclusion, which) = if n % 2 == 1 {
                (spec.lambda(2).unwrap(), solver.is_k_critical(g, k)?, "lambda2")
            } else {
                (spec.lambda(3).unwrap(), solver.k_factor(g, k)?.exists, "lambda3")
            };
            Ok(Outcome { graph6: to_graph6(g), in_class, value, conclusion, which })
        })
        .collect();
    let outcomes: Vec<Outcome> = outcomes.into_iter().collect::<Result<_, _>>()?;
    sweep(&mut report, &outcomes, tolerance);
    report.variants.push(variant("rho2(r, m0 - 1)", t2.value, &outcomes, tolerance));
    if t2_equitable != t2.value {
        report.variants.push(variant("rho2 equitable (r, m0 - 1)", t2_equitable, &outcomes, tolerance));
    }
    Ok(report)
}

/// `r` odd with either `k` even and `k <= r(1 − 1/m*)`, or `k` odd and
/// `r/m* <= k`: small `λ₃` forces a k-factor. The threshold is
/// `rho1(r, m − 1)` for odd `m` and `rho2(r, m − 1)` for even `m`.
pub fn verify_odd_regular(
    r: usize,
    k: usize,
    m: usize,
    corpus_name: &str,
    corpus: &[Graph],
    tolerance: f64,
) -> Result<CampaignReport, LabError> {
    let ms = m_star(m);
    let condition = r % 2 == 1
        && k >= 1
        && k < r
        && ((k % 2 == 0 && k * ms <= r * (ms - 1)) || (k % 2 == 1 && r <= k * ms));
    if !condition || m < 2 {
        return Err(LabError::Domain(format!(
            "need r odd, 1 <= k < r, m >= 2 and one of: k even with k <= r(1 - 1/m*), k odd with r/m* <= k; \
             got r = {r}, k = {k}, m = {m}"
        )));
    }
    let stated = if m % 2 == 1 { rho1(r, m - 1)? } else { rho2(r, m - 1)? };
    let mut report = CampaignReport::new(
        "odd-regular",
        &[("r", r), ("k", k), ("m", m), ("m_star", ms)],
        corpus_name.to_string(),
        stated.value,
        tolerance,
    );
    let solver = FactorSolver { certify: false, ..FactorSolver::default() };
    let outcomes: Vec<Result<Outcome, LabError>> = corpus
        .par_iter()
        .map(|g| {
            let in_class = g.regular_degree() == Some(r) && g.is_connected() && g.order() >= 3;
            if !in_class {
                return Ok(Outcome { graph6: String::new(), in_class, value: 0.0, conclusion: true, which: "" });
            }
            let value = eigenvalues(g)?.lambda(3).unwrap();
            let conclusion = solver.k_factor(g, k)?.exists;
            Ok(Outcome { graph6: to_graph6(g), in_class, value, conclusion, which: "lambda3" })
        })
        .collect();
    let outcomes: Vec<Outcome> = outcomes.into_iter().collect::<Result<_, _>>()?;
    sweep(&mut report, &outcomes, tolerance);
    // every threshold the surrounding argument mentions, where defined
    let mut candidates: Vec<(String, f64)> = Vec::new();
    for d in [1, 2] {
        if m > d {
            if let Ok(t) = rho1(r, m - d) {
                candidates.push((format!("rho1(r, m - {d})"), t.value));
            }
            if let Ok(t) = rho2(r, m - d) {
                candidates.push((format!("rho2(r, m - {d})"), t.value));
            }
        }
    }
    for (name, t) in candidates {
        report.variants.push(variant(&name, t, &outcomes, tolerance));
    }
    Ok(report)
}

/// `min(rho1(r, m0 − 1), rho2(r, m0 − 1)) == rho1(r, m0 − 1)` for even `r`
/// and odd `m0 >= 3` with `m0 − 1 <= r`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinimumComparison {
    pub r: usize,
    pub m0: usize,
    pub rho1: f64,
    pub rho2: f64,
    /// `rho2` with the `m = 2` cubic replaced by the equitable-quotient one.
    pub rho2_equitable: f64,
    pub holds: bool,
    pub holds_equitable: bool,
}

pub fn compare_class_minima(max_r: usize) -> Result<Vec<MinimumComparison>, LabError> {
    let mut rows = Vec::new();
    for r in (4..=max_r).step_by(2) {
        for mo in (3..=r + 1).step_by(2) {
            let a = rho1(r, mo - 1)?.value;
            let b = rho2(r, mo - 1)?.value;
            let b_eq = if mo - 1 == 2 {
                largest_root(&cubic_family(CubicKind::F1Equitable, r))
            } else {
                b
            };
            rows.push(MinimumComparison {
                r,
                m0: mo,
                rho1: a,
                rho2: b,
                rho2_equitable: b_eq,
                holds: b >= a,
                holds_equitable: b_eq >= a,
            });
        }
    }
    Ok(rows)
}

/// Greatest roots of the three `m = 2` cubics, in increasing order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CubicOrdering {
    pub r: usize,
    pub roots: Vec<(CubicKind, f64)>,
}

impl CubicOrdering {
    pub fn order(&self) -> Vec<CubicKind> {
        self.roots.iter().map(|&(k, _)| k).collect()
    }

    pub fn minimum(&self) -> CubicKind {
        self.roots[0].0
    }
}

pub fn cubic_ordering(r: usize) -> CubicOrdering {
    let mut roots: Vec<(CubicKind, f64)> = [CubicKind::F1, CubicKind::F2, CubicKind::F3]
        .into_iter()
        .map(|k| (k, largest_root(&cubic_family(k, r))))
        .collect();
    roots.sort_by(|a, b| a.1.total_cmp(&b.1));
    CubicOrdering { r, roots }
}
