//! Quotient matrices of ordered vertex partitions.

use serde::Serialize;

use super::{symmetric_eigenvalues, SpectralError, Spectrum};
use crate::graph::Graph;

/// `entry(i, j) = e(V_i, V_j) / |V_i|`, with `2 e(V_i)` on the diagonal,
/// i.e. the average number of neighbors a vertex of part `i` has in part `j`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuotientMatrix {
    parts: Vec<Vec<usize>>,
    /// `counts[i][j]`: edge endpoints from part `i` into part `j`
    /// (`e(V_i, V_j)` off the diagonal, `2 e(V_i)` on it).
    counts: Vec<Vec<usize>>,
}

impl QuotientMatrix {
    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn dim(&self) -> usize {
        self.parts.len()
    }

    pub fn counts(&self) -> &[Vec<usize>] {
        &self.counts
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.counts[i][j] as f64 / self.parts[i].len() as f64
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Eigenvalues, through the symmetric similar matrix
    /// `e(V_i, V_j) / sqrt(|V_i| |V_j|)`.
    pub fn eigenvalues(&self) -> Spectrum {
        let s = self.dim();
        let mut a = vec![0.0; s * s];
        for i in 0..s {
            for j in 0..s {
                let scale = (self.parts[i].len() as f64 * self.parts[j].len() as f64).sqrt();
                a[i * s + j] = self.counts[i][j] as f64 / scale;
            }
        }
        symmetric_eigenvalues(a, s)
    }

    pub fn largest_eigenvalue(&self) -> f64 {
        self.eigenvalues().largest()
    }
}

fn part_index(n: usize, parts: &[Vec<usize>]) -> Result<Vec<usize>, SpectralError> {
    let mut index = vec![usize::MAX; n];
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(SpectralError::EmptyPart(i));
        }
        for &v in part {
            if v >= n {
                return Err(SpectralError::VertexOutOfRange { vertex: v, n });
            }
            if index[v] != usize::MAX {
                return Err(SpectralError::RepeatedVertex(v));
            }
            index[v] = i;
        }
    }
    if let Some(v) = index.iter().position(|&i| i == usize::MAX) {
        return Err(SpectralError::Uncovered(v));
    }
    Ok(index)
}

/// Per-vertex neighbor counts into each part.
fn neighbor_profile(g: &Graph, index: &[usize], s: usize) -> Vec<Vec<usize>> {
    (0..g.order())
        .map(|u| {
            let mut row = vec![0; s];
            for &v in g.neighbors(u) {
                row[index[v]] += 1;
            }
            row
        })
        .collect()
}

pub fn quotient_matrix(g: &Graph, parts: &[Vec<usize>]) -> Result<QuotientMatrix, SpectralError> {
    let index = part_index(g.order(), parts)?;
    let s = parts.len();
    let profile = neighbor_profile(g, &index, s);
    let mut counts = vec![vec![0; s]; s];
    for (u, row) in profile.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            counts[index[u]][j] += c;
        }
    }
    Ok(QuotientMatrix {
        parts: parts.to_vec(),
        counts,
    })
}

/// True iff every vertex of part `i` has the same number of neighbors in
/// part `j`, for all `i`, `j`.
pub fn is_equitable(g: &Graph, parts: &[Vec<usize>]) -> Result<bool, SpectralError> {
    let index = part_index(g.order(), parts)?;
    let profile = neighbor_profile(g, &index, parts.len());
    Ok(parts
        .iter()
        .all(|part| part.iter().all(|&v| profile[v] == profile[part[0]])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build, complete, cycle, petersen, ConstructionSpec};
    use crate::spectral::{eigenvalues, rho1, rho2};
    use crate::testutil::arb_graph;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn quotient_of(spec: ConstructionSpec) -> (Graph, QuotientMatrix) {
        let g = build(&spec).unwrap();
        let parts = spec.quotient_partition().unwrap();
        let q = quotient_matrix(&g, &parts).unwrap();
        (g, q)
    }

    #[test]
    fn even_extremal_quotient() {
        let (g, q) = quotient_of(ConstructionSpec::ExtremalEven { r: 4, m: 2 });
        assert_eq!(q.rows(), vec![vec![2.0, 2.0], vec![3.0, 0.0]]);
        assert!(is_equitable(&g, q.parts()).unwrap());
        for r in 4..=12usize {
            for m in (2..r + 1).step_by(2) {
                let (_, q) = quotient_of(ConstructionSpec::ExtremalEven { r, m });
                let (r, m) = (r as f64, m as f64);
                assert_eq!(q.rows(), vec![vec![r - m, m], vec![r + 1.0 - m, m - 2.0]]);
            }
        }
    }

    #[test]
    fn odd_m1_quotient() {
        let (g, q) = quotient_of(ConstructionSpec::ExtremalOddM1 { r: 3 });
        assert_eq!(
            q.rows(),
            vec![vec![0.0, 0.0, 2.0], vec![0.0, 1.0, 2.0], vec![1.0, 2.0, 0.0]]
        );
        assert!(is_equitable(&g, q.parts()).unwrap());
    }

    #[test]
    fn m2_case_quotients() {
        for r in [6usize, 8, 10] {
            let rf = r as f64;
            let (g, q) = quotient_of(ConstructionSpec::ExtremalOddM2 { r });
            assert!(is_equitable(&g, q.parts()).unwrap());
            assert_eq!(
                q.rows(),
                vec![
                    vec![1.0, 1.0, rf - 2.0],
                    vec![1.0, 0.0, rf - 2.0],
                    vec![2.0, 2.0, rf - 4.0]
                ]
            );
            let (g, q) = quotient_of(ConstructionSpec::OddM2AdjacentPair { r });
            assert!(is_equitable(&g, q.parts()).unwrap());
            assert_eq!(
                q.rows(),
                vec![
                    vec![3.0, 1.0, rf - 4.0],
                    vec![2.0, 1.0, rf - 4.0],
                    vec![4.0, 2.0, rf - 6.0]
                ]
            );
            let (g, q) = quotient_of(ConstructionSpec::OddM2DegreeDrop { r });
            assert!(is_equitable(&g, q.parts()).unwrap());
            assert_eq!(
                q.rows(),
                vec![
                    vec![0.0, 0.0, rf - 2.0],
                    vec![0.0, 2.0, rf - 2.0],
                    vec![1.0, 3.0, rf - 4.0]
                ]
            );
        }
    }

    #[test]
    fn single_part_is_average_degree() {
        let g = cycle(5).disjoint_union(&complete(3));
        let q = quotient_matrix(&g, &[(0..8).collect()]).unwrap();
        assert_eq!(q.rows(), vec![vec![16.0 / 8.0]]);
        assert!(is_equitable(&petersen(), &[(0..10).collect()]).unwrap());
    }

    #[test]
    fn c4_vertex_split_is_not_equitable() {
        assert!(!is_equitable(&cycle(4), &[vec![0], vec![1, 2, 3]]).unwrap());
    }

    #[test]
    fn partition_errors() {
        let g = cycle(4);
        assert_eq!(
            quotient_matrix(&g, &[vec![0, 1], vec![]]),
            Err(SpectralError::EmptyPart(1))
        );
        assert_eq!(
            quotient_matrix(&g, &[vec![0, 1], vec![1, 2, 3]]),
            Err(SpectralError::RepeatedVertex(1))
        );
        assert_eq!(
            quotient_matrix(&g, &[vec![0, 1], vec![2]]),
            Err(SpectralError::Uncovered(3))
        );
        assert!(is_equitable(&g, &[vec![0, 1, 2, 9]]).is_err());
    }

    #[test]
    fn equitable_quotient_radius_is_graph_radius() {
        for r in 4..=12usize {
            for m in (2..=r + 1).step_by(2) {
                let (g, q) = quotient_of(ConstructionSpec::ExtremalEven { r, m });
                let lam = eigenvalues(&g).unwrap().largest();
                assert!((lam - q.largest_eigenvalue()).abs() < 1e-9);
                assert!((lam - rho1(r, m).unwrap().value).abs() < 1e-9);
            }
        }
        for r in 3..=11usize {
            for m in (3..=r + 1).filter(|m| m % 2 == r % 2) {
                let (g, q) = quotient_of(ConstructionSpec::ExtremalOddM3 { r, m, cycles: None });
                let lam = eigenvalues(&g).unwrap().largest();
                assert!((lam - q.largest_eigenvalue()).abs() < 1e-9);
                assert!((lam - rho2(r, m).unwrap().value).abs() < 1e-9);
            }
        }
    }

    /// Lift of a quotient eigenvector is an eigenvector of the graph.
    fn lift_residual(g: &Graph, q: &QuotientMatrix, mu: f64) -> f64 {
        // eigenvector of B via inverse-free null vector: solve (B - mu I) v = 0
        // by power iteration on B shifted to make mu dominant is fragile, so
        // take the null vector from the adjugate row of (B - mu I) for s <= 3.
        let b = q.rows();
        let s = q.dim();
        let m: Vec<Vec<f64>> = (0..s)
            .map(|i| (0..s).map(|j| b[i][j] - if i == j { mu } else { 0.0 }).collect())
            .collect();
        let v: Vec<f64> = match s {
            1 => vec![1.0],
            2 => vec![-m[0][1], m[0][0]],
            3 => {
                let cross = |a: &[f64], c: &[f64]| {
                    vec![
                        a[1] * c[2] - a[2] * c[1],
                        a[2] * c[0] - a[0] * c[2],
                        a[0] * c[1] - a[1] * c[0],
                    ]
                };
                let cands = [cross(&m[0], &m[1]), cross(&m[0], &m[2]), cross(&m[1], &m[2])];
                cands
                    .into_iter()
                    .max_by(|x, y| {
                        let nx: f64 = x.iter().map(|t| t * t).sum();
                        let ny: f64 = y.iter().map(|t| t * t).sum();
                        nx.total_cmp(&ny)
                    })
                    .unwrap()
            }
            _ => unimplemented!("lift check only for s <= 3"),
        };
        let mut x = vec![0.0; g.order()];
        for (i, part) in q.parts().iter().enumerate() {
            for &u in part {
                x[u] = v[i];
            }
        }
        let norm = x.iter().map(|t| t * t).sum::<f64>().sqrt();
        (0..g.order())
            .map(|u| {
                let ax: f64 = g.neighbors(u).iter().map(|&w| x[w]).sum();
                (ax - mu * x[u]).powi(2)
            })
            .sum::<f64>()
            .sqrt()
            / norm
    }

    #[test]
    fn equitable_quotient_eigenvalues_lift() {
        let specs = [
            ConstructionSpec::ExtremalEven { r: 7, m: 4 },
            ConstructionSpec::ExtremalOddM3 { r: 9, m: 5, cycles: None },
            ConstructionSpec::ExtremalOddM1 { r: 7 },
            ConstructionSpec::ExtremalOddM2 { r: 8 },
            ConstructionSpec::OddM2AdjacentPair { r: 8 },
            ConstructionSpec::OddM2DegreeDrop { r: 8 },
        ];
        for spec in specs {
            let (g, q) = quotient_of(spec.clone());
            assert!(is_equitable(&g, q.parts()).unwrap());
            let spectrum = eigenvalues(&g).unwrap();
            for &mu in q.eigenvalues().values() {
                assert!(lift_residual(&g, &q, mu) < 1e-9, "{spec:?} mu={mu}");
                assert!(spectrum.values().iter().any(|l| (l - mu).abs() < 1e-9));
            }
        }
    }

    proptest! {
        #[test]
        fn quotient_invariants_and_interlacing(g in arb_graph(12), seed in any::<u64>()) {
            prop_assume!(g.order() > 0);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let s = rng.gen_range(1..=g.order());
            let mut parts = vec![Vec::new(); s];
            for v in 0..g.order() {
                let i = if v < s { v } else { rng.gen_range(0..s) };
                parts[i].push(v);
            }
            let q = quotient_matrix(&g, &parts).unwrap();
            for i in 0..s {
                let avg: f64 = parts[i].iter().map(|&v| g.degree(v) as f64).sum::<f64>()
                    / parts[i].len() as f64;
                let row: f64 = (0..s).map(|j| q.entry(i, j)).sum();
                prop_assert!((row - avg).abs() < 1e-12);
                for j in 0..s {
                    let lhs = parts[i].len() as f64 * q.entry(i, j);
                    let rhs = parts[j].len() as f64 * q.entry(j, i);
                    prop_assert!((lhs - rhs).abs() < 1e-9);
                }
            }
            let graph = eigenvalues(&g).unwrap();
            let quot = q.eigenvalues();
            // full interlacing: lambda_i(G) >= mu_i >= lambda_{n-s+i}(G)
            for (i, mu) in quot.values().iter().enumerate() {
                prop_assert!(graph.values()[i] >= mu - 1e-9);
                prop_assert!(*mu >= graph.values()[g.order() - s + i] - 1e-9);
            }
        }
    }
}
