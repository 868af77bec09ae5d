//! Standard families and the extremal irregular graphs that attain the
//! spectral thresholds.
//!
//! Labeling is fixed: the first operand of a join or union keeps the low
//! labels, and every building block is labeled in its construction order.

use serde::{Deserialize, Serialize};

use super::{complete, cycle, matching, path, star, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum ConstructionSpec {
    CompleteK { n: usize },
    /// `t` disjoint edges.
    MatchingM { t: usize },
    /// Disjoint cycles with the given lengths (each at least 3).
    CycleUnionC { lengths: Vec<usize> },
    StarK1s { s: usize },
    PathP { n: usize },
    /// `K_{r+1-m}` joined with the complement of a perfect matching on `m`
    /// vertices.
    ExtremalEven { r: usize, m: usize },
    /// Complement of a perfect matching on `r+2-m` vertices joined with the
    /// complement of a union of cycles on `m` vertices. `cycles: None`
    /// means the single cycle `C_m`.
    ExtremalOddM3 { r: usize, m: usize, cycles: Option<Vec<usize>> },
    /// Complement of `K_{1,2} ∪ M_{(r-1)/2}`.
    ExtremalOddM1 { r: usize },
    /// Complement of `P_4 ∪ M_{(r-2)/2}`: two non-adjacent vertices of
    /// degree `r-1`.
    ExtremalOddM2 { r: usize },
    /// Complement of `2P_3 ∪ M_{(r-4)/2}`: two adjacent vertices of degree
    /// `r-1`. Not extremal.
    OddM2AdjacentPair { r: usize },
    /// Complement of `K_{1,3} ∪ M_{(r-2)/2}`: one vertex of degree `r-2`.
    /// Not extremal.
    OddM2DegreeDrop { r: usize },
}

fn domain(family: &'static str, reason: impl Into<String>) -> GraphError {
    GraphError::Domain {
        family,
        reason: reason.into(),
    }
}

impl ConstructionSpec {
    pub fn name(&self) -> &'static str {
        match self {
            ConstructionSpec::CompleteK { .. } => "complete",
            ConstructionSpec::MatchingM { .. } => "matching",
            ConstructionSpec::CycleUnionC { .. } => "cycle-union",
            ConstructionSpec::StarK1s { .. } => "star",
            ConstructionSpec::PathP { .. } => "path",
            ConstructionSpec::ExtremalEven { .. } => "extremal-even",
            ConstructionSpec::ExtremalOddM3 { .. } => "extremal-odd-m3",
            ConstructionSpec::ExtremalOddM1 { .. } => "extremal-odd-m1",
            ConstructionSpec::ExtremalOddM2 { .. } => "extremal-odd-m2",
            ConstructionSpec::OddM2AdjacentPair { .. } => "odd-m2-adjacent-pair",
            ConstructionSpec::OddM2DegreeDrop { .. } => "odd-m2-degree-drop",
        }
    }

    /// `(r, m)` for the extremal and auxiliary families.
    pub fn class_params(&self) -> Option<(usize, usize)> {
        match *self {
            ConstructionSpec::ExtremalEven { r, m } => Some((r, m)),
            ConstructionSpec::ExtremalOddM3 { r, m, .. } => Some((r, m)),
            ConstructionSpec::ExtremalOddM1 { r } => Some((r, 1)),
            ConstructionSpec::ExtremalOddM2 { r }
            | ConstructionSpec::OddM2AdjacentPair { r }
            | ConstructionSpec::OddM2DegreeDrop { r } => Some((r, 2)),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let name = self.name();
        match self {
            ConstructionSpec::CycleUnionC { lengths } => {
                if let Some(&l) = lengths.iter().find(|&&l| l < 3) {
                    return Err(domain(name, format!("cycle length {l} < 3")));
                }
            }
            ConstructionSpec::ExtremalEven { r, m } => {
                let (r, m) = (*r, *m);
                if r < 3 {
                    return Err(domain(name, format!("r = {r} must be at least 3")));
                }
                if m % 2 != 0 || m < 2 || m > r + 1 {
                    return Err(domain(name, format!("m = {m} must be even with 2 <= m <= r+1 = {}", r + 1)));
                }
            }
            ConstructionSpec::ExtremalOddM3 { r, m, cycles } => {
                let (r, m) = (*r, *m);
                if m < 3 || m > r + 1 || m % 2 != r % 2 {
                    return Err(domain(
                        name,
                        format!("need 3 <= m <= r+1 with m ≡ r (mod 2), got r = {r}, m = {m}"),
                    ));
                }
                if let Some(c) = cycles {
                    if c.iter().any(|&l| l < 3) || c.iter().sum::<usize>() != m {
                        return Err(domain(name, format!("cycle lengths {c:?} must be >= 3 and sum to m = {m}")));
                    }
                }
            }
            ConstructionSpec::ExtremalOddM1 { r } => {
                if *r < 3 || r % 2 == 0 {
                    return Err(domain(name, format!("r = {r} must be odd and at least 3")));
                }
            }
            ConstructionSpec::ExtremalOddM2 { r } | ConstructionSpec::OddM2DegreeDrop { r } => {
                if *r < 2 || r % 2 != 0 {
                    return Err(domain(name, format!("r = {r} must be even and at least 2")));
                }
            }
            ConstructionSpec::OddM2AdjacentPair { r } => {
                if *r < 4 || r % 2 != 0 {
                    return Err(domain(name, format!("r = {r} must be even and at least 4")));
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Ordered partition whose quotient matrix the extremal argument uses,
    /// or `None` for the plain families.
    ///
    /// * even family: (degree-`r` clique, matching complement)
    /// * odd `m >= 3`: (matching complement, cycle complement)
    /// * odd `m = 1`: (center of `K_{1,2}`, its endpoints, matching)
    /// * `P_4` case: (path endpoints, path internals, matching)
    /// * `2P_3` case: (four endpoints, two internals, matching)
    /// * `K_{1,3}` case: (center, three leaves, matching)
    ///
    /// Empty trailing parts (no matching vertices) are dropped.
    pub fn quotient_partition(&self) -> Option<Vec<Vec<usize>>> {
        let parts: Vec<Vec<usize>> = match *self {
            ConstructionSpec::ExtremalEven { r, m } => {
                let k = r + 1 - m;
                vec![(0..k).collect(), (k..k + m).collect()]
            }
            ConstructionSpec::ExtremalOddM3 { r, m, .. } => {
                let k = r + 2 - m;
                vec![(0..k).collect(), (k..k + m).collect()]
            }
            ConstructionSpec::ExtremalOddM1 { r } => vec![vec![0], vec![1, 2], (3..r + 2).collect()],
            ConstructionSpec::ExtremalOddM2 { r } => {
                vec![vec![0, 3], vec![1, 2], (4..r + 2).collect()]
            }
            ConstructionSpec::OddM2AdjacentPair { r } => {
                vec![vec![0, 2, 3, 5], vec![1, 4], (6..r + 2).collect()]
            }
            ConstructionSpec::OddM2DegreeDrop { r } => {
                vec![vec![0], vec![1, 2, 3], (4..r + 2).collect()]
            }
            _ => return None,
        };
        Some(parts.into_iter().filter(|p| !p.is_empty()).collect())
    }
}

pub fn build(spec: &ConstructionSpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let g = match spec {
        ConstructionSpec::CompleteK { n } => complete(*n),
        ConstructionSpec::MatchingM { t } => matching(*t),
        ConstructionSpec::CycleUnionC { lengths } => cycle_union(lengths),
        ConstructionSpec::StarK1s { s } => star(*s),
        ConstructionSpec::PathP { n } => path(*n),
        ConstructionSpec::ExtremalEven { r, m } => {
            complete(r + 1 - m).join(&matching(m / 2).complement())
        }
        ConstructionSpec::ExtremalOddM3 { r, m, cycles } => {
            let lengths = cycles.clone().unwrap_or_else(|| vec![*m]);
            matching((r + 2 - m) / 2)
                .complement()
                .join(&cycle_union(&lengths).complement())
        }
        ConstructionSpec::ExtremalOddM1 { r } => {
            star(2).disjoint_union(&matching((r - 1) / 2)).complement()
        }
        ConstructionSpec::ExtremalOddM2 { r } => {
            path(4).disjoint_union(&matching((r - 2) / 2)).complement()
        }
        ConstructionSpec::OddM2AdjacentPair { r } => path(3)
            .disjoint_union(&path(3))
            .disjoint_union(&matching((r - 4) / 2))
            .complement(),
        ConstructionSpec::OddM2DegreeDrop { r } => {
            star(3).disjoint_union(&matching((r - 2) / 2)).complement()
        }
    };
    Ok(g)
}

fn cycle_union(lengths: &[usize]) -> Graph {
    lengths
        .iter()
        .fold(Graph::empty(0), |acc, &l| acc.disjoint_union(&cycle(l)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn extremal_even_r4_m2() {
        let g = build(&ConstructionSpec::ExtremalEven { r: 4, m: 2 }).unwrap();
        assert_eq!((g.order(), g.size()), (5, 9));
        assert_eq!(g.degrees(), vec![4, 4, 4, 3, 3]);
    }

    #[test]
    fn extremal_odd_m1_r3() {
        let g = build(&ConstructionSpec::ExtremalOddM1 { r: 3 }).unwrap();
        assert_eq!((g.order(), g.size()), (5, 7));
        assert_eq!(sorted_degrees(&g), vec![2, 3, 3, 3, 3]);
        assert_eq!(g.degree(0), 2);
    }

    #[test]
    fn extremal_odd_m3_r5() {
        let g = build(&ConstructionSpec::ExtremalOddM3 { r: 5, m: 3, cycles: None }).unwrap();
        assert_eq!((g.order(), 2 * g.size()), (7, 32));
        assert_eq!(g.size(), 16);
    }

    #[test]
    fn m2_variants_have_forced_complements() {
        for r in [4, 6, 8] {
            let p4 = build(&ConstructionSpec::ExtremalOddM2 { r }).unwrap();
            let two_p3 = build(&ConstructionSpec::OddM2AdjacentPair { r }).unwrap();
            let k13 = build(&ConstructionSpec::OddM2DegreeDrop { r }).unwrap();
            for g in [&p4, &two_p3, &k13] {
                assert_eq!(g.order(), r + 2);
                assert_eq!(2 * g.size(), r * (r + 2) - 2);
                assert_eq!(g.max_degree(), r);
            }
            // deficient pair non-adjacent in the P4 case, adjacent in the 2P3 case
            assert!(!p4.has_edge(1, 2));
            assert!(two_p3.has_edge(1, 4));
            assert_eq!(k13.degree(0), r - 2);
        }
    }

    #[test]
    fn class_membership_of_every_extremal_family() {
        for r in 3..=12usize {
            let mut specs = Vec::new();
            for m in (2..=r + 1).step_by(2) {
                specs.push(ConstructionSpec::ExtremalEven { r, m });
            }
            for m in (3..=r + 1).filter(|m| m % 2 == r % 2) {
                specs.push(ConstructionSpec::ExtremalOddM3 { r, m, cycles: None });
            }
            if r % 2 == 1 {
                specs.push(ConstructionSpec::ExtremalOddM1 { r });
            } else {
                specs.push(ConstructionSpec::ExtremalOddM2 { r });
            }
            for spec in specs {
                let g = build(&spec).unwrap();
                let (_, m) = spec.class_params().unwrap();
                let n = g.order();
                let even_family = matches!(spec, ConstructionSpec::ExtremalEven { .. });
                // m = r+1 in the even family leaves no clique part: the
                // graph degenerates to the (r-1)-regular matching complement
                let degenerate = even_family && m == r + 1;
                assert!(g.is_connected(), "{spec:?}");
                assert_eq!(g.max_degree(), if degenerate { r - 1 } else { r }, "{spec:?}");
                assert_eq!(2 * g.size() + m, r * n, "{spec:?}");
                if even_family {
                    assert_eq!(n, r + 1);
                    assert_ne!(n % 2, r % 2);
                } else {
                    assert_eq!(n, r + 2);
                    assert_eq!(n % 2, r % 2);
                }
                assert_eq!(g.regular_degree().is_none(), !degenerate, "{spec:?}");
            }
        }
    }

    #[test]
    fn cycle_partition_choice_keeps_counts() {
        let a = build(&ConstructionSpec::ExtremalOddM3 { r: 8, m: 6, cycles: None }).unwrap();
        let b = build(&ConstructionSpec::ExtremalOddM3 { r: 8, m: 6, cycles: Some(vec![3, 3]) }).unwrap();
        assert_eq!(a.degrees(), b.degrees());
        assert_ne!(a, b);
    }

    #[test]
    fn domain_errors_name_the_family() {
        let err = build(&ConstructionSpec::ExtremalEven { r: 4, m: 3 }).unwrap_err();
        assert!(err.to_string().starts_with("extremal-even"));
        assert!(build(&ConstructionSpec::ExtremalEven { r: 4, m: 6 }).is_err());
        assert!(build(&ConstructionSpec::ExtremalOddM3 { r: 5, m: 4, cycles: None }).is_err());
        assert!(build(&ConstructionSpec::ExtremalOddM3 { r: 7, m: 5, cycles: Some(vec![2, 3]) }).is_err());
        assert!(build(&ConstructionSpec::ExtremalOddM1 { r: 4 }).is_err());
        assert!(build(&ConstructionSpec::ExtremalOddM2 { r: 5 }).is_err());
        assert!(build(&ConstructionSpec::CycleUnionC { lengths: vec![2] }).is_err());
    }

    #[test]
    fn labeling_is_reproducible() {
        let spec = ConstructionSpec::ExtremalOddM3 { r: 7, m: 5, cycles: None };
        assert_eq!(build(&spec).unwrap(), build(&spec).unwrap());
        let g = build(&ConstructionSpec::ExtremalEven { r: 6, m: 4 }).unwrap();
        // clique part first
        assert_eq!(&g.degrees()[..3], &[6, 6, 6]);
    }
}
