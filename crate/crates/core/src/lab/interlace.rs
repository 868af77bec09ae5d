//! Interlacing checks: eigenvalues of induced subgraphs and of quotient
//! matrices against those of the whole graph.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::graph::Graph;
use crate::spectral::{eigenvalues, quotient_matrix, DEFAULT_TOLERANCE};

use super::LabError;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InterlaceCheck {
    /// Eigenvalue of the whole graph on the left of the inequality.
    pub graph_value: f64,
    /// Bound it must dominate.
    pub bound: f64,
    pub holds: bool,
}

/// `λ_s(G) >= min λ₁(H_i)` for `s` vertex-disjoint induced subgraphs with no
/// edges between them, as for components of `G − X`. With edges between the
/// pieces the bound fails: the prism has `λ₂ = 1` yet splits into two triangles.
pub fn subgraph_interlacing(g: &Graph, pieces: &[Vec<usize>]) -> Result<InterlaceCheck, LabError> {
    if pieces.is_empty() || pieces.iter().any(|p| p.is_empty()) {
        return Err(LabError::Domain("need at least one nonempty piece".into()));
    }
    let mut used = vec![false; g.order()];
    for &v in pieces.iter().flatten() {
        if v >= g.order() || std::mem::replace(&mut used[v], true) {
            return Err(LabError::Domain(format!("vertex {v} is out of range or repeated")));
        }
    }
    let mut piece_of = vec![usize::MAX; g.order()];
    for (i, p) in pieces.iter().enumerate() {
        for &v in p {
            piece_of[v] = i;
        }
    }
    if let Some((u, v)) = g
        .edges()
        .into_iter()
        .find(|&(u, v)| piece_of[u] != usize::MAX && piece_of[v] != usize::MAX && piece_of[u] != piece_of[v])
    {
        return Err(LabError::Domain(format!("pieces are joined by the edge {u}-{v}")));
    }
    let mut bound = f64::INFINITY;
    for p in pieces {
        bound = bound.min(eigenvalues(&g.induced_subgraph(p)?)?.largest());
    }
    let graph_value = eigenvalues(g)?.lambda(pieces.len()).expect("pieces are disjoint");
    Ok(InterlaceCheck {
        graph_value,
        bound,
        holds: graph_value >= bound - DEFAULT_TOLERANCE,
    })
}

/// `λ₁(G) >= λ₁(Q)` for the quotient matrix `Q` of a partition.
pub fn quotient_interlacing(g: &Graph, parts: &[Vec<usize>]) -> Result<InterlaceCheck, LabError> {
    let q = quotient_matrix(g, parts)?;
    let bound = q.largest_eigenvalue();
    let graph_value = eigenvalues(g)?.largest();
    Ok(InterlaceCheck {
        graph_value,
        bound,
        holds: graph_value >= bound - DEFAULT_TOLERANCE,
    })
}

/// Random pairwise non-adjacent pieces: delete a random vertex set, then take
/// a random nonempty part of each of some surviving components.
pub fn random_disjoint_subsets<R: Rng>(g: &Graph, rng: &mut R) -> Vec<Vec<usize>> {
    let n = g.order();
    let p: f64 = rng.gen_range(0.0..0.6);
    let mut removed: Vec<bool> = (0..n).map(|_| rng.gen_bool(p)).collect();
    if removed.iter().all(|&x| x) {
        removed[rng.gen_range(0..n)] = false;
    }
    let mut comps = g.components_avoiding(&removed);
    comps.shuffle(rng);
    let s = rng.gen_range(1..=comps.len());
    comps
        .into_iter()
        .take(s)
        .map(|mut c| {
            c.shuffle(rng);
            let keep = rng.gen_range(1..=c.len());
            c.truncate(keep);
            c.sort_unstable();
            c
        })
        .collect()
}

/// Random partition of all `n` vertices into nonempty parts.
pub fn random_partition<R: Rng>(n: usize, rng: &mut R) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let s = rng.gen_range(1..=n);
    split(&order, s, rng)
}

/// Cut a sequence into `s` nonempty runs at random positions.
fn split<R: Rng>(items: &[usize], s: usize, rng: &mut R) -> Vec<Vec<usize>> {
    let mut cuts: Vec<usize> = (1..items.len()).collect();
    cuts.shuffle(rng);
    cuts.truncate(s - 1);
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(s);
    let mut start = 0;
    for c in cuts.into_iter().chain([items.len()]) {
        out.push(items[start..c].to_vec());
        start = c;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, petersen};
    use crate::lab::corpus::rng;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn two_triangles_in_a_prism() {
        // two triangles joined by a perfect matching; λ₂ = 1 < λ₁(K3)
        let mut g = cycle(3).disjoint_union(&cycle(3));
        for i in 0..3 {
            g.add_edge(i, i + 3).unwrap();
        }
        assert!(subgraph_interlacing(&g, &[vec![0, 1, 2], vec![3, 4, 5]]).is_err());
        assert!((eigenvalues(&g).unwrap().lambda(2).unwrap() - 1.0).abs() < 1e-9);
        assert!(subgraph_interlacing(&g, &[vec![0, 1], vec![5, 4]]).is_err());
        let c = subgraph_interlacing(&g, &[vec![0, 1], vec![5]]).unwrap();
        assert!(c.holds);
    }

    #[test]
    fn equitable_partition_is_tight() {
        let g = petersen();
        let parts = vec![(0..5).collect(), (5..10).collect()];
        let c = quotient_interlacing(&g, &parts).unwrap();
        assert!((c.graph_value - c.bound).abs() < 1e-9);
        assert!(quotient_interlacing(&complete(4), &[vec![0, 1]]).is_err());
    }

    #[test]
    fn rejects_overlap() {
        assert!(subgraph_interlacing(&complete(4), &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(subgraph_interlacing(&complete(4), &[]).is_err());
    }

    proptest! {
        #[test]
        fn random_subsets_interlace(g in arb_graph(10).prop_filter("nonempty", |g| g.order() > 0), seed in any::<u64>()) {
            let mut r = rng(seed);
            let pieces = random_disjoint_subsets(&g, &mut r);
            prop_assert!(subgraph_interlacing(&g, &pieces).unwrap().holds);
            let parts = random_partition(g.order(), &mut r);
            let covered: usize = parts.iter().map(Vec::len).sum();
            prop_assert_eq!(covered, g.order());
            prop_assert!(quotient_interlacing(&g, &parts).unwrap().holds);
        }
    }
}
