//! Simple undirected graphs on vertices `0..n`.

pub mod canon;
pub mod construct;
pub mod graph6;

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use construct::{build, ConstructionSpec};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} listed twice")]
    RepeatedVertex(usize),
    #[error("{family}: {reason}")]
    Domain { family: &'static str, reason: String },
}

/// A simple undirected graph with sorted adjacency lists.
///
/// Loops and parallel edges are rejected on insertion, so every value of this
/// type is a simple graph.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.max_degree();
        (self.min_degree() == d).then_some(d)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Number of edges with one end in `a` and the other in `b`.
    ///
    /// The membership masks must have length `n`; `a` and `b` are expected
    /// to be disjoint.
    pub fn edges_between(&self, a: &[bool], b: &[bool]) -> usize {
        (0..self.order())
            .filter(|&u| a[u])
            .map(|u| self.adj[u].iter().filter(|&&v| b[v]).count())
            .sum()
    }

    /// Dense 0/1 adjacency matrix in row-major order.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.order();
        let mut a = vec![0.0; n * n];
        for (u, nb) in self.adj.iter().enumerate() {
            for &v in nb {
                a[u * n + v] = 1.0;
            }
        }
        a
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut adj = vec![Vec::new(); n];
        for (u, row) in adj.iter_mut().enumerate() {
            let nb = &self.adj[u];
            row.extend((0..n).filter(|&v| v != u && nb.binary_search(&v).is_err()));
        }
        Graph { adj }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nb| nb.iter().map(|&v| v + shift).collect()),
        );
        Graph { adj }
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let (n1, n2) = (self.order(), other.order());
        let mut adj = Vec::with_capacity(n1 + n2);
        for nb in &self.adj {
            let mut row = nb.clone();
            row.extend(n1..n1 + n2);
            adj.push(row);
        }
        for nb in &other.adj {
            let mut row: Vec<usize> = (0..n1).collect();
            row.extend(nb.iter().map(|&v| v + n1));
            adj.push(row);
        }
        Graph { adj }
    }

    /// Subgraph induced by `vs`, relabeled `0..vs.len()` in the given order.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<Graph, GraphError> {
        let n = self.order();
        let mut index = vec![usize::MAX; n];
        for (i, &v) in vs.iter().enumerate() {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if index[v] != usize::MAX {
                return Err(GraphError::RepeatedVertex(v));
            }
            index[v] = i;
        }
        let adj = vs
            .iter()
            .map(|&v| {
                let mut row: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        Ok(Graph { adj })
    }

    /// Number of edges inside `vs`.
    pub fn edges_within(&self, vs: &[usize]) -> usize {
        let mut inside = vec![false; self.order()];
        for &v in vs {
            inside[v] = true;
        }
        vs.iter()
            .map(|&v| self.adj[v].iter().filter(|&&w| inside[w]).count())
            .sum::<usize>()
            / 2
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        assert_eq!(perm.len(), n, "permutation length must equal graph order");
        let mut adj = vec![Vec::new(); n];
        for (u, nb) in self.adj.iter().enumerate() {
            let mut row: Vec<usize> = nb.iter().map(|&v| perm[v]).collect();
            row.sort_unstable();
            adj[perm[u]] = row;
        }
        Graph { adj }
    }

    /// Components of the whole graph; see [`Graph::components_avoiding`].
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&vec![false; self.order()])
    }

    /// Components of the graph with the `removed` vertices deleted.
    ///
    /// Each component is sorted and the list is ordered by minimum vertex.
    pub fn components_avoiding(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.connected_components().len() == 1
    }
}

// Named graphs used throughout the tests, constructions and campaigns.

pub fn complete(n: usize) -> Graph {
    Graph::empty(n).complement()
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v).unwrap();
    }
    g
}

/// Cycle on `n >= 3` vertices, `0-1-...-(n-1)-0`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = path(n);
    g.add_edge(n - 1, 0).unwrap();
    g
}

/// Star `K_{1,s}` with center 0.
pub fn star(s: usize) -> Graph {
    let mut g = Graph::empty(s + 1);
    for v in 1..=s {
        g.add_edge(0, v).unwrap();
    }
    g
}

/// Perfect matching with `t` edges `(2i, 2i+1)`.
pub fn matching(t: usize) -> Graph {
    let mut g = Graph::empty(2 * t);
    for i in 0..t {
        g.add_edge(2 * i, 2 * i + 1).unwrap();
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::empty(a).join(&Graph::empty(b))
}

/// Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap();
        g.add_edge(i, i + 5).unwrap();
        g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_partition(g: &Graph, comps: &[Vec<usize>]) -> bool {
        let mut seen = vec![0usize; g.order()];
        for c in comps {
            for &v in c {
                seen[v] += 1;
            }
        }
        seen.iter().all(|&c| c == 1)
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        let mut g = Graph::empty(3);
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        g.add_edge(0, 2).unwrap();
        assert_eq!(g.add_edge(2, 0), Err(GraphError::DuplicateEdge(0, 2)));
        assert!(matches!(
            g.add_edge(0, 3),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(4).complement().size(), 0);
        assert_eq!(Graph::empty(3).complement(), complete(3));
        let c5 = cycle(5).complement();
        assert_eq!(c5.regular_degree(), Some(2));
        assert!(c5.is_connected());
        // 0-2-4-1-3-0 is the complement cycle
        let perm = [0, 2, 4, 1, 3];
        let mut inv = [0; 5];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        assert_eq!(c5.relabel(&inv), cycle(5));
    }

    #[test]
    fn join_examples() {
        assert_eq!(complete(1).join(&complete(1)), complete(2));
        let g = complete(3).join(&Graph::empty(2));
        assert_eq!(g.degrees(), vec![4, 4, 4, 3, 3]);
        assert_eq!(g.size(), 9);
        let kab = Graph::empty(2).join(&Graph::empty(3));
        assert_eq!(kab.size(), 6);
        assert!(kab.edges().iter().all(|&(u, v)| u < 2 && v >= 2));
    }

    #[test]
    fn union_examples() {
        assert_eq!(complete(1).disjoint_union(&complete(1)), Graph::empty(2));
        let g = complete(3).disjoint_union(&complete(3));
        assert_eq!((g.order(), g.size(), g.regular_degree()), (6, 6, Some(2)));
        assert!(!g.is_connected());
        let g = path(4).disjoint_union(&matching(1));
        assert_eq!((g.order(), g.size()), (6, 4));
    }

    #[test]
    fn induced_examples() {
        assert_eq!(complete(5).induced_subgraph(&[0, 1, 2]).unwrap(), complete(3));
        assert_eq!(cycle(5).induced_subgraph(&[0, 1, 2]).unwrap(), path(3));
        assert_eq!(cycle(5).induced_subgraph(&[]).unwrap().order(), 0);
        assert!(matches!(
            cycle(5).induced_subgraph(&[0, 7]),
            Err(GraphError::VertexOutOfRange { vertex: 7, .. })
        ));
    }

    #[test]
    fn component_examples() {
        assert_eq!(complete(4).connected_components(), vec![vec![0, 1, 2, 3]]);
        let g = complete(3).disjoint_union(&complete(3));
        assert_eq!(
            g.connected_components(),
            vec![vec![0, 1, 2], vec![3, 4, 5]]
        );
        assert_eq!(
            Graph::empty(3).connected_components(),
            vec![vec![0], vec![1], vec![2]]
        );
        let g = cycle(6);
        let mut removed = vec![false; 6];
        removed[0] = true;
        removed[3] = true;
        let comps = g.components_avoiding(&removed);
        assert_eq!(comps, vec![vec![1, 2], vec![4, 5]]);
    }

    #[test]
    fn petersen_is_cubic() {
        let p = petersen();
        assert_eq!((p.order(), p.size(), p.regular_degree()), (10, 15, Some(3)));
        assert!(p.is_connected());
    }

    mod props {
        use super::*;
        use crate::testutil::arb_graph;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn double_complement(g in arb_graph(12)) {
                prop_assert_eq!(g.complement().complement(), g.clone());
                let n = g.order();
                prop_assert_eq!(g.complement().size(), n * n.saturating_sub(1) / 2 - g.size());
            }

            #[test]
            fn join_degree_law(a in arb_graph(7), b in arb_graph(7)) {
                let j = a.join(&b);
                prop_assert_eq!(j.size(), a.size() + b.size() + a.order() * b.order());
                for v in 0..a.order() {
                    prop_assert_eq!(j.degree(v), a.degree(v) + b.order());
                }
                for v in 0..b.order() {
                    prop_assert_eq!(j.degree(a.order() + v), b.degree(v) + a.order());
                }
            }

            #[test]
            fn handshake(g in arb_graph(14)) {
                prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
            }

            #[test]
            fn components_partition(g in arb_graph(14)) {
                let comps = g.connected_components();
                prop_assert!(is_partition(&g, &comps));
                let mut label = vec![0; g.order()];
                for (i, c) in comps.iter().enumerate() {
                    for &v in c {
                        label[v] = i;
                    }
                    let h = g.induced_subgraph(c).unwrap();
                    prop_assert!(h.is_connected());
                }
                for (u, v) in g.edges() {
                    prop_assert_eq!(label[u], label[v]);
                }
                let mins: Vec<usize> = comps.iter().map(|c| c[0]).collect();
                prop_assert!(mins.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }
}
