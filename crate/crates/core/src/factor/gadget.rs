//! Reductions from degree-constrained subgraph problems to matching.

use crate::graph::Graph;

use super::matching::Matching;
use super::{DegreeSpec, FactorError};

/// Tutte's gadget: perfect matchings correspond to f-factors.
///
/// Host edge `i = (u, v)` owns nodes `2i` (at `u`) and `2i + 1` (at `v`),
/// joined to each other. Vertex `x` then gets `d(x) − f(x)` core nodes,
/// each joined to every edge node at `x`. A core node absorbs one edge end
/// that is left out of the factor.
#[derive(Debug, Clone)]
pub struct TutteGadget {
    pub graph: Graph,
    host_edges: Vec<(usize, usize)>,
}

impl TutteGadget {
    pub fn host_edges(&self) -> &[(usize, usize)] {
        &self.host_edges
    }

    /// Factor encoded by a perfect matching of the gadget.
    pub fn decode(&self, m: &Matching) -> Option<Vec<(usize, usize)>> {
        m.is_perfect().then(|| {
            self.host_edges
                .iter()
                .enumerate()
                .filter(|&(i, _)| m.mate(2 * i) == Some(2 * i + 1))
                .map(|(_, &e)| e)
                .collect()
        })
    }
}

fn edge_nodes_at(g: &Graph, host_edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut at = vec![Vec::new(); g.order()];
    for (i, &(u, v)) in host_edges.iter().enumerate() {
        at[u].push(2 * i);
        at[v].push(2 * i + 1);
    }
    at
}

pub fn gadget_reduce(g: &Graph, spec: &DegreeSpec) -> Result<TutteGadget, FactorError> {
    spec.check_len(g.order())?;
    for v in 0..g.order() {
        if spec.target(v) > g.degree(v) {
            return Err(FactorError::InfeasibleAt {
                vertex: v,
                degree: g.degree(v),
                target: spec.target(v),
            });
        }
    }
    let host_edges = g.edges();
    let at = edge_nodes_at(g, &host_edges);
    let mut edges: Vec<(usize, usize)> = (0..host_edges.len()).map(|i| (2 * i, 2 * i + 1)).collect();
    let mut next = 2 * host_edges.len();
    for v in 0..g.order() {
        for _ in 0..g.degree(v) - spec.target(v) {
            edges.extend(at[v].iter().map(|&x| (x, next)));
            next += 1;
        }
    }
    let graph = Graph::from_edges(next, &edges).expect("gadget edges are simple");
    Ok(TutteGadget { graph, host_edges })
}

/// Degree-bounded gadget: maximum matchings have size `|E| + ν`, where `ν`
/// is the largest edge count of a subgraph with `d_H(x) <= cap(x)`.
///
/// Host edge `i = (u, v)` owns nodes `2i` and `2i + 1` joined to each other;
/// vertex `x` owns `cap(x)` slot nodes; `2i` is joined to every slot of `u`
/// and `2i + 1` to every slot of `v`. Edge `i` lies in the subgraph iff both
/// of its nodes are matched into slots.
#[derive(Debug, Clone)]
pub struct BoundedGadget {
    pub graph: Graph,
    host_edges: Vec<(usize, usize)>,
}

impl BoundedGadget {
    pub fn decode(&self, m: &Matching) -> Vec<(usize, usize)> {
        let slots_from = 2 * self.host_edges.len();
        self.host_edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| {
                let in_slot = |x: usize| m.mate(x).is_some_and(|y| y >= slots_from);
                in_slot(2 * i) && in_slot(2 * i + 1)
            })
            .map(|(_, &e)| e)
            .collect()
    }
}

pub fn bounded_gadget(g: &Graph, caps: &DegreeSpec) -> Result<BoundedGadget, FactorError> {
    caps.check_len(g.order())?;
    let host_edges = g.edges();
    let at = edge_nodes_at(g, &host_edges);
    let mut edges: Vec<(usize, usize)> = (0..host_edges.len()).map(|i| (2 * i, 2 * i + 1)).collect();
    let mut next = 2 * host_edges.len();
    for v in 0..g.order() {
        // slots beyond d(v) can never be used
        for _ in 0..caps.target(v).min(g.degree(v)) {
            edges.extend(at[v].iter().map(|&x| (x, next)));
            next += 1;
        }
    }
    let graph = Graph::from_edges(next, &edges).expect("gadget edges are simple");
    Ok(BoundedGadget { graph, host_edges })
}
