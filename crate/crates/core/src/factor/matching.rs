//! Maximum-cardinality matching in general graphs (Edmonds' blossom
//! algorithm, BFS with explicit blossom bases, O(n³)).

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// Vertex-disjoint edge set; `mate[v]` is the partner of `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching { mate: vec![None; n] }
    }

    /// Build from an edge list. Panics if two edges share an endpoint.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut m = Matching::empty(n);
        for &(u, v) in edges {
            assert!(m.mate[u].is_none() && m.mate[v].is_none(), "edges must be disjoint");
            m.mate[u] = Some(v);
            m.mate[v] = Some(u);
        }
        m
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn size(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.mate.len())
            .filter_map(|u| self.mate[u].filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    pub fn exposed(&self) -> Vec<usize> {
        (0..self.mate.len()).filter(|&v| self.mate[v].is_none()).collect()
    }

    /// Symmetric, and every matched pair is an edge of `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.mate.len() == g.order()
            && (0..g.order()).all(|u| match self.mate[u] {
                None => true,
                Some(v) => v != u && self.mate[v] == Some(u) && g.has_edge(u, v),
            })
    }
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    blocked: Vec<bool>,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    seen: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [Vec<usize>], mate: Vec<usize>) -> Self {
        let n = adj.len();
        Search {
            adj,
            blocked: vec![false; n],
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            seen: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.seen.fill(false);
        loop {
            a = self.base[a];
            self.seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Exposed endpoint of an augmenting path from `root`, if any.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.blocked[to] || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let w = self.mate[to];
                    self.used[w] = true;
                    self.queue.push_back(w);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn saturate(&mut self) {
        for v in 0..self.adj.len() {
            if self.mate[v] == NONE && !self.blocked[v] {
                if let Some(end) = self.find_path(v) {
                    self.augment(end);
                }
            }
        }
    }

    fn into_matching(self) -> Matching {
        Matching {
            mate: self.mate.into_iter().map(|m| (m != NONE).then_some(m)).collect(),
        }
    }
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect()
}

fn greedy(adj: &[Vec<usize>]) -> Vec<usize> {
    let mut mate = vec![NONE; adj.len()];
    for u in 0..adj.len() {
        if mate[u] == NONE {
            if let Some(&v) = adj[u].iter().find(|&&v| mate[v] == NONE) {
                mate[u] = v;
                mate[v] = u;
            }
        }
    }
    mate
}

pub fn max_matching(g: &Graph) -> Matching {
    let adj = adjacency(g);
    let mut s = Search::new(&adj, greedy(&adj));
    s.saturate();
    s.into_matching()
}

/// Grow `start` to a maximum matching. `start` must be valid for `g`.
pub fn augment_matching(g: &Graph, start: &Matching) -> Matching {
    debug_assert!(start.is_valid_for(g));
    let adj = adjacency(g);
    let mate = start.mate.iter().map(|m| m.unwrap_or(NONE)).collect();
    let mut s = Search::new(&adj, mate);
    s.saturate();
    s.into_matching()
}

/// Gallai–Edmonds decomposition: `d` holds the vertices missed by some
/// maximum matching, `a` their neighbours outside `d`, `c` the rest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GallaiEdmonds {
    pub d: Vec<usize>,
    pub a: Vec<usize>,
    pub c: Vec<usize>,
    pub matching: Matching,
}

pub fn gallai_edmonds(g: &Graph) -> GallaiEdmonds {
    let n = g.order();
    let matching = max_matching(g);
    let adj = adjacency(g);
    let mut in_d = vec![false; n];
    for v in 0..n {
        let Some(u) = matching.mate(v) else {
            in_d[v] = true;
            continue;
        };
        // v is inessential iff G - v has a matching as large as M - uv plus one
        let mut mate: Vec<usize> = matching.mate.iter().map(|m| m.unwrap_or(NONE)).collect();
        mate[u] = NONE;
        mate[v] = NONE;
        let mut s = Search::new(&adj, mate);
        s.blocked[v] = true;
        in_d[v] = s.find_path(u).is_some();
    }
    let mut in_a = vec![false; n];
    for v in (0..n).filter(|&v| in_d[v]) {
        for &w in g.neighbors(v) {
            in_a[w] |= !in_d[w];
        }
    }
    let pick = |f: &dyn Fn(usize) -> bool| (0..n).filter(|&v| f(v)).collect::<Vec<_>>();
    GallaiEdmonds {
        d: pick(&|v| in_d[v]),
        a: pick(&|v| in_a[v]),
        c: pick(&|v| !in_d[v] && !in_a[v]),
        matching,
    }
}
