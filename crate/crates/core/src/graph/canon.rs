//! Canonical labeling for small graphs by individualization and refinement.
//!
//! Every leaf of the search tree is explored; the only pruning is across
//! twin vertices (same neighborhood up to each other), whose transposition
//! is an automorphism fixing the current partition. The canonical labeling
//! is the leaf whose upper-triangle adjacency bit string is largest.
//! Intended for the exhaustive corpora (`n <= 16` or so), not for large
//! graphs with big automorphism groups.

use super::Graph;

/// Isomorphism-invariant key: equal iff the graphs are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }
}

/// Permutation `perm` with `perm[old] = new` onto the canonical labeling.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search {
        g,
        best: None,
    };
    search.descend(vec![(0..n).collect()]);
    search.best.expect("a non-empty graph has at least one leaf").1
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    certificate(g, &canonical_labeling(g))
}

pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

fn certificate(g: &Graph, perm: &[usize]) -> CanonicalForm {
    let n = g.order();
    let mut inverse = vec![0; n];
    for (old, &new) in perm.iter().enumerate() {
        inverse[new] = old;
    }
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64)];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(inverse[u], inverse[v]) {
                bits[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    CanonicalForm { n, bits }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(CanonicalForm, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, partition: Vec<Vec<usize>>) {
        let partition = refine(self.g, partition);
        let target = partition
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(ti) = target else {
            let mut perm = vec![0; self.g.order()];
            for (label, cell) in partition.iter().enumerate() {
                perm[cell[0]] = label;
            }
            let cert = certificate(self.g, &perm);
            if self.best.as_ref().map_or(true, |(b, _)| cert > *b) {
                self.best = Some((cert, perm));
            }
            return;
        };
        let cell = partition[ti].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&w| are_twins(self.g, v, w)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(partition.len() + 1);
            next.extend_from_slice(&partition[..ti]);
            next.push(vec![v]);
            next.push(cell.iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&partition[ti + 1..]);
            self.descend(next);
        }
    }
}

fn are_twins(g: &Graph, v: usize, w: usize) -> bool {
    let a = g.neighbors(v).iter().filter(|&&x| x != w);
    let b = g.neighbors(w).iter().filter(|&&x| x != v);
    a.eq(b)
}

/// Split cells by neighbor counts into every cell until stable.
fn refine(g: &Graph, mut partition: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut cell_of = vec![0; n];
    loop {
        for (i, cell) in partition.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let k = partition.len();
        let mut next = Vec::with_capacity(n);
        for cell in &partition {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0u32; k];
                    for &w in g.neighbors(v) {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    let mut part: Vec<usize> = keyed[start..i].iter().map(|p| p.1).collect();
                    part.sort_unstable();
                    next.push(part);
                    start = i;
                }
            }
        }
        if next.len() == partition.len() {
            return next;
        }
        partition = next;
    }
}
