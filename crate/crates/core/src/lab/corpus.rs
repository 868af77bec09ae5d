//! Graph sources: random regular graphs, random members of the
//! near-regular classes, and exhaustive small-graph enumeration.

use std::collections::{BTreeMap, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::canon::canonical_form;
use crate::graph::{canon::canonical_graph, Graph};

use super::LabError;

/// Attempts allowed for one pairing before giving up.
const PAIRING_ATTEMPTS: usize = 2000;

/// Largest order accepted by [`enumerate_connected_regular`].
pub const REGULAR_ENUMERATION_MAX: usize = 10;

/// Largest order accepted by [`enumerate_graphs`].
pub const GRAPH_ENUMERATION_MAX: usize = 8;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Pair degree stubs one at a time, drawing uniformly among the remaining
/// stubs and redrawing on loops or repeated edges; restart when stuck.
fn pairing<R: Rng>(degrees: &[usize], rng: &mut R) -> Option<Graph> {
    let n = degrees.len();
    if degrees.iter().sum::<usize>() % 2 == 1 {
        return None;
    }
    'attempt: for _ in 0..PAIRING_ATTEMPTS {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(degrees[v])).collect();
        stubs.shuffle(rng);
        let mut g = Graph::empty(n);
        while !stubs.is_empty() {
            let len = stubs.len();
            let mut placed = false;
            for _ in 0..4 * len {
                let i = rng.gen_range(0..len);
                let j = rng.gen_range(0..len);
                let (u, v) = (stubs[i], stubs[j]);
                if i == j || u == v || g.has_edge(u, v) {
                    continue;
                }
                g.add_edge(u, v).expect("checked simple");
                let (hi, lo) = if i > j { (i, j) } else { (j, i) };
                stubs.swap_remove(hi);
                stubs.swap_remove(lo);
                placed = true;
                break;
            }
            if !placed {
                continue 'attempt;
            }
        }
        return Some(g);
    }
    None
}

/// Random simple graph with the given degrees. Dense sequences are drawn
/// through their complement.
pub fn random_with_degrees<R: Rng>(degrees: &[usize], rng: &mut R) -> Option<Graph> {
    let n = degrees.len();
    if n == 0 {
        return Some(Graph::empty(0));
    }
    if degrees.iter().any(|&d| d >= n) {
        return None;
    }
    let total: usize = degrees.iter().sum();
    let co: Vec<usize> = degrees.iter().map(|&d| n - 1 - d).collect();
    if co.iter().sum::<usize>() < total {
        pairing(&co, rng).map(|h| h.complement())
    } else {
        pairing(degrees, rng)
    }
}

/// Connected `r`-regular graph on `n` vertices, deterministic in `seed`.
pub fn random_regular(n: usize, r: usize, seed: u64) -> Result<Graph, LabError> {
    if (n * r) % 2 == 1 || r >= n {
        return Err(LabError::Domain(format!("no {r}-regular graph on {n} vertices")));
    }
    let mut rng = rng(seed);
    let degrees = vec![r; n];
    for _ in 0..PAIRING_ATTEMPTS {
        if let Some(g) = random_with_degrees(&degrees, &mut rng) {
            if g.is_connected() {
                return Ok(g);
            }
        }
    }
    Err(LabError::Generation {
        what: format!("connected {r}-regular graph on {n} vertices"),
        attempts: PAIRING_ATTEMPTS,
    })
}

/// Which class a random member is drawn from: `Even` has order parity
/// different from `r` (threshold `rho1`), `Odd` has order parity equal to
/// `r` (threshold `rho2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassFamily {
    Even,
    Odd,
}

/// Connected irregular graph with maximum degree `r`, order parity set by
/// `family`, and `2e >= rn − m`.
///
/// The order is drawn from the six smallest admissible values, the total
/// degree deficit from `1..=m` with the parity `rn` forces, and the deficit
/// is spread over random vertices before realizing the degrees.
pub fn random_class_member(r: usize, m: usize, family: ClassFamily, seed: u64) -> Result<Graph, LabError> {
    if r < 2 {
        return Err(LabError::Domain("need r >= 2".into()));
    }
    let min_n = match family {
        ClassFamily::Even if m % 2 == 0 && m >= 2 => r + 1,
        ClassFamily::Odd if m % 2 == r % 2 && m >= 1 => r + 2,
        ClassFamily::Even => return Err(LabError::Domain(format!("even family needs even m >= 2, got {m}"))),
        ClassFamily::Odd => return Err(LabError::Domain(format!("odd family needs m >= 1 with the parity of r = {r}, got {m}"))),
    };
    let mut rng = rng(seed);
    let attempts = 20 * PAIRING_ATTEMPTS;
    for _ in 0..attempts {
        let n = min_n + 2 * rng.gen_range(0..6);
        // rn − 2e has the parity of rn
        let parity = (r * n) % 2;
        let deficits: Vec<usize> = (1..=m).filter(|d| d % 2 == parity).collect();
        let Some(&total) = deficits.choose(&mut rng) else {
            return Err(LabError::Domain(format!("no admissible deficit in 1..={m}")));
        };
        let mut degrees = vec![r; n];
        let mut left = total;
        while left > 0 {
            let v = rng.gen_range(0..n);
            if degrees[v] > 1 {
                degrees[v] -= 1;
                left -= 1;
            }
        }
        if degrees.iter().all(|&d| d < r) {
            continue;
        }
        if let Some(g) = random_with_degrees(&degrees, &mut rng) {
            if g.is_connected() {
                return Ok(g);
            }
        }
    }
    Err(LabError::Generation {
        what: format!("member of the {family:?} class for r = {r}, m = {m}"),
        attempts,
    })
}

/// All connected `r`-regular graphs on `n` vertices up to isomorphism,
/// each in canonical labeling, sorted by graph6.
///
/// Edges are added vertex by vertex. When choosing the later neighbours of
/// vertex `i`, candidates with identical current neighbourhoods are
/// interchangeable, so only prefixes of each such class are tried.
pub fn enumerate_connected_regular(n: usize, r: usize) -> Result<Vec<Graph>, LabError> {
    if n > REGULAR_ENUMERATION_MAX {
        return Err(LabError::TooLarge {
            n,
            cap: REGULAR_ENUMERATION_MAX,
        });
    }
    if (n * r) % 2 == 1 || (n > 0 && r >= n) {
        return Ok(Vec::new());
    }
    let mut state = RegularSearch {
        n,
        r,
        adj: vec![0u32; n],
        seen: HashSet::new(),
        out: Vec::new(),
    };
    state.fill(0);
    let mut out = state.out;
    out.sort_by_key(crate::graph::to_graph6);
    Ok(out)
}

struct RegularSearch {
    n: usize,
    r: usize,
    adj: Vec<u32>,
    seen: HashSet<crate::graph::canon::CanonicalForm>,
    out: Vec<Graph>,
}

impl RegularSearch {
    fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    fn fill(&mut self, i: usize) {
        if i == self.n {
            let mut g = Graph::empty(self.n);
            for u in 0..self.n {
                for v in u + 1..self.n {
                    if self.adj[u] >> v & 1 == 1 {
                        g.add_edge(u, v).expect("simple by construction");
                    }
                }
            }
            if g.is_connected() && self.seen.insert(canonical_form(&g)) {
                self.out.push(canonical_graph(&g));
            }
            return;
        }
        let need = self.r - self.degree(i);
        let open: Vec<usize> = (i + 1..self.n).filter(|&j| self.degree(j) < self.r).collect();
        if open.len() < need {
            return;
        }
        // group interchangeable candidates by their current neighbourhood
        let mut classes: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for &j in &open {
            classes.entry(self.adj[j]).or_default().push(j);
        }
        let classes: Vec<Vec<usize>> = classes.into_values().collect();
        let mut take = vec![0; classes.len()];
        self.choose(i, &classes, 0, need, &mut take);
    }

    fn choose(&mut self, i: usize, classes: &[Vec<usize>], c: usize, need: usize, take: &mut Vec<usize>) {
        if c == classes.len() {
            if need == 0 {
                let chosen: Vec<usize> = classes
                    .iter()
                    .zip(take.iter())
                    .flat_map(|(cls, &t)| cls[..t].iter().copied())
                    .collect();
                for &j in &chosen {
                    self.adj[i] |= 1 << j;
                    self.adj[j] |= 1 << i;
                }
                self.fill(i + 1);
                for &j in &chosen {
                    self.adj[i] &= !(1 << j);
                    self.adj[j] &= !(1 << i);
                }
            }
            return;
        }
        let rest: usize = classes[c..].iter().map(Vec::len).sum();
        if rest < need {
            return;
        }
        for t in 0..=need.min(classes[c].len()) {
            take[c] = t;
            self.choose(i, classes, c + 1, need - t, take);
        }
        take[c] = 0;
    }
}

/// All graphs on `n` vertices up to isomorphism, grown by adding one
/// vertex with every possible neighbourhood to each graph on `n − 1`.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, LabError> {
    if n > GRAPH_ENUMERATION_MAX {
        return Err(LabError::TooLarge {
            n,
            cap: GRAPH_ENUMERATION_MAX,
        });
    }
    let mut level = vec![Graph::empty(0)];
    for size in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..1 << (size - 1) {
                let mut h = g.disjoint_union(&Graph::empty(1));
                for u in 0..size - 1 {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, size - 1).expect("new vertex");
                    }
                }
                if seen.insert(canonical_form(&h)) {
                    next.push(canonical_graph(&h));
                }
            }
        }
        level = next;
    }
    level.sort_by_key(crate::graph::to_graph6);
    Ok(level)
}

pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, LabError> {
    Ok(enumerate_graphs(n)?.into_iter().filter(Graph::is_connected).collect())
}

/// Connected `r`-regular graph with `s` hub vertices whose removal leaves
/// many odd components, so it has no 1-factor once `r >= 3`.
///
/// For odd `r` the hubs form a single edge (`s = 2`) or a cycle (`s >= 3`)
/// and each hub's remaining degree goes to bridges into blobs on `r + 2`
/// vertices; for even `r` there are `sr/2` blobs on `r + 1` vertices, each
/// joined to the hubs by two edges. Hubs come first, then blobs in order.
pub fn pendant_blob_graph(r: usize, s: usize) -> Graph {
    assert!(r >= 3 && s >= 1, "need r >= 3 and s >= 1");
    let mut edges = Vec::new();
    let mut next = s;
    if r % 2 == 1 {
        // K_{r+2} minus a matching on all but w, with w joined to neither
        // end of one kept pair (a, b): w has degree r - 1, all others r
        let size = r + 2;
        let linked = match s {
            1 => 0,
            2 => 1,
            _ => 2,
        };
        if s == 2 {
            edges.push((0, 1));
        } else if s >= 3 {
            edges.extend((0..s).map(|h| (h, (h + 1) % s)));
        }
        for hub in 0..s {
            for _ in 0..r - linked {
                let base = next;
                let (w, a, b) = (base, base + 1, base + 2);
                for x in base..base + size {
                    for y in x + 1..base + size {
                        let matched = x > w && (x - base) % 2 == 1 && y == x + 1;
                        let cut = x == w && (y == a || y == b);
                        if (!matched || x == a) && !cut {
                            edges.push((x, y));
                        }
                    }
                }
                edges.push((hub, w));
                next += size;
            }
        }
    } else {
        let size = r + 1;
        let ends: Vec<usize> = (0..r).flat_map(|_| 0..s).collect();
        for pair in ends.chunks(2) {
            let (u, v) = (next, next + 1);
            for x in next..next + size {
                for y in x + 1..next + size {
                    if (x, y) != (u, v) {
                        edges.push((x, y));
                    }
                }
            }
            edges.push((pair[0], u));
            edges.push((pair[1], v));
            next += size;
        }
    }
    Graph::from_edges(next, &edges).expect("blob construction is simple")
}
