//! Tutte's functional `δ(S, T)` evaluated directly, and brute-force
//! k-factor existence and deficiency by sweeping every disjoint pair.
//!
//! For disjoint `S, T`:
//! `δ(S, T) = k|S| + Σ_{x∈T} d_{G−S}(x) − k|T| − τ(S, T)`, where `τ` counts
//! components `C` of `G − (S ∪ T)` with `e(C, T) + k|C|` odd. `G` has a
//! k-factor iff `δ >= 0` everywhere, and the deficiency is `max(−δ)`.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

/// Largest order accepted by the brute-force sweep (3^n pairs).
pub const DEFAULT_CAP: usize = 14;

/// Hard ceiling: vertex sets are packed into `u64` and 3^20 is already slow.
pub const MAX_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("vertex {0} is in both S and T")]
    Overlap(usize),
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("brute force needs n <= {cap}, got n = {n}")]
    TooLarge { n: usize, cap: usize },
}

/// Disjoint vertex sets, each sorted without repeats.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct STPair {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
}

impl STPair {
    pub fn new(mut s: Vec<usize>, mut t: Vec<usize>) -> Result<Self, OracleError> {
        s.sort_unstable();
        s.dedup();
        t.sort_unstable();
        t.dedup();
        if let Some(&v) = s.iter().find(|v| t.binary_search(v).is_ok()) {
            return Err(OracleError::Overlap(v));
        }
        Ok(STPair { s, t })
    }

    pub fn empty() -> Self {
        STPair::default()
    }

    fn from_masks(s: u64, t: u64) -> Self {
        STPair {
            s: bits(s).collect(),
            t: bits(t).collect(),
        }
    }

    fn check(&self, n: usize) -> Result<(), OracleError> {
        if let Some(&v) = self.s.iter().chain(&self.t).find(|&&v| v >= n) {
            return Err(OracleError::VertexOutOfRange { vertex: v, n });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DeltaBreakdown {
    pub k_s: i64,
    pub degree_sum: i64,
    pub k_t: i64,
    pub tau: i64,
    pub delta: i64,
}

fn membership(n: usize, vs: &[usize]) -> Vec<bool> {
    let mut mark = vec![false; n];
    for &v in vs {
        mark[v] = true;
    }
    mark
}

pub fn count_k_odd_components(g: &Graph, k: usize, st: &STPair) -> Result<usize, OracleError> {
    st.check(g.order())?;
    let n = g.order();
    let in_t = membership(n, &st.t);
    let mut removed = membership(n, &st.s);
    for &v in &st.t {
        if removed[v] {
            return Err(OracleError::Overlap(v));
        }
        removed[v] = true;
    }
    Ok(g
        .components_avoiding(&removed)
        .iter()
        .filter(|c| {
            let to_t: usize = c
                .iter()
                .map(|&x| g.neighbors(x).iter().filter(|&&y| in_t[y]).count())
                .sum();
            (to_t + k * c.len()) % 2 == 1
        })
        .count())
}

pub fn delta(g: &Graph, k: usize, st: &STPair) -> Result<DeltaBreakdown, OracleError> {
    let tau = count_k_odd_components(g, k, st)? as i64;
    let in_s = membership(g.order(), &st.s);
    let degree_sum: usize = st
        .t
        .iter()
        .map(|&x| g.neighbors(x).iter().filter(|&&y| !in_s[y]).count())
        .sum();
    let k = k as i64;
    let k_s = k * st.s.len() as i64;
    let k_t = k * st.t.len() as i64;
    let degree_sum = degree_sum as i64;
    Ok(DeltaBreakdown {
        k_s,
        degree_sum,
        k_t,
        tau,
        delta: k_s + degree_sum - k_t - tau,
    })
}

fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (x != 0).then(|| {
            let i = x.trailing_zeros() as usize;
            x &= x - 1;
            i
        })
    })
}

/// Bitmask evaluation of `δ` for graphs with at most 64 vertices.
struct Packed {
    adj: Vec<u64>,
    full: u64,
    k: i64,
}

impl Packed {
    fn new(g: &Graph, k: usize) -> Self {
        let n = g.order();
        Packed {
            adj: (0..n)
                .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
                .collect(),
            full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            k: k as i64,
        }
    }

    fn delta(&self, s: u64, t: u64) -> i64 {
        let degree_sum: u32 = bits(t).map(|x| (self.adj[x] & !s).count_ones()).sum();
        let mut rest = self.full & !(s | t);
        let mut tau = 0;
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let reach = bits(frontier).fold(0, |m, x| m | self.adj[x]);
                frontier = reach & rest & !comp;
                comp |= frontier;
            }
            rest &= !comp;
            let to_t: u32 = bits(comp).map(|x| (self.adj[x] & t).count_ones()).sum();
            if (to_t as i64 + self.k * comp.count_ones() as i64) % 2 == 1 {
                tau += 1;
            }
        }
        self.k * s.count_ones() as i64 + degree_sum as i64 - self.k * t.count_ones() as i64 - tau
    }

    /// Best `(−δ, S, T)` for a fixed `S`; ties go to the smallest `T` mask.
    fn best_for(&self, s: u64) -> (i64, u64, u64) {
        let free = self.full & !s;
        let mut best = (i64::MIN, s, 0);
        let mut t = free;
        loop {
            let v = -self.delta(s, t);
            if v > best.0 || (v == best.0 && t < best.2) {
                best = (v, s, t);
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & free;
        }
        best
    }

    fn any_negative_for(&self, s: u64) -> bool {
        let free = self.full & !s;
        let mut t = free;
        loop {
            if self.delta(s, t) < 0 {
                return true;
            }
            if t == 0 {
                return false;
            }
            t = (t - 1) & free;
        }
    }
}

fn check_cap(n: usize, cap: usize) -> Result<(), OracleError> {
    let cap = cap.min(MAX_CAP);
    if n > cap {
        return Err(OracleError::TooLarge { n, cap });
    }
    Ok(())
}

/// `max(−δ(S, T))` over disjoint pairs with a maximizing pair. Among
/// maximizers the pair with the smallest `S` mask, then `T` mask, wins
/// (bit `i` is vertex `i`).
pub fn brute_force_deficiency(g: &Graph, k: usize) -> Result<(usize, STPair), OracleError> {
    brute_force_deficiency_capped(g, k, DEFAULT_CAP)
}

pub fn brute_force_deficiency_capped(
    g: &Graph,
    k: usize,
    cap: usize,
) -> Result<(usize, STPair), OracleError> {
    check_cap(g.order(), cap)?;
    let packed = Packed::new(g, k);
    let (value, s, t) = (0..=packed.full)
        .into_par_iter()
        .map(|s| packed.best_for(s))
        .reduce(
            || (i64::MIN, u64::MAX, u64::MAX),
            |a, b| {
                if a.0 != b.0 {
                    if a.0 > b.0 {
                        a
                    } else {
                        b
                    }
                } else if (a.1, a.2) <= (b.1, b.2) {
                    a
                } else {
                    b
                }
            },
        );
    // the empty pair gives −δ = τ >= 0, so the maximum is never negative
    debug_assert!(value >= 0);
    Ok((value as usize, STPair::from_masks(s, t)))
}

/// Every pair attaining the deficiency, ordered by `S` mask then `T` mask.
pub fn maximizing_pairs(g: &Graph, k: usize, cap: usize) -> Result<(usize, Vec<STPair>), OracleError> {
    let (def, _) = brute_force_deficiency_capped(g, k, cap)?;
    let packed = Packed::new(g, k);
    let target = -(def as i64);
    let mut found: Vec<(u64, u64)> = (0..=packed.full)
        .into_par_iter()
        .flat_map_iter(|s| {
            let free = packed.full & !s;
            let mut hits = Vec::new();
            let mut t = free;
            loop {
                if packed.delta(s, t) == target {
                    hits.push((s, t));
                }
                if t == 0 {
                    break;
                }
                t = (t - 1) & free;
            }
            hits
        })
        .collect();
    found.sort_unstable();
    Ok((def, found.into_iter().map(|(s, t)| STPair::from_masks(s, t)).collect()))
}

pub fn brute_force_has_k_factor(g: &Graph, k: usize) -> Result<bool, OracleError> {
    brute_force_has_k_factor_capped(g, k, DEFAULT_CAP)
}

pub fn brute_force_has_k_factor_capped(g: &Graph, k: usize, cap: usize) -> Result<bool, OracleError> {
    check_cap(g.order(), cap)?;
    let packed = Packed::new(g, k);
    Ok(!(0..=packed.full).into_par_iter().any(|s| packed.any_negative_for(s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, petersen, star};
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    fn st(s: &[usize], t: &[usize]) -> STPair {
        STPair::new(s.to_vec(), t.to_vec()).unwrap()
    }

    #[test]
    fn odd_component_examples() {
        assert_eq!(count_k_odd_components(&complete(3), 1, &STPair::empty()).unwrap(), 1);
        assert_eq!(count_k_odd_components(&complete(4), 3, &STPair::empty()).unwrap(), 0);
        // C6 minus {0, 3}: paths {1,2} and {4,5}, each with one edge to T = {3}
        assert_eq!(count_k_odd_components(&cycle(6), 1, &st(&[0], &[3])).unwrap(), 2);
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&complete(4), 3, &STPair::empty()).unwrap().delta, 0);
        assert_eq!(delta(&complete(3), 1, &STPair::empty()).unwrap().delta, -1);
        assert_eq!(delta(&complete(5), 1, &STPair::empty()).unwrap().delta, -1);
        let b = delta(&cycle(6), 1, &st(&[0], &[3])).unwrap();
        assert_eq!(b, DeltaBreakdown { k_s: 1, degree_sum: 2, k_t: 1, tau: 2, delta: 0 });
    }

    #[test]
    fn errors() {
        assert_eq!(STPair::new(vec![1, 2], vec![2]), Err(OracleError::Overlap(2)));
        assert_eq!(
            delta(&complete(3), 1, &st(&[5], &[])),
            Err(OracleError::VertexOutOfRange { vertex: 5, n: 3 })
        );
        assert_eq!(
            brute_force_deficiency(&complete(15), 1),
            Err(OracleError::TooLarge { n: 15, cap: 14 })
        );
    }

    #[test]
    fn deficiency_examples() {
        assert_eq!(brute_force_deficiency(&cycle(4), 1).unwrap(), (0, STPair::empty()));
        assert_eq!(brute_force_deficiency(&complete(3), 1).unwrap(), (1, STPair::empty()));
        let (d, pair) = brute_force_deficiency(&star(4), 1).unwrap();
        assert_eq!(d, 3);
        assert_eq!(pair, st(&[0], &[]));
        assert_eq!(brute_force_deficiency(&Graph::empty(0), 2).unwrap().0, 0);
    }

    #[test]
    fn existence_examples() {
        assert!(brute_force_has_k_factor(&complete(4), 3).unwrap());
        assert!(!brute_force_has_k_factor(&complete(3), 1).unwrap());
        assert!(brute_force_has_k_factor(&petersen(), 1).unwrap());
        assert!(brute_force_has_k_factor(&petersen(), 2).unwrap());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn packed_matches_generic(g in arb_graph(9), k in 0usize..4, seed in any::<u64>()) {
            let n = g.order();
            let packed = Packed::new(&g, k);
            let mut x = seed;
            for _ in 0..20 {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let s = (x >> 7) & packed.full;
                let t = (x >> 29) & packed.full & !s;
                let pair = STPair::from_masks(s, t);
                let b = delta(&g, k, &pair).unwrap();
                prop_assert_eq!(b.delta, packed.delta(s, t));
                prop_assert_eq!(b.delta.rem_euclid(2), ((k * n) % 2) as i64);
            }
        }

        #[test]
        fn certificate_attains_deficiency(g in arb_graph(8), k in 1usize..4) {
            let (d, pair) = brute_force_deficiency(&g, k).unwrap();
            prop_assert_eq!(delta(&g, k, &pair).unwrap().delta, -(d as i64));
            prop_assert_eq!(d == 0, brute_force_has_k_factor(&g, k).unwrap());
        }

        #[test]
        fn maximizing_pairs_all_attain(g in arb_graph(7), k in 1usize..3) {
            let (def, pairs) = maximizing_pairs(&g, k, DEFAULT_CAP).unwrap();
            let (_, first) = brute_force_deficiency(&g, k).unwrap();
            prop_assert_eq!(&pairs[0], &first);
            for p in &pairs {
                prop_assert_eq!(delta(&g, k, p).unwrap().delta, -(def as i64));
            }
        }

        #[test]
        fn empty_pair_counts_odd_components(g in arb_graph(10), k in 1usize..4) {
            let tau = count_k_odd_components(&g, k, &STPair::empty()).unwrap();
            prop_assert_eq!(delta(&g, k, &STPair::empty()).unwrap().delta, -(tau as i64));
            if g.is_connected() && (k * g.order()) % 2 == 0 {
                prop_assert_eq!(tau, 0);
            }
        }
    }
}
