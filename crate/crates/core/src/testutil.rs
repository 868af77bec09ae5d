use proptest::prelude::*;

use crate::graph::Graph;

/// Arbitrary simple graph on at most `max_n` vertices.
pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
    })
}
