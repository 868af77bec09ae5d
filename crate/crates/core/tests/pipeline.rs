use proptest::prelude::*;

use regfactor::factor::{DegreeSpec, FactorSolver};
use regfactor::graph::canon::canonical_form;
use regfactor::graph::{build, parse_graph6, to_graph6, ConstructionSpec, Graph};
use regfactor::lab::{enumerate_connected, enumerate_connected_regular, random_class_member, random_regular, ClassFamily};
use regfactor::oracle::{brute_force_deficiency, delta};
use regfactor::spectral::{eigenvalues, quotient_matrix, rho1, rho2};

#[test]
fn enumerated_corpora_survive_graph6_and_stay_distinct() {
    for (n, r) in [(8, 3), (10, 3), (9, 4), (10, 4)] {
        let corpus = enumerate_connected_regular(n, r).unwrap();
        let mut forms: Vec<_> = corpus.iter().map(canonical_form).collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), corpus.len());
        for g in &corpus {
            assert_eq!(&parse_graph6(&to_graph6(g)).unwrap(), g);
        }
    }
}

#[test]
fn extremal_quotients_carry_the_spectral_radius() {
    for (spec, t) in [
        (ConstructionSpec::ExtremalEven { r: 6, m: 4 }, rho1(6, 4).unwrap()),
        (ConstructionSpec::ExtremalOddM3 { r: 7, m: 5, cycles: Some(vec![5]) }, rho2(7, 5).unwrap()),
        (ConstructionSpec::ExtremalOddM1 { r: 5 }, rho2(5, 1).unwrap()),
    ] {
        let g = build(&spec).unwrap();
        let parts = spec.quotient_partition().expect("extremal constructions have a partition");
        let q = quotient_matrix(&g, &parts).unwrap();
        let l1 = eigenvalues(&g).unwrap().largest();
        assert!((q.largest_eigenvalue() - l1).abs() < 1e-9, "{}", spec.name());
        assert!((t.value - l1).abs() < 1e-9, "{}", spec.name());
    }
}

#[test]
fn class_members_never_undercut_the_minimum() {
    for seed in 0..60 {
        let g = random_class_member(6, 4, ClassFamily::Even, seed).unwrap();
        assert!(eigenvalues(&g).unwrap().largest() >= rho1(6, 4).unwrap().value - 1e-9);
        let g = random_class_member(5, 3, ClassFamily::Odd, seed).unwrap();
        assert!(eigenvalues(&g).unwrap().largest() >= rho2(5, 3).unwrap().value - 1e-9);
    }
}

#[test]
fn critical_graphs_have_deficiency_one() {
    let s = solver();
    let mut critical = 0;
    for n in 1..=7 {
        for g in enumerate_connected(n).unwrap() {
            for k in 1..=3 {
                if s.is_k_critical(&g, k).unwrap() {
                    critical += 1;
                    assert_eq!(s.deficiency(&g, k).unwrap(), 1, "{} k = {k}", to_graph6(&g));
                }
            }
        }
    }
    assert!(critical > 100);
}

fn solver() -> FactorSolver {
    FactorSolver::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn regular_factor_queries_match_the_oracle(n in 5usize..=12, r in 2usize..=5, k in 1usize..=4, seed in any::<u64>()) {
        prop_assume!(n * r % 2 == 0 && r < n);
        let g = random_regular(n, r, seed).unwrap();
        let (def, pair) = brute_force_deficiency(&g, k).unwrap();
        let report = solver().k_factor(&g, k).unwrap();
        prop_assert_eq!(report.deficiency, def);
        prop_assert_eq!(report.exists, def == 0);
        prop_assert_eq!(-delta(&g, k, &pair).unwrap().delta, def as i64);
        if let Some(edges) = report.factor_edges {
            let h = Graph::from_edges(n, &edges).unwrap();
            prop_assert_eq!(h.regular_degree(), Some(k));
            prop_assert!(edges.iter().all(|&(u, v)| g.has_edge(u, v)));
        }
        if let Some(cert) = report.certificate {
            prop_assert_eq!(-delta(&g, k, &cert).unwrap().delta, def as i64);
        }
    }

    #[test]
    fn optimal_subgraph_respects_caps(n in 5usize..=14, seed in any::<u64>(), k in 1usize..=3) {
        let g = random_regular(n + n % 2, 3, seed).unwrap();
        let spec = DegreeSpec::constant(g.order(), k);
        let h = solver().optimal_subgraph(&g, k).unwrap();
        let sub = Graph::from_edges(g.order(), &h).unwrap();
        prop_assert!((0..g.order()).all(|v| sub.degree(v) <= spec.target(v)));
        prop_assert_eq!(k * g.order() - 2 * h.len(), solver().deficiency(&g, k).unwrap());
    }
}
