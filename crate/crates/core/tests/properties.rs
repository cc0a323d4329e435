//! Randomized invariant checks across the core operations.

use proptest::prelude::*;
use vcrit_core::coloring::{
    chromatic_number, chromatic_number_with_certificate, clique_number, independence_number,
    is_k_vertex_critical,
};
use vcrit_core::graph::{Graph, SetRelation, VertexSet};
use vcrit_core::patterns::{is_family_free, PatternFamily};
use vcrit_core::{canonical_form, parse_graph6, serialize_graph6};

/// Builds a graph on `n` vertices from a bitmask over the upper triangle.
fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut idx = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if bits >> (idx % 64) & 1 == 1 {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, any::<u64>()).prop_map(|(n, bits)| graph_from_bits(n, bits))
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just(n).prop_perturb(|n, mut rng| {
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            perm.swap(i, j);
        }
        perm
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_roundtrip(g in arb_graph(10)) {
        let line = serialize_graph6(&g);
        prop_assert_eq!(parse_graph6(&line).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_isomorphism_invariant(
        (g, perm) in arb_graph(9).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), arb_permutation(n))
        })
    ) {
        let relabeled = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&relabeled));
    }

    #[test]
    fn induced_full_set_is_isomorphic(g in arb_graph(9)) {
        let copy = g.induced(g.vertices());
        prop_assert_eq!(canonical_form(&copy), canonical_form(&g));
    }

    #[test]
    fn components_partition_and_connect(g in arb_graph(10), s_bits in any::<u64>()) {
        let s = VertexSet(s_bits) & g.vertices();
        let comps = g.components_within(s);
        let mut union = VertexSet::EMPTY;
        for (i, &a) in comps.iter().enumerate() {
            prop_assert!(!a.intersects(union));
            union = union | a;
            prop_assert!(g.induced(a).is_connected());
            for &b in comps.iter().skip(i + 1) {
                prop_assert_eq!(g.set_relation(a, b).unwrap(), SetRelation::Anticomplete);
            }
        }
        prop_assert_eq!(union, s);
    }

    #[test]
    fn chromatic_sandwich_and_certificate(g in arb_graph(9)) {
        prop_assume!(g.n() >= 1);
        let (chi, cert) = chromatic_number_with_certificate(&g);
        prop_assert!(cert.validate(&g));
        let w = clique_number(&g);
        let a = independence_number(&g);
        prop_assert!(w <= chi);
        prop_assert!(chi <= g.n());
        prop_assert!(chi * a >= g.n());
    }

    #[test]
    fn deletion_changes_chromatic_by_at_most_one(g in arb_graph(8)) {
        prop_assume!(g.n() >= 2);
        let chi = chromatic_number(&g);
        let report = is_k_vertex_critical(&g, chi);
        if report.short_circuit.is_none() {
            for &c in &report.per_vertex {
                prop_assert!(c == chi || c + 1 == chi);
            }
            if report.verdict {
                prop_assert!(g.is_connected());
                prop_assert!(g.min_degree().unwrap() + 1 >= chi);
            }
        }
    }

    #[test]
    fn family_freeness_is_hereditary(g in arb_graph(8), sub_bits in any::<u64>()) {
        let fam = PatternFamily::parse_list("P5,chair").unwrap();
        if is_family_free(&g, &fam) {
            let sub = VertexSet(sub_bits) & g.vertices();
            prop_assert!(is_family_free(&g.induced(sub), &fam));
        }
    }
}
