use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weak_iasi::graph::{
    self, edge_corona, intersection, is_bipartite, random_gnp, read_edge_list, union,
    write_edge_list, Graph,
};
use weak_iasi::iasi::{count_mono_elements, sumset, verify, SetLabel, VertexLabeling};
use weak_iasi::sparing::{pattern_mono_edges, sparing_by_components};
use weak_iasi::{
    construct_optimal, construct_weak_iasi, sparing_bruteforce, sparing_exact, MonoPattern,
    SolverConfig,
};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0..1.0f64, any::<u64>())
        .prop_map(|(n, p, seed)| random_gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
}

fn label_strategy() -> impl Strategy<Value = SetLabel> {
    prop::collection::btree_set(0..200u64, 1..8).prop_map(|s| SetLabel::new(s).unwrap())
}

fn config() -> SolverConfig {
    SolverConfig::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn corona_sizes(g1 in graph_strategy(6), g2 in graph_strategy(5)) {
        let (h, prov) = edge_corona(&g1, &g2);
        let (n1, m1, n2, m2) = (g1.vertex_count(), g1.edge_count(), g2.vertex_count(), g2.edge_count());
        prop_assert_eq!(h.vertex_count(), n1 + m1 * n2);
        prop_assert_eq!(h.edge_count(), m1 * (1 + m2 + 2 * n2));
        prop_assert_eq!(prov.base, (0..n1).collect::<Vec<_>>());
        prop_assert_eq!(prov.copies.len(), m1);
    }

    #[test]
    fn union_intersection_edge_counts(a in graph_strategy(9), b in graph_strategy(9)) {
        let u = union(&a, &b);
        let i = intersection(&a, &b);
        prop_assert_eq!(u.edge_count() + i.edge_count(), a.edge_count() + b.edge_count());
        prop_assert_eq!(u.vertex_count(), a.vertex_count().max(b.vertex_count()));
    }

    #[test]
    fn sumset_laws(a in label_strategy(), b in label_strategy(), t in 0..100u64) {
        let s = sumset(&a, &b);
        prop_assert_eq!(&s, &sumset(&b, &a));
        prop_assert!(s.cardinality() >= a.cardinality() + b.cardinality() - 1);
        prop_assert!(s.cardinality() <= a.cardinality() * b.cardinality());
        let shifted = SetLabel::new(a.elements().iter().map(|x| x + t)).unwrap();
        let expected = SetLabel::new(s.elements().iter().map(|x| x + t)).unwrap();
        prop_assert_eq!(sumset(&shifted, &b), expected);
    }

    #[test]
    fn weak_labelings_have_independent_non_mono_vertices(g in graph_strategy(8), seed in any::<u64>()) {
        // random small labels; whenever the result is a weak IASI, no edge
        // joins two non-singleton labels
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = VertexLabeling::from_labels(g.vertices().map(|_| {
            let size = rng.gen_range(1..=2);
            SetLabel::new((0..size).map(|_| rng.gen_range(0..40u64))).unwrap()
        }));
        let v = verify(&g, &f).unwrap();
        if v.weak_condition {
            for &(a, b) in g.edges() {
                prop_assert!(f.get(a).unwrap().is_mono() || f.get(b).unwrap().is_mono());
            }
        }
    }

    #[test]
    fn exact_methods_agree(g in graph_strategy(14)) {
        let bb = sparing_exact(&g, &config()).unwrap();
        let bf = sparing_bruteforce(&g, &config()).unwrap();
        let ce = sparing_by_components(&g, &config()).unwrap();
        prop_assert_eq!(bb.value, bf.value);
        prop_assert_eq!(&bb.witness, &bf.witness);
        prop_assert_eq!(bb.value, ce.value);
        prop_assert_eq!(pattern_mono_edges(&g, &bb.witness).unwrap(), bb.value);
    }

    #[test]
    fn zero_iff_bipartite(g in graph_strategy(14)) {
        prop_assert_eq!(sparing_exact(&g, &config()).unwrap().value == 0, is_bipartite(&g).0);
    }

    #[test]
    fn subgraph_monotone(g in graph_strategy(12), keep in prop::collection::vec(any::<bool>(), 12)) {
        let kept: Vec<usize> = g.vertices().filter(|&v| keep[v]).collect();
        let sub = g.induced_subgraph(&kept);
        prop_assert!(sparing_exact(&sub, &config()).unwrap().value <= sparing_exact(&g, &config()).unwrap().value);
    }

    #[test]
    fn optimal_labeling_is_deterministic_and_sound(g in graph_strategy(10)) {
        let (r, f) = construct_optimal(&g, &config()).unwrap();
        prop_assert_eq!(&construct_optimal(&g, &config()).unwrap().1, &f);
        let v = verify(&g, &f).unwrap();
        prop_assert!(v.is_weak_iasi());
        prop_assert_eq!(count_mono_elements(&g, &f).unwrap().1, r.value);
        let again = construct_weak_iasi(&g, &r.witness).unwrap();
        prop_assert_eq!(again, f);
    }

    #[test]
    fn any_valid_pattern_is_realised(g in graph_strategy(10), order in any::<u64>()) {
        // greedy independent set from a seeded vertex order
        use rand::seq::SliceRandom;
        let mut vs: Vec<usize> = g.vertices().collect();
        vs.shuffle(&mut ChaCha8Rng::seed_from_u64(order));
        let mut chosen: Vec<usize> = Vec::new();
        for v in vs {
            if chosen.iter().all(|&u| !g.has_edge(u, v)) {
                chosen.push(v);
            }
        }
        let p = MonoPattern::new(chosen);
        let f = construct_weak_iasi(&g, &p).unwrap();
        let v = verify(&g, &f).unwrap();
        prop_assert!(v.is_weak_iasi());
        prop_assert_eq!(v.mono_edge_count, pattern_mono_edges(&g, &p).unwrap());
        prop_assert_eq!(v.mono_vertex_count, p.mono_vertex_count(&g));
    }

    #[test]
    fn edge_list_round_trip(g in graph_strategy(15)) {
        prop_assert_eq!(read_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn labeling_json_round_trip(labels in prop::collection::vec(label_strategy(), 1..10)) {
        let f = VertexLabeling::from_labels(labels);
        let text = f.to_json().to_string();
        prop_assert_eq!(VertexLabeling::from_json(&text).unwrap(), f);
    }
}

#[test]
fn corona_of_complete_graphs_methods_agree() {
    for m in 2..=4 {
        for n in 1..=3 {
            let (h, _) = edge_corona(&graph::complete(m).unwrap(), &graph::complete(n).unwrap());
            let by_components = sparing_by_components(&h, &config()).unwrap().value;
            assert_eq!(
                sparing_exact(&h, &config()).unwrap().value,
                by_components,
                "K{m} <> K{n}"
            );
        }
    }
}
