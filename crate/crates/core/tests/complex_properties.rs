use proptest::prelude::*;
use rayon::ThreadPoolBuilder;
use srdepth::hochster::{depth_of_graph, graded_betti_table, Guards};
use srdepth::homology::reduced_betti;
use srdepth::monomial::edge_ideal;
use srdepth::{FieldSpec, Graph, SimplicialComplex, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn stanley_reisner_ideal_is_complement_edge_ideal(g in graph(9)) {
        let c = SimplicialComplex::clique_complex(&g).unwrap();
        prop_assert_eq!(c.stanley_reisner_ideal().unwrap(), edge_ideal(&g.complement()));
        let back = SimplicialComplex::from_squarefree_ideal(&edge_ideal(&g.complement())).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn vertex_link_is_neighborhood_clique_complex(g in graph(9), v in 0usize..9) {
        let v = v % g.num_vertices();
        let c = SimplicialComplex::clique_complex(&g).unwrap();
        let link = c.link(VertexSet::singleton(v)).unwrap();
        let (h, labels) = g.induced_subgraph(g.neighbors(v));
        let lifted: Vec<u64> = SimplicialComplex::clique_complex(&h)
            .unwrap()
            .faces()
            .map(|f| VertexSet(f).iter().fold(0u64, |a, k| a | 1 << labels[k]))
            .collect();
        let mut expected = lifted;
        expected.sort_unstable();
        let mut got: Vec<u64> = link.faces().collect();
        got.sort_unstable();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn cones_are_acyclic(g in graph(9), v in 0usize..9) {
        let n = g.num_vertices();
        let v = v % n;
        let mut g = g;
        for u in 0..n {
            if u != v {
                g.add_edge(u, v).unwrap();
            }
        }
        let c = SimplicialComplex::clique_complex(&g).unwrap();
        prop_assert!(c.cone_apex().is_some());
        for f in [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::RATIONAL] {
            prop_assert!(reduced_betti(&c, f).is_zero());
        }
    }

    #[test]
    fn euler_characteristic_matches_face_counts(g in graph(9)) {
        let c = SimplicialComplex::clique_complex(&g).unwrap();
        let from_faces: i64 = c
            .f_vector()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum();
        prop_assert_eq!(reduced_betti(&c, FieldSpec::GF2).euler_characteristic(), from_faces);
    }

    #[test]
    fn reduced_h0_counts_components(g in graph(10)) {
        let c = SimplicialComplex::clique_complex(&g).unwrap();
        let comps = g.components_within(g.vertices()).len();
        prop_assert_eq!(reduced_betti(&c, FieldSpec::GF2).get(0), comps - 1);
    }

    #[test]
    fn first_syzygies_count_non_edges(g in graph(8)) {
        let c = SimplicialComplex::clique_complex(&g).unwrap();
        let t = graded_betti_table(&c, FieldSpec::GF2, Guards::default()).unwrap();
        prop_assert_eq!(t.get(1, 2), g.complement().num_edges());
        prop_assert_eq!(t.get(0, 0), 1);
    }

    #[test]
    fn table_agrees_with_depth_scan(g in graph(8)) {
        let c = SimplicialComplex::clique_complex(&g).unwrap();
        let t = graded_betti_table(&c, FieldSpec::GF2, Guards::default()).unwrap();
        let d = depth_of_graph(&g, FieldSpec::GF2, Guards::default()).unwrap();
        prop_assert_eq!(t.depth(), d.depth);
        prop_assert_eq!(t.projective_dimension() + d.depth, g.num_vertices());
    }
}

#[test]
fn table_is_independent_of_thread_count() {
    let g = Graph::from_edges(
        9,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 0),
            (0, 4),
            (1, 6),
            (2, 7),
        ],
    )
    .unwrap();
    let c = SimplicialComplex::clique_complex(&g).unwrap();
    let run = |threads| {
        ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| {
                let t = graded_betti_table(&c, FieldSpec::GF2, Guards::default()).unwrap();
                let d = depth_of_graph(&g, FieldSpec::GF2, Guards::default()).unwrap();
                (t, d)
            })
    };
    let (t1, d1) = run(1);
    let (t8, d8) = run(8);
    assert_eq!(t1, t8);
    assert_eq!(d1, d8);
    assert_eq!(t1.to_csv(), t8.to_csv());
}
