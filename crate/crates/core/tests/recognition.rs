mod common;

use bdh_core::oracle::brute_distance_hereditary;
use bdh_core::pruning::{is_bdh, pruning_sequence, Verdict};
use bdh_core::{generate_bdh, BipartiteGraph, GenOptions};
use common::graph_of_rows;
use proptest::prelude::*;

fn three_way(g: &BipartiteGraph) {
    let seq = pruning_sequence(g).unwrap();
    let forbidden = g.find_forbidden();
    let dh = brute_distance_hereditary(g).unwrap();
    assert_eq!(seq.is_some(), forbidden.is_none(), "{}", g.to_text());
    assert_eq!(seq.is_some(), dh, "{}", g.to_text());
    if let Some(seq) = seq {
        assert!(seq.replays_to(g));
    }
    match is_bdh(g).unwrap() {
        Verdict::Bdh(seq) => assert!(seq.replays_to(g)),
        Verdict::NotBdh(cert) => {
            let vs = cert.vertices();
            assert!(vs.len() >= 6 && vs.iter().all(|&v| g.contains(v)));
        }
    }
}

#[test]
fn all_small_connected_graphs() {
    let mut checked = 0;
    for n in 1..=8 {
        for nx in 1..n {
            let ny = n - nx;
            for code in 0u64..1 << (nx * ny) {
                let rows: Vec<u32> = (0..nx).map(|x| (code >> (x * ny) & ((1 << ny) - 1)) as u32).collect();
                let g = graph_of_rows(&rows, ny);
                if g.is_connected() {
                    three_way(&g);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 10_000);
}

fn arb_connected(max: usize) -> impl Strategy<Value = BipartiteGraph> {
    (
        2..=max / 2,
        0..=max / 2,
        prop::collection::vec(0.0f64..1.0, 49),
        0.15f64..0.6,
    )
        .prop_map(|(nx, extra, coins, p)| {
            let ny = (nx + extra).clamp(2, 7);
            let mut edges = Vec::new();
            for x in 0..nx {
                for y in 0..ny {
                    if coins[x * 7 + y] < p {
                        edges.push((x, y));
                    }
                }
            }
            BipartiteGraph::from_edges(nx, ny, &edges)
        })
        .prop_filter("connected", |g| g.is_connected())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn random_graphs_up_to_fourteen(g in arb_connected(14)) {
        three_way(&g);
    }

    #[test]
    fn generated_graphs_replay(n in 1usize..80, seed in any::<u64>(), bias in 0.0f64..=1.0) {
        let (g, seq) = generate_bdh(GenOptions::new(n, seed, bias)).unwrap();
        prop_assert_eq!(g.vertex_count(), n);
        prop_assert!(g.is_connected());
        prop_assert!(seq.replays_to(&g));
        let again = generate_bdh(GenOptions::new(n, seed, bias)).unwrap();
        prop_assert_eq!(&again.0, &g);
        let found = pruning_sequence(&g).unwrap().expect("generated graphs are BDH");
        prop_assert!(found.replays_to(&g));
        let text = found.to_text();
        prop_assert_eq!(bdh_core::PruningSequence::parse(&text).unwrap(), found);
    }

    #[test]
    fn universal_free_generation(n in 6usize..40, seed in any::<u64>()) {
        let (g, _) = generate_bdh(GenOptions::new(n, seed, 0.5).no_universal()).unwrap();
        prop_assert!(g.universal_vertices().is_empty());
    }
}
