mod common;

use std::sync::Arc;

use itertools::Itertools;
use magiclab_core::interval::weighted_extrema;
use magiclab_core::{
    complement, enumerate, extend_sem, parse_graph, serialize_graph, Graph, Mode, SearchOptions, VertexLabeling,
};
use proptest::prelude::*;

/// Simple graph on `p` vertices whose edges are picked by the bits of `mask`.
fn graph_from(p: usize, mask: u64) -> Graph {
    let pairs: Vec<(usize, usize)> = (1..=p).tuple_combinations().collect();
    let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e);
    Graph::new(p, edges).unwrap()
}

fn graphs(max_p: usize, max_size: usize) -> impl Strategy<Value = Graph> {
    (2..=max_p, any::<u64>())
        .prop_map(|(p, mask)| graph_from(p, mask))
        .prop_filter("needs an edge and a bounded size", move |g| {
            g.size() > 0 && g.order() + g.size() <= max_size
        })
}

fn spectra_options() -> SearchOptions {
    SearchOptions {
        collect_all: true,
        ..SearchOptions::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn achieved_valences_lie_in_the_interval(g in graphs(7, 12)) {
        for kind in [Mode::Sem, Mode::Em] {
            let report = enumerate(&g, kind, &SearchOptions::default().spectrum_only()).unwrap();
            prop_assert!(report.exact);
            for k in &report.achieved {
                prop_assert!(report.interval.contains(*k), "{kind:?}: {k} outside {:?}", report.interval.bounds());
            }
            let covered = report.interval.values().all(|k| report.achieved.contains(&k));
            prop_assert_eq!(report.perfect, !report.interval.is_empty() && covered);
        }
    }

    #[test]
    fn complements_are_involutions(g in graphs(6, 11)) {
        let (p, q) = (g.order() as u32, g.size() as u32);
        for (kind, total) in [(Mode::Sem, 4 * p + q + 3), (Mode::Em, 3 * (p + q + 1))] {
            let report = enumerate(&g, kind, &spectra_options()).unwrap();
            for f in report.labelings.unwrap() {
                let fbar = complement(&f, kind).unwrap();
                prop_assert_eq!(f.valence() + fbar.valence(), total);
                if kind == Mode::Sem {
                    prop_assert!(fbar.is_super());
                }
                prop_assert_eq!(complement(&fbar, kind).unwrap(), f);
            }
        }
    }

    #[test]
    fn edge_list_round_trip(g in graphs(9, 60)) {
        let text = serialize_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(back.order(), g.order());
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(serialize_graph(&back), text);
    }

    #[test]
    fn rearrangement_matches_permutations(
        pairs in prop::collection::vec((0u64..20, 0u64..30), 1..=6)
    ) {
        let (weights, labels): (Vec<u64>, Vec<u64>) = pairs.into_iter().unzip();
        let sums: Vec<u64> = labels
            .iter()
            .permutations(labels.len())
            .map(|perm| weights.iter().zip(perm).map(|(w, l)| w * l).sum())
            .collect();
        let expected = (*sums.iter().min().unwrap(), *sums.iter().max().unwrap());
        prop_assert_eq!(weighted_extrema(&weights, &labels).unwrap(), expected);
    }

    #[test]
    fn extension_accepts_exactly_consecutive_sums(g in graphs(7, 16), seed in any::<u64>()) {
        let p = g.order();
        let mut labels: Vec<u32> = (1..=p as u32).collect();
        // cheap deterministic shuffle driven by the seed
        let mut s = seed | 1;
        for i in (1..p).rev() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            labels.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let graph = Arc::new(g);
        let mut sums: Vec<u32> = graph.edges().iter().map(|&(u, v)| labels[u - 1] + labels[v - 1]).collect();
        sums.sort();
        let consecutive = sums.windows(2).all(|w| w[1] == w[0] + 1);
        let vl = VertexLabeling::new(Arc::clone(&graph), labels.clone()).unwrap();
        match extend_sem(&vl) {
            Ok(f) => {
                prop_assert!(consecutive);
                prop_assert!(f.is_super());
                prop_assert_eq!(f.vertex_labels(), &labels[..]);
                prop_assert_eq!(f.valence(), (p + graph.size()) as u32 + sums[0]);
                for (&(u, v), e) in graph.edges().iter().zip(f.edge_labels()) {
                    prop_assert_eq!(labels[u - 1] + labels[v - 1] + e, f.valence());
                }
            }
            Err(_) => prop_assert!(!consecutive),
        }
    }

    #[test]
    fn worker_count_does_not_change_results(g in graphs(7, 12)) {
        for kind in [Mode::Sem, Mode::Em] {
            let runs: Vec<String> = [1, 2, 4]
                .into_iter()
                .map(|w| {
                    let r = enumerate(&g, kind, &SearchOptions::default().with_workers(w)).unwrap();
                    let witnesses: Vec<_> = r.witnesses.values().map(|f| f.to_json()).collect();
                    serde_json::to_string(&(r.to_json(), witnesses)).unwrap()
                })
                .collect();
            prop_assert_eq!(&runs[0], &runs[1]);
            prop_assert_eq!(&runs[0], &runs[2]);
        }
    }

    #[test]
    fn sem_spectrum_matches_oracle(g in graphs(6, 30)) {
        let truth = common::naive_sem(&g);
        let report = enumerate(&g, Mode::Sem, &SearchOptions::default()).unwrap();
        prop_assert_eq!(report.achieved, truth.valences);
        prop_assert_eq!(report.labeling_count, Some(truth.shapes.len() as u64));
    }
}
