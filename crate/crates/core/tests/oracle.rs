mod common;

use std::collections::BTreeSet;

use common::{corpus, naive, naive_interval, Naive, Shape};
use magiclab_core::{enumerate, interval_of, Graph, IntervalReport, Mode, SearchOptions};

fn same_ratio(r: &IntervalReport, min: u64, max: u64, q: usize) -> bool {
    let q = q as i64;
    *r.min_raw.numer() * q == min as i64 * *r.min_raw.denom()
        && *r.max_raw.numer() * q == max as i64 * *r.max_raw.denom()
}

/// Checks interval, achieved set, class count, raw count and the class
/// shapes of one graph against the brute-force result.
fn compare(g: &Graph, kind: Mode, truth: &Naive) {
    let what = format!("{kind:?} {} {:?}", g.label(), g.edges());
    let interval = interval_of(g, kind).unwrap();
    assert!(
        same_ratio(&interval, truth.min_numerator, truth.max_numerator, g.size()),
        "{what}: extrema {:?}..{:?} vs {}..{} over {}",
        interval.min_raw,
        interval.max_raw,
        truth.min_numerator,
        truth.max_numerator,
        g.size()
    );
    assert_eq!(interval.bounds(), naive_interval(truth, g.size()), "{what}: interval");

    let classes = enumerate(
        g,
        kind,
        &SearchOptions {
            collect_all: true,
            ..SearchOptions::default()
        },
    )
    .unwrap();
    assert!(classes.exact, "{what}");
    assert_eq!(classes.achieved, truth.valences, "{what}: achieved set");
    assert_eq!(classes.labeling_count, Some(truth.shapes.len() as u64), "{what}: classes");
    let shapes: BTreeSet<Shape> = classes
        .labelings
        .as_ref()
        .unwrap()
        .iter()
        .map(|f| {
            let s = f.signature();
            (s.vertex_labels, s.labeled_edges)
        })
        .collect();
    assert_eq!(shapes, truth.shapes, "{what}: class shapes");
    for (k, w) in &classes.witnesses {
        assert_eq!(w.valence(), *k, "{what}: witness valence");
    }

    let raw = enumerate(
        g,
        kind,
        &SearchOptions {
            dedup: false,
            ..SearchOptions::default()
        },
    )
    .unwrap();
    assert_eq!(raw.labeling_count, Some(truth.raw), "{what}: raw count");
    assert_eq!(raw.achieved, truth.valences, "{what}: raw achieved set");
}

#[test]
fn sem_matches_full_permutation_search() {
    let mut graphs: Vec<Graph> = corpus(usize::MAX);
    graphs.extend(magiclab_core::pool::graphs_of_order(7).into_iter().filter(|g| g.size() > 0));
    assert!(graphs.len() > 1000);
    for g in &graphs {
        compare(g, Mode::Sem, &naive(g, Mode::Sem));
    }
}

#[test]
fn em_matches_full_permutation_search() {
    let graphs = corpus(9);
    assert!(graphs.len() > 50);
    for g in &graphs {
        compare(g, Mode::Em, &naive(g, Mode::Em));
    }
}

#[test]
fn known_small_spectra() {
    // K2: vertices {1,2}, edge 3, valence 6 in the super case; edge-magic
    // labelings of K2 reach every k in [6, 6] only
    let k2 = common::family("path:2");
    assert_eq!(naive(&k2, Mode::Sem).valences, BTreeSet::from([6]));
    assert_eq!(naive(&k2, Mode::Em).valences, BTreeSet::from([6]));
    let c3 = common::family("cycle:3");
    assert_eq!(naive(&c3, Mode::Sem).valences, BTreeSet::from([9]));
    assert_eq!(naive(&c3, Mode::Em).valences, BTreeSet::from([9, 10, 11, 12]));
}
