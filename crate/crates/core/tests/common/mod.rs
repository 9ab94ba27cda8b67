//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the crate's search, interval or signature code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use magiclab_core::{FamilySpec, Graph, Mode};

/// Sorted vertex labels plus sorted label pairs of the edges.
pub type Shape = (Vec<u32>, Vec<(u32, u32)>);

#[derive(Debug, Default)]
pub struct Naive {
    /// Extrema of `q * valence` over every bijection, valid or not.
    pub min_numerator: u64,
    pub max_numerator: u64,
    pub valences: BTreeSet<u32>,
    /// Labelings counted as plain bijections.
    pub raw: u64,
    pub shapes: BTreeSet<Shape>,
}

fn shape(g: &Graph, vertices: &[u32]) -> Shape {
    let mut labels = vertices.to_vec();
    labels.sort();
    let pairs: BTreeSet<(u32, u32)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (vertices[u - 1], vertices[v - 1]);
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    (labels, pairs.into_iter().collect())
}

/// Tries every assignment of `[1, p]` to vertices. Edge labels are then
/// forced: the largest endpoint sum takes `p + 1`, the next `p + 2`, and so on.
pub fn naive_sem(g: &Graph) -> Naive {
    let (p, q) = (g.order(), g.size());
    let edge_total: u64 = (p as u64 + 1..=(p + q) as u64).sum();
    let mut out = Naive {
        min_numerator: u64::MAX,
        ..Naive::default()
    };
    for perm in (1..=p as u32).permutations(p) {
        let mut sums: Vec<u32> = g.edges().iter().map(|&(u, v)| perm[u - 1] + perm[v - 1]).collect();
        let numerator = sums.iter().map(|&s| s as u64).sum::<u64>() + edge_total;
        out.min_numerator = out.min_numerator.min(numerator);
        out.max_numerator = out.max_numerator.max(numerator);
        sums.sort_by(|a, b| b.cmp(a));
        let totals: BTreeSet<u32> = sums
            .iter()
            .enumerate()
            .map(|(i, s)| s + p as u32 + 1 + i as u32)
            .collect();
        if totals.len() == 1 {
            out.valences.insert(*totals.iter().next().unwrap());
            out.raw += 1;
            out.shapes.insert(shape(g, &perm));
        }
    }
    out
}

/// Tries every bijection of `[1, p+q]` onto vertices followed by edges.
pub fn naive_em(g: &Graph) -> Naive {
    let (p, q) = (g.order(), g.size());
    let mut out = Naive {
        min_numerator: u64::MAX,
        ..Naive::default()
    };
    for perm in (1..=(p + q) as u32).permutations(p + q) {
        let (vertices, edges) = perm.split_at(p);
        let totals: Vec<u32> = g
            .edges()
            .iter()
            .zip(edges)
            .map(|(&(u, v), &e)| vertices[u - 1] + vertices[v - 1] + e)
            .collect();
        let numerator: u64 = totals.iter().map(|&t| t as u64).sum();
        out.min_numerator = out.min_numerator.min(numerator);
        out.max_numerator = out.max_numerator.max(numerator);
        if totals.iter().all(|&t| t == totals[0]) {
            out.valences.insert(totals[0]);
            out.raw += 1;
            out.shapes.insert(shape(g, vertices));
        }
    }
    out
}

pub fn naive(g: &Graph, kind: Mode) -> Naive {
    match kind {
        Mode::Sem => naive_sem(g),
        Mode::Em => naive_em(g),
    }
}

/// Integer interval `[ceil(min / q), floor(max / q)]`, empty as `None`.
pub fn naive_interval(n: &Naive, q: usize) -> Option<(u32, u32)> {
    let q = q as u64;
    let lo = n.min_numerator.div_ceil(q);
    let hi = n.max_numerator / q;
    (lo <= hi).then_some((lo as u32, hi as u32))
}

pub fn family(spec: &str) -> Graph {
    spec.parse::<FamilySpec>().unwrap().build().unwrap()
}

/// Named graphs with p + q <= 9, mostly numbered differently from the pool.
pub const FAMILIES: &[&str] = &[
    "path:2",
    "path:3",
    "path:4",
    "path:5",
    "cycle:3",
    "cycle:4",
    "complete:3",
    "star:n=2,l=0",
    "star:n=3,l=0",
    "star:n=4,l=0",
    "star:n=2,l=1",
    "star:n=3,l=1",
    "star:n=2,l=2",
    "star:n=1,l=3",
    "union:cycle:3+1K1",
    "union:cycle:3+2K1",
    "union:cycle:4+1K1",
    "union:path:4+1K1",
];

/// Every graph of the test corpus with at least one edge and `p + q <= max`.
pub fn corpus(max: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = (1..=6)
        .flat_map(magiclab_core::pool::graphs_of_order)
        .filter(|g| g.size() > 0 && g.order() + g.size() <= max)
        .collect();
    out.extend(
        FAMILIES
            .iter()
            .map(|s| family(s))
            .filter(|g| g.order() + g.size() <= max),
    );
    out
}
