//! Exhaustive pools of small graphs, one per isomorphism class.
//!
//! An edge set on `p` vertices is a bitmask over the `p(p−1)/2` vertex
//! pairs. A mask is kept only if no vertex permutation maps it to a smaller
//! mask, which leaves exactly one representative per class.

use itertools::Itertools;

use crate::graph::Graph;

/// Largest order accepted by [`graphs_of_order`].
pub const MAX_POOL_ORDER: usize = 7;

fn pairs(p: usize) -> Vec<(usize, usize)> {
    (0..p).tuple_combinations().collect()
}

fn pair_index(p: usize) -> Vec<Vec<usize>> {
    let mut index = vec![vec![usize::MAX; p]; p];
    for (i, (u, v)) in pairs(p).into_iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    index
}

/// Every graph of order `p` up to isomorphism, ordered by size and then by
/// canonical mask.
pub fn graphs_of_order(p: usize) -> Vec<Graph> {
    assert!(p <= MAX_POOL_ORDER, "pool order {p} exceeds {MAX_POOL_ORDER}");
    let pairs = pairs(p);
    let index = pair_index(p);
    // image of every pair under every permutation except the identity
    let maps: Vec<Vec<usize>> = (0..p)
        .permutations(p)
        .skip(1)
        .map(|perm| pairs.iter().map(|&(u, v)| index[perm[u]][perm[v]]).collect())
        .collect();
    let m = pairs.len();
    let mut found: Vec<u32> = (0u32..1 << m)
        .filter(|&mask| {
            maps.iter().all(|map| {
                let mut image = 0u32;
                for (i, &j) in map.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        image |= 1 << j;
                    }
                }
                image >= mask
            })
        })
        .collect();
    found.sort_by_key(|&mask| (mask.count_ones(), mask));
    found
        .into_iter()
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &(u, v))| (u + 1, v + 1));
            Graph::new(p, edges).expect("pairs are valid edges")
        })
        .collect()
}

/// Non-isomorphic graphs with `p` vertices and `q` edges.
pub fn graphs(p: usize, q: usize) -> Vec<Graph> {
    graphs_of_order(p)
        .into_iter()
        .filter(|g| g.size() == q)
        .collect()
}
