//! Shared fixtures for the criterion benchmarks.

use magiclab_core::{FamilySpec, Graph};

/// Graphs exercised by the enumeration benchmarks, as `(dsl, graph)`.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    ["star:n=6,l=4", "path:8", "cycle:7", "cmn:m=5,n=1", "union:cycle:3+2K1"]
        .into_iter()
        .map(|s| {
            let g = s
                .parse::<FamilySpec>()
                .and_then(|f| f.build())
                .expect("fixture specs are valid");
            (s, g)
        })
        .collect()
}
