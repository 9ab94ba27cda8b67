use std::fmt;

use crate::graph::Graph;

/// Sound necessary conditions for a graph to be super edge-magic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Feasibility {
    PossiblySem,
    NotSem(InfeasibleReason),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InfeasibleReason {
    /// `q > 2p − 3`.
    SizeBound { q: usize, bound: usize },
    /// `q ∈ {2p − 3, 2p − 4}` without a triangle, `p ≥ 4`.
    TriangleRule { q: usize, p: usize },
}

impl fmt::Display for InfeasibleReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfeasibleReason::SizeBound { q, bound } => {
                write!(f, "size bound: q = {q} > 2p-3 = {bound}")
            }
            InfeasibleReason::TriangleRule { q, p } => {
                write!(f, "triangle rule: q = {q} with p = {p} requires a triangle")
            }
        }
    }
}

pub fn prune_feasibility(g: &Graph) -> Feasibility {
    let (p, q) = (g.order() as i64, g.size() as i64);
    let bound = 2 * p - 3;
    if q > bound {
        return Feasibility::NotSem(InfeasibleReason::SizeBound {
            q: q as usize,
            bound: bound.max(0) as usize,
        });
    }
    // K2 and P3 escape the rule, so it only applies from p = 4 on
    if p >= 4 && (q == 2 * p - 3 || q == 2 * p - 4) && !g.has_triangle() {
        return Feasibility::NotSem(InfeasibleReason::TriangleRule {
            q: q as usize,
            p: p as usize,
        });
    }
    Feasibility::PossiblySem
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn graph(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn examples() {
        assert!(matches!(
            prune_feasibility(&graph("cycle:4")),
            Feasibility::NotSem(InfeasibleReason::TriangleRule { .. })
        ));
        assert!(matches!(
            prune_feasibility(&graph("complete:4")),
            Feasibility::NotSem(InfeasibleReason::SizeBound { q: 6, bound: 5 })
        ));
        assert_eq!(prune_feasibility(&graph("cycle:5")), Feasibility::PossiblySem);
        assert_eq!(prune_feasibility(&graph("cycle:3")), Feasibility::PossiblySem);
        // triangle-free and super edge-magic despite q = 2p-4 and q = 2p-3
        assert_eq!(prune_feasibility(&graph("path:3")), Feasibility::PossiblySem);
        assert_eq!(prune_feasibility(&graph("path:2")), Feasibility::PossiblySem);
    }
}
