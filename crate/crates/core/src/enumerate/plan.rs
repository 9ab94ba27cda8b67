use crate::graph::Graph;

/// Assignment order for the non-isolated vertices of a graph.
///
/// `back[i]` lists the earlier positions adjacent to position `i`, so every
/// edge is completed exactly once, when its later endpoint is placed.
/// `twin_prev[i]` is the nearest earlier position holding a twin of the
/// vertex at `i`; swapping twins is a graph automorphism, so requiring
/// increasing labels along twin chains keeps one member of every signature
/// class.
#[derive(Debug, Clone)]
pub(crate) struct Plan {
    pub vertices: Vec<usize>,
    pub back: Vec<Vec<usize>>,
    pub twin_prev: Vec<Option<usize>>,
    pub isolated: Vec<usize>,
}

impl Plan {
    /// Descending degree, ties by vertex id.
    pub fn by_degree(g: &Graph, break_twins: bool) -> Plan {
        let mut vertices: Vec<usize> = (1..=g.order()).filter(|&v| g.degree(v) > 0).collect();
        vertices.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        Plan::from_order(g, vertices, break_twins)
    }

    /// Greedy order that keeps the placed set connected: start at the
    /// highest-degree vertex, then repeatedly take the vertex with the most
    /// placed neighbours (ties: higher degree, lower id).
    pub fn by_connectivity(g: &Graph, break_twins: bool) -> Plan {
        let mut remaining: Vec<usize> = (1..=g.order()).filter(|&v| g.degree(v) > 0).collect();
        let mut placed = vec![false; g.order() + 1];
        let mut vertices = Vec::with_capacity(remaining.len());
        while !remaining.is_empty() {
            let (idx, _) = remaining
                .iter()
                .enumerate()
                .max_by_key(|&(_, &v)| {
                    let back = g.neighbors(v).iter().filter(|&&w| placed[w]).count();
                    (back, g.degree(v), std::cmp::Reverse(v))
                })
                .expect("non-empty");
            let v = remaining.remove(idx);
            placed[v] = true;
            vertices.push(v);
        }
        Plan::from_order(g, vertices, break_twins)
    }

    fn from_order(g: &Graph, vertices: Vec<usize>, break_twins: bool) -> Plan {
        let mut position = vec![usize::MAX; g.order() + 1];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let back = vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut b: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .map(|&w| position[w])
                    .filter(|&j| j < i)
                    .collect();
                b.sort_unstable();
                b
            })
            .collect();
        let twin_prev = vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                if !break_twins {
                    return None;
                }
                (0..i).rev().find(|&j| are_twins(g, v, vertices[j]))
            })
            .collect();
        let isolated = (1..=g.order()).filter(|&v| g.degree(v) == 0).collect();
        Plan {
            vertices,
            back,
            twin_prev,
            isolated,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }
}

/// `N(u) \ {v} = N(v) \ {u}`: the transposition `(u v)` is an automorphism.
fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let strip = |x: usize, y: usize| g.neighbors(x).iter().copied().filter(move |&w| w != y);
    g.degree(u) == g.degree(v) && strip(u, v).eq(strip(v, u))
}

/// Factorial as `u64`; isolated vertices contribute `t!` raw labelings.
pub(crate) fn factorial(t: usize) -> u64 {
    (1..=t as u64).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn graph(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn star_plan() {
        let plan = Plan::by_degree(&graph("star:n=3,l=2"), true);
        assert_eq!(plan.vertices, vec![1, 2, 3, 4]);
        assert_eq!(plan.twin_prev, vec![None, None, Some(1), Some(2)]);
        assert_eq!(plan.back[3], vec![0]);
        assert_eq!(plan.isolated, vec![5, 6]);
    }

    #[test]
    fn cycle_twins_and_order() {
        // C4: opposite vertices are false twins
        let plan = Plan::by_connectivity(&graph("cycle:4"), true);
        assert_eq!(plan.vertices, vec![1, 2, 3, 4]);
        assert_eq!(plan.twin_prev, vec![None, None, Some(0), Some(1)]);
        // K3: every pair is a true twin
        let plan = Plan::by_degree(&graph("cycle:3"), true);
        assert_eq!(plan.twin_prev, vec![None, Some(0), Some(1)]);
        let plan = Plan::by_degree(&graph("cycle:5"), true);
        assert!(plan.twin_prev.iter().all(Option::is_none));
        let total_back: usize = plan.back.iter().map(Vec::len).sum();
        assert_eq!(total_back, 5);
    }
}
