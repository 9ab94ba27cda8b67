//! Total labelings, their valence, the super edge-magic extension of a
//! vertex bijection, complementation, characteristics and the labeled
//! adjacency signature used to decide when two labelings are isomorphic.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::LabelingError;
use crate::graph::Graph;

/// A checked edge-magic total labeling.
///
/// Vertex labels are indexed by vertex id minus one, edge labels follow the
/// order of [`Graph::edges`]. Construction validates bijectivity onto
/// `[1, p+q]` and the constant edge sum, so every value of this type is a
/// genuine edge-magic labeling.
#[derive(Debug, Clone)]
pub struct TotalLabeling {
    graph: Arc<Graph>,
    vertices: Vec<u32>,
    edges: Vec<u32>,
    valence: u32,
}

impl PartialEq for TotalLabeling {
    fn eq(&self, other: &Self) -> bool {
        *self.graph == *other.graph && self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for TotalLabeling {}

impl TotalLabeling {
    pub fn new(
        graph: Arc<Graph>,
        vertices: Vec<u32>,
        edges: Vec<u32>,
    ) -> Result<Self, LabelingError> {
        let valence = valence(&graph, &vertices, &edges)?;
        Ok(TotalLabeling {
            graph,
            vertices,
            edges,
            valence,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn valence(&self) -> u32 {
        self.valence
    }

    /// Label of vertex `v` (1-based).
    pub fn vertex_label(&self, v: usize) -> u32 {
        self.vertices[v - 1]
    }

    pub fn vertex_labels(&self) -> &[u32] {
        &self.vertices
    }

    pub fn edge_labels(&self) -> &[u32] {
        &self.edges
    }

    /// Whether the vertex labels are exactly `[1, p]`.
    pub fn is_super(&self) -> bool {
        self.vertices.iter().all(|&l| l as usize <= self.graph.order())
    }

    /// Induced endpoint sums `f(u) + f(v)`, in edge order.
    pub fn edge_sums(&self) -> Vec<u32> {
        self.graph
            .edges()
            .iter()
            .map(|&(u, v)| self.vertex_label(u) + self.vertex_label(v))
            .collect()
    }

    pub fn signature(&self) -> Signature {
        Signature::of(&self.graph, &self.vertices)
    }

    pub fn to_json(&self) -> LabelingJson {
        LabelingJson {
            vertices: self.vertices.clone(),
            edges: self
                .graph
                .edges()
                .iter()
                .zip(&self.edges)
                .map(|(&(u, v), &l)| [u as u32, v as u32, l])
                .collect(),
            valence: self.valence,
            is_super: self.is_super(),
        }
    }

    /// Rebuilds a labeling of `graph` from its JSON form, revalidating it.
    pub fn from_json(graph: Arc<Graph>, json: &LabelingJson) -> Result<Self, LabelingError> {
        let mut edges = vec![0u32; graph.size()];
        if json.edges.len() != graph.size() {
            return Err(LabelingError::WrongLength {
                expected: graph.size(),
                got: json.edges.len(),
            });
        }
        for &[u, v, l] in &json.edges {
            let idx = graph
                .edge_index(u as usize, v as usize)
                .ok_or(LabelingError::GraphMismatch)?;
            edges[idx] = l;
        }
        let f = TotalLabeling::new(graph, json.vertices.clone(), edges)?;
        if f.valence != json.valence {
            return Err(LabelingError::GraphMismatch);
        }
        Ok(f)
    }
}

/// Wire form of a labeling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingJson {
    pub vertices: Vec<u32>,
    pub edges: Vec<[u32; 3]>,
    pub valence: u32,
    #[serde(rename = "super")]
    pub is_super: bool,
}

fn check_bijection(labels: impl Iterator<Item = u32>, max: u32) -> Result<(), LabelingError> {
    let mut seen = vec![false; max as usize + 1];
    for l in labels {
        if l == 0 || l > max || std::mem::replace(&mut seen[l as usize], true) {
            return Err(LabelingError::NotBijective { max });
        }
    }
    Ok(())
}

/// Valence of the assignment, validating that it is an edge-magic labeling.
///
/// The result also satisfies `k·q = Σ deg(u) f(u) + Σ f(e)`.
pub fn valence(graph: &Graph, vertices: &[u32], edges: &[u32]) -> Result<u32, LabelingError> {
    let (p, q) = (graph.order(), graph.size());
    if vertices.len() != p {
        return Err(LabelingError::WrongLength {
            expected: p,
            got: vertices.len(),
        });
    }
    if edges.len() != q {
        return Err(LabelingError::WrongLength {
            expected: q,
            got: edges.len(),
        });
    }
    if q == 0 {
        return Err(LabelingError::NoEdges);
    }
    check_bijection(vertices.iter().chain(edges).copied(), (p + q) as u32)?;
    let es = graph.edges();
    let sum = |i: usize| vertices[es[i].0 - 1] + vertices[es[i].1 - 1] + edges[i];
    let k = sum(0);
    if let Some(i) = (1..q).find(|&i| sum(i) != k) {
        return Err(LabelingError::NotEdgeMagic {
            first: es[0],
            first_sum: k,
            second: es[i],
            second_sum: sum(i),
        });
    }
    let weighted: u64 = (1..=p)
        .map(|v| graph.degree(v) as u64 * vertices[v - 1] as u64)
        .sum::<u64>()
        + edges.iter().map(|&l| l as u64).sum::<u64>();
    debug_assert_eq!(weighted, k as u64 * q as u64);
    Ok(k)
}

/// A bijection `V → [1, p]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLabeling {
    graph: Arc<Graph>,
    labels: Vec<u32>,
}

impl VertexLabeling {
    pub fn new(graph: Arc<Graph>, labels: Vec<u32>) -> Result<Self, LabelingError> {
        if labels.len() != graph.order() {
            return Err(LabelingError::WrongLength {
                expected: graph.order(),
                got: labels.len(),
            });
        }
        check_bijection(labels.iter().copied(), graph.order() as u32)?;
        Ok(VertexLabeling { graph, labels })
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Induced sums `g(u) + g(v)` in edge order.
    pub fn edge_sums(&self) -> Vec<u32> {
        self.graph
            .edges()
            .iter()
            .map(|&(u, v)| self.labels[u - 1] + self.labels[v - 1])
            .collect()
    }
}

/// Extends a vertex bijection whose edge sums are `q` consecutive integers
/// to a super edge-magic labeling of valence `p + q + min(S)`.
pub fn extend_sem(g: &VertexLabeling) -> Result<TotalLabeling, LabelingError> {
    let graph = &g.graph;
    let (p, q) = (graph.order() as u32, graph.size() as u32);
    if q == 0 {
        return Err(LabelingError::NoEdges);
    }
    let sums = g.edge_sums();
    let mut sorted = sums.clone();
    sorted.sort_unstable();
    let consecutive = sorted.windows(2).all(|w| w[1] == w[0] + 1);
    if !consecutive {
        return Err(LabelingError::NotExtendable {
            sums: sorted,
            q: q as usize,
        });
    }
    let k = p + q + sorted[0];
    let edges = sums.iter().map(|s| k - s).collect();
    TotalLabeling::new(Arc::clone(graph), g.labels.clone(), edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Sem,
    Em,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Sem => "sem",
            Mode::Em => "em",
        })
    }
}

/// Complementary labeling.
///
/// `Sem` maps vertex labels `x ↦ p+1−x` and edge labels `x ↦ 2p+q+1−x`;
/// `Em` maps every label `x ↦ p+q+1−x`.
pub fn complement(f: &TotalLabeling, mode: Mode) -> Result<TotalLabeling, LabelingError> {
    let (p, q) = (f.graph.order() as u32, f.graph.size() as u32);
    let (vmap, emap) = match mode {
        Mode::Sem => {
            if !f.is_super() {
                return Err(LabelingError::NotSuper);
            }
            (p + 1, 2 * p + q + 1)
        }
        Mode::Em => (p + q + 1, p + q + 1),
    };
    TotalLabeling::new(
        Arc::clone(&f.graph),
        f.vertices.iter().map(|&x| vmap - x).collect(),
        f.edges.iter().map(|&x| emap - x).collect(),
    )
}

/// Low and high characteristic `(min S, max S)` of a super labeling.
pub fn characteristics(f: &TotalLabeling) -> Result<(u32, u32), LabelingError> {
    if !f.is_super() {
        return Err(LabelingError::NotSuper);
    }
    let sums = f.edge_sums();
    let lo = *sums.iter().min().ok_or(LabelingError::NoEdges)?;
    let hi = *sums.iter().max().ok_or(LabelingError::NoEdges)?;
    Ok((lo, hi))
}

/// Labeled adjacency structure: the vertex labels in increasing order and the
/// edges renamed by their endpoint labels. Edge labels are not part of it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub vertex_labels: Vec<u32>,
    pub labeled_edges: Vec<(u32, u32)>,
}

impl Signature {
    /// Signature of the vertex assignment `vertices` (indexed by vertex id − 1).
    pub fn of(graph: &Graph, vertices: &[u32]) -> Signature {
        let mut vertex_labels = vertices.to_vec();
        vertex_labels.sort_unstable();
        let mut labeled_edges: Vec<(u32, u32)> = graph
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (vertices[u - 1], vertices[v - 1]);
                (a.min(b), a.max(b))
            })
            .collect();
        labeled_edges.sort_unstable();
        Signature {
            vertex_labels,
            labeled_edges,
        }
    }
}

pub fn isomorphic(f: &TotalLabeling, g: &TotalLabeling) -> Result<bool, LabelingError> {
    if *f.graph != *g.graph {
        return Err(LabelingError::GraphMismatch);
    }
    Ok(f.signature() == g.signature())
}
