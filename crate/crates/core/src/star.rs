//! Super edge-magic and edge-magic labelings of `K_{1,n} ∪ lK_1`.
//!
//! Vertex numbering follows [`FamilySpec::Star`]: the center is vertex 1,
//! leaves are `2..=n+1` and the isolated vertices come last.
//!
//! In every super edge-magic labeling of the star the leaf labels form a
//! block of `n` consecutive integers `[a, a+n−1]` and the center takes one
//! of the `l+1` labels outside it. The pair `(a, center)` therefore names
//! the labeling up to isomorphism.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::StarError;
use crate::graph::{FamilySpec, Graph};
use crate::labeling::{extend_sem, TotalLabeling, VertexLabeling};

/// Type 1 when the center label lies below the leaf window, type 2 above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum StarType {
    T1,
    T2,
}

impl fmt::Display for StarType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StarType::T1 => "T1",
            StarType::T2 => "T2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StarSemLabeling {
    pub n: usize,
    pub l: usize,
    /// Smallest leaf label; leaves carry `[a, a+n−1]`.
    pub leaf_window_start: u32,
    pub center_label: u32,
}

impl StarSemLabeling {
    pub fn new(n: usize, l: usize, leaf_window_start: u32, center_label: u32) -> Result<Self, StarError> {
        check_params(n)?;
        let a = leaf_window_start;
        let p = (n + l + 1) as u32;
        if a < 1 || a as usize > l + 2 {
            return Err(StarError::Parameter(format!(
                "leaf window start {a} outside [1, {}]",
                l + 2
            )));
        }
        let in_window = a <= center_label && center_label < a + n as u32;
        if center_label < 1 || center_label > p || in_window {
            return Err(StarError::Parameter(format!(
                "center label {center_label} must lie in [1, {p}] outside [{a}, {}]",
                a + n as u32 - 1
            )));
        }
        Ok(StarSemLabeling {
            n,
            l,
            leaf_window_start: a,
            center_label,
        })
    }

    pub fn order(&self) -> usize {
        self.n + self.l + 1
    }

    /// Vertex labels in vertex-id order: center, leaves ascending, then the
    /// unused labels ascending on the isolated vertices.
    pub fn vertex_labels(&self) -> Vec<u32> {
        let a = self.leaf_window_start;
        let last = a + self.n as u32 - 1;
        let mut labels = Vec::with_capacity(self.order());
        labels.push(self.center_label);
        labels.extend(a..=last);
        labels.extend(
            (1..=self.order() as u32).filter(|&x| x != self.center_label && !(a..=last).contains(&x)),
        );
        labels
    }

    pub fn graph(&self) -> Graph {
        star_graph(self.n, self.l)
    }

    /// The super edge-magic labeling obtained by extending the vertex labels.
    pub fn to_total_labeling(&self) -> Result<TotalLabeling, StarError> {
        self.labeling_on(Arc::new(self.graph()))
    }

    fn labeling_on(&self, graph: Arc<Graph>) -> Result<TotalLabeling, StarError> {
        let vl = VertexLabeling::new(graph, self.vertex_labels())?;
        Ok(extend_sem(&vl)?)
    }

    pub fn classify(&self) -> StarType {
        if self.center_label < self.leaf_window_start {
            StarType::T1
        } else {
            StarType::T2
        }
    }

    /// The labeling obtained from the complementary labeling `x ↦ p+1−x`.
    pub fn complement(&self) -> StarSemLabeling {
        let p1 = self.order() as u32 + 1;
        StarSemLabeling {
            leaf_window_start: p1 - (self.leaf_window_start + self.n as u32 - 1),
            center_label: p1 - self.center_label,
            ..*self
        }
    }

    /// Low characteristic `γ = f(x) + f(y_1)`.
    pub fn low_characteristic(&self) -> u32 {
        self.center_label + self.leaf_window_start
    }

    /// High characteristic `Γ = f(x) + f(y_n)`.
    pub fn high_characteristic(&self) -> u32 {
        self.low_characteristic() + self.n as u32 - 1
    }
}

fn check_params(n: usize) -> Result<(), StarError> {
    if n < 1 {
        return Err(StarError::Parameter("star requires n >= 1".into()));
    }
    Ok(())
}

fn star_graph(n: usize, l: usize) -> Graph {
    FamilySpec::Star { n, l }
        .build()
        .expect("n >= 1 checked by the caller")
}

/// All `(l+1)(l+2)` window/center choices, ordered by window start and then
/// by center label.
pub fn generate_all(n: usize, l: usize) -> Result<Vec<StarSemLabeling>, StarError> {
    check_params(n)?;
    let p = (n + l + 1) as u32;
    let mut out = Vec::with_capacity((l + 1) * (l + 2));
    for a in 1..=(l + 2) as u32 {
        let last = a + n as u32 - 1;
        for c in (1..=p).filter(|c| !(a..=last).contains(c)) {
            out.push(StarSemLabeling {
                n,
                l,
                leaf_window_start: a,
                center_label: c,
            });
        }
    }
    Ok(out)
}

/// Extends every member of [`generate_all`] on one shared graph.
pub fn generate_total(n: usize, l: usize) -> Result<Vec<TotalLabeling>, StarError> {
    let graph = Arc::new(star_graph_checked(n, l)?);
    generate_all(n, l)?
        .iter()
        .map(|s| s.labeling_on(Arc::clone(&graph)))
        .collect()
}

fn star_graph_checked(n: usize, l: usize) -> Result<Graph, StarError> {
    Ok(FamilySpec::Star { n, l }.build()?)
}

/// Valence from the leaf window: `f(x) + f(y_1) + 2n + l + 1`.
pub fn valence_of(s: &StarSemLabeling) -> u32 {
    valence_formulas(s).0
}

/// Both closed forms, `f(x)+f(y_1)+2n+l+1` and `f(x)+f(y_n)+n+l+2`.
pub fn valence_formulas(s: &StarSemLabeling) -> (u32, u32) {
    let (n, l) = (s.n as u32, s.l as u32);
    (
        s.low_characteristic() + 2 * n + l + 1,
        s.high_characteristic() + n + l + 2,
    )
}

pub fn classify(s: &StarSemLabeling) -> StarType {
    s.classify()
}

/// The complement of a type 1 labeling, which is of type 2.
pub fn phi(s: &StarSemLabeling) -> Result<StarSemLabeling, StarError> {
    match s.classify() {
        StarType::T1 => Ok(s.complement()),
        t => Err(StarError::NotTypeOne(t)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValenceSets {
    pub t1: BTreeSet<u32>,
    pub t2: BTreeSet<u32>,
    pub union: BTreeSet<u32>,
}

impl ValenceSets {
    /// `[2n+l+4, 2n+3l+4]`, from `γ ∈ [3, 2l+3]` over type 1 labelings.
    pub fn t1_closed_form(n: usize, l: usize) -> (u32, u32) {
        let (n, l) = (n as u32, l as u32);
        (2 * n + l + 4, 2 * n + 3 * l + 4)
    }

    /// Image of the type 1 range under `k ↦ 4p+q+3−k`.
    pub fn t2_closed_form(n: usize, l: usize) -> (u32, u32) {
        let (n, l) = (n as u32, l as u32);
        (3 * n + l + 3, 3 * n + 3 * l + 3)
    }
}

/// Valences of the type 1 and type 2 labelings and their union.
pub fn valence_sets(n: usize, l: usize) -> Result<ValenceSets, StarError> {
    let mut t1 = BTreeSet::new();
    let mut t2 = BTreeSet::new();
    for s in generate_all(n, l)? {
        match s.classify() {
            StarType::T1 => t1.insert(valence_of(&s)),
            StarType::T2 => t2.insert(valence_of(&s)),
        };
    }
    let union = t1.union(&t2).copied().collect();
    Ok(ValenceSets { t1, t2, union })
}

/// Edge-magic labeling `f_k` of valence `4n+3l+2−k`.
///
/// The center gets `2n+l+1`, leaf `i` gets `n+l+i` and the edge to leaf `i`
/// gets `n+l+1−i−k`. The `l` labels left over go to the isolated vertices
/// in ascending order.
pub fn em_fk(n: usize, l: usize, k: usize) -> Result<TotalLabeling, StarError> {
    check_params(n)?;
    if k > l {
        return Err(StarError::Parameter(format!("k = {k} outside [0, {l}]")));
    }
    let graph = Arc::new(star_graph_checked(n, l)?);
    let (n32, l32, k32) = (n as u32, l as u32, k as u32);
    let mut vertices = Vec::with_capacity(n + l + 1);
    vertices.push(2 * n32 + l32 + 1);
    vertices.extend((1..=n32).map(|i| n32 + l32 + i));
    let edges: Vec<u32> = (1..=n32).map(|i| n32 + l32 + 1 - i - k32).collect();
    let used: BTreeSet<u32> = vertices.iter().chain(&edges).copied().collect();
    vertices.extend((1..=2 * n32 + l32 + 1).filter(|x| !used.contains(x)));
    // graph.edges() is sorted, so edge i joins the center to vertex i+2
    Ok(TotalLabeling::new(graph, vertices, edges)?)
}

/// Number of labelings per valence.
pub fn histogram<'a, I>(labelings: I) -> BTreeMap<u32, usize>
where
    I: IntoIterator<Item = &'a TotalLabeling>,
{
    let mut hist = BTreeMap::new();
    for f in labelings {
        *hist.entry(f.valence()).or_insert(0) += 1;
    }
    hist
}
