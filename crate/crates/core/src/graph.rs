//! Finite simple graphs on vertices `1..=p`, the graph families used
//! throughout the crate, and the structural queries the search relies on.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::GraphError;

/// A finite simple graph with vertices `1..=p`.
///
/// Edges are stored normalized (`u < v`) and sorted, so two graphs with the
/// same edge set compare equal regardless of input order. The display name
/// does not take part in equality.
#[derive(Debug, Clone)]
pub struct Graph {
    p: usize,
    edges: Vec<(usize, usize)>,
    name: Option<String>,
    adjacency: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.p.hash(state);
        self.edges.hash(state);
    }
}

impl Graph {
    pub fn new<I>(p: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > p {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: p });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
        }
        let edges: Vec<_> = seen.into_iter().collect();
        let mut adjacency = vec![Vec::new(); p + 1];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            p,
            edges,
            name: None,
            adjacency,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.p
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Display name, falling back to `p,q` when the graph is anonymous.
    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => format!("G(p={},q={})", self.p, self.size()),
        }
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Degrees indexed by vertex id minus one.
    pub fn degrees(&self) -> Vec<usize> {
        (1..=self.p).map(|v| self.degree(v)).collect()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn isolated_count(&self) -> usize {
        (1..=self.p).filter(|&v| self.degree(v) == 0).count()
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// This graph plus `t` isolated vertices `p+1..=p+t`.
    pub fn with_isolated(&self, t: usize) -> Graph {
        let mut g = Graph::new(self.p + t, self.edges.iter().copied())
            .expect("adding isolated vertices keeps a valid graph");
        if t > 0 {
            g.name = Some(format!("{} ∪ {}K1", self.label(), t));
        } else {
            g.name = self.name.clone();
        }
        g
    }

    pub fn has_triangle(&self) -> bool {
        self.edges.iter().any(|&(u, v)| {
            self.adjacency[u]
                .iter()
                .any(|&w| w != v && self.is_adjacent(v, w))
        })
    }

    /// Length of a shortest cycle, by breadth-first search from every vertex.
    pub fn girth(&self) -> Girth {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.p + 1];
        let mut parent = vec![0usize; self.p + 1];
        for s in 1..=self.p {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        match best {
            Some(g) => Girth::Finite(g),
            None => Girth::Infinite,
        }
    }
}

/// Girth of a graph; forests have no cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

/// Parses the `p q` / `u v` edge-list text format.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        message: "missing header `p q`".into(),
    })?;
    let (p, q) = parse_pair(hline, header, "header `p q`")?;
    let mut edges = Vec::with_capacity(q);
    let mut seen = BTreeSet::new();
    for (line, body) in lines.by_ref().take(q) {
        let (u, v) = parse_pair(line, body, "edge `u v`")?;
        for w in [u, v] {
            if w == 0 || w > p {
                return Err(GraphError::Parse {
                    line,
                    message: format!("vertex {w} out of range 1..={p}"),
                });
            }
        }
        if u == v {
            return Err(GraphError::Parse {
                line,
                message: format!("self-loop at vertex {u}"),
            });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(GraphError::Parse {
                line,
                message: format!("duplicate edge {u}-{v}"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != q {
        return Err(GraphError::Parse {
            line: hline,
            message: format!("header announces {q} edges, found {}", edges.len()),
        });
    }
    if let Some((line, _)) = lines.next() {
        return Err(GraphError::Parse {
            line,
            message: "trailing content after edge list".into(),
        });
    }
    Graph::new(p, edges)
}

fn parse_pair(line: usize, body: &str, what: &str) -> Result<(usize, usize), GraphError> {
    let err = || GraphError::Parse {
        line,
        message: format!("expected {what}, found `{body}`"),
    };
    let mut it = body.split_whitespace();
    let a = it.next().and_then(|s| s.parse().ok()).ok_or_else(err)?;
    let b = it.next().and_then(|s| s.parse().ok()).ok_or_else(err)?;
    if it.next().is_some() {
        return Err(err());
    }
    Ok((a, b))
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parametrized graph families.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `K_{1,n} ∪ lK_1`: center 1, leaves `2..=n+1`, isolated vertices after.
    Star { n: usize, l: usize },
    /// Path on `n` vertices.
    Path { n: usize },
    Cycle { m: usize },
    Complete { n: usize },
    /// `C_m ⊙ K̄_n`: cycle `1..=m`, then `n` pendants per cycle vertex in order.
    CoronaCycle { m: usize, n: usize },
    /// `C_m^n`: `n` pendants on every odd-position vertex of an odd cycle.
    Cmn { m: usize, n: usize },
    /// `C(n; j_1..j_n)`: `j_k` pendants on the k-th cycle vertex.
    IrregularCrown { j: Vec<usize> },
    UnionIsolated { base: Box<FamilySpec>, t: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, GraphError> {
        let g = match self {
            FamilySpec::Star { n, l } => {
                if *n < 1 {
                    return Err(GraphError::Parameter("star requires n >= 1".into()));
                }
                Graph::new(n + l + 1, (2..=n + 1).map(|v| (1, v)))?
            }
            FamilySpec::Path { n } => {
                if *n < 1 {
                    return Err(GraphError::Parameter("path requires n >= 1".into()));
                }
                Graph::new(*n, (1..*n).map(|v| (v, v + 1)))?
            }
            FamilySpec::Cycle { m } => crown(&vec![0; *m], "cycle requires m >= 3")?,
            FamilySpec::Complete { n } => {
                if *n < 1 {
                    return Err(GraphError::Parameter("complete requires n >= 1".into()));
                }
                Graph::new(*n, (1..=*n).flat_map(|u| (u + 1..=*n).map(move |v| (u, v))))?
            }
            FamilySpec::CoronaCycle { m, n } => {
                crown(&vec![*n; *m], "corona requires m >= 3")?
            }
            FamilySpec::Cmn { m, n } => {
                if *m < 3 || m % 2 == 0 {
                    return Err(GraphError::Parameter("cmn requires odd m >= 3".into()));
                }
                let j: Vec<usize> = (1..=*m).map(|k| if k % 2 == 1 { *n } else { 0 }).collect();
                crown(&j, "cmn requires odd m >= 3")?
            }
            FamilySpec::IrregularCrown { j } => crown(j, "crown requires more than 2 cycle vertices")?,
            FamilySpec::UnionIsolated { base, t } => base.build()?.with_isolated(*t),
        };
        Ok(g.with_name(self.to_string()))
    }
}

/// Cycle `1..=n` followed by `j[k-1]` pendants attached to cycle vertex `k`.
fn crown(j: &[usize], msg: &str) -> Result<Graph, GraphError> {
    let n = j.len();
    if n < 3 {
        return Err(GraphError::Parameter(msg.into()));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v, v + 1)).collect();
    edges.push((1, n));
    let mut next = n + 1;
    for (k, &count) in j.iter().enumerate() {
        for _ in 0..count {
            edges.push((k + 1, next));
            next += 1;
        }
    }
    Graph::new(next - 1, edges)
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.build()
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Star { n, l } => write!(f, "star:n={n},l={l}"),
            FamilySpec::Path { n } => write!(f, "path:{n}"),
            FamilySpec::Cycle { m } => write!(f, "cycle:{m}"),
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::CoronaCycle { m, n } => write!(f, "corona:m={m},n={n}"),
            FamilySpec::Cmn { m, n } => write!(f, "cmn:m={m},n={n}"),
            FamilySpec::IrregularCrown { j } => {
                let js: Vec<String> = j.iter().map(|x| x.to_string()).collect();
                write!(f, "crown:j={}", js.join(","))
            }
            FamilySpec::UnionIsolated { base, t } => write!(f, "union:{base}+{t}K1"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    /// Parses the family DSL, e.g. `star:n=3,l=2`, `cycle:5`,
    /// `crown:j=1,0,2`, `union:cycle:3+1K1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let unknown = || GraphError::UnknownFamily(s.to_string());
        let (kind, rest) = s.split_once(':').ok_or_else(unknown)?;
        if kind == "union" {
            let (base, iso) = rest.rsplit_once('+').ok_or_else(unknown)?;
            let t = iso
                .strip_suffix("K1")
                .and_then(|t| if t.is_empty() { Some(1) } else { t.parse().ok() })
                .ok_or_else(unknown)?;
            return Ok(FamilySpec::UnionIsolated {
                base: Box::new(base.parse()?),
                t,
            });
        }
        if kind == "crown" {
            let list = rest.strip_prefix("j=").unwrap_or(rest);
            let j = list
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| unknown())?;
            return Ok(FamilySpec::IrregularCrown { j });
        }
        let params = parse_params(rest).ok_or_else(unknown)?;
        let get = |key: &str, pos: usize, default: Option<usize>| -> Result<usize, GraphError> {
            params
                .iter()
                .find(|(k, _)| k.as_deref() == Some(key))
                .or_else(|| params.iter().filter(|(k, _)| k.is_none()).nth(pos))
                .map(|(_, v)| *v)
                .or(default)
                .ok_or_else(|| GraphError::Parameter(format!("{kind}: missing `{key}`")))
        };
        match kind {
            "star" => Ok(FamilySpec::Star {
                n: get("n", 0, None)?,
                l: get("l", 1, Some(0))?,
            }),
            "path" => Ok(FamilySpec::Path { n: get("n", 0, None)? }),
            "cycle" => Ok(FamilySpec::Cycle { m: get("m", 0, None)? }),
            "complete" => Ok(FamilySpec::Complete { n: get("n", 0, None)? }),
            "corona" => Ok(FamilySpec::CoronaCycle {
                m: get("m", 0, None)?,
                n: get("n", 1, None)?,
            }),
            "cmn" => Ok(FamilySpec::Cmn {
                m: get("m", 0, None)?,
                n: get("n", 1, None)?,
            }),
            _ => Err(unknown()),
        }
    }
}

/// `a=1,b=2` or bare `5` style parameter lists.
fn parse_params(s: &str) -> Option<Vec<(Option<String>, usize)>> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            match part.split_once('=') {
                Some((k, v)) => Some((Some(k.trim().to_string()), v.trim().parse().ok()?)),
                None => Some((None, part.parse().ok()?)),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn star_layout() {
        let g = family("star:n=3,l=2");
        assert_eq!(g.order(), 6);
        assert_eq!(g.edges(), &[(1, 2), (1, 3), (1, 4)]);
        assert_eq!(g.isolated_count(), 2);
    }

    #[test]
    fn cmn_and_corona_sizes() {
        let g = family("cmn:m=3,n=1");
        assert_eq!((g.order(), g.size()), (5, 5));
        assert_eq!(g.degrees(), vec![3, 2, 3, 1, 1]);
        let c = family("corona:m=3,n=1");
        assert_eq!((c.order(), c.size()), (6, 6));
        let k = family("crown:j=1,0,2");
        assert_eq!((k.order(), k.size()), (6, 6));
        assert_eq!(k.degree(3), 4);
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(
            FamilySpec::Cycle { m: 2 }.build(),
            Err(GraphError::Parameter(_))
        ));
        assert!(FamilySpec::Cmn { m: 4, n: 1 }.build().is_err());
        assert!(FamilySpec::Star { n: 0, l: 1 }.build().is_err());
        assert!("wheel:5".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(family("cycle:5").girth(), Girth::Finite(5));
        assert_eq!(family("star:n=3").girth(), Girth::Infinite);
        let paw = Graph::new(4, [(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        assert_eq!(paw.girth(), Girth::Finite(3));
        assert_eq!(family("cycle:4").with_isolated(1).girth(), Girth::Finite(4));
        assert_eq!(family("complete:4").girth(), Girth::Finite(3));
    }

    #[test]
    fn parse_examples() {
        let star = parse_graph("4 3\n1 2\n1 3\n1 4\n").unwrap();
        assert_eq!(star, family("star:n=3"));
        let c3 = parse_graph("3 3\n1 2\n2 3\n1 3\n").unwrap();
        assert_eq!(c3, family("cycle:3"));
        match parse_graph("2 1\n1 3\n") {
            Err(GraphError::Parse { line, message }) => {
                assert_eq!(line, 2);
                assert!(message.contains("vertex 3 out of range"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_graph("3 2\n1 2\n2 1\n"),
            Err(GraphError::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_graph("x y\n"), Err(GraphError::Parse { line: 1, .. })));
        assert!(parse_graph("3 2\n1 2\n").is_err());
    }

    #[test]
    fn dsl_round_trip() {
        for s in [
            "star:n=3,l=2",
            "path:4",
            "cycle:5",
            "corona:m=3,n=2",
            "cmn:m=5,n=1",
            "crown:j=1,0,2",
            "union:cycle:3+1K1",
            "union:star:n=2,l=0+3K1",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!(family("union:cycle:3+1K1").order(), 4);
        assert_eq!(family("star:4"), family("star:n=4,l=0"));
    }
}
