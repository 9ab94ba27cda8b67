//! Super edge-magic and edge-magic intervals.
//!
//! Both intervals come from extremizing `Σ w_i·g(i)` over bijections `g` onto
//! a label pool. By the rearrangement inequality the minimum pairs the
//! heaviest weight with the smallest label and the maximum pairs them
//! monotonically, so no search is needed. Raw extrema are kept as exact
//! rationals; the interval is `[⌈min⌉, ⌊max⌋]`.

use num_rational::Ratio;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::IntervalError;
use crate::graph::Graph;
use crate::labeling::Mode;

/// Largest `p + q` accepted by [`brute_extrema`].
pub const BRUTE_FORCE_GUARD: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalReport {
    pub kind: Mode,
    pub min_raw: Ratio<i64>,
    pub max_raw: Ratio<i64>,
    bounds: Option<(u32, u32)>,
}

impl IntervalReport {
    fn new(kind: Mode, min_raw: Ratio<i64>, max_raw: Ratio<i64>) -> Self {
        let lo = min_raw.ceil().to_integer();
        let hi = max_raw.floor().to_integer();
        let bounds = (lo <= hi).then_some((lo as u32, hi as u32));
        IntervalReport {
            kind,
            min_raw,
            max_raw,
            bounds,
        }
    }

    /// `(lo, hi)`, or `None` when `⌈min⌉ > ⌊max⌋`.
    pub fn bounds(&self) -> Option<(u32, u32)> {
        self.bounds
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_none()
    }

    pub fn len(&self) -> usize {
        self.bounds.map_or(0, |(lo, hi)| (hi - lo + 1) as usize)
    }

    pub fn contains(&self, k: u32) -> bool {
        self.bounds.is_some_and(|(lo, hi)| lo <= k && k <= hi)
    }

    pub fn values(&self) -> impl Iterator<Item = u32> {
        let (lo, hi) = self.bounds.unwrap_or((1, 0));
        lo..=hi
    }
}

fn ratio_str(r: &Ratio<i64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl Serialize for IntervalReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("IntervalReport", 4)?;
        s.serialize_field("kind", &self.kind)?;
        s.serialize_field("min_raw", &ratio_str(&self.min_raw))?;
        s.serialize_field("max_raw", &ratio_str(&self.max_raw))?;
        s.serialize_field("interval", &self.bounds.map(|(lo, hi)| [lo, hi]))?;
        s.end()
    }
}

/// Minimum and maximum of `Σ weights[i]·g(i)` over all bijections `g` from
/// positions onto `labels`.
pub fn weighted_extrema(weights: &[u64], labels: &[u64]) -> Result<(u64, u64), IntervalError> {
    if weights.len() != labels.len() {
        return Err(IntervalError::LengthMismatch {
            weights: weights.len(),
            labels: labels.len(),
        });
    }
    let mut w = weights.to_vec();
    let mut l = labels.to_vec();
    w.sort_unstable();
    l.sort_unstable();
    let max = w.iter().zip(&l).map(|(a, b)| a * b).sum();
    let min = w.iter().rev().zip(&l).map(|(a, b)| a * b).sum();
    Ok((min, max))
}

/// Position weights and label pool of the valence numerator, plus the
/// constant term (edge labels in the super case).
fn numerator_terms(g: &Graph, kind: Mode) -> (Vec<u64>, Vec<u64>, u64) {
    let (p, q) = (g.order() as u64, g.size() as u64);
    let mut weights: Vec<u64> = g.degrees().into_iter().map(|d| d as u64).collect();
    match kind {
        Mode::Sem => {
            let constant = (p + 1..=p + q).sum();
            (weights, (1..=p).collect(), constant)
        }
        Mode::Em => {
            weights.extend(std::iter::repeat_n(1, q as usize));
            (weights, (1..=p + q).collect(), 0)
        }
    }
}

fn interval(g: &Graph, kind: Mode) -> Result<IntervalReport, IntervalError> {
    if g.size() == 0 {
        return Err(IntervalError::NoEdges);
    }
    let (weights, labels, constant) = numerator_terms(g, kind);
    let (min, max) = weighted_extrema(&weights, &labels)?;
    let q = g.size() as i64;
    Ok(IntervalReport::new(
        kind,
        Ratio::new((min + constant) as i64, q),
        Ratio::new((max + constant) as i64, q),
    ))
}

/// `I_G`: vertex weights `deg(u)` over `[1, p]`, plus `Σ_{i=p+1}^{p+q} i`,
/// over `q`.
pub fn sem_interval(g: &Graph) -> Result<IntervalReport, IntervalError> {
    interval(g, Mode::Sem)
}

/// `λ_G`: weight `deg(u)` on vertices and 1 on edges over `[1, p+q]`, over `q`.
pub fn em_interval(g: &Graph) -> Result<IntervalReport, IntervalError> {
    interval(g, Mode::Em)
}

pub fn interval_of(g: &Graph, kind: Mode) -> Result<IntervalReport, IntervalError> {
    interval(g, kind)
}

/// Exhaustive extrema of the valence expression over every bijection.
/// Oracle for [`sem_interval`] / [`em_interval`]; refuses `p + q > 10`.
pub fn brute_extrema(g: &Graph, kind: Mode) -> Result<(Ratio<i64>, Ratio<i64>), IntervalError> {
    let size = g.order() + g.size();
    if size > BRUTE_FORCE_GUARD {
        return Err(IntervalError::TooLarge {
            size,
            guard: BRUTE_FORCE_GUARD,
        });
    }
    if g.size() == 0 {
        return Err(IntervalError::NoEdges);
    }
    let (weights, mut labels, constant) = numerator_terms(g, kind);
    let eval = |l: &[u64]| -> u64 { weights.iter().zip(l).map(|(w, x)| w * x).sum() };
    let mut min = u64::MAX;
    let mut max = 0;
    heap_permutations(&mut labels, &mut |l| {
        let v = eval(l);
        min = min.min(v);
        max = max.max(v);
    });
    let q = g.size() as i64;
    Ok((
        Ratio::new((min + constant) as i64, q),
        Ratio::new((max + constant) as i64, q),
    ))
}

/// Visits every permutation of `items` in place (Heap's algorithm).
pub(crate) fn heap_permutations<T, F: FnMut(&[T])>(items: &mut [T], visit: &mut F) {
    let n = items.len();
    let mut c = vec![0usize; n];
    visit(items);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            visit(items);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn graph(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn weighted_extrema_examples() {
        // brute force over the 6 bijections of (2,1,1) onto [1,3]: 7, 8, 9
        assert_eq!(weighted_extrema(&[2, 1, 1], &[1, 2, 3]).unwrap(), (7, 9));
        assert_eq!(weighted_extrema(&[3, 3, 3, 3], &[1, 2, 3, 4]).unwrap(), (30, 30));
        assert_eq!(weighted_extrema(&[0, 0], &[1, 2]).unwrap(), (0, 0));
        assert!(weighted_extrema(&[1], &[1, 2]).is_err());
    }

    #[test]
    fn heap_visits_all() {
        let mut v = vec![1, 2, 3, 4];
        let mut seen = std::collections::BTreeSet::new();
        heap_permutations(&mut v, &mut |p| {
            seen.insert(p.to_vec());
        });
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn path_intervals() {
        assert_eq!(sem_interval(&graph("path:2")).unwrap().len(), 1);
        assert_eq!(sem_interval(&graph("path:3")).unwrap().len(), 2);
        assert_eq!(em_interval(&graph("path:2")).unwrap().bounds(), Some((6, 6)));
    }

    #[test]
    fn star_interval_endpoints() {
        for n in 1..=6 {
            for l in 0..=4 {
                let g = graph(&format!("star:n={n},l={l}"));
                let sem = sem_interval(&g).unwrap().bounds().unwrap();
                let em = em_interval(&g).unwrap().bounds().unwrap();
                assert_eq!(sem, (2 * n + l + 4, 3 * n + 3 * l + 3), "n={n} l={l}");
                assert_eq!(em, (2 * n + 4, 4 * n + 3 * l + 2), "n={n} l={l}");
            }
        }
    }

    #[test]
    fn empty_and_undefined() {
        let c4 = sem_interval(&graph("cycle:4")).unwrap();
        assert!(c4.is_empty());
        assert_eq!(c4.min_raw, Ratio::new(46, 4));
        let g = Graph::new(3, []).unwrap();
        assert_eq!(sem_interval(&g), Err(IntervalError::NoEdges));
        assert!(matches!(
            brute_extrema(&graph("cycle:6"), Mode::Em),
            Err(IntervalError::TooLarge { .. })
        ));
    }

    #[test]
    fn brute_examples() {
        let c3 = graph("cycle:3");
        let r = sem_interval(&c3).unwrap();
        assert_eq!(brute_extrema(&c3, Mode::Sem).unwrap(), (r.min_raw, r.max_raw));
        let (min, _) = brute_extrema(&graph("star:n=2,l=1"), Mode::Em).unwrap();
        assert_eq!(min, Ratio::from_integer(8));
        let p3 = graph("path:3");
        let r = em_interval(&p3).unwrap();
        assert_eq!(brute_extrema(&p3, Mode::Em).unwrap(), (r.min_raw, r.max_raw));
    }

    #[test]
    fn report_json() {
        let r = sem_interval(&graph("union:cycle:3+1K1")).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"kind":"sem","min_raw":"10/1","max_raw":"12/1","interval":[10,12]}"#
        );
        let c4 = sem_interval(&graph("cycle:4")).unwrap();
        assert!(serde_json::to_string(&c4).unwrap().ends_with(r#""interval":null}"#));
    }
}
