//! Super edge-magic search over vertex bijections `V → [1, p]`.
//!
//! Vertices are placed in descending-degree order. Every completed edge adds
//! its endpoint sum to a bitset; a branch dies on a repeated sum or when the
//! running window `max − min` exceeds `q − 1`. Surviving leaves have exactly
//! `q` consecutive sums and extend to a labeling of valence `p + q + min`.

use itertools::Itertools;

use super::plan::{factorial, Plan};
use super::{Collect, Meter, Outcome};
use crate::graph::Graph;

pub(crate) struct SemSearch<'g> {
    graph: &'g Graph,
    plan: Plan,
    p: u32,
    q: u32,
    dedup: bool,
}

struct State {
    labels: Vec<u32>,
    used: u64,
    sums: u128,
    lo: u32,
    hi: u32,
}

impl<'g> SemSearch<'g> {
    pub fn new(graph: &'g Graph, dedup: bool) -> Self {
        SemSearch {
            graph,
            plan: Plan::by_degree(graph, dedup),
            p: graph.order() as u32,
            q: graph.size() as u32,
            dedup,
        }
    }

    /// One partition per label of the first placed vertex.
    pub fn partitions(&self) -> usize {
        self.p as usize
    }

    pub fn run(&self, partition: usize, meter: &mut Meter<'_>, collect: Collect) -> Outcome {
        let mut out = Outcome::default();
        let mut st = State {
            labels: vec![0; self.plan.len()],
            used: 0,
            sums: 0,
            lo: u32::MAX,
            hi: 0,
        };
        let first = partition as u32 + 1;
        if meter.tick() {
            st.labels[0] = first;
            st.used = 1 << first;
            self.dfs(1, &mut st, meter, &mut out, collect);
        }
        out
    }

    fn dfs(&self, pos: usize, st: &mut State, meter: &mut Meter<'_>, out: &mut Outcome, collect: Collect) {
        if pos == self.plan.len() {
            self.leaf(st, meter, out, collect);
            return;
        }
        let floor = self.plan.twin_prev[pos].map_or(0, |t| st.labels[t]);
        for x in floor + 1..=self.p {
            if st.used & (1 << x) != 0 {
                continue;
            }
            let mut added = 0u128;
            let (mut lo, mut hi) = (st.lo, st.hi);
            let mut ok = true;
            for &j in &self.plan.back[pos] {
                let s = x + st.labels[j];
                let bit = 1u128 << s;
                if (st.sums | added) & bit != 0 {
                    ok = false;
                    break;
                }
                added |= bit;
                lo = lo.min(s);
                hi = hi.max(s);
            }
            if !ok || (hi >= lo && hi - lo > self.q - 1) {
                continue;
            }
            if !meter.tick() {
                return;
            }
            let saved = (st.lo, st.hi);
            st.labels[pos] = x;
            st.used |= 1 << x;
            st.sums |= added;
            st.lo = lo;
            st.hi = hi;
            self.dfs(pos + 1, st, meter, out, collect);
            st.used &= !(1 << x);
            st.sums &= !added;
            (st.lo, st.hi) = saved;
            if meter.stopped {
                return;
            }
        }
    }

    fn leaf(&self, st: &State, meter: &mut Meter<'_>, out: &mut Outcome, collect: Collect) {
        debug_assert_eq!(st.sums.count_ones(), self.q);
        let valence = self.p + self.q + st.lo;
        let mut vertices = vec![0u32; self.p as usize];
        for (pos, &v) in self.plan.vertices.iter().enumerate() {
            vertices[v - 1] = st.labels[pos];
        }
        let leftover: Vec<u32> = (1..=self.p).filter(|&l| st.used & (1 << l) == 0).collect();
        let iso = &self.plan.isolated;
        if !self.dedup && collect.collect_all && iso.len() > 1 {
            for perm in leftover.iter().copied().permutations(iso.len()) {
                for (&v, l) in iso.iter().zip(perm) {
                    vertices[v - 1] = l;
                }
                out.record(self.graph, valence, &vertices, collect, 1);
            }
        } else {
            for (&v, &l) in iso.iter().zip(&leftover) {
                vertices[v - 1] = l;
            }
            let multiplicity = if self.dedup { 1 } else { factorial(iso.len()) };
            out.record(self.graph, valence, &vertices, collect, multiplicity);
        }
        if collect.first_only {
            meter.found(collect.global_first);
        }
    }
}
