//! Edge-magic search, one candidate valence `k` at a time.
//!
//! With `k` fixed every edge label is forced to `k − f(u) − f(v)`, so only
//! the non-isolated vertices branch. A branch dies when a forced edge label
//! leaves `[1, p+q]` or collides with a label already in use. Isolated
//! vertices take whatever labels remain.

use itertools::Itertools;

use super::plan::{factorial, Plan};
use super::{Collect, Meter, Outcome};
use crate::graph::Graph;
use crate::interval::IntervalReport;

pub(crate) struct EmSearch<'g> {
    graph: &'g Graph,
    plan: Plan,
    total: u32,
    valences: Vec<u32>,
    dedup: bool,
}

struct State {
    k: u32,
    labels: Vec<u32>,
    used: u64,
}

impl<'g> EmSearch<'g> {
    pub fn new(graph: &'g Graph, interval: &IntervalReport, dedup: bool) -> Self {
        EmSearch {
            graph,
            plan: Plan::by_connectivity(graph, dedup),
            total: (graph.order() + graph.size()) as u32,
            valences: interval.values().collect(),
            dedup,
        }
    }

    /// One partition per candidate valence.
    pub fn partitions(&self) -> usize {
        self.valences.len()
    }

    pub fn run(&self, partition: usize, meter: &mut Meter<'_>, collect: Collect) -> Outcome {
        let mut out = Outcome::default();
        let mut st = State {
            k: self.valences[partition],
            labels: vec![0; self.plan.len()],
            used: 0,
        };
        self.dfs(0, &mut st, meter, &mut out, collect);
        out
    }

    fn dfs(&self, pos: usize, st: &mut State, meter: &mut Meter<'_>, out: &mut Outcome, collect: Collect) {
        if pos == self.plan.len() {
            self.leaf(st, meter, out, collect);
            return;
        }
        let back = &self.plan.back[pos];
        let max_back = back.iter().map(|&j| st.labels[j]).max().unwrap_or(0);
        let floor = self.plan.twin_prev[pos].map_or(0, |t| st.labels[t]);
        for x in floor + 1..=self.total {
            // forced edge labels shrink as x grows
            if x + max_back >= st.k {
                break;
            }
            let xbit = 1u64 << x;
            if st.used & xbit != 0 {
                continue;
            }
            let mut added = xbit;
            let mut ok = true;
            for &j in back {
                let e = st.k - x - st.labels[j];
                let bit = 1u64 << e;
                if e > self.total || (st.used | added) & bit != 0 {
                    ok = false;
                    break;
                }
                added |= bit;
            }
            if !ok {
                continue;
            }
            if !meter.tick() {
                return;
            }
            st.labels[pos] = x;
            st.used |= added;
            self.dfs(pos + 1, st, meter, out, collect);
            st.used &= !added;
            if meter.stopped {
                return;
            }
        }
    }

    fn leaf(&self, st: &State, meter: &mut Meter<'_>, out: &mut Outcome, collect: Collect) {
        let p = self.graph.order();
        let mut vertices = vec![0u32; p];
        for (pos, &v) in self.plan.vertices.iter().enumerate() {
            vertices[v - 1] = st.labels[pos];
        }
        let leftover: Vec<u32> = (1..=self.total).filter(|&l| st.used & (1 << l) == 0).collect();
        let iso = &self.plan.isolated;
        debug_assert_eq!(leftover.len(), iso.len());
        if !self.dedup && collect.collect_all && iso.len() > 1 {
            for perm in leftover.iter().copied().permutations(iso.len()) {
                for (&v, l) in iso.iter().zip(perm) {
                    vertices[v - 1] = l;
                }
                out.record(self.graph, st.k, &vertices, collect, 1);
            }
        } else {
            for (&v, &l) in iso.iter().zip(&leftover) {
                vertices[v - 1] = l;
            }
            let multiplicity = if self.dedup { 1 } else { factorial(iso.len()) };
            out.record(self.graph, st.k, &vertices, collect, multiplicity);
        }
        if collect.first_only {
            meter.found(collect.global_first);
        }
    }
}
