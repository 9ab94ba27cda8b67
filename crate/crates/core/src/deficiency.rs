//! Deficiency parameters: the least number of isolated vertices that makes
//! a graph (perfect) edge-magic or (perfect) super edge-magic.
//!
//! Every search is capped. Running past the cap yields
//! [`DeficiencyValue::ExceededCap`], which says nothing about whether the
//! parameter is finite.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::enumerate::{find_labeling, is_perfect, SearchOptions, SpectrumReport};
use crate::error::EnumerationError;
use crate::graph::Graph;
use crate::labeling::{Mode, TotalLabeling};

/// Default cap for the perfect deficiencies; every step is a full spectrum.
pub const DEFAULT_PERFECT_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeficiencyParameter {
    Mu,
    MuS,
    MuP,
    MuPS,
    StrongMuPS,
}

impl DeficiencyParameter {
    pub fn as_str(self) -> &'static str {
        match self {
            DeficiencyParameter::Mu => "mu",
            DeficiencyParameter::MuS => "mu_s",
            DeficiencyParameter::MuP => "mu_p",
            DeficiencyParameter::MuPS => "mu_p_s",
            DeficiencyParameter::StrongMuPS => "strong_mu_p_s",
        }
    }
}

impl fmt::Display for DeficiencyParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for DeficiencyParameter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "mu" => DeficiencyParameter::Mu,
            "mu_s" | "mu-s" => DeficiencyParameter::MuS,
            "mu_p" | "mu-p" => DeficiencyParameter::MuP,
            "mu_p_s" | "mu-p-s" => DeficiencyParameter::MuPS,
            "strong_mu_p_s" | "strong-mu-p-s" => DeficiencyParameter::StrongMuPS,
            other => return Err(format!("unknown deficiency parameter `{other}`")),
        })
    }
}

/// Outcome of testing `G ∪ nK_1` for one `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepVerdict {
    Perfect,
    Sem,
    Em,
    Fail,
}

impl StepVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            StepVerdict::Perfect => "perfect",
            StepVerdict::Sem => "sem",
            StepVerdict::Em => "em",
            StepVerdict::Fail => "fail",
        }
    }

    pub fn is_success(self) -> bool {
        self != StepVerdict::Fail
    }
}

impl Serialize for StepVerdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeficiencyValue {
    Found(usize),
    ExceededCap(usize),
}

#[derive(Debug, Clone)]
pub enum Witness {
    Labeling(TotalLabeling),
    Spectrum(Box<SpectrumReport>),
}

#[derive(Debug, Clone)]
pub struct DeficiencyResult {
    pub parameter: DeficiencyParameter,
    pub value: DeficiencyValue,
    /// Window used to certify the strong parameter.
    pub window: Option<usize>,
    pub trace: Vec<(usize, StepVerdict)>,
    pub witness: Option<Witness>,
}

impl DeficiencyResult {
    pub fn found(&self) -> Option<usize> {
        match self.value {
            DeficiencyValue::Found(n) => Some(n),
            DeficiencyValue::ExceededCap(_) => None,
        }
    }
}

impl Serialize for DeficiencyResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(None)?;
        m.serialize_entry("parameter", self.parameter.as_str())?;
        match self.value {
            DeficiencyValue::Found(n) => m.serialize_entry("value", &n)?,
            DeficiencyValue::ExceededCap(cap) => m.serialize_entry("exceeded_cap", &cap)?,
        }
        if let Some(w) = self.window {
            m.serialize_entry("window", &w)?;
        }
        m.serialize_entry("trace", &self.trace)?;
        m.end()
    }
}

/// `⌈(q+3)/2⌉ − p` when positive: fewer added vertices leave `q > 2p − 3`.
pub fn size_bound_lower(g: &Graph) -> usize {
    let (p, q) = (g.order(), g.size());
    ((q + 4) / 2).saturating_sub(p)
}

fn existence(
    g: &Graph,
    cap: usize,
    kind: Mode,
    opts: &SearchOptions,
) -> Result<DeficiencyResult, EnumerationError> {
    let (parameter, success, start) = match kind {
        Mode::Sem => (DeficiencyParameter::MuS, StepVerdict::Sem, size_bound_lower(g)),
        Mode::Em => (DeficiencyParameter::Mu, StepVerdict::Em, 0),
    };
    if g.size() == 0 {
        return Err(EnumerationError::NoEdges);
    }
    let mut trace = Vec::new();
    // below the size bound the answer is known without searching
    trace.extend((0..start.min(cap + 1)).map(|n| (n, StepVerdict::Fail)));
    for n in start..=cap {
        match find_labeling(&g.with_isolated(n), kind, opts)? {
            Some(f) => {
                trace.push((n, success));
                return Ok(DeficiencyResult {
                    parameter,
                    value: DeficiencyValue::Found(n),
                    window: None,
                    trace,
                    witness: Some(Witness::Labeling(f)),
                });
            }
            None => trace.push((n, StepVerdict::Fail)),
        }
    }
    Ok(DeficiencyResult {
        parameter,
        value: DeficiencyValue::ExceededCap(cap),
        window: None,
        trace,
        witness: None,
    })
}

/// Super edge-magic deficiency `μ_s`.
pub fn mu_s(g: &Graph, cap: usize, opts: &SearchOptions) -> Result<DeficiencyResult, EnumerationError> {
    existence(g, cap, Mode::Sem, opts)
}

/// Edge-magic deficiency `μ`.
pub fn mu(g: &Graph, cap: usize, opts: &SearchOptions) -> Result<DeficiencyResult, EnumerationError> {
    existence(g, cap, Mode::Em, opts)
}

/// Perfectness of `G ∪ nK_1`; an empty interval counts as not perfect.
fn perfect_step(
    g: &Graph,
    n: usize,
    kind: Mode,
    opts: &SearchOptions,
) -> Result<(bool, Option<SpectrumReport>), EnumerationError> {
    match is_perfect(&g.with_isolated(n), kind, opts) {
        Ok(v) => Ok((v.perfect, Some(v.report))),
        Err(EnumerationError::EmptyInterval) => Ok((false, None)),
        Err(e) => Err(e),
    }
}

fn perfect(
    g: &Graph,
    cap: usize,
    kind: Mode,
    opts: &SearchOptions,
) -> Result<DeficiencyResult, EnumerationError> {
    let parameter = match kind {
        Mode::Sem => DeficiencyParameter::MuPS,
        Mode::Em => DeficiencyParameter::MuP,
    };
    if g.size() == 0 {
        return Err(EnumerationError::NoEdges);
    }
    let mut trace = Vec::new();
    for n in 0..=cap {
        let (ok, report) = perfect_step(g, n, kind, opts)?;
        if ok {
            trace.push((n, StepVerdict::Perfect));
            return Ok(DeficiencyResult {
                parameter,
                value: DeficiencyValue::Found(n),
                window: None,
                trace,
                witness: report.map(|r| Witness::Spectrum(Box::new(r))),
            });
        }
        trace.push((n, StepVerdict::Fail));
    }
    Ok(DeficiencyResult {
        parameter,
        value: DeficiencyValue::ExceededCap(cap),
        window: None,
        trace,
        witness: None,
    })
}

/// Perfect edge-magic deficiency `μ_p`.
pub fn mu_p(g: &Graph, cap: usize, opts: &SearchOptions) -> Result<DeficiencyResult, EnumerationError> {
    perfect(g, cap, Mode::Em, opts)
}

/// Perfect super edge-magic deficiency `μ_p^s`.
pub fn mu_p_s(g: &Graph, cap: usize, opts: &SearchOptions) -> Result<DeficiencyResult, EnumerationError> {
    perfect(g, cap, Mode::Sem, opts)
}

/// Least `t ≤ cap` such that `G ∪ t″K_1` is perfect super edge-magic for
/// every `t″ ∈ [t, t + window]`.
///
/// Only the window is checked, so a found value is a certificate for that
/// window and nothing beyond it.
pub fn strong_mu_p_s(
    g: &Graph,
    cap: usize,
    window: usize,
    opts: &SearchOptions,
) -> Result<DeficiencyResult, EnumerationError> {
    if window < 1 {
        return Err(EnumerationError::Options("window must be at least 1".into()));
    }
    if g.size() == 0 {
        return Err(EnumerationError::NoEdges);
    }
    let mut verdicts: BTreeMap<usize, bool> = BTreeMap::new();
    let mut trace = Vec::new();
    let mut check = |n: usize, trace: &mut Vec<(usize, StepVerdict)>| -> Result<bool, EnumerationError> {
        if let Some(&v) = verdicts.get(&n) {
            return Ok(v);
        }
        let (ok, _) = perfect_step(g, n, Mode::Sem, opts)?;
        verdicts.insert(n, ok);
        trace.push((n, if ok { StepVerdict::Perfect } else { StepVerdict::Fail }));
        Ok(ok)
    };
    let mut t = 0;
    while t <= cap {
        // a failure at t'' rules out every start up to t''
        let mut failed_at = None;
        for n in t..=t + window {
            if !check(n, &mut trace)? {
                failed_at = Some(n);
                break;
            }
        }
        match failed_at {
            None => {
                return Ok(DeficiencyResult {
                    parameter: DeficiencyParameter::StrongMuPS,
                    value: DeficiencyValue::Found(t),
                    window: Some(window),
                    trace,
                    witness: None,
                })
            }
            Some(n) => t = n + 1,
        }
    }
    Ok(DeficiencyResult {
        parameter: DeficiencyParameter::StrongMuPS,
        value: DeficiencyValue::ExceededCap(cap),
        window: Some(window),
        trace,
        witness: None,
    })
}
