use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::time::Duration;

use magiclab_core::deficiency::{self, DeficiencyResult, DeficiencyValue};
use magiclab_core::enumerate::SpectrumReport;
use magiclab_core::labeling::LabelingJson;
use magiclab_core::star::{self, StarType};
use magiclab_core::verify::{self, VerifyParams};
use magiclab_core::{
    enumerate, find_labeling, interval_of, is_perfect, parse_graph, prune_feasibility,
    EnumerationError, Feasibility, FamilySpec, Girth, Graph, IntervalReport, Mode, SearchOptions,
    TotalLabeling,
};
use serde_json::{json, Value};

use crate::args::{DeficiencyVerb, GlobalArgs, GraphSource, GraphVerb, LabelVerb, StarVerb};
use crate::output::{join, to_value, Output, Status};

/// A command that could not produce a report.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl fmt::Display) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }
}

impl From<EnumerationError> for Failure {
    fn from(e: EnumerationError) -> Self {
        let code = match e {
            EnumerationError::Inconclusive { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

pub type CmdResult = Result<Output, Failure>;

pub fn load_graph(source: &GraphSource) -> Result<Graph, Failure> {
    match (&source.graph, &source.file) {
        (Some(spec), _) => spec
            .parse::<FamilySpec>()
            .and_then(|s| s.build())
            .map_err(|e| Failure::usage(format!("bad graph spec `{spec}`: {e}"))),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("reading {}: {e}", path.display())))?;
            let g = parse_graph(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            Ok(g.with_name(path.display().to_string()))
        }
        (None, None) => Err(Failure::usage("one of --graph or --file is required")),
    }
}

pub fn search_options(global: &GlobalArgs) -> Result<SearchOptions, Failure> {
    let time_limit = match global.time_limit {
        Some(s) if s.is_finite() && s >= 0.0 => Some(Duration::from_secs_f64(s)),
        Some(s) => return Err(Failure::usage(format!("invalid --time-limit {s}"))),
        None => None,
    };
    let opts = SearchOptions {
        time_limit,
        node_limit: global.node_limit,
        ..SearchOptions::default().with_workers(global.workers)
    };
    opts.validate()?;
    Ok(opts)
}

fn fmt_set(values: impl IntoIterator<Item = u32>) -> String {
    let s = join(values, " ");
    if s.is_empty() {
        "-".into()
    } else {
        s
    }
}

fn fmt_bounds(r: &IntervalReport) -> String {
    match r.bounds() {
        Some((lo, hi)) => format!("[{lo}, {hi}]"),
        None => "empty".into(),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn status_of(exact: bool) -> Status {
    if exact {
        Status::Ok
    } else {
        Status::Inexact
    }
}

fn girth_value(g: Girth) -> Value {
    match g {
        Girth::Finite(n) => json!(n),
        Girth::Infinite => json!("inf"),
    }
}

// ---- graph -------------------------------------------------------------

pub fn graph(verb: GraphVerb, g: &Graph) -> CmdResult {
    match verb {
        GraphVerb::Show => {
            let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(u, v)| [u, v]).collect();
            let value = json!({
                "name": g.label(),
                "p": g.order(),
                "q": g.size(),
                "degrees": g.degrees(),
                "girth": girth_value(g.girth()),
                "edges": edges,
            });
            let text = format!(
                "graph: {}\norder: {}\nsize: {}\ndegrees: {}\ngirth: {}\nedges: {}\n",
                g.label(),
                g.order(),
                g.size(),
                join(g.degrees(), " "),
                g.girth(),
                join(g.edges().iter().map(|(u, v)| format!("{u}-{v}")), " ")
            );
            let csv = std::iter::once("u,v".to_string())
                .chain(g.edges().iter().map(|(u, v)| format!("{u},{v}")))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output::new(value, text).with_csv(csv))
        }
        GraphVerb::Interval => {
            let sem = interval_of(g, Mode::Sem).map_err(EnumerationError::from)?;
            let em = interval_of(g, Mode::Em).map_err(EnumerationError::from)?;
            let value = json!({"sem": to_value(&sem), "em": to_value(&em)});
            let mut text = String::new();
            let mut csv = String::from("kind,min_raw,max_raw,lo,hi\n");
            for r in [&sem, &em] {
                let _ = writeln!(
                    text,
                    "{}: {} (raw extrema {} .. {})",
                    r.kind,
                    fmt_bounds(r),
                    r.min_raw,
                    r.max_raw
                );
                let (lo, hi) = r
                    .bounds()
                    .map_or((String::new(), String::new()), |(a, b)| (a.to_string(), b.to_string()));
                let _ = writeln!(csv, "{},{},{},{lo},{hi}", r.kind, r.min_raw, r.max_raw);
            }
            Ok(Output::new(value, text).with_csv(csv))
        }
        GraphVerb::Feasibility => {
            let (feasible, reason) = match prune_feasibility(g) {
                Feasibility::PossiblySem => (true, None),
                Feasibility::NotSem(r) => (false, Some(r.to_string())),
            };
            let value = json!({"possibly_sem": feasible, "reason": reason});
            let text = match &reason {
                None => "no necessary condition rules out a super edge-magic labeling\n".to_string(),
                Some(r) => format!("not super edge-magic: {r}\n"),
            };
            Ok(Output::new(value, text))
        }
    }
}

// ---- sem / em ----------------------------------------------------------

fn spectrum_text(g: &Graph, r: &SpectrumReport) -> String {
    let mut s = String::new();
    // no graph name here: the cache key only sees the edge list
    let _ = writeln!(s, "{} spectrum (p={}, q={})", r.kind, g.order(), g.size());
    let _ = writeln!(s, "interval: {}", fmt_bounds(&r.interval));
    let _ = writeln!(s, "achieved: {}", fmt_set(r.achieved.iter().copied()));
    let _ = writeln!(s, "missing: {}", fmt_set(r.missing()));
    let _ = writeln!(s, "perfect: {}", yes_no(r.perfect));
    if let Some(c) = r.labeling_count {
        let _ = writeln!(s, "labelings: {c}");
    }
    let _ = writeln!(s, "exact: {}", yes_no(r.exact));
    let _ = writeln!(s, "nodes: {}", r.stats.nodes);
    if let Some(p) = &r.stats.pruned {
        let _ = writeln!(s, "pruned: {p}");
    }
    s
}

fn spectrum_csv(r: &SpectrumReport) -> String {
    let mut s = String::from("valence,achieved\n");
    for k in r.interval.values() {
        let _ = writeln!(s, "{k},{}", r.achieved.contains(&k));
    }
    s
}

fn labeling_line(f: &LabelingJson) -> String {
    format!(
        "k={} vertices=[{}] edges=[{}]",
        f.valence,
        join(&f.vertices, " "),
        join(f.edges.iter().map(|[u, v, l]| format!("{u}-{v}:{l}")), " ")
    )
}

fn labelings_output(list: &[LabelingJson]) -> Output {
    let text = list.iter().map(labeling_line).collect::<Vec<_>>().join("\n");
    let mut csv = String::from("valence,vertices,edges\n");
    for f in list {
        let _ = writeln!(
            csv,
            "{},{},{}",
            f.valence,
            join(&f.vertices, " "),
            join(f.edges.iter().map(|[u, v, l]| format!("{u}-{v}:{l}")), " ")
        );
    }
    Output::new(to_value(&list), text).with_csv(csv)
}

pub fn labeling(mode: Mode, verb: LabelVerb, g: &Graph, opts: &SearchOptions) -> CmdResult {
    match verb {
        LabelVerb::Interval => {
            let r = interval_of(g, mode).map_err(EnumerationError::from)?;
            let text = format!(
                "{}: {} (raw extrema {} .. {})\n",
                mode,
                fmt_bounds(&r),
                r.min_raw,
                r.max_raw
            );
            Ok(Output::new(to_value(&r), text))
        }
        LabelVerb::Spectrum => {
            let r = enumerate(g, mode, opts)?;
            Ok(Output::new(to_value(&r.to_json()), spectrum_text(g, &r))
                .with_csv(spectrum_csv(&r))
                .with_status(status_of(r.exact)))
        }
        LabelVerb::Count => {
            let r = enumerate(g, mode, opts)?;
            let count = r.labeling_count.unwrap_or(0);
            let value = json!({"kind": mode, "count": count, "exact": r.exact});
            Ok(Output::new(value, format!("{count}\n"))
                .with_csv(format!("count\n{count}\n"))
                .with_status(status_of(r.exact)))
        }
        LabelVerb::Find => {
            let found = find_labeling(g, mode, opts)?;
            let json = found.as_ref().map(TotalLabeling::to_json);
            let text = match &json {
                Some(f) => labeling_line(f),
                None => format!("no {mode} labeling exists"),
            };
            Ok(Output::new(json!({"found": json.is_some(), "labeling": json}), text))
        }
        LabelVerb::Perfect => match is_perfect(g, mode, opts) {
            Ok(v) => {
                let r = &v.report;
                let value = json!({
                    "perfect": v.perfect,
                    "interval": r.interval.bounds().map(|(a, b)| [a, b]),
                    "achieved": r.achieved,
                    "missing": r.missing(),
                });
                let text = format!(
                    "perfect: {}\ninterval: {}\nmissing: {}\n",
                    yes_no(v.perfect),
                    fmt_bounds(&r.interval),
                    fmt_set(r.missing())
                );
                Ok(Output::new(value, text))
            }
            Err(EnumerationError::EmptyInterval) => {
                let value = json!({"perfect": null, "interval": null, "achieved": [], "missing": []});
                Ok(Output::new(value, "perfect: undefined (empty interval)\n".into()))
            }
            Err(e) => Err(e.into()),
        },
        LabelVerb::List => {
            let opts = SearchOptions {
                collect_all: true,
                ..opts.clone()
            };
            let r = enumerate(g, mode, &opts)?;
            let list: Vec<LabelingJson> = r
                .labelings
                .as_deref()
                .unwrap_or_default()
                .iter()
                .map(TotalLabeling::to_json)
                .collect();
            Ok(labelings_output(&list).with_status(status_of(r.exact)))
        }
    }
}

// ---- deficiency --------------------------------------------------------

pub fn deficiency(
    verb: DeficiencyVerb,
    g: &Graph,
    cap: usize,
    window: usize,
    opts: &SearchOptions,
) -> CmdResult {
    let r: DeficiencyResult = match verb {
        DeficiencyVerb::Mu => deficiency::mu(g, cap, opts)?,
        DeficiencyVerb::MuS => deficiency::mu_s(g, cap, opts)?,
        DeficiencyVerb::MuP => deficiency::mu_p(g, cap, opts)?,
        DeficiencyVerb::MuPS => deficiency::mu_p_s(g, cap, opts)?,
        DeficiencyVerb::Strong => deficiency::strong_mu_p_s(g, cap, window, opts)?,
    };
    let mut text = match r.value {
        DeficiencyValue::Found(n) => format!("{} = {n}", r.parameter),
        DeficiencyValue::ExceededCap(c) => format!("{} > {c} (cap exceeded)", r.parameter),
    };
    if let Some(w) = r.window {
        let _ = write!(text, " (window {w})");
    }
    let _ = write!(
        text,
        "\ntrace: {}\n",
        join(r.trace.iter().map(|(n, v)| format!("{n}:{}", v.as_str())), " ")
    );
    let mut csv = String::from("n,verdict\n");
    for (n, v) in &r.trace {
        let _ = writeln!(csv, "{n},{}", v.as_str());
    }
    Ok(Output::new(to_value(&r), text).with_csv(csv))
}

// ---- star --------------------------------------------------------------

fn histogram_csv(hist: &BTreeMap<u32, usize>) -> String {
    let mut s = String::from("valence,count\n");
    for (k, c) in hist {
        let _ = writeln!(s, "{k},{c}");
    }
    s
}

pub fn star(verb: StarVerb, n: usize, l: usize, k: Option<usize>) -> CmdResult {
    let usage = |e: magiclab_core::StarError| Failure::usage(e);
    match verb {
        StarVerb::Count => {
            let count = star::generate_all(n, l).map_err(usage)?.len();
            let value = json!({"n": n, "l": l, "count": count});
            Ok(Output::new(value, format!("{count}\n")).with_csv(format!("n,l,count\n{n},{l},{count}\n")))
        }
        StarVerb::Generate | StarVerb::Histogram => {
            let family = star::generate_all(n, l).map_err(usage)?;
            let labelings = star::generate_total(n, l).map_err(usage)?;
            let hist = star::histogram(&labelings);
            let csv = histogram_csv(&hist);
            if verb == StarVerb::Histogram {
                let value: BTreeMap<String, usize> = hist.iter().map(|(k, c)| (k.to_string(), *c)).collect();
                return Ok(Output::new(to_value(&value), csv.clone()).with_csv(csv));
            }
            let json: Vec<LabelingJson> = labelings.iter().map(TotalLabeling::to_json).collect();
            let mut text = String::from("type  window  center  valence\n");
            for (s, f) in family.iter().zip(&labelings) {
                let t = match s.classify() {
                    StarType::T1 => "T1",
                    StarType::T2 => "T2",
                };
                let _ = writeln!(
                    text,
                    "{t:<5} [{}, {}]  {:>6}  {:>7}",
                    s.leaf_window_start,
                    s.leaf_window_start + n as u32 - 1,
                    s.center_label,
                    f.valence()
                );
            }
            Ok(Output::new(to_value(&json), text).with_csv(csv))
        }
        StarVerb::Valences => {
            let sets = star::valence_sets(n, l).map_err(usage)?;
            let text = format!(
                "S(T1): {}\nS(T2): {}\nsigma: {}\n",
                fmt_set(sets.t1.iter().copied()),
                fmt_set(sets.t2.iter().copied()),
                fmt_set(sets.union.iter().copied())
            );
            Ok(Output::new(to_value(&sets), text))
        }
        StarVerb::Fk => {
            let ks: Vec<usize> = match k {
                Some(k) => vec![k],
                None => (0..=l).collect(),
            };
            let list = ks
                .into_iter()
                .map(|k| star::em_fk(n, l, k).map(|f| f.to_json()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(usage)?;
            Ok(labelings_output(&list))
        }
    }
}

// ---- verify ------------------------------------------------------------

pub fn verify_list() -> Output {
    let text = verify::SUITES.join("\n");
    Output::new(to_value(&verify::SUITES), text.clone()).with_csv(format!("suite\n{text}"))
}

pub fn verify_run(suite: &str, params: &VerifyParams) -> CmdResult {
    let reports = verify::run(suite, params).map_err(|e| match e {
        magiclab_core::VerifyError::UnknownSuite(_) => Failure::usage(e),
        magiclab_core::VerifyError::Enumeration { source, .. } => source.into(),
        other => Failure::usage(other),
    })?;
    let passed = reports.iter().all(|r| r.passed());
    let mut csv = String::from("suite,instance,expected,observed,verdict\n");
    for r in &reports {
        for c in &r.cases {
            let _ = writeln!(
                csv,
                "{},\"{}\",\"{}\",\"{}\",{}",
                r.suite, c.instance, c.expected, c.observed, c.verdict
            );
        }
    }
    let status = if passed {
        Status::Ok
    } else {
        Status::VerificationFailed
    };
    Ok(Output::new(to_value(&reports), verify::render_table(&reports))
        .with_csv(csv)
        .with_status(status))
}
