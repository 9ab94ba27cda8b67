use std::collections::BTreeSet;

use itertools::Itertools;

use super::{Case, VerifyParams};
use crate::enumerate::{enumerate_em, enumerate_sem, is_perfect, SearchOptions, SpectrumReport};
use crate::error::{EnumerationError, StarError, VerifyError};
use crate::graph::{FamilySpec, Girth, Graph};
use crate::interval::{brute_extrema, interval_of};
use crate::labeling::{complement, Mode, Signature};
use crate::pool::graphs_of_order;
use crate::star::{self, StarSemLabeling, StarType, ValenceSets};

type SuiteOutput = (Vec<Case>, Vec<String>);

pub(super) fn run(suite: &'static str, params: &VerifyParams) -> Result<SuiteOutput, VerifyError> {
    let cx = Ctx {
        suite,
        opts: &params.search,
    };
    match suite {
        "sigma-q2p3" => sigma_q2p3(&cx),
        "sigma-q2p4" => sigma_q2p4(&cx),
        "sigma-q2p5-girth5" => sigma_q2p5(&cx),
        "forbidden-valence-girth4" => forbidden_valence(&cx),
        "star-count" => star_count(&cx),
        "star-T1T2" => star_t1t2(&cx),
        "star-ST1-consecutive" => star_consecutive(&cx),
        "star-perfect-iff" => star_perfect(&cx),
        "star-fk" => star_fk(&cx),
        "star-E3F2" => star_e3f2(&cx),
        "paths-perfect" => paths_perfect(&cx),
        "c3-family" => c3_family(&cx),
        "complement-identities" => complement_identities(&cx),
        "interval-oracle" => interval_oracle(&cx),
        "star-interval-discrepancy" => star_interval_discrepancy(&cx),
        other => Err(VerifyError::UnknownSuite(other.to_string())),
    }
}

struct Ctx<'a> {
    suite: &'static str,
    opts: &'a SearchOptions,
}

impl Ctx<'_> {
    fn enumeration(&self, source: EnumerationError) -> VerifyError {
        VerifyError::Enumeration {
            suite: self.suite,
            source,
        }
    }

    fn star(&self, source: StarError) -> VerifyError {
        VerifyError::Star {
            suite: self.suite,
            source,
        }
    }

    fn exact(&self, r: Result<SpectrumReport, EnumerationError>) -> Result<SpectrumReport, VerifyError> {
        let r = r.map_err(|e| self.enumeration(e))?;
        if !r.exact {
            return Err(self.enumeration(EnumerationError::Inconclusive { nodes: r.stats.nodes }));
        }
        Ok(r)
    }

    /// Achieved valences only.
    fn sem(&self, g: &Graph) -> Result<SpectrumReport, VerifyError> {
        self.exact(enumerate_sem(g, &self.opts.clone().spectrum_only()))
    }

    fn em(&self, g: &Graph) -> Result<SpectrumReport, VerifyError> {
        self.exact(enumerate_em(g, &self.opts.clone().spectrum_only()))
    }

    fn all_labelings(&self, g: &Graph, kind: Mode) -> Result<SpectrumReport, VerifyError> {
        let opts = SearchOptions {
            dedup: true,
            count: true,
            collect_all: true,
            ..self.opts.clone()
        };
        match kind {
            Mode::Sem => self.exact(enumerate_sem(g, &opts)),
            Mode::Em => self.exact(enumerate_em(g, &opts)),
        }
    }
}

fn family(spec: &str) -> Graph {
    spec.parse::<FamilySpec>()
        .and_then(|s| s.build())
        .unwrap_or_else(|e| panic!("built-in family spec `{spec}`: {e}"))
}

fn star_graph(n: usize, l: usize) -> Graph {
    family(&format!("star:n={n},l={l}"))
}

pub fn graph_description(g: &Graph) -> String {
    if let Some(name) = g.name() {
        return name.to_string();
    }
    let edges = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).join(" ");
    format!("p={} [{}]", g.order(), edges)
}

fn fmt_set<'a>(s: impl IntoIterator<Item = &'a u32>) -> String {
    format!("{{{}}}", s.into_iter().join(", "))
}

fn fmt_interval(b: Option<(u32, u32)>) -> String {
    match b {
        Some((lo, hi)) => format!("[{lo}, {hi}]"),
        None => "empty".into(),
    }
}

fn consecutive(s: &BTreeSet<u32>) -> bool {
    s.iter().tuple_windows().all(|(a, b)| b - a == 1)
}

fn range_set(lo: u32, hi: u32) -> BTreeSet<u32> {
    (lo..=hi).collect()
}

/// Super edge-magic members of the pool with `p ≤ 6` accepted by `keep`,
/// along with their achieved valences.
fn sem_pool(
    cx: &Ctx<'_>,
    keep: impl Fn(&Graph) -> bool,
) -> Result<Vec<(Graph, BTreeSet<u32>)>, VerifyError> {
    let mut out = Vec::new();
    for p in 1..=6 {
        for g in graphs_of_order(p).into_iter().filter(|g| g.size() > 0 && keep(g)) {
            let r = cx.sem(&g)?;
            if !r.achieved.is_empty() {
                out.push((g, r.achieved));
            }
        }
    }
    Ok(out)
}

fn sigma_q2p3(cx: &Ctx<'_>) -> Result<SuiteOutput, VerifyError> {
    let pool = sem_pool(cx, |g| {
        g.size() + 3 == 2 * g.order() && g.girth() == Girth::Finite(3)
    })?;
    let cases = pool
        .iter()
        .map(|(g, sigma)| {
            let p = g.order() as u32;
            Case::check(graph_description(g), fmt_set(&[3 * p]), fmt_set(sigma))
        })
        .collect();
    Ok((cases, Vec::new()))
}

fn sigma_q2p4(cx: &Ctx<'_>) -> Result<SuiteOutput, VerifyError> {
    let pool = sem_pool(cx, |g| g.size() + 4 == 2 * g.order())?;
    let cases = pool
        .iter()
        .map(|(g, sigma)| {
            let p = g.order() as u32;
            Case::check(graph_description(g), fmt_set(&[3 * p - 1, 3 * p]), fmt_set(sigma))
        })
        .collect();
    Ok((cases, Vec::new()))
}

/// Girth conditions are read as applying to graphs with a cycle; forests
/// with `q = 2p − 5` are reported as notes.
fn sigma_q2p5(cx: &Ctx<'_>) -> Result<SuiteOutput, VerifyError> {
    let pool = sem_pool(cx, |g| g.size() + 5 == 2 * g.order())?;
    let mut cases = Vec::new();
    let mut notes = Vec::new();
    for (g, sigma) in &pool {
        let p = g.order() as u32;
        let expected = fmt_set(&[3 * p - 1]);
        match g.girth() {
            Girth::Finite(girth) if girth >= 5 => {
                cases.push(Case::check(graph_description(g), expected, fmt_set(sigma)))
            }
            Girth::Finite(_) => {}
            Girth::Infinite => {
                if fmt_set(sigma) != expected {
                    notes.push(format!(
                        "acyclic {} has sigma {} (outside the girth hypothesis)",
                        graph_description(g),
                        fmt_set(sigma)
                    ));
                }
            }
        }
    }
    Ok((cases, notes))
}

fn forbidden_valence(cx: &Ctx<'_>) -> Result<SuiteOutput, VerifyError> {
    let pool = sem_pool(cx, |g| {
        g.size() >= g.order() && g.girth().finite().is_some_and(|girth| girth >= 4)
    })?;
    let cases = pool
        .iter()
        .map(|(g, sigma)| {
            let k = (g.order() + g.size() + 3) as u32;
            let observed = if sigma.contains(&k) {
                format!("{k} in sigma")
            } else {
                format!("{k} not in sigma")
            };
            Case::check(graph_description(g), format!("{k} not in sigma"), observed)
        })
        .collect();
    Ok((cases, Vec::new()))
}

fn star_count(cx: &Ctx<'_>) -> Result<SuiteOutput, VerifyError> {
    let mut cases = Vec::new();
    for n in 1..=6 {
        for l in 1..=4 {
            let name = format!("star({n},{l})");
            let expected = (l + 1) * (l + 2);
            let generated = star::generate_all(n, l).map_err(|e| cx.star(e))?;
            cases.push(Case::check(format!("{name} generate_all"), expected, generated.len()));
            let g = star_graph(n, l);
            let r = cx.all_labelings(&g, Mode::Sem)?;
            let count = r.labeling_count.unwrap_or(0);
            if n == 1 {
                cases.push(Case::known_slip(
                    format!("{name} enumerated classes"),
                    expected,
                    expected / 2,
                    count,
                    "the center and the leaf of K_{1,1} are interchangeable, so labelings pair up",
                ));
                continue;
            }
            cases.push(Case::check(format!("{name} enumerated classes"), expected, count));
            let ours: BTreeSet<Signature> = star::generate_total(n, l)
                .map_err(|e| cx.star(e))?
                .iter()
                .map(|f| f.signature())
                .collect();
            let theirs: BTreeSet<Signature> = r
                .labelings
                .unwrap_or_default()
                .iter()
                .map(|f| f.signature())
                .collect();
            let same = if ours == theirs { "equal" } else { "different" };
            cases.push(Case::check(format!("{name} signature sets"), "equal", same));
        }
    }
    Ok((cases, Vec::new()))
}

fn star_t1t2(cx: &Ctx<'_>) -> Result<SuiteOutput, VerifyError> {
    let mut cases = Vec::new();
    for n in 1..=5 {
        for l in 1..=4 {
            let name = format!("star({n},{l})");
            let fam = star::generate_all(n, l).map_err(|e| cx.star(e))?;
            let (t1, t2): (Vec<&StarSemLabeling>, Vec<_>) = fam.iter().partition(|s| s.classify() == StarType::T1);
            let half = (l + 1) * (l + 2) / 2;
            cases.push(Case::check(format!("{name} |T1|"), half, t1.len()));
            cases.push(Case::check(format!("{name} |T2|"), half, t2.len()));

            let images: BTreeSet<_> = t1
                .iter()
                .map(|s| star::phi(s))
                .collect::<Result<_, _>>()
                .map_err(|e| cx.star(e))?;
            let t2_set = t2.iter().copied().copied().collect::<BTreeSet<StarSemLabeling>>();
            let bijective = images.len() == t1.len() && images == t2_set;
            cases.push(Case::check(
                format!("{name} phi onto T2"),
                "bijection",
                if bijective { "bijection" } else { "not a bijection" },
            ));

            let involution = fam.iter().all(|s| s.complement().complement() == *s);
            cases.push(Case::check(
                format!("{name} complement involution"),
                true,
                involution,
            ));

            let (p, q) = ((n + l + 1) as u32, n as u32);
            let sums: BTreeSet<u32> = t1
                .iter()
                .map(|s| star::valence_of(s) + star::valence_of(&s.complement()))
                .collect();
            cases.push(Case::check(
                format!("{name} val(f)+val(phi f)"),
                fmt_set(&[4 * p + q + 3]),
                fmt_set(&sums),
            ));

            // consecutive valences stay consecutive after complementing
            let consecutive_kept = fam.iter().tuple_combinations().all(|(a, b)| {
                let (va, vb) = (star::valence_of(a), star::valence_of(b));
                let (ca, cb) = (star::valence_of(&a.complement()), star::valence_of(&b.complement()));
                va.abs_diff(vb) != 1 || ca.abs_diff(cb) == 1
            });
            cases.push(Case::check(
                format!("{name} consecutive valences under complement"),
                true,
                consecutive_kept,
            ));

            let ordered = t1.iter().all(|s| s.center_label < s.leaf_window_start)
                && t2.iter().all(|s| s.center_label > s.leaf_window_start + n as u32 - 1);
            cases.push(Case::check(format!("{name} label order by type"), true, ordered));
        }
    }
    Ok((cases, Vec::new()))
}

fn star_consecutive(cx: &Ctx<'_>) -> Result<SuiteOutput, VerifyError> {
    let mut cases = Vec::new();
    for n in 1..=5 {
        for l in 1..=4 {
            let name = format!("star({n},{l})");
            let sets = star::valence_sets(n, l).map_err(|e| cx.star(e))?;
            cases.push(Case::check(format!("{name} S(T1) consecutive"), true, consecutive(&sets.t1)));
            cases.push(Case::check(format!("{name} S(T2) consecutive"), true, consecutive(&sets.t2)));
            let (a, b) = ValenceSets::t1_closed_form(n, l);
            cases.push(Case::check(format!("{name} S(T1)"), fmt_set(&range_set(a, b)), fmt_set(&sets.t1)));
            let (a, b) = ValenceSets::t2_closed_form(n, l);
            cases.push(Case::check(format!("{name} S(T2)"), fmt_set(&range_set(a, b)), fmt_set(&sets.t2)));

            let fam = star::generate_all(n, l).map_err(|e| cx.star(e))?;
            let lows: BTreeSet<u32> = fam
                .iter()
                .filter(|s| s.classify() == StarType::T1)
                .map(|s| s.low_characteristic())
                .collect();
            cases.push(Case::check(
                format!("{name} T1 low characteristics"),
                fmt_set(&range_set(3, 2 * l as u32 + 3)),
                fmt_set(&lows),
            ));

            // Fact 2: valences differ by one exactly when f(x)+f(y_1) does
            let fact2 = fam.iter().cartesian_product(&fam).all(|(a, b)| {
                (star::valence_of(a) + 1 == star::valence_of(b))
                    == (a.low_characteristic() + 1 == b.low_characteristic())
            });
            cases.push(Case::check(format!("{name} valence steps follow f(x)+f(y1)"), true, fact2));

            let sigma = cx.sem(&star_graph(n, l))?.achieved;
            cases.push(Case::check(
                format!("{name} S(T1) u S(T2) = sigma"),
                fmt_set(&sigma),
                fmt_set(&sets.union),
            ));
        }
    }
    Ok((cases, Vec::new()))
}

fn star_perfect(cx: &Ctx<'_>) -> Result<SuiteOutput, VerifyError> {
    let mut cases = Vec::new();
    for n in 1..=5usize {
        for l in 0..=4usize {
            let verdict = is_perfect(&star_graph(n, l), Mode::Sem, cx.opts)
                .map_err(|e| cx.enumeration(e))?;
            cases.push(Case::known_slip(
                format!("star({n},{l}) perfect"),
                2 * l + 3 >= n + 2,
                n <= 2 * l + 2,
                verdict.perfect,
                "S(T1) and S(T2) only need to be adjacent, so the criterion is n <= 2l+2",
            ));
        }
    }
    Ok((cases, Vec::new()))
}

fn star_fk(cx: &Ctx<'_>) -> Result<SuiteOutput, VerifyError> {
    let mut cases = Vec::new();
    for n in 1..=6usize {
        for l in 0..=6usize {
            let name = format!("star({n},{l})");
            let labelings = (0..=l)
                .map(|k| star::em_fk(n, l, k))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| cx.star(e))?;
            let observed: Vec<u32> = labelings.iter().map(|f| f.valence()).collect();
            let expected: Vec<u32> = (0..=l).map(|k| (4 * n + 3 * l + 2 - k) as u32).collect();
            cases.push(Case::check(
                format!("{name} f_k valences"),
                fmt_set(&expected),
                fmt_set(&observed),
            ));
            if n <= 3 && l <= 3 {
                let tau = cx.em(&star_graph(n, l))?.achieved;
                let present: Vec<u32> = expected.iter().copied().filter(|k| tau.contains(k)).collect();
                cases.push(Case::check(
                    format!("{name} f_k valences in tau"),
                    fmt_set(&expected),
                    fmt_set(&present),
                ));
            }
        }
    }
    Ok((cases, Vec::new()))
}

fn star_e3f2(cx: &Ctx<'_>) -> Result<SuiteOutput, VerifyError> {
    let mut cases = Vec::new();
    for n in 2..=5 {
        let g = family(&format!("star:{n}"));
        let sigma = cx.sem(&g)?.achieved;
        let tau = cx.em(&g)?.achieved;
        cases.push(Case::check(format!("K_1,{n} |sigma|"), 2, sigma.len()));
        cases.push(Case::check(format!("K_1,{n} |tau|"), 3, tau.len()));
    }
    Ok((cases, Vec::new()))
}

fn paths_perfect(cx: &Ctx<'_>) -> Result<SuiteOutput, VerifyError> {
    let mut cases = Vec::new();
    for n in 2..=8 {
        let r = cx.sem(&family(&format!("path:{n}")))?;
        cases.push(Case::check(format!("P_{n} perfect"), true, r.perfect));
        let expected = if n % 2 == 0 { 1 } else { 2 };
        cases.push(Case::check(format!("P_{n} |I|"), expected, r.interval.len()));
    }
    Ok((cases, Vec::new()))
}

fn c3_family(cx: &Ctx<'_>) -> Result<SuiteOutput, VerifyError> {
    let c3 = cx.sem(&family("cycle:3"))?;
    let c3k1 = cx.sem(&family("union:cycle:3+1K1"))?;
    let cases = vec![
        Case::check("C3 sigma", "{9}", fmt_set(&c3.achieved)),
        Case::check("C3 perfect", true, c3.perfect),
        Case::check("C3 u K1 sigma", "{10, 12}", fmt_set(&c3k1.achieved)),
        Case::check("C3 u K1 interval", "[10, 12]", fmt_interval(c3k1.interval.bounds())),
        Case::check("C3 u K1 perfect", false, c3k1.perfect),
    ];
    Ok((cases, Vec::new()))
}

const SEM_CORPUS: &[&str] = &[
    "cycle:3",
    "cycle:4",
    "cycle:5",
    "cycle:6",
    "cycle:7",
    "path:2",
    "path:3",
    "path:5",
    "path:7",
    "star:n=2,l=2",
    "star:n=3,l=3",
    "star:n=4,l=2",
    "star:6",
    "union:cycle:3+1K1",
    "union:cycle:3+3K1",
    "union:cycle:4+1K1",
    "union:cycle:5+2K1",
    "cmn:m=3,n=1",
    "corona:m=3,n=1",
    "crown:j=1,0,0,0",
    "crown:j=2,0,1",
    "complete:4",
];

const EM_CORPUS: &[&str] = &[
    "cycle:3",
    "cycle:4",
    "cycle:5",
    "path:2",
    "path:3",
    "path:4",
    "path:5",
    "star:3",
    "star:n=2,l=1",
    "star:n=3,l=1",
    "union:cycle:3+1K1",
    "union:path:3+2K1",
    "crown:j=1,0,0",
];

fn complement_identities(cx: &Ctx<'_>) -> Result<SuiteOutput, VerifyError> {
    let mut cases = Vec::new();
    for (kind, corpus) in [(Mode::Sem, SEM_CORPUS), (Mode::Em, EM_CORPUS)] {
        for spec in corpus {
            let g = family(spec);
            let (p, q) = (g.order() as u32, g.size() as u32);
            let target = match kind {
                Mode::Sem => 4 * p + q + 3,
                Mode::Em => 3 * (p + q + 1),
            };
            let r = cx.all_labelings(&g, kind)?;
            let labelings = r.labelings.unwrap_or_default();
            let classes: BTreeSet<Signature> = labelings.iter().map(|f| f.signature()).collect();
            let mut bad = 0usize;
            for f in &labelings {
                let ok = match complement(f, kind) {
                    Ok(fbar) => {
                        f.valence() + fbar.valence() == target
                            && complement(&fbar, kind).as_ref() == Ok(f)
                            && classes.contains(&fbar.signature())
                            && (kind == Mode::Em || fbar.is_super())
                    }
                    Err(_) => false,
                };
                bad += usize::from(!ok);
            }
            cases.push(Case::check(
                format!("{kind} {spec} ({} labelings)", labelings.len()),
                "0 violations",
                format!("{bad} violations"),
            ));
        }
    }
    Ok((cases, Vec::new()))
}

fn interval_oracle(cx: &Ctx<'_>) -> Result<SuiteOutput, VerifyError> {
    let mut cases = Vec::new();
    for p in 1..=6 {
        for g in graphs_of_order(p) {
            if g.size() == 0 || p + g.size() > 9 {
                continue;
            }
            for kind in [Mode::Sem, Mode::Em] {
                let fast = interval_of(&g, kind).map_err(|e| cx.enumeration(e.into()))?;
                let (lo, hi) = brute_extrema(&g, kind).map_err(|e| cx.enumeration(e.into()))?;
                cases.push(Case::check(
                    format!("{kind} {}", graph_description(&g)),
                    format!("{} .. {}", fast.min_raw, fast.max_raw),
                    format!("{lo} .. {hi}"),
                ));
            }
        }
    }
    Ok((cases, Vec::new()))
}

fn star_interval_discrepancy(cx: &Ctx<'_>) -> Result<SuiteOutput, VerifyError> {
    let mut cases = Vec::new();
    for n in 1..=5u32 {
        for l in 0..=3u32 {
            let name = format!("star({n},{l})");
            let g = star_graph(n as usize, l as usize);
            let lambda = interval_of(&g, Mode::Em)
                .map_err(|e| cx.enumeration(e.into()))?
                .bounds();
            let (lo, hi) = lambda.unwrap_or((0, 0));
            let sigma = cx.sem(&g)?.achieved;
            let sigma_min = sigma.first().copied().unwrap_or(0);
            let sigma_max = sigma.last().copied().unwrap_or(0);
            cases.push(Case::check(format!("{name} min lambda"), 2 * n + 4, lo));
            cases.push(Case::known_slip(
                format!("{name} max lambda"),
                3 * n + 3 * l + 3,
                4 * n + 3 * l + 2,
                hi,
                "3n+3l+3 is the largest super edge-magic valence; the edge-magic maximum is 4n+3l+2",
            ));
            cases.push(Case::check(format!("{name} max sigma"), 3 * n + 3 * l + 3, sigma_max));
            cases.push(Case::known_slip(
                format!("{name} min sigma"),
                2 * n + 4,
                2 * n + l + 4,
                sigma_min,
                "isolated vertices take labels in [1, p], so the smallest super valence is 2n+l+4",
            ));
        }
    }
    Ok((cases, Vec::new()))
}
