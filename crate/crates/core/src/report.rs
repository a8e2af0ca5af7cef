//! Reports: a command echo, a semigroup summary, a typed payload and a
//! provenance block, rendered as aligned tables or canonical JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::conic::{ConicReport, FaceIdeals, FrobeniusLadder};
use crate::depth::{CmReport, DepthBounds, ProgressionReport, SimplicialReport};
use crate::divisorial::{Class, GeneratorSet, TorsionReport};
use crate::error::{Error, Result};
use crate::semigroup::{AffineSemigroup, Divisoriality, Purity};
use crate::xiconvex::{Enumeration, Intersection, IsoResult, XiIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Machine,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub ambient_rank: usize,
    pub rank: usize,
    pub support_forms: usize,
    pub hilbert_basis_size: usize,
    pub positive: bool,
    /// Basis of `gp(S)` in ambient coordinates when it differs from the
    /// standard basis.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_change: Option<Vec<Vec<i64>>>,
}

impl Summary {
    pub fn of(s: &AffineSemigroup) -> Self {
        Summary {
            ambient_rank: s.ambient_rank,
            rank: s.rank,
            support_forms: s.num_forms(),
            hilbert_basis_size: s.hilbert_basis.len(),
            positive: s.positive,
            basis_change: s.basis_changed.then(|| s.embedding.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    pub options: BTreeMap<String, String>,
    pub seed: Option<u64>,
}

impl Provenance {
    pub fn new(options: BTreeMap<String, String>, seed: Option<u64>) -> Self {
        Provenance { tool: env!("CARGO_PKG_NAME").into(), version: env!("CARGO_PKG_VERSION").into(), options, seed }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoPayload {
    pub embedding: Vec<Vec<i64>>,
    pub support_forms: Vec<Vec<i64>>,
    pub extreme_rays: Vec<Vec<i64>>,
    pub hilbert_basis: Vec<Vec<i64>>,
    pub tau: Vec<i64>,
    pub simplicial: bool,
    pub class_group: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertBasisPayload {
    pub internal: Vec<Vec<i64>>,
    pub ambient: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGroupPayload {
    pub description: String,
    pub invariant_factors: Vec<i64>,
    pub free_rank: usize,
    pub canonical_bounds: Vec<i64>,
    pub canonical_class: Class,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsion: Option<(Class, TorsionReport)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModulePayload {
    pub bounds: Vec<i64>,
    pub class: Class,
    pub generators: GeneratorSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmPayload {
    pub bounds: Vec<i64>,
    pub class: Class,
    pub report: CmReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "result", rename_all = "kebab-case")]
pub enum Payload {
    Info(InfoPayload),
    HilbertBasis(HilbertBasisPayload),
    ClassGroup(ClassGroupPayload),
    Mingen(ModulePayload),
    Mu(ModulePayload),
    Conic(ConicReport),
    FaceIdeal(FaceIdeals),
    Frobenius(FrobeniusLadder),
    DepthBounds(DepthBounds),
    Cm(CmPayload),
    Simplicial(SimplicialReport),
    Progression(ProgressionReport),
    PureCheck(Purity),
    DivisorialCheck(Divisoriality),
    Eff(XiIdeal),
    Iso(IsoResult),
    Intersect(Intersection),
    Enumerate(Enumeration),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub summary: Summary,
    pub payload: Payload,
    pub provenance: Provenance,
}

pub fn render_report(report: &Report, format: Format) -> String {
    match format {
        Format::Machine => machine(report),
        Format::Table => table(report),
    }
}

/// Canonical JSON: keys sorted, two-space indentation, trailing newline.
fn machine(report: &Report) -> String {
    let value = serde_json::to_value(report).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
    s.push('\n');
    s
}

pub fn parse_report(text: &str) -> Result<Report> {
    serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))
}

fn vec_str<T: std::fmt::Display>(v: &[T]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(", "))
}

fn grid(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(headers.to_vec());
    out += &line(width.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().iter().map(|s| s.as_str()).collect());
    for r in rows {
        out += &line(r.iter().map(|s| s.as_str()).collect());
    }
    out
}

fn points(label: &str, ps: &[Vec<i64>]) -> String {
    let rows: Vec<Vec<String>> = ps.iter().enumerate().map(|(i, p)| vec![i.to_string(), vec_str(p)]).collect();
    grid(&["#", label], &rows)
}

fn kv(pairs: &[(&str, String)]) -> String {
    let w = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs.iter().map(|(k, v)| format!("{k:<w$}  {v}\n")).collect()
}

fn table(r: &Report) -> String {
    let mut out = String::new();
    let s = &r.summary;
    let _ = writeln!(out, "command: {}", r.command.join(" "));
    let _ = writeln!(
        out,
        "semigroup: rank {} in Z^{}, {} support forms, Hilbert basis of {} elements, positive: {}",
        s.rank, s.ambient_rank, s.support_forms, s.hilbert_basis_size, s.positive
    );
    if let Some(b) = &s.basis_change {
        let _ = writeln!(out, "basis of gp(S): {}", b.iter().map(|v| vec_str(v)).collect::<Vec<_>>().join(" "));
    }
    out.push('\n');
    out += &payload_table(&r.payload);
    out
}

fn bool_word(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn payload_table(p: &Payload) -> String {
    match p {
        Payload::Info(i) => {
            let mut out = kv(&[
                ("class group", i.class_group.clone()),
                ("tau", vec_str(&i.tau)),
                ("simplicial", bool_word(i.simplicial)),
            ]);
            out += "\n";
            out += &points("support form", &i.support_forms);
            out += "\n";
            out += &points("extreme ray", &i.extreme_rays);
            out += "\n";
            out += &points("Hilbert basis", &i.hilbert_basis);
            out
        }
        Payload::HilbertBasis(h) => {
            let rows: Vec<Vec<String>> = h
                .internal
                .iter()
                .zip(&h.ambient)
                .enumerate()
                .map(|(i, (x, y))| vec![i.to_string(), vec_str(x), vec_str(y)])
                .collect();
            grid(&["#", "internal", "ambient"], &rows)
        }
        Payload::ClassGroup(c) => {
            let mut pairs = vec![
                ("Cl(R)", c.description.clone()),
                ("invariant factors", vec_str(&c.invariant_factors)),
                ("free rank", c.free_rank.to_string()),
                ("canonical bounds", vec_str(&c.canonical_bounds)),
                ("canonical class", vec_str(&c.canonical_class)),
            ];
            if let Some((class, t)) = &c.torsion {
                pairs.push(("class", vec_str(class)));
                pairs.push(("order", t.order.map_or("infinite".into(), |o| o.to_string())));
                pairs.push(("vertices", t.vertex_count.to_string()));
                pairs.push(("consistent", bool_word(t.consistent)));
            }
            kv(&pairs)
        }
        Payload::Mingen(m) => {
            let mut out = kv(&[
                ("bounds", vec_str(&m.bounds)),
                ("class", vec_str(&m.class)),
                ("mu", m.generators.mu.to_string()),
            ]);
            out += "\n";
            out += &points("generator", &m.generators.points);
            out
        }
        Payload::Mu(m) => {
            kv(&[("class", vec_str(&m.class)), ("bounds", vec_str(&m.bounds)), ("mu", m.generators.mu.to_string())])
        }
        Payload::Conic(c) => {
            let rows: Vec<Vec<String>> =
                c.classes.iter().map(|k| vec![vec_str(&k.class), vec_str(&k.bounds), vec_str(&k.witness)]).collect();
            let mut out = grid(&["class", "bounds", "witness beta"], &rows);
            let _ = writeln!(out, "\ncomplete: {}", bool_word(c.complete));
            out
        }
        Payload::FaceIdeal(f) => {
            let rows = [("q", &f.q), ("r", &f.r)]
                .iter()
                .map(|(n, i)| vec![n.to_string(), vec_str(&i.bounds), vec_str(&i.class), vec_str(&i.witness)])
                .collect::<Vec<_>>();
            let mut out = format!("face: {}\n\n", vec_str(&f.face));
            out += &grid(&["ideal", "bounds", "class", "witness beta"], &rows);
            out
        }
        Payload::Frobenius(l) => {
            let rows: Vec<Vec<String>> = l
                .steps
                .iter()
                .map(|d| {
                    let classes: Vec<String> = d.classes.iter().map(|(c, m)| format!("{}x{m}", vec_str(c))).collect();
                    vec![d.k.to_string(), d.classes.len().to_string(), classes.join(" ")]
                })
                .collect();
            let mut out = grid(&["k", "classes", "multiplicities"], &rows);
            out += "\n";
            out += &kv(&[
                ("stabilized at", l.stabilized_at.map_or("-".into(), |k| k.to_string())),
                ("equals conic set at", l.matches_conic_at.map_or("-".into(), |k| k.to_string())),
                ("all conic", bool_word(l.all_conic)),
            ]);
            out
        }
        Payload::DepthBounds(d) => kv(&[
            ("grade mP", d.grade_mp.to_string()),
            ("lambda", d.lambda.to_string()),
            ("grade witness", vec_str(&d.grade_witness)),
            ("lambda witness", d.lambda_witness.iter().map(|v| vec_str(v)).collect::<Vec<_>>().join(" ")),
        ]),
        Payload::Cm(c) => {
            let show = |x: Option<i64>| x.map_or("-".to_string(), |v| v.to_string());
            kv(&[
                ("class", vec_str(&c.class)),
                ("bounds", vec_str(&c.bounds)),
                ("Cohen-Macaulay", bool_word(c.report.cohen_macaulay)),
                ("mu", c.report.mu.to_string()),
                ("length M/qM", c.report.serre_length_module.to_string()),
                ("length R/qR", c.report.serre_length_ring.to_string()),
                ("Hilbert-Samuel e(M)", show(c.report.hs_module)),
                ("Hilbert-Samuel e(R)", show(c.report.hs_ring)),
            ])
        }
        Payload::Simplicial(s) => kv(&[
            ("simplicial", bool_word(s.simplicial)),
            ("extreme rays", s.extreme_rays.to_string()),
            ("rank", s.rank.to_string()),
            ("class group finite", bool_word(s.class_group_finite)),
            ("all classes CM", s.all_classes_cm.map_or("undecided".into(), bool_word)),
        ]),
        Payload::Progression(p) => {
            let rows: Vec<Vec<String>> =
                p.mu_table.iter().enumerate().map(|(j, m)| vec![j.to_string(), m.to_string()]).collect();
            let mut out = kv(&[("c", vec_str(&p.c)), ("d", vec_str(&p.d))]);
            out += "\n";
            out += &grid(&["j", "mu"], &rows);
            out += "\n";
            out += &kv(&[
                ("period e", p.period.to_string()),
                ("degree m", p.degree.to_string()),
                ("limits", vec_str(&p.limits)),
                ("Veronese limits", vec_str(&p.veronese_limits)),
                ("inf depth", p.inf_depth_estimate.to_string()),
                ("tail minimum", p.tail_minimum.to_string()),
            ]);
            out
        }
        Payload::PureCheck(p) => match p {
            Purity::Pure => "pure\n".into(),
            Purity::MissingSupportForm { index, sigma } => {
                format!("not pure: support form {index} {} is not a multiple of any form\n", vec_str(sigma))
            }
            Purity::NotInDualCone { index, witness } => {
                format!("not pure: form {index} is negative at {}\n", vec_str(witness))
            }
        },
        Payload::DivisorialCheck(d) => {
            let mut out = format!("divisorial: {}\n", bool_word(d.divisorial));
            for (i, m) in d.multiples.iter().enumerate() {
                let _ = match m {
                    Some((j, e)) => writeln!(out, "xi_{i} = {e} * sigma_{j}"),
                    None => writeln!(out, "xi_{i}: not a multiple of a single support form"),
                };
            }
            if let Some((i, k)) = d.containment {
                let _ = writeln!(out, "E_{k} is properly contained in E_{i}");
            }
            out
        }
        Payload::Eff(x) => {
            let mut out =
                kv(&[("bounds", vec_str(&x.bounds)), ("eff", vec_str(&x.eff)), ("mu", x.generators.mu.to_string())]);
            out += "\n";
            out += &points("generator", &x.generators.points);
            out
        }
        Payload::Iso(i) => kv(&[
            ("isomorphic", bool_word(i.isomorphic)),
            ("eff(a)", vec_str(&i.eff_a)),
            ("eff(b)", vec_str(&i.eff_b)),
            ("witness y", i.witness.as_ref().map_or("-".into(), |y| vec_str(y))),
        ]),
        Payload::Intersect(i) => {
            let mut out = kv(&[
                ("bounds", vec_str(&i.bounds)),
                ("empty", bool_word(i.empty)),
                ("mu", i.generators.mu.to_string()),
            ]);
            out += "\n";
            out += &points("generator", &i.generators.points);
            out
        }
        Payload::Enumerate(e) => {
            let rows: Vec<Vec<String>> =
                e.classes.iter().map(|c| vec![vec_str(&c.class), c.mu.to_string(), vec_str(&c.eff)]).collect();
            let mut out = grid(&["class", "mu", "eff"], &rows);
            out += "\n";
            out += &kv(&[
                ("max mu", e.max_mu.to_string()),
                ("box", e.radius.to_string()),
                ("shell minimum mu", e.shell_min_mu.map_or("-".into(), |m| m.to_string())),
                ("status", e.status.clone()),
            ]);
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::AffineSemigroup;

    fn sample() -> Report {
        let s = AffineSemigroup::from_generators(2, &[vec![1, 0], vec![1, 2]]).unwrap();
        Report {
            command: vec!["mu".into(), "--class".into(), "1".into()],
            summary: Summary::of(&s),
            payload: Payload::Mu(ModulePayload {
                bounds: vec![1, 0],
                class: vec![1],
                generators: GeneratorSet::new(vec![vec![1, 1], vec![1, 0]]),
            }),
            provenance: Provenance::new(BTreeMap::from([("format".into(), "machine".into())]), None),
        }
    }

    #[test]
    fn machine_round_trip() {
        let r = sample();
        let text = render_report(&r, Format::Machine);
        assert_eq!(parse_report(&text).unwrap(), r);
        assert_eq!(render_report(&r, Format::Machine), text);
        let keys: Vec<&str> = text.lines().filter(|l| l.starts_with("  \"")).map(|l| l.trim()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn table_has_the_value() {
        let t = render_report(&sample(), Format::Table);
        assert!(t.contains("mu      2"));
    }
}
