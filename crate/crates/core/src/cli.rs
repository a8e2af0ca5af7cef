//! Command line front end: argument parsing, dispatch and report assembly.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::conic::{conic_classes, face_ideal_bounds, frobenius_ladder};
use crate::depth::{cohen_macaulay_test, depth_bounds, progression_analysis, simplicial_check, SEED};
use crate::divisorial::{canonical_class, class_group, class_lift, minimal_generators, torsion_order, ClassGroup};
use crate::error::{Error, Result};
use crate::polyhedral::DEFAULT_FACE_CAP;
use crate::problem::{load_problem, ProblemFile};
use crate::report::*;
use crate::semigroup::{coset_divisoriality_check, purity_check, AffineSemigroup, FormSystem};
use crate::xiconvex::{eff_bounds, enumerate_small_mu, intersect_modules, xi_iso_test};

pub const DEFAULT_HS_WINDOW: usize = 30;
pub const DEFAULT_JMAX: usize = 20;
pub const DEFAULT_KMAX: i64 = 24;
pub const DEFAULT_BOX: i64 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Machine,
}

#[derive(Parser, Debug)]
#[command(name = "divclass", version, about = "Divisorial ideals of normal affine semigroup rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalOptions,
}

#[derive(Args, Debug, Clone, Default)]
pub struct GlobalOptions {
    /// Output format (default table).
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Maximum number of forms for face enumeration.
    #[arg(long, global = true)]
    pub cap_faces: Option<usize>,
    /// Window for Hilbert-Samuel multiplicities (0 skips them).
    #[arg(long, global = true)]
    pub hs_window: Option<usize>,
    /// Search radius on the free part of the class group.
    #[arg(long = "box", global = true)]
    pub radius: Option<i64>,
    /// Length of a progression.
    #[arg(long, global = true)]
    pub jmax: Option<usize>,
    /// Largest Frobenius exponent.
    #[arg(long, global = true)]
    pub k: Option<i64>,
}

#[derive(Args, Debug, Clone)]
pub struct Target {
    /// Problem file (JSON).
    pub problem: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct ModuleArgs {
    #[command(flatten)]
    pub target: Target,
    /// Class coordinates, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub class: Option<Vec<i64>>,
    /// Bound vector, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub bounds: Option<Vec<i64>>,
}

#[derive(Args, Debug, Clone)]
pub struct FaceArgs {
    #[command(flatten)]
    pub target: Target,
    /// Indices of the support forms vanishing on the face.
    #[arg(long, value_delimiter = ',')]
    pub face: Vec<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct ProgressionArgs {
    #[command(flatten)]
    pub target: Target,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    /// Step class.
    pub c: Vec<i64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    /// Offset class (default 0).
    pub d: Option<Vec<i64>>,
}

#[derive(Args, Debug, Clone)]
pub struct IsoArgs {
    #[command(flatten)]
    pub module: ModuleArgs,
    /// Second bound vector.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub other: Vec<i64>,
}

#[derive(Args, Debug, Clone)]
pub struct IntersectArgs {
    #[command(flatten)]
    pub module: ModuleArgs,
    /// Problem file of the second module; its `xi` (or support forms) and `bounds` are used.
    #[arg(long = "with")]
    pub other: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub target: Target,
    /// Largest number of generators.
    #[arg(long)]
    pub max_mu: usize,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Rank, support forms, extreme rays and Hilbert basis.
    Info(Target),
    /// Hilbert basis of S.
    HilbertBasis(Target),
    /// Divisor class group and canonical class; with --class, its order.
    ClassGroup(ModuleArgs),
    /// Minimal generators of a divisorial ideal.
    Mingen(ModuleArgs),
    /// Number of minimal generators.
    Mu(ModuleArgs),
    /// All conic classes with witnesses.
    Conic(Target),
    /// Bounds and classes of the face ideals of a face.
    FaceIdeal(FaceArgs),
    /// Classes of R over its Frobenius images, k = 1..K.
    Frobenius(Target),
    /// grade mP and lambda.
    DepthBounds(Target),
    /// Cohen-Macaulay test by Serre's criterion.
    Cm(ModuleArgs),
    /// Simpliciality and finiteness of Cl(R).
    Simplicial(Target),
    /// Growth of mu along jc + d.
    Progression(ProgressionArgs),
    /// Purity of the xi system.
    PureCheck(Target),
    /// Whether the coset modules of xi are divisorial.
    DivisorialCheck(Target),
    /// Effective bounds of T(a; xi).
    Eff(ModuleArgs),
    /// Isomorphism test of two xi-convex ideals.
    Iso(IsoArgs),
    /// Intersection of two semigroup modules.
    Intersect(IntersectArgs),
    /// Classes of xi-convex ideals with few generators.
    Enumerate(EnumerateArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Info(_) => "info",
            Command::HilbertBasis(_) => "hilbert-basis",
            Command::ClassGroup(_) => "class-group",
            Command::Mingen(_) => "mingen",
            Command::Mu(_) => "mu",
            Command::Conic(_) => "conic",
            Command::FaceIdeal(_) => "face-ideal",
            Command::Frobenius(_) => "frobenius",
            Command::DepthBounds(_) => "depth-bounds",
            Command::Cm(_) => "cm",
            Command::Simplicial(_) => "simplicial",
            Command::Progression(_) => "progression",
            Command::PureCheck(_) => "pure-check",
            Command::DivisorialCheck(_) => "divisorial-check",
            Command::Eff(_) => "eff",
            Command::Iso(_) => "iso",
            Command::Intersect(_) => "intersect",
            Command::Enumerate(_) => "enumerate",
        }
    }

    pub fn problem_path(&self) -> &Path {
        match self {
            Command::Info(t)
            | Command::HilbertBasis(t)
            | Command::Conic(t)
            | Command::Frobenius(t)
            | Command::DepthBounds(t)
            | Command::Simplicial(t)
            | Command::PureCheck(t)
            | Command::DivisorialCheck(t) => &t.problem,
            Command::ClassGroup(m) | Command::Mingen(m) | Command::Mu(m) | Command::Cm(m) | Command::Eff(m) => {
                &m.target.problem
            }
            Command::FaceIdeal(f) => &f.target.problem,
            Command::Progression(p) => &p.target.problem,
            Command::Iso(i) => &i.module.target.problem,
            Command::Intersect(i) => &i.module.target.problem,
            Command::Enumerate(e) => &e.target.problem,
        }
    }
}

/// Options after merging flags over the problem file's `options`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolved {
    pub cap_faces: usize,
    pub hs_window: usize,
    pub radius: i64,
    pub jmax: usize,
    pub kmax: i64,
}

impl Resolved {
    pub fn new(problem: &ProblemFile, g: &GlobalOptions) -> Self {
        let o = &problem.options;
        Resolved {
            cap_faces: g.cap_faces.or(o.cap_faces).unwrap_or(DEFAULT_FACE_CAP),
            hs_window: g.hs_window.or(o.hs_window).unwrap_or(DEFAULT_HS_WINDOW),
            radius: g.radius.or(o.radius).unwrap_or(DEFAULT_BOX),
            jmax: g.jmax.or(o.jmax).unwrap_or(DEFAULT_JMAX),
            kmax: g.k.or(o.k).unwrap_or(DEFAULT_KMAX),
        }
    }

    fn used_by(&self, cmd: &Command) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        let mut put = |k: &str, v: String| {
            m.insert(k.to_string(), v);
        };
        match cmd {
            Command::Cm(_) => put("hs-window", self.hs_window.to_string()),
            Command::Progression(_) => {
                put("cap-faces", self.cap_faces.to_string());
                put("jmax", self.jmax.to_string());
            }
            Command::Frobenius(_) => put("k", self.kmax.to_string()),
            Command::Enumerate(e) => {
                put("box", self.radius.to_string());
                put("max-mu", e.max_mu.to_string());
            }
            _ => {}
        }
        m
    }
}

/// Divisorial bounds from the flags, falling back to the problem file and
/// then to the ring itself.
fn divisorial_bounds(
    s: &AffineSemigroup,
    cl: &ClassGroup,
    p: &ProblemFile,
    m: &ModuleArgs,
) -> Result<(Vec<i64>, Vec<i64>)> {
    let a = match (&m.bounds, &m.class, &p.bounds, &p.class) {
        (Some(b), ..) => b.clone(),
        (None, Some(c), ..) => lift(s, cl, c)?,
        (None, None, Some(b), _) => b.clone(),
        (None, None, None, Some(c)) => lift(s, cl, c)?,
        _ => vec![0; s.num_forms()],
    };
    if a.len() != s.num_forms() {
        return Err(Error::Dimension(format!("{} bounds for {} support forms", a.len(), s.num_forms())));
    }
    let class = cl.class_of_bounds(&a)?;
    Ok((a, class))
}

fn lift(s: &AffineSemigroup, cl: &ClassGroup, c: &[i64]) -> Result<Vec<i64>> {
    if c.len() != cl.coordinate_count() {
        return Err(Error::Dimension(format!("{} class coordinates for {}", c.len(), cl.describe())));
    }
    class_lift(s, cl, c)
}

fn xi_of(s: &AffineSemigroup, p: &ProblemFile) -> Result<FormSystem> {
    Ok(p.form_system(s)?.unwrap_or_else(|| FormSystem::standard(s)))
}

fn xi_bounds(s: &AffineSemigroup, xi: &FormSystem, p: &ProblemFile, m: &ModuleArgs) -> Result<Vec<i64>> {
    if let Some(c) = &m.class {
        if p.xi.is_some() {
            return Err(Error::Input("--class needs the standard form system; give --bounds".into()));
        }
        return lift(s, &class_group(s)?, c);
    }
    Ok(m.bounds.clone().or_else(|| p.bounds.clone()).unwrap_or_else(|| vec![0; xi.len()]))
}

pub fn run_command(problem: &ProblemFile, cmd: &Command, global: &GlobalOptions, echo: Vec<String>) -> Result<Report> {
    let opts = Resolved::new(problem, global);
    let s = problem.semigroup()?;
    log::info!("{}: rank {} with {} support forms", cmd.name(), s.rank, s.num_forms());
    let payload = match cmd {
        Command::Info(_) => Payload::Info(InfoPayload {
            embedding: s.embedding.clone(),
            support_forms: s.support_forms.clone(),
            extreme_rays: s.extreme_rays.clone(),
            hilbert_basis: s.hilbert_basis.clone(),
            tau: s.tau.clone(),
            simplicial: s.is_simplicial(),
            class_group: class_group(&s)?.describe(),
        }),
        Command::HilbertBasis(_) => Payload::HilbertBasis(HilbertBasisPayload {
            internal: s.hilbert_basis.clone(),
            ambient: s.hilbert_basis.iter().map(|h| s.to_ambient(h)).collect(),
        }),
        Command::ClassGroup(m) => {
            let cl = class_group(&s)?;
            let (canonical_bounds, canonical) = canonical_class(&s, &cl)?;
            let torsion = match (&m.class, &m.bounds) {
                (None, None) => None,
                _ => {
                    let (_, c) = divisorial_bounds(&s, &cl, problem, m)?;
                    Some((c.clone(), torsion_order(&s, &cl, &c)?))
                }
            };
            Payload::ClassGroup(ClassGroupPayload {
                description: cl.describe(),
                invariant_factors: cl.invariant_factors(),
                free_rank: cl.free_rank(),
                canonical_bounds,
                canonical_class: canonical,
                torsion,
            })
        }
        Command::Mingen(m) | Command::Mu(m) => {
            let cl = class_group(&s)?;
            let (bounds, class) = divisorial_bounds(&s, &cl, problem, m)?;
            let generators = minimal_generators(&s, &bounds)?;
            let body = ModulePayload { bounds, class, generators };
            if matches!(cmd, Command::Mu(_)) {
                Payload::Mu(body)
            } else {
                Payload::Mingen(body)
            }
        }
        Command::Conic(_) => Payload::Conic(conic_classes(&s, &class_group(&s)?)?),
        Command::FaceIdeal(f) => Payload::FaceIdeal(face_ideal_bounds(&s, &class_group(&s)?, &f.face)?),
        Command::Frobenius(_) => {
            let cl = class_group(&s)?;
            let conic = conic_classes(&s, &cl)?;
            Payload::Frobenius(frobenius_ladder(&s, &cl, &conic, opts.kmax)?)
        }
        Command::DepthBounds(_) => Payload::DepthBounds(depth_bounds(&s)),
        Command::Cm(m) => {
            let cl = class_group(&s)?;
            let (bounds, class) = divisorial_bounds(&s, &cl, problem, m)?;
            let window = (opts.hs_window > 0).then_some(opts.hs_window);
            let report = cohen_macaulay_test(&s, &bounds, window)?;
            Payload::Cm(CmPayload { bounds, class, report })
        }
        Command::Simplicial(_) => Payload::Simplicial(simplicial_check(&s, &class_group(&s)?)?),
        Command::Progression(p) => {
            let cl = class_group(&s)?;
            let d = p.d.clone().unwrap_or_else(|| cl.zero());
            Payload::Progression(progression_analysis(&s, &cl, &p.c, &d, opts.jmax, opts.cap_faces)?)
        }
        Command::PureCheck(_) => Payload::PureCheck(purity_check(&s, &xi_of(&s, problem)?)?),
        Command::DivisorialCheck(_) => Payload::DivisorialCheck(coset_divisoriality_check(&s, &xi_of(&s, problem)?)?),
        Command::Eff(m) => {
            let xi = xi_of(&s, problem)?;
            let a = xi_bounds(&s, &xi, problem, m)?;
            Payload::Eff(eff_bounds(&s, &xi, &a)?)
        }
        Command::Iso(i) => {
            let xi = xi_of(&s, problem)?;
            let a = xi_bounds(&s, &xi, problem, &i.module)?;
            Payload::Iso(xi_iso_test(&s, &xi, &a, &i.other)?)
        }
        Command::Intersect(i) => {
            let other = load_problem(&i.other)?;
            let t = other.semigroup()?;
            if s.ambient_rank != t.ambient_rank || s.basis_changed || t.basis_changed {
                return Err(Error::Hypothesis("intersect needs two semigroups with gp = Z^n in the same rank".into()));
            }
            let xi = xi_of(&s, problem)?;
            let zeta = xi_of(&t, &other)?;
            for (sys, sg) in [(&xi, &s), (&zeta, &t)] {
                if !purity_check(sg, sys)?.is_pure() {
                    return Err(Error::Hypothesis("intersect needs pure form systems".into()));
                }
            }
            let a = xi_bounds(&s, &xi, problem, &i.module)?;
            let b = other.bounds.clone().unwrap_or_else(|| vec![0; zeta.len()]);
            Payload::Intersect(intersect_modules(s.rank, &xi.forms, &a, &zeta.forms, &b)?)
        }
        Command::Enumerate(e) => {
            let xi = xi_of(&s, problem)?;
            let out = enumerate_small_mu(&s, &xi, e.max_mu, opts.radius)?;
            log::info!("enumerate: {} classes, {}", out.classes.len(), out.status);
            Payload::Enumerate(out)
        }
    };
    let seed = matches!(cmd, Command::Cm(_)).then_some(SEED);
    Ok(Report {
        command: echo,
        summary: Summary::of(&s),
        payload,
        provenance: Provenance::new(opts.used_by(cmd), seed),
    })
}

/// Parses `args`, runs the command and renders the report.
pub fn run<I, T>(args: I) -> Result<String>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = Cli::try_parse_from(&args).map_err(|e| Error::Input(e.to_string()))?;
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    execute(&cli, echo)
}

pub fn execute(cli: &Cli, echo: Vec<String>) -> Result<String> {
    let problem = load_problem(cli.command.problem_path())?;
    let report = run_command(&problem, &cli.command, &cli.global, echo)?;
    let format = match cli.global.format.unwrap_or(OutputFormat::Table) {
        OutputFormat::Table => Format::Table,
        OutputFormat::Machine => Format::Machine,
    };
    Ok(render_report(&report, format))
}
