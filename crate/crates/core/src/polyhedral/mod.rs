//! Exact rational polyhedral geometry: cone dualization, vertices, face
//! lattices with compactness data, and linear programming.

mod dd;
pub mod lp;

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::IntMatrix;
pub use lp::{Constraint, Feasibility, LpOutcome, Relation, Sense, Q};

/// Default cap on the number of forms accepted by [`face_lattice`].
pub const DEFAULT_FACE_CAP: usize = 20;

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn to_big_rows(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn to_i64_rows(rows: Vec<Vec<BigInt>>) -> Result<Vec<Vec<i64>>> {
    rows.into_iter()
        .map(|r| r.iter().map(|x| x.to_i64().ok_or(Error::Overflow("cone description"))).collect())
        .collect()
}

fn sort_desc(rows: &mut [Vec<i64>]) {
    rows.sort_by(|a, b| b.cmp(a));
}

/// A rational cone carrying both of its descriptions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalCone {
    pub ambient_rank: usize,
    /// Primitive extreme rays, modulo the lineality space.
    pub generators: Vec<Vec<i64>>,
    /// Basis of the lineality space (empty for pointed cones).
    pub lineality: Vec<Vec<i64>>,
    /// Irredundant primitive inequalities `f(x) >= 0`.
    pub inequalities: Vec<Vec<i64>>,
    /// Primitive linear forms vanishing on the cone (empty when full-dimensional).
    pub equations: Vec<Vec<i64>>,
}

/// One of the two descriptions of a cone.
#[derive(Clone, Debug)]
pub enum ConeInput {
    Generators(Vec<Vec<i64>>),
    Inequalities(Vec<Vec<i64>>),
}

fn symmetric(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut out = Vec::with_capacity(rows.len() * 2);
    for r in rows {
        out.push(r.clone());
        out.push(r.iter().map(|x| -x).collect());
    }
    out
}

impl RationalCone {
    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.ambient_rank - self.equations.len()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.inequalities.iter().all(|f| dot(f, x) >= 0) && self.equations.iter().all(|f| dot(f, x) == 0)
    }
}

/// Computes the missing description. Output lists are sorted in descending
/// lexicographic order.
pub fn dualize_cone(ambient_rank: usize, input: &ConeInput) -> Result<RationalCone> {
    let check = |rows: &Vec<Vec<i64>>| -> Result<()> {
        match rows.iter().find(|r| r.len() != ambient_rank) {
            Some(r) => Err(Error::Dimension(format!("vector of length {} in rank {ambient_rank}", r.len()))),
            None => Ok(()),
        }
    };
    let (rays, lineality) = match input {
        ConeInput::Inequalities(f) => {
            check(f)?;
            let d = dd::double_description(&to_big_rows(f), ambient_rank);
            (d.rays, d.lineality)
        }
        ConeInput::Generators(g) => {
            check(g)?;
            let dual = dd::double_description(&to_big_rows(g), ambient_rank);
            let mut cons = dual.rays.clone();
            cons.extend(symmetric(&dual.lineality));
            let d = dd::double_description(&cons, ambient_rank);
            (d.rays, d.lineality)
        }
    };
    // forms from the rays
    let mut gens = rays.clone();
    gens.extend(symmetric(&lineality));
    let dual = dd::double_description(&gens, ambient_rank);
    let mut generators = to_i64_rows(rays)?;
    let mut lineality = to_i64_rows(lineality)?;
    let mut inequalities = to_i64_rows(dual.rays)?;
    let mut equations = to_i64_rows(dual.lineality)?;
    sort_desc(&mut generators);
    sort_desc(&mut inequalities);
    for l in lineality.iter_mut().chain(equations.iter_mut()) {
        // canonical sign: first nonzero entry positive
        if l.iter().find(|x| **x != 0).is_some_and(|x| *x < 0) {
            l.iter_mut().for_each(|x| *x = -*x);
        }
    }
    sort_desc(&mut lineality);
    sort_desc(&mut equations);
    Ok(RationalCone { ambient_rank, generators, lineality, inequalities, equations })
}

/// `{x : forms_i(x) >= bounds_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalPolyhedron {
    pub rank: usize,
    pub forms: Vec<Vec<i64>>,
    pub bounds: Vec<i64>,
}

/// A rational point, kept exact.
pub type RationalPoint = Vec<BigRational>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceRecord {
    /// Indices of the forms attaining their bound on the whole face.
    pub tight: Vec<usize>,
    pub dimension: usize,
    pub compact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub tight: Vec<usize>,
    #[serde(with = "crate::exact")]
    pub endpoints: [RationalPoint; 2],
    #[serde(with = "crate::exact")]
    pub squared_length: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceReport {
    pub faces: Vec<FaceRecord>,
    /// Largest dimension of a compact face (`0` when the only compact faces are vertices).
    pub max_compact_dim: usize,
    pub segments: Vec<Segment>,
}

impl FaceReport {
    pub fn vertex_count(&self) -> usize {
        self.faces.iter().filter(|f| f.dimension == 0).count()
    }
}

/// Vertices and recession rays of a line-free polyhedron.
struct Homogenized {
    vertices: Vec<RationalPoint>,
    rays: Vec<Vec<i64>>,
}

impl RationalPolyhedron {
    pub fn new(forms: Vec<Vec<i64>>, bounds: Vec<i64>) -> Result<Self> {
        let rank = forms.first().map_or(0, |f| f.len());
        if forms.len() != bounds.len() {
            return Err(Error::Dimension(format!("{} forms but {} bounds", forms.len(), bounds.len())));
        }
        if forms.iter().any(|f| f.len() != rank) {
            return Err(Error::Dimension("forms of different lengths".into()));
        }
        Ok(RationalPolyhedron { rank, forms, bounds })
    }

    pub fn with_rank(rank: usize, forms: Vec<Vec<i64>>, bounds: Vec<i64>) -> Result<Self> {
        let p = Self::new(forms, bounds)?;
        if !p.forms.is_empty() && p.rank != rank {
            return Err(Error::Dimension("form length differs from rank".into()));
        }
        Ok(RationalPolyhedron { rank, ..p })
    }

    pub fn contains(&self, x: &[BigRational]) -> bool {
        self.forms.iter().zip(&self.bounds).all(|(f, &b)| {
            let v: BigRational = f.iter().zip(x).map(|(&c, y)| BigRational::from_integer(c.into()) * y).sum();
            v >= BigRational::from_integer(b.into())
        })
    }

    fn homogenize(&self) -> Result<Homogenized> {
        let n = self.rank;
        let mut cons: Vec<Vec<BigInt>> = self
            .forms
            .iter()
            .zip(&self.bounds)
            .map(|(f, &b)| {
                let mut row: Vec<BigInt> = f.iter().map(|&x| BigInt::from(x)).collect();
                row.push(BigInt::from(-b));
                row
            })
            .collect();
        let mut t = vec![BigInt::zero(); n + 1];
        t[n] = BigInt::from(1);
        cons.push(t);
        let d = dd::double_description(&cons, n + 1);
        if !d.lineality.is_empty() {
            return Err(Error::Hypothesis("polyhedron contains a line".into()));
        }
        let mut vertices = Vec::new();
        let mut rays = Vec::new();
        for r in d.rays {
            if r[n].is_zero() {
                rays.push(
                    r[..n]
                        .iter()
                        .map(|x| x.to_i64().ok_or(Error::Overflow("recession ray")))
                        .collect::<Result<Vec<i64>>>()?,
                );
            } else {
                let t = &r[n];
                vertices.push(r[..n].iter().map(|x| BigRational::new(x.clone(), t.clone())).collect());
            }
        }
        if vertices.is_empty() {
            return Err(Error::Infeasible);
        }
        vertices.sort();
        sort_desc(&mut rays);
        Ok(Homogenized { vertices, rays })
    }

    /// Exact extreme points in lexicographic order.
    pub fn vertices(&self) -> Result<Vec<RationalPoint>> {
        Ok(self.homogenize()?.vertices)
    }

    /// Extreme rays of the recession cone.
    pub fn recession_rays(&self) -> Result<Vec<Vec<i64>>> {
        Ok(self.homogenize()?.rays)
    }

    fn value(&self, i: usize, x: &[BigRational]) -> BigRational {
        self.forms[i].iter().zip(x).map(|(&c, y)| BigRational::from_integer(c.into()) * y).sum()
    }

    pub fn face_lattice(&self, cap: usize) -> Result<FaceReport> {
        face_lattice(self, cap)
    }
}

/// Exact extreme points of a nonempty line-free polyhedron.
pub fn polyhedron_vertices(p: &RationalPolyhedron) -> Result<Vec<RationalPoint>> {
    p.vertices()
}

fn affine_rank(points: &[&RationalPoint], rays: &[&Vec<i64>], n: usize) -> usize {
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    if let Some(p0) = points.first() {
        for p in &points[1..] {
            rows.push(p.iter().zip(p0.iter()).map(|(a, b)| a - b).collect());
        }
    }
    for r in rays {
        rows.push(r.iter().map(|&x| BigRational::from_integer(x.into())).collect());
    }
    rational_rank(rows, n)
}

pub(crate) fn rational_rank(mut rows: Vec<Vec<BigRational>>, n: usize) -> usize {
    let mut rank = 0;
    for c in 0..n {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot[c];
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x = &*x - &f * y;
            }
        }
        rank += 1;
    }
    rank
}

/// Enumerates all nonempty faces by closing tight sets, starting from the
/// whole polyhedron and adding one form at a time.
pub fn face_lattice(p: &RationalPolyhedron, cap: usize) -> Result<FaceReport> {
    let s = p.forms.len();
    if s > cap {
        return Err(Error::CapExceeded { forms: s, cap });
    }
    let h = p.homogenize()?;
    let vtight: Vec<BTreeSet<usize>> = h
        .vertices
        .iter()
        .map(|v| (0..s).filter(|&i| p.value(i, v) == BigRational::from_integer(p.bounds[i].into())).collect())
        .collect();
    let rtight: Vec<BTreeSet<usize>> =
        h.rays.iter().map(|r| (0..s).filter(|&i| dot(&p.forms[i], r) == 0).collect()).collect();

    let members = |j: &BTreeSet<usize>| -> (Vec<usize>, Vec<usize>) {
        let vs = (0..vtight.len()).filter(|&k| j.is_subset(&vtight[k])).collect();
        let rs = (0..rtight.len()).filter(|&k| j.is_subset(&rtight[k])).collect();
        (vs, rs)
    };
    let closure = |vs: &[usize], rs: &[usize]| -> BTreeSet<usize> {
        (0..s)
            .filter(|i| vs.iter().all(|&k| vtight[k].contains(i)) && rs.iter().all(|&k| rtight[k].contains(i)))
            .collect()
    };

    let mut seen: HashSet<BTreeSet<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    let (v0, r0) = members(&BTreeSet::new());
    let top = closure(&v0, &r0);
    seen.insert(top.clone());
    queue.push_back(top);
    let mut faces = Vec::new();
    let mut segments = Vec::new();
    while let Some(j) = queue.pop_front() {
        let (vs, rs) = members(&j);
        let vp: Vec<&RationalPoint> = vs.iter().map(|&k| &h.vertices[k]).collect();
        let rp: Vec<&Vec<i64>> = rs.iter().map(|&k| &h.rays[k]).collect();
        let dimension = affine_rank(&vp, &rp, p.rank);
        let compact = rs.is_empty();
        if compact && dimension == 1 {
            let a = vp[0].clone();
            let b = vp[1].clone();
            let squared_length = a.iter().zip(&b).map(|(x, y)| (x - y) * (x - y)).sum();
            segments.push(Segment { tight: j.iter().copied().collect(), endpoints: [a, b], squared_length });
        }
        faces.push(FaceRecord { tight: j.iter().copied().collect(), dimension, compact });
        for i in 0..s {
            if j.contains(&i) {
                continue;
            }
            let mut next = j.clone();
            next.insert(i);
            let (nv, nr) = members(&next);
            if nv.is_empty() {
                continue;
            }
            let c = closure(&nv, &nr);
            if seen.insert(c.clone()) {
                queue.push_back(c);
            }
        }
    }
    faces.sort_by(|a, b| (a.dimension, &a.tight).cmp(&(b.dimension, &b.tight)));
    segments.sort_by(|a, b| a.tight.cmp(&b.tight));
    let max_compact_dim = faces.iter().filter(|f| f.compact).map(|f| f.dimension).max().unwrap_or(0);
    Ok(FaceReport { faces, max_compact_dim, segments })
}

/// `min`/`max` of `objective` over `{x : forms_i(x) >= bounds_i}`.
pub fn rational_lp(forms: &[Vec<i64>], bounds: &[i64], objective: &[i64], sense: Sense) -> Result<LpOutcome> {
    if forms.len() != bounds.len() || forms.iter().any(|f| f.len() != objective.len()) {
        return Err(Error::Dimension("inconsistent linear program".into()));
    }
    let cons: Vec<Constraint> =
        forms.iter().zip(bounds).map(|(f, &b)| Constraint::from_ints(f, Relation::Ge, b)).collect();
    let obj: Vec<Q> = objective.iter().map(|&c| Q::from_integer(c.into())).collect();
    Ok(lp::solve(objective.len(), &cons, &obj, sense))
}

/// Mixed strict/weak feasibility over `Q^n`.
pub fn strict_feasibility(n: usize, weak: &[Constraint], strict: &[Constraint]) -> Feasibility {
    lp::strict_feasibility(n, weak, strict)
}

/// Solves the square system `rows * x = rhs` exactly; `None` if singular.
pub fn solve_square(rows: &[Vec<i64>], rhs: &[i64]) -> Option<RationalPoint> {
    let n = rows.len();
    let m = IntMatrix::from_rows(rows, n).ok()?;
    let inv = m.rational_inverse()?;
    Some(inv.iter().map(|r| r.iter().zip(rhs).map(|(a, &b)| a * BigRational::from_integer(b.into())).sum()).collect())
}

pub fn is_nonnegative(q: &BigRational) -> bool {
    !q.is_negative()
}
