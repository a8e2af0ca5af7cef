//! Divisor class groups, class arithmetic, torsion, and minimal generators of
//! divisorial ideals through the Rees cone.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{hilbert_basis, DegreeBound};
use crate::lattice::{quotient_presentation, AbelianPresentation};
use crate::polyhedral::{dot, RationalPolyhedron};
use crate::semigroup::AffineSemigroup;

/// `Cl(R) = Z^s / sigma(Z^r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGroup {
    pub presentation: AbelianPresentation,
}

/// Class coordinates: torsion coordinates in `[0, d_i)` followed by free ones.
pub type Class = Vec<i64>;

fn to_class(v: &[BigInt]) -> Result<Class> {
    v.iter().map(|x| x.to_i64().ok_or(Error::Overflow("class coordinate"))).collect()
}

impl ClassGroup {
    pub fn invariant_factors(&self) -> Vec<i64> {
        self.presentation.invariant_factors.iter().map(|d| d.to_i64().expect("small factor")).collect()
    }

    pub fn free_rank(&self) -> usize {
        self.presentation.free_rank
    }

    pub fn coordinate_count(&self) -> usize {
        self.presentation.coordinate_count()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == 0
    }

    /// Order of the torsion part.
    pub fn torsion_size(&self) -> i64 {
        self.invariant_factors().iter().product()
    }

    pub fn class_of_bounds(&self, a: &[i64]) -> Result<Class> {
        to_class(&self.presentation.project_i64(a)?)
    }

    pub fn normalize(&self, c: &[i64]) -> Class {
        let big: Vec<BigInt> = c.iter().map(|&x| x.into()).collect();
        to_class(&self.presentation.normalize(&big)).expect("normalized class")
    }

    pub fn zero(&self) -> Class {
        vec![0; self.coordinate_count()]
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Class {
        let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.normalize(&s)
    }

    pub fn neg(&self, a: &[i64]) -> Class {
        let s: Vec<i64> = a.iter().map(|x| -x).collect();
        self.normalize(&s)
    }

    pub fn scale(&self, j: i64, a: &[i64]) -> Class {
        let s: Vec<i64> = a.iter().map(|x| j * x).collect();
        self.normalize(&s)
    }

    /// Some bound vector of class `c` (not tightened).
    pub fn raw_lift(&self, c: &[i64]) -> Result<Vec<i64>> {
        let big: Vec<BigInt> = c.iter().map(|&x| x.into()).collect();
        to_class(&self.presentation.lift(&big)?)
    }

    pub fn order(&self, c: &[i64]) -> Option<i64> {
        let big: Vec<BigInt> = c.iter().map(|&x| x.into()).collect();
        self.presentation.order(&big).map(|o| o.to_i64().expect("small order"))
    }

    /// Every element of the torsion subgroup.
    pub fn torsion_elements(&self) -> Vec<Class> {
        let factors = self.invariant_factors();
        let mut out = vec![Vec::new()];
        for d in factors {
            out = out
                .into_iter()
                .flat_map(|p: Vec<i64>| {
                    (0..d).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        for c in out.iter_mut() {
            c.extend(std::iter::repeat_n(0, self.free_rank()));
        }
        out
    }

    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self.invariant_factors().iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank() {
            0 => {}
            1 => parts.push("Z".into()),
            f => parts.push(format!("Z^{f}")),
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// The class group with free coordinates oriented so that the canonical
/// class `(1, ..., 1)` has a nonnegative free part (and, where that is zero,
/// the first nonzero coefficient of the coordinate is positive).
pub fn class_group(s: &AffineSemigroup) -> Result<ClassGroup> {
    let mut p = quotient_presentation(&s.sigma_matrix());
    let k = p.invariant_factors.len();
    for i in 0..p.free_rank {
        let row = p.projection.row(k + i);
        let sum: BigInt = row.iter().sum();
        let flip = if sum.is_zero() {
            row.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative())
        } else {
            sum.is_negative()
        };
        if flip {
            p.flip_free_coordinate(i);
        }
    }
    Ok(ClassGroup { presentation: p })
}

/// Minimal generating set of a monomial module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    pub points: Vec<Vec<i64>>,
    pub mu: usize,
}

impl GeneratorSet {
    pub fn new(mut points: Vec<Vec<i64>>) -> Self {
        points.sort();
        let mu = points.len();
        GeneratorSet { points, mu }
    }

    pub fn empty() -> Self {
        GeneratorSet { points: Vec::new(), mu: 0 }
    }
}

/// The `S`-minimal points of `T = {x in Z^r : f_i(x) >= a_i}`, read off as
/// the degree one elements of the Hilbert basis of the Rees cone
/// `{(x, t) : t >= 0, f_i(x) >= a_i t}`. The forms must cut out `C(S)`
/// homogeneously. Returns an empty set when `T` is empty.
pub fn module_generators(rank: usize, forms: &[Vec<i64>], a: &[i64]) -> Result<GeneratorSet> {
    if forms.len() != a.len() {
        return Err(Error::Dimension(format!("{} forms but {} bounds", forms.len(), a.len())));
    }
    if let Some(f) = forms.iter().find(|f| f.len() != rank) {
        return Err(Error::Dimension(format!("form of length {} in rank {rank}", f.len())));
    }
    let mut rees: Vec<Vec<i64>> = forms
        .iter()
        .zip(a)
        .map(|(f, &ai)| {
            let mut row = f.clone();
            row.push(-ai);
            row
        })
        .collect();
    let mut t = vec![0; rank + 1];
    t[rank] = 1;
    rees.push(t.clone());
    let bound = DegreeBound { grading: t, max_degree: 1 };
    let hb = hilbert_basis(rank + 1, &rees, Some(&bound))?;
    let points = hb
        .into_iter()
        .filter(|h| h[rank] == 1)
        .map(|mut h| {
            h.pop();
            h
        })
        .collect();
    Ok(GeneratorSet::new(points))
}

/// Minimal generators of the divisorial ideal `T(a)` for the support forms.
pub fn minimal_generators(s: &AffineSemigroup, a: &[i64]) -> Result<GeneratorSet> {
    if a.len() != s.num_forms() {
        return Err(Error::Dimension(format!("{} bounds for {} support forms", a.len(), s.num_forms())));
    }
    let g = module_generators(s.rank, &s.support_forms, a)?;
    if g.points.is_empty() {
        return Err(Error::Infeasible);
    }
    Ok(g)
}

/// `min_i f(x)` over the generators, per form.
pub fn tighten(forms: &[Vec<i64>], gens: &GeneratorSet) -> Vec<i64> {
    forms.iter().map(|f| gens.points.iter().map(|x| dot(f, x)).min().expect("nonempty generator set")).collect()
}

/// Effective bounds of `T(a)` for the support forms.
pub fn tight_bounds(s: &AffineSemigroup, a: &[i64]) -> Result<Vec<i64>> {
    Ok(tighten(&s.support_forms, &minimal_generators(s, a)?))
}

/// The eff-tight representative of class `c`, lifted through the section.
pub fn class_lift(s: &AffineSemigroup, cl: &ClassGroup, c: &[i64]) -> Result<Vec<i64>> {
    tight_bounds(s, &cl.raw_lift(c)?)
}

/// `C(D) = {x : sigma_i(x) >= a_i}`.
pub fn divisor_polyhedron(s: &AffineSemigroup, a: &[i64]) -> Result<RationalPolyhedron> {
    RationalPolyhedron::with_rank(s.rank, s.support_forms.clone(), a.to_vec())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionReport {
    /// `None` for infinite order.
    pub order: Option<i64>,
    pub vertex_count: usize,
    pub consistent: bool,
}

/// Order of `c`, cross-checked against the number of vertices of `C(D)` for
/// the tight lift of `c` (one vertex exactly for torsion classes).
pub fn torsion_order(s: &AffineSemigroup, cl: &ClassGroup, c: &[i64]) -> Result<TorsionReport> {
    let order = cl.order(c);
    let a = class_lift(s, cl, c)?;
    let vertex_count = divisor_polyhedron(s, &a)?.vertices()?.len();
    Ok(TorsionReport { order, vertex_count, consistent: order.is_some() == (vertex_count == 1) })
}

/// The bound vector `(1, ..., 1)` of the canonical module and its class.
pub fn canonical_class(s: &AffineSemigroup, cl: &ClassGroup) -> Result<(Vec<i64>, Class)> {
    let a = vec![1; s.num_forms()];
    let c = cl.class_of_bounds(&a)?;
    Ok((a, c))
}
