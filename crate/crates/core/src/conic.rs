//! Conic divisor classes, face ideals, canonical duals and Frobenius
//! decompositions.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::divisorial::{Class, ClassGroup};
use crate::error::{Error, Result};
use crate::polyhedral::{dot, rational_lp, strict_feasibility, Constraint, Feasibility, LpOutcome, Relation, Sense, Q};
use crate::semigroup::AffineSemigroup;

fn q(x: i64) -> Q {
    Q::from_integer(x.into())
}

fn form_value(f: &[i64], beta: &[Q]) -> Q {
    f.iter().zip(beta).map(|(&c, b)| q(c) * b).sum()
}

fn ceil(x: &Q) -> i64 {
    use num_traits::ToPrimitive;
    x.ceil().to_integer().to_i64().expect("small ceiling")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConicClass {
    pub class: Class,
    pub bounds: Vec<i64>,
    #[serde(with = "crate::exact")]
    pub witness: Vec<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConicReport {
    pub classes: Vec<ConicClass>,
    pub complete: bool,
}

impl ConicReport {
    pub fn class_set(&self) -> BTreeSet<Class> {
        self.classes.iter().map(|c| c.class.clone()).collect()
    }

    pub fn contains(&self, c: &[i64]) -> bool {
        self.classes.iter().any(|k| k.class == c)
    }
}

/// Witness `beta` with `a_i - 1 < sigma_i(beta) <= a_i`, if any. With
/// `open` both sides are strict.
pub fn conic_witness(s: &AffineSemigroup, a: &[i64], open: bool) -> Option<Vec<Q>> {
    let mut weak = Vec::new();
    let mut strict = Vec::new();
    for (f, &ai) in s.support_forms.iter().zip(a) {
        strict.push(Constraint::from_ints(f, Relation::Ge, ai - 1));
        let upper = Constraint::from_ints(f, Relation::Le, ai);
        if open {
            strict.push(upper);
        } else {
            weak.push(upper);
        }
    }
    match strict_feasibility(s.rank, &weak, &strict) {
        Feasibility::Feasible { witness, .. } => Some(witness),
        Feasibility::Infeasible => None,
    }
}

/// Whether `a` is the bound vector `ceil(sigma(beta))` of some real `beta`.
pub fn is_conic(s: &AffineSemigroup, a: &[i64]) -> bool {
    conic_witness(s, a, false).is_some()
}

/// All conic classes, from the cells `{ceil(sigma(beta)) = a}` that meet the
/// half-open unit cube.
pub fn conic_classes(s: &AffineSemigroup, cl: &ClassGroup) -> Result<ConicReport> {
    let r = s.rank;
    let mut cube = Vec::new();
    for j in 0..r {
        let mut e = vec![0; r];
        e[j] = 1;
        cube.push(e.clone());
        e[j] = -1;
        cube.push(e);
    }
    let cube_bounds: Vec<i64> = (0..2 * r).map(|i| if i % 2 == 0 { 0 } else { -1 }).collect();
    let mut ranges = Vec::new();
    for f in &s.support_forms {
        let lo = match rational_lp(&cube, &cube_bounds, f, Sense::Minimize)? {
            LpOutcome::Optimal { value, .. } => ceil(&value),
            _ => return Err(Error::Internal("unit cube LP failed".into())),
        };
        let hi = match rational_lp(&cube, &cube_bounds, f, Sense::Maximize)? {
            LpOutcome::Optimal { value, .. } => ceil(&value),
            _ => return Err(Error::Internal("unit cube LP failed".into())),
        };
        ranges.push((lo, hi));
    }
    let mut candidates: Vec<Vec<i64>> = vec![Vec::new()];
    for &(lo, hi) in &ranges {
        candidates = candidates
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |x| {
                    let mut v = p.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    let mut weak_cube = Vec::new();
    let mut strict_cube = Vec::new();
    for j in 0..r {
        let mut e = vec![0; r];
        e[j] = 1;
        weak_cube.push(Constraint::from_ints(&e, Relation::Ge, 0));
        strict_cube.push(Constraint::from_ints(&e, Relation::Le, 1));
    }
    let found: Vec<(Vec<i64>, Vec<Q>)> = candidates
        .par_iter()
        .filter_map(|a| {
            let mut weak = weak_cube.clone();
            let mut strict = strict_cube.clone();
            for (f, &ai) in s.support_forms.iter().zip(a) {
                strict.push(Constraint::from_ints(f, Relation::Ge, ai - 1));
                weak.push(Constraint::from_ints(f, Relation::Le, ai));
            }
            match strict_feasibility(r, &weak, &strict) {
                Feasibility::Feasible { witness, .. } => Some((a.clone(), witness)),
                Feasibility::Infeasible => None,
            }
        })
        .collect();
    let mut by_class: BTreeMap<Class, ConicClass> = BTreeMap::new();
    for (a, beta) in found {
        let c = cl.class_of_bounds(&a)?;
        by_class.entry(c.clone()).or_insert(ConicClass { class: c, bounds: a, witness: beta });
    }
    Ok(ConicReport { classes: by_class.into_values().collect(), complete: true })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceIdeal {
    pub bounds: Vec<i64>,
    pub class: Class,
    #[serde(with = "crate::exact")]
    pub witness: Vec<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceIdeals {
    /// Indices of the support forms vanishing on the face.
    pub face: Vec<usize>,
    pub q: FaceIdeal,
    pub r: FaceIdeal,
}

/// Bound vectors of `q_G` (the intersection of the `p_i` with `F_i ⊇ G`) and
/// of `r_G` (the complementary intersection), with conic witnesses.
pub fn face_ideal_bounds(s: &AffineSemigroup, cl: &ClassGroup, face: &[usize]) -> Result<FaceIdeals> {
    let n = s.num_forms();
    let tight: BTreeSet<usize> = face.iter().copied().collect();
    if tight.iter().any(|&i| i >= n) {
        return Err(Error::Input(format!("face index out of range 0..{n}")));
    }
    let in_face: Vec<&Vec<i64>> =
        s.extreme_rays.iter().filter(|v| tight.iter().all(|&i| dot(&s.support_forms[i], v) == 0)).collect();
    let closure: BTreeSet<usize> =
        (0..n).filter(|&i| in_face.iter().all(|v| dot(&s.support_forms[i], v) == 0)).collect();
    if closure != tight {
        return Err(Error::Input(format!("{face:?} is not the tight set of a face (closure {closure:?})")));
    }
    let r = s.rank;
    let sum = |vs: &[&Vec<i64>]| -> Vec<i64> { (0..r).map(|j| vs.iter().map(|v| v[j]).sum()).collect() };
    let all: Vec<&Vec<i64>> = s.extreme_rays.iter().collect();
    let interior = sum(&all);
    let delta = sum(&in_face);
    // c large enough that sigma_i(interior - c delta) < 0 off the face
    let mut c = Q::one();
    for i in 0..n {
        if tight.contains(&i) {
            continue;
        }
        let ratio = Q::new(dot(&s.support_forms[i], &interior).into(), dot(&s.support_forms[i], &delta).into());
        if ratio.clone() + Q::one() > c {
            c = ratio + Q::one();
        }
    }
    let base: Vec<Q> = interior.iter().zip(&delta).map(|(&x, &d)| q(x) - &c * q(d)).collect();
    let scale =
        s.support_forms.iter().map(|f| form_value(f, &base).abs()).fold(Q::zero(), |m, v| if v > m { v } else { m })
            + Q::one();
    let beta_q: Vec<Q> = base.iter().map(|x| x / &scale).collect();
    let beta_r: Vec<Q> = beta_q.iter().map(|x| -x).collect();
    let a_q: Vec<i64> = (0..n).map(|i| tight.contains(&i) as i64).collect();
    let a_r: Vec<i64> = a_q.iter().map(|x| 1 - x).collect();
    for (a, beta) in [(&a_q, &beta_q), (&a_r, &beta_r)] {
        let got: Vec<i64> = s.support_forms.iter().map(|f| ceil(&form_value(f, beta))).collect();
        if got != *a || !is_conic(s, a) {
            return Err(Error::Internal("face ideal witness failed".into()));
        }
    }
    Ok(FaceIdeals {
        face: tight.into_iter().collect(),
        q: FaceIdeal { class: cl.class_of_bounds(&a_q)?, bounds: a_q, witness: beta_q },
        r: FaceIdeal { class: cl.class_of_bounds(&a_r)?, bounds: a_r, witness: beta_r },
    })
}

/// Bound vector `1 - a` of `omega : D` for a conic `a`, with its witness.
pub fn canonical_dual_bounds(s: &AffineSemigroup, cl: &ClassGroup, a: &[i64]) -> Result<ConicClass> {
    if a.len() != s.num_forms() {
        return Err(Error::Dimension(format!("{} bounds for {} forms", a.len(), s.num_forms())));
    }
    if !is_conic(s, a) {
        return Err(Error::Hypothesis(format!("{a:?} is not a conic bound vector")));
    }
    let dual: Vec<i64> = a.iter().map(|x| 1 - x).collect();
    let witness = match conic_witness(s, a, true) {
        Some(beta) => beta.iter().map(|x| -x).collect(),
        None => conic_witness(s, &dual, false).ok_or_else(|| Error::Internal("canonical dual is not conic".into()))?,
    };
    let got: Vec<i64> = s.support_forms.iter().map(|f| ceil(&form_value(f, &witness))).collect();
    if got != dual {
        return Err(Error::Internal("canonical dual witness mismatch".into()));
    }
    Ok(ConicClass { class: cl.class_of_bounds(&dual)?, bounds: dual, witness })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusDecomposition {
    pub k: i64,
    /// Class and multiplicity, ordered by class.
    pub classes: Vec<(Class, u64)>,
}

impl FrobeniusDecomposition {
    pub fn class_set(&self) -> BTreeSet<Class> {
        self.classes.iter().map(|(c, _)| c.clone()).collect()
    }
}

/// Classes of the `k^r` coset modules `{x in S : x ≡ z mod k}` over the
/// Veronese subring, with bounds `ceil(sigma_i(z) / k)`.
pub fn frobenius_decomposition(s: &AffineSemigroup, cl: &ClassGroup, k: i64) -> Result<FrobeniusDecomposition> {
    if k < 1 {
        return Err(Error::Input("k must be positive".into()));
    }
    let r = s.rank as u32;
    let total = (k as u64).checked_pow(r).ok_or(Error::Overflow("residue count"))?;
    let mut counts: BTreeMap<Class, u64> = BTreeMap::new();
    let mut z = vec![0i64; s.rank];
    for _ in 0..total {
        let a: Vec<i64> =
            s.support_forms.iter().map(|f| dot(f, &z).div_euclid(k) + (dot(f, &z).rem_euclid(k) != 0) as i64).collect();
        *counts.entry(cl.class_of_bounds(&a)?).or_insert(0) += 1;
        for x in z.iter_mut() {
            *x += 1;
            if *x < k {
                break;
            }
            *x = 0;
        }
    }
    Ok(FrobeniusDecomposition { k, classes: counts.into_iter().collect() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusLadder {
    pub steps: Vec<FrobeniusDecomposition>,
    /// First `k` whose class set equals that of `k - 1`.
    pub stabilized_at: Option<i64>,
    /// First `k` whose class set equals the conic set.
    pub matches_conic_at: Option<i64>,
    /// Every class met along the ladder is conic.
    pub all_conic: bool,
}

pub fn frobenius_ladder(
    s: &AffineSemigroup,
    cl: &ClassGroup,
    conic: &ConicReport,
    kmax: i64,
) -> Result<FrobeniusLadder> {
    let target = conic.class_set();
    let mut steps: Vec<FrobeniusDecomposition> = Vec::new();
    let mut stabilized_at = None;
    let mut matches_conic_at = None;
    let mut all_conic = true;
    for k in 1..=kmax {
        let d = frobenius_decomposition(s, cl, k)?;
        let set = d.class_set();
        all_conic &= set.is_subset(&target);
        if stabilized_at.is_none() && steps.last().is_some_and(|p| p.class_set() == set) {
            stabilized_at = Some(k);
        }
        if matches_conic_at.is_none() && set == target {
            matches_conic_at = Some(k);
        }
        steps.push(d);
    }
    Ok(FrobeniusLadder { steps, stabilized_at, matches_conic_at, all_conic })
}
