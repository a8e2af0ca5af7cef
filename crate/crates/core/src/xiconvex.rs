//! ξ-convex ideals: effective bounds, isomorphism classes, intersections and
//! enumeration of classes with few generators.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::divisorial::{module_generators, tighten, GeneratorSet};
use crate::error::{Error, Result};
use crate::lattice::{lattice_solve_i64, quotient_presentation, to_i64_vec, AbelianPresentation};
use crate::semigroup::{purity_check, AffineSemigroup, FormSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiIdeal {
    pub bounds: Vec<i64>,
    pub eff: Vec<i64>,
    pub generators: GeneratorSet,
}

fn require_pure(s: &AffineSemigroup, xi: &FormSystem) -> Result<()> {
    let p = purity_check(s, xi)?;
    if !p.is_pure() {
        return Err(Error::Hypothesis(format!("the form system is not pure: {p:?}")));
    }
    Ok(())
}

fn check_len(xi: &FormSystem, a: &[i64]) -> Result<()> {
    if a.len() != xi.len() {
        return Err(Error::Dimension(format!("{} bounds for {} forms", a.len(), xi.len())));
    }
    Ok(())
}

/// Minimal generators of `T(a; xi)`.
pub fn xi_minimal_generators(s: &AffineSemigroup, xi: &FormSystem, a: &[i64]) -> Result<GeneratorSet> {
    check_len(xi, a)?;
    require_pure(s, xi)?;
    let g = module_generators(s.rank, &xi.forms, a)?;
    if g.points.is_empty() {
        return Err(Error::Infeasible);
    }
    Ok(g)
}

/// `eff(a; xi)_i = min xi_i(T)`, attained on the minimal generators.
pub fn eff_bounds(s: &AffineSemigroup, xi: &FormSystem, a: &[i64]) -> Result<XiIdeal> {
    let generators = xi_minimal_generators(s, xi, a)?;
    let eff = tighten(&xi.forms, &generators);
    Ok(XiIdeal { bounds: a.to_vec(), eff, generators })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoResult {
    pub isomorphic: bool,
    /// `y` with `T(a) = T(b) + y`.
    pub witness: Option<Vec<i64>>,
    pub eff_a: Vec<i64>,
    pub eff_b: Vec<i64>,
}

/// `T(a; xi) ≅ T(b; xi)` iff `eff(a) - eff(b)` lies in `xi(gp(S))`.
pub fn xi_iso_test(s: &AffineSemigroup, xi: &FormSystem, a: &[i64], b: &[i64]) -> Result<IsoResult> {
    let ea = eff_bounds(s, xi, a)?.eff;
    let eb = eff_bounds(s, xi, b)?.eff;
    let diff: Vec<i64> = ea.iter().zip(&eb).map(|(x, y)| x - y).collect();
    let witness = lattice_solve_i64(&xi.matrix(), &diff)?.map(|y| to_i64_vec(&y)).transpose()?;
    Ok(IsoResult { isomorphic: witness.is_some(), witness, eff_a: ea, eff_b: eb })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Intersection {
    pub forms: Vec<Vec<i64>>,
    pub bounds: Vec<i64>,
    pub empty: bool,
    pub generators: GeneratorSet,
}

/// `T(a; xi) ∩ T(b; zeta)` over the semigroup cut out by both systems.
pub fn intersect_modules(
    rank: usize,
    xi: &[Vec<i64>],
    a: &[i64],
    zeta: &[Vec<i64>],
    b: &[i64],
) -> Result<Intersection> {
    if xi.len() != a.len() || zeta.len() != b.len() {
        return Err(Error::Dimension("bounds do not match the form systems".into()));
    }
    let mut forms = xi.to_vec();
    forms.extend(zeta.iter().cloned());
    let mut bounds = a.to_vec();
    bounds.extend_from_slice(b);
    let generators = module_generators(rank, &forms, &bounds)?;
    Ok(Intersection { empty: generators.points.is_empty(), forms, bounds, generators })
}

/// Isomorphism classes of ξ-convex ideals: `Z^n / xi(Z^r)`.
pub fn xi_class_presentation(xi: &FormSystem) -> AbelianPresentation {
    quotient_presentation(&xi.matrix())
}

fn project(p: &AbelianPresentation, v: &[i64]) -> Result<Vec<i64>> {
    p.project_i64(v)?.iter().map(|x| x.to_i64().ok_or(Error::Overflow("class coordinate"))).collect()
}

/// Canonical representative of `v` modulo `xi(gp(S))`: the section applied to
/// its normalized coordinates.
pub fn canonical_residue(p: &AbelianPresentation, v: &[i64]) -> Result<Vec<i64>> {
    let c: Vec<BigInt> = p.project_i64(v)?;
    to_i64_vec(&p.lift(&c)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallMuClass {
    pub class: Vec<i64>,
    pub eff: Vec<i64>,
    pub mu: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    pub max_mu: usize,
    pub radius: i64,
    pub classes: Vec<SmallMuClass>,
    /// Smallest `mu` on the boundary of the box (`None` without free part).
    pub shell_min_mu: Option<usize>,
    pub status: String,
}

pub const EXPERIMENTALLY_FINITE: &str = "experimentally finite";

/// All isomorphism classes of ξ-convex ideals with `mu <= max_mu` whose
/// coordinates lie in the box `[-radius, radius]` on the free part.
pub fn enumerate_small_mu(s: &AffineSemigroup, xi: &FormSystem, max_mu: usize, radius: i64) -> Result<Enumeration> {
    require_pure(s, xi)?;
    let p = xi_class_presentation(xi);
    let factors: Vec<i64> = p.invariant_factors.iter().map(|d| d.to_i64().expect("small factor")).collect();
    let mut coords: Vec<Vec<i64>> = vec![Vec::new()];
    for &d in &factors {
        coords = coords.into_iter().flat_map(|c| (0..d).map(move |x| [c.clone(), vec![x]].concat())).collect();
    }
    for _ in 0..p.free_rank {
        coords =
            coords.into_iter().flat_map(|c| (-radius..=radius).map(move |x| [c.clone(), vec![x]].concat())).collect();
    }
    let k = factors.len();
    // a class is realized at its own coordinates by a tight bound vector
    let computed: Vec<Option<(SmallMuClass, bool)>> = coords
        .par_iter()
        .map(|c| {
            let big: Vec<BigInt> = c.iter().map(|&x| x.into()).collect();
            let a = to_i64_vec(&p.lift(&big)?)?;
            let ideal = eff_bounds(s, xi, &a)?;
            if project(&p, &ideal.eff)? != *c {
                return Ok(None);
            }
            let on_shell = c[k..].iter().any(|x| x.abs() == radius);
            Ok(Some((SmallMuClass { class: c.clone(), eff: ideal.eff, mu: ideal.generators.mu }, on_shell)))
        })
        .collect::<Result<_>>()?;
    let mut classes: Vec<SmallMuClass> = Vec::new();
    let mut shell_min_mu: Option<usize> = None;
    for (class, on_shell) in computed.into_iter().flatten() {
        if on_shell && p.free_rank > 0 {
            shell_min_mu = Some(shell_min_mu.map_or(class.mu, |m| m.min(class.mu)));
        }
        if class.mu <= max_mu {
            classes.push(class);
        }
    }
    classes.sort_by(|a, b| a.class.cmp(&b.class));
    let status = match shell_min_mu {
        None => "complete (finite class set)".to_string(),
        Some(m) if m > max_mu => EXPERIMENTALLY_FINITE.to_string(),
        Some(_) => "inconclusive: the boundary of the box still has small mu".to_string(),
    };
    Ok(Enumeration { max_mu, radius, classes, shell_min_mu, status })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quadratic() -> AffineSemigroup {
        AffineSemigroup::from_inequalities(2, &[vec![0, 1], vec![2, -1]]).unwrap()
    }

    fn xi3(s: &AffineSemigroup) -> FormSystem {
        FormSystem::new(s, vec![vec![0, 1], vec![2, -1], vec![2, 0]]).unwrap()
    }

    #[test]
    fn eff_of_the_quadratic_example() {
        let s = quadratic();
        let xi = xi3(&s);
        let t = eff_bounds(&s, &xi, &[0, 0, 1]).unwrap();
        assert_eq!(t.eff, vec![0, 0, 2]);
        assert_eq!(t.generators.points, vec![vec![1, 0], vec![1, 1], vec![1, 2]]);
        let iso = xi_iso_test(&s, &xi, &[0, 0, 1], &[0, 0, 2]).unwrap();
        assert!(iso.isomorphic);
        assert_eq!(iso.witness, Some(vec![0, 0]));
    }

    #[test]
    fn translation_is_an_isomorphism() {
        let s = quadratic();
        let xi = xi3(&s);
        let a = vec![1, 0, 3];
        let y = vec![2, -1];
        let b: Vec<i64> = a.iter().zip(xi.apply(&y)).map(|(p, q)| p + q).collect();
        let iso = xi_iso_test(&s, &xi, &b, &a).unwrap();
        assert!(iso.isomorphic);
        let w = iso.witness.unwrap();
        let eb = eff_bounds(&s, &xi, &b).unwrap().eff;
        let ea = eff_bounds(&s, &xi, &a).unwrap().eff;
        let shifted: Vec<i64> = ea.iter().zip(xi.apply(&w)).map(|(p, q)| p + q).collect();
        assert_eq!(eb, shifted);
    }

    #[test]
    fn intersection_of_two_divisorial_ideals() {
        let s = quadratic();
        let i = intersect_modules(2, &s.support_forms, &[1, 0], &s.support_forms, &[0, 1]).unwrap();
        let direct = module_generators(2, &s.support_forms, &[1, 1]).unwrap();
        assert_eq!(i.generators, direct);
        let i = intersect_modules(2, &[vec![1, 0]], &[1], &[vec![-1, 0]], &[0]).unwrap_err();
        assert!(matches!(i, Error::NotPositive(_)));
    }

    #[test]
    fn enumeration_on_the_quadratic_cone() {
        let s = quadratic();
        let xi = FormSystem::standard(&s);
        let e = enumerate_small_mu(&s, &xi, 1, 3).unwrap();
        assert_eq!(e.classes.len(), 1);
        assert_eq!(e.classes[0].mu, 1);
        assert!(enumerate_small_mu(&s, &xi, 0, 3).unwrap().classes.is_empty());
    }
}
