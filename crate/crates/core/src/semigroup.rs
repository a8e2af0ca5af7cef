//! Normal affine semigroups: normalization, support forms, the standard
//! embedding, and pure or divisorial form systems.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{hilbert_basis, rank_i64};
use crate::lattice::{hermite_normal_form, saturated_basis, IntMatrix};
use crate::polyhedral::{dot, dualize_cone, rational_lp, ConeInput, LpOutcome, Sense};

/// A positive normal affine semigroup `S = C(S) ∩ Z^r`, stored in internal
/// coordinates with `gp(S) = Z^r`. `embedding` holds a basis of `gp(S)` inside
/// the ambient lattice of the input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineSemigroup {
    pub rank: usize,
    pub ambient_rank: usize,
    /// `r` basis vectors of length `ambient_rank`.
    pub embedding: Vec<Vec<i64>>,
    /// `r` rows with `coordinates * embedding = denominator * I`.
    pub coordinates: Vec<Vec<i64>>,
    pub denominator: i64,
    /// True unless the embedding is the identity of `Z^r`.
    pub basis_changed: bool,
    pub generators: Vec<Vec<i64>>,
    pub extreme_rays: Vec<Vec<i64>>,
    pub support_forms: Vec<Vec<i64>>,
    pub hilbert_basis: Vec<Vec<i64>>,
    pub positive: bool,
    pub tau: Vec<i64>,
}

fn columns_to_rows(m: &IntMatrix) -> Result<Vec<Vec<i64>>> {
    m.to_i64_columns()
}

fn identity_rows(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect()
}

fn mat_vec(rows: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    rows.iter().map(|r| dot(r, v)).collect()
}

/// `sum_j y_j b_j` for basis vectors `b_j`.
fn combine(basis: &[Vec<i64>], y: &[i64], n: usize) -> Vec<i64> {
    (0..n).map(|i| basis.iter().zip(y).map(|(b, c)| b[i] * c).sum()).collect()
}

fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, x| g.gcd(x));
    if g == 0 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

impl AffineSemigroup {
    /// Normalization of the semigroup generated by `generators` in `Z^n`:
    /// the lattice points of the cone they span, inside the saturated lattice
    /// `Z^n ∩ span(generators)`.
    pub fn from_generators(n: usize, generators: &[Vec<i64>]) -> Result<Self> {
        if generators.iter().any(|g| g.len() != n) {
            return Err(Error::Dimension(format!("generator length differs from rank {n}")));
        }
        let nonzero: Vec<Vec<i64>> = generators.iter().filter(|g| g.iter().any(|&x| x != 0)).cloned().collect();
        if nonzero.is_empty() {
            return Err(Error::Input("the semigroup is trivial".into()));
        }
        let cone = dualize_cone(n, &ConeInput::Generators(nonzero.clone()))?;
        if !cone.is_pointed() {
            return Err(Error::NotPositive("the generators span a cone containing a line".into()));
        }
        let (basis, coords) = saturated_basis(&nonzero, n)?;
        let embedding = columns_to_rows(&basis)?;
        let coordinates = coords.to_i64_rows()?;
        let local: Vec<Vec<i64>> = nonzero.iter().map(|g| mat_vec(&coordinates, g)).collect();
        Self::build(n, embedding, (coordinates, 1), local, true)
    }

    /// Normalization of the semigroup generated by `generators` inside the
    /// group they generate, `C(S) ∩ gp(S)`.
    pub fn from_generators_in_group(n: usize, generators: &[Vec<i64>]) -> Result<Self> {
        if generators.iter().any(|g| g.len() != n) {
            return Err(Error::Dimension(format!("generator length differs from rank {n}")));
        }
        let nonzero: Vec<Vec<i64>> = generators.iter().filter(|g| g.iter().any(|&x| x != 0)).cloned().collect();
        if nonzero.is_empty() {
            return Err(Error::Input("the semigroup is trivial".into()));
        }
        let cone = dualize_cone(n, &ConeInput::Generators(nonzero.clone()))?;
        if !cone.is_pointed() {
            return Err(Error::NotPositive("the generators span a cone containing a line".into()));
        }
        let (h, _) = hermite_normal_form(&IntMatrix::from_rows(&nonzero, n)?);
        let embedding: Vec<Vec<i64>> = h.to_i64_rows()?.into_iter().filter(|r| r.iter().any(|&x| x != 0)).collect();
        let (coordinates, den) = left_inverse(&embedding, n)?;
        let local: Vec<Vec<i64>> =
            nonzero.iter().map(|g| mat_vec(&coordinates, g).iter().map(|c| c / den).collect()).collect();
        Self::build(n, embedding, (coordinates, den), local, true)
    }

    /// `S = {x in Z^n : f(x) >= 0}`; must be pointed.
    pub fn from_inequalities(n: usize, forms: &[Vec<i64>]) -> Result<Self> {
        Self::from_lattice(n, &identity_rows(n), forms)
    }

    /// `S = L ∩ {f(x) >= 0}` for the lattice `L` spanned by `lattice_basis`
    /// (linearly independent vectors of `Z^n`) and ambient forms `f`.
    pub fn from_lattice(n: usize, lattice_basis: &[Vec<i64>], forms: &[Vec<i64>]) -> Result<Self> {
        if forms.iter().any(|f| f.len() != n) || lattice_basis.iter().any(|b| b.len() != n) {
            return Err(Error::Dimension(format!("form length differs from rank {n}")));
        }
        let k = lattice_basis.len();
        if rank_i64(&lattice_basis.iter().collect::<Vec<_>>(), n) != k {
            return Err(Error::Input("lattice basis is linearly dependent".into()));
        }
        let pulled: Vec<Vec<i64>> = forms.iter().map(|f| lattice_basis.iter().map(|b| dot(f, b)).collect()).collect();
        let cone = dualize_cone(k, &ConeInput::Inequalities(pulled))?;
        if !cone.is_pointed() {
            return Err(Error::NotPositive("the inequalities admit a line of solutions".into()));
        }
        if cone.generators.is_empty() {
            return Err(Error::Input("the semigroup is trivial".into()));
        }
        // saturate inside L, then compose with the basis of L
        let (basis, coords) = saturated_basis(&cone.generators, k)?;
        let local_basis = columns_to_rows(&basis)?;
        let coords = coords.to_i64_rows()?;
        let rays: Vec<Vec<i64>> = cone.generators.iter().map(|g| mat_vec(&coords, g)).collect();
        let embedding: Vec<Vec<i64>> = local_basis.iter().map(|y| combine(lattice_basis, y, n)).collect();
        let coordinates = left_inverse(&embedding, n)?;
        Self::build(n, embedding, coordinates, rays, false)
    }

    fn build(
        n: usize,
        embedding: Vec<Vec<i64>>,
        (coordinates, denominator): (Vec<Vec<i64>>, i64),
        generators: Vec<Vec<i64>>,
        keep_generators: bool,
    ) -> Result<Self> {
        let r = embedding.len();
        let cone = dualize_cone(r, &ConeInput::Generators(generators.clone()))?;
        if !cone.is_full_dimensional() {
            return Err(Error::Internal("internal cone is not full-dimensional".into()));
        }
        let hb = hilbert_basis(r, &cone.inequalities, None)?;
        let tau: Vec<i64> = (0..r).map(|j| cone.inequalities.iter().map(|f| f[j]).sum()).collect();
        let basis_changed = embedding != identity_rows(n);
        let mut gens = if keep_generators { generators } else { hb.clone() };
        gens.sort();
        gens.dedup();
        Ok(AffineSemigroup {
            rank: r,
            ambient_rank: n,
            embedding,
            coordinates,
            denominator,
            basis_changed,
            generators: gens,
            extreme_rays: cone.generators,
            support_forms: cone.inequalities,
            hilbert_basis: hb,
            positive: true,
            tau,
        })
    }

    pub fn num_forms(&self) -> usize {
        self.support_forms.len()
    }

    /// The standard embedding `x -> (sigma_1(x), ..., sigma_s(x))`.
    pub fn sigma(&self, x: &[i64]) -> Vec<i64> {
        mat_vec(&self.support_forms, x)
    }

    pub fn sigma_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.support_forms, self.rank).expect("consistent forms")
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.support_forms.iter().all(|f| dot(f, x) >= 0)
    }

    pub fn to_ambient(&self, y: &[i64]) -> Vec<i64> {
        combine(&self.embedding, y, self.ambient_rank)
    }

    /// Internal coordinates of an ambient point of `gp(S)`.
    pub fn to_internal(&self, x: &[i64]) -> Result<Vec<i64>> {
        if x.len() != self.ambient_rank {
            return Err(Error::Dimension(format!("point of length {} in rank {}", x.len(), self.ambient_rank)));
        }
        let num = mat_vec(&self.coordinates, x);
        if num.iter().any(|c| c % self.denominator != 0) {
            return Err(Error::Input(format!("{x:?} does not lie in gp(S)")));
        }
        let y: Vec<i64> = num.iter().map(|c| c / self.denominator).collect();
        if self.to_ambient(&y) != x {
            return Err(Error::Input(format!("{x:?} does not lie in gp(S)")));
        }
        Ok(y)
    }

    /// A form on `Z^n` restricted to `gp(S)`.
    pub fn pull_form(&self, f: &[i64]) -> Result<Vec<i64>> {
        if f.len() != self.ambient_rank {
            return Err(Error::Dimension(format!("form of length {} in rank {}", f.len(), self.ambient_rank)));
        }
        Ok(self.embedding.iter().map(|b| dot(f, b)).collect())
    }

    pub fn is_simplicial(&self) -> bool {
        self.extreme_rays.len() == self.rank
    }
}

/// Left inverse of a basis `B` (`r` vectors of `Z^n`) with a common
/// denominator: `C B = den * I`.
fn left_inverse(basis: &[Vec<i64>], n: usize) -> Result<(Vec<Vec<i64>>, i64)> {
    let r = basis.len();
    let b = IntMatrix::from_columns(basis, n)?;
    let (h, u) = hermite_normal_form(&b);
    let idx: Vec<usize> = (0..r).collect();
    let t = h.select_rows(&idx);
    let det = t.determinant()?.abs();
    let inv = t.rational_inverse().ok_or_else(|| Error::Internal("dependent basis".into()))?;
    let top = u.select_rows(&idx);
    let mut out = vec![vec![0i64; n]; r];
    for (i, row) in inv.iter().enumerate() {
        for (j, o) in out[i].iter_mut().enumerate() {
            let mut acc = num_rational::BigRational::zero();
            for (k, x) in row.iter().enumerate() {
                acc += x * num_rational::BigRational::from_integer(top.get(k, j).clone());
            }
            let v = acc * num_rational::BigRational::from_integer(det.clone());
            *o = v.to_integer().to_i64().ok_or(Error::Overflow("coordinates"))?;
        }
    }
    let det = det.to_i64().ok_or(Error::Overflow("coordinates"))?;
    // reduce the common denominator
    let g = out.iter().flatten().fold(det, |g, x| g.gcd(x));
    for x in out.iter_mut().flatten() {
        *x /= g;
    }
    Ok((out, det / g))
}

/// `S` from a homogeneous system: `A x = 0`, `B_i x ≡ 0 mod c_i`, `x >= 0`.
/// The solution lattice is computed with a Hermite normal form, and its
/// canonical HNF basis is used as the coordinate system.
pub fn from_equations(n: usize, equations: &[Vec<i64>], congruences: &[(Vec<i64>, i64)]) -> Result<AffineSemigroup> {
    let lattice = solution_lattice(n, equations, congruences)?;
    AffineSemigroup::from_lattice(n, &lattice, &identity_rows(n))
}

/// HNF basis of `{x in Z^n : A x = 0, B_i x ≡ 0 mod c_i}`.
pub fn solution_lattice(n: usize, equations: &[Vec<i64>], congruences: &[(Vec<i64>, i64)]) -> Result<Vec<Vec<i64>>> {
    if equations.iter().any(|e| e.len() != n) || congruences.iter().any(|(e, _)| e.len() != n) {
        return Err(Error::Dimension(format!("equation length differs from rank {n}")));
    }
    if let Some((_, c)) = congruences.iter().find(|(_, c)| *c < 2) {
        return Err(Error::Input(format!("congruence modulus {c} must be at least 2")));
    }
    let q = congruences.len();
    let width = n + q;
    // rows of M: [A 0] and [B diag(c)]; kernel of M projected to x
    let mut rows: Vec<Vec<i64>> = equations
        .iter()
        .map(|e| {
            let mut r = e.clone();
            r.resize(width, 0);
            r
        })
        .collect();
    for (i, (e, c)) in congruences.iter().enumerate() {
        let mut r = e.clone();
        r.resize(width, 0);
        r[n + i] = *c;
        rows.push(r);
    }
    let m = IntMatrix::from_rows(&rows, width)?;
    let (h, u) = hermite_normal_form(&m.transpose());
    let kernel: Vec<Vec<i64>> = (0..h.rows())
        .filter(|&i| h.row(i).iter().all(|x| x.is_zero()))
        .map(|i| u.row(i)[..n].iter().map(|x| x.to_i64().ok_or(Error::Overflow("solution lattice"))).collect())
        .collect::<Result<_>>()?;
    if kernel.is_empty() {
        return Err(Error::Input("the system has only the zero solution".into()));
    }
    let (hk, _) = hermite_normal_form(&IntMatrix::from_rows(&kernel, n)?);
    let basis: Vec<Vec<i64>> = hk.to_i64_rows()?.into_iter().filter(|r| r.iter().any(|&x| x != 0)).collect();
    Ok(basis)
}

/// A nondegenerate system of forms `xi_1, ..., xi_n` on `gp(S) = Z^r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormSystem {
    pub forms: Vec<Vec<i64>>,
}

impl FormSystem {
    pub fn new(s: &AffineSemigroup, forms: Vec<Vec<i64>>) -> Result<Self> {
        if forms.is_empty() {
            return Err(Error::Input("empty form system".into()));
        }
        if let Some(f) = forms.iter().find(|f| f.len() != s.rank) {
            return Err(Error::Dimension(format!("form of length {} on a rank {} semigroup", f.len(), s.rank)));
        }
        if let Some(i) = forms.iter().position(|f| f.iter().all(|&x| x == 0)) {
            return Err(Error::Input(format!("form {i} is zero")));
        }
        Ok(FormSystem { forms })
    }

    pub fn standard(s: &AffineSemigroup) -> Self {
        FormSystem { forms: s.support_forms.clone() }
    }

    /// Forms given on the ambient lattice of the input, restricted to `gp(S)`.
    pub fn from_ambient(s: &AffineSemigroup, forms: &[Vec<i64>]) -> Result<Self> {
        let pulled = forms.iter().map(|f| s.pull_form(f)).collect::<Result<Vec<_>>>()?;
        Self::new(s, pulled)
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        mat_vec(&self.forms, x)
    }

    pub fn matrix(&self) -> IntMatrix {
        let r = self.forms[0].len();
        IntMatrix::from_rows(&self.forms, r).expect("consistent forms")
    }

    pub fn is_injective(&self) -> bool {
        let r = self.forms[0].len();
        rank_i64(&self.forms.iter().collect::<Vec<_>>(), r) == r
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Purity {
    Pure,
    /// Support form `sigma` has no positive multiple among the `xi_i`.
    MissingSupportForm {
        index: usize,
        sigma: Vec<i64>,
    },
    /// `xi_i` takes negative values on `S`; `witness` is a point of `S` with `xi_i(witness) < 0`.
    NotInDualCone {
        index: usize,
        witness: Vec<i64>,
    },
}

impl Purity {
    pub fn is_pure(&self) -> bool {
        matches!(self, Purity::Pure)
    }
}

/// Decides purity of `xi`: every support form is a positive multiple of some
/// `xi_i`, and every `xi_i` is nonnegative on `C(S)`.
pub fn purity_check(s: &AffineSemigroup, xi: &FormSystem) -> Result<Purity> {
    if !xi.is_injective() {
        return Err(Error::Hypothesis("the form system is not injective".into()));
    }
    let prim: Vec<Vec<i64>> = xi.forms.iter().map(|f| primitive(f)).collect();
    for (j, sigma) in s.support_forms.iter().enumerate() {
        if !prim.iter().any(|p| p == sigma) {
            return Ok(Purity::MissingSupportForm { index: j, sigma: sigma.clone() });
        }
    }
    let zeros = vec![0i64; s.num_forms()];
    for (i, f) in xi.forms.iter().enumerate() {
        match rational_lp(&s.support_forms, &zeros, f, Sense::Minimize)? {
            LpOutcome::Optimal { .. } => {}
            LpOutcome::Unbounded => {
                let witness = s
                    .extreme_rays
                    .iter()
                    .find(|r| dot(f, r) < 0)
                    .cloned()
                    .ok_or_else(|| Error::Internal("unbounded form without a negative ray".into()))?;
                return Ok(Purity::NotInDualCone { index: i, witness });
            }
            LpOutcome::Infeasible => return Err(Error::Internal("the cone is empty".into())),
        }
    }
    Ok(Purity::Pure)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Divisoriality {
    pub divisorial: bool,
    /// For each `xi_i` that is a multiple `e * sigma_j`: `Some((j, e))`.
    pub multiples: Vec<Option<(usize, i64)>>,
    /// A pair `(i, k)` with `E_k` properly contained in `E_i`, when one exists.
    pub containment: Option<(usize, usize)>,
}

/// Coset modules of a pure `xi` are divisorial iff every `xi_i` is a multiple
/// of a single support form. The generator sets `E_i` are checked as well and
/// must give the same answer.
pub fn coset_divisoriality_check(s: &AffineSemigroup, xi: &FormSystem) -> Result<Divisoriality> {
    if !purity_check(s, xi)?.is_pure() {
        return Err(Error::Hypothesis("the form system is not pure".into()));
    }
    let multiples: Vec<Option<(usize, i64)>> = xi
        .forms
        .iter()
        .map(|f| {
            let p = primitive(f);
            s.support_forms.iter().position(|sg| *sg == p).map(|j| {
                let e = f.iter().zip(&p).find(|(_, b)| **b != 0).map(|(a, b)| a / b).unwrap_or(0);
                (j, e)
            })
        })
        .collect();
    let divisorial = multiples.iter().all(|m| m.is_some_and(|(_, e)| e > 0));
    let e_sets: Vec<Vec<bool>> =
        xi.forms.iter().map(|f| s.hilbert_basis.iter().map(|h| dot(f, h) == 0).collect()).collect();
    let subset = |a: &[bool], b: &[bool]| a.iter().zip(b).all(|(x, y)| !*x || *y);
    let mut containment = None;
    'outer: for i in 0..e_sets.len() {
        for k in 0..e_sets.len() {
            if e_sets[i] != e_sets[k] && subset(&e_sets[k], &e_sets[i]) {
                containment = Some((i, k));
                break 'outer;
            }
        }
    }
    if divisorial != containment.is_none() {
        return Err(Error::Internal("the two divisoriality tests disagree".into()));
    }
    Ok(Divisoriality { divisorial, multiples, containment })
}

/// `Ok(())` if `x` is a nonnegative integer combination of `basis`, checked
/// by dynamic programming over the points `y <= x` in the order of `tau`.
pub fn is_semigroup_combination(s: &AffineSemigroup, basis: &[Vec<i64>], x: &[i64]) -> bool {
    use std::collections::HashMap;
    fn go(s: &AffineSemigroup, basis: &[Vec<i64>], x: Vec<i64>, memo: &mut HashMap<Vec<i64>, bool>) -> bool {
        if x.iter().all(|&c| c == 0) {
            return true;
        }
        if let Some(&v) = memo.get(&x) {
            return v;
        }
        let mut ok = false;
        for h in basis {
            let y: Vec<i64> = x.iter().zip(h).map(|(a, b)| a - b).collect();
            if s.contains(&y) && go(s, basis, y, memo) {
                ok = true;
                break;
            }
        }
        memo.insert(x, ok);
        ok
    }
    let mut memo = HashMap::new();
    go(s, basis, x.to_vec(), &mut memo)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn segre23() -> AffineSemigroup {
        let mut gens = Vec::new();
        for i in 0..2 {
            for j in 0..3 {
                let mut v = vec![0; 5];
                v[i] = 1;
                v[2 + j] = 1;
                gens.push(v);
            }
        }
        AffineSemigroup::from_generators(5, &gens).unwrap()
    }

    #[test]
    fn quadrant() {
        let s = AffineSemigroup::from_generators(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(s.hilbert_basis, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(s.support_forms, vec![vec![1, 0], vec![0, 1]]);
        assert!(!s.basis_changed);
    }

    #[test]
    fn quadratic_cone_normalization() {
        let s = AffineSemigroup::from_generators(2, &[vec![1, 0], vec![1, 2]]).unwrap();
        assert_eq!(s.hilbert_basis, vec![vec![1, 0], vec![1, 1], vec![1, 2]]);
        let mut forms = s.support_forms.clone();
        forms.sort();
        assert_eq!(forms, vec![vec![0, 1], vec![2, -1]]);
    }

    #[test]
    fn segre_generators_are_the_hilbert_basis() {
        let s = segre23();
        assert_eq!(s.rank, 4);
        assert_eq!(s.num_forms(), 5);
        assert_eq!(s.extreme_rays.len(), 6);
        assert_eq!(s.hilbert_basis.len(), 6);
        let mut amb: Vec<Vec<i64>> = s.hilbert_basis.iter().map(|h| s.to_ambient(h)).collect();
        amb.sort();
        let mut gens: Vec<Vec<i64>> = s.generators.iter().map(|h| s.to_ambient(h)).collect();
        gens.sort();
        assert_eq!(amb, gens);
        assert!(s.basis_changed);
    }

    #[test]
    fn segre_from_equations() {
        let s = from_equations(5, &[vec![1, 1, -1, -1, -1]], &[]).unwrap();
        assert_eq!(s.rank, 4);
        assert_eq!(s.num_forms(), 5);
        assert_eq!(s.hilbert_basis.len(), 6);
    }

    #[test]
    fn congruence_gives_the_quadratic_cone() {
        let s = from_equations(2, &[], &[(vec![1, 1], 2)]).unwrap();
        assert_eq!(s.rank, 2);
        assert_eq!(s.hilbert_basis.len(), 3);
        let amb: Vec<Vec<i64>> = s.hilbert_basis.iter().map(|h| s.to_ambient(h)).collect();
        let mut amb = amb;
        amb.sort();
        assert_eq!(amb, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
    }

    #[test]
    fn non_pointed_is_rejected() {
        let e = AffineSemigroup::from_generators(1, &[vec![1], vec![-1]]).unwrap_err();
        assert!(matches!(e, Error::NotPositive(_)));
    }

    #[test]
    fn purity_examples() {
        let s = AffineSemigroup::from_generators(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(purity_check(&s, &FormSystem::standard(&s)).unwrap().is_pure());
        let xi = FormSystem::new(&s, vec![vec![1, 0], vec![1, 1]]).unwrap();
        assert_eq!(purity_check(&s, &xi).unwrap(), Purity::MissingSupportForm { index: 1, sigma: vec![0, 1] });
        let xi = FormSystem::new(&s, vec![vec![2, 0], vec![0, 1], vec![1, 1]]).unwrap();
        assert!(purity_check(&s, &xi).unwrap().is_pure());
        let xi = FormSystem::new(&s, vec![vec![1, 0], vec![0, 1], vec![1, -1]]).unwrap();
        assert!(matches!(purity_check(&s, &xi).unwrap(), Purity::NotInDualCone { index: 2, .. }));
    }

    #[test]
    fn divisoriality_examples() {
        let s = AffineSemigroup::from_generators(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(coset_divisoriality_check(&s, &FormSystem::standard(&s)).unwrap().divisorial);
        let xi = FormSystem::new(&s, vec![vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let d = coset_divisoriality_check(&s, &xi).unwrap();
        assert!(!d.divisorial);
        assert_eq!(d.multiples[2], None);
        let xi = FormSystem::new(&s, vec![vec![2, 0], vec![0, 3]]).unwrap();
        let d = coset_divisoriality_check(&s, &xi).unwrap();
        assert!(d.divisorial);
        assert_eq!(d.multiples, vec![Some((0, 2)), Some((1, 3))]);
    }
}
