//! Depth bounds, Hilbert–Samuel multiplicities, Cohen–Macaulay tests,
//! simpliciality and generator growth along progressions of classes.

use std::collections::{HashMap, HashSet};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::divisorial::{class_lift, divisor_polyhedron, minimal_generators, Class, ClassGroup};
use crate::error::{Error, Result};
use crate::lattice::{lattice_solve_i64, IntMatrix};
use crate::polyhedral::{dot, DEFAULT_FACE_CAP};
use crate::semigroup::AffineSemigroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthBounds {
    pub grade_mp: usize,
    pub lambda: usize,
    /// Facet indices whose facets meet only in `0`.
    pub grade_witness: Vec<usize>,
    /// Hilbert basis elements with pairwise disjoint supports.
    pub lambda_witness: Vec<Vec<i64>>,
}

/// `{i : sigma_i(h) > 0}`.
pub fn support(s: &AffineSemigroup, h: &[i64]) -> Vec<usize> {
    (0..s.num_forms()).filter(|&i| dot(&s.support_forms[i], h) > 0).collect()
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `grade mP` (fewest facets meeting only in `0`) and `lambda` (largest set of
/// Hilbert basis elements with pairwise disjoint supports).
pub fn depth_bounds(s: &AffineSemigroup) -> DepthBounds {
    let n = s.num_forms();
    let mut grade_witness = Vec::new();
    'size: for u in 1..=n {
        for j in subsets_of_size(n, u) {
            let meets_only_zero = s.hilbert_basis.iter().all(|h| j.iter().any(|&i| dot(&s.support_forms[i], h) > 0));
            if meets_only_zero {
                grade_witness = j;
                break 'size;
            }
        }
    }
    let supports: Vec<u64> =
        s.hilbert_basis.iter().map(|h| support(s, h).iter().fold(0u64, |m, &i| m | (1 << i))).collect();
    let mut order: Vec<usize> = (0..supports.len()).collect();
    order.sort_by_key(|&i| (supports[i].count_ones(), i));
    let mut best: Vec<usize> = Vec::new();
    packing(&supports, &order, 0, 0, &mut Vec::new(), &mut best);
    DepthBounds {
        grade_mp: grade_witness.len(),
        lambda: best.len(),
        grade_witness,
        lambda_witness: best.iter().map(|&i| s.hilbert_basis[i].clone()).collect(),
    }
}

fn packing(sets: &[u64], order: &[usize], from: usize, used: u64, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
    if cur.len() > best.len() {
        *best = cur.clone();
    }
    for k in from..order.len() {
        if cur.len() + (order.len() - k) <= best.len() {
            return;
        }
        let i = order[k];
        if sets[i] & used == 0 && sets[i] != 0 {
            cur.push(i);
            packing(sets, order, k + 1, used | sets[i], cur, best);
            cur.pop();
        }
    }
}

/// Hilbert–Samuel data of `T(a)`: `chi(n)` counts the points of `ord <= n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSamuel {
    pub e: i64,
    pub chi: Vec<u64>,
    /// The last values of the `rank`-th differences of `chi`.
    pub tail: Vec<i64>,
}

/// m-adic multiplicity of `T(a)` from the ord filtration on the window `0..=n`.
pub fn hilbert_samuel_multiplicity(s: &AffineSemigroup, a: &[i64], window: usize) -> Result<HilbertSamuel> {
    let gens = minimal_generators(s, a)?;
    let in_t = |x: &[i64]| s.support_forms.iter().zip(a).all(|(f, &ai)| dot(f, x) >= ai);
    // every point of ord <= window is reachable in at most `window` steps
    let mut reach: HashSet<Vec<i64>> = gens.points.iter().cloned().collect();
    let mut frontier: Vec<Vec<i64>> = gens.points.clone();
    for _ in 0..window {
        let mut next = Vec::new();
        for x in &frontier {
            for h in &s.hilbert_basis {
                let y: Vec<i64> = x.iter().zip(h).map(|(p, q)| p + q).collect();
                if reach.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    let mut pts: Vec<Vec<i64>> = reach.into_iter().collect();
    pts.sort_by_cached_key(|x| (dot(&s.tau, x), x.clone()));
    let cap = window + 1;
    let mut ord: HashMap<Vec<i64>, usize> = HashMap::with_capacity(pts.len());
    let mut chi = vec![0u64; window + 1];
    for x in pts {
        let mut o = 0usize;
        for h in &s.hilbert_basis {
            let y: Vec<i64> = x.iter().zip(h).map(|(p, q)| p - q).collect();
            if !in_t(&y) {
                continue;
            }
            let oy = ord.get(&y).copied().unwrap_or(cap);
            o = o.max((oy + 1).min(cap));
        }
        if o <= window {
            chi[o] += 1;
        }
        ord.insert(x, o);
    }
    for n in 1..=window {
        chi[n] += chi[n - 1];
    }
    let mut diff: Vec<i64> = chi.iter().map(|&c| c as i64).collect();
    for _ in 0..s.rank {
        diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
    }
    let tail: Vec<i64> = diff.iter().rev().take(5).rev().copied().collect();
    if tail.len() < 5 || tail.iter().any(|&x| x != tail[0]) {
        return Err(Error::NotStabilized(format!("Hilbert–Samuel differences {tail:?} with window {window}")));
    }
    Ok(HilbertSamuel { e: tail[0], chi, tail })
}

const PRIME: u64 = 2_147_483_647;
/// Seed of the random parameter systems used by the Serre test.
pub const SEED: u64 = 0x5eed_2001;

/// A homogeneous system of parameters: `rank` random combinations of the
/// monomials of degree `degree` for the grading `grading`.
#[derive(Clone, Debug)]
struct ParameterSystem {
    grading: Vec<i64>,
    degree: i64,
    elements: Vec<Vec<(Vec<i64>, u64)>>,
}

/// Points of `S` by degree, up to `max`.
struct Graded<'a> {
    s: &'a AffineSemigroup,
    grading: &'a [i64],
    levels: Vec<Vec<Vec<i64>>>,
}

impl<'a> Graded<'a> {
    fn new(s: &'a AffineSemigroup, grading: &'a [i64]) -> Self {
        Graded { s, grading, levels: vec![vec![vec![0; s.rank]]] }
    }

    fn level(&mut self, k: i64) -> &[Vec<i64>] {
        if k < 0 {
            return &[];
        }
        while self.levels.len() as i64 <= k {
            let d = self.levels.len() as i64;
            let mut set: HashSet<Vec<i64>> = HashSet::new();
            for h in &self.s.hilbert_basis {
                let gh = dot(self.grading, h);
                if gh > d {
                    continue;
                }
                for x in &self.levels[(d - gh) as usize] {
                    set.insert(x.iter().zip(h).map(|(p, q)| p + q).collect());
                }
            }
            let mut v: Vec<Vec<i64>> = set.into_iter().collect();
            v.sort();
            self.levels.push(v);
        }
        &self.levels[k as usize]
    }
}

fn parameter_system(s: &AffineSemigroup, attempt: u64) -> Result<ParameterSystem> {
    let hb = IntMatrix::from_rows(&s.hilbert_basis, s.rank)?;
    let ones = vec![1i64; s.hilbert_basis.len()];
    let grading = match lattice_solve_i64(&hb, &ones)? {
        Some(g) => g.iter().map(|x| x.to_i64().ok_or(Error::Overflow("grading"))).collect::<Result<Vec<_>>>()?,
        None => s.tau.clone(),
    };
    let degree = s.extreme_rays.iter().map(|v| dot(&grading, v)).fold(1i64, |l, d| l.lcm(&d));
    let mut graded = Graded::new(s, &grading);
    let monomials = graded.level(degree).to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + attempt);
    let elements =
        (0..s.rank).map(|_| monomials.iter().map(|m| (m.clone(), rng.gen_range(1..PRIME))).collect()).collect();
    Ok(ParameterSystem { grading, degree, elements })
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>, cols: usize) -> usize {
    let inv = |x: u64| -> u64 {
        let mut r = 1u64;
        let mut b = x % PRIME;
        let mut e = PRIME - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = ((r as u128 * b as u128) % PRIME as u128) as u64;
            }
            b = ((b as u128 * b as u128) % PRIME as u128) as u64;
            e >>= 1;
        }
        r
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let iv = inv(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = ((*x as u128 * iv as u128) % PRIME as u128) as u64;
        }
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, y) in row.iter_mut().zip(&pivot) {
                if *y != 0 {
                    *x = ((*x as u128 + (PRIME - f) as u128 * *y as u128) % PRIME as u128) as u64;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Length of `M / qM` for the parameter system `q`, summed degree by degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerreLength {
    pub length: u64,
    /// `(degree, dimension)` for the nonzero graded pieces.
    pub pieces: Vec<(i64, u64)>,
}

const MAX_DEGREE: i64 = 400;

fn serre_length(s: &AffineSemigroup, q: &ParameterSystem, gens: &[Vec<i64>]) -> Result<SerreLength> {
    let g = &q.grading;
    let w = s.hilbert_basis.iter().map(|h| dot(g, h)).max().unwrap_or(1);
    let gdeg: Vec<i64> = gens.iter().map(|x| dot(g, x)).collect();
    let kmin = *gdeg.iter().min().expect("generators");
    let kgen = *gdeg.iter().max().expect("generators");
    let mut graded = Graded::new(s, g);
    let piece = |k: i64, graded: &mut Graded| -> Vec<Vec<i64>> {
        let mut set: HashSet<Vec<i64>> = HashSet::new();
        for (x, &d) in gens.iter().zip(&gdeg) {
            for y in graded.level(k - d) {
                set.insert(x.iter().zip(y).map(|(p, q)| p + q).collect());
            }
        }
        let mut v: Vec<Vec<i64>> = set.into_iter().collect();
        v.sort();
        v
    };
    let mut pieces = Vec::new();
    let mut length = 0u64;
    let mut zeros = 0i64;
    let mut k = kmin;
    loop {
        if k > kmin + MAX_DEGREE {
            return Err(Error::NotStabilized(format!("M/qM does not vanish below degree {k}")));
        }
        let basis = piece(k, &mut graded);
        let index: HashMap<&Vec<i64>, usize> = basis.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let lower = piece(k - q.degree, &mut graded);
        let mut rows = Vec::with_capacity(lower.len() * q.elements.len());
        for m in &lower {
            for el in &q.elements {
                let mut row = vec![0u64; basis.len()];
                for (u, c) in el {
                    let y: Vec<i64> = m.iter().zip(u).map(|(p, q)| p + q).collect();
                    let j = *index.get(&y).ok_or_else(|| Error::Internal("product outside the graded piece".into()))?;
                    row[j] = (row[j] + c) % PRIME;
                }
                rows.push(row);
            }
        }
        let dim = basis.len() as u64 - rank_mod_p(rows, basis.len()) as u64;
        if dim == 0 {
            zeros += 1;
            if k >= kgen && zeros >= w {
                break;
            }
        } else {
            zeros = 0;
            length += dim;
            pieces.push((k, dim));
        }
        k += 1;
    }
    Ok(SerreLength { length, pieces })
}

/// Serre lengths `λ(R/qR)` with the parameter system that achieved it.
fn ring_length(s: &AffineSemigroup) -> Result<(ParameterSystem, SerreLength)> {
    let zero = vec![vec![0; s.rank]];
    let mut last = None;
    for attempt in 0..3 {
        let q = parameter_system(s, attempt)?;
        match serre_length(s, &q, &zero) {
            Ok(l) => return Ok((q, l)),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("attempted"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmReport {
    pub cohen_macaulay: bool,
    pub mu: usize,
    /// `λ(M/qM)` for a homogeneous system of parameters `q` of `R`.
    pub serre_length_module: u64,
    /// `λ(R/qR)`, the multiplicity of `q` on `R` and on every rank one module.
    pub serre_length_ring: u64,
    /// Hilbert–Samuel multiplicities of `M` and `R` (when a window is given).
    pub hs_module: Option<i64>,
    pub hs_ring: Option<i64>,
}

/// Cohen–Macaulay test for `T(a)` by Serre's criterion: `M` is
/// Cohen–Macaulay iff `λ(M/qM) = e(q, M) = λ(R/qR)`.
pub fn cohen_macaulay_test(s: &AffineSemigroup, a: &[i64], hs_window: Option<usize>) -> Result<CmReport> {
    let gens = minimal_generators(s, a)?;
    let (q, ring) = ring_length(s)?;
    let module = serre_length(s, &q, &gens.points)?;
    let (hs_module, hs_ring) = match hs_window {
        Some(n) => (
            Some(hilbert_samuel_multiplicity(s, a, n)?.e),
            Some(hilbert_samuel_multiplicity(s, &vec![0; s.num_forms()], n)?.e),
        ),
        None => (None, None),
    };
    Ok(CmReport {
        cohen_macaulay: module.length == ring.length,
        mu: gens.mu,
        serre_length_module: module.length,
        serre_length_ring: ring.length,
        hs_module,
        hs_ring,
    })
}

/// Serre lengths for several bound vectors sharing one parameter system.
pub fn cohen_macaulay_batch(s: &AffineSemigroup, bounds: &[Vec<i64>]) -> Result<Vec<CmReport>> {
    let (q, ring) = ring_length(s)?;
    bounds
        .par_iter()
        .map(|a| {
            let gens = minimal_generators(s, a)?;
            let module = serre_length(s, &q, &gens.points)?;
            Ok(CmReport {
                cohen_macaulay: module.length == ring.length,
                mu: gens.mu,
                serre_length_module: module.length,
                serre_length_ring: ring.length,
                hs_module: None,
                hs_ring: None,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialReport {
    pub simplicial: bool,
    pub extreme_rays: usize,
    pub rank: usize,
    pub class_group_finite: bool,
    /// CM verdicts for every class when the cone is simplicial.
    pub all_classes_cm: Option<bool>,
}

pub fn simplicial_check(s: &AffineSemigroup, cl: &ClassGroup) -> Result<SimplicialReport> {
    let simplicial = s.is_simplicial();
    let finite = cl.is_finite();
    if simplicial && !finite {
        return Err(Error::Internal("simplicial cone with infinite class group".into()));
    }
    let all_classes_cm = if simplicial {
        let bounds: Vec<Vec<i64>> = cl.torsion_elements().iter().map(|c| cl.raw_lift(c)).collect::<Result<_>>()?;
        Some(cohen_macaulay_batch(s, &bounds)?.iter().all(|r| r.cohen_macaulay))
    } else {
        None
    };
    Ok(SimplicialReport {
        simplicial,
        extreme_rays: s.extreme_rays.len(),
        rank: s.rank,
        class_group_finite: finite,
        all_classes_cm,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProgressionReport {
    pub c: Class,
    pub d: Class,
    pub mu_table: Vec<usize>,
    pub period: usize,
    pub degree: usize,
    /// `lim mu(M_{jc+d}) m! / j^m` along each residue `k mod e`.
    #[serde(with = "crate::exact")]
    pub limits: Vec<BigRational>,
    /// The constant `m`-th differences along each residue (the limits for the
    /// Veronese index `i` with `j = ie + k`).
    pub veronese_limits: Vec<i64>,
    pub inf_depth_estimate: usize,
    /// `min mu(M_{jc+d})` over `j` in `[J/2, J]`.
    pub tail_minimum: usize,
}

fn differences(v: &[i64], m: usize) -> Vec<i64> {
    let mut d = v.to_vec();
    for _ in 0..m {
        d = d.windows(2).map(|w| w[1] - w[0]).collect();
    }
    d
}

/// `mu(M_{jc+d})` for `j = 0..=jmax`.
pub fn mu_progression(s: &AffineSemigroup, cl: &ClassGroup, c: &[i64], d: &[i64], jmax: usize) -> Result<Vec<usize>> {
    (0..=jmax)
        .into_par_iter()
        .map(|j| {
            let class = cl.add(&cl.scale(j as i64, c), d);
            Ok(minimal_generators(s, &cl.raw_lift(&class)?)?.mu)
        })
        .collect()
}

/// Growth of `mu(M_{jc+d})`: period, degree, leading coefficients and the
/// inferred infimum of depths.
pub fn progression_analysis(
    s: &AffineSemigroup,
    cl: &ClassGroup,
    c: &[i64],
    d: &[i64],
    jmax: usize,
    cap: usize,
) -> Result<ProgressionReport> {
    if c.len() != cl.coordinate_count() || d.len() != cl.coordinate_count() {
        return Err(Error::Dimension("class coordinates do not match the class group".into()));
    }
    if cl.order(c).is_some() {
        return Err(Error::Hypothesis("progression direction must be non-torsion".into()));
    }
    let a = class_lift(s, cl, c)?;
    let degree = divisor_polyhedron(s, &a)?.face_lattice(cap)?.max_compact_dim;
    let mu_table = mu_progression(s, cl, c, d, jmax)?;
    let mu: Vec<i64> = mu_table.iter().map(|&x| x as i64).collect();
    let mut found = None;
    for e in 1..=(jmax / 4).max(1) {
        let window = 5.max(e);
        let mut leading = Vec::with_capacity(e);
        let mut ok = true;
        for k in 0..e {
            let sub: Vec<i64> = mu.iter().skip(k).step_by(e).copied().collect();
            let diff = differences(&sub, degree);
            if diff.len() < window {
                ok = false;
                break;
            }
            let tail = &diff[diff.len() - window..];
            if tail.iter().any(|&x| x != tail[0]) {
                ok = false;
                break;
            }
            leading.push(tail[0]);
        }
        if ok {
            found = Some((e, leading));
            break;
        }
    }
    let (period, veronese_limits) = found.ok_or_else(|| {
        Error::NotStabilized(format!(
            "no period up to {} makes the {degree}-th differences constant: {mu_table:?}",
            jmax / 4
        ))
    })?;
    if veronese_limits.iter().any(|&x| x <= 0) {
        return Err(Error::Internal(format!("non-positive leading coefficients {veronese_limits:?}")));
    }
    let em = BigRational::from_integer(num_bigint::BigInt::from(period).pow(degree as u32));
    let limits = veronese_limits.iter().map(|&x| BigRational::from_integer(x.into()) / &em).collect();
    let tail_minimum = mu_table[jmax / 2..].iter().copied().min().unwrap_or(0);
    Ok(ProgressionReport {
        c: c.to_vec(),
        d: d.to_vec(),
        mu_table,
        period,
        degree,
        limits,
        veronese_limits,
        inf_depth_estimate: s.rank - degree,
        tail_minimum,
    })
}

/// Default cap for progression face enumeration.
pub const PROGRESSION_FACE_CAP: usize = DEFAULT_FACE_CAP;
