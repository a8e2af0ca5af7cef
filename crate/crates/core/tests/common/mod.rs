//! Shared corpus and brute-force oracles. Nothing here calls the library's
//! Hilbert basis, LP or normal form code.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use divclass::semigroup::{from_equations, AffineSemigroup};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn segre(m: usize, n: usize) -> AffineSemigroup {
    let mut gens = Vec::new();
    for i in 0..m {
        for j in 0..n {
            let mut v = vec![0; m + n];
            v[i] = 1;
            v[m + j] = 1;
            gens.push(v);
        }
    }
    AffineSemigroup::from_generators(m + n, &gens).unwrap()
}

pub fn segre23() -> AffineSemigroup {
    segre(2, 3)
}

pub fn quadratic() -> AffineSemigroup {
    AffineSemigroup::from_inequalities(2, &[vec![0, 1], vec![2, -1]]).unwrap()
}

pub fn quadrant(r: usize) -> AffineSemigroup {
    let forms: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| (i == j) as i64).collect()).collect();
    AffineSemigroup::from_inequalities(r, &forms).unwrap()
}

/// Cone over `(1,0), (1,3)`: class group `Z/3`.
pub fn cyclic3() -> AffineSemigroup {
    AffineSemigroup::from_generators(2, &[vec![1, 0], vec![1, 3]]).unwrap()
}

/// Simplicial rank 3 cone with class group `Z/2 + Z/2`.
pub fn klein() -> AffineSemigroup {
    from_equations(3, &[], &[(vec![1, 1, 0], 2), (vec![0, 1, 1], 2)]).unwrap()
}

pub fn pyramid() -> AffineSemigroup {
    AffineSemigroup::from_generators(3, &[vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]]).unwrap()
}

pub fn hexagon() -> AffineSemigroup {
    let g = [[1, 0, 1], [1, 1, 1], [0, 1, 1], [-1, 0, 1], [-1, -1, 1], [0, -1, 1]];
    AffineSemigroup::from_generators(3, &g.iter().map(|v| v.to_vec()).collect::<Vec<_>>()).unwrap()
}

/// `K[U^2, UV, V^2, XW, YW, XZ, YZ]`.
pub fn mixed() -> AffineSemigroup {
    from_equations(6, &[vec![0, 0, 1, 1, -1, -1]], &[(vec![1, 1, 0, 0, 0, 0], 2)]).unwrap()
}

pub fn corpus() -> Vec<(&'static str, AffineSemigroup)> {
    vec![
        ("quadrant2", quadrant(2)),
        ("quadrant3", quadrant(3)),
        ("quadratic", quadratic()),
        ("cyclic3", cyclic3()),
        ("klein", klein()),
        ("pyramid", pyramid()),
        ("hexagon", hexagon()),
        ("segre22", segre(2, 2)),
        ("segre23", segre23()),
        ("mixed", mixed()),
    ]
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Gaussian elimination over `Q`; `None` unless the square system is regular.
pub fn solve(rows: &[Vec<i64>], rhs: &[i64]) -> Option<Vec<BigRational>> {
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> =
        rows.iter().zip(rhs).map(|(r, &b)| r.iter().map(|&x| q(x)).chain(std::iter::once(q(b))).collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let inv = BigRational::one() / m[c][c].clone();
        for x in m[c].iter_mut() {
            *x *= inv.clone();
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let v = m[c][j].clone() * f.clone();
                    m[i][j] -= v;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Integer bounding box of the polytope `{lo_i <= f_i(x) <= hi_i}` from its
/// vertices, found by solving every square subsystem of tight constraints.
pub fn bounding_box(forms: &[Vec<i64>], lo: &[i64], hi: &[i64]) -> Option<Vec<(i64, i64)>> {
    let r = forms[0].len();
    let mut rows = Vec::new();
    for (i, f) in forms.iter().enumerate() {
        rows.push((f.clone(), lo[i]));
        rows.push((f.clone(), hi[i]));
    }
    let mut boxes: Option<Vec<(BigRational, BigRational)>> = None;
    for sub in subsets(rows.len(), r) {
        let a: Vec<Vec<i64>> = sub.iter().map(|&i| rows[i].0.clone()).collect();
        let b: Vec<i64> = sub.iter().map(|&i| rows[i].1).collect();
        let Some(x) = solve(&a, &b) else { continue };
        let ok = forms.iter().enumerate().all(|(i, f)| {
            let v: BigRational = f.iter().zip(&x).map(|(c, xi)| q(*c) * xi).sum();
            v >= q(lo[i]) && v <= q(hi[i])
        });
        if !ok {
            continue;
        }
        boxes = Some(match boxes {
            None => x.iter().map(|v| (v.clone(), v.clone())).collect(),
            Some(bx) => bx
                .into_iter()
                .zip(&x)
                .map(|((l, h), v)| (if v < &l { v.clone() } else { l }, if v > &h { v.clone() } else { h }))
                .collect(),
        });
    }
    boxes.map(|bx| {
        bx.into_iter()
            .map(|(l, h)| (l.floor().to_integer().to_i64().unwrap(), h.ceil().to_integer().to_i64().unwrap()))
            .collect()
    })
}

/// Lattice points of `{lo_i <= f_i(x) <= hi_i}`; the forms must define a
/// pointed full-dimensional cone so the set is bounded.
pub fn lattice_points(forms: &[Vec<i64>], lo: &[i64], hi: &[i64]) -> Vec<Vec<i64>> {
    let Some(bx) = bounding_box(forms, lo, hi) else { return Vec::new() };
    let mut pts: Vec<Vec<i64>> = vec![vec![]];
    for (l, h) in bx {
        pts = pts.into_iter().flat_map(|p| (l..=h).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    pts.retain(|p| forms.iter().enumerate().all(|(i, f)| (lo[i]..=hi[i]).contains(&dot(f, p))));
    pts
}

/// Points of `T = {f >= a}` that are minimal for the order `x >= y iff
/// f(x - y) >= 0`, among the points with `f <= a + slack`. Every minimal
/// point of `T` with `f(x) <= a + slack` is found.
pub fn brute_minimal_points(forms: &[Vec<i64>], a: &[i64], slack: i64) -> Vec<Vec<i64>> {
    let hi: Vec<i64> = a.iter().map(|x| x + slack).collect();
    let pts = lattice_points(forms, a, &hi);
    let vals: Vec<Vec<i64>> = pts.iter().map(|p| forms.iter().map(|f| dot(f, p)).collect()).collect();
    let mut out: Vec<Vec<i64>> = (0..pts.len())
        .filter(|&i| !(0..pts.len()).any(|j| j != i && vals[j].iter().zip(&vals[i]).all(|(y, x)| y <= x)))
        .map(|i| pts[i].clone())
        .collect();
    out.sort();
    out
}

/// Irreducible nonzero lattice points of `{f >= 0}` with `sum f <= bound`.
pub fn brute_hilbert_basis(forms: &[Vec<i64>], bound: i64) -> Vec<Vec<i64>> {
    let lo = vec![0; forms.len()];
    let hi = vec![bound; forms.len()];
    let tau = |p: &[i64]| forms.iter().map(|f| dot(f, p)).sum::<i64>();
    let pts: Vec<Vec<i64>> = lattice_points(forms, &lo, &hi).into_iter().filter(|p| tau(p) <= bound).collect();
    let vals: Vec<Vec<i64>> = pts.iter().map(|p| forms.iter().map(|f| dot(f, p)).collect()).collect();
    let zero = |v: &[i64]| v.iter().all(|&x| x == 0);
    let mut out: Vec<Vec<i64>> = (0..pts.len())
        .filter(|&i| !zero(&vals[i]))
        .filter(|&i| {
            !(0..pts.len()).any(|j| j != i && !zero(&vals[j]) && vals[j].iter().zip(&vals[i]).all(|(y, x)| y <= x))
        })
        .map(|i| pts[i].clone())
        .collect();
    out.sort();
    out
}

/// Whether `x` is a nonnegative integer combination of `basis`, by search.
pub fn in_monoid(basis: &[Vec<i64>], forms: &[Vec<i64>], x: &[i64]) -> bool {
    fn go(
        basis: &[Vec<i64>],
        forms: &[Vec<i64>],
        x: &[i64],
        from: usize,
        memo: &mut std::collections::HashSet<(Vec<i64>, usize)>,
    ) -> bool {
        if x.iter().all(|&v| v == 0) {
            return true;
        }
        if forms.iter().any(|f| dot(f, x) < 0) || !memo.insert((x.to_vec(), from)) {
            return false;
        }
        (from..basis.len()).any(|k| {
            let y: Vec<i64> = x.iter().zip(&basis[k]).map(|(a, b)| a - b).collect();
            go(basis, forms, &y, k, memo)
        })
    }
    go(basis, forms, x, 0, &mut Default::default())
}

/// Number of lattice points of `T(a)` with `f(x) <= a + n` componentwise.
pub fn count_box(forms: &[Vec<i64>], a: &[i64], n: i64) -> usize {
    let hi: Vec<i64> = a.iter().map(|x| x + n).collect();
    lattice_points(forms, a, &hi).len()
}

pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn abs_det(rows: &[Vec<i64>]) -> i64 {
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else { return 0 };
        if p != c {
            m.swap(c, p);
            det = -det;
        }
        det *= m[c][c].clone();
        for i in c + 1..n {
            let f = m[i][c].clone() / m[c][c].clone();
            for j in c..n {
                let v = m[c][j].clone() * f.clone();
                m[i][j] -= v;
            }
        }
    }
    det.abs().to_integer().to_i64().unwrap()
}

/// Vertices of `{f_i(x) >= b_i}` by solving every square subsystem.
pub fn oracle_vertices(forms: &[Vec<i64>], b: &[i64]) -> BTreeSet<Vec<BigRational>> {
    let r = forms[0].len();
    let mut out = BTreeSet::new();
    let idx: Vec<usize> = (0..forms.len()).collect();
    for sub in combinations(&idx, r) {
        let a: Vec<Vec<i64>> = sub.iter().map(|&i| forms[i].clone()).collect();
        let rhs: Vec<i64> = sub.iter().map(|&i| b[i]).collect();
        if let Some(x) = solve(&a, &rhs) {
            let feasible = forms.iter().zip(b).all(|(f, &bi)| {
                let v: BigRational = f.iter().zip(&x).map(|(c, xi)| BigRational::from_integer((*c).into()) * xi).sum();
                v >= BigRational::from_integer(bi.into())
            });
            if feasible {
                out.insert(x);
            }
        }
    }
    out
}

pub fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

fn on_facets(s: &AffineSemigroup, ray: &[i64], facets: u64) -> bool {
    (0..s.num_forms()).filter(|i| facets >> i & 1 == 1).all(|i| dot(&s.support_forms[i], ray) == 0)
}

/// Fewest facets whose intersection is `{0}`: no extreme ray lies on all of them.
pub fn literal_grade(s: &AffineSemigroup) -> usize {
    let n = s.num_forms();
    (1u64..1 << n)
        .filter(|&m| s.extreme_rays.iter().all(|r| !on_facets(s, r, m)))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

/// Most pairwise disjoint facet subsets `F_i` such that the facets outside
/// `F_i` still meet in a nonzero point.
pub fn literal_lambda(s: &AffineSemigroup) -> usize {
    let n = s.num_forms();
    let full = (1u64 << n) - 1;
    let good: Vec<u64> = (1u64..=full).filter(|&m| s.extreme_rays.iter().any(|r| on_facets(s, r, full & !m))).collect();
    fn best(good: &[u64], from: usize, used: u64) -> usize {
        let mut top = 0;
        for k in from..good.len() {
            if good[k] & used == 0 {
                top = top.max(1 + best(good, k + 1, used | good[k]));
            }
        }
        top
    }
    // minimal sets suffice since the condition is closed under enlarging F_i
    let minimal: Vec<u64> = good.iter().copied().filter(|&m| !good.iter().any(|&g| g != m && g & m == g)).collect();
    best(&minimal, 0, 0)
}
