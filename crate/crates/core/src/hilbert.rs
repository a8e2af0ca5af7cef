//! Hilbert bases of pointed rational cones by the primal method: pulling
//! triangulation, fundamental parallelepiped enumeration, global reduction.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{saturated_basis, smith_normal_form, IntMatrix};
use crate::polyhedral::{dot, dualize_cone, rational_rank, ConeInput};

/// Optional grading with a degree bound: only Hilbert basis elements `h`
/// with `grading(h) <= max_degree` are produced. The grading must be
/// nonnegative on the cone.
#[derive(Clone, Debug)]
pub struct DegreeBound {
    pub grading: Vec<i64>,
    pub max_degree: i64,
}

pub(crate) fn rank_i64(rows: &[&Vec<i64>], n: usize) -> usize {
    let q: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    rational_rank(q, n)
}

/// Pulling triangulation of a full-dimensional pointed cone. Returns the
/// maximal simplices as sets of indices into `rays`.
pub fn pulling_triangulation(rays: &[Vec<i64>], forms: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let d = rays.first().map_or(0, |r| r.len());
    let all: Vec<usize> = (0..rays.len()).collect();
    let mut out = Vec::new();
    triangulate_face(rays, forms, &all, d, &mut out);
    out
}

fn triangulate_face(rays: &[Vec<i64>], forms: &[Vec<i64>], face: &[usize], dim: usize, out: &mut Vec<Vec<usize>>) {
    if face.len() == dim {
        out.push(face.to_vec());
        return;
    }
    let n = rays[0].len();
    let v0 = face[0];
    let mut facets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for f in forms {
        if dot(f, &rays[v0]) == 0 {
            continue;
        }
        let g: Vec<usize> = face.iter().copied().filter(|&j| dot(f, &rays[j]) == 0).collect();
        if g.len() + 1 < dim || facets.contains(&g) {
            continue;
        }
        let rows: Vec<&Vec<i64>> = g.iter().map(|&j| &rays[j]).collect();
        if rank_i64(&rows, n) == dim - 1 {
            facets.insert(g);
        }
    }
    for g in facets {
        let mut sub = Vec::new();
        triangulate_face(rays, forms, &g, dim - 1, &mut sub);
        for mut s in sub {
            s.insert(0, v0);
            out.push(s);
        }
    }
}

/// Lattice points of the half-open parallelepiped `{sum l_i v_i : 0 <= l_i < 1}`
/// spanned by the (linearly independent) columns `simplex`, restricted to
/// degree at most the bound.
pub fn parallelepiped_points(simplex: &[Vec<i64>], bound: Option<&DegreeBound>) -> Result<Vec<Vec<i64>>> {
    let d = simplex.len();
    let g = IntMatrix::from_columns(simplex, d)?;
    let det = g.determinant()?;
    if det.is_zero() {
        return Err(Error::Internal("degenerate simplex".into()));
    }
    let vol = det.abs().to_i128().ok_or(Error::Overflow("simplex volume"))?;
    // adj = |det| * G^{-1}
    let inv = g.rational_inverse().expect("nonsingular");
    let adj: Vec<Vec<i128>> = inv
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    (x * BigRational::from_integer(det.abs())).to_integer().to_i128().ok_or(Error::Overflow("adjugate"))
                })
                .collect::<Result<Vec<i128>>>()
        })
        .collect::<Result<_>>()?;
    let numerators = |x: &[BigInt]| -> Result<Vec<i128>> {
        adj.iter()
            .map(|row| {
                let mut acc = BigInt::zero();
                for (a, b) in row.iter().zip(x) {
                    acc += BigInt::from(*a) * b;
                }
                let m = acc.mod_floor_i128(vol);
                Ok(m)
            })
            .collect()
    };
    let (dm, u, _) = smith_normal_form(&g);
    let u_inv = u.unimodular_inverse().expect("unimodular");
    let mut gens: Vec<(i128, Vec<i128>)> = Vec::new();
    for i in 0..d {
        let di = dm.get(i, i).to_i128().ok_or(Error::Overflow("group order"))?;
        if di > 1 {
            gens.push((di, numerators(&u_inv.column(i))?));
        }
    }
    let degs: Option<Vec<i128>> = bound.map(|b| simplex.iter().map(|v| dot(&b.grading, v) as i128).collect());
    let max_deg = bound.map(|b| b.max_degree as i128);

    let mut out = Vec::new();
    let mut counter = vec![0i128; gens.len()];
    loop {
        let mut nums = vec![0i128; d];
        for ((_, g), &c) in gens.iter().zip(&counter) {
            for (n, x) in nums.iter_mut().zip(g) {
                *n = (*n + c * x) % vol;
            }
        }
        let keep = match (&degs, max_deg) {
            (Some(dg), Some(md)) => {
                let total: i128 = nums.iter().zip(dg).map(|(n, g)| n * g).sum();
                total <= md * vol
            }
            _ => true,
        };
        if keep {
            let mut p = vec![0i64; d];
            for (j, pj) in p.iter_mut().enumerate() {
                let mut acc: i128 = 0;
                for (n, v) in nums.iter().zip(simplex) {
                    acc = acc
                        .checked_add(n.checked_mul(v[j] as i128).ok_or(Error::Overflow("parallelepiped"))?)
                        .ok_or(Error::Overflow("parallelepiped"))?;
                }
                debug_assert_eq!(acc % vol, 0);
                *pj = i64::try_from(acc / vol).map_err(|_| Error::Overflow("parallelepiped"))?;
            }
            out.push(p);
        }
        // advance the mixed-radix counter
        let mut k = 0;
        loop {
            if k == gens.len() {
                return Ok(out);
            }
            counter[k] += 1;
            if counter[k] < gens[k].0 {
                break;
            }
            counter[k] = 0;
            k += 1;
        }
    }
}

trait ModFloor {
    fn mod_floor_i128(&self, m: i128) -> i128;
}

impl ModFloor for BigInt {
    fn mod_floor_i128(&self, m: i128) -> i128 {
        let r = self % BigInt::from(m);
        let r = r.to_i128().expect("reduced");
        if r < 0 {
            r + m
        } else {
            r
        }
    }
}

/// Hilbert basis of a full-dimensional pointed cone given by its extreme
/// rays and (possibly redundant) inequalities.
fn full_dimensional_basis(rays: &[Vec<i64>], forms: &[Vec<i64>], bound: Option<&DegreeBound>) -> Result<Vec<Vec<i64>>> {
    let simplices = pulling_triangulation(rays, forms);
    let mut cand: BTreeSet<Vec<i64>> = BTreeSet::new();
    for r in rays {
        if bound.is_none_or(|b| dot(&b.grading, r) <= b.max_degree) {
            cand.insert(r.clone());
        }
    }
    for s in &simplices {
        let cols: Vec<Vec<i64>> = s.iter().map(|&i| rays[i].clone()).collect();
        for p in parallelepiped_points(&cols, bound)? {
            if p.iter().any(|&x| x != 0) {
                cand.insert(p);
            }
        }
    }
    Ok(reduce(cand.into_iter().collect(), forms))
}

/// Drops every candidate `x` for which some other candidate `y` has
/// `x - y` in the cone.
pub fn reduce(cands: Vec<Vec<i64>>, forms: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let vals: Vec<Vec<i64>> = cands.iter().map(|c| forms.iter().map(|f| dot(f, c)).collect()).collect();
    let weight: Vec<i64> = vals.iter().map(|v| v.iter().sum()).collect();
    let mut order: Vec<usize> = (0..cands.len()).collect();
    order.sort_by_key(|&i| weight[i]);
    let mut kept: Vec<usize> = Vec::new();
    for &i in &order {
        let reducible =
            kept.iter().any(|&j| weight[j] < weight[i] && vals[i].iter().zip(&vals[j]).all(|(a, b)| a >= b));
        if !reducible {
            kept.push(i);
        }
    }
    let mut out: Vec<Vec<i64>> = kept.into_iter().map(|i| cands[i].clone()).collect();
    out.sort();
    out
}

/// Hilbert basis of the monoid `{x in Z^n : f(x) >= 0 for f in forms}`,
/// which must be a pointed cone (not necessarily full-dimensional).
/// The result is sorted lexicographically.
pub fn hilbert_basis(n: usize, forms: &[Vec<i64>], bound: Option<&DegreeBound>) -> Result<Vec<Vec<i64>>> {
    let cone = dualize_cone(n, &ConeInput::Inequalities(forms.to_vec()))?;
    if !cone.is_pointed() {
        return Err(Error::NotPositive("cone contains a line".into()));
    }
    if cone.generators.is_empty() {
        return Ok(Vec::new());
    }
    if cone.is_full_dimensional() {
        return full_dimensional_basis(&cone.generators, &cone.inequalities, bound);
    }
    let (basis, coords) = saturated_basis(&cone.generators, n)?;
    let k = basis.cols();
    let basis_cols = basis.to_i64_columns()?;
    let to_local = |v: &Vec<i64>| -> Result<Vec<i64>> {
        coords.mul_vec_i64(v)?.iter().map(|x| x.to_i64().ok_or(Error::Overflow("coordinates"))).collect()
    };
    let pull = |f: &Vec<i64>| -> Vec<i64> { basis_cols.iter().map(|b| dot(f, b)).collect() };
    let rays: Vec<Vec<i64>> = cone.generators.iter().map(to_local).collect::<Result<_>>()?;
    let local_cone = dualize_cone(k, &ConeInput::Generators(rays))?;
    let local_bound = bound.map(|b| DegreeBound { grading: pull(&b.grading), max_degree: b.max_degree });
    let local = full_dimensional_basis(&local_cone.generators, &local_cone.inequalities, local_bound.as_ref())?;
    let mut out: Vec<Vec<i64>> =
        local.iter().map(|y| (0..n).map(|i| basis_cols.iter().zip(y).map(|(b, c)| b[i] * c).sum()).collect()).collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadrant() {
        assert_eq!(hilbert_basis(2, &[vec![1, 0], vec![0, 1]], None).unwrap(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn quadratic_cone() {
        let hb = hilbert_basis(2, &[vec![0, 1], vec![2, -1]], None).unwrap();
        assert_eq!(hb, vec![vec![1, 0], vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn wide_cone() {
        // y >= 0, 5x - 3y >= 0: rays (1,0), (3,5)
        let hb = hilbert_basis(2, &[vec![0, 1], vec![5, -3]], None).unwrap();
        assert_eq!(hb, vec![vec![1, 0], vec![1, 1], vec![2, 3], vec![3, 5]]);
    }

    #[test]
    fn parallelepiped_of_index_two() {
        let pts = parallelepiped_points(&[vec![1, 0], vec![1, 2]], None).unwrap();
        let mut pts = pts;
        pts.sort();
        assert_eq!(pts, vec![vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn lower_dimensional_cone() {
        // the quadratic cone placed in the plane z = x + y of Z^3
        let forms = vec![vec![0, 1, 0], vec![2, -1, 0], vec![1, 1, -1], vec![-1, -1, 1]];
        let hb = hilbert_basis(3, &forms, None).unwrap();
        assert_eq!(hb, vec![vec![1, 0, 1], vec![1, 1, 2], vec![1, 2, 3]]);
    }

    #[test]
    fn degree_bound() {
        // cone over the segment [0,2] at height 1 plus the ray (1,0)
        let forms = vec![vec![0, 1], vec![1, 0]];
        let b = DegreeBound { grading: vec![0, 1], max_degree: 0 };
        assert_eq!(hilbert_basis(2, &forms, Some(&b)).unwrap(), vec![vec![1, 0]]);
    }

    #[test]
    fn square_pyramid_triangulates_into_two() {
        let rays = vec![vec![1, 0, 1], vec![0, 1, 1], vec![-1, 0, 1], vec![0, -1, 1]];
        let forms = vec![vec![1, 1, 1], vec![1, -1, 1], vec![-1, 1, 1], vec![-1, -1, 1]];
        assert_eq!(pulling_triangulation(&rays, &forms).len(), 2);
        let cone = dualize_cone(3, &ConeInput::Generators(rays)).unwrap();
        let hb = hilbert_basis(3, &cone.inequalities, None).unwrap();
        assert_eq!(hb.len(), 5);
    }
}
