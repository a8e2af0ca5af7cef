//! Double description: extreme rays and lineality of `{x : A x >= 0}` by
//! incremental insertion of the inequalities.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug)]
struct Ray {
    v: Vec<BigInt>,
    /// indices of processed inequalities vanishing on `v`
    zeros: Vec<bool>,
}

/// Extreme rays (modulo lineality) and a lineality basis, all primitive.
#[derive(Clone, Debug, Default)]
pub(crate) struct RayDescription {
    pub rays: Vec<Vec<BigInt>>,
    pub lineality: Vec<Vec<BigInt>>,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// `c1 * u + c2 * w`, made primitive.
fn combine(c1: &BigInt, u: &[BigInt], c2: &BigInt, w: &[BigInt]) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = u.iter().zip(w).map(|(x, y)| c1 * x + c2 * y).collect();
    make_primitive(&mut v);
    v
}

pub(crate) fn double_description(ineqs: &[Vec<BigInt>], dim: usize) -> RayDescription {
    let m = ineqs.len();
    let mut lineality: Vec<Vec<BigInt>> =
        (0..dim).map(|i| (0..dim).map(|j| BigInt::from((i == j) as i64)).collect()).collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, a) in ineqs.iter().enumerate() {
        if let Some(pos) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lineality.remove(pos);
            let mut al0 = dot(a, &l0);
            if al0.is_negative() {
                l0.iter_mut().for_each(|x| *x = -&*x);
                al0 = -al0;
            }
            for l in lineality.iter_mut() {
                let al = dot(a, l);
                if !al.is_zero() {
                    *l = combine(&al0, l, &(-al), &l0);
                }
            }
            for r in rays.iter_mut() {
                let ar = dot(a, &r.v);
                if !ar.is_zero() {
                    r.v = combine(&al0, &r.v, &(-ar), &l0);
                }
                r.zeros[k] = true;
            }
            let mut zeros = vec![true; m];
            zeros[k] = false;
            for z in zeros.iter_mut().skip(k + 1) {
                *z = false;
            }
            rays.push(Ray { v: l0, zeros });
            continue;
        }

        let vals: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let plus: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let minus: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if minus.is_empty() {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    r.zeros[k] = true;
                }
            }
            continue;
        }
        let pointed_dim = dim - lineality.len();
        let mut fresh = Vec::new();
        for &p in &plus {
            for &n in &minus {
                let common: Vec<bool> = (0..k).map(|i| rays[p].zeros[i] && rays[n].zeros[i]).collect();
                let count = common.iter().filter(|&&b| b).count();
                if count + 2 < pointed_dim {
                    continue;
                }
                let adjacent =
                    !rays.iter().enumerate().any(|(t, r)| t != p && t != n && (0..k).all(|i| !common[i] || r.zeros[i]));
                if !adjacent {
                    continue;
                }
                let v = combine(&vals[p], &rays[n].v, &(-&vals[n]), &rays[p].v);
                let mut zeros = vec![false; m];
                zeros[..k].copy_from_slice(&common);
                zeros[k] = true;
                fresh.push(Ray { v, zeros });
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            if vals[i].is_negative() {
                continue;
            }
            if vals[i].is_zero() {
                r.zeros[k] = true;
            }
            next.push(r);
        }
        next.extend(fresh);
        rays = next;
    }

    RayDescription { rays: rays.into_iter().map(|r| r.v).collect(), lineality }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn quadrant() {
        let d = double_description(&big(&[&[1, 0], &[0, 1]]), 2);
        assert!(d.lineality.is_empty());
        let mut rays = d.rays;
        rays.sort();
        assert_eq!(rays, big(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn half_plane_keeps_a_line() {
        let d = double_description(&big(&[&[1, 0]]), 2);
        assert_eq!(d.lineality.len(), 1);
        assert_eq!(d.rays.len(), 1);
    }

    #[test]
    fn zero_cone() {
        let d = double_description(&big(&[&[1], &[-1]]), 1);
        assert!(d.rays.is_empty());
        assert!(d.lineality.is_empty());
    }

    #[test]
    fn square_pyramid_has_four_rays() {
        // x+z>=0, -x+z>=0, y+z>=0, -y+z>=0
        let d = double_description(&big(&[&[1, 0, 1], &[-1, 0, 1], &[0, 1, 1], &[0, -1, 1]]), 3);
        assert!(d.lineality.is_empty());
        assert_eq!(d.rays.len(), 4);
    }
}
