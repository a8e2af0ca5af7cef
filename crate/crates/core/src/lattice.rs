//! Arbitrary-precision integer matrices: Hermite and Smith normal forms,
//! lattice membership and presentations of finitely generated abelian groups.
//!
//! All routines are pure functions of their inputs and never reduce modulo a
//! prime; intermediate growth is handled by `BigInt`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense integer matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{:?}", self.to_rows())
    }
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers. All rows must have
    /// length `cols`; an empty row list gives a `0 x cols` matrix.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Dimension(format!("row {i} has length {}, expected {cols}", r.len())));
            }
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    /// Builds a matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns<R: AsRef<[i64]>>(columns: &[R], rows: usize) -> Result<Self> {
        Ok(Self::from_rows(columns, rows)?.transpose())
    }

    pub fn from_big_rows(rows: &[Vec<BigInt>], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension("ragged rows".into()));
            }
            data.extend(r.iter().cloned());
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    /// Rows converted to `i64`; fails if an entry does not fit.
    pub fn to_i64_rows(&self) -> Result<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_i64().ok_or(Error::Overflow("matrix entry"))).collect())
            .collect()
    }

    pub fn to_i64_columns(&self) -> Result<Vec<Vec<i64>>> {
        self.transpose().to_i64_rows()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} against {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = BigInt::zero();
                for (j, x) in v.iter().enumerate() {
                    acc += self.get(i, j) * x;
                }
                acc
            })
            .collect())
    }

    pub fn mul_vec_i64(&self, v: &[i64]) -> Result<Vec<BigInt>> {
        let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.mul_vec(&big)
    }

    /// Keeps the listed rows, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let rows: Vec<Vec<BigInt>> = idx.iter().map(|&i| self.row(i)).collect();
        Self::from_big_rows(&rows, self.cols).expect("consistent rows")
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        self.transpose().select_rows(idx).transpose()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += f * row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * f;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += f * col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * f;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = v;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = v;
        }
    }

    /// Replaces rows (a, b) by the unimodular combination
    /// `[[p, q], [r, s]] * [row_a; row_b]` with `ps - qr = ±1`.
    fn combine_rows(&mut self, a: usize, b: usize, p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) {
        for j in 0..self.cols {
            let x = self.data[a * self.cols + j].clone();
            let y = self.data[b * self.cols + j].clone();
            self.data[a * self.cols + j] = p * &x + q * &y;
            self.data[b * self.cols + j] = r * &x + s * &y;
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
            }
            prev = m.get(k, k).clone();
        }
        Ok(sign * m.get(n - 1, n - 1))
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let (h, _) = hermite_normal_form(self);
        (0..h.rows).filter(|&i| (0..h.cols).any(|j| !h.get(i, j).is_zero())).count()
    }

    /// Exact inverse over the rationals, `None` when singular.
    pub fn rational_inverse(&self) -> Option<Vec<Vec<BigRational>>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigRational> = self.row(i).into_iter().map(BigRational::from_integer).collect();
                row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&i| !a[i][c].is_zero())?;
            a.swap(c, p);
            let inv = a[c][c].recip();
            for x in a[c].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..n {
                if i != c && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    let pivot_row = a[c].clone();
                    for (x, y) in a[i].iter_mut().zip(pivot_row.iter()) {
                        *x = &*x - &f * y;
                    }
                }
            }
        }
        Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
    }

    /// Inverse of a unimodular matrix, `None` if the matrix is not unimodular.
    pub fn unimodular_inverse(&self) -> Option<IntMatrix> {
        let inv = self.rational_inverse()?;
        let mut out = IntMatrix::zeros(self.rows, self.cols);
        for (i, r) in inv.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                if !x.is_integer() {
                    return None;
                }
                out.set(i, j, x.to_integer());
            }
        }
        Some(out)
    }
}

/// Row-style Hermite normal form: returns `(H, U)` with `U` unimodular and
/// `U * M = H`. `H` is in row echelon form, every pivot is positive and every
/// entry above a pivot lies in `[0, pivot)`. Zero rows come last.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut r = 0;
    for j in 0..h.cols {
        if r == h.rows {
            break;
        }
        // gcd-combine everything below row r into row r
        for i in r + 1..h.rows {
            if h.get(i, j).is_zero() {
                continue;
            }
            let a = h.get(r, j).clone();
            let b = h.get(i, j).clone();
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let p = &a / &g;
            let q = &b / &g;
            // [x y; -q p] has determinant x p + y q = 1
            let nq = -q;
            h.combine_rows(r, i, &x, &y, &nq, &p);
            u.combine_rows(r, i, &x, &y, &nq, &p);
        }
        if h.get(r, j).is_zero() {
            continue;
        }
        if h.get(r, j).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        let pivot = h.get(r, j).clone();
        for i in 0..r {
            let f = -h.get(i, j).div_floor(&pivot);
            h.add_row(i, r, &f);
            u.add_row(i, r, &f);
        }
        r += 1;
    }
    (h, u)
}

/// Smith normal form: returns `(D, U, V)` with `U`, `V` unimodular and
/// `U * M * V = D` diagonal, `d_1 | d_2 | ...`, all entries non-negative and
/// zero entries last.
pub fn smith_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let n = m.rows.min(m.cols);
    for t in 0..n {
        loop {
            // smallest nonzero entry of the trailing block as pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..d.rows {
                for j in t..d.cols {
                    let x = d.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return (d, u, v);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..d.rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let f = -d.get(i, t).div_floor(d.get(t, t));
                d.add_row(i, t, &f);
                u.add_row(i, t, &f);
                if !d.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..d.cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let f = -d.get(t, j).div_floor(d.get(t, t));
                d.add_col(j, t, &f);
                v.add_col(j, t, &f);
                if !d.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: pull in an offending row and repeat
            let pivot = d.get(t, t).clone();
            let bad = (t + 1..d.rows).find(|&i| (t + 1..d.cols).any(|j| !d.get(i, j).is_multiple_of(&pivot)));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    (d, u, v)
}

fn snf_diagonal(d: &IntMatrix) -> Vec<BigInt> {
    (0..d.rows.min(d.cols)).map(|i| d.get(i, i).clone()).collect()
}

/// Some integer `x` with `M x = b`, or `None` if `b` is not in the column
/// lattice of `M`.
pub fn lattice_solve(m: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if b.len() != m.rows {
        return Err(Error::Dimension(format!("right-hand side of length {} for {} rows", b.len(), m.rows)));
    }
    let (d, u, v) = smith_normal_form(m);
    let ub = u.mul_vec(b)?;
    let diag = snf_diagonal(&d);
    let mut y = vec![BigInt::zero(); m.cols];
    for (i, c) in ub.iter().enumerate() {
        let di = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
        if di.is_zero() {
            if !c.is_zero() {
                return Ok(None);
            }
        } else {
            let (q, r) = c.div_rem(&di);
            if !r.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        }
    }
    Ok(Some(v.mul_vec(&y)?))
}

pub fn lattice_solve_i64(m: &IntMatrix, b: &[i64]) -> Result<Option<Vec<BigInt>>> {
    let big: Vec<BigInt> = b.iter().map(|&x| BigInt::from(x)).collect();
    lattice_solve(m, &big)
}

/// Presentation of `Z^s / L` as `Z/d_1 + ... + Z/d_k + Z^f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianPresentation {
    /// `d_1 | d_2 | ...`, each at least 2.
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
    /// `(k + f) x s`; torsion rows first, free rows last.
    pub projection: IntMatrix,
    /// `s x (k + f)`; lifts coordinates back to `Z^s`.
    pub section: IntMatrix,
}

impl AbelianPresentation {
    pub fn ambient_rank(&self) -> usize {
        self.projection.cols()
    }

    pub fn coordinate_count(&self) -> usize {
        self.invariant_factors.len() + self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.coordinate_count() == 0
    }

    /// Torsion coordinates are reduced into `[0, d_i)`.
    pub fn normalize(&self, coords: &[BigInt]) -> Vec<BigInt> {
        coords
            .iter()
            .enumerate()
            .map(|(i, c)| match self.invariant_factors.get(i) {
                Some(d) => c.mod_floor(d),
                None => c.clone(),
            })
            .collect()
    }

    pub fn project(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        Ok(self.normalize(&self.projection.mul_vec(v)?))
    }

    pub fn project_i64(&self, v: &[i64]) -> Result<Vec<BigInt>> {
        let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.project(&big)
    }

    pub fn lift(&self, coords: &[BigInt]) -> Result<Vec<BigInt>> {
        if coords.len() != self.coordinate_count() {
            return Err(Error::Dimension(format!(
                "{} class coordinates given, group has {}",
                coords.len(),
                self.coordinate_count()
            )));
        }
        self.section.mul_vec(coords)
    }

    /// Order of an element; `None` for infinite order.
    pub fn order(&self, coords: &[BigInt]) -> Option<BigInt> {
        let c = self.normalize(coords);
        let k = self.invariant_factors.len();
        if c[k..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut ord = BigInt::one();
        for (x, d) in c.iter().zip(&self.invariant_factors) {
            let o = d / x.gcd(d);
            ord = ord.lcm(&o);
        }
        Some(ord)
    }

    /// Flips the sign of free coordinate `i` (0-based among free coordinates).
    pub fn flip_free_coordinate(&mut self, i: usize) {
        let idx = self.invariant_factors.len() + i;
        self.projection.negate_row(idx);
        self.section.negate_col(idx);
    }
}

/// Presentation of `Z^s / colspan(L)` for an `s x k` matrix `L`.
pub fn quotient_presentation(l: &IntMatrix) -> AbelianPresentation {
    let s = l.rows;
    let (d, u, _v) = smith_normal_form(l);
    let diag = snf_diagonal(&d);
    let rank = diag.iter().filter(|x| !x.is_zero()).count();
    let u_inv = u.unimodular_inverse().expect("SNF transform is unimodular");
    let mut keep = Vec::new();
    let mut factors = Vec::new();
    for (i, x) in diag.iter().enumerate().take(rank) {
        if !x.is_one() {
            keep.push(i);
            factors.push(x.clone());
        }
    }
    keep.extend(rank..s);
    let mut projection = u.select_rows(&keep);
    for (i, dfac) in factors.iter().enumerate() {
        for j in 0..s {
            let x = projection.get(i, j).mod_floor(dfac);
            projection.set(i, j, x);
        }
    }
    let section = u_inv.select_columns(&keep);
    AbelianPresentation { invariant_factors: factors, free_rank: s - rank, projection, section }
}

/// Basis (as columns of an `n x r` matrix) of the saturated lattice
/// `span_Q(vectors) ∩ Z^n`, normalized so that its transpose is in Hermite
/// normal form. Also returns an `r x n` integer matrix `C` with `C B = I`,
/// used to read off coordinates of points in the lattice.
pub fn saturated_basis(vectors: &[Vec<i64>], n: usize) -> Result<(IntMatrix, IntMatrix)> {
    let g = IntMatrix::from_columns(vectors, n)?;
    let (d, u, _) = smith_normal_form(&g);
    let rank = snf_diagonal(&d).iter().filter(|x| !x.is_zero()).count();
    let u_inv = u.unimodular_inverse().expect("unimodular");
    let idx: Vec<usize> = (0..rank).collect();
    let b = u_inv.select_columns(&idx);
    // canonical basis: HNF of the row basis
    let (h, _) = hermite_normal_form(&b.transpose());
    let h = h.select_rows(&idx);
    let basis = h.transpose();
    // coordinates: solve B y = x through a unimodular completion
    let (_, w) = hermite_normal_form(&basis);
    // w * basis = [T; 0] with T upper triangular, invertible over Z since basis is saturated
    let top = w.mul(&basis)?.select_rows(&idx);
    let t_inv = top.unimodular_inverse().ok_or_else(|| Error::Internal("saturated basis lost unimodularity".into()))?;
    let coords = t_inv.mul(&w.select_rows(&idx))?;
    Ok((basis, coords))
}

pub fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn to_i64_vec(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter().map(|x| x.to_i64().ok_or(Error::Overflow("vector entry"))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        IntMatrix::from_rows(rows, cols).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        to_big(v)
    }

    #[test]
    fn hnf_identity_is_fixed() {
        let id = IntMatrix::identity(2);
        let (h, u) = hermite_normal_form(&id);
        assert_eq!(h, id);
        assert_eq!(u, id);
    }

    #[test]
    fn hnf_of_small_matrix() {
        let a = m(&[&[0, 1], &[2, -1]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(u.mul(&a).unwrap(), h);
        assert!(u.determinant().unwrap().abs().is_one());
        // row reduction by hand: swap, then clear above the second pivot
        assert_eq!(h, m(&[&[2, 0], &[0, 1]]));
    }

    #[test]
    fn hnf_of_zero_matrix() {
        let z = IntMatrix::zeros(2, 3);
        let (h, u) = hermite_normal_form(&z);
        assert!(h.is_zero());
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn snf_examples() {
        let (d, u, v) = smith_normal_form(&IntMatrix::identity(2));
        assert_eq!(d, IntMatrix::identity(2));
        assert_eq!(u, IntMatrix::identity(2));
        assert_eq!(v, IntMatrix::identity(2));

        let a = m(&[&[0, 1], &[2, -1]]);
        let (d, u, v) = smith_normal_form(&a);
        assert_eq!(d, m(&[&[1, 0], &[0, 2]]));
        assert_eq!(u.mul(&a).unwrap().mul(&v).unwrap(), d);

        let (d, _, _) = smith_normal_form(&m(&[&[2]]));
        assert_eq!(d, m(&[&[2]]));
    }

    #[test]
    fn snf_divisibility_needs_row_mixing() {
        let a = m(&[&[2, 0], &[0, 3]]);
        let (d, u, v) = smith_normal_form(&a);
        assert_eq!(d, m(&[&[1, 0], &[0, 6]]));
        assert_eq!(u.mul(&a).unwrap().mul(&v).unwrap(), d);
    }

    #[test]
    fn solve_examples() {
        let id = IntMatrix::identity(3);
        assert_eq!(lattice_solve(&id, &big(&[4, -1, 7])).unwrap(), Some(big(&[4, -1, 7])));

        let a = IntMatrix::from_columns(&[[0, 2], [1, -1]], 2).unwrap();
        let x = lattice_solve(&a, &big(&[1, 1])).unwrap().unwrap();
        assert_eq!(x, big(&[1, 1]));
        assert_eq!(lattice_solve(&a, &big(&[1, 0])).unwrap(), None);
        assert!(lattice_solve(&a, &big(&[1])).is_err());
    }

    #[test]
    fn quotient_examples() {
        let p = quotient_presentation(&IntMatrix::identity(2));
        assert!(p.invariant_factors.is_empty());
        assert_eq!(p.free_rank, 0);

        let p = quotient_presentation(&IntMatrix::from_columns(&[[0, 2], [1, -1]], 2).unwrap());
        assert_eq!(p.invariant_factors, big(&[2]));
        assert_eq!(p.free_rank, 0);

        let p = quotient_presentation(&IntMatrix::from_columns(&[[1, 0]], 2).unwrap());
        assert!(p.invariant_factors.is_empty());
        assert_eq!(p.free_rank, 1);
        let c = p.project_i64(&[0, 1]).unwrap();
        assert!(!c[0].is_zero());
        assert_eq!(p.project(&p.lift(&c).unwrap()).unwrap(), c);
    }

    #[test]
    fn projection_kills_exactly_the_sublattice() {
        let l = IntMatrix::from_columns(&[[2, 4, 0], [0, 6, 3]], 3).unwrap();
        let p = quotient_presentation(&l);
        for x in -4..=4 {
            for y in -4..=4 {
                for z in -4..=4 {
                    let v = big(&[x, y, z]);
                    let zero = p.project(&v).unwrap().iter().all(Zero::is_zero);
                    assert_eq!(zero, lattice_solve(&l, &v).unwrap().is_some(), "{v:?}");
                }
            }
        }
    }

    #[test]
    fn saturation_of_a_plane() {
        // (1,1,0),(1,-1,0): saturated span is the xy-plane
        let (b, c) = saturated_basis(&[vec![1, 1, 0], vec![1, -1, 0]], 3).unwrap();
        assert_eq!(b.cols(), 2);
        assert_eq!(c.mul(&b).unwrap(), IntMatrix::identity(2));
        let y = c.mul_vec_i64(&[1, 0, 0]).unwrap();
        assert_eq!(b.mul_vec(&y).unwrap(), big(&[1, 0, 0]));
    }

    #[test]
    fn determinant_matches_expansion() {
        let a = m(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        // 2*(3*-2 - 4*5) - (-1)*(1*-2 - 0) + 0 = -52 - 2 = -54
        assert_eq!(a.determinant().unwrap(), BigInt::from(-54));
    }
}
