mod common;

use divclass::lattice::{hermite_normal_form, lattice_solve_i64, quotient_presentation, smith_normal_form, IntMatrix};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = (usize, usize, Vec<Vec<i64>>)> {
    (1..=max_rows, 1..=max_cols)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(prop::collection::vec(-9i64..=9, c), r)))
}

fn is_diagonal_divisor_chain(d: &IntMatrix) -> bool {
    let mut diag = Vec::new();
    for i in 0..d.rows() {
        for j in 0..d.cols() {
            let x = d.get(i, j);
            if i != j && !x.is_zero() {
                return false;
            }
            if i == j {
                diag.push(x.clone());
            }
        }
    }
    if diag.iter().any(|x| x.is_negative()) {
        return false;
    }
    diag.windows(2).all(|w| if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_form_is_exact((r, c, rows) in matrix(4, 4)) {
        let m = IntMatrix::from_rows(&rows, c).unwrap();
        let (d, u, v) = smith_normal_form(&m);
        prop_assert_eq!(u.mul(&m).unwrap().mul(&v).unwrap(), d.clone());
        prop_assert_eq!(u.determinant().unwrap().abs(), BigInt::from(1));
        prop_assert_eq!(v.determinant().unwrap().abs(), BigInt::from(1));
        prop_assert!(is_diagonal_divisor_chain(&d));
        if r == c {
            let prod: BigInt = (0..r).map(|i| d.get(i, i).clone()).product();
            prop_assert_eq!(prod, BigInt::from(common::abs_det(&rows)));
        }
    }

    #[test]
    fn hermite_form_is_exact((_r, c, rows) in matrix(4, 4)) {
        let m = IntMatrix::from_rows(&rows, c).unwrap();
        let (h, u) = hermite_normal_form(&m);
        prop_assert_eq!(u.mul(&m).unwrap(), h.clone());
        prop_assert_eq!(u.determinant().unwrap().abs(), BigInt::from(1));
        let mut last_pivot: Option<usize> = None;
        let mut seen_zero = false;
        for i in 0..h.rows() {
            let p = (0..h.cols()).find(|&j| !h.get(i, j).is_zero());
            match p {
                None => seen_zero = true,
                Some(j) => {
                    prop_assert!(!seen_zero, "zero rows come last");
                    prop_assert!(last_pivot.is_none_or(|l| j > l));
                    prop_assert!(h.get(i, j).is_positive());
                    for k in 0..i {
                        prop_assert!(!h.get(k, j).is_negative() && h.get(k, j) < h.get(i, j));
                    }
                    last_pivot = Some(j);
                }
            }
        }
    }

    #[test]
    fn lattice_solve_finds_images((_r, c, rows) in matrix(4, 3), x in prop::collection::vec(-5i64..=5, 3)) {
        let m = IntMatrix::from_rows(&rows, c).unwrap();
        let x = &x[..c];
        let b: Vec<i64> = rows.iter().map(|row| common::dot(row, x)).collect();
        let y = lattice_solve_i64(&m, &b).unwrap().expect("b is in the lattice");
        let back = m.mul_vec(&y).unwrap();
        prop_assert_eq!(back, b.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>());
    }

    #[test]
    fn quotient_projection_kills_the_lattice((r, c, rows) in matrix(4, 3), y in prop::collection::vec(-5i64..=5, 3), v in prop::collection::vec(-7i64..=7, 4)) {
        let m = IntMatrix::from_rows(&rows, c).unwrap();
        let p = quotient_presentation(&m);
        let image: Vec<i64> = rows.iter().map(|row| common::dot(row, &y[..c])).collect();
        let zero = p.project_i64(&image).unwrap();
        prop_assert!(zero.iter().all(|z| z.is_zero()));
        let v = &v[..r];
        let shifted: Vec<i64> = v.iter().zip(&image).map(|(a, b)| a + b).collect();
        prop_assert_eq!(p.project_i64(v).unwrap(), p.project_i64(&shifted).unwrap());
        let lifted = p.lift(&p.project_i64(v).unwrap()).unwrap();
        let lifted: Vec<i64> = lifted.iter().map(|x| i64::try_from(x).unwrap()).collect();
        prop_assert_eq!(p.project_i64(&lifted).unwrap(), p.project_i64(v).unwrap());
    }
}

#[test]
fn quotient_orders() {
    // Z^2 / <(2, 0), (0, 3)> = Z/6
    let m = IntMatrix::from_rows(&[[2, 0], [0, 3]], 2).unwrap();
    let p = quotient_presentation(&m);
    assert_eq!(p.invariant_factors, vec![BigInt::from(6)]);
    assert_eq!(p.free_rank, 0);
    let m = IntMatrix::from_rows(&[[1], [1], [-1], [-1], [-1]], 1).unwrap();
    let p = quotient_presentation(&m);
    assert!(p.invariant_factors.is_empty());
    assert_eq!(p.free_rank, 4);
}
