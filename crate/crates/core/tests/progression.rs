mod common;

use divclass::depth::{mu_progression, progression_analysis};
use divclass::divisorial::{class_group, class_lift, minimal_generators};
use num_bigint::BigInt;
use num_rational::BigRational;

#[test]
fn segre_mu_follows_the_binomials() {
    let s = common::segre23();
    let cl = class_group(&s).unwrap();
    let down = mu_progression(&s, &cl, &[-1], &[0], 10).unwrap();
    let up = mu_progression(&s, &cl, &[1], &[0], 10).unwrap();
    for j in 0..=10 {
        assert_eq!(down[j] as i64, common::binom(j as i64 + 2, 2), "j = {j}");
        assert_eq!(up[j], j + 1, "j = {j}");
    }
    // mu m! / j^m -> 1 for binom(j + 2, 2) and j + 1
    let p = progression_analysis(&s, &cl, &[-1], &[0], 20, 20).unwrap();
    assert_eq!(p.limits, vec![BigRational::from_integer(BigInt::from(1))]);
    let p = progression_analysis(&s, &cl, &[1], &[0], 20, 20).unwrap();
    assert_eq!(p.limits, vec![BigRational::from_integer(BigInt::from(1))]);
}

#[test]
fn mu_grows_along_free_classes() {
    for (name, s) in common::corpus() {
        let cl = class_group(&s).unwrap();
        if cl.free_rank() == 0 {
            for c in cl.torsion_elements() {
                // finitely many classes: mu stays bounded along any progression
                let t = mu_progression(&s, &cl, &c, &cl.zero(), 12).unwrap();
                assert!(t.iter().max() == t[..cl.torsion_size() as usize + 1].iter().max(), "{name}");
            }
            continue;
        }
        let mut c = cl.zero();
        let k = c.len();
        c[k - 1] = 1;
        for dir in [c.clone(), cl.neg(&c)] {
            let t = mu_progression(&s, &cl, &dir, &cl.zero(), 12).unwrap();
            assert!(t[12] > t[0], "{name} along {dir:?}: {t:?}");
            let a = class_lift(&s, &cl, &cl.scale(12, &dir)).unwrap();
            assert_eq!(minimal_generators(&s, &a).unwrap().mu, t[12]);
        }
    }
}
