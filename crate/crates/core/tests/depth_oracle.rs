mod common;

use divclass::depth::{depth_bounds, simplicial_check};
use divclass::divisorial::class_group;
use divclass::semigroup::AffineSemigroup;
use proptest::prelude::*;

#[test]
fn corpus_against_the_definitions() {
    for (name, s) in common::corpus() {
        assert!(s.num_forms() <= 8);
        let d = depth_bounds(&s);
        assert_eq!(d.grade_mp, common::literal_grade(&s), "{name}");
        assert_eq!(d.lambda, common::literal_lambda(&s), "{name}");
        assert!(d.lambda <= d.grade_mp, "{name}");
        if s.rank >= 2 {
            assert!(2 <= d.grade_mp && d.grade_mp <= s.rank, "{name}");
        }
        let cl = class_group(&s).unwrap();
        let simp = simplicial_check(&s, &cl).unwrap();
        assert_eq!(simp.simplicial, d.grade_mp == s.rank, "{name}");
        assert_eq!(simp.simplicial, simp.class_group_finite, "{name}");
    }
}

#[test]
fn known_values() {
    for r in 1..=4 {
        let d = depth_bounds(&common::quadrant(r));
        assert_eq!((d.grade_mp, d.lambda), (r, r));
    }
    let d = depth_bounds(&common::quadratic());
    assert_eq!((d.grade_mp, d.lambda), (2, 2));
    let d = depth_bounds(&common::segre23());
    assert_eq!((d.grade_mp, d.lambda), (2, 2));
    // witnesses: facets meeting only in 0 and disjoint supports
    let s = common::segre23();
    for h in &s.hilbert_basis {
        assert!(d.grade_witness.iter().any(|&i| common::dot(&s.support_forms[i], h) > 0));
    }
    let sup: Vec<Vec<usize>> = d.lambda_witness.iter().map(|h| divclass::depth::support(&s, h)).collect();
    assert!(sup[0].iter().all(|i| !sup[1].contains(i)));
}

fn cone_from(gens: &[Vec<i64>]) -> Option<AffineSemigroup> {
    AffineSemigroup::from_generators(gens[0].len(), gens).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn random_cones_against_the_definitions(g in prop::collection::vec(prop::collection::vec(0i64..=3, 3), 3..=6)) {
        prop_assume!(g.iter().all(|v| v.iter().any(|&x| x != 0)));
        let s = match cone_from(&g) { Some(s) => s, None => return Ok(()) };
        prop_assume!(s.rank == 3 && s.num_forms() <= 8);
        let d = depth_bounds(&s);
        prop_assert_eq!(d.grade_mp, common::literal_grade(&s));
        prop_assert_eq!(d.lambda, common::literal_lambda(&s));
        prop_assert!(d.lambda <= d.grade_mp);
    }
}
