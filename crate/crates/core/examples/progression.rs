//! Growth of the number of generators along arithmetic progressions of classes.
use divclass::depth::progression_analysis;
use divclass::divisorial::class_group;
use divclass::semigroup::{from_equations, AffineSemigroup};

fn unit(j: usize) -> Vec<i64> {
    (0..6).map(|i| (i == j) as i64).collect()
}

fn main() -> divclass::Result<()> {
    let segre = from_equations(5, &[vec![1, 1, -1, -1, -1]], &[])?;
    let cl = class_group(&segre)?;
    for c in [1, -1] {
        let p = progression_analysis(&segre, &cl, &[c], &[0], 20, 20)?;
        println!("Segre, c = {c}: mu {:?}", &p.mu_table[..8]);
        println!(
            "  degree {}, period {}, limits {:?}, inf depth {}",
            p.degree,
            p.period,
            p.limits.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            p.inf_depth_estimate
        );
    }

    let gens = [
        [2, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0],
        [0, 2, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 1],
        [0, 0, 0, 1, 0, 1],
        [0, 0, 1, 0, 1, 0],
        [0, 0, 0, 1, 1, 0],
    ];
    let gens: Vec<Vec<i64>> = gens.iter().map(|g| g.to_vec()).collect();
    let s = AffineSemigroup::from_generators_in_group(6, &gens)?;
    let cl = class_group(&s)?;
    // the coset module containing UX: support form j is the pullback of coordinate idx[j]
    let idx: Vec<usize> = s
        .support_forms
        .iter()
        .map(|f| (0..6).find(|&j| s.pull_form(&unit(j)).as_ref() == Ok(f)).expect("coordinate form"))
        .collect();
    let a: Vec<i64> = idx.iter().map(|&j| if j == 0 || j == 2 { -1 } else { 0 }).collect();
    let c = cl.class_of_bounds(&a)?;
    let p = progression_analysis(&s, &cl, &c, &cl.zero(), 20, 20)?;
    println!("Cl = {}, c = {c:?}: mu {:?}", cl.describe(), &p.mu_table[..8]);
    println!(
        "  period {}, degree {}, limits {:?}",
        p.period,
        p.degree,
        p.limits.iter().map(|l| l.to_string()).collect::<Vec<_>>()
    );
    Ok(())
}
