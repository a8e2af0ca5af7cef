//! Convex ideals for a general form system: effective bounds, isomorphism,
//! intersections and classes with few generators.
use divclass::semigroup::{from_equations, AffineSemigroup, FormSystem};
use divclass::xiconvex::{eff_bounds, enumerate_small_mu, intersect_modules, xi_iso_test};

fn main() -> divclass::Result<()> {
    let s = AffineSemigroup::from_inequalities(2, &[vec![0, 1], vec![2, -1]])?;
    let xi = FormSystem::new(&s, vec![vec![0, 1], vec![2, -1], vec![2, 0]])?;
    let t = eff_bounds(&s, &xi, &[0, 0, 1])?;
    println!("eff {:?}, generators {:?}", t.eff, t.generators.points);
    let iso = xi_iso_test(&s, &xi, &[1, 1, 3], &[0, 0, 1])?;
    println!("isomorphic {} via {:?}", iso.isomorphic, iso.witness);

    let i = intersect_modules(2, &s.support_forms, &[1, 0], &[vec![1, 0], vec![0, 1]], &[1, 1])?;
    println!("intersection: {:?}", i.generators.points);

    let segre = from_equations(5, &[vec![1, 1, -1, -1, -1]], &[])?;
    let e = enumerate_small_mu(&segre, &FormSystem::standard(&segre), 4, 10)?;
    for c in &e.classes {
        println!("class {:?}: mu {}", c.class, c.mu);
    }
    println!("shell minimum {:?}: {}", e.shell_min_mu, e.status);
    Ok(())
}
