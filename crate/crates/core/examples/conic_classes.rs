//! Conic classes, face ideals and canonical duals.
use divclass::conic::{canonical_dual_bounds, conic_classes, face_ideal_bounds};
use divclass::divisorial::class_group;
use divclass::semigroup::{from_equations, AffineSemigroup};

fn main() -> divclass::Result<()> {
    let s = from_equations(5, &[vec![1, 1, -1, -1, -1]], &[])?;
    let cl = class_group(&s)?;
    let report = conic_classes(&s, &cl)?;
    for c in &report.classes {
        let beta: Vec<String> = c.witness.iter().map(|x| x.to_string()).collect();
        let dual = canonical_dual_bounds(&s, &cl, &c.bounds)?;
        println!("class {:?}: bounds {:?}, beta ({}), dual class {:?}", c.class, c.bounds, beta.join(", "), dual.class);
    }

    let q = AffineSemigroup::from_generators(2, &[vec![1, 0], vec![1, 2]])?;
    let qcl = class_group(&q)?;
    for face in [vec![0], vec![1], vec![0, 1]] {
        let f = face_ideal_bounds(&q, &qcl, &face)?;
        println!(
            "face {:?}: q {:?} class {:?}, r {:?} class {:?}",
            f.face, f.q.bounds, f.q.class, f.r.bounds, f.r.class
        );
    }
    Ok(())
}
