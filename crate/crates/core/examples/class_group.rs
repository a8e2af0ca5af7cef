//! Divisor class groups, canonical classes and torsion orders.
use divclass::divisorial::{canonical_class, class_group, torsion_order};
use divclass::semigroup::{from_equations, AffineSemigroup};

fn main() -> divclass::Result<()> {
    let examples = [
        ("Segre(2,3)", from_equations(5, &[vec![1, 1, -1, -1, -1]], &[])?),
        ("cone over (1,0),(1,3)", AffineSemigroup::from_generators(2, &[vec![1, 0], vec![1, 3]])?),
        (
            "2x2 minors",
            AffineSemigroup::from_generators(
                4,
                &[vec![1, 0, 1, 0], vec![1, 0, 0, 1], vec![0, 1, 1, 0], vec![0, 1, 0, 1]],
            )?,
        ),
    ];
    for (name, s) in &examples {
        let cl = class_group(s)?;
        let (omega, k) = canonical_class(s, &cl)?;
        println!("{name}: Cl = {}, canonical bounds {omega:?} in class {k:?}", cl.describe());
        for c in cl.torsion_elements().iter().take(4) {
            let t = torsion_order(s, &cl, c)?;
            println!("  class {c:?}: order {:?}, {} vertex", t.order, t.vertex_count);
        }
    }
    Ok(())
}
