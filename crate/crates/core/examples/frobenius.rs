//! Classes of R as a module over its Frobenius images, compared with the conic classes.
use divclass::conic::{conic_classes, frobenius_ladder};
use divclass::divisorial::class_group;
use divclass::semigroup::from_equations;

fn main() -> divclass::Result<()> {
    let s = from_equations(5, &[vec![1, 1, -1, -1, -1]], &[])?;
    let cl = class_group(&s)?;
    let conic = conic_classes(&s, &cl)?;
    let ladder = frobenius_ladder(&s, &cl, &conic, 8)?;
    for step in &ladder.steps {
        println!("k = {}: {:?}", step.k, step.classes);
    }
    println!("conic {:?}", conic.class_set());
    println!(
        "stable from k = {:?}, equal to the conic set from k = {:?}",
        ladder.stabilized_at, ladder.matches_conic_at
    );
    Ok(())
}
