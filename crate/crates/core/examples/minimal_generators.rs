//! Minimal generators of divisorial ideals along the class group of Segre(2,3).
use divclass::divisorial::{class_group, class_lift, minimal_generators};
use divclass::semigroup::from_equations;

fn main() -> divclass::Result<()> {
    let s = from_equations(5, &[vec![1, 1, -1, -1, -1]], &[])?;
    let cl = class_group(&s)?;
    println!("{:>5}  {:>3}  bounds", "class", "mu");
    for i in -4..=4 {
        let a = class_lift(&s, &cl, &[i])?;
        let g = minimal_generators(&s, &a)?;
        println!("{i:>5}  {:>3}  {a:?}", g.mu);
    }
    let g = minimal_generators(&s, &cl.raw_lift(&[-1])?)?;
    for p in &g.points {
        println!("  {:?}", s.to_ambient(p));
    }
    Ok(())
}
