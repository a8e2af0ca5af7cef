//! Cohen-Macaulay classes of Segre(2,3) by Serre's numerical criterion.
use divclass::depth::cohen_macaulay_test;
use divclass::divisorial::class_group;
use divclass::semigroup::from_equations;

fn main() -> divclass::Result<()> {
    let s = from_equations(5, &[vec![1, 1, -1, -1, -1]], &[])?;
    let cl = class_group(&s)?;
    println!("{:>5}  {:>3}  {:>9}  {:>9}  CM", "class", "mu", "len M/qM", "len R/qR");
    for i in -3..=3 {
        let r = cohen_macaulay_test(&s, &cl.raw_lift(&[i])?, None)?;
        println!("{i:>5}  {:>3}  {:>9}  {:>9}  {}", r.mu, r.serre_length_module, r.serre_length_ring, r.cohen_macaulay);
    }
    Ok(())
}
