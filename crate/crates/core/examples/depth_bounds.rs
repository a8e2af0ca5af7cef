//! Combinatorial depth bounds and simpliciality.
use divclass::depth::{depth_bounds, simplicial_check};
use divclass::divisorial::class_group;
use divclass::semigroup::{from_equations, AffineSemigroup};

fn main() -> divclass::Result<()> {
    let examples = [
        ("Segre(2,3)", from_equations(5, &[vec![1, 1, -1, -1, -1]], &[])?),
        ("quadratic cone", AffineSemigroup::from_generators(2, &[vec![1, 0], vec![1, 2]])?),
        (
            "square pyramid",
            AffineSemigroup::from_generators(3, &[vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]])?,
        ),
    ];
    for (name, s) in &examples {
        let d = depth_bounds(s);
        let simp = simplicial_check(s, &class_group(s)?)?;
        println!(
            "{name}: grade {} (forms {:?}), lambda {} via {:?}, simplicial {}",
            d.grade_mp, d.grade_witness, d.lambda, d.lambda_witness, simp.simplicial
        );
    }
    Ok(())
}
