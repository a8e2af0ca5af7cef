//! Normalization of affine semigroups and their support forms.
use divclass::semigroup::{from_equations, AffineSemigroup};

fn show(name: &str, s: &AffineSemigroup) {
    println!("{name}: rank {} in Z^{}, {} support forms", s.rank, s.ambient_rank, s.num_forms());
    println!("  support forms {:?}", s.support_forms);
    println!("  Hilbert basis {:?}", s.hilbert_basis.iter().map(|h| s.to_ambient(h)).collect::<Vec<_>>());
}

fn main() -> divclass::Result<()> {
    show("quadratic cone", &AffineSemigroup::from_generators(2, &[vec![1, 0], vec![1, 2]])?);
    show("x + y even", &from_equations(2, &[], &[(vec![1, 1], 2)])?);
    show("Segre(2,3)", &from_equations(5, &[vec![1, 1, -1, -1, -1]], &[])?);
    show(
        "square pyramid",
        &AffineSemigroup::from_generators(3, &[vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]])?,
    );
    let mixed = [
        [2, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0],
        [0, 2, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 1],
        [0, 0, 0, 1, 0, 1],
        [0, 0, 1, 0, 1, 0],
        [0, 0, 0, 1, 1, 0],
    ];
    let gens: Vec<Vec<i64>> = mixed.iter().map(|g| g.to_vec()).collect();
    show("U^2, UV, V^2 with XW, YW, XZ, YZ", &AffineSemigroup::from_generators_in_group(6, &gens)?);
    Ok(())
}
