//! Pure embeddings and divisoriality of coset modules.
use divclass::semigroup::{coset_divisoriality_check, purity_check, AffineSemigroup, FormSystem};

fn main() -> divclass::Result<()> {
    let s = AffineSemigroup::from_inequalities(2, &[vec![1, 0], vec![0, 1]])?;
    let systems = [
        vec![vec![1, 0], vec![0, 1]],
        vec![vec![1, 0], vec![1, 1]],
        vec![vec![2, 0], vec![0, 1], vec![1, 1]],
        vec![vec![2, 0], vec![0, 3]],
    ];
    for forms in systems {
        let xi = FormSystem::new(&s, forms.clone())?;
        let p = purity_check(&s, &xi)?;
        print!("{forms:?}: {p:?}");
        if p.is_pure() {
            let d = coset_divisoriality_check(&s, &xi)?;
            print!(", divisorial {}", d.divisorial);
        }
        println!();
    }
    Ok(())
}
