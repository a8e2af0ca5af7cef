//! Normal forms, cone duality, vertices and faces of a polyhedron, and an LP.
use divclass::lattice::{hermite_normal_form, quotient_presentation, smith_normal_form, IntMatrix};
use divclass::polyhedral::{dualize_cone, rational_lp, ConeInput, RationalPolyhedron, Sense, DEFAULT_FACE_CAP};

fn main() -> divclass::Result<()> {
    let m = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]], 3)?;
    let (h, _) = hermite_normal_form(&m);
    let (d, _, _) = smith_normal_form(&m);
    println!("HNF {:?}\nSNF {:?}", h.to_i64_rows()?, d.to_i64_rows()?);
    let q = quotient_presentation(&m);
    println!("Z^3 / image: factors {:?}, free rank {}", q.invariant_factors, q.free_rank);

    let cone = dualize_cone(2, &ConeInput::Generators(vec![vec![1, 0], vec![1, 1], vec![1, 2]]))?;
    println!("rays {:?}\nfacets {:?}", cone.generators, cone.inequalities);

    // the triangle x >= 0, y >= 0, x + y <= 3 with a cut
    let p = RationalPolyhedron::new(vec![vec![1, 0], vec![0, 1], vec![-1, -1], vec![-1, 1]], vec![0, 0, -3, -2])?;
    for v in p.vertices()? {
        println!("vertex {}", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "));
    }
    let faces = p.face_lattice(DEFAULT_FACE_CAP)?;
    println!("{} faces, {} vertices, {} edges", faces.faces.len(), faces.vertex_count(), faces.segments.len());
    println!(
        "max x + 2y: {:?}",
        rational_lp(&p.forms, &p.bounds, &[1, 2], Sense::Maximize)?.value().map(|v| v.to_string())
    );
    Ok(())
}
