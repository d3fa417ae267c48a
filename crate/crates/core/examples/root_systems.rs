//! Builds the root systems behind the Hermitian symmetric spaces, splits
//! them at the marked root, and deletes Dynkin vertices.

use std::collections::BTreeSet;

use projrank::root_system::{build_root_system, delete_vertices, parabolic_split, system_name, TypeLabel};

fn main() -> projrank::Result<()> {
    for (label, rank, marked) in [
        (TypeLabel::A, 5, 2),
        (TypeLabel::B, 4, 1),
        (TypeLabel::C, 4, 4),
        (TypeLabel::D, 5, 5),
        (TypeLabel::E6, 6, 1),
        (TypeLabel::E7, 7, 7),
    ] {
        let rs = build_root_system(label, rank)?;
        let split = parabolic_split(&rs, marked)?;
        println!(
            "{:<3}: |Φ+| = {:>2}, dim g = {:>3}, marked α{marked}: |Φ(n+)| = {}",
            system_name(label, rank),
            rs.positive_roots().len(),
            rs.algebra_dimension(),
            split.dimension
        );
    }

    let e7 = build_root_system(TypeLabel::E7, 7)?;
    println!("\nE7 Cartan matrix:");
    for row in e7.cartan_matrix() {
        println!("  {row:?}");
    }
    println!("highest root: {:?}", e7.positive_roots().last().unwrap().coeffs);

    for removed in [BTreeSet::from([7]), BTreeSet::from([1, 7]), BTreeSet::from([4])] {
        let parts: Vec<String> = delete_vertices(&e7, &removed)?
            .iter()
            .map(|c| system_name(c.type_label, c.rank))
            .collect();
        println!("E7 minus {removed:?}: {}", parts.join(" + "));
    }
    Ok(())
}
