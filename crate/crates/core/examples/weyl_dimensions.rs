//! Weyl dimensions, the hook-content cross-check in type A, small
//! irreducibles of SL(ℓ+1), and the trivial-summand bound they imply.

use projrank::rep_theory::{
    enumerate_irreps_below, min_trivial_summand, tableau_dimension, weyl_dimension, DominantWeight,
};
use projrank::root_system::{build_root_system, TypeLabel};

fn main() -> projrank::Result<()> {
    let a5 = build_root_system(TypeLabel::A, 5)?;
    for w in ["1,0,0,0,0", "0,1,0,0,0", "0,0,1,0,0", "2,0,0,0,0", "1,0,0,0,1", "1,1,0,0,0"] {
        let w: DominantWeight = w.parse()?;
        println!(
            "A5 {:<8} weyl {:>4}  tableaux {:>4}",
            w.to_string(),
            weyl_dimension(&a5, &w)?,
            tableau_dimension(TypeLabel::A, 5, &w)?
        );
    }

    for (label, rank) in [(TypeLabel::E6, 6), (TypeLabel::E7, 7)] {
        let rs = build_root_system(label, rank)?;
        let small: Vec<String> = enumerate_irreps_below(&rs, 1000)?
            .iter()
            .map(|r| format!("{}:{}", r.weight, r.dimension))
            .collect();
        println!("{label} modules below 1000: {}", small.join(", "));
    }

    for l in 5..=8 {
        let rs = build_root_system(TypeLabel::A, l)?;
        let dims: Vec<u128> = enumerate_irreps_below(&rs, 2 * (l as u128 + 1))?.iter().map(|r| r.dimension).collect();
        println!("A{l}: irreducibles of dimension ≤ {}: {dims:?}", 2 * (l + 1));
    }

    for (l, d) in [(5, 8), (6, 10), (7, 15)] {
        let t = min_trivial_summand(l, d)?;
        println!(
            "ℓ = {l}, d = {d}: blocks {:?}, smallest trivial part {} ≥ {}",
            t.block_dims, t.min_trivial, t.bound
        );
    }
    Ok(())
}
