//! Schubert degrees from the closed formula, checked against Pieri
//! counting, including the whole Grassmannian of lines in P^3.

use projrank::schubert::{all_indices, line_index, report, SchubertIndex};

fn main() -> projrank::Result<()> {
    let examples = [
        SchubertIndex::new(vec![1, 2, 3], 5)?,
        SchubertIndex::linear_projective(4, 9)?,
        line_index(3, 6)?,
        SchubertIndex::full(1, 3)?,
        SchubertIndex::full(2, 5)?,
        SchubertIndex::new(vec![1, 3, 5], 6)?,
    ];
    for idx in &examples {
        let r = report(idx)?;
        println!(
            "{idx:<14} in Gr({},{}): dimension {:>2}, degree {:>3}, Pieri {:>3}",
            idx.d(),
            idx.n(),
            r.k,
            r.degree,
            r.oracle_degree
        );
    }

    let indices = all_indices(2, 6);
    let agree = indices.iter().filter(|i| report(i).map(|r| r.degree == r.oracle_degree).unwrap_or(false)).count();
    println!("Gr(2,6): formula and Pieri agree on {agree} of {} indices", indices.len());
    Ok(())
}
