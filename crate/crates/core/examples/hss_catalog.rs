//! Catalog records for the six Hermitian symmetric space types: complex
//! dimension, projective rank, minimal degree and (M+, M-) pairs.

use projrank::hss_catalog::{rank_consistency_report, record, HermitianSpace, SweepBounds};

fn main() -> projrank::Result<()> {
    for s in ["Gr(3,6)", "AIII(2,5)", "BDI(7)", "BDI(8)", "CI(4)", "DIII(6)", "EIII", "EVII"] {
        let space: HermitianSpace = s.parse()?;
        let r = record(&space)?;
        println!(
            "{s:<10} = {:<10} dim {:>2}  pr {}  degree {:<6}  #P {}",
            space.to_string(),
            r.dim_c,
            r.projective_rank,
            r.min_degree.to_string(),
            r.count
        );
    }

    println!("\n{}", serde_json::to_string_pretty(&record(&HermitianSpace::Eiii)?).unwrap());

    let report = rank_consistency_report(SweepBounds::default());
    println!("\n{} identities, {} violations", report.checks.len(), report.violations);
    for f in &report.flags {
        println!("flag: {f}");
    }
    Ok(())
}
