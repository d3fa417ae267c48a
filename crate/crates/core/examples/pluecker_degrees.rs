//! Degrees of explicit curves in Grassmannians from their Plücker
//! coordinates: lines, the Veronese conic on Q_2, and the pencils
//! L ↦ L ⊕ (L^⊥ ∩ V2) in the Lagrangian and isotropic Grassmannians.

use projrank::matrix_lie::BilinearForm;
use projrank::pluecker::{
    curve_degree, grassmannian_line, hyperplane_witness, lagrangian_pencil, named_map, pluecker_coords,
    symplectic_splitting, MAP_NAMES,
};
use projrank::scalar::int;

fn main() -> projrank::Result<()> {
    let line = grassmannian_line(3, 5)?;
    let pv = pluecker_coords(&line);
    for (subset, p) in pv.subsets.iter().zip(&pv.coords) {
        if p.to_string() != "0" {
            println!("p{subset:?} = {p}");
        }
    }
    println!("degree {}\n", curve_degree(&line)?);

    for name in MAP_NAMES {
        let r = named_map(name, 3)?;
        let checks: Vec<String> = r.membership_checks.iter().map(|c| format!("{}={}", c.name, c.holds)).collect();
        println!("{:<18} {:<8} degree {}  {}", r.map_name, r.ambient, r.degree, checks.join(" "));
    }

    let n = 4;
    let omega = BilinearForm::symplectic(n);
    let (v1, v2) = symplectic_splitting(n);
    let phi_a = vec![int(1), int(-1), int(0), int(2)];
    let phi_b = vec![int(0), int(1), int(1), int(0)];
    let fam = lagrangian_pencil(&omega, &v1, &v2, &phi_a, &phi_b)?;
    println!(
        "\nCI(4) pencil: degree {} = {} + {}",
        curve_degree(&fam.full)?,
        curve_degree(&fam.hyperplane_part)?,
        curve_degree(&fam.complement_part)?
    );

    let v: Vec<_> = v2[0].iter().zip(&v1[1]).map(|(a, b)| a + b).collect();
    let plane = hyperplane_witness(n, &v, &v1, &omega)?;
    println!("non-Lagrangian {n}-plane through v inside V1 + ⟨v⟩: {} vectors", plane.len());
    Ok(())
}
