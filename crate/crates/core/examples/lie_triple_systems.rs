//! The Cartan decomposition of so(m+2) for the quadric Q_m, Lie triple
//! systems and J-stability, and the embedding su(n+1) → so(2n+2).

use num_traits::{One, Zero};
use projrank::matrix_lie::{
    bracket, build_bdi_pair, conic_generator_x1, conic_generator_x2, conic_triple_system, is_j_stable,
    is_lie_triple_system, matrix_rank, p_element, su_basis, su_to_so_complex,
};
use projrank::scalar::Scalar;

fn main() -> projrank::Result<()> {
    for m in 3..=6 {
        let pair = build_bdi_pair(m)?;
        let inv = pair.check_invariants()?;
        println!(
            "{}: dim k = {:>2}, dim p = {:>2}, invariants hold: {}",
            pair.ambient,
            pair.k_basis.len(),
            pair.p_basis.len(),
            inv.all()
        );
    }

    let (q2, m_sigma) = conic_triple_system()?;
    println!("\nX1 = {}", serde_json::to_string(&conic_generator_x1()).unwrap());
    println!("X2 = {}", serde_json::to_string(&conic_generator_x2()).unwrap());
    println!("[X1, X2] = {}", serde_json::to_string(&bracket(&m_sigma[0], &m_sigma[1])?).unwrap());
    println!(
        "m(σ): Lie triple system {}, J-stable {}",
        is_lie_triple_system(&m_sigma, &q2)?.holds,
        is_j_stable(&m_sigma, &q2)?
    );

    let b3 = build_bdi_pair(3)?;
    let e = |j: usize| {
        let mut v = vec![Scalar::zero(); 3];
        v[j] = Scalar::one();
        v
    };
    let zero = vec![Scalar::zero(); 3];
    let real_plane = [p_element(&e(0), &zero), p_element(&e(1), &zero)];
    let skew = [p_element(&e(0), &e(1)), p_element(&e(1), &zero)];
    println!("real plane in Q_3: {:?}, J-stable {}", is_lie_triple_system(&real_plane, &b3)?, is_j_stable(&real_plane, &b3)?);
    println!("skewed plane in Q_3: {:?}", is_lie_triple_system(&skew, &b3)?);

    for n in 1..=3 {
        let images: Vec<_> = su_basis(n + 1).iter().map(su_to_so_complex).collect::<Result<_, _>>()?;
        println!("su({}) → so({}): image of dimension {}", n + 1, 2 * n + 2, matrix_rank(&images));
    }
    Ok(())
}
