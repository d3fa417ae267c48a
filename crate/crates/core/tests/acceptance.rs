//! One PASS/FAIL line per acceptance criterion, each run under its time
//! limit. Runs without the libtest harness so the lines always print.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use itertools::Itertools;
use projrank::hss_catalog::{pair_count_formula, projective_rank, symmetric_pairs, HermitianSpace};
use projrank::matrix_lie::{
    bracket, build_bdi_pair, conic_triple_system, is_j_stable, is_lie_triple_system, su_basis, su_to_so_complex,
    BilinearForm,
};
use projrank::pluecker::{
    curve_degree, grassmannian_line, hyperplane_witness, lagrangian_pencil, segre_quadric_line, split_splitting,
    symplectic_line, symplectic_splitting, veronese_conic,
};
use projrank::rep_theory::{enumerate_irreps_below, min_trivial_summand, tableau_dimension, weyl_dimension, DominantWeight};
use projrank::root_system::{build_root_system, parabolic_split, TypeLabel};
use projrank::scalar::{int, Scalar};
use projrank::schubert::{all_indices, pieri_degree_oracle, schubert_degree, SchubertIndex};
use projrank::verify::{verify, Scope};
use projrank::Error;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| int(x)).collect()
}

fn grid(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    std::iter::repeat(lo..=hi).take(n).multi_cartesian_product().collect()
}

fn projective_ranks() -> Outcome {
    let mut count = 0;
    for n in 1..=14usize {
        for d in n.div_ceil(2)..n.min(8) {
            let s = ok(HermitianSpace::grassmannian(d, n))?;
            ensure!(projective_rank(&s) == d + 1, "Gr({d},{n}): {}", projective_rank(&s));
            count += 1;
        }
    }
    for m in 3..=12 {
        ensure!(projective_rank(&ok(HermitianSpace::bdi(m))?) == m / 2, "BDI({m})");
        count += 1;
    }
    for n in 2..=8 {
        ensure!(projective_rank(&ok(HermitianSpace::ci(n))?) == n - 1, "CI({n})");
        count += 1;
    }
    for n in 3..=8 {
        ensure!(projective_rank(&ok(HermitianSpace::diii(n))?) == n - 1, "DIII({n})");
        count += 1;
    }
    ensure!(projective_rank(&HermitianSpace::Eiii) == 5, "EIII");
    ensure!(projective_rank(&HermitianSpace::Evii) == 6, "EVII");
    Ok(format!("{} spaces", count + 2))
}

fn pair_counts() -> Outcome {
    let mut spaces = Vec::new();
    for n in 1..=14usize {
        for d in n.div_ceil(2)..n.min(8) {
            spaces.push(ok(HermitianSpace::grassmannian(d, n))?);
        }
    }
    spaces.extend((3..=12).map(|m| HermitianSpace::Bdi { m }));
    spaces.extend((2..=8).map(|n| HermitianSpace::Ci { n }));
    spaces.extend((3..=8).map(|n| HermitianSpace::Diii { n }));
    spaces.extend([HermitianSpace::Eiii, HermitianSpace::Evii]);
    for s in &spaces {
        let want = match *s {
            HermitianSpace::Aiii { p, .. } => p,
            HermitianSpace::Bdi { .. } => 2,
            HermitianSpace::Ci { n } => n,
            HermitianSpace::Diii { n } => n / 2,
            HermitianSpace::Eiii | HermitianSpace::Evii => 2,
        };
        ensure!(symmetric_pairs(s).count == want, "{s}: {}", symmetric_pairs(s).count);
        ensure!(pair_count_formula(s) == want, "{s}: formula");
    }
    Ok(format!("{} spaces", spaces.len()))
}

fn weyl_dimensions() -> Outcome {
    for l in 1..=8 {
        let rs = ok(build_root_system(TypeLabel::A, l))?;
        for i in 1..=l {
            let d = ok(weyl_dimension(&rs, &DominantWeight::fundamental(l, i)))?;
            ensure!(d == binomial(l as u128 + 1, i as u128), "A{l} λ{i}: {d}");
        }
    }
    let mut count = 0;
    for l in 1..=6 {
        let rs = ok(build_root_system(TypeLabel::A, l))?;
        for c in grid(l, 0, 3).into_iter().filter(|c| c.iter().sum::<i64>() <= 3) {
            let w = DominantWeight::new(c.iter().map(|&x| x as u32).collect());
            let a = ok(weyl_dimension(&rs, &w))?;
            let b = ok(tableau_dimension(TypeLabel::A, l, &w))?;
            ensure!(a == b, "A{l} {w}: {a} vs {b}");
            count += 1;
        }
    }
    Ok(format!("{count} weights"))
}

fn small_irreps() -> Outcome {
    for l in 5..=8usize {
        let rs = ok(build_root_system(TypeLabel::A, l))?;
        let found: BTreeSet<(Vec<u32>, u128)> = ok(enumerate_irreps_below(&rs, 2 * (l as u128 + 1)))?
            .into_iter()
            .map(|r| (r.weight.coeffs().to_vec(), r.dimension))
            .collect();
        let mut first = vec![0; l];
        first[0] = 1;
        let mut last = vec![0; l];
        last[l - 1] = 1;
        let want = BTreeSet::from([(vec![0; l], 1), (first, l as u128 + 1), (last, l as u128 + 1)]);
        ensure!(found == want, "A{l}: {found:?}");
    }
    let mut admissible = 0;
    for l in 1..=8 {
        for d in 1..2 * (l + 1) {
            match min_trivial_summand(l, d) {
                Ok(t) => {
                    ensure!(t.min_trivial >= d.saturating_sub(l + 1), "(ℓ, d) = ({l}, {d}): r = {}", t.min_trivial);
                    admissible += 1;
                }
                Err(Error::Parameter(_)) => {}
                Err(e) => return Err(format!("(ℓ, d) = ({l}, {d}): {e}")),
            }
        }
    }
    ensure!(admissible > 0, "no admissible (ℓ, d)");
    Ok(format!("ℓ = 5..=8 exact; {admissible} admissible (ℓ, d)"))
}

fn schubert_degrees() -> Outcome {
    let mut count = 0;
    for n in 1..=7 {
        for d in 0..=3.min(n - 1) {
            for idx in all_indices(d, n) {
                let a = ok(schubert_degree(&idx))?;
                ensure!(a == pieri_degree_oracle(&idx), "{idx}");
                count += 1;
            }
        }
    }
    ensure!(count >= 200, "only {count} indices");
    for d in 0..=10 {
        let idx = ok(SchubertIndex::linear_projective(d, d + 2))?;
        ensure!(ok(schubert_degree(&idx))? == 1, "Ω(1..{}) ", d + 1);
    }
    ensure!(ok(schubert_degree(&ok(SchubertIndex::full(1, 3))?))? == 2, "Gr(1,3)");
    Ok(format!("{count} indices against Pieri"))
}

fn pluecker_degrees() -> Outcome {
    for k in 1..=5 {
        ensure!(ok(curve_degree(&ok(grassmannian_line(k, k + 1))?))? == 1, "Grassmannian line k = {k}");
        ensure!(ok(curve_degree(&ok(symplectic_line(k.max(1)))?))? == 1, "symplectic line n = {k}");
    }
    ensure!(ok(curve_degree(&ok(segre_quadric_line(&int(1), &int(2)))?))? == 1, "quadric line");
    ensure!(ok(curve_degree(&veronese_conic()))? == 2, "conic");
    let mut count = 0;
    for n in 2..=4 {
        let cases = [
            (BilinearForm::symplectic(n), symplectic_splitting(n)),
            (BilinearForm::split_symmetric(n), split_splitting(n)),
        ];
        // one representative pair per pencil, keyed by its reduced echelon form
        let mut seen = BTreeSet::new();
        let vals = grid(n, -1, 1);
        for (a, b) in vals.iter().tuple_combinations() {
            let (pa, pb) = (ints(a), ints(b));
            let (echelon, pivots) = projrank::linalg::rref(vec![pa.clone(), pb.clone()]);
            if pivots.len() < 2 || !seen.insert(format!("{echelon:?}")) {
                continue;
            }
            for (form, (v1, v2)) in &cases {
                let fam = ok(lagrangian_pencil(form, v1, v2, &pa, &pb))?;
                ensure!(ok(fam.full.is_isotropic(form))?, "n = {n}: not isotropic");
                ensure!(ok(curve_degree(&fam.full))? == 2, "n = {n}: φ = {a:?}, {b:?}");
                count += 1;
            }
        }
    }
    Ok(format!("lines of degree 1, conic of degree 2, {count} pencils of degree 2"))
}

fn lie_triple_systems() -> Outcome {
    for m in 3..=8 {
        ensure!(ok(ok(build_bdi_pair(m))?.check_invariants())?.all(), "so({}) pair", m + 2);
    }
    let (pair, basis) = ok(conic_triple_system())?;
    ensure!(ok(is_lie_triple_system(&basis, &pair))?.holds, "conic m(σ) not closed");
    ensure!(ok(is_j_stable(&basis, &pair))?, "conic m(σ) not J-stable");
    for n in 1..=3 {
        let b = su_basis(n + 1);
        for (x, y) in b.iter().tuple_combinations() {
            let lhs = ok(su_to_so_complex(&ok(bracket(x, y))?))?;
            let rhs = ok(bracket(&ok(su_to_so_complex(x))?, &ok(su_to_so_complex(y))?))?;
            ensure!(lhs == rhs, "su({})", n + 1);
        }
    }
    Ok("so(5)..so(10), conic, su(2)..su(4)".into())
}

fn parabolic_dimensions() -> Outcome {
    let dim = |label, rank, r| -> Result<usize, String> { Ok(ok(parabolic_split(&ok(build_root_system(label, rank))?, r))?.dimension) };
    for l in 1..=8 {
        for r in 1..=l {
            ensure!(dim(TypeLabel::A, l, r)? == r * (l + 1 - r), "(A{l}, α{r})");
        }
    }
    for l in 2..=6 {
        ensure!(dim(TypeLabel::B, l, 1)? == 2 * l - 1, "(B{l}, α1)");
        ensure!(dim(TypeLabel::C, l, l)? == l * (l + 1) / 2, "(C{l}, α{l})");
    }
    for l in 3..=6 {
        ensure!(dim(TypeLabel::D, l, 1)? == 2 * l - 2, "(D{l}, α1)");
        ensure!(dim(TypeLabel::D, l, l)? == l * (l - 1) / 2, "(D{l}, α{l})");
    }
    ensure!(dim(TypeLabel::E6, 6, 1)? == 16, "(E6, α1)");
    ensure!(dim(TypeLabel::E7, 7, 7)? == 27, "(E7, α7)");
    ensure!(ok(build_root_system(TypeLabel::E6, 6))?.positive_roots().len() == 36, "|Φ+(E6)|");
    ensure!(ok(build_root_system(TypeLabel::E7, 7))?.positive_roots().len() == 63, "|Φ+(E7)|");
    Ok("A, B, C, D closed forms; 16, 27, 36, 63".into())
}

fn hyperplane_witnesses() -> Outcome {
    let mut count = 0;
    for n in 2..=4 {
        let configs = [
            (BilinearForm::symplectic(n), symplectic_splitting(n)),
            (BilinearForm::split_symmetric(n), split_splitting(n)),
        ];
        for (form, (v1, v2)) in &configs {
            for l in [v1, v2] {
                let span = projrank::linalg::SpanSolver::from_vectors(2 * n, l.iter());
                for v in grid(2 * n, 0, 1) {
                    let v = ints(&v);
                    if span.contains(&v) || !ok(form.eval(&v, &v))?.eq(&int(0)) {
                        continue;
                    }
                    let plane = ok(hyperplane_witness(n, &v, l, form))?;
                    ensure!(plane.len() == n, "n = {n}");
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} configurations"))
}

fn full_verify() -> Outcome {
    let r = verify(Scope::All);
    let failed: Vec<_> = r.checks.iter().filter(|c| !matches!(c.status, projrank::verify::Status::Pass)).map(|c| c.check_id.clone()).collect();
    ensure!(failed.is_empty(), "failed: {failed:?}");
    Ok(format!("{} checks", r.total))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("1 projective ranks", 1, projective_ranks),
        ("2 pair counts", 1, pair_counts),
        ("3 Weyl dimensions", 5, weyl_dimensions),
        ("4 small irreducibles", 5, small_irreps),
        ("5 Schubert degrees", 10, schubert_degrees),
        ("6 Plücker degrees", 10, pluecker_degrees),
        ("7 Lie triple systems", 10, lie_triple_systems),
        ("8 parabolic dimensions", 2, parabolic_dimensions),
        ("9 hyperplane witnesses", 5, hyperplane_witnesses),
        ("10 full verify", 60, full_verify),
    ];
    let mut failures = Vec::new();
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let (tag, detail) = match (&result, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; over the {limit} s limit")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        println!("{tag}  {name:<24} {:>8.3} s  {detail}", elapsed.as_secs_f64());
        if tag == "FAIL" {
            failures.push(name);
        }
    }
    if !failures.is_empty() {
        eprintln!("failed criteria: {failures:?}");
        std::process::exit(1);
    }
}
