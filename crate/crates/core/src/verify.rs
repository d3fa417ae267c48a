//! The reproduction suite behind `projrank verify`: every exact claim the
//! crate reproduces, grouped by module, run in parallel and reported in
//! `check_id` order.
//!
//! `PROJRANK_SWEEP_CAP` caps the rank and size bounds of the sweeps.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hss_catalog::{
    complex_dimension, min_degree, pair_count_formula, projective_rank, rank_consistency_report,
    symmetric_pairs, sweep, HermitianSpace, MinDegree, SweepBounds,
};
use crate::matrix_lie::{
    bracket, build_bdi_pair, conic_triple_system, is_j_stable, is_lie_triple_system, matrix_rank,
    su_basis, su_to_so_complex, BilinearForm,
};
use crate::pluecker::{
    curve_degree, conic_geodesics, grassmannian_line, hyperplane_witness, lagrangian_pencil,
    quadric_membership, segre_quadric_line, split_splitting, symplectic_line, symplectic_splitting,
    veronese_conic, Parametrization,
};
use crate::poly::Poly2;
use crate::rep_theory::{
    enumerate_irreps_below, min_trivial_summand, tableau_dimension, weyl_dimension, DominantWeight,
};
use crate::root_system::{
    build_root_system, classical_positive_count, delete_vertices, parabolic_split, system_name, TypeLabel,
};
use crate::scalar::{int, Scalar};
use crate::schubert::{
    all_indices, pieri_degree_oracle, schubert_degree, SchubertIndex,
};

pub const SWEEP_CAP_ENV: &str = "PROJRANK_SWEEP_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    All,
    RootSystem,
    RepTheory,
    Schubert,
    MatrixLie,
    Pluecker,
    Hss,
}

impl Scope {
    fn prefix(&self) -> &'static str {
        match self {
            Scope::All => "",
            Scope::RootSystem => "root_system",
            Scope::RepTheory => "rep_theory",
            Scope::Schubert => "schubert",
            Scope::MatrixLie => "matrix_lie",
            Scope::Pluecker => "pluecker",
            Scope::Hss => "hss",
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scope::All => write!(f, "all"),
            s => write!(f, "{}", s.prefix()),
        }
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Scope::All,
            "root_system" | "roots" => Scope::RootSystem,
            "rep_theory" | "dim" => Scope::RepTheory,
            "schubert" => Scope::Schubert,
            "matrix_lie" | "lie" => Scope::MatrixLie,
            "pluecker" => Scope::Pluecker,
            "hss" | "hss_catalog" => Scope::Hss,
            _ => return Err(Error::Parameter(format!("unknown scope {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    /// The claim the check reproduces.
    pub anchor: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub scope: Scope,
    pub checks: Vec<CheckResult>,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// Upper limit applied to every sweep bound; `None` runs the full ranges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Cap(pub Option<usize>);

impl Cap {
    pub fn from_env() -> Self {
        Cap(std::env::var(SWEEP_CAP_ENV).ok().and_then(|v| v.trim().parse().ok()))
    }

    pub fn at(&self, default: usize) -> usize {
        self.0.map_or(default, |c| c.min(default))
    }
}

type Outcome = std::result::Result<String, String>;

struct Check {
    id: &'static str,
    anchor: &'static str,
    run: fn(Cap) -> Outcome,
}

fn fail(msg: impl Into<String>) -> Outcome {
    Err(msg.into())
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return fail(format!($($fmt)+));
        }
    };
}

const CHECKS: &[Check] = &[
    Check { id: "hss.dimensions", anchor: "complex dimension equals |Φ(n+)| and the classical closed forms", run: hss_dimensions },
    Check { id: "hss.min_degree", anchor: "minimal degrees: 1 for AIII, EIII, EVII; 2 for CI, DIII; 1 or 2 for BDI", run: hss_min_degree },
    Check { id: "hss.pair_counts", anchor: "#P(M) column: p, p, n, ⌊n/2⌋, 2, 2", run: hss_pair_counts },
    Check { id: "hss.projective_rank_sweep", anchor: "projective ranks of the six types", run: hss_projective_rank_sweep },
    Check { id: "hss.rank_consistency", anchor: "rank bootstrap EIII from DIII(5), EVII from EIII, and (M+, M-) rank bounds", run: hss_rank_consistency },
    Check { id: "matrix_lie.bdi_invariants", anchor: "so(m+2) = so(2)+so(m) + p with J(ξ, η) = (-η, ξ)", run: lie_bdi_invariants },
    Check { id: "matrix_lie.conic_triple_system", anchor: "m(σ) for σ = so(3) ⊂ so(4) is a J-stable Lie triple system", run: lie_conic },
    Check { id: "matrix_lie.su_embedding", anchor: "A + iB ↦ [[A, B], [-B, A]] is an injective Lie algebra map", run: lie_su_embedding },
    Check { id: "pluecker.conic", anchor: "a totally geodesic P^1 of degree 2 in Q_2", run: pl_conic },
    Check { id: "pluecker.hyperplane_witness", anchor: "no G(n, n+1) lies in the space of Lagrangian (or isotropic) n-planes", run: pl_witness },
    Check { id: "pluecker.lines", anchor: "totally geodesic projective lines of degree one", run: pl_lines },
    Check { id: "pluecker.pencils", anchor: "L ↦ L ⊕ (L^⊥ ∩ V2) restricted to a line has degree 1 + 1 = 2", run: pl_pencils },
    Check { id: "rep_theory.exceptional", anchor: "smallest E6 and E7 modules: 27, 78, 56, 133", run: rep_exceptional },
    Check { id: "rep_theory.fundamental", anchor: "deg λ_i = C(ℓ+1, i) for A_ℓ", run: rep_fundamental },
    Check { id: "rep_theory.small_irreps", anchor: "A_ℓ irreducibles of dimension ≤ 2(ℓ+1) are 1, λ1, λℓ", run: rep_small_irreps },
    Check { id: "rep_theory.trivial_summand", anchor: "a d-dimensional SL(ℓ+1)-module has trivial part ≥ d-ℓ-1", run: rep_trivial_summand },
    Check { id: "rep_theory.weyl_vs_tableau", anchor: "Weyl dimension formula agrees with semistandard tableau counts", run: rep_weyl_vs_tableau },
    Check { id: "root_system.counts", anchor: "|Φ+| for A, B, C, D, E6 = 36, E7 = 63", run: roots_counts },
    Check { id: "root_system.deletions", anchor: "deleting the marked node of (E6, α1) and (E7, α7)", run: roots_deletions },
    Check { id: "root_system.parabolic", anchor: "|Φ(n+)| = r(ℓ+1-r) for A, 16 for (E6, α1), 27 for (E7, α7)", run: roots_parabolic },
    Check { id: "schubert.linear_spaces", anchor: "deg Ω(1, ..., d+1) = 1 and deg Gr(1, 3) = 2", run: sch_linear },
    Check { id: "schubert.pieri_vs_formula", anchor: "closed-form Schubert degree agrees with Pieri counting", run: sch_pieri },
];

/// Runs every check in `scope` with the sweep cap from the environment.
pub fn verify(scope: Scope) -> VerifyReport {
    verify_with(scope, Cap::from_env())
}

pub fn verify_with(scope: Scope, cap: Cap) -> VerifyReport {
    let selected: Vec<&Check> = CHECKS
        .iter()
        .filter(|c| scope == Scope::All || c.id.split('.').next() == Some(scope.prefix()))
        .collect();
    let mut checks: Vec<CheckResult> = selected
        .par_iter()
        .map(|c| {
            let (status, detail) = match (c.run)(cap) {
                Ok(d) => (Status::Pass, d),
                Err(d) => (Status::Fail, d),
            };
            CheckResult { check_id: c.id.to_string(), anchor: c.anchor.to_string(), status, detail }
        })
        .collect();
    checks.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    let passed = checks.iter().filter(|c| c.status == Status::Pass).count();
    let total = checks.len();
    VerifyReport { scope, checks, total, passed, failed: total - passed }
}

fn bounds(cap: Cap) -> SweepBounds {
    let d = SweepBounds::default();
    SweepBounds { max_pq: cap.at(d.max_pq), max_m: cap.at(d.max_m), max_n: cap.at(d.max_n) }
}

fn hss_projective_rank_sweep(cap: Cap) -> Outcome {
    let mut n_checked = 0;
    for n in 1..=cap.at(14) {
        for d in n.div_ceil(2)..n.min(cap.at(7) + 1) {
            let s = lift(HermitianSpace::grassmannian(d, n))?;
            ensure!(projective_rank(&s) == d + 1, "pr(Gr({d},{n})) = {} ≠ {}", projective_rank(&s), d + 1);
            n_checked += 1;
        }
    }
    for m in 3..=cap.at(12) {
        let r = projective_rank(&HermitianSpace::Bdi { m });
        ensure!(r == m / 2, "pr(BDI({m})) = {r}");
        n_checked += 1;
    }
    for n in 2..=cap.at(8) {
        ensure!(projective_rank(&HermitianSpace::Ci { n }) == n - 1, "pr(CI({n}))");
        n_checked += 1;
        if n >= 3 {
            ensure!(projective_rank(&HermitianSpace::Diii { n }) == n - 1, "pr(DIII({n}))");
            n_checked += 1;
        }
    }
    ensure!(projective_rank(&HermitianSpace::Eiii) == 5, "pr(EIII)");
    ensure!(projective_rank(&HermitianSpace::Evii) == 6, "pr(EVII)");
    Ok(format!("{} descriptors", n_checked + 2))
}

fn hss_pair_counts(cap: Cap) -> Outcome {
    let spaces = sweep(bounds(cap));
    for s in &spaces {
        let table = symmetric_pairs(s);
        let expected = match *s {
            HermitianSpace::Aiii { p, .. } => p,
            HermitianSpace::Bdi { .. } => 2,
            HermitianSpace::Ci { n } => n,
            HermitianSpace::Diii { n } => n / 2,
            HermitianSpace::Eiii | HermitianSpace::Evii => 2,
        };
        ensure!(table.count == expected, "{s}: count {} ≠ {expected}", table.count);
        ensure!(pair_count_formula(s) == expected, "{s}: formula");
        if !matches!(s, HermitianSpace::Eiii | HermitianSpace::Evii) {
            ensure!(table.pairs.len() == expected, "{s}: {} listed pairs", table.pairs.len());
        }
    }
    Ok(format!("{} descriptors", spaces.len()))
}

fn hss_min_degree(cap: Cap) -> Outcome {
    let spaces = sweep(bounds(cap));
    for s in &spaces {
        let deg = min_degree(s);
        let one_ok = matches!(s, HermitianSpace::Aiii { .. } | HermitianSpace::Bdi { .. } | HermitianSpace::Eiii | HermitianSpace::Evii);
        let two_ok = matches!(s, HermitianSpace::Ci { .. } | HermitianSpace::Diii { .. } | HermitianSpace::Bdi { .. });
        ensure!(!deg.values().contains(&1) || one_ok, "{s} has degree 1");
        ensure!(!deg.values().contains(&2) || two_ok, "{s} has degree 2");
    }
    ensure!(min_degree(&HermitianSpace::Bdi { m: 5 }) == MinDegree::OneOrTwo, "BDI(5)");
    Ok(format!("{} descriptors", spaces.len()))
}

fn hss_dimensions(cap: Cap) -> Outcome {
    let spaces = sweep(bounds(cap));
    for s in &spaces {
        let dim = lift(complex_dimension(s))?;
        let expected = match *s {
            HermitianSpace::Aiii { p, q } => p * q,
            HermitianSpace::Bdi { m } => m,
            HermitianSpace::Ci { n } => n * (n + 1) / 2,
            HermitianSpace::Diii { n } => n * (n - 1) / 2,
            HermitianSpace::Eiii => 16,
            HermitianSpace::Evii => 27,
        };
        ensure!(dim == expected, "{s}: dim {dim} ≠ {expected}");
        ensure!(projective_rank(s) <= dim, "{s}: pr > dim");
    }
    Ok(format!("{} descriptors", spaces.len()))
}

fn hss_rank_consistency(cap: Cap) -> Outcome {
    let r = rank_consistency_report(bounds(cap));
    if let Some(bad) = r.checks.iter().find(|c| !c.holds) {
        return fail(format!("{}: {}", bad.name, bad.detail));
    }
    Ok(format!("{} identities, {} flagged reading(s)", r.checks.len(), r.flags.len()))
}

fn lie_bdi_invariants(cap: Cap) -> Outcome {
    for m in 3..=cap.at(8) {
        let pair = lift(build_bdi_pair(m))?;
        ensure!(pair.p_basis.len() == 2 * m, "m = {m}: dim p");
        let inv = lift(pair.check_invariants())?;
        ensure!(inv.all(), "m = {m}: {inv:?}");
    }
    Ok(format!("m = 3..={}", cap.at(8)))
}

fn lie_conic(_: Cap) -> Outcome {
    let (pair, m_sigma) = lift(conic_triple_system())?;
    ensure!(matrix_rank(&m_sigma) == 2, "m(σ) is not 2-dimensional");
    ensure!(lift(is_lie_triple_system(&m_sigma, &pair))?.holds, "m(σ) is not a Lie triple system");
    ensure!(lift(is_j_stable(&m_sigma, &pair))?, "m(σ) is not J-stable");
    Ok("2-dimensional, closed, J-stable".into())
}

fn lie_su_embedding(cap: Cap) -> Outcome {
    for n in 1..=cap.at(3) {
        let basis = su_basis(n + 1);
        let images: Vec<_> = basis.iter().map(su_to_so_complex).collect::<Result<_>>().map_err(|e| e.to_string())?;
        ensure!(matrix_rank(&images) == basis.len(), "n = {n}: not injective");
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate().skip(i + 1) {
                let lhs = lift(su_to_so_complex(&lift(bracket(x, y))?))?;
                let rhs = lift(bracket(&images[i], &images[j]))?;
                ensure!(lhs == rhs, "n = {n}: bracket of basis {i}, {j}");
            }
        }
    }
    Ok(format!("su(n+1), n = 1..={}", cap.at(3)))
}

fn pl_lines(cap: Cap) -> Outcome {
    let mut count = 0;
    for k in 1..=cap.at(5) {
        for ambient in k + 1..=k + 3 {
            let line = lift(grassmannian_line(k, ambient))?;
            ensure!(lift(curve_degree(&line))? == 1, "Grassmannian line k = {k}, N = {ambient}");
            count += 1;
        }
    }
    for n in 2..=cap.at(5) {
        let line = lift(symplectic_line(n))?;
        ensure!(lift(line.is_isotropic(&BilinearForm::symplectic(n)))?, "symplectic line n = {n} not Lagrangian");
        ensure!(lift(curve_degree(&line))? == 1, "symplectic line n = {n}");
        count += 1;
    }
    let q2 = BilinearForm::sum_of_squares(4);
    for (v0, v1) in [(0, 1), (1, 0), (1, 1), (1, -2), (3, 2)] {
        let line = lift(segre_quadric_line(&int(v0), &int(v1)))?;
        ensure!(lift(curve_degree(&line))? == 1, "quadric line ({v0},{v1})");
        let m = lift(quadric_membership(&line.rows()[0], Parametrization::Polynomial, &q2))?;
        ensure!(m.lies_on, "quadric line ({v0},{v1}) leaves Q_2");
        for m_dim in 3..=cap.at(6) {
            let mut point = line.rows()[0].clone();
            point.resize(m_dim + 2, Poly2::zero());
            let q = BilinearForm::sum_of_squares(m_dim + 2);
            ensure!(lift(quadric_membership(&point, Parametrization::Polynomial, &q))?.lies_on, "Q_{m_dim}");
        }
        count += 1;
    }
    Ok(format!("{count} lines of degree 1"))
}

fn pl_conic(_: Cap) -> Outcome {
    let conic = veronese_conic();
    ensure!(lift(curve_degree(&conic))? == 2, "conic degree");
    let q2 = BilinearForm::sum_of_squares(4);
    ensure!(lift(quadric_membership(&conic.rows()[0], Parametrization::Polynomial, &q2))?.lies_on, "conic off Q_2");
    for (i, c) in conic_geodesics().iter().enumerate() {
        ensure!(lift(quadric_membership(c, Parametrization::Trigonometric, &q2))?.lies_on, "geodesic c{} off Q_2", i + 1);
    }
    Ok("degree 2; conic and both geodesics lie on Q_2".into())
}

/// Independent pairs of functionals with entries in `{-1, 0, 1}`, up to a
/// fixed number per `n`.
fn functional_pairs(n: usize, limit: usize) -> Vec<(Vec<Scalar>, Vec<Scalar>)> {
    let vals: Vec<Vec<i64>> = std::iter::repeat(-1i64..=1).take(n).multi_cartesian_product().filter(|v| v.iter().any(|&x| x != 0)).collect();
    let mut out = Vec::new();
    for (a, b) in vals.iter().tuple_combinations() {
        if out.len() == limit {
            break;
        }
        let independent = (0..n).tuple_combinations().any(|(i, j)| a[i] * b[j] != a[j] * b[i]);
        if independent {
            out.push((a.iter().map(|&x| int(x)).collect(), b.iter().map(|&x| int(x)).collect()));
        }
    }
    out
}

fn check_pencil(form: &BilinearForm, v1: &[Vec<Scalar>], v2: &[Vec<Scalar>], a: &[Scalar], b: &[Scalar]) -> std::result::Result<(), String> {
    let fam = lift(lagrangian_pencil(form, v1, v2, a, b))?;
    if !lift(fam.full.is_isotropic(form))? {
        return Err("family is not isotropic".into());
    }
    let total = lift(curve_degree(&fam.full))?;
    let l = lift(curve_degree(&fam.hyperplane_part))?;
    let w = lift(curve_degree(&fam.complement_part))?;
    if (total, l, w) != (2, 1, 1) {
        return Err(format!("degrees (total, L, w) = ({total}, {l}, {w})"));
    }
    Ok(())
}

fn pl_pencils(cap: Cap) -> Outcome {
    let mut count = 0;
    for n in 2..=cap.at(4) {
        let omega = BilinearForm::symplectic(n);
        let (v1, v2) = symplectic_splitting(n);
        let s = BilinearForm::split_symmetric(n);
        let (w1, w2) = split_splitting(n);
        for (a, b) in functional_pairs(n, 40) {
            check_pencil(&omega, &v1, &v2, &a, &b).map_err(|e| format!("CI n = {n}: {e}"))?;
            check_pencil(&s, &w1, &w2, &a, &b).map_err(|e| format!("DIII n = {n}: {e}"))?;
            count += 2;
        }
    }
    Ok(format!("{count} pencils of degree 2 = 1 + 1"))
}

fn pl_witness(cap: Cap) -> Outcome {
    let mut count = 0;
    for n in 2..=cap.at(4) {
        let omega = BilinearForm::symplectic(n);
        let (v1, v2) = symplectic_splitting(n);
        let s = BilinearForm::split_symmetric(n);
        let (w1, w2) = split_splitting(n);
        let cases: Vec<(&BilinearForm, &[Vec<Scalar>], Vec<Scalar>)> = vec![
            (&omega, &v1, add(&v2[0], &v1[0])),
            (&omega, &v1, v2[n - 1].clone()),
            (&omega, &v2, add(&v1[0], &v1[n - 1])),
            // e_1 + e_{n+2} is isotropic for the split form
            (&s, &w1, add(&w1[0], &w2[1])),
            (&s, &w2, w1[0].clone()),
        ];
        for (form, l, v) in cases {
            let plane = lift(hyperplane_witness(n, &v, l, form))?;
            ensure!(plane.len() == n, "n = {n}: witness of size {}", plane.len());
            count += 1;
        }
    }
    Ok(format!("{count} configurations"))
}

fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn rep_fundamental(cap: Cap) -> Outcome {
    for l in 1..=cap.at(8) {
        let rs = lift(build_root_system(TypeLabel::A, l))?;
        for i in 1..=l {
            let d = lift(weyl_dimension(&rs, &DominantWeight::fundamental(l, i)))?;
            ensure!(d == binomial(l as u128 + 1, i as u128), "A{l}, λ{i}: {d}");
        }
    }
    Ok(format!("ℓ ≤ {}", cap.at(8)))
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All weights of rank `l` with `Σ m_i ≤ level`.
pub fn weights_up_to_level(l: usize, level: u32) -> Vec<DominantWeight> {
    std::iter::repeat(0..=level)
        .take(l)
        .multi_cartesian_product()
        .filter(|c| c.iter().sum::<u32>() <= level)
        .map(DominantWeight::new)
        .collect()
}

fn rep_weyl_vs_tableau(cap: Cap) -> Outcome {
    let mut count = 0;
    for l in 1..=cap.at(6) {
        let rs = lift(build_root_system(TypeLabel::A, l))?;
        for w in weights_up_to_level(l, 3) {
            let a = lift(weyl_dimension(&rs, &w))?;
            let b = lift(tableau_dimension(TypeLabel::A, l, &w))?;
            ensure!(a == b, "A{l}, {w}: {a} ≠ {b}");
            count += 1;
        }
    }
    Ok(format!("{count} weights"))
}

fn rep_small_irreps(cap: Cap) -> Outcome {
    for l in 5..=cap.at(8) {
        let rs = lift(build_root_system(TypeLabel::A, l))?;
        let found: BTreeSet<(DominantWeight, u128)> = lift(enumerate_irreps_below(&rs, 2 * (l as u128 + 1)))?
            .into_iter()
            .map(|r| (r.weight, r.dimension))
            .collect();
        let expected = BTreeSet::from([
            (DominantWeight::zero(l), 1),
            (DominantWeight::fundamental(l, 1), l as u128 + 1),
            (DominantWeight::fundamental(l, l), l as u128 + 1),
        ]);
        ensure!(found == expected, "A{l}: {found:?}");
    }
    Ok(format!("ℓ = 5..={}", cap.at(8)))
}

fn rep_trivial_summand(cap: Cap) -> Outcome {
    let mut count = 0;
    for l in 4..=cap.at(8) {
        for d in l + 2..2 * (l + 1) {
            match min_trivial_summand(l, d) {
                Ok(t) => {
                    ensure!(t.min_trivial >= t.bound, "(ℓ, d) = ({l}, {d})");
                    count += 1;
                }
                Err(Error::Parameter(_)) => {}
                Err(e) => return fail(format!("(ℓ, d) = ({l}, {d}): {e}")),
            }
        }
    }
    Ok(format!("{count} admissible (ℓ, d)"))
}

fn rep_exceptional(_: Cap) -> Outcome {
    for (label, rank, i, want) in [(TypeLabel::E6, 6, 1, 27), (TypeLabel::E6, 6, 2, 78), (TypeLabel::E7, 7, 7, 56), (TypeLabel::E7, 7, 1, 133)] {
        let rs = lift(build_root_system(label, rank))?;
        let d = lift(weyl_dimension(&rs, &DominantWeight::fundamental(rank, i)))?;
        ensure!(d == want, "{label}, λ{i}: {d}");
    }
    Ok("27, 78, 56, 133".into())
}

fn roots_counts(cap: Cap) -> Outcome {
    for (label, lo) in [(TypeLabel::A, 1), (TypeLabel::B, 2), (TypeLabel::C, 2), (TypeLabel::D, 3)] {
        for rank in lo..=cap.at(8).max(lo) {
            let rs = lift(build_root_system(label, rank))?;
            ensure!(rs.positive_roots().len() == classical_positive_count(label, rank), "{}", system_name(label, rank));
        }
    }
    for (label, rank, want) in [(TypeLabel::E6, 6, 36), (TypeLabel::E7, 7, 63)] {
        let n = lift(build_root_system(label, rank))?.positive_roots().len();
        ensure!(n == want, "{label}: {n}");
    }
    Ok("classical formulas, 36, 63".into())
}

fn roots_parabolic(cap: Cap) -> Outcome {
    for l in 1..=cap.at(8) {
        let rs = lift(build_root_system(TypeLabel::A, l))?;
        for r in 1..=l {
            let dim = lift(parabolic_split(&rs, r))?.dimension;
            ensure!(dim == r * (l + 1 - r), "(A{l}, α{r}): {dim}");
        }
    }
    for l in 2..=cap.at(8).max(3) {
        let b = lift(parabolic_split(&lift(build_root_system(TypeLabel::B, l))?, 1))?.dimension;
        ensure!(b == 2 * l - 1, "(B{l}, α1)");
        let c = lift(parabolic_split(&lift(build_root_system(TypeLabel::C, l))?, l))?.dimension;
        ensure!(c == l * (l + 1) / 2, "(C{l}, α{l})");
        if l >= 3 {
            let rs = lift(build_root_system(TypeLabel::D, l))?;
            ensure!(lift(parabolic_split(&rs, 1))?.dimension == 2 * l - 2, "(D{l}, α1)");
            ensure!(lift(parabolic_split(&rs, l))?.dimension == l * (l - 1) / 2, "(D{l}, α{l})");
        }
    }
    let e6 = lift(parabolic_split(&lift(build_root_system(TypeLabel::E6, 6))?, 1))?.dimension;
    let e7 = lift(parabolic_split(&lift(build_root_system(TypeLabel::E7, 7))?, 7))?.dimension;
    ensure!(e6 == 16 && e7 == 27, "E6: {e6}, E7: {e7}");
    Ok("A closed form, B/C/D closed forms, 16, 27".into())
}

fn roots_deletions(_: Cap) -> Outcome {
    let e6 = lift(build_root_system(TypeLabel::E6, 6))?;
    let comps = lift(delete_vertices(&e6, &BTreeSet::from([1])))?;
    ensure!(comps.len() == 1 && comps[0].type_label == TypeLabel::D && comps[0].rank == 5, "E6 minus α1: {comps:?}");
    let e7 = lift(build_root_system(TypeLabel::E7, 7))?;
    let comps = lift(delete_vertices(&e7, &BTreeSet::from([7])))?;
    ensure!(comps.len() == 1 && comps[0].type_label == TypeLabel::E6, "E7 minus α7: {comps:?}");
    Ok("D5, E6".into())
}

fn sch_pieri(cap: Cap) -> Outcome {
    let mut count = 0;
    for n in 1..=cap.at(7) as u32 {
        for d in 0..=(cap.at(3) as u32).min(n - 1) {
            for idx in all_indices(d, n) {
                let a = lift(schubert_degree(&idx))?;
                let b = pieri_degree_oracle(&idx);
                ensure!(a == b, "{idx} in Gr({d},{n}): {a} ≠ {b}");
                count += 1;
            }
        }
    }
    Ok(format!("{count} indices"))
}

fn sch_linear(cap: Cap) -> Outcome {
    for d in 0..=cap.at(10) as u32 {
        for n in d + 1..=d + 4 {
            let idx = lift(SchubertIndex::linear_projective(d, n))?;
            ensure!(lift(schubert_degree(&idx))? == 1, "Ω(1..{}) in Gr({d},{n})", d + 1);
        }
    }
    let full = lift(SchubertIndex::full(1, 3))?;
    ensure!(lift(schubert_degree(&full))? == 2, "Gr(1,3)");
    Ok(format!("d ≤ {}", cap.at(10)))
}
