//! Plücker coordinates of parametrized subspaces and the degrees of the
//! resulting curves in Grassmannians.
//!
//! A [`ParamSubspace`] is a `k × N` matrix of binary forms in `(u0, u1)`.
//! Its Plücker vector is the list of maximal minors over column subsets in
//! lexicographic order; the degree of the curve is the common degree of the
//! minors after removing their gcd.

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{param, Error, Result};
use crate::linalg::{kernel, rank, solve, SpanSolver};
use crate::matrix_lie::{isotropy_check, BilinearForm};
use crate::poly::{homogeneous_gcd, trig_normal_form, Poly2};
use crate::scalar::{frac, i_unit, int, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct ParamSubspace {
    rows: Vec<Vec<Poly2>>,
    ambient: usize,
}

impl ParamSubspace {
    /// Rows must have equal length, each row must be homogeneous of a single
    /// degree, and the minors must not all vanish.
    pub fn new(rows: Vec<Vec<Poly2>>) -> Result<Self> {
        let ambient = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || rows.len() > ambient {
            return param(format!("{} rows in C^{}", rows.len(), ambient));
        }
        if rows.iter().any(|r| r.len() != ambient) {
            return param("rows of unequal length");
        }
        for (i, row) in rows.iter().enumerate() {
            let degrees: Vec<u32> = row.iter().filter(|p| !p.is_zero()).map(|p| {
                p.homogeneous_degree().ok_or_else(|| Error::Parameter(format!("row {i} has a non-homogeneous entry")))
            }).collect::<Result<_>>()?;
            if degrees.iter().any(|&d| d != degrees[0]) {
                return param(format!("row {i} mixes degrees"));
            }
        }
        let s = ParamSubspace { rows, ambient };
        if s.minors().iter().all(Poly2::is_zero) {
            return Err(Error::Degenerate("subspace has rank below its row count for every parameter".into()));
        }
        Ok(s)
    }

    pub fn constant(rows: &[Vec<Scalar>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().cloned().map(Poly2::constant).collect()).collect())
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rows(&self) -> &[Vec<Poly2>] {
        &self.rows
    }

    pub fn eval(&self, u0: &Scalar, u1: &Scalar) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|r| r.iter().map(|p| p.eval(u0, u1)).collect()).collect()
    }

    /// `row[target] += factor * row[source]`, keeping rows homogeneous.
    pub fn add_row_multiple(&self, target: usize, source: usize, factor: &Poly2) -> Result<Self> {
        if target == source || target >= self.k() || source >= self.k() {
            return param("row operation indices");
        }
        let mut rows = self.rows.clone();
        for (t, s) in rows[target].iter_mut().zip(&self.rows[source]) {
            *t = &*t + &(factor * s);
        }
        Self::new(rows)
    }

    /// Substitutes `u0 -> a u0 + b u1`, `u1 -> c u0 + d u1`; requires
    /// `ad - bc != 0`.
    pub fn reparametrize(&self, a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar) -> Result<Self> {
        if (a * d - b * c).is_zero() {
            return param("reparametrization matrix is singular");
        }
        Self::new(
            self.rows
                .iter()
                .map(|r| r.iter().map(|p| p.compose_linear(a, b, c, d)).collect())
                .collect(),
        )
    }

    fn minors(&self) -> Vec<Poly2> {
        (0..self.ambient)
            .combinations(self.k())
            .map(|cols| {
                let m: Vec<Vec<Poly2>> =
                    self.rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
                determinant(&m)
            })
            .collect()
    }

    /// Whether `form(row_i, row_j)` vanishes identically for all rows.
    pub fn is_isotropic(&self, form: &BilinearForm) -> Result<bool> {
        if form.dim() != self.ambient {
            return param(format!("form on C^{} for a subspace of C^{}", form.dim(), self.ambient));
        }
        for (i, v) in self.rows.iter().enumerate() {
            for w in &self.rows[i..] {
                if !poly_form(form, v, w).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `v^T M w` with polynomial vectors.
pub fn poly_form(form: &BilinearForm, v: &[Poly2], w: &[Poly2]) -> Poly2 {
    let n = form.dim();
    let mut out = Poly2::zero();
    for i in 0..n {
        if v[i].is_zero() {
            continue;
        }
        for j in 0..n {
            let m = form.matrix.get(i, j);
            if !m.is_zero() && !w[j].is_zero() {
                out = out + (&v[i] * &w[j]).scale(m);
            }
        }
    }
    out
}

/// Laplace expansion along the first row, skipping zero entries.
pub fn determinant(m: &[Vec<Poly2>]) -> Poly2 {
    fn go(m: &[Vec<Poly2>], row: usize, cols: &mut Vec<usize>) -> Poly2 {
        if row == m.len() {
            return Poly2::one();
        }
        let mut out = Poly2::zero();
        for pos in 0..cols.len() {
            let c = cols[pos];
            if m[row][c].is_zero() {
                continue;
            }
            cols.remove(pos);
            let sub = go(m, row + 1, cols);
            cols.insert(pos, c);
            if sub.is_zero() {
                continue;
            }
            let term = &m[row][c] * &sub;
            out = if pos % 2 == 0 { out + term } else { out - term };
        }
        out
    }
    let mut cols: Vec<usize> = (0..m.len()).collect();
    go(m, 0, &mut cols)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlueckerVector {
    pub k: usize,
    pub ambient: usize,
    /// Column subsets, lexicographic, 0-based.
    pub subsets: Vec<Vec<usize>>,
    #[serde(serialize_with = "serialize_polys")]
    pub coords: Vec<Poly2>,
}

fn serialize_polys<S: serde::Serializer>(ps: &[Poly2], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ps.iter().map(ToString::to_string))
}

impl PlueckerVector {
    pub fn coordinate(&self, subset: &[usize]) -> Option<&Poly2> {
        self.subsets.iter().position(|s| s == subset).map(|i| &self.coords[i])
    }

    pub fn nonzero_count(&self) -> usize {
        self.coords.iter().filter(|p| !p.is_zero()).count()
    }

    /// `p` on an arbitrary index sequence: zero on repeats, sign of the
    /// sorting permutation otherwise.
    fn signed(&self, seq: &[usize]) -> Poly2 {
        let mut sorted = seq.to_vec();
        let mut sign = false;
        for i in 0..sorted.len() {
            for j in 0..sorted.len() - 1 - i {
                if sorted[j] > sorted[j + 1] {
                    sorted.swap(j, j + 1);
                    sign = !sign;
                }
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Poly2::zero();
        }
        let p = self.coordinate(&sorted).cloned().unwrap_or_else(Poly2::zero);
        if sign { -p } else { p }
    }

    /// Checks every Grassmann–Plücker relation
    /// `Σ_l (-1)^l p(I, j_l) p(J \ j_l) = 0` with `|I| = k-1`, `|J| = k+1`.
    pub fn satisfies_relations(&self) -> bool {
        let k = self.k;
        if k == 0 || k >= self.ambient {
            return true;
        }
        for i_set in (0..self.ambient).combinations(k - 1) {
            for j_set in (0..self.ambient).combinations(k + 1) {
                let mut total = Poly2::zero();
                for l in 0..=k {
                    let mut left = i_set.clone();
                    left.push(j_set[l]);
                    let right: Vec<usize> =
                        j_set.iter().enumerate().filter(|&(m, _)| m != l).map(|(_, &x)| x).collect();
                    let term = &self.signed(&left) * &self.signed(&right);
                    total = if l % 2 == 0 { total + term } else { total - term };
                }
                if !total.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

pub fn pluecker_coords(s: &ParamSubspace) -> PlueckerVector {
    PlueckerVector {
        k: s.k(),
        ambient: s.ambient(),
        subsets: (0..s.ambient()).combinations(s.k()).collect(),
        coords: s.minors(),
    }
}

/// Common degree of the Plücker coordinates after dividing out their gcd.
pub fn curve_degree(s: &ParamSubspace) -> Result<u32> {
    degree_of_coordinates(&pluecker_coords(s).coords)
}

/// Degree of the map `u -> [p_0(u) : ... : p_m(u)]` for binary forms of
/// one degree.
pub fn degree_of_coordinates(coords: &[Poly2]) -> Result<u32> {
    let nonzero: Vec<&Poly2> = coords.iter().filter(|p| !p.is_zero()).collect();
    let first = nonzero.first().ok_or_else(|| Error::Degenerate("all coordinates vanish".into()))?;
    let d = first
        .homogeneous_degree()
        .ok_or_else(|| Error::Parameter("coordinates are not binary forms".into()))?;
    if nonzero.iter().any(|p| p.homogeneous_degree() != Some(d)) {
        return Err(Error::Parameter("coordinates have different degrees".into()));
    }
    let g = homogeneous_gcd(coords);
    Ok(d - g.total_degree().unwrap_or(0))
}

/// Completes `L` by the line `L^⊥ ∩ V2`; fails unless that intersection is
/// one-dimensional.
pub fn lagrangian_extension(
    l_basis: &[Vec<Scalar>],
    form: &BilinearForm,
    v2_basis: &[Vec<Scalar>],
) -> Result<Vec<Vec<Scalar>>> {
    if l_basis.iter().chain(v2_basis).any(|v| v.len() != form.dim()) {
        return param("vector length does not match the form");
    }
    if rank(l_basis) != l_basis.len() {
        return Err(Error::Degenerate("L basis is dependent".into()));
    }
    let rows: Vec<Vec<Scalar>> = l_basis
        .iter()
        .map(|l| v2_basis.iter().map(|v| form.eval(l, v)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let ker = if rows.is_empty() {
        (0..v2_basis.len()).map(|j| unit(v2_basis.len(), j)).collect()
    } else {
        kernel(&rows, v2_basis.len())
    };
    if ker.len() != 1 {
        return Err(Error::Degenerate(format!("L^⊥ ∩ V2 has dimension {}", ker.len())));
    }
    let w = combine(&ker[0], v2_basis, form.dim());
    let mut out = l_basis.to_vec();
    out.push(w);
    if !isotropy_check(&out, form)? {
        return Err(Error::Consistency("extension is not totally isotropic".into()));
    }
    Ok(out)
}

fn unit(n: usize, j: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[j] = Scalar::one();
    v
}

fn combine(coeffs: &[Scalar], basis: &[Vec<Scalar>], len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); len];
    for (c, b) in coeffs.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            *o = &*o + c * x;
        }
    }
    out
}

fn const_row(v: &[Scalar]) -> Vec<Poly2> {
    v.iter().cloned().map(Poly2::constant).collect()
}

/// `a(u) v + b(u) w` for binary forms `a, b`.
fn moving_row(a: &Poly2, v: &[Scalar], b: &Poly2, w: &[Scalar]) -> Vec<Poly2> {
    v.iter().zip(w).map(|(x, y)| &a.scale(x) + &b.scale(y)).collect()
}

/// The image of a pencil of hyperplanes `L(u) = ker(u0 φa + u1 φb) ⊂ V1`
/// under `L -> L ⊕ (L^⊥ ∩ V2)`, together with its two pieces.
#[derive(Debug, Clone)]
pub struct PencilFamily {
    pub full: ParamSubspace,
    /// `L(u)` alone, a curve in `G(n-1, V1)`.
    pub hyperplane_part: ParamSubspace,
    /// The line `L(u)^⊥ ∩ V2`, a curve in `P(V2)`.
    pub complement_part: ParamSubspace,
}

/// `φa, φb` are functionals on `V1` in the coordinates of `v1_basis`; they
/// must be independent.
pub fn lagrangian_pencil(
    form: &BilinearForm,
    v1_basis: &[Vec<Scalar>],
    v2_basis: &[Vec<Scalar>],
    phi_a: &[Scalar],
    phi_b: &[Scalar],
) -> Result<PencilFamily> {
    let n = v1_basis.len();
    if v2_basis.len() != n || phi_a.len() != n || phi_b.len() != n || n < 2 {
        return param("pencil needs dim V1 = dim V2 = len φ ≥ 2");
    }
    let dim = form.dim();
    let phis = vec![phi_a.to_vec(), phi_b.to_vec()];
    if rank(&phis) != 2 {
        return param("φa and φb are dependent");
    }
    let common: Vec<Vec<Scalar>> = kernel(&phis, n).iter().map(|c| combine(c, v1_basis, dim)).collect();
    // dual vectors p, q with φa(p) = 1, φb(p) = 0, φa(q) = 0, φb(q) = 1,
    // supported on two coordinates
    let (i, j) = (0..n)
        .tuple_combinations()
        .find(|&(i, j)| !(&phi_a[i] * &phi_b[j] - &phi_a[j] * &phi_b[i]).is_zero())
        .expect("rank 2 has a nonzero 2x2 minor");
    let sub = vec![vec![phi_a[i].clone(), phi_a[j].clone()], vec![phi_b[i].clone(), phi_b[j].clone()]];
    let lift = |rhs: [i64; 2]| -> Vec<Scalar> {
        let x = solve(&sub, &[int(rhs[0]), int(rhs[1])]).expect("invertible 2x2");
        let mut c = vec![Scalar::zero(); n];
        c[i] = x[0].clone();
        c[j] = x[1].clone();
        combine(&c, v1_basis, dim)
    };
    let p = lift([1, 0]);
    let q = lift([0, 1]);
    // w_a, w_b ∈ V2 with form(x, w_a) = φa(x) on V1
    let gram: Vec<Vec<Scalar>> = v1_basis
        .iter()
        .map(|x| v2_basis.iter().map(|y| form.eval(x, y)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let w_for = |phi: &[Scalar]| -> Result<Vec<Scalar>> {
        let c = solve(&gram, phi).ok_or_else(|| Error::Degenerate("form pairs V1 and V2 degenerately".into()))?;
        Ok(combine(&c, v2_basis, dim))
    };
    let w_a = w_for(phi_a)?;
    let w_b = w_for(phi_b)?;

    let u0 = Poly2::x();
    let u1 = Poly2::y();
    let x_row = moving_row(&u1, &p, &-&u0, &q);
    let w_row = moving_row(&u0, &w_a, &u1, &w_b);
    let mut hyper_rows: Vec<Vec<Poly2>> = common.iter().map(|v| const_row(v)).collect();
    hyper_rows.push(x_row);
    let mut full_rows = hyper_rows.clone();
    full_rows.push(w_row.clone());
    Ok(PencilFamily {
        full: ParamSubspace::new(full_rows)?,
        hyperplane_part: ParamSubspace::new(hyper_rows)?,
        complement_part: ParamSubspace::new(vec![w_row])?,
    })
}

/// `V1 = ⟨e_{n+1}..e_{2n}⟩`, `V2 = ⟨e_i - e_{n+i}⟩` for the symplectic form.
pub fn symplectic_splitting(n: usize) -> (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>) {
    let v1 = (n..2 * n).map(|j| unit(2 * n, j)).collect();
    let v2 = (0..n)
        .map(|i| {
            let mut v = unit(2 * n, i);
            v[n + i] = int(-1);
            v
        })
        .collect();
    (v1, v2)
}

/// `V1 = ⟨e_1..e_n⟩`, `V2 = ⟨e_{n+1}..e_{2n}⟩` for the split symmetric form.
pub fn split_splitting(n: usize) -> (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>) {
    ((0..n).map(|j| unit(2 * n, j)).collect(), (n..2 * n).map(|j| unit(2 * n, j)).collect())
}

/// `⟨e_0, …, e_{k-2}, u0 e_{k-1} + u1 e_k⟩ ⊂ C^ambient`.
pub fn grassmannian_line(k: usize, ambient: usize) -> Result<ParamSubspace> {
    if k == 0 || ambient < k + 1 {
        return param(format!("line of {k}-planes needs ambient ≥ {}", k + 1));
    }
    let mut rows: Vec<Vec<Poly2>> = (0..k - 1).map(|j| const_row(&unit(ambient, j))).collect();
    rows.push(moving_row(&Poly2::x(), &unit(ambient, k - 1), &Poly2::y(), &unit(ambient, k)));
    ParamSubspace::new(rows)
}

/// `⟨e_1, …, e_{n-1}, u0 e_n + u1 e_{2n}⟩ ⊂ C^{2n}` (1-based), Lagrangian
/// for the symplectic form.
pub fn symplectic_line(n: usize) -> Result<ParamSubspace> {
    if n < 1 {
        return param("n ≥ 1");
    }
    let mut rows: Vec<Vec<Poly2>> = (0..n - 1).map(|j| const_row(&unit(2 * n, j))).collect();
    rows.push(moving_row(&Poly2::x(), &unit(2 * n, n - 1), &Poly2::y(), &unit(2 * n, 2 * n - 1)));
    ParamSubspace::new(rows)
}

/// `[u0, u1] × [v0, v1] -> [(u0v0 + u1v1)/2, (u0v0 - u1v1)/2i,
/// (u0v1 - u1v0)/2, (u0v1 + u1v0)/2i]`, an isomorphism `P^1 × P^1 -> Q_2`.
/// `v` is fixed and `u` varies.
pub fn segre_quadric_line(v0: &Scalar, v1: &Scalar) -> Result<ParamSubspace> {
    let half = frac(1, 2);
    let half_i = &half / i_unit();
    let u0 = Poly2::x();
    let u1 = Poly2::y();
    let row = vec![
        &u0.scale(&(v0 * &half)) + &u1.scale(&(v1 * &half)),
        &u0.scale(&(v0 * &half_i)) - &u1.scale(&(v1 * &half_i)),
        &u0.scale(&(v1 * &half)) - &u1.scale(&(v0 * &half)),
        &u0.scale(&(v1 * &half_i)) + &u1.scale(&(v0 * &half_i)),
    ];
    ParamSubspace::new(vec![row])
}

/// `[u0^2 + u1^2, i(u0^2 - u1^2), 2i u0 u1, 0]`: the conic
/// `z_3 = z_0^2 + z_1^2 + z_2^2 = 0` as a quadratic image of `P^1`.
pub fn veronese_conic() -> ParamSubspace {
    let i = i_unit();
    let u0sq = Poly2::monomial(Scalar::one(), 2, 0);
    let u1sq = Poly2::monomial(Scalar::one(), 0, 2);
    let row = vec![
        &u0sq + &u1sq,
        (&u0sq - &u1sq).scale(&i),
        Poly2::monomial(&i * int(2), 1, 1),
        Poly2::zero(),
    ];
    ParamSubspace::new(vec![row]).expect("conic is nondegenerate")
}

/// Geodesics through `[1, i, 0, 0]` on `Q_2` as trigonometric point
/// families in `(c, s) = (cos t, sin t)`.
pub fn conic_geodesics() -> [Vec<Poly2>; 2] {
    let i = i_unit();
    let c = Poly2::x();
    let s = Poly2::y();
    [
        vec![Poly2::one(), c.scale(&i), s.scale(&i), Poly2::zero()],
        vec![c, Poly2::constant(i), s, Poly2::zero()],
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parametrization {
    /// Binary forms in `(u0, u1)`.
    Polynomial,
    /// Polynomials in `(cos, sin)` of one angle.
    Trigonometric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub lies_on: bool,
    /// Set when every coordinate vanishes identically.
    pub degenerate: bool,
}

/// Whether `q(z(t), z(t)) = 0` identically along the family.
pub fn quadric_membership(point: &[Poly2], kind: Parametrization, q: &BilinearForm) -> Result<Membership> {
    if point.len() != q.dim() {
        return param(format!("point in C^{} for a form on C^{}", point.len(), q.dim()));
    }
    let degenerate = point.iter().all(Poly2::is_zero);
    let value = poly_form(q, point, point);
    let value = match kind {
        Parametrization::Polynomial => value,
        Parametrization::Trigonometric => trig_normal_form(&value),
    };
    Ok(Membership { lies_on: value.is_zero(), degenerate })
}

/// For `L` totally isotropic of dimension `n` and isotropic `v ∉ L`, finds
/// an `n`-plane `H ⊕ ⟨v⟩ ⊂ L + ⟨v⟩`, with `H` a hyperplane of `L`, on
/// which the form does not vanish. `H` is the kernel of a functional on `L`
/// with coefficients in `{-2..2}`, tried in lexicographic order.
pub fn hyperplane_witness(
    n: usize,
    v: &[Scalar],
    l_basis: &[Vec<Scalar>],
    form: &BilinearForm,
) -> Result<Vec<Vec<Scalar>>> {
    if !(2..=5).contains(&n) || l_basis.len() != n {
        return param(format!("need 2 ≤ n ≤ 5 and dim L = n, got n = {n}, dim L = {}", l_basis.len()));
    }
    if v.len() != form.dim() || l_basis.iter().any(|l| l.len() != form.dim()) {
        return param("vector length does not match the form");
    }
    let span = SpanSolver::from_vectors(form.dim(), l_basis);
    if span.rank() != n {
        return Err(Error::Degenerate("L basis is dependent".into()));
    }
    if span.contains(v) {
        return param("v lies in L");
    }
    if !isotropy_check(l_basis, form)? {
        return param("L is not totally isotropic");
    }
    if !form.eval(v, v)?.is_zero() {
        return param("v is not isotropic");
    }
    for phi in std::iter::repeat(-2i64..=2).take(n).multi_cartesian_product() {
        if phi.iter().all(|&x| x == 0) {
            continue;
        }
        let row = vec![phi.iter().map(|&x| int(x)).collect::<Vec<_>>()];
        let mut plane: Vec<Vec<Scalar>> =
            kernel(&row, n).iter().map(|c| combine(c, l_basis, form.dim())).collect();
        plane.push(v.to_vec());
        if !isotropy_check(&plane, form)? {
            return Ok(plane);
        }
    }
    Err(Error::SearchExhausted(format!("no non-isotropic plane for n = {n}")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapReport {
    pub map_name: String,
    pub ambient: String,
    pub degree: u32,
    pub membership_checks: Vec<NamedCheck>,
}

pub const MAP_NAMES: &[&str] =
    &["grassmannian-line", "symplectic-line", "quadric-line", "veronese-conic", "ci-pencil", "diii-pencil"];

fn check(name: &str, holds: bool) -> NamedCheck {
    NamedCheck { name: name.to_string(), holds }
}

/// Degree and membership checks for one of the maps in [`MAP_NAMES`].
/// `n` is the size parameter: `k` for `grassmannian-line` (a line of
/// `k`-planes in `C^{k+1}`), and the half-dimension for the `C^{2n}` maps.
pub fn named_map(name: &str, n: usize) -> Result<MapReport> {
    let q2 = BilinearForm::sum_of_squares(4);
    let (ambient, s, mut checks) = match name {
        "grassmannian-line" => {
            let s = grassmannian_line(n, n + 1)?;
            (format!("G({n},{})", n + 1), s, vec![])
        }
        "symplectic-line" => {
            let s = symplectic_line(n)?;
            let iso = s.is_isotropic(&BilinearForm::symplectic(n))?;
            (format!("G({n},{})", 2 * n), s, vec![check("lagrangian", iso)])
        }
        "quadric-line" => {
            let s = segre_quadric_line(&Scalar::zero(), &Scalar::one())?;
            let on = quadric_membership(&s.rows()[0], Parametrization::Polynomial, &q2)?.lies_on;
            ("P^3".to_string(), s, vec![check("on_Q2", on)])
        }
        "veronese-conic" => {
            let s = veronese_conic();
            let on = quadric_membership(&s.rows()[0], Parametrization::Polynomial, &q2)?.lies_on;
            let [c1, c2] = conic_geodesics();
            let g1 = quadric_membership(&c1, Parametrization::Trigonometric, &q2)?.lies_on;
            let g2 = quadric_membership(&c2, Parametrization::Trigonometric, &q2)?.lies_on;
            ("P^3".to_string(), s, vec![check("on_Q2", on), check("geodesic_c1_on_Q2", g1), check("geodesic_c2_on_Q2", g2)])
        }
        "ci-pencil" | "diii-pencil" => {
            if n < 2 {
                return param("pencils need n ≥ 2");
            }
            let (form, (v1, v2)) = if name == "ci-pencil" {
                (BilinearForm::symplectic(n), symplectic_splitting(n))
            } else {
                (BilinearForm::split_symmetric(n), split_splitting(n))
            };
            let fam = lagrangian_pencil(&form, &v1, &v2, &unit(n, 0), &unit(n, n - 1))?;
            let iso = fam.full.is_isotropic(&form)?;
            let split = curve_degree(&fam.hyperplane_part)? + curve_degree(&fam.complement_part)?;
            (format!("G({n},{})", 2 * n), fam.full, vec![check("isotropic", iso), check("degree_splits_1_plus_1", split == 2)])
        }
        _ => return param(format!("unknown map {name:?}; known: {}", MAP_NAMES.join(", "))),
    };
    let pv = pluecker_coords(&s);
    if pv.ambient <= 6 {
        checks.push(check("pluecker_relations", pv.satisfies_relations()));
    }
    Ok(MapReport { map_name: name.to_string(), ambient, degree: curve_degree(&s)?, membership_checks: checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_coordinate_plane() {
        let s = ParamSubspace::constant(&[unit(4, 0), unit(4, 1)]).unwrap();
        let pv = pluecker_coords(&s);
        assert_eq!(pv.subsets.len(), 6);
        assert_eq!(pv.coordinate(&[0, 1]), Some(&Poly2::one()));
        assert_eq!(pv.nonzero_count(), 1);
        assert_eq!(curve_degree(&s).unwrap(), 0);
        assert!(pv.satisfies_relations());
    }

    #[test]
    fn grassmannian_line_has_two_linear_coordinates() {
        let s = grassmannian_line(3, 5).unwrap();
        let pv = pluecker_coords(&s);
        assert_eq!(pv.nonzero_count(), 2);
        assert_eq!(pv.coordinate(&[0, 1, 2]), Some(&Poly2::x()));
        assert_eq!(pv.coordinate(&[0, 1, 3]), Some(&Poly2::y()));
        assert_eq!(curve_degree(&s).unwrap(), 1);
        assert!(pv.satisfies_relations());
    }

    #[test]
    fn conic_and_segre_degrees() {
        let conic = veronese_conic();
        assert_eq!(curve_degree(&conic).unwrap(), 2);
        let q = BilinearForm::sum_of_squares(4);
        let m = quadric_membership(&conic.rows()[0], Parametrization::Polynomial, &q).unwrap();
        assert!(m.lies_on && !m.degenerate);
        for (v0, v1) in [(0, 1), (1, 0), (1, 1), (2, -3)] {
            let line = segre_quadric_line(&int(v0), &int(v1)).unwrap();
            assert_eq!(curve_degree(&line).unwrap(), 1);
            assert!(quadric_membership(&line.rows()[0], Parametrization::Polynomial, &q).unwrap().lies_on);
        }
    }

    #[test]
    fn geodesics_on_the_quadric() {
        let q = BilinearForm::sum_of_squares(4);
        for c in conic_geodesics() {
            assert!(quadric_membership(&c, Parametrization::Trigonometric, &q).unwrap().lies_on);
        }
        let zero = vec![Poly2::zero(); 4];
        let m = quadric_membership(&zero, Parametrization::Polynomial, &q).unwrap();
        assert!(m.lies_on && m.degenerate);
        // a line through [1,0,0,0] and [0,1,0,0] is not on the quadric
        let off = vec![Poly2::x(), Poly2::y(), Poly2::zero(), Poly2::zero()];
        assert!(!quadric_membership(&off, Parametrization::Polynomial, &q).unwrap().lies_on);
    }

    #[test]
    fn degenerate_subspace_rejected() {
        let r = ParamSubspace::constant(&[unit(3, 0), unit(3, 0)]);
        assert!(matches!(r, Err(Error::Degenerate(_))));
    }

    #[test]
    fn extensions_are_isotropic() {
        let omega = BilinearForm::symplectic(2);
        let (_, v2) = symplectic_splitting(2);
        let w = lagrangian_extension(&[unit(4, 0)], &omega, &v2).unwrap();
        assert_eq!(w.len(), 2);
        let omega3 = BilinearForm::symplectic(3);
        let (v1, v2) = symplectic_splitting(3);
        let w = lagrangian_extension(&v1[..2], &omega3, &v2).unwrap();
        assert_eq!(rank(&w), 3);
        let s = BilinearForm::split_symmetric(3);
        let (v1, v2) = split_splitting(3);
        assert_eq!(lagrangian_extension(&v1[..2], &s, &v2).unwrap().len(), 3);
        // codimension two in V1 leaves a 2-dimensional complement
        assert!(matches!(lagrangian_extension(&v1[..1], &s, &v2), Err(Error::Degenerate(_))));
    }

    #[test]
    fn pencil_has_degree_two() {
        for n in 2..=4 {
            let omega = BilinearForm::symplectic(n);
            let (v1, v2) = symplectic_splitting(n);
            let fam = lagrangian_pencil(&omega, &v1, &v2, &unit(n, 0), &unit(n, n - 1)).unwrap();
            assert!(fam.full.is_isotropic(&omega).unwrap());
            assert_eq!(curve_degree(&fam.full).unwrap(), 2);
            assert_eq!(curve_degree(&fam.hyperplane_part).unwrap(), 1);
            assert_eq!(curve_degree(&fam.complement_part).unwrap(), 1);
        }
    }

    #[test]
    fn symplectic_line_is_lagrangian_of_degree_one() {
        for n in 2..=4 {
            let l = symplectic_line(n).unwrap();
            assert!(l.is_isotropic(&BilinearForm::symplectic(n)).unwrap());
            assert_eq!(curve_degree(&l).unwrap(), 1);
        }
    }

    #[test]
    fn named_maps() {
        let degrees: Vec<u32> = MAP_NAMES.iter().map(|m| named_map(m, 3).unwrap().degree).collect();
        assert_eq!(degrees, vec![1, 1, 1, 2, 2, 2]);
        for m in MAP_NAMES {
            assert!(named_map(m, 3).unwrap().membership_checks.iter().all(|c| c.holds), "{m}");
        }
        assert!(named_map("nope", 3).is_err());
    }

    #[test]
    fn witness_planes() {
        let omega = BilinearForm::symplectic(2);
        let (v1, _) = symplectic_splitting(2);
        let mut v = unit(4, 2);
        v[0] = int(1);
        // v = e_1 + e_3 (1-based) lies off V1 = ⟨e_3, e_4⟩
        let plane = hyperplane_witness(2, &v, &v1, &omega).unwrap();
        assert_eq!(plane.len(), 2);
        assert!(!isotropy_check(&plane, &omega).unwrap());
        assert!(hyperplane_witness(2, &v1[0], &v1, &omega).is_err());
        // e_1 + e_3 is not isotropic for the split form
        let s = BilinearForm::split_symmetric(2);
        let (_, w2) = split_splitting(2);
        assert!(matches!(hyperplane_witness(2, &v, &w2, &s), Err(Error::Parameter(_))));
    }
}
