//! Explicit matrix Lie algebras over the Gaussian rationals: Cartan
//! decompositions of `so(m+2)`, Lie-triple-system and J-stability tests,
//! the embedding `su(n+1) → so(2n+2)`, and bilinear-form isotropy.
//!
//! Everything here is exact. Span membership goes through
//! [`SpanSolver`](crate::linalg::SpanSolver) on flattened matrices.

use num_traits::{One, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{param, Error, Result};
use crate::linalg::{rank, SpanSolver};
use crate::scalar::{format_scalar, i_unit, int, is_real, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// `E_ij`, 0-based.
    pub fn elementary(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.set(i, j, Scalar::one());
        m
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols);
        ExactMatrix { rows, cols, data }
    }

    /// `[[a, b], [c, d]]` from four equally sized square blocks.
    pub fn block2(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let n = a.rows;
        let mut m = Self::zeros(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, a.get(i, j).clone());
                m.set(i, j + n, b.get(i, j).clone());
                m.set(i + n, j, c.get(i, j).clone());
                m.set(i + n, j + n, d.get(i, j).clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn as_flat(&self) -> &[Scalar] {
        &self.data
    }

    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(is_real)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn conj_transpose(&self) -> Self {
        let mut t = self.transpose();
        for x in t.data.iter_mut() {
            *x = x.conj();
        }
        t
    }

    pub fn real_part(&self) -> Self {
        self.map(|x| Scalar::new(x.re.clone(), Zero::zero()))
    }

    pub fn imag_part(&self) -> Self {
        self.map(|x| Scalar::new(x.im.clone(), Zero::zero()))
    }

    fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        self.map(|x| x * s)
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x)
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose().neg()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    fn same_shape(&self, other: &Self, op: &str) -> Result<()> {
        if self.rows == other.rows && self.cols == other.cols {
            Ok(())
        } else {
            param(format!(
                "{op}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "add")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(ExactMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "sub")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(ExactMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return param(format!(
                "mul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = &out.data[idx] + a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return param(format!("apply: {} columns, vector of length {}", self.cols, v.len()));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).fold(Scalar::zero(), |acc, j| acc + self.get(i, j) * &v[j]))
            .collect())
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format_scalar(self.get(i, j))).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

/// `[x, y] = xy - yx`.
pub fn bracket(x: &ExactMatrix, y: &ExactMatrix) -> Result<ExactMatrix> {
    if x.rows != x.cols || y.rows != y.cols {
        return param("bracket needs square matrices");
    }
    x.mul(y)?.sub(&y.mul(x)?)
}

fn solver_for(basis: &[ExactMatrix], len: usize) -> SpanSolver {
    let mut s = SpanSolver::new(len);
    for b in basis {
        s.push(b.as_flat());
    }
    s
}

/// A Cartan decomposition `g = k + p` with a complex structure `J` on `p`.
#[derive(Debug, Clone, Serialize)]
pub struct CartanPair {
    pub ambient: String,
    pub k_basis: Vec<ExactMatrix>,
    pub p_basis: Vec<ExactMatrix>,
    /// `J` in `p_basis` coordinates; column `j` is the image of `p_basis[j]`.
    pub j: ExactMatrix,
    #[serde(skip)]
    size: usize,
    #[serde(skip)]
    k_solver: SpanSolver,
    #[serde(skip)]
    p_solver: SpanSolver,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CartanInvariants {
    pub k_closed: bool,
    pub k_p_in_p: bool,
    pub p_p_in_k: bool,
    pub j_squared_is_minus_identity: bool,
    pub j_commutes_with_ad_k: bool,
}

impl CartanInvariants {
    pub fn all(&self) -> bool {
        self.k_closed && self.k_p_in_p && self.p_p_in_k && self.j_squared_is_minus_identity && self.j_commutes_with_ad_k
    }
}

impl CartanPair {
    pub fn new(ambient: impl Into<String>, k_basis: Vec<ExactMatrix>, p_basis: Vec<ExactMatrix>, j: ExactMatrix) -> Result<Self> {
        let size = p_basis.first().or(k_basis.first()).map_or(0, ExactMatrix::rows);
        if k_basis.iter().chain(&p_basis).any(|m| m.rows != size || m.cols != size) {
            return param("Cartan pair bases must be square matrices of one size");
        }
        if j.rows != p_basis.len() || j.cols != p_basis.len() {
            return param("J must act on p coordinates");
        }
        let len = size * size;
        let k_solver = solver_for(&k_basis, len);
        let p_solver = solver_for(&p_basis, len);
        if k_solver.rank() != k_basis.len() || p_solver.rank() != p_basis.len() {
            return param("Cartan pair bases must be linearly independent");
        }
        Ok(CartanPair { ambient: ambient.into(), k_basis, p_basis, j, size, k_solver, p_solver })
    }

    pub fn matrix_size(&self) -> usize {
        self.size
    }

    pub fn p_coordinates(&self, x: &ExactMatrix) -> Option<Vec<Scalar>> {
        self.p_solver.coordinates(x.as_flat())
    }

    pub fn from_p_coordinates(&self, coords: &[Scalar]) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.size, self.size);
        for (c, b) in coords.iter().zip(&self.p_basis) {
            if !c.is_zero() {
                out = out.add(&b.scale(c)).expect("p basis shapes agree");
            }
        }
        out
    }

    pub fn in_k(&self, x: &ExactMatrix) -> bool {
        self.k_solver.contains(x.as_flat())
    }

    pub fn in_p(&self, x: &ExactMatrix) -> bool {
        self.p_solver.contains(x.as_flat())
    }

    pub fn apply_j(&self, x: &ExactMatrix) -> Result<ExactMatrix> {
        let coords = self
            .p_coordinates(x)
            .ok_or_else(|| Error::Parameter("J is only defined on p".into()))?;
        Ok(self.from_p_coordinates(&self.j.apply(&coords)?))
    }

    /// `ad(x)` restricted to `p`, in `p_basis` coordinates.
    fn ad_on_p(&self, x: &ExactMatrix) -> Result<ExactMatrix> {
        let n = self.p_basis.len();
        let mut m = ExactMatrix::zeros(n, n);
        for (col, b) in self.p_basis.iter().enumerate() {
            let image = bracket(x, b)?;
            let coords = self
                .p_coordinates(&image)
                .ok_or_else(|| Error::Consistency("[k, p] left p".into()))?;
            for (row, c) in coords.into_iter().enumerate() {
                m.set(row, col, c);
            }
        }
        Ok(m)
    }

    pub fn check_invariants(&self) -> Result<CartanInvariants> {
        let mut k_closed = true;
        for (i, x) in self.k_basis.iter().enumerate() {
            for y in &self.k_basis[i + 1..] {
                k_closed &= self.in_k(&bracket(x, y)?);
            }
        }
        let mut k_p_in_p = true;
        for x in &self.k_basis {
            for y in &self.p_basis {
                k_p_in_p &= self.in_p(&bracket(x, y)?);
            }
        }
        let mut p_p_in_k = true;
        for (i, x) in self.p_basis.iter().enumerate() {
            for y in &self.p_basis[i + 1..] {
                p_p_in_k &= self.in_k(&bracket(x, y)?);
            }
        }
        let n = self.p_basis.len();
        let j_squared_is_minus_identity = self.j.mul(&self.j)? == ExactMatrix::identity(n).neg();
        let mut j_commutes_with_ad_k = k_p_in_p;
        if k_p_in_p {
            for x in &self.k_basis {
                let ad = self.ad_on_p(x)?;
                j_commutes_with_ad_k &= ad.mul(&self.j)? == self.j.mul(&ad)?;
            }
        }
        Ok(CartanInvariants { k_closed, k_p_in_p, p_p_in_k, j_squared_is_minus_identity, j_commutes_with_ad_k })
    }
}

fn rotation(n: usize, a: usize, b: usize) -> ExactMatrix {
    // E_ba - E_ab
    ExactMatrix::elementary(n, b, a).sub(&ExactMatrix::elementary(n, a, b)).unwrap()
}

/// `p` element for column vectors `ξ, η ∈ Q^m` in `so(m+2)`:
/// first row `-ξ^T`, second row `-η^T`, first two columns `ξ, η`.
pub fn p_element(xi: &[Scalar], eta: &[Scalar]) -> ExactMatrix {
    let m = xi.len();
    assert_eq!(eta.len(), m);
    let mut x = ExactMatrix::zeros(m + 2, m + 2);
    for j in 0..m {
        x.set(2 + j, 0, xi[j].clone());
        x.set(0, 2 + j, -xi[j].clone());
        x.set(2 + j, 1, eta[j].clone());
        x.set(1, 2 + j, -eta[j].clone());
    }
    x
}

/// `so(m+2) = (so(2) + so(m)) + p` for any `m ≥ 1`. The `p_basis` order is
/// `ξ = e_1..e_m` (with `η = 0`) followed by `η = e_1..e_m`, and
/// `J(ξ, η) = (-η, ξ)`.
pub fn quadric_pair(m: usize) -> Result<CartanPair> {
    if m == 0 {
        return param("quadric pair needs m ≥ 1");
    }
    let n = m + 2;
    let mut k = vec![rotation(n, 0, 1)];
    for a in 0..m {
        for b in a + 1..m {
            k.push(rotation(n, 2 + a, 2 + b));
        }
    }
    let unit = |j: usize| -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); m];
        v[j] = Scalar::one();
        v
    };
    let zero = vec![Scalar::zero(); m];
    let mut p: Vec<ExactMatrix> = (0..m).map(|j| p_element(&unit(j), &zero)).collect();
    p.extend((0..m).map(|j| p_element(&zero, &unit(j))));
    let mut j = ExactMatrix::zeros(2 * m, 2 * m);
    for i in 0..m {
        j.set(m + i, i, Scalar::one());
        j.set(i, m + i, -Scalar::one());
    }
    CartanPair::new(format!("so({n})"), k, p, j)
}

/// Cartan pair of the quadric `Q_m = SO(m+2)/SO(m)×SO(2)`, `m ≥ 3`.
pub fn build_bdi_pair(m: usize) -> Result<CartanPair> {
    if m < 3 {
        return param(format!("BDI pair needs m ≥ 3, got {m}"));
    }
    quadric_pair(m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleCheck {
    pub holds: bool,
    /// Indices `(i, j, l)` with `[[n_i, n_j], n_l] ∉ n`.
    pub witness: Option<[usize; 3]>,
}

fn check_in_p(n_basis: &[ExactMatrix], pair: &CartanPair) -> Result<()> {
    for (i, x) in n_basis.iter().enumerate() {
        if x.rows != pair.size || x.cols != pair.size || !pair.in_p(x) {
            return param(format!("basis element {i} is not in p"));
        }
    }
    Ok(())
}

/// Whether `[[n, n], n] ⊆ n` for the span of `n_basis ⊆ p`.
pub fn is_lie_triple_system(n_basis: &[ExactMatrix], pair: &CartanPair) -> Result<TripleCheck> {
    check_in_p(n_basis, pair)?;
    let span = solver_for(n_basis, pair.size * pair.size);
    for i in 0..n_basis.len() {
        for j in i + 1..n_basis.len() {
            let inner = bracket(&n_basis[i], &n_basis[j])?;
            if inner.is_zero() {
                continue;
            }
            for (l, z) in n_basis.iter().enumerate() {
                if !span.contains(bracket(&inner, z)?.as_flat()) {
                    return Ok(TripleCheck { holds: false, witness: Some([i, j, l]) });
                }
            }
        }
    }
    Ok(TripleCheck { holds: true, witness: None })
}

pub fn is_j_stable(n_basis: &[ExactMatrix], pair: &CartanPair) -> Result<bool> {
    check_in_p(n_basis, pair)?;
    let span = solver_for(n_basis, pair.size * pair.size);
    for x in n_basis {
        if !span.contains(pair.apply_j(x)?.as_flat()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `m(σ)` for `σ = so(3) ⊂ so(4)`: the matrices with `(3,1) = a`,
/// `(3,2) = b` and their negatives transposed, spanned by `X1` (`a = 1`)
/// and `X2` (`b = 1`). Returned with the `so(4)` pair of `Q_2`.
pub fn conic_triple_system() -> Result<(CartanPair, Vec<ExactMatrix>)> {
    let pair = quadric_pair(2)?;
    Ok((pair, vec![conic_generator_x1(), conic_generator_x2()]))
}

pub fn conic_generator_x1() -> ExactMatrix {
    ExactMatrix::from_ints(&[&[0, 0, -1, 0], &[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 0]])
}

pub fn conic_generator_x2() -> ExactMatrix {
    ExactMatrix::from_ints(&[&[0, 0, 0, 0], &[0, 0, -1, 0], &[0, 1, 0, 0], &[0, 0, 0, 0]])
}

/// `A + iB ↦ [[A, B], [-B, A]]` for real `A` skew-symmetric and `B`
/// symmetric traceless.
pub fn su_to_so(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    if a.rows != a.cols || b.rows != b.cols || a.rows != b.rows {
        return param("su_to_so needs two square matrices of one size");
    }
    if !a.is_real() || !b.is_real() {
        return param("su_to_so takes the real and imaginary parts separately");
    }
    if !a.is_skew_symmetric() {
        return param("real part is not skew-symmetric");
    }
    if !b.is_symmetric() || !b.trace().is_zero() {
        return param("imaginary part is not symmetric and traceless");
    }
    Ok(ExactMatrix::block2(a, b, &b.neg(), a))
}

/// [`su_to_so`] on a complex skew-Hermitian traceless matrix.
pub fn su_to_so_complex(x: &ExactMatrix) -> Result<ExactMatrix> {
    su_to_so(&x.real_part(), &x.imag_part())
}

/// A basis of `su(n)`: `E_ab - E_ba`, `i(E_ab + E_ba)` for `a < b` and
/// `i(E_aa - E_{a+1,a+1})`.
pub fn su_basis(n: usize) -> Vec<ExactMatrix> {
    let i = i_unit();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            out.push(rotation(n, b, a));
            out.push(
                ExactMatrix::elementary(n, a, b)
                    .add(&ExactMatrix::elementary(n, b, a))
                    .unwrap()
                    .scale(&i),
            );
        }
    }
    for a in 0..n.saturating_sub(1) {
        out.push(
            ExactMatrix::elementary(n, a, a)
                .sub(&ExactMatrix::elementary(n, a + 1, a + 1))
                .unwrap()
                .scale(&i),
        );
    }
    out
}

/// Rank of a list of matrices viewed as vectors.
pub fn matrix_rank(ms: &[ExactMatrix]) -> usize {
    rank(&ms.iter().map(ExactMatrix::flatten).collect::<Vec<_>>())
}

/// Whether the span of `ms` is closed under the bracket.
pub fn is_subalgebra(ms: &[ExactMatrix]) -> Result<bool> {
    let Some(first) = ms.first() else { return Ok(true) };
    let span = solver_for(ms, first.rows * first.cols);
    for (i, x) in ms.iter().enumerate() {
        for y in &ms[i + 1..] {
            if !span.contains(bracket(x, y)?.as_flat()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormKind {
    Symmetric,
    Skew,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BilinearForm {
    pub matrix: ExactMatrix,
    pub kind: FormKind,
}

impl BilinearForm {
    pub fn new(matrix: ExactMatrix, kind: FormKind) -> Result<Self> {
        let ok = match kind {
            FormKind::Symmetric => matrix.is_symmetric(),
            FormKind::Skew => matrix.is_skew_symmetric(),
        };
        if !ok {
            return param(format!("matrix is not {kind:?}"));
        }
        let rows: Vec<Vec<Scalar>> = (0..matrix.rows).map(|i| matrix.row(i)).collect();
        if rank(&rows) != matrix.rows {
            return param("bilinear form is degenerate");
        }
        Ok(BilinearForm { matrix, kind })
    }

    /// `[[0, -I_n], [I_n, 0]]` on `C^{2n}`.
    pub fn symplectic(n: usize) -> Self {
        let id = ExactMatrix::identity(n);
        let z = ExactMatrix::zeros(n, n);
        Self::new(ExactMatrix::block2(&z, &id.neg(), &id, &z), FormKind::Skew).expect("symplectic form")
    }

    /// `S_n = [[0, I_n], [I_n, 0]]` on `C^{2n}`.
    pub fn split_symmetric(n: usize) -> Self {
        let id = ExactMatrix::identity(n);
        let z = ExactMatrix::zeros(n, n);
        Self::new(ExactMatrix::block2(&z, &id, &id, &z), FormKind::Symmetric).expect("split form")
    }

    /// `z_0^2 + ... + z_{n-1}^2`.
    pub fn sum_of_squares(n: usize) -> Self {
        Self::new(ExactMatrix::identity(n), FormKind::Symmetric).expect("identity form")
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows
    }

    /// `v^T M w`.
    pub fn eval(&self, v: &[Scalar], w: &[Scalar]) -> Result<Scalar> {
        if v.len() != self.dim() || w.len() != self.dim() {
            return param(format!("vectors of length {} and {} for a form on C^{}", v.len(), w.len(), self.dim()));
        }
        let mw = self.matrix.apply(w)?;
        Ok(v.iter().zip(&mw).fold(Scalar::zero(), |acc, (a, b)| acc + a * b))
    }
}

/// Whether the form vanishes on every pair of basis vectors (including a
/// vector with itself).
pub fn isotropy_check(basis: &[Vec<Scalar>], form: &BilinearForm) -> Result<bool> {
    for (i, v) in basis.iter().enumerate() {
        for w in &basis[i..] {
            if !form.eval(v, w)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gauss, int};

    fn unit(m: usize, j: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); m];
        v[j] = Scalar::one();
        v
    }

    #[test]
    fn bracket_basics() {
        let x = ExactMatrix::from_ints(&[&[1, 2], &[3, 4]]);
        assert!(bracket(&x, &x).unwrap().is_zero());
        let e12 = ExactMatrix::elementary(2, 0, 1);
        let e21 = ExactMatrix::elementary(2, 1, 0);
        assert_eq!(bracket(&e12, &e21).unwrap(), ExactMatrix::from_ints(&[&[1, 0], &[0, -1]]));
        assert!(bracket(&e12, &ExactMatrix::identity(3)).is_err());
    }

    #[test]
    fn conic_generators_bracket_to_rotation() {
        let b = bracket(&conic_generator_x1(), &conic_generator_x2()).unwrap();
        let expected = ExactMatrix::from_ints(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
        assert_eq!(b, expected);
        let (pair, _) = conic_triple_system().unwrap();
        assert!(pair.in_k(&b));
    }

    #[test]
    fn bdi_shapes() {
        let pair = build_bdi_pair(3).unwrap();
        assert_eq!(pair.p_basis.len(), 6);
        assert_eq!(pair.k_basis.len(), 1 + 3);
        assert!(build_bdi_pair(2).is_err());
        // J(ξ = e1, η = 0) = (0, e1)
        let x = p_element(&unit(3, 0), &vec![Scalar::zero(); 3]);
        let jx = pair.apply_j(&x).unwrap();
        assert_eq!(jx, p_element(&vec![Scalar::zero(); 3], &unit(3, 0)));
        // and J(0, e1) = (-e1, 0)
        let jjx = pair.apply_j(&jx).unwrap();
        assert_eq!(jjx, x.neg());
    }

    #[test]
    fn bdi_invariants_m4() {
        let inv = build_bdi_pair(4).unwrap().check_invariants().unwrap();
        assert!(inv.p_p_in_k);
        assert!(inv.all(), "{inv:?}");
    }

    #[test]
    fn triple_systems() {
        let pair = build_bdi_pair(4).unwrap();
        assert!(is_lie_triple_system(&pair.p_basis, &pair).unwrap().holds);
        assert!(is_j_stable(&pair.p_basis, &pair).unwrap());

        let (q2, m_sigma) = conic_triple_system().unwrap();
        assert!(is_lie_triple_system(&m_sigma, &q2).unwrap().holds);
        assert!(is_j_stable(&m_sigma, &q2).unwrap());

        let b3 = build_bdi_pair(3).unwrap();
        let zero = vec![Scalar::zero(); 3];
        let real_plane = vec![p_element(&unit(3, 0), &zero), p_element(&unit(3, 1), &zero)];
        assert_eq!(
            is_lie_triple_system(&real_plane, &b3).unwrap(),
            TripleCheck { holds: true, witness: None }
        );
        assert!(!is_j_stable(&real_plane[..1], &b3).unwrap());
        assert!(is_lie_triple_system(&[b3.k_basis[0].clone()], &b3).is_err());
    }

    #[test]
    fn non_triple_system_has_witness() {
        // span{(ξ, η) = (e1, e2), (e2, 0)}: [[x, y], x] leaves the span
        let b3 = build_bdi_pair(3).unwrap();
        let zero = vec![Scalar::zero(); 3];
        let n = vec![p_element(&unit(3, 0), &unit(3, 1)), p_element(&unit(3, 1), &zero)];
        let r = is_lie_triple_system(&n, &b3).unwrap();
        assert_eq!(r, TripleCheck { holds: false, witness: Some([0, 1, 0]) });
        // while span{(e1, 0), (0, e2)} is closed
        let closed = vec![p_element(&unit(3, 0), &zero), p_element(&zero, &unit(3, 1))];
        assert!(is_lie_triple_system(&closed, &b3).unwrap().holds);
    }

    #[test]
    fn su_embedding_shapes() {
        let a = ExactMatrix::zeros(2, 2);
        let b = ExactMatrix::from_ints(&[&[1, 0], &[0, -1]]);
        let img = su_to_so(&a, &b).unwrap();
        assert!(img.is_skew_symmetric());
        assert_eq!(img.rows(), 4);
        assert!(su_to_so(&a, &ExactMatrix::identity(2)).is_err());
        assert!(su_to_so(&ExactMatrix::identity(2), &b).is_err());
        let su2: Vec<ExactMatrix> = su_basis(2).iter().map(|x| su_to_so_complex(x).unwrap()).collect();
        assert_eq!(matrix_rank(&su2), 3);
        assert!(is_subalgebra(&su2).unwrap());
    }

    #[test]
    fn isotropy_examples() {
        let n = 3;
        let omega = BilinearForm::symplectic(n);
        let v1: Vec<Vec<Scalar>> = (n..2 * n).map(|j| unit(2 * n, j)).collect();
        let v2: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut v = unit(2 * n, i);
                v[n + i] = int(-1);
                v
            })
            .collect();
        assert!(isotropy_check(&v1, &omega).unwrap());
        assert!(isotropy_check(&v2, &omega).unwrap());
        let s = BilinearForm::split_symmetric(n);
        assert!(!isotropy_check(&[unit(2 * n, 0), unit(2 * n, n)], &s).unwrap());
        assert_eq!(s.eval(&unit(2 * n, 0), &unit(2 * n, n)).unwrap(), int(1));
        assert!(isotropy_check(&[unit(4, 0)], &s).is_err());
    }

    #[test]
    fn form_validation() {
        assert!(BilinearForm::new(ExactMatrix::from_ints(&[&[0, 1], &[1, 0]]), FormKind::Skew).is_err());
        assert!(BilinearForm::new(ExactMatrix::from_ints(&[&[1, 1], &[1, 1]]), FormKind::Symmetric).is_err());
        let f = BilinearForm::new(ExactMatrix::from_rows(vec![vec![int(0), gauss(0, 1)], vec![gauss(0, -1), int(0)]]), FormKind::Skew);
        assert!(f.is_ok());
    }
}
