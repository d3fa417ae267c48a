//! Exact row reduction over Gaussian rationals.
//!
//! Pivoting always takes the first nonzero entry in a column, so results
//! are deterministic for a given input order.

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Incrementally built echelon basis that remembers, for every reduced row,
/// which combination of the original vectors produced it.
#[derive(Debug, Clone)]
pub struct SpanSolver {
    len: usize,
    inputs: usize,
    rows: Vec<Vec<Scalar>>,
    combos: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl SpanSolver {
    pub fn new(len: usize) -> Self {
        SpanSolver {
            len,
            inputs: 0,
            rows: Vec::new(),
            combos: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors<'a, I>(len: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a Vec<Scalar>>,
    {
        let mut solver = SpanSolver::new(len);
        for v in vectors {
            solver.push(v);
        }
        solver
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows; returns the residual and the
    /// coefficients (over the original inputs) that were subtracted.
    fn reduce(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut residual = v.to_vec();
        let mut combo = vec![Scalar::zero(); self.inputs];
        for ((row, row_combo), &p) in self.rows.iter().zip(&self.combos).zip(&self.pivots) {
            if residual[p].is_zero() {
                continue;
            }
            let factor = residual[p].clone() / row[p].clone();
            for (r, x) in residual.iter_mut().zip(row) {
                if !x.is_zero() {
                    *r = r.clone() - factor.clone() * x.clone();
                }
            }
            for (c, x) in combo.iter_mut().zip(row_combo) {
                if !x.is_zero() {
                    *c = c.clone() + factor.clone() * x.clone();
                }
            }
        }
        (residual, combo)
    }

    /// Adds a vector; returns `true` when it was independent of the span.
    pub fn push(&mut self, v: &[Scalar]) -> bool {
        let (residual, combo) = self.reduce(v);
        self.inputs += 1;
        for c in self.combos.iter_mut() {
            c.push(Scalar::zero());
        }
        let Some(p) = residual.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        // residual = v - sum combo_j * input_j
        let mut new_combo: Vec<Scalar> = combo.into_iter().map(|c| -c).collect();
        new_combo.push(Scalar::one());
        self.rows.push(residual);
        self.combos.push(new_combo);
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).0.iter().all(Zero::is_zero)
    }

    /// Coefficients expressing `v` in terms of the pushed vectors, if `v`
    /// lies in their span. Dependent inputs receive coefficient zero.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let (residual, combo) = self.reduce(v);
        residual.iter().all(Zero::is_zero).then_some(combo)
    }
}

pub fn rank(vectors: &[Vec<Scalar>]) -> usize {
    let len = vectors.first().map_or(0, Vec::len);
    SpanSolver::from_vectors(len, vectors).rank()
}

/// Reduced row echelon form; returns the nonzero rows and pivot columns.
pub fn rref(mut rows: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = Scalar::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..cols {
                    if !rows[r][j].is_zero() {
                        let t = f.clone() * rows[r][j].clone();
                        rows[i][j] = rows[i][j].clone() - t;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of `{x : M x = 0}` for `M` given by its rows, with `cols` unknowns.
pub fn kernel(rows: &[Vec<Scalar>], cols: usize) -> Vec<Vec<Scalar>> {
    let (reduced, pivots) = rref(rows.to_vec());
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![Scalar::zero(); cols];
        x[free] = Scalar::one();
        for (row, &p) in reduced.iter().zip(&pivots) {
            x[p] = -row[free].clone();
        }
        basis.push(x);
    }
    basis
}

/// The unique `x` with `A x = b`, or `None` if there is none or it is not
/// unique.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let cols = a.first().map_or(0, Vec::len);
    let augmented: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| row.iter().cloned().chain(std::iter::once(bi.clone())).collect())
        .collect();
    let (reduced, pivots) = rref(augmented);
    if pivots.len() != cols || pivots.contains(&cols) {
        return None;
    }
    Some(reduced.into_iter().map(|row| row[cols].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gauss, int};

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn span_and_coordinates() {
        let basis = vec![v(&[1, 1, 0]), v(&[0, 1, 1]), v(&[1, 2, 1])];
        let solver = SpanSolver::from_vectors(3, &basis);
        assert_eq!(solver.rank(), 2);
        let target = v(&[2, 5, 3]);
        let coords = solver.coordinates(&target).unwrap();
        let mut recombined = vec![Scalar::zero(); 3];
        for (c, b) in coords.iter().zip(&basis) {
            for (r, x) in recombined.iter_mut().zip(b) {
                *r = r.clone() + c.clone() * x.clone();
            }
        }
        assert_eq!(recombined, target);
        assert!(!solver.contains(&v(&[1, 0, 0])));
    }

    #[test]
    fn kernel_of_gaussian_system() {
        // x + i y = 0
        let rows = vec![vec![int(1), gauss(0, 1)]];
        let k = kernel(&rows, 2);
        assert_eq!(k.len(), 1);
        let dot = k[0][0].clone() + gauss(0, 1) * k[0][1].clone();
        assert!(dot.is_zero());
    }

    #[test]
    fn rref_full_rank() {
        let (rows, piv) = rref(vec![v(&[2, 4]), v(&[1, 3])]);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(rows, vec![v(&[1, 0]), v(&[0, 1])]);
    }

    #[test]
    fn solve_square_and_singular() {
        let a = vec![v(&[2, 1]), v(&[1, 1])];
        assert_eq!(solve(&a, &v(&[3, 2])), Some(v(&[1, 1])));
        assert_eq!(solve(&[v(&[1, 1]), v(&[2, 2])], &v(&[1, 3])), None);
        assert_eq!(solve(&[v(&[1, 1])], &v(&[1])), None);
    }
}
