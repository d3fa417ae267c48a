//! Schubert varieties `Ω(a_0, ..., a_d)` in `Gr(d, n)`, the Grassmannian of
//! projective `d`-planes in `P^n`, with the closed-form degree and a Pieri
//! recursion used as an independent check.
//!
//! Dimension: `k = Σ a_i - d(d+1)/2`. The subtrahend is `C(d+1, 2)`; it is
//! pinned by `Ω(1, 2, ..., d+1)` being a `P^{d+1}` (so `k = d+1`).
//!
//! # Pieri convention
//!
//! A [`CohomologyClass`] is keyed by *codimension-form* indices: the key
//! `b` stands for the variety `Ω(b^∨)` where
//! `b^∨_i = n - b_{d-i}` ([`SchubertIndex::dual`]). In this form the
//! hyperplane class acts by raising one entry by 1 while staying strictly
//! increasing and `≤ n`, and the point class is `(n-d, ..., n)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{param, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SchubertIndex {
    a: Vec<u32>,
    d: u32,
    n: u32,
}

impl SchubertIndex {
    pub fn new(a: Vec<u32>, n: u32) -> Result<Self> {
        if a.is_empty() {
            return param("Schubert index must have at least one entry");
        }
        if a.windows(2).any(|w| w[0] >= w[1]) {
            return param(format!("Schubert index {a:?} is not strictly increasing"));
        }
        if *a.last().unwrap() > n {
            return param(format!("Schubert index {a:?} exceeds n = {n}"));
        }
        let d = a.len() as u32 - 1;
        Ok(SchubertIndex { a, d, n })
    }

    /// `Ω(0, 1, ..., d)`, a point.
    pub fn point(d: u32, n: u32) -> Result<Self> {
        Self::new((0..=d).collect(), n)
    }

    /// `Ω(n-d, ..., n)`, the whole Grassmannian.
    pub fn full(d: u32, n: u32) -> Result<Self> {
        if d > n {
            return param(format!("d = {d} exceeds n = {n}"));
        }
        Self::new((n - d..=n).collect(), n)
    }

    /// `Ω(1, 2, ..., d+1)`, the linearly embedded `P^{d+1}`.
    pub fn linear_projective(d: u32, n: u32) -> Result<Self> {
        Self::new((1..=d + 1).collect(), n)
    }

    pub fn entries(&self) -> &[u32] {
        &self.a
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Conversion between dimension form and codimension form.
    pub fn dual(&self) -> SchubertIndex {
        let a = self.a.iter().rev().map(|&x| self.n - x).collect();
        SchubertIndex { a, d: self.d, n: self.n }
    }
}

impl fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(u32::to_string).collect();
        write!(f, "Ω({})", parts.join(","))
    }
}

/// Line `{L : B_{d-1} ⊂ L ⊂ B}` in `Gr(d, n)`, read as `Ω(0, 1, ..., d-1, d+1)`.
/// Requires `d ≥ 1` and `n ≥ d+1`.
pub fn line_index(d: u32, n: u32) -> Result<SchubertIndex> {
    if d == 0 {
        return param("a line index needs d ≥ 1");
    }
    let mut a: Vec<u32> = (0..d).collect();
    a.push(d + 1);
    SchubertIndex::new(a, n)
}

/// The literal `d+2`-entry tuple `(0, 1, ..., d, d+2)`. As an index it
/// lives in `Gr(d+1, n)`; it is also a line there. Requires `n ≥ d+2`.
pub fn line_index_literal(d: u32, n: u32) -> Result<SchubertIndex> {
    let mut a: Vec<u32> = (0..=d).collect();
    a.push(d + 2);
    SchubertIndex::new(a, n)
}

pub fn schubert_dimension(idx: &SchubertIndex) -> u32 {
    let sum: u32 = idx.a.iter().sum();
    sum - idx.d * (idx.d + 1) / 2
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// `k! / (a_0! ⋯ a_d!) · ∏_{i<j} (a_j - a_i)`.
pub fn schubert_degree(idx: &SchubertIndex) -> Result<u128> {
    let k = schubert_dimension(idx);
    let mut num = factorial(k);
    for i in 0..idx.a.len() {
        for j in i + 1..idx.a.len() {
            num *= idx.a[j] - idx.a[i];
        }
    }
    let den = idx.a.iter().fold(BigInt::one(), |acc, &x| acc * factorial(x));
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Consistency(format!("degree quotient for {idx} is not integral")));
    }
    q.to_u128().ok_or_else(|| Error::Overflow(format!("degree of {idx}")))
}

/// Integer combination of Schubert classes of one Grassmannian, keyed in
/// codimension form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CohomologyClass {
    terms: BTreeMap<Vec<u32>, u128>,
    d: u32,
    n: u32,
}

impl CohomologyClass {
    pub fn zero(d: u32, n: u32) -> Self {
        CohomologyClass { terms: BTreeMap::new(), d, n }
    }

    /// The class with coefficient 1 on the codimension-form key `idx`.
    pub fn basis(idx: &SchubertIndex) -> Self {
        let mut c = Self::zero(idx.d, idx.n);
        c.terms.insert(idx.a.clone(), 1);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &[u32]) -> u128 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &u128)> {
        self.terms.iter()
    }

    fn point_key(&self) -> Vec<u32> {
        (self.n - self.d..=self.n).collect()
    }
}

/// Multiplication by the hyperplane class.
pub fn pieri_multiply(c: &CohomologyClass) -> CohomologyClass {
    let mut out = CohomologyClass::zero(c.d, c.n);
    for (key, &coef) in &c.terms {
        for i in 0..key.len() {
            let raised = key[i] + 1;
            let room = match key.get(i + 1) {
                Some(&next) => raised < next,
                None => raised <= c.n,
            };
            if room {
                let mut k = key.clone();
                k[i] = raised;
                *out.terms.entry(k).or_insert(0) += coef;
            }
        }
    }
    out
}

/// Degree of `Ω(idx)` read off as the point coefficient of `H^k · [Ω(idx)]`.
pub fn pieri_degree_oracle(idx: &SchubertIndex) -> u128 {
    let mut c = CohomologyClass::basis(&idx.dual());
    for _ in 0..schubert_dimension(idx) {
        c = pieri_multiply(&c);
    }
    c.coefficient(&c.point_key())
}

/// All valid indices of `Gr(d, n)`.
pub fn all_indices(d: u32, n: u32) -> Vec<SchubertIndex> {
    fn rec(start: u32, left: u32, n: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < left {
                break;
            }
            cur.push(x);
            rec(x + 1, left - 1, n, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    if d <= n {
        rec(0, d + 1, n, &mut Vec::new(), &mut raw);
    }
    raw.into_iter().map(|a| SchubertIndex { a, d, n }).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchubertReport {
    pub index: Vec<u32>,
    pub ambient: (u32, u32),
    pub k: u32,
    pub degree: u128,
    pub oracle_degree: u128,
}

pub fn report(idx: &SchubertIndex) -> Result<SchubertReport> {
    Ok(SchubertReport {
        index: idx.a.clone(),
        ambient: (idx.d, idx.n),
        k: schubert_dimension(idx),
        degree: schubert_degree(idx)?,
        oracle_degree: pieri_degree_oracle(idx),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(a: &[u32], n: u32) -> SchubertIndex {
        SchubertIndex::new(a.to_vec(), n).unwrap()
    }

    #[test]
    fn dimension_examples() {
        for d in 0..6 {
            assert_eq!(schubert_dimension(&SchubertIndex::linear_projective(d, d + 3).unwrap()), d + 1);
            assert_eq!(schubert_dimension(&SchubertIndex::point(d, d + 3).unwrap()), 0);
            let full = SchubertIndex::full(d, d + 3).unwrap();
            assert_eq!(schubert_dimension(&full), (d + 1) * 3);
        }
    }

    #[test]
    fn degree_examples() {
        assert_eq!(schubert_degree(&idx(&[1, 2, 3], 5)).unwrap(), 1);
        assert_eq!(schubert_degree(&idx(&[2, 3], 3)).unwrap(), 2);
        assert_eq!(schubert_degree(&idx(&[0, 1, 2], 4)).unwrap(), 1);
        assert_eq!(pieri_degree_oracle(&idx(&[2, 3], 3)), 2);
        assert_eq!(pieri_degree_oracle(&idx(&[1, 3], 3)), 2);
        assert_eq!(pieri_degree_oracle(&idx(&[1, 2, 3, 4], 6)), 1);
    }

    #[test]
    fn pieri_step() {
        let c = pieri_multiply(&CohomologyClass::basis(&idx(&[0, 2], 3)));
        let terms: Vec<(Vec<u32>, u128)> = c.terms().map(|(k, v)| (k.clone(), *v)).collect();
        assert_eq!(terms, vec![(vec![0, 3], 1), (vec![1, 2], 1)]);
        let top = pieri_multiply(&CohomologyClass::basis(&idx(&[2, 3], 3)));
        assert!(top.is_zero());
    }

    #[test]
    fn invalid_indices() {
        assert!(SchubertIndex::new(vec![1, 1], 3).is_err());
        assert!(SchubertIndex::new(vec![0, 4], 3).is_err());
        assert!(SchubertIndex::new(vec![], 3).is_err());
    }

    #[test]
    fn line_readings_are_lines() {
        for d in 1..6 {
            let a = line_index(d, d + 3).unwrap();
            assert_eq!((schubert_dimension(&a), schubert_degree(&a).unwrap()), (1, 1));
            let b = line_index_literal(d, d + 3).unwrap();
            assert_eq!(b.d(), d + 1);
            assert_eq!((schubert_dimension(&b), schubert_degree(&b).unwrap()), (1, 1));
        }
    }

    #[test]
    fn grassmannian_index_counts() {
        // C(n+1, d+1) indices
        assert_eq!(all_indices(1, 3).len(), 6);
        assert_eq!(all_indices(2, 5).len(), 20);
    }

    #[test]
    fn dual_is_involution() {
        for s in all_indices(2, 6) {
            assert_eq!(s.dual().dual(), s);
            assert_eq!(schubert_dimension(&s) + schubert_dimension(&s.dual()), 3 * 4);
        }
    }
}
