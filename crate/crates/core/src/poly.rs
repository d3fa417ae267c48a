//! Sparse bivariate polynomials over the Gaussian rationals.
//!
//! The same type serves two roles: binary forms in `(u0, u1)` for
//! parametrized curves, and polynomials in `(c, s)` standing for cosine and
//! sine, reduced modulo `c^2 + s^2 - 1` by [`trig_normal_form`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{format_scalar, Scalar};

/// Keys are exponent pairs `(i, j)` of `x^i y^j`; zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl Poly2 {
    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Scalar, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Poly2 { terms }
    }

    /// The first variable (`u0` or `c`).
    pub fn x() -> Self {
        Self::monomial(Scalar::one(), 1, 0)
    }

    /// The second variable (`u1` or `s`).
    pub fn y() -> Self {
        Self::monomial(Scalar::one(), 0, 1)
    }

    /// `a u0 + b u1`.
    pub fn linear(a: Scalar, b: Scalar) -> Self {
        Self::monomial(a, 1, 0) + Self::monomial(b, 0, 1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, i: u32, j: u32) -> Scalar {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Scalar::zero)
    }

    fn add_term(&mut self, key: (u32, u32), c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Scalar::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly2 { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn degree_in_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Degree if every term has the same total degree; `None` for zero or
    /// mixed-degree polynomials.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.total_degree()?;
        self.terms.keys().all(|(i, j)| i + j == d).then_some(d)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, x: &Scalar, y: &Scalar) -> Scalar {
        self.terms.iter().fold(Scalar::zero(), |acc, ((i, j), c)| {
            acc + c * pow_scalar(x, *i) * pow_scalar(y, *j)
        })
    }

    /// Substitutes `x -> a x + b y`, `y -> c x + d y`.
    pub fn compose_linear(&self, a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar) -> Self {
        let new_x = Self::linear(a.clone(), b.clone());
        let new_y = Self::linear(c.clone(), d.clone());
        let mut out = Self::zero();
        for ((i, j), coef) in &self.terms {
            out = out + (&new_x.pow(*i) * &new_y.pow(*j)).scale(coef);
        }
        out
    }

    /// Coefficients of `f(1, t)` in ascending powers of `t`.
    fn dehomogenize(&self) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.degree_in_y().map_or(0, |d| d as usize + 1)];
        for ((_, j), c) in &self.terms {
            out[*j as usize] = &out[*j as usize] + c;
        }
        trim(&mut out);
        out
    }
}

fn pow_scalar(x: &Scalar, e: u32) -> Scalar {
    (0..e).fold(Scalar::one(), |acc, _| acc * x)
}

impl Zero for Poly2 {
    fn zero() -> Self {
        Poly2 { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly2 {
    fn one() -> Self {
        Self::constant(Scalar::one())
    }
}

impl Add for Poly2 {
    type Output = Poly2;
    fn add(self, rhs: Poly2) -> Poly2 {
        &self + &rhs
    }
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, v.clone());
        }
        out
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        Poly2 { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }
}

impl Neg for Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        -&self
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        self + &(-rhs)
    }
}

impl Sub for Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: Poly2) -> Poly2 {
        &self - &rhs
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &rhs.terms {
                out.add_term((a + c, b + d), x * y);
            }
        }
        out
    }
}

impl Mul for Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: Poly2) -> Poly2 {
        &self * &rhs
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|((i, j), c)| {
                let mut mono = String::new();
                for (var, e) in [("x", i), ("y", j)] {
                    match e {
                        0 => {}
                        1 => mono.push_str(var),
                        _ => mono.push_str(&format!("{var}^{e}")),
                    }
                }
                let coef = format_scalar(c);
                if mono.is_empty() {
                    format!("({coef})")
                } else if c.is_one() {
                    mono
                } else {
                    format!("({coef}){mono}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Reduces modulo `x^2 + y^2 - 1` (with `x = cos`, `y = sin`) to the
/// representative of `y`-degree at most one.
pub fn trig_normal_form(p: &Poly2) -> Poly2 {
    let one_minus_c2 = Poly2::one() - Poly2::monomial(Scalar::one(), 2, 0);
    let mut out = Poly2::zero();
    for ((i, j), c) in &p.terms {
        let reduced = &Poly2::monomial(c.clone(), *i, j % 2) * &one_minus_c2.pow(j / 2);
        out = out + reduced;
    }
    out
}

fn trim(p: &mut Vec<Scalar>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Remainder of `a` modulo `b` for univariate coefficient vectors.
fn poly_rem(mut a: Vec<Scalar>, b: &[Scalar]) -> Vec<Scalar> {
    let lead = b.last().expect("nonzero divisor").clone();
    while a.len() >= b.len() {
        let shift = a.len() - b.len();
        let factor = a.last().unwrap().clone() / lead.clone();
        for (k, bk) in b.iter().enumerate() {
            a[shift + k] = a[shift + k].clone() - factor.clone() * bk.clone();
        }
        a.pop();
        trim(&mut a);
    }
    a
}

fn univariate_gcd(mut a: Vec<Scalar>, mut b: Vec<Scalar>) -> Vec<Scalar> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for x in a.iter_mut() {
            *x = x.clone() / lead.clone();
        }
    }
    a
}

/// Monic gcd of nonzero binary forms, as a binary form. Zero inputs are
/// ignored; the gcd of no nonzero forms is `1`.
pub fn homogeneous_gcd(forms: &[Poly2]) -> Poly2 {
    let nonzero: Vec<&Poly2> = forms.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return Poly2::one();
    }
    let mut x_power = u32::MAX;
    let mut g: Option<Vec<Scalar>> = None;
    for f in nonzero {
        let d = f.total_degree().unwrap();
        let dehom = f.dehomogenize();
        x_power = x_power.min(d - (dehom.len() as u32 - 1));
        g = Some(match g {
            None => univariate_gcd(dehom, Vec::new()),
            Some(prev) => univariate_gcd(prev, dehom),
        });
    }
    let g = g.unwrap();
    let gdeg = g.len() as u32 - 1;
    let mut out = Poly2::zero();
    for (j, c) in g.into_iter().enumerate() {
        let j = j as u32;
        out = out + Poly2::monomial(c, x_power + gdeg - j, j);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gauss, int};

    fn u0() -> Poly2 {
        Poly2::x()
    }

    fn u1() -> Poly2 {
        Poly2::y()
    }

    #[test]
    fn ring_operations() {
        let p = &u0() + &u1();
        let q = &u0() - &u1();
        let prod = &p * &q;
        assert_eq!(prod, u0().pow(2) - u1().pow(2));
        assert_eq!(prod.homogeneous_degree(), Some(2));
        assert!((&p - &p).is_zero());
        assert_eq!(prod.eval(&int(3), &int(1)), int(8));
    }

    #[test]
    fn trig_examples() {
        let c = Poly2::x();
        let s = Poly2::y();
        let ic = c.scale(&gauss(0, 1));
        let is = s.scale(&gauss(0, 1));
        let on_quadric = Poly2::one() + ic.pow(2) + is.pow(2);
        assert!(trig_normal_form(&on_quadric).is_zero());
        assert_eq!(trig_normal_form(&(c.pow(2) + s.pow(2))), Poly2::one());
        let cube = s.pow(3);
        let reduced = trig_normal_form(&cube);
        assert!(reduced.degree_in_y().unwrap() <= 1);
        assert_eq!(reduced, &s - &(&c.pow(2) * &s));
    }

    #[test]
    fn gcd_of_forms() {
        let a = &(&u0() + &u1()) * &u0();
        let b = &(&u0() + &u1()) * &u1();
        let g = homogeneous_gcd(&[a.clone(), b]);
        assert_eq!(g, &u0() + &u1());
        // u0 powers are tracked separately from the dehomogenized gcd
        let g2 = homogeneous_gcd(&[u0().pow(2), &u0() * &u1()]);
        assert_eq!(g2, u0());
        assert_eq!(homogeneous_gcd(&[u0(), u1()]), Poly2::one());
        assert_eq!(homogeneous_gcd(&[Poly2::zero(), a.scale(&int(3))]), a);
    }

    #[test]
    fn linear_substitution() {
        let p = &u0() * &u1();
        let swapped = p.compose_linear(&int(0), &int(1), &int(1), &int(0));
        assert_eq!(swapped, p);
        let sheared = u0().compose_linear(&int(1), &int(2), &int(0), &int(1));
        assert_eq!(sheared, &u0() + &u1().scale(&int(2)));
    }

    #[test]
    fn display_is_readable() {
        let p = &u0().scale(&int(2)) + &Poly2::constant(gauss(0, -1));
        assert_eq!(p.to_string(), "(2)x + (-i)");
    }
}
