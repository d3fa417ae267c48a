//! Gaussian rationals `a + bi` with `a, b` in Q, and helpers for building
//! and printing them.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;
pub type Scalar = Complex<BigRational>;

pub fn int(n: i64) -> Scalar {
    Complex::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
}

pub fn gauss(re: i64, im: i64) -> Scalar {
    Complex::new(
        BigRational::from_integer(BigInt::from(re)),
        BigRational::from_integer(BigInt::from(im)),
    )
}

pub fn frac(num: i64, den: i64) -> Scalar {
    Complex::new(
        BigRational::new(BigInt::from(num), BigInt::from(den)),
        BigRational::zero(),
    )
}

pub fn i_unit() -> Scalar {
    Complex::new(BigRational::zero(), BigRational::one())
}

pub fn is_real(x: &Scalar) -> bool {
    x.im.is_zero()
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text form: `3`, `-1/2`, `2i`, `-i`, `1/2+3i`.
pub fn format_scalar(x: &Scalar) -> String {
    let re = &x.re;
    let im = &x.im;
    if im.is_zero() {
        return fmt_rat(re);
    }
    let im_abs = im.abs();
    let im_part = if im_abs.is_one() {
        "i".to_string()
    } else {
        format!("{}i", fmt_rat(&im_abs))
    };
    match (re.is_zero(), im.is_negative()) {
        (true, false) => im_part,
        (true, true) => format!("-{im_part}"),
        (false, false) => format!("{}+{im_part}", fmt_rat(re)),
        (false, true) => format!("{}-{im_part}", fmt_rat(re)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting() {
        assert_eq!(format_scalar(&int(3)), "3");
        assert_eq!(format_scalar(&frac(-1, 2)), "-1/2");
        assert_eq!(format_scalar(&gauss(0, -1)), "-i");
        assert_eq!(format_scalar(&gauss(2, 3)), "2+3i");
        assert_eq!(format_scalar(&gauss(1, -1)), "1-i");
        assert_eq!(format_scalar(&(i_unit() * i_unit())), "-1");
    }
}
