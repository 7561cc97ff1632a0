//! Gaussian integers `Z[i]` and Gaussian rationals `Q(i)`.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element of `Z[i]`.
pub type GaussianInt = Complex<BigInt>;

/// An element of `Q(i)`, used only by evaluation.
pub type GaussianRational = Complex<BigRational>;

pub fn gi(re: i64, im: i64) -> GaussianInt {
    Complex::new(BigInt::from(re), BigInt::from(im))
}

pub fn gi_i() -> GaussianInt {
    gi(0, 1)
}

/// True for the four units `1, -1, i, -i`.
pub fn is_unit(z: &GaussianInt) -> bool {
    (z.re.is_zero() && z.im.abs().is_one()) || (z.im.is_zero() && z.re.abs().is_one())
}

/// `a / b` when the quotient lies in `Z[i]`.
pub fn exact_quotient(a: &GaussianInt, b: &GaussianInt) -> Option<GaussianInt> {
    if b.is_zero() {
        return None;
    }
    let norm = &b.re * &b.re + &b.im * &b.im;
    let num = a * b.conj();
    if (&num.re % &norm).is_zero() && (&num.im % &norm).is_zero() {
        Some(Complex::new(num.re / &norm, num.im / &norm))
    } else {
        None
    }
}

pub fn to_rational(z: &GaussianInt) -> GaussianRational {
    Complex::new(BigRational::from_integer(z.re.clone()), BigRational::from_integer(z.im.clone()))
}

/// Multiplicative inverse in `Q(i)`; `None` for zero.
pub fn rational_inverse(z: &GaussianRational) -> Option<GaussianRational> {
    if z.is_zero() {
        return None;
    }
    let norm = &z.re * &z.re + &z.im * &z.im;
    Some(Complex::new(&z.re / &norm, -(&z.im / &norm)))
}

/// Plain text rendering: `3`, `-i`, `2+3i`.
pub fn format_gaussian(z: &GaussianInt) -> String {
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => z.re.to_string(),
        (true, false) => imag_part(&z.im),
        (false, false) => {
            let im = imag_part(&z.im);
            if z.im.is_negative() {
                format!("{}{}", z.re, im)
            } else {
                format!("{}+{}", z.re, im)
            }
        }
    }
}

fn imag_part(im: &BigInt) -> String {
    if im.is_one() {
        "i".to_string()
    } else if (-im).is_one() {
        "-i".to_string()
    } else {
        format!("{im}i")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(gi_i() * gi_i(), gi(-1, 0));
    }

    #[test]
    fn exact_quotients() {
        // (1+i)(1-i) = 2
        assert_eq!(exact_quotient(&gi(2, 0), &gi(1, 1)), Some(gi(1, -1)));
        assert_eq!(exact_quotient(&gi(1, 0), &gi(2, 0)), None);
        assert_eq!(exact_quotient(&gi(1, 0), &gi(0, 0)), None);
    }

    #[test]
    fn rendering() {
        assert_eq!(format_gaussian(&gi(0, -1)), "-i");
        assert_eq!(format_gaussian(&gi(2, -3)), "2-3i");
        assert_eq!(format_gaussian(&gi(-4, 0)), "-4");
    }
}
