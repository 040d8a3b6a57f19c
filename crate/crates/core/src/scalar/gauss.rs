//! Gaussian rationals `a + b·i` with `a, b ∈ ℚ`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ScalarError;

/// An exact element of ℚ(i).
///
/// Both components are kept in lowest terms with a positive denominator
/// (guaranteed by `BigRational`), so derived equality is structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRational { re, im }
    }

    pub fn from_integer(n: i64) -> Self {
        GaussRational::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussRational::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn real(re: BigRational) -> Self {
        GaussRational { re, im: BigRational::zero() }
    }

    pub fn imag(im: BigRational) -> Self {
        GaussRational { re: BigRational::zero(), im }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRational::imag(BigRational::one())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero() && !self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(GaussRational { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussRational::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents invert first.
    pub fn powi(&self, exp: i32) -> Result<Self, ScalarError> {
        if exp >= 0 {
            Ok(self.pow(exp as u32))
        } else {
            Ok(self.inv()?.pow(exp.unsigned_abs()))
        }
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational::real(BigRational::one())
    }
}

impl<'a> Add<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Add for GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: GaussRational) -> GaussRational {
        GaussRational { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl AddAssign for GaussRational {
    fn add_assign(&mut self, rhs: GaussRational) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl<'a> AddAssign<&'a GaussRational> for GaussRational {
    fn add_assign(&mut self, rhs: &GaussRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl<'a> Sub<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Sub for GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: GaussRational) -> GaussRational {
        GaussRational { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl<'a> Mul<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        GaussRational { re, im }
    }
}

impl Mul for GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: GaussRational) -> GaussRational {
        &self * &rhs
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational { re: -self.re, im: -self.im }
    }
}

impl<'a> Neg for &'a GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

/// `n` or `n/d`, sign included.
pub(crate) fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussRational {
    /// `a/b + c/d*i`, dropping whichever component is zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{}", imag_body(&self.im, true)),
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{} {} {}", fmt_rational(&self.re), sign, imag_body(&self.im.abs(), false))
            }
        }
    }
}

/// Renders `c*i` for the imaginary part `c`. `standalone` parenthesizes
/// fractions so the text re-parses with the same precedence.
fn imag_body(im: &BigRational, standalone: bool) -> String {
    if im.is_one() {
        "i".to_string()
    } else if *im == -BigRational::one() {
        "-i".to_string()
    } else if im.is_integer() || !standalone {
        format!("{}*i", fmt_rational(im))
    } else {
        format!("({})*i", fmt_rational(im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussRational::i();
        assert_eq!(&i * &i, -GaussRational::one());
    }

    #[test]
    fn lowest_terms() {
        let a = GaussRational::from_ratio(2, -4);
        assert_eq!(a, GaussRational::from_ratio(-1, 2));
        assert!(a.re.denom() > &BigInt::zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let z = GaussRational::new(BigRational::from_integer(3.into()), BigRational::new(1.into(), 2.into()));
        assert_eq!(&z * &z.inv().unwrap(), GaussRational::one());
        assert!(GaussRational::zero().inv().is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussRational::from_ratio(1, 2).to_string(), "1/2");
        assert_eq!(GaussRational::i().to_string(), "i");
        let z = GaussRational::new(BigRational::new(1.into(), 2.into()), BigRational::new((-3).into(), 4.into()));
        assert_eq!(z.to_string(), "1/2 - 3/4*i");
    }
}
