//! Exact coefficient rings: ℚ(i) and ℚ(i)[q, q⁻¹].

mod gauss;
mod laurent;

use std::fmt::{Debug, Display};
use std::ops::{Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use gauss::GaussRational;
pub use laurent::LaurentScalar;
pub(crate) use laurent::{coeff_multiplier, join_signed};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("the deformation parameter cannot be specialized to 0")]
    ZeroParameter,
    #[error("{0} is not invertible in the coefficient ring")]
    NotInvertible(String),
    #[error("cannot parse scalar: {0}")]
    Parse(String),
}

/// The operations the rewriting core needs from a coefficient ring.
pub trait Coefficient:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> std::ops::AddAssign<&'a Self>
    + From<GaussRational>
    + Send
    + Sync
    + 'static
{
    fn mul_ref(&self, rhs: &Self) -> Self;

    /// Complex conjugation, treating `q` as real.
    fn conj(&self) -> Self;

    /// `q^k`, or `None` if the ring has no deformation parameter.
    fn q_pow(k: i32) -> Option<Self>;

    /// Exact inverse, when the element is a unit.
    fn try_inv(&self) -> Result<Self, ScalarError>;

    /// Sign and multiplier text used to render `coeff*word`. An empty
    /// multiplier means the coefficient is ±1.
    fn term_prefix(&self) -> (bool, String);
}

impl Coefficient for GaussRational {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn conj(&self) -> Self {
        GaussRational::conj(self)
    }
    fn q_pow(_: i32) -> Option<Self> {
        None
    }
    fn try_inv(&self) -> Result<Self, ScalarError> {
        self.inv()
    }
    fn term_prefix(&self) -> (bool, String) {
        coeff_multiplier(self)
    }
}

impl Coefficient for LaurentScalar {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn conj(&self) -> Self {
        LaurentScalar::conj(self)
    }
    fn q_pow(k: i32) -> Option<Self> {
        Some(LaurentScalar::q_pow(k))
    }
    fn try_inv(&self) -> Result<Self, ScalarError> {
        self.powi(-1)
    }
    fn term_prefix(&self) -> (bool, String) {
        if let Some(c) = self.as_constant() {
            return coeff_multiplier(&c);
        }
        if self.len() == 1 {
            let (neg, s) = join_signed_first(self);
            return (neg, s);
        }
        match self.factor_content() {
            Some((content, prim)) => {
                let (neg, m) = coeff_multiplier(&content);
                if m.is_empty() {
                    (neg, format!("({prim})"))
                } else {
                    (neg, format!("{m}*({prim})"))
                }
            }
            None => (false, format!("({self})")),
        }
    }
}

/// A single-term scalar rendered with its sign split off.
fn join_signed_first(s: &LaurentScalar) -> (bool, String) {
    let text = s.to_string();
    match text.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, text),
    }
}

impl std::str::FromStr for LaurentScalar {
    type Err = ScalarError;

    /// Parses the canonical rendering (and any scalar expression in `q`, `i`).
    fn from_str(s: &str) -> Result<Self, ScalarError> {
        let none = |_: &str| None;
        let p = crate::expr::parse(s)
            .and_then(|e| e.eval::<LaurentScalar>("scalar", &none))
            .map_err(|e| ScalarError::Parse(e.to_string()))?;
        Ok(p.as_constant().expect("a scalar expression has no words"))
    }
}

/// `scalar_add`.
pub fn scalar_add(a: &LaurentScalar, b: &LaurentScalar) -> LaurentScalar {
    a + b
}

/// `scalar_mul`.
pub fn scalar_mul(a: &LaurentScalar, b: &LaurentScalar) -> LaurentScalar {
    a * b
}

/// Specializes `q` to a nonzero rational.
pub fn scalar_eval(a: &LaurentScalar, q0: &BigRational) -> Result<GaussRational, ScalarError> {
    a.eval(q0)
}

/// Parses a rational such as `3`, `-2/5` or `0.5` for `--at-q`.
pub fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let s = s.trim();
    let err = || ScalarError::Parse(s.to_string());
    if let Some((n, d)) = s.split_once('/') {
        let n: num_bigint::BigInt = n.trim().parse().map_err(|_| err())?;
        let d: num_bigint::BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        let n: num_bigint::BigInt = digits.parse().map_err(|_| err())?;
        let d = num_bigint::BigInt::from(10u32).pow(frac.len() as u32);
        let r = BigRational::new(n, d);
        return Ok(if neg { -r } else { r });
    }
    let n: num_bigint::BigInt = s.parse().map_err(|_| err())?;
    Ok(BigRational::from_integer(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("1").unwrap(), BigRational::one());
        assert_eq!(parse_rational("-2/4").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational("0.25").unwrap(), BigRational::new(1.into(), 4.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn parse_render_roundtrip() {
        for text in ["(1/2)*q + (1/2)*q^-1", "(1/2)*i*q - (1/2)*i*q^-1", "-(1/2 - 1/2*i)*q^2 + 3", "0", "-i", "(3/4)*i"] {
            let s: LaurentScalar = text.parse().unwrap();
            assert_eq!(s.to_string(), text);
        }
        assert!("a0".parse::<LaurentScalar>().is_err());
    }

    #[test]
    fn factored_prefix() {
        let half = GaussRational::from_ratio(1, 2);
        let s = (LaurentScalar::q() + LaurentScalar::q_pow(-1)).scale(&half);
        assert_eq!(s.term_prefix(), (false, "(1/2)*(q + q^-1)".to_string()));
        let t = (LaurentScalar::q_pow(-1) - LaurentScalar::q()).scale(&GaussRational::imag(half.re.clone()));
        assert_eq!(t.term_prefix(), (true, "(1/2)*i*(q - q^-1)".to_string()));
        assert_eq!((-LaurentScalar::q()).term_prefix(), (true, "q".to_string()));
        assert_eq!(LaurentScalar::one().term_prefix(), (false, String::new()));
    }
}
