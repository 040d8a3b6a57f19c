//! Laurent polynomials in `q` over ℚ(i).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gauss::{fmt_rational, GaussRational};
use super::ScalarError;

/// `Σ c_e q^e` stored sparsely; zero coefficients are never kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentScalar {
    terms: BTreeMap<i32, GaussRational>,
}

impl LaurentScalar {
    pub fn constant(c: GaussRational) -> Self {
        LaurentScalar::monomial(c, 0)
    }

    pub fn monomial(c: GaussRational, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentScalar { terms }
    }

    /// The deformation parameter itself.
    pub fn q() -> Self {
        LaurentScalar::q_pow(1)
    }

    pub fn q_pow(exp: i32) -> Self {
        LaurentScalar::monomial(GaussRational::one(), exp)
    }

    pub fn i() -> Self {
        LaurentScalar::constant(GaussRational::i())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        LaurentScalar::constant(GaussRational::from_ratio(num, den))
    }

    pub fn from_integer(n: i64) -> Self {
        LaurentScalar::constant(GaussRational::from_integer(n))
    }

    /// Iterates `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &GaussRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i32) -> GaussRational {
        self.terms.get(&exp).cloned().unwrap_or_else(GaussRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if the scalar has no `q` dependence.
    pub fn as_constant(&self) -> Option<GaussRational> {
        match self.terms.len() {
            0 => Some(GaussRational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, exp: i32, c: &GaussRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(GaussRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        if c.is_zero() {
            return LaurentScalar::zero();
        }
        LaurentScalar { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentScalar { terms: self.terms.iter().map(|(e, x)| (e + k, x.clone())).collect() }
    }

    /// Complex conjugation of the coefficients; `q` is real.
    pub fn conj(&self) -> Self {
        LaurentScalar { terms: self.terms.iter().map(|(e, x)| (*e, x.conj())).collect() }
    }

    /// Integer power. Negative exponents are only defined for monomials.
    pub fn powi(&self, exp: i32) -> Result<Self, ScalarError> {
        if exp < 0 {
            if self.terms.len() != 1 {
                return Err(ScalarError::NotInvertible(self.to_string()));
            }
            let (e, c) = self.terms.iter().next().unwrap();
            let inv = c.inv()?.pow(exp.unsigned_abs());
            return Ok(LaurentScalar::monomial(inv, -e * exp.abs()));
        }
        let mut acc = LaurentScalar::one();
        let mut base = self.clone();
        let mut n = exp as u32;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Exact division; succeeds when the divisor is a nonzero monomial.
    pub fn checked_div(&self, rhs: &LaurentScalar) -> Result<Self, ScalarError> {
        Ok(self * &rhs.powi(-1)?)
    }

    /// Substitutes `q = q0`.
    pub fn eval(&self, q0: &BigRational) -> Result<GaussRational, ScalarError> {
        if q0.is_zero() {
            return Err(ScalarError::ZeroParameter);
        }
        let q0 = GaussRational::real(q0.clone());
        let mut acc = GaussRational::zero();
        for (e, c) in &self.terms {
            acc += c * &q0.powi(*e)?;
        }
        Ok(acc)
    }

    /// Splits `self = content * primitive`, where `content` is a real or
    /// imaginary rational and `primitive` has coprime integer coefficients
    /// with a positive leading (highest power) coefficient.
    ///
    /// Returns `None` when the coefficients mix real and imaginary parts.
    pub fn factor_content(&self) -> Option<(GaussRational, LaurentScalar)> {
        if self.is_zero() {
            return None;
        }
        let real = self.terms.values().all(|c| c.is_real());
        let imag = self.terms.values().all(|c| c.is_imaginary());
        if !real && !imag {
            return None;
        }
        let part = |c: &GaussRational| if real { c.re.clone() } else { c.im.clone() };
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            let r = part(c);
            num_gcd = num_gcd.gcd(r.numer());
            den_lcm = den_lcm.lcm(r.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        let lead = part(self.terms.values().next_back().unwrap());
        if lead.is_negative() {
            content = -content;
        }
        let primitive = LaurentScalar {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, GaussRational::real(part(c) / &content)))
                .collect(),
        };
        let content = if real { GaussRational::real(content) } else { GaussRational::imag(content) };
        Some((content, primitive))
    }
}

impl Zero for LaurentScalar {
    fn zero() -> Self {
        LaurentScalar { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentScalar {
    fn one() -> Self {
        LaurentScalar::constant(GaussRational::one())
    }
}

impl From<GaussRational> for LaurentScalar {
    fn from(c: GaussRational) -> Self {
        LaurentScalar::constant(c)
    }
}

impl<'a> Add<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentScalar {
    type Output = LaurentScalar;
    fn add(mut self, rhs: LaurentScalar) -> LaurentScalar {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: &LaurentScalar) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl AddAssign for LaurentScalar {
    fn add_assign(&mut self, rhs: LaurentScalar) {
        *self += &rhs;
    }
}

impl<'a> Sub<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Sub for LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: LaurentScalar) -> LaurentScalar {
        &self - &rhs
    }
}

impl<'a> Mul<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: LaurentScalar) -> LaurentScalar {
        &self * &rhs
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<'a> Neg for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        self.clone().neg()
    }
}

/// `q`, `q^3`, `q^-1`; empty for exponent 0.
pub(crate) fn fmt_q_power(exp: i32) -> String {
    match exp {
        0 => String::new(),
        1 => "q".to_string(),
        e => format!("q^{e}"),
    }
}

/// Splits a Gaussian coefficient into a sign and the multiplier text that
/// precedes `*factor`. An empty multiplier means the coefficient is ±1.
pub(crate) fn coeff_multiplier(c: &GaussRational) -> (bool, String) {
    if c.is_real() {
        let neg = c.re.is_negative();
        let a = c.re.abs();
        let text = if a.is_one() {
            String::new()
        } else if a.is_integer() {
            fmt_rational(&a)
        } else {
            format!("({})", fmt_rational(&a))
        };
        (neg, text)
    } else if c.is_imaginary() {
        let neg = c.im.is_negative();
        let b = c.im.abs();
        let text = if b.is_one() {
            "i".to_string()
        } else if b.is_integer() {
            format!("{}*i", fmt_rational(&b))
        } else {
            format!("({})*i", fmt_rational(&b))
        };
        (neg, text)
    } else {
        let neg = c.re.is_negative();
        let c = if neg { -c } else { c.clone() };
        (neg, format!("({c})"))
    }
}

/// Renders a standalone constant term, without its sign.
fn constant_body(c: &GaussRational) -> (bool, String) {
    let (neg, m) = coeff_multiplier(c);
    if m.is_empty() {
        (neg, "1".to_string())
    } else if c.is_real() {
        (neg, fmt_rational(&c.re.abs()))
    } else {
        (neg, m)
    }
}

/// Joins signed summands as `a + b - c`, with a leading `-` when needed.
pub(crate) fn join_signed(parts: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (neg, body) in parts {
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl LaurentScalar {
    /// Signed summands in descending exponent order.
    fn summands(&self) -> Vec<(bool, String)> {
        self.terms
            .iter()
            .rev()
            .map(|(e, c)| {
                if *e == 0 {
                    constant_body(c)
                } else {
                    let (neg, m) = coeff_multiplier(c);
                    let qp = fmt_q_power(*e);
                    if m.is_empty() {
                        (neg, qp)
                    } else {
                        (neg, format!("{m}*{qp}"))
                    }
                }
            })
            .collect()
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_signed(self.summands()))
    }
}
