use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};

use smallvec::SmallVec;

use super::symbol::Symbol;
use crate::scalar::{join_signed, Coefficient};

/// A monomial: a finite sequence of generators. The empty word is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(SmallVec<[Symbol; 6]>);

impl Word {
    pub fn empty() -> Word {
        Word(SmallVec::new())
    }

    pub fn from_symbols(it: impl IntoIterator<Item = Symbol>) -> Word {
        Word(it.into_iter().collect())
    }

    pub fn parse(names: &[&str]) -> Word {
        Word(names.iter().map(|n| Symbol::new(n)).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn concat(&self, rhs: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&rhs.0);
        Word(v)
    }

    pub fn push(&mut self, s: Symbol) {
        self.0.push(s);
    }

    /// `prefix · middle · suffix` where prefix/suffix are sub-slices of self.
    pub fn splice(&self, start: usize, end: usize, middle: &Word) -> Word {
        let mut v: SmallVec<[Symbol; 6]> = SmallVec::with_capacity(self.0.len() - (end - start) + middle.0.len());
        v.extend_from_slice(&self.0[..start]);
        v.extend_from_slice(&middle.0);
        v.extend_from_slice(&self.0[end..]);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].iter().copied().collect())
    }

    /// `a2*a2*a1` renders as `a2^2*a1`; the empty word as `1`.
    pub fn render(&self, unicode: bool) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let s = self.0[i];
            let mut j = i + 1;
            while j < self.0.len() && self.0[j] == s {
                j += 1;
            }
            let n = j - i;
            let name = s.display_name();
            parts.push(match n {
                1 => name,
                _ if unicode => format!("{name}{}", superscript(n)),
                _ => format!("{name}^{n}"),
            });
            i = j;
        }
        parts.join(if unicode { "·" } else { "*" })
    }
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

impl Deref for Word {
    type Target = [Symbol];
    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(|s| s.as_str()).collect();
        write!(f, "[{}]", names.join(" "))
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// A noncommutative polynomial: a finite sum of `coefficient · word`.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct NCPoly<C> {
    terms: BTreeMap<Word, C>,
}

impl<C: Coefficient> Default for NCPoly<C> {
    fn default() -> Self {
        NCPoly::zero()
    }
}

impl<C: Coefficient> NCPoly<C> {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        NCPoly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        NCPoly::term(Word::empty(), c)
    }

    pub fn term(w: Word, c: C) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(w: Word) -> Self {
        NCPoly::term(w, C::one())
    }

    pub fn var(name: &str) -> Self {
        NCPoly::word(Word::parse(&[name]))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, C)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    /// Removes and returns the greatest term.
    pub fn pop_last(&mut self) -> Option<(Word, C)> {
        self.terms.pop_last()
    }

    pub fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NCPoly<C>, c: &C) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x.mul_ref(c));
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = NCPoly::zero();
        out.add_scaled(self, c);
        out
    }

    /// Formal concatenation product; not normal-formed.
    pub fn nc_mul(&self, rhs: &NCPoly<C>) -> Self {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.concat(w2), c1.mul_ref(c2));
            }
        }
        out
    }

    /// Maximum word length, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.degree()).max()
    }

    /// The constant coefficient if this polynomial has no non-empty words.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> NCPoly<D> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Coefficient, E>(&self, f: impl Fn(&C) -> Result<D, E>) -> Result<NCPoly<D>, E> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Applies `f` to each word and sums the images with their coefficients.
    pub fn map_words(&self, mut f: impl FnMut(&Word) -> NCPoly<C>) -> Self {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w), c);
        }
        out
    }

    pub fn try_map_words<E>(&self, mut f: impl FnMut(&Word) -> Result<NCPoly<C>, E>) -> Result<Self, E> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w)?, c);
        }
        Ok(out)
    }

    /// Every generator that occurs in some word.
    pub fn symbols(&self) -> std::collections::BTreeSet<Symbol> {
        self.terms.keys().flat_map(|w| w.iter().copied()).collect()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = NCPoly::one();
        for _ in 0..n {
            acc = acc.nc_mul(self);
        }
        acc
    }

    /// Renders with terms sorted by `key` (ascending).
    pub fn render_by<K: Ord>(&self, unicode: bool, key: impl Fn(&Word) -> K) -> String {
        let mut terms: Vec<(&Word, &C)> = self.terms.iter().collect();
        terms.sort_by_key(|(w, _)| key(w));
        join_signed(terms.into_iter().map(|(w, c)| render_term(w, c, unicode)))
    }
}

/// One signed summand `coeff*word`.
pub(crate) fn render_term<C: Coefficient>(w: &Word, c: &C, unicode: bool) -> (bool, String) {
    let (neg, prefix) = c.term_prefix();
    let body = if w.degree() == 0 {
        if prefix.is_empty() {
            "1".to_string()
        } else {
            constant_text(c, neg)
        }
    } else if prefix.is_empty() {
        w.render(unicode)
    } else {
        format!("{prefix}{}{}", if unicode { "·" } else { "*" }, w.render(unicode))
    };
    (neg, body)
}

/// A scalar standing alone as a summand, with its sign split off.
fn constant_text<C: Coefficient>(c: &C, neg: bool) -> String {
    let s = if neg { (-c.clone()).to_string() } else { c.to_string() };
    if s.contains(" + ") || s.contains(" - ") {
        format!("({s})")
    } else {
        s
    }
}

impl<C: Coefficient> fmt::Display for NCPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_by(false, |w| (w.degree(), w.clone())))
    }
}

impl<C: fmt::Debug> fmt::Debug for NCPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<C: Coefficient> Add for NCPoly<C> {
    type Output = NCPoly<C>;
    fn add(mut self, rhs: NCPoly<C>) -> NCPoly<C> {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl<'a, C: Coefficient> Add<&'a NCPoly<C>> for &'a NCPoly<C> {
    type Output = NCPoly<C>;
    fn add(self, rhs: &NCPoly<C>) -> NCPoly<C> {
        self.clone() + rhs.clone()
    }
}

impl<C: Coefficient> Sub for NCPoly<C> {
    type Output = NCPoly<C>;
    fn sub(mut self, rhs: NCPoly<C>) -> NCPoly<C> {
        for (w, c) in rhs.terms {
            self.add_term(w, -c);
        }
        self
    }
}

impl<'a, C: Coefficient> Sub<&'a NCPoly<C>> for &'a NCPoly<C> {
    type Output = NCPoly<C>;
    fn sub(self, rhs: &NCPoly<C>) -> NCPoly<C> {
        self.clone() - rhs.clone()
    }
}

impl<C: Coefficient> Neg for NCPoly<C> {
    type Output = NCPoly<C>;
    fn neg(self) -> NCPoly<C> {
        NCPoly { terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect() }
    }
}

impl<'a, C: Coefficient> Mul<&'a NCPoly<C>> for &'a NCPoly<C> {
    type Output = NCPoly<C>;
    fn mul(self, rhs: &NCPoly<C>) -> NCPoly<C> {
        self.nc_mul(rhs)
    }
}

impl<C: Coefficient> Mul for NCPoly<C> {
    type Output = NCPoly<C>;
    fn mul(self, rhs: NCPoly<C>) -> NCPoly<C> {
        self.nc_mul(&rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{GaussRational, LaurentScalar};
    use num_traits::One;

    type P = NCPoly<LaurentScalar>;

    #[test]
    fn concatenation_product() {
        let p = P::var("a0").nc_mul(&P::var("a1"));
        assert_eq!(p.coeff(&Word::parse(&["a0", "a1"])), LaurentScalar::one());
        let two_q = P::var("a2").scale(&LaurentScalar::q().scale(&GaussRational::from_integer(2)));
        let i_a3 = P::var("a3").scale(&LaurentScalar::i());
        let r = two_q.nc_mul(&i_a3);
        let expect = LaurentScalar::q().scale(&(GaussRational::from_integer(2) * GaussRational::i()));
        assert_eq!(r.coeff(&Word::parse(&["a2", "a3"])), expect);
        let s = (P::var("a0") + P::var("a1")).nc_mul(&P::var("a2"));
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn cancellation_leaves_empty_map() {
        let p = P::var("a0") - P::var("a0");
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn word_rendering() {
        let w = Word::parse(&["a2", "a2", "da1", "a0"]);
        assert_eq!(w.render(false), "a2^2*d(a1)*a0");
        assert_eq!(w.render(true), "a2²·d(a1)·a0");
        assert_eq!(Word::empty().render(false), "1");
    }

    #[test]
    fn polynomial_rendering() {
        let half = GaussRational::from_ratio(1, 2);
        let c = (LaurentScalar::q() + LaurentScalar::q_pow(-1)).scale(&half);
        let p = P::var("a1") - P::term(Word::parse(&["a2", "a2"]), c) + P::constant(LaurentScalar::from_ratio(-3, 2));
        assert_eq!(p.to_string(), "-3/2 + a1 - (1/2)*(q + q^-1)*a2^2");
    }
}
