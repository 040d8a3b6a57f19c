use std::collections::BTreeMap;

use crate::algebra::{AlgebraError, Generator, NCPoly, RewriteRule, Symbol, Word};
use crate::{Poly, Pres};

/// Name of the central inverse-norm generator.
pub const NINV: &str = "ninv";

/// `base` with a central generator `ninv` adjoined. Every base generator
/// is moved to the right of `ninv`, so normal words read `ninv^k · w`.
pub fn build_localized(base: &Pres) -> Result<Pres, AlgebraError> {
    let rules = base
        .generators()
        .iter()
        .map(|g| RewriteRule::new(g.id.as_str(), NINV, NCPoly::word(Word::parse(&[NINV, g.id.as_str()]))))
        .collect();
    base.extend(&format!("{}-loc", base.name), vec![Generator::new(NINV, 0, 100)], rules)
}

/// A presentation with `ninv` adjoined, together with the element `ninv`
/// inverts. Normal forms cancel `ninv·N` to 1 after ordinary rewriting.
#[derive(Clone, Debug)]
pub struct LocalizedAlgebra {
    pub pres: Pres,
    pub norm: Poly,
}

impl LocalizedAlgebra {
    /// `norm` must be central in `base` and have the leading word `a0·a0`
    /// with coefficient 1, like the q-norm.
    pub fn new(base: &Pres, norm: Poly) -> Result<Self, AlgebraError> {
        Ok(LocalizedAlgebra { pres: build_localized(base)?, norm })
    }

    pub fn ninv() -> Poly {
        Poly::var(NINV)
    }

    /// Rewriting followed by the norm-cancellation pass.
    pub fn normal_form(&self, p: &Poly) -> Result<Poly, AlgebraError> {
        let nf = self.pres.normal_form(p)?;
        self.cancel_norm(nf)
    }

    /// For each power `ninv^k` (k ≥ 1) writes the cofactor as `Q·N + R`
    /// and replaces `ninv^k·Q·N` by `ninv^(k−1)·Q`, repeating from the
    /// highest power down.
    fn cancel_norm(&self, p: Poly) -> Result<Poly, AlgebraError> {
        let ninv = Symbol::new(NINV);
        let mut by_power: BTreeMap<usize, Poly> = BTreeMap::new();
        for (w, c) in p.into_terms() {
            let k = w.iter().take_while(|s| **s == ninv).count();
            by_power.entry(k).or_insert_with(Poly::zero).add_term(w.slice(k, w.degree()), c);
        }
        let top = by_power.keys().next_back().copied().unwrap_or(0);
        let mut out = Poly::zero();
        for k in (0..=top).rev() {
            let Some(cofactor) = by_power.remove(&k) else { continue };
            let rest = if k == 0 {
                cofactor
            } else {
                let (quotient, rest) = self.divide(cofactor)?;
                let below = by_power.entry(k - 1).or_insert_with(Poly::zero);
                *below = &*below + &quotient;
                rest
            };
            let prefix = Word::from_symbols(std::iter::repeat(ninv).take(k));
            for (w, c) in rest.into_terms() {
                out.add_term(prefix.concat(&w), c);
            }
        }
        Ok(out)
    }

    /// Right division by the norm: `p = Q·N + R` where no word of `R`
    /// ends in `a0·a0`. Terms are removed largest first under the key
    /// (count of a0 and a1, count of a0, word), which the leading word
    /// `m·a0²` of `m·N` dominates.
    fn divide(&self, mut p: Poly) -> Result<(Poly, Poly), AlgebraError> {
        let (a0, a1) = (Symbol::new("a0"), Symbol::new("a1"));
        let key = |w: &Word| {
            let n0 = w.iter().filter(|s| **s == a0).count();
            let n1 = w.iter().filter(|s| **s == a1).count();
            (n0 + n1, n0, w.clone())
        };
        let divisible = |w: &Word| w.degree() >= 2 && w[w.degree() - 1] == a0 && w[w.degree() - 2] == a0;
        let mut quotient = Poly::zero();
        loop {
            let lead = p.terms().filter(|(w, _)| divisible(w)).max_by_key(|(w, _)| key(w)).map(|(w, c)| (w.clone(), c.clone()));
            let Some((w, c)) = lead else { break };
            let m = Poly::term(w.slice(0, w.degree() - 2), c);
            let product = self.pres.normal_form(&m.nc_mul(&self.norm))?;
            debug_assert_eq!(product.coeff(&w), m.terms().next().unwrap().1.clone());
            p = &p - &product;
            quotient = &quotient + &m;
        }
        Ok((quotient, p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{build_hq, norm};

    fn loc() -> LocalizedAlgebra {
        LocalizedAlgebra::new(&build_hq(), norm()).unwrap()
    }

    #[test]
    fn ninv_times_norm_is_one() {
        let l = loc();
        let p = LocalizedAlgebra::ninv().nc_mul(&norm());
        assert_eq!(l.normal_form(&p).unwrap(), Poly::one());
        let p = norm().nc_mul(&Poly::var("a2")).nc_mul(&LocalizedAlgebra::ninv());
        assert_eq!(l.normal_form(&p).unwrap(), Poly::var("a2"));
    }

    #[test]
    fn ninv_is_central() {
        let l = loc();
        for k in 0..4 {
            let a = Poly::var(&format!("a{k}"));
            let n = LocalizedAlgebra::ninv();
            assert!(l.normal_form(&(a.nc_mul(&n) - n.nc_mul(&a))).unwrap().is_zero());
        }
        assert!(l.pres.check_local_confluence().unwrap().is_empty());
    }

    #[test]
    fn leaves_non_multiples_alone() {
        let l = loc();
        let p = LocalizedAlgebra::ninv().nc_mul(&Poly::var("a1"));
        assert_eq!(l.normal_form(&p).unwrap(), p);
        let twice = LocalizedAlgebra::ninv().pow(2).nc_mul(&norm()).nc_mul(&Poly::var("a3"));
        assert_eq!(l.normal_form(&twice).unwrap(), LocalizedAlgebra::ninv().nc_mul(&Poly::var("a3")));
    }
}
