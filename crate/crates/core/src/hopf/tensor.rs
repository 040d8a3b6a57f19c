use std::collections::BTreeMap;

use crate::algebra::{AlgebraError, NCPoly, Presentation, Word};
use crate::scalar::{join_signed, Coefficient};

/// An element of an n-fold tensor power: sums of `c · w1 ⊗ … ⊗ wn`.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorPoly<C> {
    legs: usize,
    terms: BTreeMap<Vec<Word>, C>,
}

impl<C: Coefficient> TensorPoly<C> {
    pub fn zero(legs: usize) -> Self {
        TensorPoly { legs, terms: BTreeMap::new() }
    }

    /// `1 ⊗ … ⊗ 1`.
    pub fn one(legs: usize) -> Self {
        let mut t = TensorPoly::zero(legs);
        t.add_term(vec![Word::empty(); legs], C::one());
        t
    }

    /// `p1 ⊗ p2 ⊗ …`.
    pub fn pure(factors: &[NCPoly<C>]) -> Self {
        let mut t: TensorPoly<C> = TensorPoly::one(0);
        for p in factors {
            let mut next = TensorPoly::zero(t.legs + 1);
            for (ws, c) in &t.terms {
                for (w, d) in p.terms() {
                    let mut v = ws.clone();
                    v.push(w.clone());
                    next.add_term(v, c.mul_ref(d));
                }
            }
            t = next;
        }
        t
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &C)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, ws: Vec<Word>, c: C) {
        assert_eq!(ws.len(), self.legs, "tensor leg count mismatch");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(ws.clone()).or_insert_with(C::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&ws);
        }
    }

    pub fn add_scaled(&mut self, other: &TensorPoly<C>, c: &C) {
        for (ws, x) in &other.terms {
            self.add_term(ws.clone(), x.mul_ref(c));
        }
    }

    pub fn sub(&self, other: &TensorPoly<C>) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-C::one());
        out
    }

    /// Legwise product `(u ⊗ v)(u' ⊗ v') = uu' ⊗ vv'`.
    pub fn mul(&self, rhs: &TensorPoly<C>) -> Self {
        assert_eq!(self.legs, rhs.legs, "tensor leg count mismatch");
        let mut out = TensorPoly::zero(self.legs);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                let ws = w1.iter().zip(w2).map(|(a, b)| a.concat(b)).collect();
                out.add_term(ws, c1.mul_ref(c2));
            }
        }
        out
    }

    /// Replaces leg `i` through a linear map into an m-fold tensor; the
    /// result has `legs − 1 + m` legs.
    pub fn map_leg(
        &self,
        i: usize,
        mut f: impl FnMut(&Word) -> Result<TensorPoly<C>, AlgebraError>,
    ) -> Result<Self, AlgebraError> {
        let mut out: Option<TensorPoly<C>> = None;
        for (ws, c) in &self.terms {
            let img = f(&ws[i])?;
            let acc = out.get_or_insert_with(|| TensorPoly::zero(self.legs - 1 + img.legs));
            for (vs, d) in &img.terms {
                let mut nw = ws[..i].to_vec();
                nw.extend(vs.iter().cloned());
                nw.extend(ws[i + 1..].iter().cloned());
                acc.add_term(nw, c.mul_ref(d));
            }
        }
        Ok(out.unwrap_or_else(|| TensorPoly::zero(self.legs)))
    }

    /// Multiplies all legs together in order.
    pub fn multiply_legs(&self) -> NCPoly<C> {
        let mut out = NCPoly::zero();
        for (ws, c) in &self.terms {
            let w = ws.iter().fold(Word::empty(), |acc, w| acc.concat(w));
            out.add_term(w, c.clone());
        }
        out
    }

    /// Normal-forms each leg independently.
    pub fn normal_form(&self, pres: &Presentation<C>) -> Result<Self, AlgebraError> {
        let mut cache: BTreeMap<Word, NCPoly<C>> = BTreeMap::new();
        let mut out = TensorPoly::zero(self.legs);
        for (ws, c) in &self.terms {
            let mut partial: TensorPoly<C> = TensorPoly::one(0);
            for w in ws {
                if !cache.contains_key(w) {
                    cache.insert(w.clone(), pres.normal_form_word(w)?);
                }
                let nf = &cache[w];
                let mut next = TensorPoly::zero(partial.legs + 1);
                for (vs, d) in &partial.terms {
                    for (v, e) in nf.terms() {
                        let mut nv = vs.clone();
                        nv.push(v.clone());
                        next.add_term(nv, d.mul_ref(e));
                    }
                }
                partial = next;
            }
            out.add_scaled(&partial, c);
        }
        Ok(out)
    }

    /// ` (x) ` between legs, or `⊗` with `unicode`.
    pub fn render(&self, pres: &Presentation<C>, unicode: bool) -> String {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(ws, _)| ws.iter().map(|w| pres.display_key(w)).collect::<Vec<_>>());
        let sep = if unicode { " ⊗ " } else { " (x) " };
        join_signed(terms.into_iter().map(|(ws, c)| {
            let (neg, prefix) = c.term_prefix();
            let body = ws.iter().map(|w| w.render(unicode)).collect::<Vec<_>>().join(sep);
            if prefix.is_empty() {
                (neg, body)
            } else {
                (neg, format!("{prefix}*({body})"))
            }
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::build_hq;
    use crate::Poly;

    #[test]
    fn pure_and_product() {
        let t = TensorPoly::pure(&[Poly::var("a0"), Poly::var("a1") + Poly::var("a2")]);
        assert_eq!(t.terms().count(), 2);
        let sq = t.mul(&t);
        assert_eq!(sq.legs(), 2);
        assert_eq!(sq.multiply_legs().degree(), Some(4));
    }

    #[test]
    fn leg_normal_form() {
        let hq = build_hq();
        let t = TensorPoly::pure(&[Poly::var("a2").nc_mul(&Poly::var("a3")), Poly::var("a1")]);
        let nf = t.normal_form(&hq).unwrap();
        assert_eq!(nf.render(&hq, false), "a3*a2 (x) a1");
        assert_eq!(nf.render(&hq, true), "a3·a2 ⊗ a1");
    }
}
