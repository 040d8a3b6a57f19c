use std::collections::HashMap;

use super::localized::{LocalizedAlgebra, NINV};
use super::tensor::TensorPoly;
use crate::algebra::{AlgebraError, Symbol, Word};
use crate::calculus::StarTable;
use crate::presentations::Env;
use num_traits::{One, Zero};
use crate::{LaurentScalar, Poly, Pres};

/// `Δ(a_k) = Σ sign · a_i ⊗ a_j`, listed as `(sign, i, j)`.
const DELTA: [[(i8, usize, usize); 4]; 4] = [
    [(1, 0, 0), (-1, 1, 1), (-1, 2, 2), (-1, 3, 3)],
    [(1, 0, 1), (1, 1, 0), (1, 2, 3), (-1, 3, 2)],
    [(1, 0, 2), (1, 2, 0), (1, 3, 1), (-1, 1, 3)],
    [(1, 0, 3), (1, 3, 0), (1, 1, 2), (-1, 2, 1)],
];

fn generator_coproduct(s: Symbol) -> Result<TensorPoly<LaurentScalar>, AlgebraError> {
    if s.as_str() == NINV {
        let n = Poly::var(NINV);
        return Ok(TensorPoly::pure(&[n.clone(), n]));
    }
    let k = a_index(s).ok_or_else(|| no_image("coproduct", s))?;
    let mut t = TensorPoly::zero(2);
    for &(sign, i, j) in &DELTA[k] {
        let w = vec![Word::parse(&[&format!("a{i}")]), Word::parse(&[&format!("a{j}")])];
        t.add_term(w, LaurentScalar::from_integer(sign as i64));
    }
    Ok(t)
}

fn a_index(s: Symbol) -> Option<usize> {
    match s.as_str() {
        "a0" => Some(0),
        "a1" => Some(1),
        "a2" => Some(2),
        "a3" => Some(3),
        _ => None,
    }
}

fn no_image(map: &str, s: Symbol) -> AlgebraError {
    AlgebraError::Other(format!("{map} is not defined on {}", s.display_name()))
}

/// The algebra homomorphism Δ, legs normal-formed in `pres`.
pub fn coproduct(p: &Poly, pres: &Pres) -> Result<TensorPoly<LaurentScalar>, AlgebraError> {
    let mut cache: HashMap<Symbol, TensorPoly<LaurentScalar>> = HashMap::new();
    let mut out = TensorPoly::zero(2);
    for (w, c) in p.terms() {
        let mut acc = TensorPoly::one(2);
        for s in w.iter() {
            if !cache.contains_key(s) {
                cache.insert(*s, generator_coproduct(*s)?);
            }
            acc = acc.mul(&cache[s]).normal_form(pres)?;
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

/// The counit on one generator: `ε(a_k) = δ_0k`, `ε(ninv) = 1`.
fn generator_counit(s: Symbol) -> Result<LaurentScalar, AlgebraError> {
    match (s.as_str(), a_index(s)) {
        (NINV, _) | (_, Some(0)) => Ok(LaurentScalar::one()),
        (_, Some(_)) => Ok(LaurentScalar::zero()),
        _ => Err(no_image("counit", s)),
    }
}

/// The algebra homomorphism ε into the coefficient ring.
pub fn counit(p: &Poly) -> Result<LaurentScalar, AlgebraError> {
    let mut out = LaurentScalar::zero();
    for (w, c) in p.terms() {
        let mut acc = c.clone();
        for s in w.iter() {
            acc = acc * generator_counit(*s)?;
            if acc.is_zero() {
                break;
            }
        }
        out += &acc;
    }
    Ok(out)
}

/// Generator images of the antipode: `S(a_k) = ninv·(2δ_0k a0 − a_k*)`,
/// `S(ninv) = N`.
#[derive(Clone, Debug)]
pub struct Antipode {
    images: HashMap<Symbol, Poly>,
    pub algebra: LocalizedAlgebra,
}

impl Antipode {
    /// `star` supplies `a_k*` and must match the coefficients of `algebra`.
    pub fn new(algebra: LocalizedAlgebra, star: &StarTable) -> Result<Antipode, AlgebraError> {
        let env = Env::new(algebra.pres.generators());
        let mut images = HashMap::new();
        for k in 0..4 {
            let a = Symbol::new(&format!("a{k}"));
            let a_star = star.get(a).ok_or_else(|| no_image("star", a))?;
            let inner = if k == 0 { env.p("2*a0") - a_star.clone() } else { -a_star.clone() };
            images.insert(a, LocalizedAlgebra::ninv().nc_mul(&inner));
        }
        images.insert(Symbol::new(NINV), algebra.norm.clone());
        Ok(Antipode { images, algebra })
    }

    pub fn image(&self, s: Symbol) -> Option<&Poly> {
        self.images.get(&s)
    }

    /// Linear antihomomorphism; normal-formed with norm cancellation.
    pub fn apply(&self, p: &Poly) -> Result<Poly, AlgebraError> {
        let mut out = Poly::zero();
        for (w, c) in p.terms() {
            let mut acc = Poly::constant(c.clone());
            for s in w.iter().rev() {
                let img = self.images.get(s).ok_or_else(|| no_image("antipode", *s))?;
                acc = self.algebra.pres.normal_form(&acc.nc_mul(img))?;
            }
            out = out + acc;
        }
        self.algebra.normal_form(&out)
    }

    /// `m∘(S ⊗ id)∘Δ` (or `m∘(id ⊗ S)∘Δ` with `right`), after norm cancellation.
    pub fn convolution(&self, p: &Poly, right: bool) -> Result<Poly, AlgebraError> {
        let delta = coproduct(p, &self.algebra.pres)?;
        let leg = usize::from(right);
        let mapped = delta.map_leg(leg, |w| Ok(TensorPoly::pure(&[self.apply(&Poly::word(w.clone()))?])))?;
        self.algebra.normal_form(&mapped.multiply_legs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{build_hq, norm};

    fn antipode() -> Antipode {
        let hq = build_hq();
        Antipode::new(LocalizedAlgebra::new(&hq, norm()).unwrap(), &StarTable::for_presentation(&hq)).unwrap()
    }

    #[test]
    fn coproduct_of_a1_and_a3() {
        let hq = build_hq();
        let d = coproduct(&Poly::var("a1"), &hq).unwrap();
        assert_eq!(d.render(&hq, false), "a0 (x) a1 + a1 (x) a0 + a2 (x) a3 - a3 (x) a2");
        let d = coproduct(&Poly::var("a3"), &hq).unwrap();
        assert_eq!(d.render(&hq, false), "a0 (x) a3 + a1 (x) a2 - a2 (x) a1 + a3 (x) a0");
        assert_eq!(coproduct(&Poly::one(), &hq).unwrap(), TensorPoly::one(2));
    }

    #[test]
    fn counit_values() {
        assert_eq!(counit(&Poly::var("a0")).unwrap(), LaurentScalar::one());
        assert!(counit(&Poly::var("a3")).unwrap().is_zero());
        assert!(counit(&Poly::var("a0").nc_mul(&Poly::var("a2"))).unwrap().is_zero());
        assert!(counit(&Poly::var("da0")).is_err());
    }

    #[test]
    fn antipode_on_generators() {
        let s = antipode();
        let r = |p: &Poly| s.algebra.pres.render(p, false);
        assert_eq!(r(&s.apply(&Poly::var("a0")).unwrap()), "Ninv*a0");
        assert_eq!(r(&s.apply(&Poly::var("a1")).unwrap()), "-Ninv*a1");
        assert_eq!(
            r(&s.apply(&Poly::var("a2")).unwrap()),
            "-(1/2)*(q + q^-1)*Ninv*a2 + (1/2)*i*(q - q^-1)*Ninv*a3"
        );
        assert_eq!(s.apply(&Poly::var("ninv")).unwrap(), s.algebra.pres.normal_form(&norm()).unwrap());
    }

    #[test]
    fn antipode_law_on_a0() {
        let s = antipode();
        assert_eq!(s.convolution(&Poly::var("a0"), false).unwrap(), Poly::one());
        assert!(s.convolution(&Poly::var("a2"), true).unwrap().is_zero());
    }
}
