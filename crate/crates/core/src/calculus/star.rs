use std::collections::BTreeMap;

use crate::algebra::{AlgebraError, NCPoly, Symbol};
use num_rational::BigRational;

use crate::presentations::{specialize_poly, Env};
use crate::scalar::Coefficient;
use crate::{LaurentScalar, Poly, Pres};

/// Star images of generators.
#[derive(Clone, Debug, Default)]
pub struct StarTable {
    images: BTreeMap<Symbol, Poly>,
}

impl StarTable {
    pub fn insert(&mut self, name: &str, image: Poly) {
        self.images.insert(Symbol::new(name), image);
    }

    pub fn get(&self, s: Symbol) -> Option<&Poly> {
        self.images.get(&s)
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.images.keys().copied()
    }

    /// Builds the table for every generator family present in `pres`:
    /// functions, units, differentials, Cartan–Maurer forms and the inverse
    /// norm. Grassmann generators have no conjugation and stay absent.
    pub fn for_presentation(pres: &Pres) -> StarTable {
        let env = Env::new(pres.generators());
        let mut t = StarTable::default();
        let a_star = [
            "a0",
            "a1",
            "(q + q^-1)/2*a2 - i*(q - q^-1)/2*a3",
            "i*(q - q^-1)/2*a2 + (q + q^-1)/2*a3",
        ];
        let da_star = [
            "q^2*da0",
            "q^2*da1",
            "q^2*((q + q^-1)/2*da2 - i*(q - q^-1)/2*da3)",
            "q^2*(i*(q - q^-1)/2*da2 + (q + q^-1)/2*da3)",
        ];
        let w_star = ["q^-2*w0 + i*(q^-2 - 1)*w1", "w1", "w2", "w3"];
        for k in 0..4 {
            if pres.has_generator(&format!("a{k}")) {
                t.insert(&format!("a{k}"), env.p(a_star[k]));
            }
            if pres.has_generator(&format!("da{k}")) {
                t.insert(&format!("da{k}"), env.p(da_star[k]));
            }
            if pres.has_generator(&format!("w{k}")) {
                t.insert(&format!("w{k}"), env.p(w_star[k]));
            }
            if pres.has_generator(&format!("e{k}")) {
                t.insert(&format!("e{k}"), -Poly::var(&format!("e{k}")));
            }
        }
        if pres.has_generator("ninv") {
            t.insert("ninv", Poly::var("ninv"));
        }
        t
    }

    /// The table with coefficients evaluated at `q0`, for specialized
    /// presentations.
    pub fn at_q(&self, q0: &BigRational) -> Result<StarTable, AlgebraError> {
        let mut t = StarTable::default();
        for (s, p) in &self.images {
            t.images.insert(*s, specialize_poly(p, q0)?);
        }
        Ok(t)
    }

    /// Conjugate-linear antihomomorphism: words are reversed, letters
    /// replaced by their images, coefficients conjugated. No sign is
    /// attached to reordering forms. Not normal-formed.
    pub fn apply(&self, p: &Poly) -> Result<Poly, AlgebraError> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let mut acc = NCPoly::constant(Coefficient::conj(c));
            for s in w.iter().rev() {
                let img = self
                    .images
                    .get(s)
                    .ok_or_else(|| AlgebraError::Other(format!("no star image for {}", s.display_name())))?;
                acc = acc.nc_mul(img);
            }
            out = out + acc;
        }
        Ok(out)
    }
}

/// `star(p)` normal-formed in `pres`.
pub fn star(p: &Poly, table: &StarTable, pres: &Pres) -> Result<Poly, AlgebraError> {
    pres.normal_form(&table.apply(p)?)
}

/// The coefficient `q^2` relating the star of a differential to the
/// differential of the star.
pub fn q_squared() -> LaurentScalar {
    LaurentScalar::q_pow(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{build_cartan_maurer, build_hq, build_units, norm};

    #[test]
    fn star_of_a2() {
        let hq = build_hq();
        let t = StarTable::for_presentation(&hq);
        let s = star(&Poly::var("a2"), &t, &hq).unwrap();
        assert_eq!(hq.render(&s, false), "(1/2)*(q + q^-1)*a2 - (1/2)*i*(q - q^-1)*a3");
    }

    #[test]
    fn involutive_on_functions_and_norm_selfadjoint() {
        let hq = build_hq();
        let t = StarTable::for_presentation(&hq);
        for k in 0..4 {
            let a = Poly::var(&format!("a{k}"));
            let twice = star(&t.apply(&a).unwrap(), &t, &hq).unwrap();
            assert_eq!(twice, a);
        }
        assert_eq!(star(&norm(), &t, &hq).unwrap(), hq.normal_form(&norm()).unwrap());
    }

    #[test]
    fn star_of_units_and_forms() {
        let u = build_units();
        let t = StarTable::for_presentation(&u);
        assert_eq!(star(&Poly::var("e2"), &t, &u).unwrap(), -Poly::var("e2"));
        let cm = build_cartan_maurer();
        let t = StarTable::for_presentation(&cm);
        let s = star(&Poly::var("w0"), &t, &cm).unwrap();
        assert_eq!(cm.render(&s, false), "q^-2*w0 - i*(1 - q^-2)*w1");
    }

    #[test]
    fn respects_the_relations() {
        let hq = build_hq();
        let t = StarTable::for_presentation(&hq);
        for r in hq.rules() {
            assert!(star(&r.relation(), &t, &hq).unwrap().is_zero(), "{}", r.label());
        }
    }

    #[test]
    fn missing_entry_is_an_error() {
        let g = crate::presentations::build_grassmann();
        let t = StarTable::for_presentation(&g);
        assert!(t.apply(&Poly::var("psi0")).is_err());
    }
}
