use std::collections::HashMap;

use crate::algebra::{NCPoly, Presentation, Symbol, Word};
use crate::scalar::Coefficient;

/// A graded derivation given by its values on generators:
/// `D(x·w) = D(x)·w + (−1)^grade(x) x·D(w)`.
#[derive(Clone, Debug)]
pub struct Derivation<C> {
    images: HashMap<Symbol, NCPoly<C>>,
    grades: HashMap<Symbol, u32>,
}

impl<C: Coefficient> Derivation<C> {
    /// Generators without an image are sent to 0.
    pub fn new(pres: &Presentation<C>, images: impl IntoIterator<Item = (Symbol, NCPoly<C>)>) -> Self {
        Derivation {
            images: images.into_iter().collect(),
            grades: pres.generators().iter().map(|g| (g.id, g.grade as u32)).collect(),
        }
    }

    /// The exterior differential of a calculus: `x ↦ dx` for every
    /// generator `x` whose differential `dx` is also a generator.
    pub fn exterior(pres: &Presentation<C>) -> Self {
        let images: Vec<_> = pres
            .generators()
            .iter()
            .filter(|g| pres.has_generator(&format!("d{}", g.id)))
            .map(|g| (g.id, NCPoly::var(&format!("d{}", g.id))))
            .collect();
        Derivation::new(pres, images)
    }

    pub fn image(&self, s: Symbol) -> Option<&NCPoly<C>> {
        self.images.get(&s)
    }

    /// Letter-by-letter expansion; the sign is the grade of the prefix.
    pub fn apply_word(&self, w: &Word) -> NCPoly<C> {
        let mut out = NCPoly::zero();
        let mut prefix_grade = 0u32;
        for (k, s) in w.iter().enumerate() {
            if let Some(img) = self.images.get(s) {
                let sign = if prefix_grade % 2 == 0 { C::one() } else { -C::one() };
                let prefix = NCPoly::word(w.slice(0, k));
                let suffix = NCPoly::word(w.slice(k + 1, w.degree()));
                out.add_scaled(&prefix.nc_mul(img).nc_mul(&suffix), &sign);
            }
            prefix_grade += self.grades.get(s).copied().unwrap_or(0);
        }
        out
    }

    /// Linear extension; the result is not normal-formed.
    pub fn apply(&self, p: &NCPoly<C>) -> NCPoly<C> {
        p.map_words(|w| self.apply_word(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::build_dga;
    use crate::Poly;

    #[test]
    fn differential_of_generators() {
        let dga = build_dga();
        let d = Derivation::exterior(&dga);
        assert_eq!(d.apply(&Poly::var("a0")), Poly::var("da0"));
        assert!(d.apply(&Poly::var("da0")).is_zero());
    }

    #[test]
    fn graded_sign() {
        let dga = build_dga();
        let d = Derivation::exterior(&dga);
        let p = Poly::var("da0").nc_mul(&Poly::var("a1"));
        assert_eq!(d.apply(&p), -Poly::var("da0").nc_mul(&Poly::var("da1")));
    }
}
