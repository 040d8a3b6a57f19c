use num_bigint::BigInt;
use num_rational::BigRational;

use super::Env;
use crate::algebra::{Generator, Presentation, Symbol};
use crate::{LaurentScalar, Poly, Pres};

fn grassmann_generators() -> Vec<Generator> {
    (0..4).map(|k| Generator::new(&format!("psi{k}"), 1, k)).collect()
}

/// The ten relations of the q-deformed Grassmann quaternion, coefficients as
/// printed.
pub fn build_grassmann() -> Pres {
    let gens = grassmann_generators();
    let env = Env::new(&gens);
    let rules = vec![
        env.rule("psi0", "psi0", "0"),
        env.rule("psi1", "psi1", "0"),
        env.rule("psi0", "psi1", "-psi1*psi0"),
        env.rule("psi0", "psi2", "-(q + q^-1)/2*psi2*psi0 + i*(q - q^-1)/2*psi2*psi1"),
        env.rule("psi0", "psi3", "-(q + q^-1)/2*psi3*psi0 + i*(q - q^-1)/2*psi3*psi1"),
        env.rule("psi1", "psi2", "-(q + q^-1)/2*psi2*psi1 - i*(q - q^-1)/2*psi2*psi0"),
        env.rule("psi1", "psi3", "-(q + q^-1)/2*psi3*psi1 - i*(q - q^-1)/2*psi3*psi0"),
        env.rule("psi2", "psi2", "i*(q - q^-1)/2*psi1*psi0"),
        env.rule("psi3", "psi3", "i*(q - q^-1)/2*psi1*psi0"),
        env.rule("psi2", "psi3", "-psi3*psi2"),
    ];
    Presentation::new("grassmann", gens, rules)
        .expect("grassmann presentation is valid")
        .with_description("anticommuting quaternion components psi0..psi3")
}

/// One Grassmann relation compared with the matching two-form relation.
#[derive(Clone, Debug, PartialEq)]
pub struct CrosscheckEntry {
    /// The relation, written `psi_i*psi_j`.
    pub relation: String,
    /// Right-hand side with `psi_k` renamed to `da_k`.
    pub grassmann: Poly,
    pub differential: Poly,
    /// `differential − grassmann`.
    pub delta: Poly,
    /// When the two sides differ by a constant factor, that factor.
    pub factor: Option<LaurentScalar>,
}

impl CrosscheckEntry {
    pub fn matches(&self) -> bool {
        self.delta.is_zero()
    }
}

fn rename_psi(p: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (w, c) in p.terms() {
        let w = w.iter().map(|s| Symbol::new(&s.as_str().replacen("psi", "da", 1))).collect();
        out.add_term(w, c.clone());
    }
    out
}

/// Whether `b = c·a` for a constant `c`; returns `c`.
fn constant_factor(a: &Poly, b: &Poly) -> Option<LaurentScalar> {
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let (w, ca) = a.terms().next()?;
    let two = BigRational::from_integer(BigInt::from(2));
    let ratio = b.coeff(w).eval(&two).ok()? * ca.eval(&two).ok()?.inv().ok()?;
    let c = LaurentScalar::constant(ratio);
    (a.scale(&c) == *b).then_some(c)
}

/// Maps `psi_k ↦ da_k` and compares every Grassmann relation with the
/// two-form relation of `reference` on the same pair.
pub fn grassmann_vs_differentials_crosscheck(reference: &Pres) -> Vec<CrosscheckEntry> {
    let g = build_grassmann();
    g.rules()
        .iter()
        .map(|r| {
            let grassmann = rename_psi(&r.rhs);
            let (x, y) = (r.lhs.0.as_str().replacen("psi", "da", 1), r.lhs.1.as_str().replacen("psi", "da", 1));
            let differential = reference
                .rule(&x, &y)
                .map(|r| r.rhs.clone())
                .unwrap_or_else(|| panic!("reference has no rule for {x}*{y}"));
            let delta = &differential - &grassmann;
            let factor = if delta.is_zero() { None } else { constant_factor(&grassmann, &differential) };
            CrosscheckEntry { relation: r.label(), grassmann, differential, delta, factor }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{build_dga, build_dga_with, DgaCorrections};

    #[test]
    fn locally_confluent() {
        assert!(build_grassmann().check_local_confluence().unwrap().is_empty());
    }

    #[test]
    fn square_factor_two() {
        let entries = grassmann_vs_differentials_crosscheck(&build_dga_with(DgaCorrections::three_typos()));
        let bad: Vec<_> = entries.iter().filter(|e| !e.matches()).map(|e| e.relation.clone()).collect();
        assert_eq!(bad, ["psi2*psi2", "psi3*psi3"]);
        for e in entries.iter().filter(|e| !e.matches()) {
            assert_eq!(e.factor, Some(LaurentScalar::from_integer(2)));
        }
    }

    #[test]
    fn agrees_with_consistent_calculus() {
        assert!(grassmann_vs_differentials_crosscheck(&build_dga()).iter().all(|e| e.matches()));
    }

    #[test]
    fn literal_two_forms_differ_in_four_places() {
        let entries = grassmann_vs_differentials_crosscheck(&build_dga_with(DgaCorrections::none()));
        let bad: Vec<_> = entries.iter().filter(|e| !e.matches()).map(|e| e.relation.as_str()).collect();
        assert_eq!(bad, ["psi0*psi3", "psi1*psi3", "psi2*psi2", "psi3*psi3"]);
    }
}
