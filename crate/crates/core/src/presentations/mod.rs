//! The concrete presentations: H_q, the unit module, the first-order
//! calculus (DGA), the Cartan–Maurer algebra and the Grassmann algebra.

mod cartan_maurer;
mod dga;
mod grassmann;
mod hq;
mod units;

use std::collections::{BTreeMap, HashSet};

use num_rational::BigRational;
use num_traits::{One, Zero};

pub use cartan_maurer::{build_cartan_maurer, cartan_maurer_generators};
pub use dga::{build_dga, build_dga_with, dga_generators, leibniz_consistency_check, DgaCorrections, LeibnizFailure};
pub use grassmann::{build_grassmann, grassmann_vs_differentials_crosscheck, CrosscheckEntry};
pub use hq::{build_hq, hq_generators, norm};
pub use units::{build_units, unit_generators, with_units};

use crate::algebra::{AlgebraError, Generator, NCPoly, RewriteRule};
use crate::{LaurentScalar, Poly, Pres};

/// Generator and abbreviation names available while writing relations.
pub(crate) struct Env {
    names: HashSet<String>,
    abbrev: BTreeMap<String, Poly>,
}

impl Env {
    pub(crate) fn new(gens: &[Generator]) -> Env {
        Env { names: gens.iter().map(|g| g.id.as_str().to_string()).collect(), abbrev: BTreeMap::new() }
    }

    /// Defines `name` as shorthand for `text`.
    pub(crate) fn with(mut self, name: &str, text: &str) -> Env {
        let p = self.p(text);
        self.abbrev.insert(name.to_string(), p);
        self
    }

    /// Parses relation text; the texts are fixed, so failure is a bug.
    pub(crate) fn p(&self, text: &str) -> Poly {
        let resolve = |name: &str| -> Option<Poly> {
            if let Some(p) = self.abbrev.get(name) {
                return Some(p.clone());
            }
            self.names.contains(name).then(|| NCPoly::var(name))
        };
        crate::expr::parse(text)
            .and_then(|e| e.eval::<LaurentScalar>("builder", &resolve))
            .unwrap_or_else(|e| panic!("bad relation text {text:?}: {e}"))
    }

    pub(crate) fn rule(&self, x: &str, y: &str, rhs: &str) -> RewriteRule<LaurentScalar> {
        RewriteRule::new(x, y, self.p(rhs))
    }
}

/// Evaluates every coefficient at q = 1.
pub fn specialize_classical(pres: &Pres) -> Result<Pres, AlgebraError> {
    specialize_at(pres, &BigRational::one(), &format!("classical-{}", pres.name))
}

/// Evaluates every coefficient at a nonzero rational `q0`.
pub fn specialize_at(pres: &Pres, q0: &BigRational, name: &str) -> Result<Pres, AlgebraError> {
    if q0.is_zero() {
        return Err(AlgebraError::Other(crate::scalar::ScalarError::ZeroParameter.to_string()));
    }
    pres.map_coeffs(name, |c| LaurentScalar::constant(c.eval(q0).expect("q0 is nonzero")))
}

/// Evaluates a polynomial's coefficients at `q0`.
pub fn specialize_poly(p: &Poly, q0: &BigRational) -> Result<Poly, AlgebraError> {
    p.try_map_coeffs(|c| c.eval(q0).map(LaurentScalar::constant)).map_err(|e| AlgebraError::Other(e.to_string()))
}

/// Universe names accepted by `AlgebraCatalog::get`.
pub const UNIVERSES: &[&str] = &[
    "hq",
    "units",
    "dga",
    "cm",
    "grassmann",
    "hq-loc",
    "units-dga",
    "units-cm",
    "classical-hq",
    "classical-units",
    "classical-dga",
    "classical-cm",
    "classical-grassmann",
];

/// Every shipped presentation, built once.
#[derive(Clone, Debug)]
pub struct AlgebraCatalog {
    pub hq: Pres,
    pub units: Pres,
    pub dga: Pres,
    pub dga_literal: Pres,
    pub cartan_maurer: Pres,
    pub grassmann: Pres,
    pub hq_localized: Pres,
    pub units_dga: Pres,
    pub units_cm: Pres,
}

impl AlgebraCatalog {
    pub fn build() -> Result<AlgebraCatalog, AlgebraError> {
        let dga = build_dga();
        let cm = build_cartan_maurer();
        Ok(AlgebraCatalog {
            hq: build_hq(),
            units: build_units(),
            units_dga: with_units(&dga, "units-dga")?,
            units_cm: with_units(&cm, "units-cm")?,
            dga,
            dga_literal: build_dga_with(DgaCorrections::none()),
            cartan_maurer: cm,
            grassmann: build_grassmann(),
            hq_localized: crate::hopf::build_localized(&build_hq())?,
        })
    }

    /// Looks up a universe by name. `literal` selects the uncorrected DGA.
    pub fn get(&self, tag: &str, literal: bool) -> Result<Pres, AlgebraError> {
        if let Some(base) = tag.strip_prefix("classical-") {
            return specialize_classical(&self.get(base, literal)?);
        }
        Ok(match tag {
            "hq" => self.hq.clone(),
            "units" => self.units.clone(),
            "dga" if literal => self.dga_literal.clone(),
            "dga" => self.dga.clone(),
            "cm" => self.cartan_maurer.clone(),
            "grassmann" => self.grassmann.clone(),
            "hq-loc" => self.hq_localized.clone(),
            "units-dga" if literal => with_units(&self.dga_literal, "units-dga")?,
            "units-dga" => self.units_dga.clone(),
            "units-cm" => self.units_cm.clone(),
            other => {
                return Err(AlgebraError::Other(format!(
                    "unknown algebra '{other}' (expected one of: {})",
                    UNIVERSES.join(", ")
                )))
            }
        })
    }

    /// The presentations written to the `presentations/` data directory.
    pub fn shipped(&self) -> Result<Vec<Pres>, AlgebraError> {
        let mut out = vec![
            self.hq.clone(),
            self.units.clone(),
            self.dga.clone(),
            self.dga_literal.clone(),
            self.cartan_maurer.clone(),
            self.grassmann.clone(),
        ];
        for base in ["hq", "units", "dga", "cm", "grassmann"] {
            out.push(self.get(&format!("classical-{base}"), false)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_specializations_are_plain_swaps() {
        let c = specialize_classical(&build_hq()).unwrap();
        for r in c.rules() {
            assert_eq!(r.rhs.len(), 1);
            assert_eq!(r.rhs.terms().next().unwrap().0[..], [r.lhs.1, r.lhs.0]);
        }
        let cm = specialize_classical(&build_cartan_maurer()).unwrap();
        assert!(cm.rule("w0", "w0").unwrap().rhs.is_zero());
        let dga = specialize_classical(&build_dga()).unwrap();
        assert!(dga.rule("da2", "da2").unwrap().rhs.is_zero());
    }

    #[test]
    fn cannot_specialize_at_zero() {
        let zero = BigRational::from_integer(0.into());
        assert!(specialize_at(&build_hq(), &zero, "bad").is_err());
    }

    #[test]
    fn catalog_lookup() {
        let cat = AlgebraCatalog::build().unwrap();
        for tag in UNIVERSES {
            assert!(cat.get(tag, false).is_ok(), "{tag}");
        }
        assert!(cat.get("octonions", false).is_err());
    }
}
