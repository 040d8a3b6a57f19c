use super::Env;
use crate::algebra::{Generator, Presentation};
use crate::{Poly, Pres};

pub fn hq_generators() -> Vec<Generator> {
    (0..4).map(|k| Generator::new(&format!("a{k}"), 0, k)).collect()
}

/// The six commutation relations of the coordinate functions.
pub(crate) fn hq_rules(env: &Env) -> Vec<crate::algebra::RewriteRule<crate::LaurentScalar>> {
    vec![
        env.rule("a0", "a1", "a1*a0 - i*(q - q^-1)/2*(a2^2 + a3^2)"),
        env.rule("a0", "a2", "(q + q^-1)/2*a2*a0 + i*(q - q^-1)/2*a2*a1"),
        env.rule("a0", "a3", "(q + q^-1)/2*a3*a0 + i*(q - q^-1)/2*a3*a1"),
        env.rule("a1", "a2", "(q + q^-1)/2*a2*a1 - i*(q - q^-1)/2*a2*a0"),
        env.rule("a1", "a3", "(q + q^-1)/2*a3*a1 - i*(q - q^-1)/2*a3*a0"),
        env.rule("a2", "a3", "a3*a2"),
    ]
}

pub fn build_hq() -> Pres {
    let gens = hq_generators();
    let rules = hq_rules(&Env::new(&gens));
    Presentation::new("hq", gens, rules)
        .expect("hq presentation is valid")
        .with_description("coordinate functions a0..a3 of the quantum quaternion group")
}

/// The q-norm `a0² + a1² + (q+q⁻¹)/2·(a2² + a3²)`.
pub fn norm() -> Poly {
    Env::new(&hq_generators()).p("a0^2 + a1^2 + (q + q^-1)/2*(a2^2 + a3^2)")
}
