use super::hq::{hq_generators, hq_rules};
use super::Env;
use crate::algebra::{AlgebraError, Generator, NCPoly, Presentation, RewriteRule, Word};
use crate::{GaussRational, LaurentScalar, Pres};

/// e1, e2, e3; e0 is the unit of the algebra.
pub fn unit_generators() -> Vec<Generator> {
    (1..4).map(|l| Generator::new(&format!("e{l}"), 0, 20 + l)).collect()
}

/// `(k - l)(l - m)(m - k) / 2`.
fn epsilon(k: i64, l: i64, m: i64) -> i64 {
    (k - l) * (l - m) * (m - k) / 2
}

/// `e_k e_l = -δ_kl + ε_klm e_m` for k, l ∈ {1, 2, 3}.
fn unit_rules() -> Vec<RewriteRule<LaurentScalar>> {
    let mut rules = Vec::new();
    for k in 1..4 {
        for l in 1..4 {
            let mut rhs = NCPoly::zero();
            if k == l {
                rhs.add_term(Word::empty(), -LaurentScalar::from_integer(1));
            }
            for m in 1..4 {
                let eps = epsilon(k, l, m);
                if eps != 0 {
                    rhs.add_term(Word::parse(&[&format!("e{m}")]), LaurentScalar::constant(GaussRational::from_integer(eps)));
                }
            }
            rules.push(RewriteRule::new(&format!("e{k}"), &format!("e{l}"), rhs));
        }
    }
    rules
}

/// Adjoins the units to `base`: they obey the quaternion table and commute
/// with every generator of `base`.
pub fn with_units(base: &Pres, name: &str) -> Result<Pres, AlgebraError> {
    let mut rules = unit_rules();
    for g in base.generators() {
        for e in unit_generators() {
            rules.push(RewriteRule::new(
                g.id.as_str(),
                e.id.as_str(),
                NCPoly::word(Word::from_symbols([e.id, g.id])),
            ));
        }
    }
    base.extend(name, unit_generators(), rules)
}

pub fn build_units() -> Pres {
    let hq = Presentation::new("hq", hq_generators(), hq_rules(&Env::new(&hq_generators()))).expect("valid");
    with_units(&hq, "units")
        .expect("units presentation is valid")
        .with_description("coordinate functions with the quaternionic units e1..e3 (e0 = 1)")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(text: &str) -> String {
        let u = build_units();
        let p = Env::new(u.generators()).p(text);
        u.render(&u.normal_form(&p).unwrap(), false)
    }

    #[test]
    fn quaternion_table() {
        assert_eq!(nf("e1*e1"), "-1");
        assert_eq!(nf("e2*e3"), "e1");
        assert_eq!(nf("e1*e2"), "e3");
        assert_eq!(nf("e3*e2"), "-e1");
        assert_eq!(nf("e1*e2*e3"), "-1");
    }

    #[test]
    fn units_commute_with_functions() {
        assert_eq!(nf("a2*e1"), "e1*a2");
    }

    #[test]
    fn locally_confluent() {
        assert!(build_units().check_local_confluence().unwrap().is_empty());
    }
}
