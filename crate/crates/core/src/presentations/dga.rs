use super::hq::{hq_generators, hq_rules};
use super::Env;
use crate::algebra::{AlgebraError, Generator, Presentation, RewriteRule};
use crate::calculus::Derivation;
use crate::{GaussRational, LaurentScalar, Poly, Pres};

/// Readings of the printed function/differential relations that differ from
/// the literal text. Each flag, when set, replaces one printed coefficient or
/// word with the version the Leibniz check accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DgaCorrections {
    /// `a2·da1`: leading term `q·da1·a2` instead of `q·da1·a0`.
    pub a2_da1_leading: bool,
    /// `a2·da1` and `a3·da1`: `+i(q²−1)/2·da_k·x−` instead of `−i…`.
    pub da1_rows_sign: bool,
    /// `a1·dx−`: second term `+i(q²−1)/2·dx−·a0` instead of `dx−·a1`.
    pub a1_dxm_second: bool,
    /// `da0·da3`: second term on `da3·da1` instead of `da3·da0`.
    pub da0_da3: bool,
    /// `da1·da3`: second term on `da3·da0` instead of `da3·da1`.
    pub da1_da3: bool,
    /// `(da2)² = (da3)² = i(q−q⁻¹)/2·da1·da0` instead of `i(q−q⁻¹)·da1·da0`.
    pub squares_half: bool,
}

impl DgaCorrections {
    pub fn all() -> Self {
        DgaCorrections {
            a2_da1_leading: true,
            da1_rows_sign: true,
            a1_dxm_second: true,
            da0_da3: true,
            da1_da3: true,
            squares_half: true,
        }
    }

    pub fn none() -> Self {
        DgaCorrections {
            a2_da1_leading: false,
            da1_rows_sign: false,
            a1_dxm_second: false,
            da0_da3: false,
            da1_da3: false,
            squares_half: false,
        }
    }

    /// Only the leading-term fix in `a2·da1` and the two `da·da3` word fixes.
    pub fn three_typos() -> Self {
        DgaCorrections { a2_da1_leading: true, da0_da3: true, da1_da3: true, ..DgaCorrections::none() }
    }

    /// Human-readable labels of the corrections in force.
    pub fn labels(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut add = |on: bool, s: &str| {
            if on {
                out.push(s.to_string());
            }
        };
        add(self.a2_da1_leading, "a2*da1: leading term q*da1*a2 (printed q*da1*a0)");
        add(self.da1_rows_sign, "a2*da1, a3*da1: +i(q^2-1)/2 da_k x- (printed -i)");
        add(self.a1_dxm_second, "a1*dx-: second term i(q^2-1)/2 dx- a0 (printed dx- a1)");
        add(self.da0_da3, "da0*da3: second term on da3*da1 (printed da3*da0)");
        add(self.da1_da3, "da1*da3: second term on da3*da0 (printed da3*da1)");
        add(self.squares_half, "da2^2 = da3^2 = i(q-q^-1)/2 da1 da0 (printed without 1/2)");
        out
    }
}

pub fn dga_generators() -> Vec<Generator> {
    let mut g = hq_generators();
    g.extend((0..4).map(|k| Generator::new(&format!("da{k}"), 1, 4 + k)));
    g
}

fn pick<'a>(on: bool, corrected: &'a str, printed: &'a str) -> &'a str {
    if on {
        corrected
    } else {
        printed
    }
}

pub fn build_dga() -> Pres {
    build_dga_with(DgaCorrections::all())
}

pub fn build_dga_with(fix: DgaCorrections) -> Pres {
    let gens = dga_generators();
    let env = Env::new(&gens)
        .with("dxp", "da0 + i*da1")
        .with("dxm", "da0 - i*da1")
        .with("xp", "a0 + i*a1")
        .with("xm", "a0 - i*a1");

    // The four rows written against dx± are turned into rules for da0, da1
    // by half-sum and half-difference.
    let a0_dxp = env.p("(q^2 + 1)/2*dxp*a0 + i*(q^2 - 1)/2*dxp*a1");
    let a1_dxp = env.p("(q^2 + 1)/2*dxp*a1 - i*(q^2 - 1)/2*dxp*a0");
    let a0_dxm = env.p(
        "(q^2 + 1)/2*dxm*a0 - i*(q^2 - 1)/2*dxm*a1 + (q - q^-1)^2/2*dxp*xm - (q - q^-1)*(da2*a2 + da3*a3)",
    );
    let a1_dxm = env.p(&format!(
        "(q^2 + 1)/2*dxm*a1 + i*(q^2 - 1)/2*dxm*{} - i*(q - q^-1)^2/2*dxp*xm + i*(q - q^-1)*(da2*a2 + da3*a3)",
        pick(fix.a1_dxm_second, "a0", "a1")
    ));
    let half = LaurentScalar::from_ratio(1, 2);
    let half_over_i = LaurentScalar::constant(GaussRational::from_ratio(1, 2) * GaussRational::i().inv().unwrap());
    let split = |plus: &Poly, minus: &Poly| ((plus + minus).scale(&half), (plus - minus).scale(&half_over_i));
    let (a0_da0, a0_da1) = split(&a0_dxp, &a0_dxm);
    let (a1_da0, a1_da1) = split(&a1_dxp, &a1_dxm);

    let da1_sign = pick(fix.da1_rows_sign, "+", "-");
    let square = pick(fix.squares_half, "i*(q - q^-1)/2*da1*da0", "i*(q - q^-1)*da1*da0");
    let mut rules = hq_rules(&env);
    rules.extend([
        RewriteRule::new("a0", "da0", a0_da0),
        RewriteRule::new("a0", "da1", a0_da1),
        RewriteRule::new("a1", "da0", a1_da0),
        RewriteRule::new("a1", "da1", a1_da1),
        env.rule("a0", "da2", "q*da2*a0 + (q^2 - 1)/2*(da0 + i*da1)*a2"),
        env.rule("a0", "da3", "q*da3*a0 + (q^2 - 1)/2*(da0 + i*da1)*a3"),
        env.rule("a1", "da2", "q*da2*a1 - i*(q^2 - 1)/2*(da0 + i*da1)*a2"),
        env.rule("a1", "da3", "q*da3*a1 - i*(q^2 - 1)/2*(da0 + i*da1)*a3"),
        env.rule("a2", "da0", "q*da0*a2 + (q^2 - 1)/2*da2*(a0 - i*a1)"),
        env.rule(
            "a2",
            "da1",
            &format!("q*da1*{} {da1_sign} i*(q^2 - 1)/2*da2*(a0 - i*a1)", pick(fix.a2_da1_leading, "a2", "a0")),
        ),
        env.rule("a2", "da2", "(q^2 + 1)/2*da2*a2 - (q^2 - 1)/2*da3*a3 - (q - q^-1)/2*dxp*xm"),
        env.rule("a2", "da3", "(q^2 + 1)/2*da3*a2 + (q^2 - 1)/2*da2*a3"),
        env.rule("a3", "da0", "q*da0*a3 + (q^2 - 1)/2*da3*(a0 - i*a1)"),
        env.rule("a3", "da1", &format!("q*da1*a3 {da1_sign} i*(q^2 - 1)/2*da3*(a0 - i*a1)")),
        env.rule("a3", "da2", "(q^2 + 1)/2*da2*a3 + (q^2 - 1)/2*da3*a2"),
        env.rule("a3", "da3", "(q^2 + 1)/2*da3*a3 - (q^2 - 1)/2*da2*a2 - (q - q^-1)/2*dxp*xm"),
        env.rule("da0", "da1", "-da1*da0"),
        env.rule("da0", "da0", "0"),
        env.rule("da1", "da1", "0"),
        env.rule("da0", "da2", "-(q + q^-1)/2*da2*da0 + i*(q - q^-1)/2*da2*da1"),
        env.rule(
            "da0",
            "da3",
            &format!("-(q + q^-1)/2*da3*da0 + i*(q - q^-1)/2*da3*{}", pick(fix.da0_da3, "da1", "da0")),
        ),
        env.rule("da1", "da2", "-(q + q^-1)/2*da2*da1 - i*(q - q^-1)/2*da2*da0"),
        env.rule(
            "da1",
            "da3",
            &format!("-(q + q^-1)/2*da3*da1 - i*(q - q^-1)/2*da3*{}", pick(fix.da1_da3, "da0", "da1")),
        ),
        env.rule("da2", "da3", "-da3*da2"),
        env.rule("da2", "da2", square),
        env.rule("da3", "da3", square),
    ]);
    let name = if fix == DgaCorrections::all() {
        "dga"
    } else if fix == DgaCorrections::none() {
        "dga-literal"
    } else {
        "dga-partial"
    };
    Presentation::new(name, gens, rules)
        .expect("dga presentation is valid")
        .with_description("functions a0..a3 and their differentials da0..da3")
}

/// One relation checked for compatibility with `d`.
#[derive(Clone, Debug, PartialEq)]
pub struct LeibnizFailure {
    /// The rule, written `x*y`.
    pub rule: String,
    pub residual: Poly,
}

/// Applies `d` to every function/function and function/differential
/// relation and reduces in the same presentation. Returns each relation's
/// residual, zero or not, in rule order.
pub fn leibniz_consistency_check(dga: &Pres) -> Result<Vec<LeibnizFailure>, AlgebraError> {
    let d = Derivation::exterior(dga);
    let mut out = Vec::new();
    for r in dga.rules() {
        if dga.word_grade(&r.lhs_word()) > 1 {
            continue;
        }
        let residual = dga.normal_form(&d.apply(&r.relation()))?;
        out.push(LeibnizFailure { rule: r.label(), residual });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn failing(p: &Pres) -> Vec<String> {
        leibniz_consistency_check(p).unwrap().into_iter().filter(|f| !f.residual.is_zero()).map(|f| f.rule).collect()
    }

    #[test]
    fn rule_counts() {
        let d = build_dga();
        assert_eq!(d.rules().len(), 6 + 16 + 10);
    }

    #[test]
    fn printed_rows_survive() {
        let d = build_dga();
        let env = Env::new(d.generators()).with("dxp", "da0 + i*da1");
        assert_eq!(d.rule("a0", "da2").unwrap().rhs, env.p("q*da2*a0 + (q^2 - 1)/2*dxp*a2"));
        assert_eq!(d.rule("da2", "da3").unwrap().rhs, env.p("-da3*da2"));
    }

    #[test]
    fn corrected_dga_is_consistent() {
        let d = build_dga();
        assert!(failing(&d).is_empty());
        assert!(d.check_local_confluence().unwrap().is_empty());
    }

    #[test]
    fn three_typo_fixes_are_not_enough() {
        let partial = build_dga_with(DgaCorrections::three_typos());
        let bad = failing(&partial);
        assert!(bad.contains(&"a2*da1".to_string()));
        assert!(bad.contains(&"a3*da1".to_string()));
    }

    #[test]
    fn each_correction_is_needed() {
        let all = DgaCorrections::all();
        let variants = [
            DgaCorrections { a2_da1_leading: false, ..all },
            DgaCorrections { da1_rows_sign: false, ..all },
            DgaCorrections { a1_dxm_second: false, ..all },
        ];
        for v in variants {
            let p = build_dga_with(v);
            assert!(!failing(&p).is_empty(), "{v:?}");
        }
        // The two-form fixes show up as overlap failures instead.
        for v in [
            DgaCorrections { da0_da3: false, ..all },
            DgaCorrections { da1_da3: false, ..all },
            DgaCorrections { squares_half: false, ..all },
        ] {
            let p = build_dga_with(v);
            assert!(!p.check_local_confluence().unwrap().is_empty(), "{v:?}");
        }
    }

    #[test]
    fn leibniz_on_commuting_pair() {
        let d = build_dga();
        let f = leibniz_consistency_check(&d).unwrap();
        let r = f.iter().find(|f| f.rule == "a2*a3").unwrap();
        assert!(r.residual.is_zero());
    }
}
