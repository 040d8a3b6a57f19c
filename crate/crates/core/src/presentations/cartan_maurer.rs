use super::hq::{hq_generators, hq_rules};
use super::Env;
use crate::algebra::{Generator, Presentation, RewriteRule};
use crate::{LaurentScalar, Pres};

pub fn cartan_maurer_generators() -> Vec<Generator> {
    let mut g = hq_generators();
    g.extend((0..4).map(|k| Generator::new(&format!("w{k}"), 1, 4 + k)));
    g
}

pub fn build_cartan_maurer() -> Pres {
    let gens = cartan_maurer_generators();
    let env = Env::new(&gens).with("wp", "w0 + i*w1").with("wm", "w0 - i*w1");

    // Rows written against w+ and w−, later split into w0 and w1 rules.
    let plus = [
        "(q^2 + 1)/2*wp*a0 + i*(q^2 - 1)/2*wp*a1",
        "(q^2 + 1)/2*wp*a1 - i*(q^2 - 1)/2*wp*a0",
        "(q^2 + 1)/2*wp*a2 + i*(q^2 - 1)/2*wp*a3",
        "(q^2 + 1)/2*wp*a3 - i*(q^2 - 1)/2*wp*a2",
    ];
    let minus = [
        "(q^2 + 1)/2*wm*a0 - i*(q^2 - 1)/2*wm*a1 + (q - q^-1)^2/2*wp*(a0 + i*a1) + (1 - q^2)*(w2*a2 + w3*a3)",
        "(q^2 + 1)/2*wm*a1 + i*(q^2 - 1)/2*wm*a0 - i*(q - q^-1)^2/2*wp*(a0 + i*a1) - (1 - q^2)*(w2*a3 - w3*a2)",
        "(q^2 + 1)/2*wm*a2 - i*(q^2 - 1)/2*wm*a3 + (q - q^-1)^2/2*wp*(a2 + i*a3) + (q^2 - 1)*(w2*a0 + w3*a1)",
        "(q^2 + 1)/2*wm*a3 + i*(q^2 - 1)/2*wm*a2 - i*(q - q^-1)^2/2*wp*(a2 + i*a3) + (1 - q^2)*(w2*a1 - w3*a0)",
    ];
    let half = LaurentScalar::from_ratio(1, 2);
    let half_over_i = LaurentScalar::from_ratio(1, 2) * -LaurentScalar::i();
    let mut rules = hq_rules(&env);
    for k in 0..4 {
        let (p, m) = (env.p(plus[k]), env.p(minus[k]));
        let a = format!("a{k}");
        rules.push(RewriteRule::new(&a, "w0", (&p + &m).scale(&half)));
        rules.push(RewriteRule::new(&a, "w1", (&p - &m).scale(&half_over_i)));
    }
    rules.extend([
        env.rule("a0", "w2", "q*w2*a0 + (q - q^-1)/2*wp*a2"),
        env.rule("a2", "w2", "q*w2*a2 - (q - q^-1)/2*wp*a0"),
        env.rule("a1", "w2", "q*w2*a1 - (q - q^-1)/2*wp*a3"),
        env.rule("a3", "w2", "q*w2*a3 + (q - q^-1)/2*wp*a1"),
        env.rule("a0", "w3", "q*w3*a0 + (q - q^-1)/2*wp*a3"),
        env.rule("a2", "w3", "q*w3*a2 - (q - q^-1)/2*wp*a1"),
        env.rule("a1", "w3", "q*w3*a1 + (q - q^-1)/2*wp*a2"),
        env.rule("a3", "w3", "q*w3*a3 - (q - q^-1)/2*wp*a0"),
        env.rule("w0", "w0", "i*(q - q^-1)^2/2*w3*w2"),
        env.rule("w1", "w1", "i*(q^2 - q^-2)/2*w3*w2"),
        env.rule("w0", "w1", "-w1*w0 + (q^-2 - 1)*w2*w3"),
        env.rule("w0", "w2", "-w2*w0 + (q^-2 - q^2)/2*w3*w1 + i*(q - q^-1)^2/2*w2*w1"),
        env.rule("w0", "w3", "-w3*w0 + (q^2 - q^-2)/2*w2*w1 + i*(q - q^-1)^2/2*w3*w1"),
        env.rule("w1", "w2", "-(q^2 + q^-2)/2*w2*w1 + i*(q^-2 - q^2)/2*w3*w1"),
        env.rule("w1", "w3", "-(q^2 + q^-2)/2*w3*w1 + i*(q^2 - q^-2)/2*w2*w1"),
        env.rule("w2", "w3", "-w3*w2"),
        env.rule("w2", "w2", "0"),
        env.rule("w3", "w3", "0"),
    ]);
    Presentation::new("cm", gens, rules)
        .expect("cartan-maurer presentation is valid")
        .with_description("functions a0..a3 and the left-invariant one-forms w0..w3")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Word;

    #[test]
    fn rule_counts_and_confluence() {
        let cm = build_cartan_maurer();
        assert_eq!(cm.rules().len(), 6 + 16 + 10);
        assert!(cm.check_local_confluence().unwrap().is_empty());
    }

    #[test]
    fn a0_w2_row() {
        let cm = build_cartan_maurer();
        let env = Env::new(cm.generators());
        let expect = env.p("q*w2*a0 + (q - q^-1)/2*(w0 + i*w1)*a2");
        assert_eq!(cm.normal_form_word(&Word::parse(&["a0", "w2"])).unwrap(), cm.normal_form(&expect).unwrap());
    }

    #[test]
    fn forms_anticommute_at_one() {
        let cm = crate::presentations::specialize_classical(&build_cartan_maurer()).unwrap();
        let env = Env::new(cm.generators());
        assert!(cm.normal_form(&env.p("w0*w0")).unwrap().is_zero());
        for (x, y) in [("w0", "w1"), ("w0", "w2"), ("w1", "w3"), ("w2", "w3")] {
            let p = env.p(&format!("{x}*{y} + {y}*{x}"));
            assert!(cm.normal_form(&p).unwrap().is_zero());
        }
    }
}
