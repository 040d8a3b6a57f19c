use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use qcalc::algebra::{Grade, NCPoly, Word};
use qcalc::calculus::{star, Derivation, StarTable};
use qcalc::hopf::{coproduct, counit, LocalizedAlgebra, NINV};
use qcalc::presentations::{norm, specialize_classical, specialize_poly, AlgebraCatalog};
use qcalc::verify::star_table_for;
use qcalc::{GaussRational, LaurentScalar, Poly, Pres};

fn catalog() -> &'static AlgebraCatalog {
    use std::sync::OnceLock;
    static CAT: OnceLock<AlgebraCatalog> = OnceLock::new();
    CAT.get_or_init(|| AlgebraCatalog::build().unwrap())
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn scalar() -> impl Strategy<Value = LaurentScalar> {
    prop::collection::vec((-2i32..=2, -3i64..=3, -3i64..=3, 1i64..=3), 0..=3).prop_map(|ts| {
        ts.into_iter().fold(LaurentScalar::zero(), |acc, (e, re, im, den)| {
            acc + LaurentScalar::monomial(GaussRational::new(rat(re, den), rat(im, den)), e)
        })
    })
}

fn nonzero_scalar() -> impl Strategy<Value = LaurentScalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

fn names(p: &Pres) -> Vec<&'static str> {
    p.generators().iter().map(|g| g.id.as_str()).collect()
}

fn word_in(gens: Vec<&'static str>, len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Word> {
    let n = gens.len();
    prop::collection::vec(0..n, len).prop_map(move |ix| Word::parse(&ix.iter().map(|&i| gens[i]).collect::<Vec<_>>()))
}

fn poly_in(p: &Pres, max_deg: usize, max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((word_in(names(p), 0..=max_deg), nonzero_scalar()), 1..=max_terms).prop_map(|ts| {
        let mut out = Poly::zero();
        for (w, c) in ts {
            out.add_term(w, c);
        }
        out
    })
}

/// A polynomial of a single grade, for the Leibniz rule.
fn homogeneous_in(p: &'static Pres, max_deg: usize) -> impl Strategy<Value = Poly> {
    poly_in(p, max_deg, 3).prop_map(move |poly| {
        let Some((w, _)) = poly.terms().next() else { return poly };
        let g = p.word_grade(w);
        let mut out = Poly::zero();
        for (w, c) in poly.terms() {
            if p.word_grade(w) == g {
                out.add_term(w.clone(), c.clone());
            }
        }
        out
    })
}

fn q0() -> impl Strategy<Value = BigRational> {
    prop_oneof![Just(rat(2, 1)), Just(rat(3, 2)), Just(rat(-1, 1))]
}

fn shipped(i: usize) -> &'static Pres {
    let c = catalog();
    [&c.hq, &c.units, &c.dga, &c.cartan_maurer, &c.grassmann][i]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn scalar_eval_is_a_ring_homomorphism(s in scalar(), t in scalar(), q in q0()) {
        prop_assert_eq!((&s + &t).eval(&q).unwrap(), s.eval(&q).unwrap() + t.eval(&q).unwrap());
        prop_assert_eq!((&s * &t).eval(&q).unwrap(), s.eval(&q).unwrap() * t.eval(&q).unwrap());
        prop_assert_eq!(LaurentScalar::one().eval(&q).unwrap(), GaussRational::one());
    }

    #[test]
    fn normal_form_is_idempotent(i in 0usize..5, seed in any::<u64>()) {
        let p = shipped(i);
        let poly = sample(poly_in(p, 4, 3), seed);
        let nf = p.normal_form(&poly).unwrap();
        prop_assert_eq!(p.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(p.is_normal(&nf));
    }

    #[test]
    fn normal_form_preserves_grade_and_degree(i in 0usize..5, seed in any::<u64>()) {
        let p = shipped(i);
        let w = sample(word_in(names(p), 0..=4), seed);
        let poly = Poly::word(w.clone());
        let nf = p.normal_form(&poly).unwrap();
        let g = p.word_grade(&w);
        for (v, _) in nf.terms() {
            prop_assert_eq!(p.word_grade(v), g);
            // Unit products lower degree through e_k e_k = -1.
            if p.name != "units" {
                prop_assert_eq!(v.degree(), w.degree());
            } else {
                prop_assert!(v.degree() <= w.degree());
            }
        }
        if !nf.is_zero() {
            prop_assert_eq!(p.grade_of(&nf), Grade::Pure(g));
        }
    }
}

/// Draws one value from a strategy with a fixed seed, so that a single
/// proptest case can pick its universe first.
fn sample<S: Strategy>(s: S, seed: u64) -> S::Value {
    use proptest::strategy::ValueTree;
    use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    let mut runner = TestRunner::new_with_rng(Config::default(), TestRng::from_seed(RngAlgorithm::ChaCha, &bytes));
    s.new_tree(&mut runner).unwrap().current()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn scalar_ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        for s in [&a * &b, &a + &b, &a - &a] {
            prop_assert!(s.terms().all(|(_, c)| !c.is_zero()));
        }
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        prop_assert_eq!(LaurentScalar::q().conj(), LaurentScalar::q());
    }

    #[test]
    fn normal_form_respects_products(i in 0usize..5, s1 in any::<u64>(), s2 in any::<u64>()) {
        let p = shipped(i);
        let a = sample(poly_in(p, 2, 2), s1);
        let b = sample(poly_in(p, 2, 2), s2);
        let direct = p.normal_form(&a.nc_mul(&b)).unwrap();
        let staged = p.normal_form(&p.normal_form(&a).unwrap().nc_mul(&p.normal_form(&b).unwrap())).unwrap();
        prop_assert_eq!(direct, staged);
    }

    #[test]
    fn step_limit_never_fires_below_degree_seven(i in 0usize..5, seed in any::<u64>()) {
        let p = shipped(i);
        let w = sample(word_in(names(p), 6..=6), seed);
        prop_assert!(p.normal_form(&Poly::word(w)).is_ok());
    }

    #[test]
    fn specialization_commutes_with_normal_form(i in 0usize..5, seed in any::<u64>()) {
        let p = shipped(i);
        let c = specialize_classical(p).unwrap();
        let poly = sample(poly_in(p, 4, 2), seed);
        let one = BigRational::one();
        let lhs = specialize_poly(&p.normal_form(&poly).unwrap(), &one).unwrap();
        let rhs = c.normal_form(&specialize_poly(&poly, &one).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn render_parse_roundtrip(i in 0usize..5, seed in any::<u64>()) {
        let p = shipped(i);
        let poly = p.normal_form(&sample(poly_in(p, 3, 3), seed)).unwrap();
        let text = p.render(&poly, false);
        let gens = names(p);
        let resolve = |n: &str| gens.contains(&n).then(|| NCPoly::var(n));
        let back: Poly = qcalc::expr::parse(&text).unwrap().eval("test", &resolve).unwrap();
        prop_assert_eq!(p.normal_form(&back).unwrap(), poly, "{}", text);
    }

    #[test]
    fn d_is_nilpotent_to_degree_four(seed in any::<u64>()) {
        let dga = &catalog().dga;
        let d = Derivation::exterior(dga);
        let w = sample(word_in(names(dga), 0..=4), seed);
        let r = dga.normal_form(&d.apply(&d.apply(&Poly::word(w)))).unwrap();
        prop_assert!(r.is_zero());
    }

    #[test]
    fn graded_leibniz(f in homogeneous_in(&catalog().dga, 2), g in homogeneous_in(&catalog().dga, 2)) {
        let dga = &catalog().dga;
        let d = Derivation::exterior(dga);
        let sign = match dga.grade_of(&f) {
            Grade::Pure(k) if k % 2 == 1 => -LaurentScalar::one(),
            _ => LaurentScalar::one(),
        };
        // d is computed on normal forms, so this also checks it is well
        // defined on the quotient.
        let fg = dga.normal_form(&f.nc_mul(&g)).unwrap();
        let lhs = d.apply(&fg);
        let rhs = d.apply(&f).nc_mul(&g) + f.nc_mul(&d.apply(&g)).scale(&sign);
        prop_assert!(dga.normal_form(&(lhs - rhs)).unwrap().is_zero());
    }

    #[test]
    fn star_is_involutive_on_functions(seed in any::<u64>()) {
        let hq = &catalog().hq;
        let t = StarTable::for_presentation(hq);
        let p = sample(poly_in(hq, 3, 3), seed);
        let back = star(&star(&p, &t, hq).unwrap(), &t, hq).unwrap();
        prop_assert_eq!(back, hq.normal_form(&p).unwrap());
    }

    #[test]
    fn star_is_an_antihomomorphism(i in 0usize..6, s1 in any::<u64>(), s2 in any::<u64>()) {
        let c = catalog();
        let universes = [
            c.hq.clone(),
            c.units.clone(),
            c.hq_localized.clone(),
            c.get("classical-dga", false).unwrap(),
            c.get("classical-cm", false).unwrap(),
            c.get("classical-units", false).unwrap(),
        ];
        let p = &universes[i];
        let t = star_table_for(p).unwrap();
        let a = p.normal_form(&sample(poly_in(p, 2, 2), s1)).unwrap();
        let b = p.normal_form(&sample(poly_in(p, 2, 2), s2)).unwrap();
        let lhs = star(&p.normal_form(&a.nc_mul(&b)).unwrap(), &t, p).unwrap();
        let rhs = p.normal_form(&star(&b, &t, p).unwrap().nc_mul(&star(&a, &t, p).unwrap())).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coproduct_and_counit_are_multiplicative(s1 in any::<u64>(), s2 in any::<u64>()) {
        let hq = &catalog().hq;
        let a = sample(poly_in(hq, 2, 2), s1);
        let b = sample(poly_in(hq, 2, 2), s2);
        let ab = coproduct(&a.nc_mul(&b), hq).unwrap();
        let prod = coproduct(&a, hq).unwrap().mul(&coproduct(&b, hq).unwrap()).normal_form(hq).unwrap();
        prop_assert!(ab.sub(&prod).normal_form(hq).unwrap().is_zero());
        prop_assert_eq!(counit(&a.nc_mul(&b)).unwrap(), counit(&a).unwrap() * counit(&b).unwrap());
    }

    #[test]
    fn inverse_norm_is_central(seed in any::<u64>()) {
        let loc = LocalizedAlgebra::new(&catalog().hq, norm()).unwrap();
        let p = sample(poly_in(&loc.pres, 3, 3), seed);
        let n = Poly::var(NINV);
        prop_assert!(loc.normal_form(&(n.nc_mul(&p) - p.nc_mul(&n))).unwrap().is_zero());
    }
}
