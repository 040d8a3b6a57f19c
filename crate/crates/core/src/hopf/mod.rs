//! Coproduct, counit and antipode of H_q, the localization at the q-norm,
//! and the Hopf-axiom checks.

mod localized;
mod structure;
mod tensor;

pub use localized::{build_localized, LocalizedAlgebra, NINV};
pub use structure::{coproduct, counit, Antipode};
pub use tensor::TensorPoly;

use num_traits::Zero;

use crate::algebra::AlgebraError;
use crate::calculus::{star, StarTable};
use crate::report::{run_checks, CheckFn, CheckRecord, Status};
use crate::{LaurentScalar, Poly, Pres};

type Tensor = TensorPoly<LaurentScalar>;

fn render_tensor(t: &Tensor, pres: &Pres) -> String {
    if t.is_zero() {
        "0".into()
    } else {
        t.render(pres, false)
    }
}

fn tensor_check(id: String, paper_ref: &str, pres: &Pres, r: Result<Tensor, AlgebraError>) -> CheckRecord {
    match r {
        Ok(t) => CheckRecord::new(&id, paper_ref, Status::from_bool(t.is_zero(), Status::Fail), render_tensor(&t, pres)),
        Err(e) => CheckRecord::error(&id, paper_ref, e),
    }
}

fn poly_check(id: String, paper_ref: &str, pres: &Pres, otherwise: Status, r: Result<Poly, AlgebraError>) -> CheckRecord {
    match r {
        Ok(p) => CheckRecord::new(&id, paper_ref, Status::from_bool(p.is_zero(), otherwise), pres.render(&p, false)),
        Err(e) => CheckRecord::error(&id, paper_ref, e),
    }
}

fn gen(k: usize) -> Poly {
    Poly::var(&format!("a{k}"))
}

/// `(Δ ⊗ id)Δ(p) − (id ⊗ Δ)Δ(p)`.
pub fn coassociativity_residual(p: &Poly, pres: &Pres) -> Result<Tensor, AlgebraError> {
    let d = coproduct(p, pres)?;
    let left = d.map_leg(0, |w| coproduct(&Poly::word(w.clone()), pres))?;
    let right = d.map_leg(1, |w| coproduct(&Poly::word(w.clone()), pres))?;
    left.sub(&right).normal_form(pres)
}

/// `(ε ⊗ id)Δ(p) − p`, or `(id ⊗ ε)Δ(p) − p` with `right`.
pub fn counit_residual(p: &Poly, pres: &Pres, right: bool) -> Result<Poly, AlgebraError> {
    let d = coproduct(p, pres)?;
    let reduced = d.map_leg(usize::from(right), |w| {
        let mut t = Tensor::zero(0);
        t.add_term(Vec::new(), counit(&Poly::word(w.clone()))?);
        Ok(t)
    })?;
    pres.normal_form(&(reduced.multiply_legs() - p.clone()))
}

/// The Hopf-structure checks on `hq` with norm `norm` and star table
/// `star_table`; ids start with `prefix`. Run with the q-deformed algebra
/// and with its q = 1 image.
pub fn verify_hopf_axioms(prefix: &str, hq: &Pres, norm: &Poly, star_table: &StarTable) -> Vec<CheckRecord> {
    let antipode = LocalizedAlgebra::new(hq, norm.clone()).and_then(|l| Antipode::new(l, star_table));
    let mut checks: Vec<CheckFn<'_>> = Vec::new();

    for rule in hq.rules() {
        let rel = rule.relation();
        let label = rule.label();
        let r = rel.clone();
        checks.push(Box::new(move || {
            tensor_check(
                format!("{prefix}.delta_respects.{label}"),
                "comultiplication respects the defining relation",
                hq,
                coproduct(&r, hq),
            )
        }));
        let label = rule.label();
        let r = rel.clone();
        checks.push(Box::new(move || {
            let id = format!("{prefix}.counit_respects.{label}");
            let paper_ref = "counit respects the defining relation";
            match counit(&r) {
                Ok(c) => CheckRecord::new(&id, paper_ref, Status::from_bool(c.is_zero(), Status::Fail), c.to_string()),
                Err(e) => CheckRecord::error(&id, paper_ref, e),
            }
        }));
        let label = rule.label();
        let r = rel.clone();
        let st = star_table;
        checks.push(Box::new(move || {
            poly_check(
                format!("{prefix}.star_respects.{label}"),
                "star antiinvolution maps the defining relation to a relation",
                hq,
                Status::Fail,
                star(&r, st, hq),
            )
        }));
        let label = rule.label();
        let anti = &antipode;
        checks.push(Box::new(move || {
            let id = format!("{prefix}.antipode_respects.{label}");
            let paper_ref = "antipode (extended as antihomomorphism) respects the defining relation";
            match anti {
                Ok(s) => poly_check(id, paper_ref, &s.algebra.pres, Status::Finding, s.apply(&rel)),
                Err(e) => CheckRecord::error(&id, paper_ref, e),
            }
        }));
    }

    for k in 0..4 {
        checks.push(Box::new(move || {
            tensor_check(
                format!("{prefix}.coassociativity.a{k}"),
                "coassociativity of comultiplication",
                hq,
                coassociativity_residual(&gen(k), hq),
            )
        }));
        for (side, right) in [("left", false), ("right", true)] {
            checks.push(Box::new(move || {
                poly_check(
                    format!("{prefix}.counit_{side}.a{k}"),
                    "counit law for comultiplication",
                    hq,
                    Status::Fail,
                    counit_residual(&gen(k), hq, right),
                )
            }));
            let anti = &antipode;
            checks.push(Box::new(move || {
                let id = format!("{prefix}.antipode_{side}.a{k}");
                let paper_ref = "antipode law m(S x id)Delta = m(id x S)Delta = unit times counit";
                match anti {
                    Ok(s) => {
                        let r = s.convolution(&gen(k), right).and_then(|p| {
                            let eps = counit(&gen(k))?;
                            s.algebra.normal_form(&(p - Poly::constant(eps)))
                        });
                        poly_check(id, paper_ref, &s.algebra.pres, Status::Finding, r)
                    }
                    Err(e) => CheckRecord::error(&id, paper_ref, e),
                }
            }));
        }
        checks.push(Box::new(move || {
            let a = gen(k);
            poly_check(
                format!("{prefix}.norm_central.a{k}"),
                "the q-norm belongs to the center",
                hq,
                Status::Fail,
                hq.normal_form(&(norm.nc_mul(&a) - a.nc_mul(norm))),
            )
        }));
        let st = star_table;
        checks.push(Box::new(move || {
            let a = gen(k);
            poly_check(
                format!("{prefix}.star_involutive.a{k}"),
                "star is an antiinvolution",
                hq,
                Status::Fail,
                st.apply(&a).and_then(|s| star(&s, st, hq)).map(|s| s - a),
            )
        }));
        let anti = &antipode;
        checks.push(Box::new(move || {
            let id = format!("{prefix}.antipode_squared.a{k}");
            let paper_ref = "square of the antipode on a generator (informational)";
            match anti {
                Ok(s) => match s.apply(&gen(k)).and_then(|p| s.apply(&p)) {
                    Ok(p) => CheckRecord::new(&id, paper_ref, Status::Pass, s.algebra.pres.render(&p, false)),
                    Err(e) => CheckRecord::error(&id, paper_ref, e),
                },
                Err(e) => CheckRecord::error(&id, paper_ref, e),
            }
        }));
    }

    checks.push(Box::new(move || {
        let r = coproduct(norm, hq).and_then(|d| d.sub(&TensorPoly::pure(&[norm.clone(), norm.clone()])).normal_form(hq));
        tensor_check(format!("{prefix}.norm_grouplike"), "the q-norm is group-like under comultiplication", hq, r)
    }));
    let st = star_table;
    checks.push(Box::new(move || {
        poly_check(
            format!("{prefix}.norm_selfadjoint"),
            "the q-norm is fixed by star",
            hq,
            Status::Fail,
            star(norm, st, hq).and_then(|s| hq.normal_form(&(s - norm.clone()))),
        )
    }));
    checks.push(Box::new(move || {
        // e0 is the unit, so Δ(e0) = e0 ⊗ e0 is Δ(1) = 1 ⊗ 1.
        let r = coproduct(&Poly::one(), hq).map(|d| d.sub(&TensorPoly::one(2)));
        tensor_check(format!("{prefix}.delta_unit"), "comultiplication of the unit e0 is e0 (x) e0", hq, r)
    }));
    run_checks(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{build_hq, norm, specialize_classical, specialize_poly};
    use num_traits::One;

    #[test]
    fn quantum_suite_has_no_failures() {
        let hq = build_hq();
        let checks = verify_hopf_axioms("hopf", &hq, &norm(), &StarTable::for_presentation(&hq));
        for c in &checks {
            assert_ne!(c.status, Status::Fail, "{} {}", c.id, c.residual);
        }
        assert!(checks.iter().any(|c| c.id == "hopf.antipode_left.a2"));
    }

    #[test]
    fn classical_suite_passes() {
        let one = num_rational::BigRational::one();
        let hq = specialize_classical(&build_hq()).unwrap();
        let n = specialize_poly(&norm(), &one).unwrap();
        let st = StarTable::for_presentation(&build_hq()).at_q(&one).unwrap();
        for c in verify_hopf_axioms("classical.hopf", &hq, &n, &st) {
            assert_eq!(c.status, Status::Pass, "{} {}", c.id, c.residual);
        }
    }
}
