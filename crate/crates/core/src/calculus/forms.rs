use crate::algebra::{AlgebraError, Symbol, Word};
use crate::calculus::{Derivation, StarTable};
use crate::presentations::Env;
use crate::{LaurentScalar, Poly, Pres};

/// The left-invariant forms written in functions and differentials.
const OMEGA: [&str; 4] = [
    "da0*a0 + da1*a1 + (q + q^-1)/2*(da2*a2 + da3*a3) + i*(q - q^-1)/2*(da3*a2 - da2*a3)",
    "-da0*a1 + da1*a0 - (q + q^-1)/2*(da2*a3 - da3*a2) - i*(q - q^-1)/2*(da2*a2 + da3*a3)",
    "da2*a0 - da3*a1 + (q + q^-1)/2*(da1*a3 - da0*a2) + i*(q - q^-1)/2*(da0*a3 + da1*a2)",
    "da2*a1 + da3*a0 - (q + q^-1)/2*(da0*a3 + da1*a2) + i*(q - q^-1)/2*(da1*a3 - da0*a2)",
];

/// The differentials written in the forms.
const DA_FROM_W: [&str; 4] = [
    "w0*a0 - (w1*a1 + w2*a2 + w3*a3)",
    "w0*a1 + w1*a0 + w2*a3 - w3*a2",
    "w0*a2 - w1*a3 + w2*a0 + w3*a1",
    "w0*a3 + w1*a2 - w2*a1 + w3*a0",
];

/// `dw_k`; the first entry is the reading that closes the system, the
/// printed `dw0` has the word order of its two forms reversed.
const DW: [&str; 4] = [
    "i*(q^-2 - 1)*w3*w2",
    "(q^-2 + 1)*w2*w3",
    "i*(q^-2 - 1)*w2*w1 + (q^-2 + 1)*w3*w1",
    "i*(q^-2 - 1)*w3*w1 - (q^-2 + 1)*w2*w1",
];
const DW0_PRINTED: &str = "i*(q^-2 - 1)*w2*w3";

/// The classical two-forms at q = 1.
const DW_CLASSICAL: [&str; 4] = ["0", "2*w2*w3", "2*w3*w1", "-2*w2*w1"];

fn parse_in(pres: &Pres, text: &str) -> Poly {
    Env::new(pres.generators()).p(text)
}

/// `w_0..w_3` as elements of `dga`, normal-formed.
pub fn omega_forms(dga: &Pres) -> Result<[Poly; 4], AlgebraError> {
    let mut out: [Poly; 4] = Default::default();
    for (k, text) in OMEGA.iter().enumerate() {
        out[k] = dga.normal_form(&parse_in(dga, text))?;
    }
    Ok(out)
}

/// `da_0..da_3` as elements of the Cartan–Maurer algebra `cm`.
pub fn da_from_w(cm: &Pres) -> Result<[Poly; 4], AlgebraError> {
    let mut out: [Poly; 4] = Default::default();
    for (k, text) in DA_FROM_W.iter().enumerate() {
        out[k] = cm.normal_form(&parse_in(cm, text))?;
    }
    Ok(out)
}

/// `dw_k`; `literal` selects the printed word order in `dw0`.
pub fn cartan_maurer_d(cm: &Pres, k: usize, literal: bool) -> Poly {
    let text = if k == 0 && literal { DW0_PRINTED } else { DW[k] };
    parse_in(cm, text)
}

/// The classical `dw_k`.
pub fn classical_cartan_maurer_d(cm: &Pres, k: usize) -> Poly {
    parse_in(cm, DW_CLASSICAL[k])
}

/// `d` on the Cartan–Maurer algebra: `a_k` goes to its form expansion and
/// `w_k` to its two-form.
pub fn cm_derivation(cm: &Pres, literal: bool) -> Result<Derivation<LaurentScalar>, AlgebraError> {
    let da = da_from_w(cm)?;
    let mut images = Vec::new();
    for k in 0..4 {
        images.push((Symbol::new(&format!("a{k}")), da[k].clone()));
        images.push((Symbol::new(&format!("w{k}")), cartan_maurer_d(cm, k, literal)));
    }
    Ok(Derivation::new(cm, images))
}

/// Replaces each generator by its image; others are kept.
pub fn substitute(p: &Poly, images: &[(Symbol, Poly)]) -> Poly {
    p.map_words(|w| {
        let mut acc = Poly::one();
        for s in w.iter() {
            let img = images.iter().find(|(t, _)| t == s).map(|(_, p)| p.clone()).unwrap_or_else(|| Poly::word(Word::from_symbols([*s])));
            acc = acc.nc_mul(&img);
        }
        acc
    })
}

/// `star(da_k) − q²·d(a_k*)`, both sides written in forms and reduced in
/// `cm`.
pub fn verify_d_star(cm: &Pres, k: usize) -> Result<Poly, AlgebraError> {
    let table = StarTable::for_presentation(cm);
    let da = da_from_w(cm)?;
    let lhs = cm.normal_form(&table.apply(&da[k])?)?;
    let a_star = table.get(Symbol::new(&format!("a{k}"))).expect("a_k has a star image");
    let images: Vec<_> = (0..4).map(|l| (Symbol::new(&format!("a{l}")), da[l].clone())).collect();
    let rhs = substitute(a_star, &images).scale(&LaurentScalar::q_pow(2));
    cm.normal_form(&(lhs - rhs))
}

/// One line of the displayed computation of `(da0)*`.
#[derive(Clone, Debug)]
pub struct WorkedStep {
    pub label: &'static str,
    pub printed: Poly,
    /// What the line should equal, computed independently.
    pub computed: Poly,
    /// `printed − computed`, reduced in the Cartan–Maurer algebra.
    pub residual: Poly,
}

/// The displayed chain `(da0)* = a0* w0* − … = … = q²(w0 a0 − …)`, each line
/// compared with the engine's value of `(da0)*`.
pub fn worked_d_star_computation(cm: &Pres) -> Result<Vec<WorkedStep>, AlgebraError> {
    let table = StarTable::for_presentation(cm);
    let da = da_from_w(cm)?;
    let target = cm.normal_form(&table.apply(&da[0])?)?;
    let lines: [(&'static str, &str); 3] = [
        ("star of the products", "a0*(q^-2*w0 + i*(q^-2 - 1)*w1) - a1*w1 - ((q + q^-1)/2*a2 - i*(q - q^-1)/2*a3)*w2 - (i*(q - q^-1)/2*a2 + (q + q^-1)/2*a3)*w3"),
        (
            "regrouped by functions",
            "q^-2*a0*(w0 + i*w1) - i*(a0 - i*a1)*w1 - 1/2*a2*((q + q^-1)*w2 - i*(q - q^-1)*w3) + i/2*a3*((q - q^-1)*w2 + i*(q + q^-1)*w3)",
        ),
        ("reordered", "q^2*(w0*a0 - w1*a1 - w2*a2 - w3*a3)"),
    ];
    let mut out = Vec::new();
    for (label, text) in lines {
        let printed = parse_in(cm, text);
        let residual = cm.normal_form(&(printed.clone() - target.clone()))?;
        out.push(WorkedStep { label, printed, computed: target.clone(), residual });
    }
    Ok(out)
}

/// The regrouped line with the sign inside the a2 bracket read as `+`.
pub fn worked_line_corrected(cm: &Pres) -> Poly {
    parse_in(
        cm,
        "q^-2*a0*(w0 + i*w1) - i*(a0 - i*a1)*w1 - 1/2*a2*((q + q^-1)*w2 + i*(q - q^-1)*w3) + i/2*a3*((q - q^-1)*w2 + i*(q + q^-1)*w3)",
    )
}

/// Readings of the conjugate form in `Ω + Ω̄ = (1 − q⁻²)(w0 + i w1) e0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaBar {
    /// `−Σ w_k* e_k`: minus the conjugated components on the same units.
    NegatedComponentStars,
    /// `Σ w_k* e_k`: conjugated components on the same units.
    ComponentStars,
    /// `Ω*`, the antiinvolution applied to `Σ w_k e_k`.
    StarOfOmega,
    /// `h·d(h*)`, so that `Ω + Ω̄ = d(h h*)`; computed in functions and
    /// differentials with the forms expanded.
    HTimesDhStar,
}

impl OmegaBar {
    pub const ALL: [OmegaBar; 4] =
        [OmegaBar::NegatedComponentStars, OmegaBar::ComponentStars, OmegaBar::StarOfOmega, OmegaBar::HTimesDhStar];

    pub fn tag(&self) -> &'static str {
        match self {
            OmegaBar::NegatedComponentStars => "neg_component_stars",
            OmegaBar::ComponentStars => "component_stars",
            OmegaBar::StarOfOmega => "star_of_omega",
            OmegaBar::HTimesDhStar => "h_dh_star",
        }
    }
}

/// Residual of `Ω + Ω̄ − (1 − q⁻²)(w0 + i w1)` under one reading. The first
/// three readings live in `units_cm`, the last in `units_dga`.
pub fn verify_omega_bar_identity(candidate: OmegaBar, units_cm: &Pres, units_dga: &Pres) -> Result<Poly, AlgebraError> {
    let rhs = "(1 - q^-2)*(w0 + i*w1)";
    match candidate {
        OmegaBar::HTimesDhStar => {
            let env = Env::new(units_dga.generators());
            let table = StarTable::for_presentation(units_dga);
            let h = env.p("a0 + a1*e1 + a2*e2 + a3*e3");
            let h_star = table.apply(&h)?;
            let d = Derivation::exterior(units_dga);
            let omega = d.apply(&h).nc_mul(&h_star);
            let omega_bar = h.nc_mul(&d.apply(&h_star));
            let dga_forms: Vec<_> = (0..4).map(|k| (Symbol::new(&format!("w{k}")), parse_in(units_dga, OMEGA[k]))).collect();
            let target = substitute(&Env::new(&with_w(units_dga)).p(rhs), &dga_forms);
            units_dga.normal_form(&(omega + omega_bar - target))
        }
        _ => {
            let env = Env::new(units_cm.generators());
            let table = StarTable::for_presentation(units_cm);
            let omega = env.p("w0 + w1*e1 + w2*e2 + w3*e3");
            let omega_bar = match candidate {
                OmegaBar::StarOfOmega => table.apply(&omega)?,
                _ => {
                    let mut sum = Poly::zero();
                    for k in 0..4 {
                        let ws = table.get(Symbol::new(&format!("w{k}"))).expect("w_k has a star image").clone();
                        let term = if k == 0 { ws } else { ws.nc_mul(&Poly::var(&format!("e{k}"))) };
                        sum = sum + term;
                    }
                    if candidate == OmegaBar::NegatedComponentStars {
                        -sum
                    } else {
                        sum
                    }
                }
            };
            units_cm.normal_form(&(omega + omega_bar - env.p(rhs)))
        }
    }
}

/// Generators of `pres` plus `w0..w3`, for parsing text that mentions forms
/// before they are expanded.
fn with_w(pres: &Pres) -> Vec<crate::algebra::Generator> {
    let mut g = pres.generators().to_vec();
    g.extend((0..4).map(|k| crate::algebra::Generator::new(&format!("w{k}"), 1, 4 + k)));
    g
}

/// `Σ_k w_k e_k` with the forms expanded, minus `d(h)·h*`, in `units_dga`.
pub fn omega_vs_dh_hstar(units_dga: &Pres) -> Result<Poly, AlgebraError> {
    let env = Env::new(units_dga.generators());
    let table = StarTable::for_presentation(units_dga);
    let h = env.p("a0 + a1*e1 + a2*e2 + a3*e3");
    let d = Derivation::exterior(units_dga);
    let dh_hstar = d.apply(&h).nc_mul(&table.apply(&h)?);
    let mut sum = parse_in(units_dga, OMEGA[0]);
    for k in 1..4 {
        sum = sum + parse_in(units_dga, OMEGA[k]).nc_mul(&Poly::var(&format!("e{k}")));
    }
    units_dga.normal_form(&(sum - dh_hstar))
}

/// Each form relation of `cm` with `w_k` replaced by its expansion,
/// reduced in `dga`. Returns `(rule label, residual)` for the relations
/// whose left side starts with `prefix` (`"w"` for form/form, `"a"` for
/// function/form).
pub fn forms_into_relations(cm: &Pres, dga: &Pres, prefix: &str) -> Result<Vec<(String, Poly)>, AlgebraError> {
    let omega = omega_forms(dga)?;
    let images: Vec<_> = (0..4).map(|k| (Symbol::new(&format!("w{k}")), omega[k].clone())).collect();
    let mut out = Vec::new();
    for r in cm.rules() {
        let lhs_form = r.lhs.1.as_str().starts_with('w');
        if !lhs_form || !r.lhs.0.as_str().starts_with(prefix) {
            continue;
        }
        out.push((r.label(), dga.normal_form(&substitute(&r.relation(), &images))?));
    }
    Ok(out)
}

/// `da_k` expansion composed with the form expansions, minus `da_k·N`, in
/// `dga`.
pub fn da_roundtrip_residual(dga: &Pres, norm: &Poly, k: usize) -> Result<Poly, AlgebraError> {
    let omega = omega_forms(dga)?;
    let images: Vec<_> = (0..4).map(|l| (Symbol::new(&format!("w{l}")), omega[l].clone())).collect();
    let expansion = substitute(&Env::new(&with_w(dga)).p(DA_FROM_W[k]), &images);
    dga.normal_form(&(expansion - Poly::var(&format!("da{k}")).nc_mul(norm)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{build_cartan_maurer, build_dga, norm, specialize_classical, with_units};

    #[test]
    fn omega_at_q1() {
        let dga = specialize_classical(&build_dga()).unwrap();
        let one = num_rational::BigRational::from_integer(1.into());
        let w0 = crate::presentations::specialize_poly(&omega_forms(&build_dga()).unwrap()[0], &one).unwrap();
        let expect = parse_in(&dga, "da0*a0 + da1*a1 + da2*a2 + da3*a3");
        assert!(dga.normal_form(&(w0 - expect)).unwrap().is_zero());
    }

    #[test]
    fn d_star_vanishes() {
        let cm = build_cartan_maurer();
        for k in 0..4 {
            assert!(verify_d_star(&cm, k).unwrap().is_zero(), "k={k}");
        }
    }

    #[test]
    fn worked_chain_has_one_bad_line() {
        let cm = build_cartan_maurer();
        let steps = worked_d_star_computation(&cm).unwrap();
        assert!(steps[0].residual.is_zero());
        assert!(!steps[1].residual.is_zero());
        assert!(steps[2].residual.is_zero());
        assert!(cm.normal_form(&(worked_line_corrected(&cm) - steps[1].computed.clone())).unwrap().is_zero());
    }

    #[test]
    fn closure_of_d() {
        let cm = build_cartan_maurer();
        let d = cm_derivation(&cm, false).unwrap();
        for k in 0..4 {
            let da = da_from_w(&cm).unwrap();
            assert!(cm.normal_form(&d.apply(&da[k])).unwrap().is_zero(), "d(da{k})");
        }
        for r in cm.rules() {
            assert!(cm.normal_form(&d.apply(&r.relation())).unwrap().is_zero(), "{}", r.label());
        }
        let literal = cm_derivation(&cm, true).unwrap();
        let da = da_from_w(&cm).unwrap();
        assert!((0..4).any(|k| !cm.normal_form(&literal.apply(&da[k])).unwrap().is_zero()));
    }

    #[test]
    fn two_forms_at_q1() {
        let cm = build_cartan_maurer();
        let classical = specialize_classical(&cm).unwrap();
        let one = num_rational::BigRational::from_integer(1.into());
        for k in 0..4 {
            let at1 = crate::presentations::specialize_poly(&cartan_maurer_d(&cm, k, false), &one).unwrap();
            let diff = at1 - classical_cartan_maurer_d(&classical, k);
            assert!(classical.normal_form(&diff).unwrap().is_zero(), "k={k}");
        }
    }

    #[test]
    fn forms_satisfy_their_relations() {
        let (cm, dga) = (build_cartan_maurer(), build_dga());
        for (label, r) in forms_into_relations(&cm, &dga, "w").unwrap() {
            assert!(r.is_zero(), "{label}");
        }
    }

    #[test]
    fn roundtrip_gives_norm() {
        let dga = build_dga();
        for k in 0..4 {
            assert!(da_roundtrip_residual(&dga, &norm(), k).unwrap().is_zero(), "k={k}");
        }
    }

    #[test]
    fn omega_bar_readings() {
        let ucm = with_units(&build_cartan_maurer(), "units-cm").unwrap();
        let udga = with_units(&build_dga(), "units-dga").unwrap();
        assert!(verify_omega_bar_identity(OmegaBar::NegatedComponentStars, &ucm, &udga).unwrap().is_zero());
        assert!(!verify_omega_bar_identity(OmegaBar::StarOfOmega, &ucm, &udga).unwrap().is_zero());
    }
}
