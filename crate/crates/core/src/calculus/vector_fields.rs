use std::collections::BTreeMap;

use num_rational::BigRational;
use rayon::prelude::*;

use crate::algebra::{AlgebraError, Symbol, Word};
use crate::calculus::{da_from_w, Derivation};
use crate::{LaurentScalar, Poly, Pres};

/// A linear operator on functions, tabulated on normal-form monomials.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorField {
    pub label: String,
    pub action: BTreeMap<Word, Poly>,
}

impl VectorField {
    /// Applies the operator to a combination of tabulated monomials.
    pub fn apply(&self, p: &Poly) -> Result<Poly, AlgebraError> {
        let mut out = Poly::zero();
        for (w, c) in p.terms() {
            let img = self.action.get(w).ok_or_else(|| {
                AlgebraError::Other(format!("{} is not tabulated on {}", self.label, w.render(false)))
            })?;
            out.add_scaled(img, c);
        }
        Ok(out)
    }

    fn scaled(&self, label: String, c: &LaurentScalar) -> VectorField {
        VectorField { label, action: self.action.iter().map(|(w, p)| (w.clone(), p.scale(c))).collect() }
    }
}

/// `a3^n3 a2^n2 a1^n1 a0^n0` for total degree at most `cap`, in the normal
/// order of the function algebra.
pub fn pbw_basis(cap: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for deg in 0..=cap {
        for n3 in (0..=deg).rev() {
            for n2 in (0..=deg - n3).rev() {
                for n1 in (0..=deg - n3 - n2).rev() {
                    let n0 = deg - n3 - n2 - n1;
                    let mut w = Word::empty();
                    for (k, n) in [(3, n3), (2, n2), (1, n1), (0, n0)] {
                        for _ in 0..n {
                            w.push(Symbol::new(&format!("a{k}")));
                        }
                    }
                    out.push(w);
                }
            }
        }
    }
    out
}

/// `X_0..X_3` read off from `df = Σ_k w_k·(X_k f)` in the Cartan–Maurer
/// algebra `cm`, tabulated up to degree `cap`.
pub fn extract_vector_fields(cm: &Pres, cap: usize) -> Result<[VectorField; 4], AlgebraError> {
    assert!(cap >= 1, "degree cap must be at least 1");
    let da = da_from_w(cm)?;
    let d = Derivation::new(cm, (0..4).map(|k| (Symbol::new(&format!("a{k}")), da[k].clone())));
    let forms: Vec<Symbol> = (0..4).map(|k| Symbol::new(&format!("w{k}"))).collect();
    let rows: Vec<(Word, [Poly; 4])> = pbw_basis(cap)
        .into_par_iter()
        .map(|f| {
            let df = cm.normal_form(&d.apply(&Poly::word(f.clone())))?;
            let mut parts: [Poly; 4] = Default::default();
            for (w, c) in df.terms() {
                let k = forms.iter().position(|s| w.first() == Some(s)).ok_or_else(|| {
                    AlgebraError::Other(format!("d({}) has a term {} not led by a form", f.render(false), w.render(false)))
                })?;
                parts[k].add_term(w.slice(1, w.degree()), c.clone());
            }
            Ok((f, parts))
        })
        .collect::<Result<_, AlgebraError>>()?;
    let mut fields: [VectorField; 4] =
        std::array::from_fn(|k| VectorField { label: format!("X{k}"), action: BTreeMap::new() });
    for (f, parts) in rows {
        for (k, p) in parts.into_iter().enumerate() {
            fields[k].action.insert(f.clone(), p);
        }
    }
    Ok(fields)
}

/// The classical normalization `∇0 = X0/2, ∇1 = −X1/2, ∇2 = X2/2, ∇3 = −X3/2`.
pub fn nabla_from_x(x: &[VectorField; 4]) -> [VectorField; 4] {
    let half = LaurentScalar::from_ratio(1, 2);
    std::array::from_fn(|k| {
        let c = if k % 2 == 0 { half.clone() } else { -half.clone() };
        x[k].scaled(format!("nabla{k}"), &c)
    })
}

/// Normalization under which operator identities are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    X,
    Nabla,
}

impl Convention {
    pub fn tag(&self) -> &'static str {
        match self {
            Convention::X => "x",
            Convention::Nabla => "nabla",
        }
    }
}

/// An operator identity written as text in `D0..D3`, products read as
/// composition; a constant term is a multiple of the identity.
#[derive(Clone, Debug)]
pub struct OperatorIdentity {
    pub id: &'static str,
    pub text: &'static str,
}

/// The three commutation and three bracket identities of the classical
/// Lie algebra, each written as an operator that must vanish.
pub const CLASSICAL_IDENTITIES: [OperatorIdentity; 6] = [
    OperatorIdentity { id: "comm_1_0", text: "D1*D0 - D0*D1" },
    OperatorIdentity { id: "comm_2_0", text: "D2*D0 - D0*D2" },
    OperatorIdentity { id: "comm_3_0", text: "D3*D0 - D0*D3" },
    OperatorIdentity { id: "bracket_1_2", text: "D1*D2 - D2*D1 + 2*D3" },
    OperatorIdentity { id: "bracket_2_3", text: "D2*D3 - D3*D2 + 2*D1" },
    OperatorIdentity { id: "bracket_3_1", text: "D3*D1 - D1*D3 + 2*D2" },
];

/// The quantum-algebra relations, each as `lhs − rhs`.
pub const QUANTUM_IDENTITIES: [OperatorIdentity; 6] = [
    OperatorIdentity { id: "q_comm_0_1", text: "D0*D1 - D1*D0" },
    OperatorIdentity { id: "q_comm_0_2", text: "D0*D2 - D2*D0" },
    OperatorIdentity { id: "q_comm_0_3", text: "D0*D3 - D3*D0" },
    OperatorIdentity {
        id: "q_rel_1_2",
        text: "D1*D2 - ((q^2 + q^-2)/2*D2*D1 - (q^-2 + 1)*D3 + i*(q^-2 - 1)*D2 - i*(q - q^-1)^2/2*D0*D1 - (q^2 - q^-2)/2*D3*(D0 + i*D1))",
    },
    OperatorIdentity {
        id: "q_rel_1_3",
        text: "D1*D3 - ((q^2 + q^-2)/2*D3*D1 + (q^-2 + 1)*D2 - i*(q^-2 - 1)*D3 - i*(q - q^-1)^2/2*D0*D1 + (q^2 - q^-2)/2*D2*(D0 + i*D1))",
    },
    OperatorIdentity {
        id: "q_rel_3_2",
        text: "D3*D2 - (D2*D3 + (q^-2 + 1)*D1 - i*(q^-2 - 1)*D0 + i*(q^2 - q^-2)/2*D0^2 + (q - q^-1)^2/2*D1^2 + (1 - q^-2)*D0*D1)",
    },
];

impl OperatorIdentity {
    /// The identity as a polynomial in `D0..D3`, coefficients evaluated at
    /// `q0` when given.
    pub fn operator(&self, q0: Option<&BigRational>) -> Poly {
        let resolve = |name: &str| -> Option<Poly> {
            matches!(name, "D0" | "D1" | "D2" | "D3").then(|| Poly::var(name))
        };
        let p = crate::expr::parse(self.text)
            .and_then(|e| e.eval::<LaurentScalar>("operators", &resolve))
            .expect("operator identities are well formed");
        match q0 {
            Some(q0) => crate::presentations::specialize_poly(&p, q0).expect("q0 is nonzero"),
            None => p,
        }
    }
}

/// Evaluates an operator polynomial on `f`; `D_k` acts as `fields[k]`, the
/// rightmost letter first.
pub fn apply_operator(op: &Poly, fields: &[VectorField; 4], f: &Poly) -> Result<Poly, AlgebraError> {
    let mut out = Poly::zero();
    for (w, c) in op.terms() {
        let mut acc = f.clone();
        for s in w.iter().rev() {
            let k = s.as_str().strip_prefix('D').and_then(|n| n.parse::<usize>().ok()).filter(|k| *k < 4);
            let k = k.ok_or_else(|| AlgebraError::Other(format!("unknown operator {s}")))?;
            acc = fields[k].apply(&acc)?;
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

/// One identity evaluated on the tabulated basis.
#[derive(Clone, Debug)]
pub struct IdentityResult {
    pub id: &'static str,
    /// Basis monomials where the operator does not vanish, with its value.
    pub failures: Vec<(Word, Poly)>,
    pub checked: usize,
}

impl IdentityResult {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluates identities on every basis monomial up to `cap` and reduces in
/// the function algebra `hq`.
pub fn verify_identities(
    identities: &[OperatorIdentity],
    fields: &[VectorField; 4],
    hq: &Pres,
    cap: usize,
    q0: Option<&BigRational>,
) -> Result<Vec<IdentityResult>, AlgebraError> {
    let basis = pbw_basis(cap);
    identities
        .iter()
        .map(|ident| {
            let op = ident.operator(q0);
            let mut failures = Vec::new();
            for f in &basis {
                let r = hq.normal_form(&apply_operator(&op, fields, &Poly::word(f.clone()))?)?;
                if !r.is_zero() {
                    failures.push((f.clone(), r));
                }
            }
            Ok(IdentityResult { id: ident.id, failures, checked: basis.len() })
        })
        .collect()
}

/// Lie-algebra checks. Classical mode works at q = 1 on the classical
/// identities; quantum mode evaluates the quantum relations on the
/// q-deformed fields. Returns results for the X and ∇ conventions.
pub fn verify_lie_algebra(
    cm: &Pres,
    hq: &Pres,
    cap: usize,
    classical: bool,
) -> Result<Vec<(Convention, Vec<IdentityResult>)>, AlgebraError> {
    let x = extract_vector_fields(cm, cap)?;
    let nabla = nabla_from_x(&x);
    let (identities, q0): (&[OperatorIdentity], _) = if classical {
        (&CLASSICAL_IDENTITIES, Some(BigRational::from_integer(1.into())))
    } else {
        (&QUANTUM_IDENTITIES, None)
    };
    let mut out = Vec::new();
    for (conv, fields) in [(Convention::X, &x), (Convention::Nabla, &nabla)] {
        out.push((conv, verify_identities(identities, fields, hq, cap, q0.as_ref())?));
    }
    Ok(out)
}
