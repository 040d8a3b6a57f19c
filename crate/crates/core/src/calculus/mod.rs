//! The exterior differential, the star antiinvolution, Cartan–Maurer forms
//! and the vector fields dual to them.

mod derivation;
mod forms;
mod star;
mod vector_fields;

pub use derivation::Derivation;
pub use star::{q_squared, star, StarTable};
pub use forms::{
    cartan_maurer_d, classical_cartan_maurer_d, cm_derivation, da_from_w, da_roundtrip_residual, forms_into_relations,
    omega_forms, omega_vs_dh_hstar, substitute, verify_d_star, verify_omega_bar_identity, worked_d_star_computation,
    worked_line_corrected, OmegaBar, WorkedStep,
};
pub use vector_fields::{
    apply_operator, extract_vector_fields, nabla_from_x, pbw_basis, verify_identities, verify_lie_algebra, Convention,
    IdentityResult, OperatorIdentity, VectorField, CLASSICAL_IDENTITIES, QUANTUM_IDENTITIES,
};
