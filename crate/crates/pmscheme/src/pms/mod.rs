//! Primitive multiple schemes on the standard cover: gluing cocycles,
//! obstruction classes, extensions of trivial schemes and the actions of
//! Aut(X_2) on their parameters.

mod actions;
mod json;
mod obstruction;
mod scheme;
mod trivial;

pub use actions::{
    act_aut0, act_cstar, add_sections, check_global, composition_defect, composition_potential, ExtPair,
};
pub use json::{obstruction_report, ObstructionReport, SchemeJson, Witness};
pub use obstruction::{
    delta2_obstruction, line_bundle_extension_obstruction, psi_triple_product, symmetric_lifts, LiftStrategy,
    LineBundleCocycle, ObstructionClass,
};
pub use scheme::{
    dehomogenize, homogenize, pair_raw, standard_degree, twisted_witness, validate_scheme, PairCocycle, PairFamily,
    SchemeCocycle, SchemeReport, Twistable,
};
pub use trivial::{
    delta_trivial, delta_via_upsilon, p2_cyclic_field, p2_rho_prime_family, p2_x2, p2_x4, upsilon1, FormData,
    TrivialExtension,
};
