//! Cech cochains on the standard cover of P^m, cohomology of line bundles,
//! class tests by per-exponent linear algebra, canonical classes and traces.

mod canonical;
mod classes;
mod cochain;

pub use canonical::{log_ratio_form, nabla0, trace_form, UnitCocycle};
pub use classes::{
    class_is_zero, cohomology_dim, euler_connecting_class, field_class_is_zero, form_class_coordinate, form_class_is_zero,
    form_class_section, solve_coboundary, top_class_coordinates,
};
pub use cochain::{
    parse_simplex_key, simplex_key, twisted_cocycle_witness, Cochain, CochainJson, CochainValue, FieldCochain,
    FormCochain, LineCochain, StandardCover,
};
