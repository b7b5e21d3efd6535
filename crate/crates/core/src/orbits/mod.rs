//! Points `(x, v_1, ..., v_{r-1})` of the enhanced space over `F_q`: their
//! type, standard witnesses for every type, and the module-span invariants
//! behind the closure order.
//!
//! Two different spans appear here and must not be confused. The
//! classifier builds `W = E^x v` from the whole centralizer algebra; the
//! flag and module-dimension functions use `k[x]`-spans.

mod classify;
mod closure;
mod point;
mod witness;

pub use classify::{classify_type, classify_vectors, LevelTrace, TypeTrace};
pub use closure::{
    cyclic_dim_formula, flag_dims, in_stratum_open, in_unipotent_variety, max_module_dim_formula,
    max_module_dim_oracle, quotient_type_after_ui,
};
pub use point::{EnhancedPoint, PointJson};
pub use witness::{semi_standard_element, standard_element, SemiStandardCoeffs};
