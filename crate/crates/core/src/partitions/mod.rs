//! Partitions, r-partitions and level compositions, together with the
//! closed-form dimension formulas indexed by them.

mod bracket;
mod dims;
mod level;
mod multi;
mod partition;

pub use bracket::{
    bracket_label, bracket_nu, check_centralizer_identity, dim_centralizer_levi,
    dim_centralizer_symplectic, rectangular_decomposition,
};
pub use dims::{
    d_lambda, dim_image, dim_resolution, dim_stratum, dim_stratum_enhanced, dim_stratum_exotic,
    dim_stratum_fibre, dim_unipotent_variety, Case, StratumRecord,
};
pub use level::LevelComposition;
pub use multi::{BiPartition, MultiPartition};
pub(crate) use multi::sort_by_c as sort_labels;
pub use partition::{Composition, Partition};
