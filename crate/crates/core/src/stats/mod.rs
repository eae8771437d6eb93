//! Statistical models on finite sets: sufficiency, completeness,
//! ancillarity, Basu's theorem, the informativeness preorder on statistics,
//! minimal sufficiency and Bahadur's theorem.
//!
//! A model is a kernel `p : Θ → X`; a statistic is a deterministic kernel
//! `s : X → V`. Every positive answer comes with a certificate.

mod basu;
mod completeness;
mod model;
mod preorder;
mod sufficiency;

pub use basu::{check_basu, is_ancillary};
pub use completeness::{is_complete, Completeness, CompletenessCounterexample};
pub use model::{StatModel, Statistic};
pub use preorder::{
    check_bahadur, minimal_sufficient, set_partitions, statistic_leq, ComparisonWitness,
    DEFAULT_PARTITION_BOUND,
};
pub use sufficiency::{is_sufficient, FisherNeyman, SufficiencyWitness};
