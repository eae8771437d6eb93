//! Markov categories at desk scale.
//!
//! Exact matrix backends over four scalar semirings ([`matcat`]), an
//! affine-Gaussian backend ([`gauss`]), a chain-diagram backend for finite
//! stochastic processes ([`diagram`]), and the probability and statistics
//! layers built on finite stochastic matrices ([`finprob`], [`stats`]).
//!
//! Every decision procedure that answers "yes" returns a witness that can be
//! recomposed and checked exactly.

pub mod category;
pub mod diagram;
pub mod error;
pub mod finprob;
pub mod gauss;
pub mod instances;
pub mod linalg;
pub mod matcat;
pub mod stats;

pub use category::{
    check_causality_instance, check_comonoid_laws, check_deterministic, check_positivity_instance,
    is_deterministic, recompose_from_conditional, seeded, Counterexample, LawReport, MarkovCategory, MorphismSampler,
    SeededRng, Verdict,
};
pub use error::{Error, Result};
pub use matcat::{FinSet, FinStoch, Kernel, Prob};
