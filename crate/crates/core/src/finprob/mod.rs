//! Probability on finite sets: conditionals, supports and almost-sure
//! relations, conditional independence, conditional products and couplings,
//! Bayesian inversion, randomness pushback and disintegration.
//!
//! Everything here works on [`FinStoch`](crate::matcat::FinStoch) kernels.
//! Multi-factor objects are split by factor position: a split `k` of
//! `X₁ ⊗ … ⊗ Xₙ` means `X = X₁ ⊗ … ⊗ Xₖ` and `Y = Xₖ₊₁ ⊗ … ⊗ Xₙ`.
//!
//! Wherever a conditional is undetermined (the conditioning value has
//! probability zero) the column is filled by a [`Fill`] policy, uniform by
//! default.

mod ci;
mod conditional;
mod product;
mod pushback;
mod support;

pub use ci::{
    ci_gen, ci_markov, ci_proc, ci_state, CiVerdict, GenCiWitness, MarkovCiWitness,
    ProcCiWitness, StateCiWitness, TripleSplit,
};
pub use conditional::{conditional, conditional_with, marginal, recompose, Fill};
pub use product::{
    bayes_invert, conditional_product, conditional_product_with, coupling_compose, Coupling,
};
pub use pushback::{
    disintegrate, disintegration_holds, randomness_pushback, Pushback, DEFAULT_PUSHBACK_BOUND,
};
pub use support::{as_deterministic, as_equal, support, SupportResult};

use crate::matcat::{Kernel, Prob};

/// Finite probability kernel.
pub type Stoch = Kernel<Prob>;
