//! The Gaussian Markov category.
//!
//! Objects are dimensions `n ∈ ℕ`. A morphism `n → m` is a triple `(M, C, s)`
//! sending `x` to `Mx + ξ` with `ξ ~ N(s, C)`. The unit is dimension zero and
//! the tensor product is the direct sum.

mod morphism;
mod psd;
mod sample;

pub use morphism::{
    g_compose, g_conditional, g_copy, g_discard, g_identity, g_marginalize, g_pushback,
    g_structure, g_swap, g_tensor, Gauss, GaussMorphism, GaussPushback, DEFAULT_TOL,
};
pub use psd::{penrose_residual, psd_pinv, PsdPinvResult, DEFAULT_CUTOFF};
pub use sample::{g_sample, random_gauss, random_psd, GaussSampler};
