//! Matrix categories over commutative semirings, restricted to
//! column-normalized matrices.
//!
//! | alias            | scalars                 | category       |
//! |------------------|-------------------------|----------------|
//! | [`FinStoch`]     | nonnegative rationals   | Markov kernels |
//! | [`FinStochPm`]   | signed rationals        | quasi-kernels  |
//! | [`FinSetMulti`]  | booleans, `1 + 1 = 1`   | multivalued functions |
//! | [`FuzzyRel`]     | `[0,1]` with max/min    | fuzzy relations |

mod finset;
mod kernel;
mod semiring;

use std::marker::PhantomData;

use rand::Rng;

pub use finset::{Factor, FinSet};
pub use kernel::{
    compose, copy, discard, from_function, from_label_map, identity, marginalize, permute_inputs,
    permute_outputs, project, structure, swap, tensor, Kernel, StructureKind,
};
pub use semiring::{rational, Bool, Fuzzy, Prob, Semiring, Signed};

use crate::category::{MarkovCategory, MorphismSampler, SeededRng};
use crate::error::Result;

pub type FinStoch = MatCat<Prob>;
pub type FinStochPm = MatCat<Signed>;
pub type FinSetMulti = MatCat<Bool>;
pub type FuzzyRel = MatCat<Fuzzy>;

/// The matrix category over scalars `S` as a [`MarkovCategory`] backend.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatCat<S>(PhantomData<S>);

impl<S> MatCat<S> {
    pub const fn new() -> Self {
        MatCat(PhantomData)
    }
}

impl<S> Default for MatCat<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Semiring> MarkovCategory for MatCat<S> {
    type Object = FinSet;
    type Morphism = Kernel<S>;

    fn unit(&self) -> FinSet {
        FinSet::unit()
    }
    fn tensor_objects(&self, a: &FinSet, b: &FinSet) -> FinSet {
        a.tensor(b)
    }
    fn domain(&self, f: &Kernel<S>) -> FinSet {
        f.dom().clone()
    }
    fn codomain(&self, f: &Kernel<S>) -> FinSet {
        f.cod().clone()
    }
    fn identity(&self, x: &FinSet) -> Kernel<S> {
        identity(x)
    }
    fn copy(&self, x: &FinSet) -> Kernel<S> {
        copy(x)
    }
    fn discard(&self, x: &FinSet) -> Kernel<S> {
        discard(x)
    }
    fn swap(&self, x: &FinSet, y: &FinSet) -> Kernel<S> {
        swap(x, y)
    }
    fn compose(&self, g: &Kernel<S>, f: &Kernel<S>) -> Result<Kernel<S>> {
        compose(g, f)
    }
    fn tensor(&self, f: &Kernel<S>, g: &Kernel<S>) -> Result<Kernel<S>> {
        Ok(tensor(f, g))
    }
    fn equal(&self, f: &Kernel<S>, g: &Kernel<S>) -> bool {
        f == g
    }
}

pub fn random_kernel<S: Semiring>(dom: &FinSet, cod: &FinSet, rng: &mut SeededRng) -> Kernel<S> {
    let columns = (0..dom.size())
        .map(|_| S::random_column(cod.size(), rng))
        .collect();
    Kernel::from_columns(dom.clone(), cod.clone(), columns).expect("random columns are normalized")
}

/// A random kernel whose column `x` is supported inside `supports[x]`.
pub fn random_kernel_within<S: Semiring>(
    dom: &FinSet,
    cod: &FinSet,
    supports: &[Vec<usize>],
    rng: &mut SeededRng,
) -> Kernel<S> {
    let columns = supports
        .iter()
        .map(|allowed| {
            let values = S::random_column(allowed.len(), rng);
            let mut column = vec![S::zero(); cod.size()];
            for (&y, v) in allowed.iter().zip(values) {
                column[y] = v;
            }
            column
        })
        .collect();
    Kernel::from_columns(dom.clone(), cod.clone(), columns).expect("random columns are normalized")
}

pub fn random_function<S: Semiring>(dom: &FinSet, cod: &FinSet, rng: &mut SeededRng) -> Kernel<S> {
    let images: Vec<usize> = (0..dom.size()).map(|_| rng.random_range(0..cod.size())).collect();
    from_function(dom.clone(), cod.clone(), &images).expect("images are in range")
}

/// Samples uniformly shaped random kernels; with probability
/// `deterministic_share` the sample is a random function instead.
#[derive(Debug, Clone, Copy)]
pub struct KernelSampler {
    pub deterministic_share: f64,
}

impl Default for KernelSampler {
    fn default() -> Self {
        KernelSampler {
            deterministic_share: 0.2,
        }
    }
}

impl<S: Semiring> MorphismSampler<MatCat<S>> for KernelSampler {
    fn sample(&self, _: &MatCat<S>, dom: &FinSet, cod: &FinSet, rng: &mut SeededRng) -> Kernel<S> {
        if rng.random_bool(self.deterministic_share) {
            random_function(dom, cod, rng)
        } else {
            random_kernel(dom, cod, rng)
        }
    }
}
