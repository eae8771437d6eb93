use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::Result;
use crate::finprob::Stoch;
use crate::linalg::{left_null_space, primitive_integer, rank};
use crate::matcat::{FinSet, Kernel, Prob};

/// Two kernels `g, h : V → {0,1}` with `g ∘ f = h ∘ f` that differ on the
/// support of `f`. The row labeled `1` of `g − h` is `2εβ`.
#[derive(Debug, Clone, PartialEq)]
pub struct CompletenessCounterexample {
    /// Primitive integer left-null vector of `f`, zero off its support.
    pub beta: Vec<BigInt>,
    pub epsilon: BigRational,
    pub g: Stoch,
    pub h: Stoch,
}

#[derive(Debug, Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Completeness {
    Complete,
    Incomplete(CompletenessCounterexample),
}

impl Completeness {
    pub fn is_complete(&self) -> bool {
        matches!(self, Completeness::Complete)
    }
}

/// Decides completeness of `f : Θ → V` by the exact rank of `f` restricted
/// to its support rows.
pub fn is_complete(f: &Stoch) -> Result<Completeness> {
    let support: Vec<usize> = (0..f.cod().size())
        .filter(|&v| (0..f.dom().size()).any(|t| f.get(v, t).is_positive()))
        .collect();
    let rows: Vec<Vec<BigRational>> = support
        .iter()
        .map(|&v| (0..f.dom().size()).map(|t| f.get(v, t).value().clone()).collect())
        .collect();
    if rank(&rows) == support.len() {
        return Ok(Completeness::Complete);
    }
    let basis = left_null_space(&rows, f.dom().size());
    let restricted = primitive_integer(&basis[0]);
    let mut beta = vec![BigInt::zero(); f.cod().size()];
    for (&v, b) in support.iter().zip(restricted) {
        beta[v] = b;
    }
    let max = beta.iter().map(Signed::abs).max().expect("nonempty null vector");
    let epsilon = BigRational::new(BigInt::one(), BigInt::from(2) * max);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let test = |sign: i64| -> Result<Stoch> {
        let columns = beta
            .iter()
            .map(|b| {
                let one = &half + &epsilon * BigRational::from_integer(b * sign);
                let zero = BigRational::one() - &one;
                vec![Prob::new(zero), Prob::new(one)]
            })
            .collect();
        Kernel::from_columns(f.cod().clone(), FinSet::of(&["0", "1"]), columns)
    };
    Ok(Completeness::Incomplete(CompletenessCounterexample {
        g: test(1)?,
        h: test(-1)?,
        beta,
        epsilon,
    }))
}
