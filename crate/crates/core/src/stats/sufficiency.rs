use super::model::{StatModel, Statistic};
use crate::error::Result;
use crate::finprob::Stoch;
use crate::matcat::{Kernel, Prob, Semiring};

/// `α : V → X` with `α ∘ s ∘ p = p` and `s ∘ α = id` almost surely under `sp`.
#[derive(Debug, Clone, PartialEq)]
pub struct SufficiencyWitness {
    pub alpha: Stoch,
}

/// `p(x|θ) = h(x) · g(s(x)|θ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FisherNeyman {
    /// Indexed by elements of `X`.
    pub h: Vec<Prob>,
    /// `g = s ∘ p : Θ → V`.
    pub g: Stoch,
}

impl FisherNeyman {
    /// Checks the factorization exactly.
    pub fn holds(&self, model: &StatModel, s: &Statistic) -> bool {
        let p = model.kernel();
        (0..p.dom().size()).all(|theta| {
            (0..p.cod().size())
                .all(|x| *p.get(x, theta) == self.h[x].mul(self.g.get(s.image(x), theta)))
        })
    }
}

impl SufficiencyWitness {
    /// `h(x) = α(x|s(x))`, `g_θ = (sp)(·|θ)`.
    pub fn fisher_neyman(&self, model: &StatModel, s: &Statistic) -> Result<FisherNeyman> {
        let h = (0..self.alpha.cod().size())
            .map(|x| self.alpha.get(x, s.image(x)).clone())
            .collect();
        Ok(FisherNeyman {
            h,
            g: model.push(s)?,
        })
    }
}

/// Decides sufficiency: for every value `v` charged by `sp`, the columns of
/// `p` restricted to the fiber `s⁻¹(v)` and renormalized must agree for
/// all parameters charging `v`.
pub fn is_sufficient(model: &StatModel, s: &Statistic) -> Result<Option<SufficiencyWitness>> {
    model.check_statistic(s)?;
    let p = model.kernel();
    let sp = model.push(s)?;
    let (nx, nv) = (p.cod().size(), s.codomain().size());
    let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for x in 0..nx {
        fibers[s.image(x)].push(x);
    }

    let mut columns = Vec::with_capacity(nv);
    for (v, fiber) in fibers.iter().enumerate() {
        let mut common: Option<Vec<Prob>> = None;
        for theta in 0..p.dom().size() {
            let mass = sp.get(v, theta);
            if mass.is_zero() {
                continue;
            }
            let mut column = vec![Prob::zero(); nx];
            for &x in fiber {
                column[x] = p.get(x, theta).div(mass);
            }
            match &common {
                Some(c) if *c != column => return Ok(None),
                Some(_) => {}
                None => common = Some(column),
            }
        }
        columns.push(common.unwrap_or_else(|| uniform_on(fiber, nx)));
    }
    let alpha = Kernel::from_columns(s.codomain().clone(), p.cod().clone(), columns)?;
    Ok(Some(SufficiencyWitness { alpha }))
}

/// Uniform on `fiber`, or on all of `0..n` when the fiber is empty.
fn uniform_on(fiber: &[usize], n: usize) -> Vec<Prob> {
    if fiber.is_empty() {
        return vec![Prob::ratio(1, n as i64); n];
    }
    let mut column = vec![Prob::zero(); n];
    let weight = Prob::ratio(1, fiber.len() as i64);
    for &x in fiber {
        column[x] = weight.clone();
    }
    column
}
