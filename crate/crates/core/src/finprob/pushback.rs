//! Randomness pushback and disintegration.

use super::conditional::conditional;
use super::Stoch;
use crate::category::MarkovCategory;
use crate::error::{Error, Result};
use crate::matcat::{identity, permute_inputs, permute_outputs, FinSet, FinStoch, Kernel, Prob, Semiring};

/// Default bound on the number of function tables `|Y|^|X|`.
pub const DEFAULT_PUSHBACK_BOUND: u128 = 1_000_000;

/// `f = g ∘ (ψ ⊗ id_X)` with `g` deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct Pushback {
    /// `Y^X`, encoded as `Y ⊗ … ⊗ Y` with one copy per element of `X`.
    pub noise: FinSet,
    pub psi: Stoch,
    /// Evaluation `Y^X ⊗ X → Y`.
    pub g: Stoch,
}

impl Pushback {
    pub fn recompose(&self) -> Result<Stoch> {
        let x = self.g.dom().slice(self.noise.factor_count()..self.g.dom().factor_count())?;
        let cat = FinStoch::new();
        cat.compose(&self.g, &cat.tensor(&self.psi, &identity(&x))?)
    }
}

/// Pushes the randomness of `f : X → Y` into the product distribution
/// `ψ(t) = Π_x f(t(x)|x)` on function tables `t`.
pub fn randomness_pushback(f: &Stoch, bound: u128) -> Result<Pushback> {
    let (x, y) = (f.dom(), f.cod());
    let (nx, ny) = (x.size(), y.size());
    let tables = u32::try_from(nx)
        .ok()
        .and_then(|e| (ny as u128).checked_pow(e))
        .filter(|&t| t <= bound)
        .ok_or(Error::SizeBound {
            size: (ny as u128).saturating_pow(nx.min(u32::MAX as usize) as u32),
            bound,
        })?;
    let tables = tables as usize;
    let copies: Vec<&FinSet> = vec![y; nx];
    let noise = FinSet::product(&copies);

    // Table t assigns t(x) = digit x of t in base |Y|, most significant first.
    let digit = |t: usize, xi: usize| (t / ny.pow((nx - 1 - xi) as u32)) % ny;
    let weights: Vec<Prob> = (0..tables)
        .map(|t| {
            (0..nx).fold(Prob::one(), |acc, xi| {
                if acc.is_zero() {
                    acc
                } else {
                    acc.mul(f.get(digit(t, xi), xi))
                }
            })
        })
        .collect();
    let psi = Kernel::state(noise.clone(), weights)?;

    let dom = noise.tensor(x);
    let images: Vec<usize> = (0..tables * nx).map(|i| digit(i / nx, i % nx)).collect();
    let g = crate::matcat::from_function(dom, y.clone(), &images)?;
    Ok(Pushback { noise, psi, g })
}

/// `s : A ⊗ Y → X` with `s(x|a,y) (fp)(y|a) = p(x|a) f(y|x)`, computed as the
/// conditional on `Y` of `(id ⊗ f) ∘ copy ∘ p`.
pub fn disintegrate(p: &Stoch, f: &Stoch) -> Result<Stoch> {
    let cat = FinStoch::new();
    let x = p.cod();
    let joint = cat.compose(&cat.pair(&identity(x), f)?, p)?;
    let (kx, ky) = (x.factor_count(), f.cod().factor_count());
    let order: Vec<usize> = (kx..kx + ky).chain(0..kx).collect();
    let cond = conditional(&permute_outputs(&joint, &order)?, ky)?;
    // Y ⊗ A → X, reordered to A ⊗ Y.
    let ka = p.dom().factor_count();
    let inputs: Vec<usize> = (ky..ky + ka).chain(0..ky).collect();
    permute_inputs(&cond, &inputs)
}

/// Checks `s(x|a,y) (fp)(y|a) = p(x|a) f(y|x)` pointwise.
pub fn disintegration_holds(p: &Stoch, f: &Stoch, s: &Stoch) -> Result<bool> {
    let cat = FinStoch::new();
    let fp = cat.compose(f, p)?;
    let (na, nx, ny) = (p.dom().size(), p.cod().size(), f.cod().size());
    if s.dom() != &p.dom().tensor(f.cod()) || s.cod() != p.cod() {
        return Err(Error::TypeMismatch(format!(
            "disintegration must map A ⊗ Y → X, got {:?} → {:?}",
            s.dom(),
            s.cod()
        )));
    }
    Ok((0..na).all(|a| {
        (0..ny).all(|y| {
            (0..nx).all(|x| s.get(x, a * ny + y).mul(fp.get(y, a)) == p.get(x, a).mul(f.get(y, x)))
        })
    }))
}
