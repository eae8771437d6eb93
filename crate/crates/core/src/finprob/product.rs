//! Conditional products, couplings and Bayesian inversion.

use super::conditional::{conditional, conditional_with, marginal, Fill};
use super::Stoch;
use crate::category::MarkovCategory;
use crate::error::{Error, Result};
use crate::matcat::{identity, permute_outputs, project, FinStoch};

fn column_strings(k: &Stoch) -> Vec<String> {
    k.column(0).map(ToString::to_string).collect()
}

/// `ψ ⊗_W φ : I → X ⊗ W ⊗ Y` for `ψ : I → X ⊗ W` and `φ : I → W ⊗ Y`, where
/// `W` is the last `w_factors` factors of `ψ` and the first of `φ`.
pub fn conditional_product(psi: &Stoch, phi: &Stoch, w_factors: usize) -> Result<Stoch> {
    conditional_product_with(psi, phi, w_factors, Fill::Uniform)
}

/// As [`conditional_product`], building `φ_{|W}` with the given fill.
pub fn conditional_product_with(
    psi: &Stoch,
    phi: &Stoch,
    w_factors: usize,
    fill: Fill,
) -> Result<Stoch> {
    if !psi.dom().is_unit() || !phi.dom().is_unit() {
        return Err(Error::TypeMismatch(
            "conditional products are formed from states".into(),
        ));
    }
    let n = psi.cod().factor_count();
    if w_factors > n || w_factors > phi.cod().factor_count() {
        return Err(Error::InvalidSplit(format!(
            "cannot share {w_factors} factors between {:?} and {:?}",
            psi.cod(),
            phi.cod()
        )));
    }
    let x = psi.cod().slice(0..n - w_factors)?;
    let w = psi.cod().slice(n - w_factors..n)?;
    if w != phi.cod().slice(0..w_factors)? {
        return Err(Error::TypeMismatch(format!(
            "shared objects differ: {:?} vs {:?}",
            w,
            phi.cod().slice(0..w_factors)?
        )));
    }
    let psi_w = project(psi, &(n - w_factors..n).collect::<Vec<_>>())?;
    let phi_w = marginal(phi, w_factors)?;
    if psi_w != phi_w {
        return Err(Error::MarginalMismatch {
            left: column_strings(&psi_w),
            right: column_strings(&phi_w),
        });
    }
    // (id_X ⊗ id_W ⊗ φ_{|W}) ∘ (id_X ⊗ copy_W) ∘ ψ
    let cat = FinStoch::new();
    let cond = conditional_with(phi, w_factors, fill)?;
    let duplicate = cat.tensor(&identity(&x), &cat.copy(&w))?;
    let attach = cat.tensor_all(&[&identity(&x), &identity(&w), &cond])?;
    cat.chain(&[psi, &duplicate, &attach])
}

/// A joint state on `X ⊗ Y` viewed as a morphism `(X, ψ_X) → (Y, ψ_Y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Coupling {
    joint: Stoch,
    split: usize,
}

impl Coupling {
    /// `joint : I → X ⊗ Y` with `X` the first `split` factors.
    pub fn new(joint: Stoch, split: usize) -> Result<Self> {
        if !joint.dom().is_unit() {
            return Err(Error::TypeMismatch(format!(
                "a coupling is a state, got domain {:?}",
                joint.dom()
            )));
        }
        if split > joint.cod().factor_count() {
            return Err(Error::InvalidSplit(format!(
                "split {split} does not fit {:?}",
                joint.cod()
            )));
        }
        Ok(Coupling { joint, split })
    }

    /// `copy ∘ π`.
    pub fn identity(pi: &Stoch) -> Result<Self> {
        let cat = FinStoch::new();
        Coupling::new(cat.compose(&cat.copy(pi.cod()), pi)?, pi.cod().factor_count())
    }

    /// `(id ⊗ f) ∘ copy ∘ π`, the coupling induced by a kernel.
    pub fn from_kernel(pi: &Stoch, f: &Stoch) -> Result<Self> {
        let cat = FinStoch::new();
        let joint = cat.compose(&cat.pair(&identity(pi.cod()), f)?, pi)?;
        Coupling::new(joint, pi.cod().factor_count())
    }

    pub fn joint(&self) -> &Stoch {
        &self.joint
    }

    pub fn split(&self) -> usize {
        self.split
    }

    fn output_factors(&self) -> usize {
        self.joint.cod().factor_count() - self.split
    }

    pub fn source(&self) -> Stoch {
        marginal(&self.joint, self.split).expect("split was validated")
    }

    pub fn target(&self) -> Stoch {
        let n = self.joint.cod().factor_count();
        project(&self.joint, &(self.split..n).collect::<Vec<_>>()).expect("split was validated")
    }

    /// The same joint with the roles of source and target exchanged.
    pub fn dagger(&self) -> Self {
        let n = self.joint.cod().factor_count();
        let order: Vec<usize> = (self.split..n).chain(0..self.split).collect();
        Coupling {
            joint: permute_outputs(&self.joint, &order).expect("order is a permutation"),
            split: self.output_factors(),
        }
    }

    /// The conditional `X → Y`, determined on the support of the source.
    pub fn kernel(&self) -> Stoch {
        conditional(&self.joint, self.split).expect("split was validated")
    }
}

/// `φ ∘ ψ`: the conditional product over the shared middle object with the
/// middle marginalized out.
pub fn coupling_compose(psi: &Coupling, phi: &Coupling) -> Result<Coupling> {
    let w = psi.output_factors();
    if phi.split != w {
        return Err(Error::TypeMismatch(format!(
            "target of {:?} does not match source of {:?}",
            psi.joint.cod(),
            phi.joint.cod()
        )));
    }
    let full = conditional_product(&psi.joint, &phi.joint, w)?;
    let n = full.cod().factor_count();
    let keep: Vec<usize> = (0..psi.split).chain(psi.split + w..n).collect();
    Coupling::new(project(&full, &keep)?, psi.split)
}

/// `f†(x|y) = f(y|x) ψ(x) / (fψ)(y)`, uniform where `(fψ)(y) = 0`.
pub fn bayes_invert(psi: &Stoch, f: &Stoch) -> Result<Stoch> {
    Ok(Coupling::from_kernel(psi, f)?.dagger().kernel())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finprob::{as_equal, ci_state, TripleSplit};
    use crate::matcat::{from_function, random_kernel, tensor, FinSet, Kernel, Prob, Semiring};
    use crate::seeded;

    fn p(n: i64, d: i64) -> Prob {
        Prob::ratio(n, d)
    }

    fn bit() -> FinSet {
        FinSet::range(2)
    }

    #[test]
    fn pointwise_formula() {
        let xw = bit().tensor(&bit());
        let psi = Kernel::state(xw.clone(), vec![p(1, 4), p(1, 8), p(1, 4), p(3, 8)]).unwrap();
        let phi = Kernel::state(xw, vec![p(1, 4), p(1, 4), p(0, 1), p(1, 2)]).unwrap();
        let joint = conditional_product(&psi, &phi, 1).unwrap();
        let psi_w = [p(1, 2), p(1, 2)];
        for x in 0..2 {
            for (w, pw) in psi_w.iter().enumerate() {
                for y in 0..2 {
                    let expected = psi.get(x * 2 + w, 0).mul(phi.get(w * 2 + y, 0)).div(pw);
                    assert_eq!(*joint.get((x * 2 + w) * 2 + y, 0), expected);
                }
            }
        }
        assert!(ci_state(&joint, TripleSplit::SINGLE).unwrap().holds());
        assert_eq!(marginal(&joint, 2).unwrap(), psi);
    }

    #[test]
    fn trivial_shared_object_gives_the_tensor() {
        let mut rng = seeded(8);
        let psi: Stoch = random_kernel(&FinSet::unit(), &bit(), &mut rng);
        let phi: Stoch = random_kernel(&FinSet::unit(), &FinSet::range(3), &mut rng);
        assert_eq!(conditional_product(&psi, &phi, 0).unwrap(), tensor(&psi, &phi));
    }

    #[test]
    fn mismatched_marginals_are_reported() {
        let xw = bit().tensor(&bit());
        let psi = Kernel::state(xw.clone(), vec![p(1, 4); 4]).unwrap();
        let phi = Kernel::state(xw, vec![p(1, 6), p(1, 6), p(1, 3), p(1, 3)]).unwrap();
        let err = conditional_product(&psi, &phi, 1).unwrap_err();
        assert_eq!(
            err,
            Error::MarginalMismatch {
                left: vec!["1/2".into(), "1/2".into()],
                right: vec!["1/3".into(), "2/3".into()],
            }
        );
    }

    #[test]
    fn bayes_rule_arithmetic() {
        let uniform = Kernel::state(bit(), vec![p(1, 2), p(1, 2)]).unwrap();
        let f = Kernel::from_columns(bit(), bit(), vec![vec![p(1, 1), p(0, 1)], vec![p(1, 2), p(1, 2)]]).unwrap();
        let dagger = bayes_invert(&uniform, &f).unwrap();
        assert_eq!(dagger.column_vec(0), vec![p(2, 3), p(1, 3)]);
        assert_eq!(dagger.column_vec(1), vec![p(0, 1), p(1, 1)]);
        assert_eq!(bayes_invert(&uniform, &identity(&bit())).unwrap(), identity(&bit()));
    }

    #[test]
    fn bijections_invert() {
        let three = FinSet::range(3);
        let psi = Kernel::state(three.clone(), vec![p(1, 2), p(1, 2), p(0, 1)]).unwrap();
        let f: Stoch = from_function(three.clone(), three.clone(), &[1, 2, 0]).unwrap();
        let inverse: Stoch = from_function(three.clone(), three, &[2, 0, 1]).unwrap();
        let fpsi = FinStoch::new().compose(&f, &psi).unwrap();
        assert!(as_equal(&fpsi, &bayes_invert(&psi, &f).unwrap(), &inverse).unwrap());
    }

    #[test]
    fn identity_coupling_is_neutral() {
        let mut rng = seeded(9);
        let pi: Stoch = random_kernel(&FinSet::unit(), &bit(), &mut rng);
        let f: Stoch = random_kernel(&bit(), &FinSet::range(3), &mut rng);
        let c = Coupling::from_kernel(&pi, &f).unwrap();
        let id = Coupling::identity(&pi).unwrap();
        assert_eq!(coupling_compose(&id, &c).unwrap(), c);
        let id_y = Coupling::identity(&c.target()).unwrap();
        assert_eq!(coupling_compose(&c, &id_y).unwrap(), c);
    }

    #[test]
    fn independent_couplings_compose_to_products() {
        let mut rng = seeded(10);
        let px: Stoch = random_kernel(&FinSet::unit(), &bit(), &mut rng);
        let py: Stoch = random_kernel(&FinSet::unit(), &FinSet::range(3), &mut rng);
        let pz: Stoch = random_kernel(&FinSet::unit(), &bit(), &mut rng);
        let c1 = Coupling::new(tensor(&px, &py), 1).unwrap();
        let c2 = Coupling::new(tensor(&py, &pz), 1).unwrap();
        assert_eq!(coupling_compose(&c1, &c2).unwrap().joint(), &tensor(&px, &pz));
    }

    #[test]
    fn function_couplings_compose_like_functions() {
        let three = FinSet::range(3);
        let pi = Kernel::state(three.clone(), vec![p(1, 3); 3]).unwrap();
        let f: Stoch = from_function(three.clone(), bit(), &[0, 1, 1]).unwrap();
        let g: Stoch = from_function(bit(), three.clone(), &[2, 0]).unwrap();
        let cat = FinStoch::new();
        let c1 = Coupling::from_kernel(&pi, &f).unwrap();
        let c2 = Coupling::from_kernel(&c1.target(), &g).unwrap();
        let gf = cat.compose(&g, &f).unwrap();
        assert_eq!(coupling_compose(&c1, &c2).unwrap(), Coupling::from_kernel(&pi, &gf).unwrap());
    }
}
