//! Conditional independence in four flavours: of a state given an output
//! (`ci_state`), of two outputs given the input (`ci_proc`), the combined
//! form (`ci_gen`) and the Markov-chain form (`ci_markov`).
//!
//! Verdicts are decided by exact pointwise product identities. Every
//! positive verdict carries witness kernels whose `recompose` reproduces the
//! input exactly.

use super::conditional::{marginal, Fill};
use super::Stoch;
use crate::category::MarkovCategory;
use crate::error::{Error, Result};
use crate::matcat::{identity, project, FinSet, FinStoch, Kernel, Prob, Semiring};

/// Splits an output `X ⊗ W ⊗ Y` at factor positions: `X` is factors
/// `..x_end`, `W` is `x_end..w_end` and `Y` the rest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleSplit {
    pub x_end: usize,
    pub w_end: usize,
}

impl TripleSplit {
    pub const fn new(x_end: usize, w_end: usize) -> Self {
        TripleSplit { x_end, w_end }
    }

    /// One factor each for `X`, `W` and `Y`.
    pub const SINGLE: TripleSplit = TripleSplit::new(1, 2);

    fn objects(self, cod: &FinSet) -> Result<(FinSet, FinSet, FinSet)> {
        let n = cod.factor_count();
        if self.x_end > self.w_end || self.w_end > n {
            return Err(Error::InvalidSplit(format!(
                "split {self:?} does not fit {n} output factors"
            )));
        }
        Ok((
            cod.slice(0..self.x_end)?,
            cod.slice(self.x_end..self.w_end)?,
            cod.slice(self.w_end..n)?,
        ))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CiVerdict<W> {
    Holds(W),
    Fails,
}

impl<W> CiVerdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, CiVerdict::Holds(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            CiVerdict::Holds(w) => Some(w),
            CiVerdict::Fails => None,
        }
    }

    pub fn into_witness(self) -> Option<W> {
        match self {
            CiVerdict::Holds(w) => Some(w),
            CiVerdict::Fails => None,
        }
    }
}

/// `ψ = (f ⊗ id_W ⊗ g) ∘ copy³_W ∘ φ`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateCiWitness {
    pub phi: Stoch,
    pub f: Stoch,
    pub g: Stoch,
}

impl StateCiWitness {
    pub fn recompose(&self) -> Result<Stoch> {
        let cat = FinStoch::new();
        let w = self.phi.cod();
        let outer = cat.tensor_all(&[&self.f, &identity(w), &self.g])?;
        cat.chain(&[&self.phi, &cat.copy3(w), &outer])
    }
}

/// `f = (g ⊗ h) ∘ copy_A`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProcCiWitness {
    pub g: Stoch,
    pub h: Stoch,
}

impl ProcCiWitness {
    pub fn recompose(&self) -> Result<Stoch> {
        FinStoch::new().pair(&self.g, &self.h)
    }
}

/// `f = (h ⊗ id_W ⊗ k) ∘ (id_A ⊗ copy³_W ⊗ id_A) ∘ (id_A ⊗ g ⊗ id_A) ∘ copy³_A`
/// with `g : A → W`, `h : A ⊗ W → X` and `k : W ⊗ A → Y`.
#[derive(Debug, Clone, PartialEq)]
pub struct GenCiWitness {
    pub g: Stoch,
    pub h: Stoch,
    pub k: Stoch,
}

impl GenCiWitness {
    pub fn recompose(&self) -> Result<Stoch> {
        let cat = FinStoch::new();
        let a = self.g.dom();
        let w = self.g.cod();
        let id_a = identity(a);
        let step2 = cat.tensor_all(&[&id_a, &self.g, &id_a])?;
        let step3 = cat.tensor_all(&[&id_a, &cat.copy3(w), &id_a])?;
        let step4 = cat.tensor_all(&[&self.h, &identity(w), &self.k])?;
        cat.chain(&[&cat.copy3(a), &step2, &step3, &step4])
    }
}

/// `f = (id_X ⊗ h) ∘ copy_X ∘ g`.
#[derive(Debug, Clone, PartialEq)]
pub struct MarkovCiWitness {
    pub g: Stoch,
    pub h: Stoch,
}

impl MarkovCiWitness {
    pub fn recompose(&self) -> Result<Stoch> {
        let cat = FinStoch::new();
        let x = self.g.cod();
        cat.compose(&cat.pair(&identity(x), &self.h)?, &self.g)
    }
}

/// Marginals of `f : A → X ⊗ W ⊗ Y` needed by the pointwise identity.
struct Marginals {
    xw: Stoch,
    wy: Stoch,
    w: Stoch,
    sizes: (usize, usize, usize),
}

fn marginals(f: &Stoch, split: TripleSplit) -> Result<Marginals> {
    let (x, w, y) = split.objects(f.cod())?;
    let n = f.cod().factor_count();
    let range = |r: std::ops::Range<usize>| r.collect::<Vec<_>>();
    Ok(Marginals {
        xw: project(f, &range(0..split.w_end))?,
        wy: project(f, &range(split.x_end..n))?,
        w: project(f, &range(split.x_end..split.w_end))?,
        sizes: (x.size(), w.size(), y.size()),
    })
}

/// `f(x,w,y|a) f(w|a) == f(x,w|a) f(w,y|a)` everywhere.
fn product_identity(f: &Stoch, m: &Marginals) -> bool {
    let (nx, nw, ny) = m.sizes;
    (0..f.dom().size()).all(|a| {
        (0..nx).all(|x| {
            (0..nw).all(|w| {
                let fw = m.w.get(w, a);
                let fxw = m.xw.get(x * nw + w, a);
                (0..ny).all(|y| {
                    let lhs = f.get((x * nw + w) * ny + y, a).mul(fw);
                    let rhs = fxw.mul(m.wy.get(w * ny + y, a));
                    lhs == rhs
                })
            })
        })
    })
}

/// `h(x|a,w) = f(x,w|a) / f(w|a)` on `A ⊗ W`, uniform where `f(w|a) = 0`.
fn left_conditional(f: &Stoch, m: &Marginals, split: TripleSplit) -> Result<Stoch> {
    let (x, w, _) = split.objects(f.cod())?;
    let a = f.dom();
    let (nx, nw, _) = m.sizes;
    let fill = Fill::Uniform.column(nx)?;
    let mut columns = Vec::with_capacity(a.size() * nw);
    for ai in 0..a.size() {
        for wi in 0..nw {
            let mass = m.w.get(wi, ai);
            columns.push(if mass.is_zero() {
                fill.clone()
            } else {
                (0..nx).map(|xi| m.xw.get(xi * nw + wi, ai).div(mass)).collect()
            });
        }
    }
    Kernel::from_columns(a.tensor(&w), x, columns)
}

/// `k(y|w,a) = f(w,y|a) / f(w|a)` on `W ⊗ A`, uniform where `f(w|a) = 0`.
fn right_conditional(f: &Stoch, m: &Marginals, split: TripleSplit) -> Result<Stoch> {
    let (_, w, y) = split.objects(f.cod())?;
    let a = f.dom();
    let (_, nw, ny) = m.sizes;
    let fill = Fill::Uniform.column(ny)?;
    let mut columns = Vec::with_capacity(a.size() * nw);
    for wi in 0..nw {
        for ai in 0..a.size() {
            let mass = m.w.get(wi, ai);
            columns.push(if mass.is_zero() {
                fill.clone()
            } else {
                (0..ny).map(|yi| m.wy.get(wi * ny + yi, ai).div(mass)).collect()
            });
        }
    }
    Kernel::from_columns(w.tensor(a), y, columns)
}

/// `f : A → X ⊗ W ⊗ Y` displays `X ⊥ Y | W ‖ A`.
pub fn ci_gen(f: &Stoch, split: TripleSplit) -> Result<CiVerdict<GenCiWitness>> {
    let m = marginals(f, split)?;
    if !product_identity(f, &m) {
        return Ok(CiVerdict::Fails);
    }
    Ok(CiVerdict::Holds(GenCiWitness {
        h: left_conditional(f, &m, split)?,
        k: right_conditional(f, &m, split)?,
        g: m.w,
    }))
}

/// `ψ : I → X ⊗ W ⊗ Y` displays `X ⊥ Y | W`.
pub fn ci_state(psi: &Stoch, split: TripleSplit) -> Result<CiVerdict<StateCiWitness>> {
    if !psi.dom().is_unit() {
        return Err(Error::TypeMismatch(format!(
            "state conditional independence needs a state, got domain {:?}",
            psi.dom()
        )));
    }
    // With A = I the general witness has exactly the state shape.
    Ok(match ci_gen(psi, split)? {
        CiVerdict::Holds(GenCiWitness { g, h, k }) => CiVerdict::Holds(StateCiWitness {
            phi: g,
            f: h,
            g: k,
        }),
        CiVerdict::Fails => CiVerdict::Fails,
    })
}

/// `f : A → X ⊗ Y` displays `X ⊥ Y ‖ A`: `f(x,y|a) = f(x|a) f(y|a)`.
pub fn ci_proc(f: &Stoch, split: usize) -> Result<CiVerdict<ProcCiWitness>> {
    let n = f.cod().factor_count();
    if split > n {
        return Err(Error::InvalidSplit(format!(
            "split {split} does not fit {n} output factors"
        )));
    }
    let g = marginal(f, split)?;
    let h = project(f, &(split..n).collect::<Vec<_>>())?;
    let ny = h.cod().size();
    let holds = (0..f.dom().size()).all(|a| {
        (0..g.cod().size()).all(|x| {
            (0..ny).all(|y| *f.get(x * ny + y, a) == g.get(x, a).mul(h.get(y, a)))
        })
    });
    Ok(if holds {
        CiVerdict::Holds(ProcCiWitness { g, h })
    } else {
        CiVerdict::Fails
    })
}

/// `f : A → X ⊗ Y` displays `A ⊥ Y | X`: `f(x,y|a) / f(x|a)` does not depend
/// on `a` wherever `f(x|a) > 0`.
pub fn ci_markov(f: &Stoch, split: usize) -> Result<CiVerdict<MarkovCiWitness>> {
    let n = f.cod().factor_count();
    if split > n {
        return Err(Error::InvalidSplit(format!(
            "split {split} does not fit {n} output factors"
        )));
    }
    let x = f.cod().slice(0..split)?;
    let y = f.cod().slice(split..n)?;
    let (nx, ny) = (x.size(), y.size());
    let g = marginal(f, split)?;
    let fill = Fill::Uniform.column(ny)?;

    let mut columns: Vec<Vec<Prob>> = Vec::with_capacity(nx);
    for xi in 0..nx {
        let mut common: Option<Vec<Prob>> = None;
        for a in 0..f.dom().size() {
            let mass = g.get(xi, a);
            if mass.is_zero() {
                continue;
            }
            let ratio: Vec<Prob> = (0..ny).map(|yi| f.get(xi * ny + yi, a).div(mass)).collect();
            match &common {
                Some(c) if *c != ratio => return Ok(CiVerdict::Fails),
                Some(_) => {}
                None => common = Some(ratio),
            }
        }
        columns.push(common.unwrap_or_else(|| fill.clone()));
    }
    let h = Kernel::from_columns(x, y, columns)?;
    Ok(CiVerdict::Holds(MarkovCiWitness { g, h }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcat::{copy, random_kernel, tensor};
    use crate::seeded;

    fn p(n: i64, d: i64) -> Prob {
        Prob::ratio(n, d)
    }

    fn bit() -> FinSet {
        FinSet::range(2)
    }

    fn cube() -> FinSet {
        FinSet::product(&[&bit(), &bit(), &bit()])
    }

    #[test]
    fn state_witness_built_by_construction_is_recovered() {
        let mut rng = seeded(1);
        let (x, w, y) = (FinSet::range(2), FinSet::range(3), FinSet::range(2));
        for _ in 0..30 {
            let built = StateCiWitness {
                phi: random_kernel(&FinSet::unit(), &w, &mut rng),
                f: random_kernel(&w, &x, &mut rng),
                g: random_kernel(&w, &y, &mut rng),
            };
            let psi = built.recompose().unwrap();
            let verdict = ci_state(&psi, TripleSplit::SINGLE).unwrap();
            assert_eq!(verdict.witness().unwrap().recompose().unwrap(), psi);
        }
    }

    #[test]
    fn perfectly_correlated_outputs_with_trivial_w() {
        let cod = FinSet::product(&[&bit(), &bit()]);
        let psi = Kernel::state(cod, vec![p(1, 2), p(0, 1), p(0, 1), p(1, 2)]).unwrap();
        // W = I sits between X and Y.
        assert!(!ci_state(&psi, TripleSplit::new(1, 1)).unwrap().holds());
    }

    #[test]
    fn uniform_cube_is_independent() {
        let psi = Kernel::state(cube(), vec![p(1, 8); 8]).unwrap();
        let verdict = ci_state(&psi, TripleSplit::SINGLE).unwrap();
        assert_eq!(verdict.witness().unwrap().recompose().unwrap(), psi);
    }

    #[test]
    fn proc_examples() {
        let mut rng = seeded(2);
        let a = FinSet::range(3);
        let w = ProcCiWitness {
            g: random_kernel(&a, &bit(), &mut rng),
            h: random_kernel(&a, &FinSet::range(3), &mut rng),
        };
        let f = w.recompose().unwrap();
        assert_eq!(ci_proc(&f, 1).unwrap().witness().unwrap().recompose().unwrap(), f);

        assert!(ci_proc(&copy(&bit()), 1).unwrap().holds());

        let diagonal = Kernel::state(bit().tensor(&bit()), vec![p(1, 2), p(0, 1), p(0, 1), p(1, 2)]).unwrap();
        assert!(!ci_proc(&diagonal, 1).unwrap().holds());
    }

    #[test]
    fn gen_examples() {
        let mut rng = seeded(3);
        let (a, x, w, y) = (FinSet::range(2), FinSet::range(2), FinSet::range(2), FinSet::range(3));
        for _ in 0..20 {
            let built = GenCiWitness {
                g: random_kernel(&a, &w, &mut rng),
                h: random_kernel(&a.tensor(&w), &x, &mut rng),
                k: random_kernel(&w.tensor(&a), &y, &mut rng),
            };
            let f = built.recompose().unwrap();
            let verdict = ci_gen(&f, TripleSplit::SINGLE).unwrap();
            assert_eq!(verdict.witness().unwrap().recompose().unwrap(), f);
        }

        // A = I agrees with the state checker.
        for _ in 0..20 {
            let psi: Stoch = random_kernel(&FinSet::unit(), &cube(), &mut rng);
            assert_eq!(
                ci_gen(&psi, TripleSplit::SINGLE).unwrap().holds(),
                ci_state(&psi, TripleSplit::SINGLE).unwrap().holds()
            );
        }

        // Per-input diagonal correlation, W = I.
        let diag = Kernel::from_columns(
            bit(),
            bit().tensor(&bit()),
            vec![vec![p(1, 2), p(0, 1), p(0, 1), p(1, 2)], vec![p(1, 2), p(0, 1), p(0, 1), p(1, 2)]],
        )
        .unwrap();
        assert!(!ci_gen(&diag, TripleSplit::new(1, 1)).unwrap().holds());
    }

    #[test]
    fn markov_examples() {
        let mut rng = seeded(4);
        let a = FinSet::range(3);
        for _ in 0..20 {
            let built = MarkovCiWitness {
                g: random_kernel(&a, &bit(), &mut rng),
                h: random_kernel(&bit(), &FinSet::range(3), &mut rng),
            };
            let f = built.recompose().unwrap();
            assert_eq!(ci_markov(&f, 1).unwrap().witness().unwrap().recompose().unwrap(), f);
        }

        // X trivial, Y-distribution depends on the input.
        let f = Kernel::from_columns(
            bit(),
            FinSet::of(&["*"]).tensor(&bit()),
            vec![vec![p(1, 2), p(1, 2)], vec![p(1, 3), p(2, 3)]],
        )
        .unwrap();
        assert!(!ci_markov(&f, 1).unwrap().holds());

        // (id ⊗ s) ∘ copy ∘ p for deterministic s, with h = s.
        let tosses = FinSet::of(&["HH", "HT", "TH", "TT"]);
        let counts = FinSet::of(&["0", "1", "2"]);
        let s: Stoch = crate::matcat::from_function(tosses.clone(), counts, &[2, 1, 1, 0]).unwrap();
        let model: Stoch = random_kernel(&FinSet::range(2), &tosses, &mut rng);
        let cat = FinStoch::new();
        let paired = cat.compose(&cat.pair(&identity(&tosses), &s).unwrap(), &model).unwrap();
        let verdict = ci_markov(&paired, 1).unwrap();
        let witness = verdict.witness().unwrap();
        assert!(crate::finprob::as_equal(&witness.g, &witness.h, &s).unwrap());
    }

    #[test]
    fn bad_splits_are_errors() {
        let psi = Kernel::state(cube(), vec![p(1, 8); 8]).unwrap();
        assert!(ci_state(&psi, TripleSplit::new(2, 1)).is_err());
        assert!(ci_gen(&psi, TripleSplit::new(1, 4)).is_err());
        assert!(ci_proc(&psi, 4).is_err());
        let f = tensor(&identity(&bit()), &psi);
        assert!(ci_state(&f, TripleSplit::SINGLE).is_err());
    }
}
