//! The backend-agnostic Markov category contract and the law checkers that
//! run against it.
//!
//! A backend supplies objects, morphisms, the symmetric monoidal structure
//! and the comonoid maps `copy`/`discard`. Everything else in this module is
//! written once against [`MarkovCategory`] and reused by every backend: the
//! matrix semirings, the Gaussian category and the chain-diagram category.
//!
//! All backends are strict: tensoring with the unit and reassociating are
//! identities on the chosen encodings, so no unitor or associator morphisms
//! appear anywhere.

use std::fmt::{self, Debug};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// The RNG used by every seeded generator in the crate.
pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub trait MarkovCategory {
    type Object: Clone + Debug + PartialEq;
    type Morphism: Clone + Debug;

    fn unit(&self) -> Self::Object;
    fn tensor_objects(&self, a: &Self::Object, b: &Self::Object) -> Self::Object;
    fn domain(&self, f: &Self::Morphism) -> Self::Object;
    fn codomain(&self, f: &Self::Morphism) -> Self::Object;

    fn identity(&self, x: &Self::Object) -> Self::Morphism;
    fn copy(&self, x: &Self::Object) -> Self::Morphism;
    fn discard(&self, x: &Self::Object) -> Self::Morphism;
    fn swap(&self, x: &Self::Object, y: &Self::Object) -> Self::Morphism;

    /// `g ∘ f`.
    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism>;
    fn tensor(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism>;

    /// Backend equality: exact for the matrix semirings, toleranced for Gauss.
    fn equal(&self, f: &Self::Morphism, g: &Self::Morphism) -> bool;

    /// Composes in diagrammatic order: `steps[0]` runs first.
    fn chain(&self, steps: &[&Self::Morphism]) -> Result<Self::Morphism> {
        let (first, rest) = steps
            .split_first()
            .ok_or_else(|| Error::TypeMismatch("empty composition chain".into()))?;
        rest.iter()
            .try_fold((*first).clone(), |acc, g| self.compose(g, &acc))
    }

    fn tensor_all(&self, fs: &[&Self::Morphism]) -> Result<Self::Morphism> {
        let (first, rest) = fs
            .split_first()
            .ok_or_else(|| Error::TypeMismatch("empty tensor product".into()))?;
        rest.iter()
            .try_fold((*first).clone(), |acc, g| self.tensor(&acc, g))
    }

    /// `(f ⊗ g) ∘ copy`, the pairing of two morphisms with a common domain.
    fn pair(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism> {
        let a = self.domain(f);
        if a != self.domain(g) {
            return Err(Error::TypeMismatch(format!(
                "pairing needs a shared domain, got {:?} and {:?}",
                a,
                self.domain(g)
            )));
        }
        self.compose(&self.tensor(f, g)?, &self.copy(&a))
    }

    /// Three-fold copy `(copy ⊗ id) ∘ copy`.
    fn copy3(&self, x: &Self::Object) -> Self::Morphism {
        let left = self
            .tensor(&self.copy(x), &self.identity(x))
            .expect("structure maps always tensor");
        self.compose(&left, &self.copy(x))
            .expect("structure maps always compose")
    }
}

/// Rebuilds `f : A → X ⊗ Y` from its marginal `f_X : A → X` and a conditional
/// `cond : X ⊗ A → Y` as `(id_X ⊗ cond) ∘ (copy_X ⊗ id_A) ∘ (f_X ⊗ id_A) ∘ copy_A`.
pub fn recompose_from_conditional<C: MarkovCategory>(
    cat: &C,
    marginal: &C::Morphism,
    cond: &C::Morphism,
) -> Result<C::Morphism> {
    let a = cat.domain(marginal);
    let x = cat.codomain(marginal);
    let expected = cat.tensor_objects(&x, &a);
    if cat.domain(cond) != expected {
        return Err(Error::TypeMismatch(format!(
            "conditional domain {:?} is not X ⊗ A = {:?}",
            cat.domain(cond),
            expected
        )));
    }
    let step1 = cat.copy(&a);
    let step2 = cat.tensor(marginal, &cat.identity(&a))?;
    let step3 = cat.tensor(&cat.copy(&x), &cat.identity(&a))?;
    let step4 = cat.tensor(&cat.identity(&x), cond)?;
    cat.chain(&[&step1, &step2, &step3, &step4])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    /// A conditional law whose premise did not hold.
    Vacuous,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Vacuous => "vacuous",
        })
    }
}

/// The morphisms a failed law was instantiated at, and the two composites
/// that should have agreed.
#[derive(Debug, Clone)]
pub struct Counterexample<M> {
    pub inputs: Vec<M>,
    pub lhs: M,
    pub rhs: M,
}

#[derive(Debug, Clone)]
pub struct LawReport<M> {
    pub law: String,
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample<M>>,
    /// Why a check was vacuous, or which sub-law failed.
    pub note: Option<String>,
}

impl<M> LawReport<M> {
    pub fn pass(law: impl Into<String>) -> Self {
        LawReport {
            law: law.into(),
            verdict: Verdict::Pass,
            counterexample: None,
            note: None,
        }
    }

    pub fn vacuous(law: impl Into<String>, reason: impl Into<String>) -> Self {
        LawReport {
            law: law.into(),
            verdict: Verdict::Vacuous,
            counterexample: None,
            note: Some(reason.into()),
        }
    }

    pub fn fail(law: impl Into<String>, cx: Counterexample<M>) -> Self {
        LawReport {
            law: law.into(),
            verdict: Verdict::Fail,
            counterexample: Some(cx),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn map<N>(self, mut f: impl FnMut(M) -> N) -> LawReport<N> {
        LawReport {
            law: self.law,
            verdict: self.verdict,
            counterexample: self.counterexample.map(|cx| Counterexample {
                inputs: cx.inputs.into_iter().map(&mut f).collect(),
                lhs: f(cx.lhs),
                rhs: f(cx.rhs),
            }),
            note: self.note,
        }
    }
}

/// Produces random morphisms between given objects of a backend.
pub trait MorphismSampler<C: MarkovCategory> {
    fn sample(&self, cat: &C, dom: &C::Object, cod: &C::Object, rng: &mut SeededRng)
        -> C::Morphism;
}

/// `copy ∘ f == (f ⊗ f) ∘ copy`.
pub fn is_deterministic<C: MarkovCategory>(cat: &C, f: &C::Morphism) -> bool {
    let (lhs, rhs) = determinism_sides(cat, f);
    cat.equal(&lhs, &rhs)
}

fn determinism_sides<C: MarkovCategory>(cat: &C, f: &C::Morphism) -> (C::Morphism, C::Morphism) {
    let lhs = cat
        .compose(&cat.copy(&cat.codomain(f)), f)
        .expect("copy composes after any morphism");
    let rhs = cat.pair(f, f).expect("pairing f with itself is well typed");
    (lhs, rhs)
}

/// Determinism as a law report, carrying both sides on failure.
pub fn check_deterministic<C: MarkovCategory>(cat: &C, f: &C::Morphism) -> LawReport<C::Morphism> {
    let (lhs, rhs) = determinism_sides(cat, f);
    if cat.equal(&lhs, &rhs) {
        LawReport::pass("deterministic")
    } else {
        LawReport::fail(
            "deterministic",
            Counterexample {
                inputs: vec![f.clone()],
                lhs,
                rhs,
            },
        )
    }
}

/// Positivity at one instance `f : X → Y`, `g : Y → Z`: if `g ∘ f` is
/// deterministic then `(g ⊗ id_Y) ∘ copy_Y ∘ f == (g∘f ⊗ f) ∘ copy_X`.
pub fn check_positivity_instance<C: MarkovCategory>(
    cat: &C,
    f: &C::Morphism,
    g: &C::Morphism,
) -> Result<LawReport<C::Morphism>> {
    const LAW: &str = "positivity";
    let gf = cat.compose(g, f)?;
    if !is_deterministic(cat, &gf) {
        return Ok(LawReport::vacuous(LAW, "g ∘ f is not deterministic"));
    }
    let y = cat.codomain(f);
    let lhs = cat.chain(&[
        f,
        &cat.copy(&y),
        &cat.tensor(g, &cat.identity(&y))?,
    ])?;
    let rhs = cat.pair(&gf, f)?;
    Ok(if cat.equal(&lhs, &rhs) {
        LawReport::pass(LAW)
    } else {
        LawReport::fail(
            LAW,
            Counterexample {
                inputs: vec![f.clone(), g.clone()],
                lhs,
                rhs,
            },
        )
    })
}

/// Causality at one instance `f : A → X`, `g : X → Y`, `h1, h2 : Y → Z`.
///
/// Premise: `(id_Y ⊗ h_i) ∘ copy_Y ∘ g ∘ f` agree for `i = 1, 2`.
/// Conclusion: `(id_X ⊗ ((id_Y ⊗ h_i) ∘ copy_Y ∘ g)) ∘ copy_X ∘ f` agree.
pub fn check_causality_instance<C: MarkovCategory>(
    cat: &C,
    f: &C::Morphism,
    g: &C::Morphism,
    h1: &C::Morphism,
    h2: &C::Morphism,
) -> Result<LawReport<C::Morphism>> {
    const LAW: &str = "causality";
    if cat.codomain(f) != cat.domain(g)
        || cat.codomain(g) != cat.domain(h1)
        || cat.domain(h1) != cat.domain(h2)
        || cat.codomain(h1) != cat.codomain(h2)
    {
        return Err(Error::TypeMismatch(
            "causality needs f : A → X, g : X → Y, h1, h2 : Y → Z".into(),
        ));
    }
    let x = cat.codomain(f);
    let y = cat.codomain(g);
    let late = |h: &C::Morphism| -> Result<C::Morphism> {
        // (id_Y ⊗ h) ∘ copy_Y ∘ g : X → Y ⊗ Z
        cat.chain(&[g, &cat.copy(&y), &cat.tensor(&cat.identity(&y), h)?])
    };
    let late1 = late(h1)?;
    let late2 = late(h2)?;
    let premise1 = cat.compose(&late1, f)?;
    let premise2 = cat.compose(&late2, f)?;
    if !cat.equal(&premise1, &premise2) {
        return Ok(LawReport::vacuous(LAW, "premise equality does not hold"));
    }
    let full = |late: &C::Morphism| -> Result<C::Morphism> {
        cat.chain(&[f, &cat.copy(&x), &cat.tensor(&cat.identity(&x), late)?])
    };
    let lhs = full(&late1)?;
    let rhs = full(&late2)?;
    Ok(if cat.equal(&lhs, &rhs) {
        LawReport::pass(LAW)
    } else {
        LawReport::fail(
            LAW,
            Counterexample {
                inputs: vec![f.clone(), g.clone(), h1.clone(), h2.clone()],
                lhs,
                rhs,
            },
        )
    })
}

/// Checks the commutative comonoid equations on every object (and the unit),
/// their compatibility with the tensor product, symmetry of the swap, and
/// naturality of `discard` and `swap` against `samples` random morphisms per
/// object.
pub fn check_comonoid_laws<C, S>(
    cat: &C,
    objects: &[C::Object],
    sampler: &S,
    samples: usize,
    seed: u64,
) -> Result<LawReport<C::Morphism>>
where
    C: MarkovCategory,
    S: MorphismSampler<C>,
{
    const LAW: &str = "comonoid";
    let mut rng = seeded(seed);
    let unit = cat.unit();

    let check = |name: &str, inputs: Vec<C::Morphism>, lhs: C::Morphism, rhs: C::Morphism| {
        if cat.equal(&lhs, &rhs) {
            None
        } else {
            Some(LawReport::fail(LAW, Counterexample { inputs, lhs, rhs }).with_note(name))
        }
    };

    // The unit's comonoid structure is trivial.
    let id_unit = cat.identity(&unit);
    if let Some(r) = check("unit copy", vec![], cat.copy(&unit), id_unit.clone()) {
        return Ok(r);
    }
    if let Some(r) = check("unit discard", vec![], cat.discard(&unit), id_unit) {
        return Ok(r);
    }

    let mut all: Vec<C::Object> = objects.to_vec();
    all.push(unit.clone());

    for x in &all {
        let id = cat.identity(x);
        let copy = cat.copy(x);
        let del = cat.discard(x);

        let lhs = cat.compose(&cat.tensor(&copy, &id)?, &copy)?;
        let rhs = cat.compose(&cat.tensor(&id, &copy)?, &copy)?;
        if let Some(r) = check("coassociativity", vec![], lhs, rhs) {
            return Ok(r);
        }

        let left = cat.compose(&cat.tensor(&del, &id)?, &copy)?;
        if let Some(r) = check("left counitality", vec![], left, id.clone()) {
            return Ok(r);
        }
        let right = cat.compose(&cat.tensor(&id, &del)?, &copy)?;
        if let Some(r) = check("right counitality", vec![], right, id.clone()) {
            return Ok(r);
        }

        let swapped = cat.compose(&cat.swap(x, x), &copy)?;
        if let Some(r) = check("cocommutativity", vec![], swapped, copy.clone()) {
            return Ok(r);
        }

        for y in &all {
            let xy = cat.tensor_objects(x, y);
            // copy_{X⊗Y} = (id_X ⊗ swap_{X,Y} ⊗ id_Y) ∘ (copy_X ⊗ copy_Y)
            let middle = cat.tensor_all(&[&cat.identity(x), &cat.swap(x, y), &cat.identity(y)])?;
            let lhs = cat.compose(&middle, &cat.tensor(&copy, &cat.copy(y))?)?;
            if let Some(r) = check("copy multiplicativity", vec![], lhs, cat.copy(&xy)) {
                return Ok(r);
            }
            let lhs = cat.tensor(&del, &cat.discard(y))?;
            if let Some(r) = check("discard multiplicativity", vec![], lhs, cat.discard(&xy)) {
                return Ok(r);
            }
            let twice = cat.compose(&cat.swap(y, x), &cat.swap(x, y))?;
            if let Some(r) = check("swap involution", vec![], twice, cat.identity(&xy)) {
                return Ok(r);
            }
        }

        for _ in 0..samples {
            let cod = &all[rng.random_range(0..all.len())];
            let f = sampler.sample(cat, x, cod, &mut rng);
            let lhs = cat.compose(&cat.discard(cod), &f)?;
            if let Some(r) = check("discard naturality", vec![f.clone()], lhs, del.clone()) {
                return Ok(r);
            }

            let other_dom = &all[rng.random_range(0..all.len())];
            let other_cod = &all[rng.random_range(0..all.len())];
            let g = sampler.sample(cat, other_dom, other_cod, &mut rng);
            // swap ∘ (f ⊗ g) = (g ⊗ f) ∘ swap
            let lhs = cat.compose(&cat.swap(cod, other_cod), &cat.tensor(&f, &g)?)?;
            let rhs = cat.compose(&cat.tensor(&g, &f)?, &cat.swap(x, other_dom))?;
            if let Some(r) = check("swap naturality", vec![f, g], lhs, rhs) {
                return Ok(r);
            }
        }
    }
    Ok(LawReport::pass(LAW))
}
