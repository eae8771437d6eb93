//! Finite windows of discrete-time stochastic processes.
//!
//! A [`ChainDiagram`] is a sequence of finite sets `X_n` for `n` in a window
//! `[start, end]` with deterministic connectors `d_n : X_{n+1} → X_n`
//! (typically "forget the last step"). A [`DiagramMorphism`] is a family of
//! kernels `f_n : A_n → X_n` commuting with the connectors. Chains over a
//! fixed window form a Markov category with everything defined pointwise.

use rand::Rng;

use crate::category::{
    check_deterministic, is_deterministic, Counterexample, LawReport, MarkovCategory,
    MorphismSampler, SeededRng,
};
use crate::error::{Error, Result};
use crate::finprob::Stoch;
use crate::matcat::{self, from_function, random_kernel, FinSet, FinStoch};

#[derive(Debug, Clone, PartialEq)]
pub struct ChainDiagram {
    start: i64,
    objects: Vec<FinSet>,
    /// `connectors[i] : objects[i + 1] → objects[i]`.
    connectors: Vec<Stoch>,
}

impl ChainDiagram {
    /// Checks that the connectors have the right types; determinism is left
    /// to [`validate_diagram`].
    pub fn new(start: i64, objects: Vec<FinSet>, connectors: Vec<Stoch>) -> Result<Self> {
        if objects.is_empty() {
            return Err(Error::InvalidObject("a chain needs at least one object".into()));
        }
        if connectors.len() + 1 != objects.len() {
            return Err(Error::DimensionMismatch {
                expected: objects.len() - 1,
                found: connectors.len(),
            });
        }
        for (i, d) in connectors.iter().enumerate() {
            if d.dom() != &objects[i + 1] || d.cod() != &objects[i] {
                return Err(Error::TypeMismatch(format!(
                    "connector {} maps {:?} → {:?}, expected {:?} → {:?}",
                    start + i as i64,
                    d.dom(),
                    d.cod(),
                    objects[i + 1],
                    objects[i]
                )));
            }
        }
        Ok(ChainDiagram {
            start,
            objects,
            connectors,
        })
    }

    /// `X` at every index with identity connectors.
    pub fn constant(start: i64, len: usize, x: &FinSet) -> Self {
        assert!(len > 0, "a chain needs at least one object");
        ChainDiagram {
            start,
            objects: vec![x.clone(); len],
            connectors: vec![matcat::identity(x); len - 1],
        }
    }

    /// `X_n = alphabet^n` for `n ∈ [start, end]` (`start ≥ 0`), with connectors
    /// dropping the last symbol.
    pub fn sequences(alphabet: &FinSet, start: usize, end: usize) -> Result<Self> {
        if start > end {
            return Err(Error::InvalidObject(format!("empty window [{start}, {end}]")));
        }
        let power = |n: usize| FinSet::product(&vec![alphabet; n]);
        let objects: Vec<FinSet> = (start..=end).map(power).collect();
        let k = alphabet.size();
        let connectors = (start..end)
            .map(|n| {
                let images: Vec<usize> = (0..power(n + 1).size()).map(|i| i / k).collect();
                from_function(power(n + 1), power(n), &images)
            })
            .collect::<Result<_>>()?;
        ChainDiagram::new(start as i64, objects, connectors)
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn end(&self) -> i64 {
        self.start + self.objects.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn objects(&self) -> &[FinSet] {
        &self.objects
    }

    pub fn connectors(&self) -> &[Stoch] {
        &self.connectors
    }

    fn same_window(&self, other: &ChainDiagram) -> Result<()> {
        if self.start != other.start || self.len() != other.len() {
            return Err(Error::TypeMismatch(format!(
                "windows differ: [{}, {}] vs [{}, {}]",
                self.start,
                self.end(),
                other.start,
                other.end()
            )));
        }
        Ok(())
    }
}

/// A family `f_n : A_n → X_n` between two chains over the same window.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagramMorphism {
    source: ChainDiagram,
    target: ChainDiagram,
    components: Vec<Stoch>,
}

impl DiagramMorphism {
    /// Checks windows and component types; naturality is left to
    /// [`validate_transformation`].
    pub fn new(source: ChainDiagram, target: ChainDiagram, components: Vec<Stoch>) -> Result<Self> {
        source.same_window(&target)?;
        if components.len() != source.len() {
            return Err(Error::DimensionMismatch {
                expected: source.len(),
                found: components.len(),
            });
        }
        for (i, f) in components.iter().enumerate() {
            if f.dom() != &source.objects[i] || f.cod() != &target.objects[i] {
                return Err(Error::TypeMismatch(format!(
                    "component {} maps {:?} → {:?}, expected {:?} → {:?}",
                    source.start + i as i64,
                    f.dom(),
                    f.cod(),
                    source.objects[i],
                    target.objects[i]
                )));
            }
        }
        Ok(DiagramMorphism {
            source,
            target,
            components,
        })
    }

    pub fn source(&self) -> &ChainDiagram {
        &self.source
    }

    pub fn target(&self) -> &ChainDiagram {
        &self.target
    }

    pub fn components(&self) -> &[Stoch] {
        &self.components
    }
}

/// Every connector is deterministic.
pub fn validate_diagram(d: &ChainDiagram) -> LawReport<Stoch> {
    const LAW: &str = "chain diagram";
    let cat = FinStoch::new();
    for (i, connector) in d.connectors.iter().enumerate() {
        let report = check_deterministic(&cat, connector);
        if !report.passed() {
            return LawReport {
                law: LAW.into(),
                ..report
            }
            .with_note(format!("connector {} is not deterministic", d.start + i as i64));
        }
    }
    LawReport::pass(LAW)
}

/// Every naturality square `d_n ∘ f_{n+1} = f_n ∘ e_n` commutes exactly.
pub fn validate_transformation(f: &DiagramMorphism) -> LawReport<Stoch> {
    const LAW: &str = "naturality";
    for i in 0..f.source.connectors.len() {
        let lhs = matcat::compose(&f.target.connectors[i], &f.components[i + 1])
            .expect("types were checked on construction");
        let rhs = matcat::compose(&f.components[i], &f.source.connectors[i])
            .expect("types were checked on construction");
        if lhs != rhs {
            return LawReport::fail(
                LAW,
                Counterexample {
                    inputs: vec![f.components[i].clone(), f.components[i + 1].clone()],
                    lhs,
                    rhs,
                },
            )
            .with_note(format!("square at index {}", f.source.start + i as i64));
        }
    }
    LawReport::pass(LAW)
}

/// `s_n : X_n → T_n` is a statistic in time: deterministic components
/// commuting with both chains' connectors.
pub fn statistic_in_time(x: &ChainDiagram, t: &ChainDiagram, s: Vec<Stoch>) -> Result<LawReport<Stoch>> {
    const LAW: &str = "statistic in time";
    let f = DiagramMorphism::new(x.clone(), t.clone(), s)?;
    let cat = FinStoch::new();
    for (i, component) in f.components.iter().enumerate() {
        if !is_deterministic(&cat, component) {
            let report = check_deterministic(&cat, component);
            return Ok(LawReport {
                law: LAW.into(),
                ..report
            }
            .with_note(format!("component {} is not deterministic", x.start + i as i64)));
        }
    }
    let report = validate_transformation(&f);
    Ok(LawReport {
        law: LAW.into(),
        ..report
    })
}

/// Pointwise tensor of two chains over the same window.
pub fn pointwise_tensor(a: &ChainDiagram, b: &ChainDiagram) -> Result<ChainDiagram> {
    a.same_window(b)?;
    Ok(ChainDiagram {
        start: a.start,
        objects: a.objects.iter().zip(&b.objects).map(|(x, y)| x.tensor(y)).collect(),
        connectors: a
            .connectors
            .iter()
            .zip(&b.connectors)
            .map(|(f, g)| matcat::tensor(f, g))
            .collect(),
    })
}

/// Pointwise tensor of two transformations.
pub fn pointwise_tensor_morphisms(f: &DiagramMorphism, g: &DiagramMorphism) -> Result<DiagramMorphism> {
    Ok(DiagramMorphism {
        source: pointwise_tensor(&f.source, &g.source)?,
        target: pointwise_tensor(&f.target, &g.target)?,
        components: f
            .components
            .iter()
            .zip(&g.components)
            .map(|(a, b)| matcat::tensor(a, b))
            .collect(),
    })
}

/// Pointwise `g ∘ f`.
pub fn pointwise_compose(g: &DiagramMorphism, f: &DiagramMorphism) -> Result<DiagramMorphism> {
    if f.target != g.source {
        return Err(Error::TypeMismatch("pointwise composition needs f.target = g.source".into()));
    }
    let components = g
        .components
        .iter()
        .zip(&f.components)
        .map(|(b, a)| matcat::compose(b, a))
        .collect::<Result<_>>()?;
    Ok(DiagramMorphism {
        source: f.source.clone(),
        target: g.target.clone(),
        components,
    })
}

fn pointwise_structure(
    source: ChainDiagram,
    target: ChainDiagram,
    component: impl Fn(usize) -> Stoch,
) -> DiagramMorphism {
    let components = (0..source.len()).map(component).collect();
    DiagramMorphism {
        source,
        target,
        components,
    }
}

/// `copy : X → X ⊗ X` at every index.
pub fn pointwise_copy(d: &ChainDiagram) -> DiagramMorphism {
    let square = pointwise_tensor(d, d).expect("same window");
    pointwise_structure(d.clone(), square, |i| matcat::copy(&d.objects[i]))
}

/// Chains over the window `[start, start + len - 1]` as a Markov category.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainCategory {
    pub start: i64,
    pub len: usize,
}

impl ChainCategory {
    pub fn new(start: i64, len: usize) -> Self {
        assert!(len > 0, "a window holds at least one index");
        ChainCategory { start, len }
    }
}

impl MarkovCategory for ChainCategory {
    type Object = ChainDiagram;
    type Morphism = DiagramMorphism;

    fn unit(&self) -> ChainDiagram {
        ChainDiagram::constant(self.start, self.len, &FinSet::unit())
    }
    fn tensor_objects(&self, a: &ChainDiagram, b: &ChainDiagram) -> ChainDiagram {
        pointwise_tensor(a, b).expect("objects of one chain category share the window")
    }
    fn domain(&self, f: &DiagramMorphism) -> ChainDiagram {
        f.source.clone()
    }
    fn codomain(&self, f: &DiagramMorphism) -> ChainDiagram {
        f.target.clone()
    }
    fn identity(&self, x: &ChainDiagram) -> DiagramMorphism {
        pointwise_structure(x.clone(), x.clone(), |i| matcat::identity(&x.objects[i]))
    }
    fn copy(&self, x: &ChainDiagram) -> DiagramMorphism {
        pointwise_copy(x)
    }
    fn discard(&self, x: &ChainDiagram) -> DiagramMorphism {
        pointwise_structure(x.clone(), self.unit(), |i| matcat::discard(&x.objects[i]))
    }
    fn swap(&self, x: &ChainDiagram, y: &ChainDiagram) -> DiagramMorphism {
        pointwise_structure(self.tensor_objects(x, y), self.tensor_objects(y, x), |i| {
            matcat::swap(&x.objects[i], &y.objects[i])
        })
    }
    fn compose(&self, g: &DiagramMorphism, f: &DiagramMorphism) -> Result<DiagramMorphism> {
        pointwise_compose(g, f)
    }
    fn tensor(&self, f: &DiagramMorphism, g: &DiagramMorphism) -> Result<DiagramMorphism> {
        pointwise_tensor_morphisms(f, g)
    }
    fn equal(&self, f: &DiagramMorphism, g: &DiagramMorphism) -> bool {
        f == g
    }
}

/// Composite of connectors from index `from` down to index `to` (`to ≤ from`).
fn connector_path(d: &ChainDiagram, from: usize, to: usize) -> Stoch {
    (to..from)
        .rev()
        .fold(matcat::identity(&d.objects[from]), |acc, i| {
            matcat::compose(&d.connectors[i], &acc).expect("connectors chain")
        })
}

/// Samples natural transformations `f_n = D_n ∘ k ∘ E_n` where `k` maps the
/// first source object to the last target object at random, `E_n` runs the
/// source connectors down to the first index and `D_n` the target
/// connectors down from the last.
#[derive(Debug, Clone, Copy, Default)]
pub struct NaturalSampler {
    pub inner: matcat::KernelSampler,
}

impl MorphismSampler<ChainCategory> for NaturalSampler {
    fn sample(
        &self,
        _cat: &ChainCategory,
        dom: &ChainDiagram,
        cod: &ChainDiagram,
        rng: &mut SeededRng,
    ) -> DiagramMorphism {
        let last = cod.len() - 1;
        let k: Stoch = if rng.random_bool(self.inner.deterministic_share) {
            matcat::random_function(&dom.objects[0], &cod.objects[last], rng)
        } else {
            random_kernel(&dom.objects[0], &cod.objects[last], rng)
        };
        let components = (0..dom.len())
            .map(|n| {
                let e = connector_path(dom, n, 0);
                let d = connector_path(cod, last, n);
                matcat::compose(&d, &matcat::compose(&k, &e).expect("types chain"))
                    .expect("types chain")
            })
            .collect();
        DiagramMorphism::new(dom.clone(), cod.clone(), components).expect("types chain")
    }
}
