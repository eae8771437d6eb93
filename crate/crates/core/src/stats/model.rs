use crate::category::MarkovCategory;
use crate::error::{Error, Result};
use crate::finprob::Stoch;
use crate::matcat::{from_function, FinSet, FinStoch};

/// A parametrized family `p : Θ → X`.
#[derive(Debug, Clone, PartialEq)]
pub struct StatModel {
    p: Stoch,
}

impl StatModel {
    pub fn new(p: Stoch) -> Self {
        StatModel { p }
    }

    pub fn kernel(&self) -> &Stoch {
        &self.p
    }

    pub fn parameters(&self) -> &FinSet {
        self.p.dom()
    }

    pub fn sample_space(&self) -> &FinSet {
        self.p.cod()
    }

    /// The pushforward `s ∘ p`.
    pub fn push(&self, s: &Statistic) -> Result<Stoch> {
        FinStoch::new().compose(s.kernel(), &self.p)
    }

    pub(crate) fn check_statistic(&self, s: &Statistic) -> Result<()> {
        if s.kernel().dom() != self.p.cod() {
            return Err(Error::TypeMismatch(format!(
                "statistic on {:?} applied to a model on {:?}",
                s.kernel().dom(),
                self.p.cod()
            )));
        }
        Ok(())
    }
}

/// A deterministic kernel `s : X → V`.
#[derive(Debug, Clone, PartialEq)]
pub struct Statistic {
    s: Stoch,
    images: Vec<usize>,
}

impl Statistic {
    pub fn new(s: Stoch) -> Result<Self> {
        let images = s.as_function().ok_or_else(|| {
            Error::NotDeterministic(format!("statistic {:?} → {:?}", s.dom(), s.cod()))
        })?;
        Ok(Statistic { s, images })
    }

    pub fn from_images(dom: FinSet, cod: FinSet, images: &[usize]) -> Result<Self> {
        Statistic::new(from_function(dom, cod, images)?)
    }

    pub fn identity(x: &FinSet) -> Self {
        Statistic::new(crate::matcat::identity(x)).expect("identities are deterministic")
    }

    pub fn kernel(&self) -> &Stoch {
        &self.s
    }

    pub fn codomain(&self) -> &FinSet {
        self.s.cod()
    }

    /// `s(x)` as an index into the codomain.
    pub fn image(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::matcat::{Kernel, Prob};

    pub fn tosses() -> FinSet {
        FinSet::of(&["HH", "HT", "TH", "TT"])
    }

    /// Two coins with heads probabilities 1/2 and 1/3, tossed twice.
    pub fn two_coin() -> StatModel {
        let p = |n, d| Prob::ratio(n, d);
        StatModel::new(
            Kernel::from_columns(
                FinSet::of(&["A", "B"]),
                tosses(),
                vec![
                    vec![p(1, 4), p(1, 4), p(1, 4), p(1, 4)],
                    vec![p(1, 9), p(2, 9), p(2, 9), p(4, 9)],
                ],
            )
            .unwrap(),
        )
    }

    pub fn heads() -> Statistic {
        Statistic::from_images(tosses(), FinSet::of(&["0", "1", "2"]), &[2, 1, 1, 0]).unwrap()
    }
}
