use std::collections::HashSet;
use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use crate::error::{Error, Result};

/// One tensor factor: a nonempty list of distinct labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Factor(Arc<[String]>);

impl Factor {
    /// Labels must be nonempty and distinct.
    pub fn new<I, L>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = L>,
        L: Into<String>,
    {
        let set = FinSet::new(labels)?;
        Ok(set.factors.into_iter().next().expect("one factor"))
    }

    pub fn labels(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.0.iter().position(|l| l == label)
    }
}

impl fmt::Debug for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// A finite labeled set, stored as an ordered list of tensor factors.
///
/// The monoidal unit is the empty factor list (one element). Products are
/// flattened, so the tensor product is strictly associative and unital.
/// Elements of a product are enumerated first-factor-major: the last factor
/// varies fastest.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinSet {
    factors: Vec<Factor>,
}

impl FinSet {
    /// A single-factor set. Labels must be nonempty and distinct.
    pub fn new<I, L>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = L>,
        L: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidObject("a factor needs at least one label".into()));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidObject(format!("duplicate label {l:?}")));
            }
        }
        Ok(FinSet {
            factors: vec![Factor(labels.into())],
        })
    }

    /// Panicking shorthand for literal label lists.
    pub fn of(labels: &[&str]) -> Self {
        FinSet::new(labels.iter().copied()).expect("invalid literal label list")
    }

    /// `{0, 1, ..., n-1}`.
    pub fn range(n: usize) -> Self {
        FinSet::new((0..n).map(|i| i.to_string())).expect("range labels are distinct")
    }

    pub fn unit() -> Self {
        FinSet { factors: Vec::new() }
    }

    pub fn product(parts: &[&FinSet]) -> Self {
        FinSet {
            factors: parts.iter().flat_map(|p| p.factors.iter().cloned()).collect(),
        }
    }

    pub fn tensor(&self, other: &FinSet) -> Self {
        FinSet::product(&[self, other])
    }

    pub fn from_factors(factors: Vec<Factor>) -> Self {
        FinSet { factors }
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn size(&self) -> usize {
        self.factors.iter().map(Factor::len).product()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    /// The sub-product made of the factors in `range`.
    pub fn slice(&self, range: Range<usize>) -> Result<FinSet> {
        if range.start > range.end || range.end > self.factors.len() {
            return Err(Error::InvalidSplit(format!(
                "factor range {range:?} out of bounds for {} factors",
                self.factors.len()
            )));
        }
        Ok(FinSet {
            factors: self.factors[range].to_vec(),
        })
    }

    /// The sub-product of the listed factors, in the listed order.
    pub fn select(&self, indices: &[usize]) -> Result<FinSet> {
        let factors = indices
            .iter()
            .map(|&i| {
                self.factors.get(i).cloned().ok_or_else(|| {
                    Error::InvalidSplit(format!("factor index {i} out of bounds"))
                })
            })
            .collect::<Result<_>>()?;
        Ok(FinSet { factors })
    }

    /// Per-factor coordinates of element `index`.
    pub fn coords(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, factor) in out.iter_mut().zip(&self.factors).rev() {
            *slot = index % factor.len();
            index /= factor.len();
        }
        out
    }

    pub fn index_of_coords(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.factors.len());
        coords
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, factor)| acc * factor.len() + c)
    }

    /// Index of the element with the given per-factor labels.
    pub fn index_of(&self, labels: &[&str]) -> Result<usize> {
        if labels.len() != self.factors.len() {
            return Err(Error::InvalidObject(format!(
                "expected {} labels, got {}",
                self.factors.len(),
                labels.len()
            )));
        }
        let coords = labels
            .iter()
            .zip(&self.factors)
            .map(|(l, f)| f.position(l).ok_or_else(|| Error::UnknownLabel((*l).to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.index_of_coords(&coords))
    }

    pub fn element_labels(&self, index: usize) -> Vec<&str> {
        self.coords(index)
            .into_iter()
            .zip(&self.factors)
            .map(|(c, f)| f.labels()[c].as_str())
            .collect()
    }

    /// Human-readable element name; tuples are comma-joined.
    pub fn label(&self, index: usize) -> String {
        match self.factors.len() {
            0 => "()".into(),
            1 => self.factors[0].labels()[index].clone(),
            _ => format!("({})", self.element_labels(index).join(",")),
        }
    }
}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("I");
        }
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊗ ")?;
            }
            write!(f, "{factor:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_and_empty_labels() {
        assert!(FinSet::new(["a", "a"]).is_err());
        assert!(FinSet::new(Vec::<String>::new()).is_err());
    }

    #[test]
    fn product_is_first_factor_major() {
        let x = FinSet::of(&["a", "b"]);
        let y = FinSet::of(&["u", "v", "w"]);
        let xy = x.tensor(&y);
        assert_eq!(xy.size(), 6);
        assert_eq!(xy.element_labels(1), vec!["a", "v"]);
        assert_eq!(xy.element_labels(3), vec!["b", "u"]);
        assert_eq!(xy.index_of(&["b", "w"]).unwrap(), 5);
        for i in 0..6 {
            assert_eq!(xy.index_of_coords(&xy.coords(i)), i);
        }
    }

    #[test]
    fn unit_is_strict() {
        let x = FinSet::range(3);
        assert_eq!(FinSet::unit().tensor(&x), x);
        assert_eq!(x.tensor(&FinSet::unit()), x);
        assert_eq!(FinSet::unit().size(), 1);
        assert_eq!(FinSet::unit().coords(0), Vec::<usize>::new());
    }
}
