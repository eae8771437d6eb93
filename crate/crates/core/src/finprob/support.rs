use super::Stoch;
use crate::error::{Error, Result};
use crate::matcat::{from_function, FinSet, Prob, Semiring};

/// The support of a kernel `p : A → X` with its inclusion into `X`.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportResult {
    /// Indices into `X`, ascending.
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    /// The deterministic inclusion `supp(p) → X`.
    pub inclusion: Stoch,
}

impl SupportResult {
    pub fn contains(&self, x: usize) -> bool {
        self.indices.binary_search(&x).is_ok()
    }
}

/// `{x : p(x|a) > 0 for some a}`.
pub fn support(p: &Stoch) -> SupportResult {
    let indices = support_indices(p);
    let labels: Vec<String> = indices.iter().map(|&x| p.cod().label(x)).collect();
    let object = FinSet::new(labels.iter().cloned()).expect("element labels of one set are distinct");
    let inclusion = from_function(object, p.cod().clone(), &indices).expect("indices are in range");
    SupportResult {
        indices,
        labels,
        inclusion,
    }
}

pub(crate) fn support_indices(p: &Stoch) -> Vec<usize> {
    p.rows()
        .enumerate()
        .filter(|(_, row)| row.iter().any(|v| !v.is_zero()))
        .map(|(x, _)| x)
        .collect()
}

fn check_after(p: &Stoch, f: &Stoch) -> Result<()> {
    if p.cod() != f.dom() {
        return Err(Error::TypeMismatch(format!(
            "{:?} → {:?} does not follow {:?} → {:?}",
            f.dom(),
            f.cod(),
            p.dom(),
            p.cod()
        )));
    }
    Ok(())
}

/// `f =_{p-a.s.} g`: the columns of `f` and `g` agree on the support of `p`.
pub fn as_equal(p: &Stoch, f: &Stoch, g: &Stoch) -> Result<bool> {
    check_after(p, f)?;
    check_after(p, g)?;
    if f.cod() != g.cod() {
        return Err(Error::TypeMismatch(format!(
            "codomains differ: {:?} vs {:?}",
            f.cod(),
            g.cod()
        )));
    }
    Ok(support_indices(p)
        .into_iter()
        .all(|x| f.column(x).eq(g.column(x))))
}

/// Every column of `f` on the support of `p` is a point mass.
pub fn as_deterministic(p: &Stoch, f: &Stoch) -> Result<bool> {
    check_after(p, f)?;
    Ok(support_indices(p).into_iter().all(|x| {
        let mut nonzero = f.column(x).filter(|v| !v.is_zero());
        matches!((nonzero.next(), nonzero.next()), (Some(v), None) if *v == Prob::one())
    }))
}
