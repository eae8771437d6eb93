use super::completeness::is_complete;
use super::model::{StatModel, Statistic};
use super::sufficiency::is_sufficient;
use crate::category::{Counterexample, LawReport, MarkovCategory};
use crate::error::Result;
use crate::finprob::Stoch;
use crate::matcat::FinStoch;

/// The distribution of `a` does not depend on the parameter.
pub fn is_ancillary(model: &StatModel, a: &Statistic) -> Result<bool> {
    model.check_statistic(a)?;
    let ap = model.push(a)?;
    let mut columns = (0..ap.dom().size()).map(|t| ap.column(t));
    let Some(first) = columns.next() else {
        return Ok(true);
    };
    let first: Vec<_> = first.collect();
    Ok(columns.all(|c| c.eq(first.iter().copied())))
}

/// Basu's theorem at one instance: if `s` is sufficient with `sp` complete
/// and `a` is ancillary, then `(s ⊗ a) ∘ copy ∘ p == (sp ⊗ ap) ∘ copy`.
pub fn check_basu(model: &StatModel, s: &Statistic, a: &Statistic) -> Result<LawReport<Stoch>> {
    const LAW: &str = "basu";
    model.check_statistic(s)?;
    model.check_statistic(a)?;
    if is_sufficient(model, s)?.is_none() {
        return Ok(LawReport::vacuous(LAW, "sufficiency"));
    }
    let sp = model.push(s)?;
    if !is_complete(&sp)?.is_complete() {
        return Ok(LawReport::vacuous(LAW, "completeness"));
    }
    if !is_ancillary(model, a)? {
        return Ok(LawReport::vacuous(LAW, "ancillarity"));
    }
    let cat = FinStoch::new();
    let joint = cat.compose(&cat.pair(s.kernel(), a.kernel())?, model.kernel())?;
    let product = cat.pair(&sp, &model.push(a)?)?;
    Ok(if joint == product {
        LawReport::pass(LAW)
    } else {
        LawReport::fail(
            LAW,
            Counterexample {
                inputs: vec![model.kernel().clone(), s.kernel().clone(), a.kernel().clone()],
                lhs: joint,
                rhs: product,
            },
        )
    })
}
