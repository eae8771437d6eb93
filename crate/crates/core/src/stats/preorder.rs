use super::completeness::is_complete;
use super::model::{StatModel, Statistic};
use super::sufficiency::is_sufficient;
use crate::category::{Counterexample, LawReport};
use crate::error::{Error, Result};
use crate::finprob::Stoch;
use crate::matcat::{from_function, FinSet, Semiring};

/// Largest sample space `check_bahadur` will enumerate partitions of.
pub const DEFAULT_PARTITION_BOUND: usize = 8;

/// A deterministic `c : V → W` with `t =_{p-a.s.} c ∘ s`, certifying `t ≤ s`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonWitness {
    pub c: Stoch,
}

fn support(model: &StatModel) -> Vec<usize> {
    let p = model.kernel();
    (0..p.cod().size())
        .filter(|&x| (0..p.dom().size()).any(|t| !p.get(x, t).is_zero()))
        .collect()
}

/// Decides `t ≤ s`: on the support of `p`, `t` is a function of `s`.
/// Uncharged values of `s` map to the first element of `t`'s codomain.
pub fn statistic_leq(model: &StatModel, s: &Statistic, t: &Statistic) -> Result<Option<ComparisonWitness>> {
    model.check_statistic(s)?;
    model.check_statistic(t)?;
    let mut table: Vec<Option<usize>> = vec![None; s.codomain().size()];
    for x in support(model) {
        let slot = &mut table[s.image(x)];
        match *slot {
            Some(w) if w != t.image(x) => return Ok(None),
            Some(_) => {}
            None => *slot = Some(t.image(x)),
        }
    }
    let images: Vec<usize> = table.into_iter().map(|w| w.unwrap_or(0)).collect();
    let c = from_function(s.codomain().clone(), t.codomain().clone(), &images)?;
    Ok(Some(ComparisonWitness { c }))
}

/// Statistic sending each element to its block index.
fn partition_statistic(x: &FinSet, blocks: &[usize], labels: Vec<String>) -> Statistic {
    let count = labels.len();
    let cod = FinSet::new(labels).unwrap_or_else(|_| FinSet::range(count));
    Statistic::from_images(x.clone(), cod, blocks).expect("block indices are in range")
}

/// The likelihood-ratio partition: support elements are grouped when their
/// likelihood vectors are proportional; off-support elements share one
/// extra block.
pub fn minimal_sufficient(model: &StatModel) -> Statistic {
    let p = model.kernel();
    let x = p.cod();
    let thetas = p.dom().size();
    let proportional = |a: usize, b: usize| {
        (0..thetas).all(|t| {
            (0..thetas).all(|u| p.get(a, t).mul(p.get(b, u)) == p.get(b, t).mul(p.get(a, u)))
        })
    };

    let charged = support(model);
    let mut representatives: Vec<usize> = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut blocks = vec![usize::MAX; x.size()];
    for &e in &charged {
        let block = match representatives.iter().position(|&r| proportional(r, e)) {
            Some(b) => b,
            None => {
                representatives.push(e);
                members.push(Vec::new());
                representatives.len() - 1
            }
        };
        blocks[e] = block;
        members[block].push(e);
    }
    let null: Vec<usize> = (0..x.size()).filter(|e| blocks[*e] == usize::MAX).collect();
    if !null.is_empty() {
        for &e in &null {
            blocks[e] = members.len();
        }
        members.push(null);
    }
    let labels = members
        .iter()
        .map(|m| {
            let names: Vec<String> = m.iter().map(|&e| x.label(e)).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    partition_statistic(x, &blocks, labels)
}

/// All set partitions of `{0, …, n-1}` as restricted growth strings:
/// `blocks[i]` is the block of element `i`, and blocks are numbered in order
/// of first appearance.
pub fn set_partitions(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = Some(vec![0; n]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        // Advance: find the last position that can be incremented.
        let mut a = current.clone();
        let mut maxima = vec![0; n];
        for i in 1..n {
            maxima[i] = maxima[i - 1].max(a[i - 1]);
        }
        for i in (1..n).rev() {
            if a[i] <= maxima[i] {
                a[i] += 1;
                for slot in a.iter_mut().skip(i + 1) {
                    *slot = 0;
                }
                next = Some(a);
                break;
            }
        }
        Some(current)
    })
}

/// Bahadur's theorem at one instance: if `s` is sufficient and `sp` is
/// complete then `s ≤ t` for every sufficient statistic `t`, checked against
/// every partition of the sample space.
pub fn check_bahadur(model: &StatModel, s: &Statistic, bound: usize) -> Result<LawReport<Stoch>> {
    const LAW: &str = "bahadur";
    model.check_statistic(s)?;
    let x = model.sample_space();
    if x.size() > bound {
        return Err(Error::SizeBound {
            size: x.size() as u128,
            bound: bound as u128,
        });
    }
    if is_sufficient(model, s)?.is_none() {
        return Ok(LawReport::vacuous(LAW, "sufficiency"));
    }
    if !is_complete(&model.push(s)?)?.is_complete() {
        return Ok(LawReport::vacuous(LAW, "completeness"));
    }
    for blocks in set_partitions(x.size()) {
        let count = blocks.iter().max().map_or(0, |m| m + 1);
        let labels = (0..count).map(|b| format!("b{b}")).collect();
        let t = partition_statistic(x, &blocks, labels);
        if is_sufficient(model, &t)?.is_some() && statistic_leq(model, &t, s)?.is_none() {
            return Ok(LawReport::fail(
                LAW,
                Counterexample {
                    inputs: vec![model.kernel().clone()],
                    lhs: s.kernel().clone(),
                    rhs: t.kernel().clone(),
                },
            )
            .with_note("a sufficient statistic does not determine s"));
        }
    }
    Ok(LawReport::pass(LAW))
}
