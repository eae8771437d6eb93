//! Concrete refutations for decisions whose library verdict is a bare `false`.

use markov_core::finprob::{support, Stoch, TripleSplit};
use markov_core::matcat::{project, Prob, Semiring};
use markov_core::stats::{StatModel, Statistic};
use serde_json::{json, Value};

fn column(k: &Stoch, x: usize) -> Vec<String> {
    k.column(x).map(ToString::to_string).collect()
}

/// First `(a, x, w, y)` with `f(x,w,y|a) f(w|a) ≠ f(x,w|a) f(w,y|a)`.
pub fn ci_violation(f: &Stoch, split: TripleSplit) -> Option<Value> {
    let n = f.cod().factor_count();
    let keep = |r: std::ops::Range<usize>| r.collect::<Vec<_>>();
    let xw = project(f, &keep(0..split.w_end)).ok()?;
    let wy = project(f, &keep(split.x_end..n)).ok()?;
    let w = project(f, &keep(split.x_end..split.w_end)).ok()?;
    let nw = w.cod().size();
    let (nx, ny) = (xw.cod().size() / nw, wy.cod().size() / nw);
    for a in 0..f.dom().size() {
        for x in 0..nx {
            for wi in 0..nw {
                for y in 0..ny {
                    let joint = (x * nw + wi) * ny + y;
                    let lhs = f.get(joint, a).mul(w.get(wi, a));
                    let rhs = xw.get(x * nw + wi, a).mul(wy.get(wi * ny + y, a));
                    if lhs != rhs {
                        return Some(json!({
                            "identity": "f(x,w,y|a) f(w|a) = f(x,w|a) f(w,y|a)",
                            "input": f.dom().label(a),
                            "output": f.cod().label(joint),
                            "lhs": lhs.to_string(),
                            "rhs": rhs.to_string(),
                        }));
                    }
                }
            }
        }
    }
    None
}

/// An `x` and two inputs whose conditionals `f(·|x, a)` on `Y` differ.
pub fn markov_violation(f: &Stoch, split: usize) -> Option<Value> {
    let n = f.cod().factor_count();
    let g = project(f, &(0..split).collect::<Vec<_>>()).ok()?;
    let (nx, ny) = (g.cod().size(), f.cod().size() / g.cod().size());
    let ratio = |x: usize, a: usize| -> Vec<Prob> {
        let mass = g.get(x, a);
        (0..ny).map(|y| f.get(x * ny + y, a).div(mass)).collect()
    };
    let y_labels = f.cod().slice(split..n).ok()?;
    for x in 0..nx {
        let charged: Vec<usize> = (0..f.dom().size()).filter(|&a| !g.get(x, a).is_zero()).collect();
        let Some((&first, rest)) = charged.split_first() else { continue };
        let base = ratio(x, first);
        if let Some(&other) = rest.iter().find(|&&a| ratio(x, a) != base) {
            let show = |r: Vec<Prob>| r.iter().map(ToString::to_string).collect::<Vec<_>>();
            return Some(json!({
                "identity": "f(y|x,a) does not depend on a",
                "x": g.cod().label(x),
                "inputs": [f.dom().label(first), f.dom().label(other)],
                "y": (0..ny).map(|y| y_labels.label(y)).collect::<Vec<_>>(),
                "lhs": show(base),
                "rhs": show(ratio(x, other)),
            }));
        }
    }
    None
}

/// A support element where `f` and `g` disagree.
pub fn as_equal_violation(p: &Stoch, f: &Stoch, g: &Stoch) -> Option<Value> {
    support(p).indices.into_iter().find(|&x| !f.column(x).eq(g.column(x))).map(|x| {
        json!({"x": p.cod().label(x), "lhs": column(f, x), "rhs": column(g, x)})
    })
}

/// A support element where `f` is not a point mass.
pub fn as_deterministic_violation(p: &Stoch, f: &Stoch) -> Option<Value> {
    support(p)
        .indices
        .into_iter()
        .find(|&x| !f.column(x).any(|v| *v == Prob::one()))
        .map(|x| json!({"x": p.cod().label(x), "column": column(f, x)}))
}

/// An `x` and two parameters whose likelihood ratios `p(x|θ) / sp(s(x)|θ)`
/// differ.
pub fn sufficiency_violation(model: &StatModel, s: &Statistic) -> Option<Value> {
    let p = model.kernel();
    let sp = model.push(s).ok()?;
    for x in 0..p.cod().size() {
        let v = s.image(x);
        let ratios: Vec<(usize, Prob)> = (0..p.dom().size())
            .filter(|&t| !sp.get(v, t).is_zero())
            .map(|t| (t, p.get(x, t).div(sp.get(v, t))))
            .collect();
        let Some(((first, base), rest)) = ratios.split_first() else { continue };
        if let Some((other, r)) = rest.iter().find(|(_, r)| r != base) {
            return Some(json!({
                "identity": "p(x|θ) / sp(s(x)|θ) does not depend on θ",
                "x": p.cod().label(x),
                "s(x)": s.codomain().label(v),
                "parameters": [p.dom().label(*first), p.dom().label(*other)],
                "ratios": [base.to_string(), r.to_string()],
            }));
        }
    }
    None
}

/// Two parameters under which `a` has different distributions.
pub fn ancillarity_violation(model: &StatModel, a: &Statistic) -> Option<Value> {
    let ap = model.push(a).ok()?;
    (1..ap.dom().size()).find(|&t| !ap.column(t).eq(ap.column(0))).map(|t| {
        json!({
            "parameters": [ap.dom().label(0), ap.dom().label(t)],
            "lhs": column(&ap, 0),
            "rhs": column(&ap, t),
        })
    })
}

/// Two support elements with equal `s` and different `t`.
pub fn leq_violation(model: &StatModel, s: &Statistic, t: &Statistic) -> Option<Value> {
    let x = model.sample_space();
    let on_support = support(model.kernel()).indices;
    on_support.iter().enumerate().find_map(|(i, &x1)| {
        on_support[i + 1..]
            .iter()
            .find(|&&x2| s.image(x1) == s.image(x2) && t.image(x1) != t.image(x2))
            .map(|&x2| {
                json!({
                    "elements": [x.label(x1), x.label(x2)],
                    "s": s.codomain().label(s.image(x1)),
                    "t": [t.codomain().label(t.image(x1)), t.codomain().label(t.image(x2))],
                })
            })
    })
}
