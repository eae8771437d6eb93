use super::Stoch;
use crate::category::recompose_from_conditional;
use crate::error::{Error, Result};
use crate::matcat::{project, FinStoch, Kernel, Prob, Semiring};

/// How to fill a conditional's column where the conditioning value has
/// probability zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fill {
    #[default]
    Uniform,
    /// Point mass on the element with this index.
    Point(usize),
}

impl Fill {
    pub(crate) fn column(self, len: usize) -> Result<Vec<Prob>> {
        match self {
            Fill::Uniform => Ok(vec![Prob::ratio(1, len as i64); len]),
            Fill::Point(i) if i < len => {
                let mut column = vec![Prob::zero(); len];
                column[i] = Prob::one();
                Ok(column)
            }
            Fill::Point(i) => Err(Error::UnknownLabel(format!(
                "fill index {i} for an object of size {len}"
            ))),
        }
    }
}

/// The marginal of `f : A → X ⊗ Y` on its first `split` output factors.
pub fn marginal(f: &Stoch, split: usize) -> Result<Stoch> {
    let keep: Vec<usize> = (0..split).collect();
    project(f, &keep)
}

/// `f_{|X} : X ⊗ A → Y` for `f : A → X ⊗ Y`, with `X` the first `split`
/// output factors and a uniform fill.
pub fn conditional(f: &Stoch, split: usize) -> Result<Stoch> {
    conditional_with(f, split, Fill::Uniform)
}

/// `f_{|X}(y|x,a) = f(x,y|a) / f(x|a)` wherever `f(x|a) > 0`.
pub fn conditional_with(f: &Stoch, split: usize, fill: Fill) -> Result<Stoch> {
    let cod = f.cod();
    let x = cod.slice(0..split)?;
    let y = cod.slice(split..cod.factor_count())?;
    let a = f.dom();
    let (na, nx, ny) = (a.size(), x.size(), y.size());
    let fill_column = fill.column(ny)?;
    let fx = marginal(f, split)?;

    let mut columns = Vec::with_capacity(nx * na);
    for xi in 0..nx {
        for ai in 0..na {
            let mass = fx.get(xi, ai);
            if mass.is_zero() {
                columns.push(fill_column.clone());
            } else {
                columns.push((0..ny).map(|yi| f.get(xi * ny + yi, ai).div(mass)).collect());
            }
        }
    }
    Kernel::from_columns(x.tensor(a), y, columns)
}

/// Rebuilds `f : A → X ⊗ Y` from its `X`-marginal and a conditional
/// `X ⊗ A → Y`.
pub fn recompose(marginal: &Stoch, cond: &Stoch) -> Result<Stoch> {
    recompose_from_conditional(&FinStoch::new(), marginal, cond)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcat::{random_kernel, FinSet};
    use crate::seeded;

    fn p(n: i64, d: i64) -> Prob {
        Prob::ratio(n, d)
    }

    fn bits2() -> FinSet {
        FinSet::range(2).tensor(&FinSet::range(2))
    }

    #[test]
    fn divides_by_the_marginal() {
        let psi = Kernel::state(bits2(), vec![p(1, 2), p(0, 1), p(1, 4), p(1, 4)]).unwrap();
        let c = conditional(&psi, 1).unwrap();
        assert_eq!(c.column_vec(0), vec![p(1, 1), p(0, 1)]);
        assert_eq!(c.column_vec(1), vec![p(1, 2), p(1, 2)]);
        assert_eq!(recompose(&marginal(&psi, 1).unwrap(), &c).unwrap(), psi);
    }

    #[test]
    fn null_conditioning_values_get_the_fill() {
        let psi = Kernel::state(bits2(), vec![p(1, 3), p(2, 3), p(0, 1), p(0, 1)]).unwrap();
        let c = conditional(&psi, 1).unwrap();
        assert_eq!(c.column_vec(1), vec![p(1, 2), p(1, 2)]);
        let c = conditional_with(&psi, 1, Fill::Point(1)).unwrap();
        assert_eq!(c.column_vec(1), vec![p(0, 1), p(1, 1)]);
        assert!(conditional_with(&psi, 1, Fill::Point(2)).is_err());
    }

    #[test]
    fn product_states_have_constant_conditionals() {
        let a = Kernel::state(FinSet::range(2), vec![p(1, 3), p(2, 3)]).unwrap();
        let b = Kernel::state(FinSet::range(3), vec![p(1, 2), p(1, 4), p(1, 4)]).unwrap();
        let psi = crate::matcat::tensor(&a, &b);
        let c = conditional(&psi, 1).unwrap();
        assert_eq!(c.column_vec(0), b.column_vec(0));
        assert_eq!(c.column_vec(1), b.column_vec(0));
    }

    #[test]
    fn reconstruction_with_inputs() {
        let mut rng = seeded(21);
        let dom = FinSet::range(3);
        let cod = FinSet::range(2).tensor(&FinSet::range(3));
        for _ in 0..50 {
            let f: Stoch = random_kernel(&dom, &cod, &mut rng);
            let c = conditional(&f, 1).unwrap();
            assert_eq!(recompose(&marginal(&f, 1).unwrap(), &c).unwrap(), f);
        }
    }

    #[test]
    fn splits_out_of_range_are_rejected() {
        let psi = Kernel::state(bits2(), vec![p(1, 4); 4]).unwrap();
        assert!(conditional(&psi, 3).is_err());
    }
}
