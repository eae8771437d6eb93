use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;

use super::morphism::{Gauss, GaussMorphism};
use super::psd::spectral_factor;
use crate::category::{seeded, MorphismSampler, SeededRng};
use crate::error::{Error, Result};

/// `count` independent draws from `N(Mx + s, C)`, one per column.
pub fn g_sample(f: &GaussMorphism, x: &DVector<f64>, seed: u64, count: usize) -> Result<DMatrix<f64>> {
    if x.len() != f.input_dim() {
        return Err(Error::DimensionMismatch {
            expected: f.input_dim(),
            found: x.len(),
        });
    }
    let mean = f.matrix() * x + f.shift();
    let factor = spectral_factor(f.covariance());
    let m = f.output_dim();
    let mut rng = seeded(seed);
    let noise = DMatrix::from_fn(m, count, |_, _| rng.sample::<f64, _>(StandardNormal));
    let mut draws = &factor * noise;
    for mut column in draws.column_iter_mut() {
        column += &mean;
    }
    Ok(draws)
}

fn uniform_matrix(rows: usize, cols: usize, rng: &mut SeededRng) -> DMatrix<f64> {
    DMatrix::from_fn(rows, cols, |_, _| rng.random_range(-2.0..2.0))
}

/// A random PSD matrix `B Bᵀ` of the given size and rank.
pub fn random_psd(size: usize, rank: usize, rng: &mut SeededRng) -> DMatrix<f64> {
    let b = uniform_matrix(size, rank, rng);
    let c = &b * b.transpose();
    (&c + c.transpose()) * 0.5
}

/// A random morphism `n → m` with covariance of random rank.
pub fn random_gauss(n: usize, m: usize, rng: &mut SeededRng) -> GaussMorphism {
    let rank = rng.random_range(0..=m);
    GaussMorphism::new(
        uniform_matrix(m, n, rng),
        random_psd(m, rank, rng),
        DVector::from_fn(m, |_, _| rng.random_range(-2.0..2.0)),
        f64::INFINITY,
    )
    .expect("B Bᵀ is symmetric PSD")
}

/// Samples random morphisms; with probability `deterministic_share` the
/// covariance is zero.
#[derive(Debug, Clone, Copy)]
pub struct GaussSampler {
    pub deterministic_share: f64,
}

impl Default for GaussSampler {
    fn default() -> Self {
        GaussSampler {
            deterministic_share: 0.2,
        }
    }
}

impl MorphismSampler<Gauss> for GaussSampler {
    fn sample(&self, _: &Gauss, dom: &usize, cod: &usize, rng: &mut SeededRng) -> GaussMorphism {
        if rng.random_bool(self.deterministic_share) {
            GaussMorphism::affine(
                uniform_matrix(*cod, *dom, rng),
                DVector::from_fn(*cod, |_, _| rng.random_range(-2.0..2.0)),
            )
            .expect("zero covariance is valid")
        } else {
            random_gauss(*dom, *cod, rng)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_covariance_samples_are_exact() {
        let f = GaussMorphism::affine(DMatrix::from_element(1, 1, 2.0), DVector::from_element(1, 1.0)).unwrap();
        let draws = g_sample(&f, &DVector::from_element(1, 3.0), 5, 10).unwrap();
        assert!(draws.iter().all(|&v| v == 7.0));
    }

    #[test]
    fn standard_normal_mean() {
        let f = GaussMorphism::state(DMatrix::from_element(1, 1, 1.0), DVector::zeros(1), 1e-9).unwrap();
        let n = 100_000;
        let draws = g_sample(&f, &DVector::zeros(0), 17, n).unwrap();
        let mean = draws.row(0).mean();
        assert!(mean.abs() < 5.0 / (n as f64).sqrt());
    }

    #[test]
    fn sampling_is_reproducible() {
        let mut rng = seeded(1);
        let f = random_gauss(2, 3, &mut rng);
        let x = DVector::from_row_slice(&[0.5, -1.0]);
        assert_eq!(g_sample(&f, &x, 9, 20).unwrap(), g_sample(&f, &x, 9, 20).unwrap());
    }
}
