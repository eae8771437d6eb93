use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};

/// Relative spectral cutoff below which eigenvalues count as zero.
pub const DEFAULT_CUTOFF: f64 = 1e-10;

/// Largest asymmetry tolerated before symmetrizing, relative to the largest
/// entry (and at least absolute).
const SYMMETRY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct PsdPinvResult {
    pub pinv: DMatrix<f64>,
    pub rank: usize,
    /// Absolute eigenvalue threshold that was applied.
    pub cutoff: f64,
}

pub(crate) fn symmetrized(c: &DMatrix<f64>) -> DMatrix<f64> {
    (c + c.transpose()) * 0.5
}

pub(crate) fn check_symmetric(c: &DMatrix<f64>) -> Result<()> {
    if !c.is_square() {
        return Err(Error::DimensionMismatch {
            expected: c.nrows(),
            found: c.ncols(),
        });
    }
    let asymmetry = (c - c.transpose()).amax();
    if asymmetry > SYMMETRY_TOL * c.amax().max(1.0) {
        return Err(Error::NotSymmetric(asymmetry));
    }
    Ok(())
}

/// Moore–Penrose pseudoinverse of a symmetric matrix by spectral
/// decomposition; eigenvalues at most `cutoff · λ_max` are dropped.
pub fn psd_pinv(c: &DMatrix<f64>, cutoff: f64) -> Result<PsdPinvResult> {
    check_symmetric(c)?;
    let n = c.nrows();
    if n == 0 {
        return Ok(PsdPinvResult {
            pinv: DMatrix::zeros(0, 0),
            rank: 0,
            cutoff: 0.0,
        });
    }
    let eigen = SymmetricEigen::new(symmetrized(c));
    let scale = eigen.eigenvalues.iter().fold(0.0_f64, |acc, l| acc.max(l.abs()));
    let threshold = cutoff * scale;
    let mut pinv = DMatrix::zeros(n, n);
    let mut rank = 0;
    for (i, &lambda) in eigen.eigenvalues.iter().enumerate() {
        if lambda.abs() <= threshold || lambda == 0.0 {
            continue;
        }
        rank += 1;
        let v = eigen.eigenvectors.column(i);
        pinv += (v * v.transpose()) / lambda;
    }
    Ok(PsdPinvResult {
        pinv: symmetrized(&pinv),
        rank,
        cutoff: threshold,
    })
}

/// Largest violation of the four Penrose identities `A A⁺ A = A`,
/// `A⁺ A A⁺ = A⁺`, `(A A⁺)ᵀ = A A⁺`, `(A⁺ A)ᵀ = A⁺ A`, each measured
/// relative to the size of the triple product it involves
/// (`‖A‖²‖A⁺‖` and `‖A‖‖A⁺‖²`; the projector identities are unitless).
pub fn penrose_residual(a: &DMatrix<f64>, pinv: &DMatrix<f64>) -> f64 {
    let (na, np) = (a.norm(), pinv.norm());
    let relative = |diff: f64, scale: f64| if scale > 0.0 { diff / scale } else { diff };
    let aap = a * pinv;
    let apa = pinv * a;
    [
        relative((&aap * a - a).amax(), na * na * np),
        relative((&apa * pinv - pinv).amax(), na * np * np),
        (aap.transpose() - &aap).amax(),
        (apa.transpose() - &apa).amax(),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

/// Smallest eigenvalue of a symmetric matrix (`+∞` when empty).
pub(crate) fn min_eigenvalue(c: &DMatrix<f64>) -> f64 {
    if c.nrows() == 0 {
        return f64::INFINITY;
    }
    SymmetricEigen::new(symmetrized(c))
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// `L` with `L Lᵀ = C`, from the spectral decomposition with negative
/// eigenvalues clipped to zero.
pub(crate) fn spectral_factor(c: &DMatrix<f64>) -> DMatrix<f64> {
    if c.nrows() == 0 {
        return DMatrix::zeros(0, 0);
    }
    let eigen = SymmetricEigen::new(symmetrized(c));
    let mut factor = eigen.eigenvectors.clone();
    for (i, &lambda) in eigen.eigenvalues.iter().enumerate() {
        factor.column_mut(i).scale_mut(lambda.max(0.0).sqrt());
    }
    factor
}
