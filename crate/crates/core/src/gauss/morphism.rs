use nalgebra::{DMatrix, DVector};

use super::psd::{check_symmetric, min_eigenvalue, psd_pinv, symmetrized, DEFAULT_CUTOFF};
use crate::category::MarkovCategory;
use crate::error::{Error, Result};
use crate::matcat::StructureKind;

/// Default absolute tolerance for equality and PSD checks.
pub const DEFAULT_TOL: f64 = 1e-9;

/// `x ↦ Mx + ξ` with `ξ ~ N(s, C)`, a morphism `n → m`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussMorphism {
    m: DMatrix<f64>,
    c: DMatrix<f64>,
    s: DVector<f64>,
}

impl GaussMorphism {
    /// Validates shapes, symmetry and positive semidefiniteness (smallest
    /// eigenvalue at least `-tol`), then stores the symmetrized covariance.
    pub fn new(m: DMatrix<f64>, c: DMatrix<f64>, s: DVector<f64>, tol: f64) -> Result<Self> {
        let out = m.nrows();
        for found in [c.nrows(), c.ncols(), s.len()] {
            if found != out {
                return Err(Error::DimensionMismatch {
                    expected: out,
                    found,
                });
            }
        }
        check_symmetric(&c)?;
        let c = symmetrized(&c);
        let smallest = min_eigenvalue(&c);
        if smallest < -tol {
            return Err(Error::NotPsd(smallest));
        }
        Ok(GaussMorphism { m, c, s })
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_parts(m: DMatrix<f64>, c: DMatrix<f64>, s: DVector<f64>) -> Self {
        debug_assert_eq!(m.nrows(), c.nrows());
        debug_assert_eq!(m.nrows(), s.len());
        GaussMorphism { m, c, s }
    }

    /// The deterministic linear map `x ↦ Mx`.
    pub fn linear(m: DMatrix<f64>) -> Self {
        let out = m.nrows();
        GaussMorphism::from_parts(m, DMatrix::zeros(out, out), DVector::zeros(out))
    }

    /// The affine map `x ↦ Mx + s`.
    pub fn affine(m: DMatrix<f64>, s: DVector<f64>) -> Result<Self> {
        let out = m.nrows();
        GaussMorphism::new(m, DMatrix::zeros(out, out), s, 0.0)
    }

    /// The distribution `N(s, C)` as a morphism `0 → m`.
    pub fn state(c: DMatrix<f64>, s: DVector<f64>, tol: f64) -> Result<Self> {
        GaussMorphism::new(DMatrix::zeros(s.len(), 0), c, s, tol)
    }

    pub fn input_dim(&self) -> usize {
        self.m.ncols()
    }

    pub fn output_dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    pub fn covariance(&self) -> &DMatrix<f64> {
        &self.c
    }

    pub fn shift(&self) -> &DVector<f64> {
        &self.s
    }

    /// Largest componentwise difference; `None` when the types differ.
    pub fn distance(&self, other: &GaussMorphism) -> Option<f64> {
        if self.m.shape() != other.m.shape() {
            return None;
        }
        let dm = (&self.m - &other.m).amax();
        let dc = (&self.c - &other.c).amax();
        let ds = (&self.s - &other.s).amax();
        Some(dm.max(dc).max(ds))
    }

    pub fn approx_eq(&self, other: &GaussMorphism, tol: f64) -> bool {
        self.distance(other).is_some_and(|d| d <= tol)
    }

    /// Zero covariance within `tol`.
    pub fn is_deterministic(&self, tol: f64) -> bool {
        self.c.amax() <= tol
    }
}

/// `(N, D, t) ∘ (M, C, s) = (NM, NCNᵀ + D, Ns + t)`.
pub fn g_compose(b: &GaussMorphism, a: &GaussMorphism) -> Result<GaussMorphism> {
    if a.output_dim() != b.input_dim() {
        return Err(Error::DimensionMismatch {
            expected: b.input_dim(),
            found: a.output_dim(),
        });
    }
    let m = &b.m * &a.m;
    let c = symmetrized(&(&b.m * &a.c * b.m.transpose() + &b.c));
    let s = &b.m * &a.s + &b.s;
    Ok(GaussMorphism::from_parts(m, c, s))
}

fn block_diag(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    let mut out = DMatrix::zeros(a.nrows() + b.nrows(), a.ncols() + b.ncols());
    out.view_mut((0, 0), a.shape()).copy_from(a);
    out.view_mut(a.shape(), b.shape()).copy_from(b);
    out
}

fn stack(a: &DVector<f64>, b: &DVector<f64>) -> DVector<f64> {
    DVector::from_iterator(a.len() + b.len(), a.iter().chain(b.iter()).copied())
}

/// Direct sum of all three components.
pub fn g_tensor(a: &GaussMorphism, b: &GaussMorphism) -> GaussMorphism {
    GaussMorphism::from_parts(block_diag(&a.m, &b.m), block_diag(&a.c, &b.c), stack(&a.s, &b.s))
}

pub fn g_identity(n: usize) -> GaussMorphism {
    GaussMorphism::linear(DMatrix::identity(n, n))
}

/// `((1_n; 1_n), 0, 0)`.
pub fn g_copy(n: usize) -> GaussMorphism {
    let mut m = DMatrix::zeros(2 * n, n);
    m.view_mut((0, 0), (n, n)).fill_with_identity();
    m.view_mut((n, 0), (n, n)).fill_with_identity();
    GaussMorphism::linear(m)
}

/// The unique morphism `n → 0`.
pub fn g_discard(n: usize) -> GaussMorphism {
    GaussMorphism::linear(DMatrix::zeros(0, n))
}

/// `ℝⁿ ⊕ ℝᵐ → ℝᵐ ⊕ ℝⁿ`.
pub fn g_swap(n: usize, m: usize) -> GaussMorphism {
    let mut p = DMatrix::zeros(n + m, n + m);
    p.view_mut((0, n), (m, m)).fill_with_identity();
    p.view_mut((m, 0), (n, n)).fill_with_identity();
    GaussMorphism::linear(p)
}

/// Structure morphisms by kind; `Swap` takes two dimensions, the rest one.
pub fn g_structure(kind: StructureKind, dims: &[usize]) -> Result<GaussMorphism> {
    let arity = if kind == StructureKind::Swap { 2 } else { 1 };
    if dims.len() != arity {
        return Err(Error::TypeMismatch(format!(
            "{kind:?} takes {arity} dimension(s), got {}",
            dims.len()
        )));
    }
    Ok(match kind {
        StructureKind::Copy => g_copy(dims[0]),
        StructureKind::Discard => g_discard(dims[0]),
        StructureKind::Identity => g_identity(dims[0]),
        StructureKind::Swap => g_swap(dims[0], dims[1]),
    })
}

/// Keeps the listed output coordinates in the listed order.
pub fn g_marginalize(f: &GaussMorphism, keep: &[usize]) -> Result<GaussMorphism> {
    if let Some(&bad) = keep.iter().find(|&&i| i >= f.output_dim()) {
        return Err(Error::InvalidSplit(format!(
            "coordinate {bad} out of range for output dimension {}",
            f.output_dim()
        )));
    }
    Ok(GaussMorphism::from_parts(
        f.m.select_rows(keep),
        f.c.select_rows(keep).select_columns(keep),
        f.s.select_rows(keep),
    ))
}

/// Conditions `f : A → X ⊕ Y` on its first `x_dim` output coordinates,
/// giving `X ⊕ A → Y`.
pub fn g_conditional(f: &GaussMorphism, x_dim: usize, cutoff: f64) -> Result<GaussMorphism> {
    let out = f.output_dim();
    if x_dim > out {
        return Err(Error::InvalidSplit(format!(
            "cannot condition on {x_dim} of {out} output coordinates"
        )));
    }
    let (k, l, n) = (x_dim, out - x_dim, f.input_dim());
    let m_xi = f.m.rows(0, k);
    let m_eta = f.m.rows(k, l);
    let c_xx = f.c.view((0, 0), (k, k)).into_owned();
    let c_yx = f.c.view((k, 0), (l, k));
    let c_yy = f.c.view((k, k), (l, l));
    let s_xi = f.s.rows(0, k);
    let s_eta = f.s.rows(k, l);

    let gain = c_yx * psd_pinv(&c_xx, cutoff)?.pinv;
    let mut m = DMatrix::zeros(l, k + n);
    m.view_mut((0, 0), (l, k)).copy_from(&gain);
    m.view_mut((0, k), (l, n)).copy_from(&(m_eta - &gain * m_xi));
    let c = symmetrized(&(c_yy - &gain * c_yx.transpose()));
    let s = s_eta - &gain * s_xi;
    Ok(GaussMorphism::from_parts(m, c, s))
}

/// `f = g ∘ (ψ ⊗ id_n)` with `ψ = (·, C, s) : 0 → m` and the deterministic
/// `g = addition ∘ (id_m ⊗ linear) : m ⊕ n → m`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussPushback {
    pub noise: GaussMorphism,
    /// `((1 1), 0, 0) : m ⊕ m → m`.
    pub addition: GaussMorphism,
    /// `(M, 0, 0) : n → m`.
    pub linear: GaussMorphism,
}

impl GaussPushback {
    pub fn evaluation(&self) -> GaussMorphism {
        let m = self.noise.output_dim();
        let inner = g_tensor(&g_identity(m), &self.linear);
        g_compose(&self.addition, &inner).expect("dimensions agree by construction")
    }

    pub fn recompose(&self) -> GaussMorphism {
        let n = self.linear.input_dim();
        g_compose(&self.evaluation(), &g_tensor(&self.noise, &g_identity(n)))
            .expect("dimensions agree by construction")
    }
}

pub fn g_pushback(f: &GaussMorphism) -> GaussPushback {
    let m = f.output_dim();
    let mut add = DMatrix::zeros(m, 2 * m);
    add.view_mut((0, 0), (m, m)).fill_with_identity();
    add.view_mut((0, m), (m, m)).fill_with_identity();
    GaussPushback {
        noise: GaussMorphism::from_parts(DMatrix::zeros(m, 0), f.c.clone(), f.s.clone()),
        addition: GaussMorphism::linear(add),
        linear: GaussMorphism::linear(f.m.clone()),
    }
}

/// The Gaussian category with componentwise tolerance `tol`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gauss {
    pub tol: f64,
    /// Relative spectral cutoff used when conditioning.
    pub cutoff: f64,
}

impl Gauss {
    pub fn new(tol: f64) -> Self {
        Gauss {
            tol,
            cutoff: DEFAULT_CUTOFF,
        }
    }

    pub fn conditional(&self, f: &GaussMorphism, x_dim: usize) -> Result<GaussMorphism> {
        g_conditional(f, x_dim, self.cutoff)
    }
}

impl Default for Gauss {
    fn default() -> Self {
        Gauss::new(DEFAULT_TOL)
    }
}

impl MarkovCategory for Gauss {
    type Object = usize;
    type Morphism = GaussMorphism;

    fn unit(&self) -> usize {
        0
    }
    fn tensor_objects(&self, a: &usize, b: &usize) -> usize {
        a + b
    }
    fn domain(&self, f: &GaussMorphism) -> usize {
        f.input_dim()
    }
    fn codomain(&self, f: &GaussMorphism) -> usize {
        f.output_dim()
    }
    fn identity(&self, x: &usize) -> GaussMorphism {
        g_identity(*x)
    }
    fn copy(&self, x: &usize) -> GaussMorphism {
        g_copy(*x)
    }
    fn discard(&self, x: &usize) -> GaussMorphism {
        g_discard(*x)
    }
    fn swap(&self, x: &usize, y: &usize) -> GaussMorphism {
        g_swap(*x, *y)
    }
    fn compose(&self, g: &GaussMorphism, f: &GaussMorphism) -> Result<GaussMorphism> {
        g_compose(g, f)
    }
    fn tensor(&self, f: &GaussMorphism, g: &GaussMorphism) -> Result<GaussMorphism> {
        Ok(g_tensor(f, g))
    }
    fn equal(&self, f: &GaussMorphism, g: &GaussMorphism) -> bool {
        f.approx_eq(g, self.tol)
    }
}
