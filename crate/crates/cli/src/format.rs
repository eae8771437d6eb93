//! Kernel and Gaussian morphism files.
//!
//! A kernel file is `{"semiring", "dom", "cod", "entries"}` where `dom` and
//! `cod` are a label list (one factor), a list of label lists (several
//! factors) or `[]` (the unit), and `entries[y][x]` holds exact scalar
//! strings. A Gaussian file is `{"kind": "gauss", "dom", "cod", "M", "C",
//! "s"}` with decimal floats. Canonical documents are compact JSON with
//! fields in that order plus a trailing newline.

use markov_core::gauss::GaussMorphism;
use markov_core::matcat::{Bool, Factor, FinSet, Fuzzy, Kernel, Prob, Semiring, Signed};
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ObjectSpec {
    Labels(Vec<String>),
    Factors(Vec<Vec<String>>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KernelFile {
    pub semiring: String,
    pub dom: ObjectSpec,
    pub cod: ObjectSpec,
    pub entries: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaussFile {
    pub kind: String,
    pub dom: usize,
    pub cod: usize,
    #[serde(rename = "M")]
    pub m: Vec<Vec<f64>>,
    #[serde(rename = "C")]
    pub c: Vec<Vec<f64>>,
    pub s: Vec<f64>,
}

/// A kernel over any of the four scalar semirings.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyKernel {
    Prob(Kernel<Prob>),
    Signed(Kernel<Signed>),
    Bool(Kernel<Bool>),
    Fuzzy(Kernel<Fuzzy>),
}

/// Any morphism a file can hold.
#[derive(Debug, Clone, PartialEq)]
pub enum Morphism {
    Matrix(AnyKernel),
    Gauss(GaussMorphism),
}

impl AnyKernel {
    pub fn tag(&self) -> &'static str {
        match self {
            AnyKernel::Prob(_) => Prob::TAG,
            AnyKernel::Signed(_) => Signed::TAG,
            AnyKernel::Bool(_) => Bool::TAG,
            AnyKernel::Fuzzy(_) => Fuzzy::TAG,
        }
    }
}

impl ObjectSpec {
    pub fn to_finset(&self) -> Result<FinSet, CliError> {
        match self {
            ObjectSpec::Labels(labels) if labels.is_empty() => Ok(FinSet::unit()),
            ObjectSpec::Labels(labels) => FinSet::new(labels.iter().cloned()).map_err(CliError::from_load),
            ObjectSpec::Factors(factors) => {
                let factors = factors
                    .iter()
                    .map(|labels| Factor::new(labels.iter().cloned()))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(CliError::from_load)?;
                Ok(FinSet::from_factors(factors))
            }
        }
    }

    pub fn from_finset(set: &FinSet) -> Self {
        match set.factors() {
            [] => ObjectSpec::Labels(Vec::new()),
            [single] => ObjectSpec::Labels(single.labels().to_vec()),
            many => ObjectSpec::Factors(many.iter().map(|f| f.labels().to_vec()).collect()),
        }
    }
}

impl KernelFile {
    pub fn from_kernel<S: Semiring>(k: &Kernel<S>) -> Self {
        KernelFile {
            semiring: S::TAG.to_string(),
            dom: ObjectSpec::from_finset(k.dom()),
            cod: ObjectSpec::from_finset(k.cod()),
            entries: k.rows().map(|row| row.iter().map(ToString::to_string).collect()).collect(),
        }
    }

    pub fn to_kernel<S: Semiring>(&self) -> Result<Kernel<S>, CliError> {
        if self.semiring != S::TAG {
            return Err(CliError::Parse(format!("expected semiring {:?}, found {:?}", S::TAG, self.semiring)));
        }
        let (dom, cod) = (self.dom.to_finset()?, self.cod.to_finset()?);
        let rows = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|text| S::parse(text).ok_or_else(|| CliError::Parse(format!("invalid {} scalar {text:?}", S::TAG))))
                    .collect::<Result<Vec<S>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Kernel::new(dom, cod, rows).map_err(CliError::from_load)
    }

    pub fn to_any(&self) -> Result<AnyKernel, CliError> {
        Ok(match self.semiring.as_str() {
            t if t == Prob::TAG => AnyKernel::Prob(self.to_kernel()?),
            t if t == Signed::TAG => AnyKernel::Signed(self.to_kernel()?),
            t if t == Bool::TAG => AnyKernel::Bool(self.to_kernel()?),
            t if t == Fuzzy::TAG => AnyKernel::Fuzzy(self.to_kernel()?),
            other => return Err(CliError::Parse(format!("unknown semiring {other:?}"))),
        })
    }
}

fn matrix_rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    m.row_iter().map(|r| r.iter().copied().collect()).collect()
}

fn matrix_from_rows(rows: &[Vec<f64>], nrows: usize, ncols: usize, name: &str) -> Result<DMatrix<f64>, CliError> {
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(CliError::Parse(format!("{name} must be {nrows}×{ncols}")));
    }
    Ok(DMatrix::from_fn(nrows, ncols, |i, j| rows[i][j]))
}

impl GaussFile {
    pub fn from_morphism(f: &GaussMorphism) -> Self {
        GaussFile {
            kind: "gauss".into(),
            dom: f.input_dim(),
            cod: f.output_dim(),
            m: matrix_rows(f.matrix()),
            c: matrix_rows(f.covariance()),
            s: f.shift().iter().copied().collect(),
        }
    }

    pub fn to_morphism(&self, tol: f64) -> Result<GaussMorphism, CliError> {
        if self.kind != "gauss" {
            return Err(CliError::Parse(format!("unknown kind {:?}", self.kind)));
        }
        let m = matrix_from_rows(&self.m, self.cod, self.dom, "M")?;
        let c = matrix_from_rows(&self.c, self.cod, self.cod, "C")?;
        if self.s.len() != self.cod {
            return Err(CliError::Parse(format!("s must have length {}", self.cod)));
        }
        GaussMorphism::new(m, c, DVector::from_column_slice(&self.s), tol).map_err(CliError::from_load)
    }
}

/// Parses a kernel of a known semiring.
pub fn parse_kernel<S: Semiring>(text: &str) -> Result<Kernel<S>, CliError> {
    let file: KernelFile = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    file.to_kernel()
}

/// Parses either file kind; Gaussian covariances are checked at `tol`.
pub fn parse_morphism(text: &str, tol: f64) -> Result<Morphism, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    if value.get("kind").is_some() {
        let file: GaussFile = serde_json::from_value(value).map_err(|e| CliError::Parse(e.to_string()))?;
        Ok(Morphism::Gauss(file.to_morphism(tol)?))
    } else {
        let file: KernelFile = serde_json::from_value(value).map_err(|e| CliError::Parse(e.to_string()))?;
        Ok(Morphism::Matrix(file.to_any()?))
    }
}

pub fn kernel_value<S: Semiring>(k: &Kernel<S>) -> Value {
    serde_json::to_value(KernelFile::from_kernel(k)).expect("kernel files serialize")
}

pub fn gauss_value(f: &GaussMorphism) -> Value {
    serde_json::to_value(GaussFile::from_morphism(f)).expect("gauss files serialize")
}

pub fn any_value(k: &AnyKernel) -> Value {
    match k {
        AnyKernel::Prob(k) => kernel_value(k),
        AnyKernel::Signed(k) => kernel_value(k),
        AnyKernel::Bool(k) => kernel_value(k),
        AnyKernel::Fuzzy(k) => kernel_value(k),
    }
}

pub fn morphism_value(f: &Morphism) -> Value {
    match f {
        Morphism::Matrix(k) => any_value(k),
        Morphism::Gauss(g) => gauss_value(g),
    }
}

/// Compact JSON with a trailing newline.
pub fn canonical<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string(doc).expect("documents serialize");
    text.push('\n');
    text
}
