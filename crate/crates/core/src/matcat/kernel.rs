use std::collections::HashMap;
use std::fmt;

use super::finset::FinSet;
use super::semiring::Semiring;
use crate::error::{Error, Result};

/// A column-normalized matrix over a semiring: entry `(y, x)` is `f(y|x)`,
/// columns are indexed by the domain and rows by the codomain.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Kernel<S> {
    dom: FinSet,
    cod: FinSet,
    /// Row-major, `cod.size()` rows of `dom.size()` entries.
    entries: Vec<S>,
}

impl<S: Semiring> Kernel<S> {
    /// Builds a kernel from its rows (one per codomain element), checking the
    /// shape, the value range and column normalization.
    pub fn new(dom: FinSet, cod: FinSet, rows: Vec<Vec<S>>) -> Result<Self> {
        if rows.len() != cod.size() {
            return Err(Error::DimensionMismatch {
                expected: cod.size(),
                found: rows.len(),
            });
        }
        let mut entries = Vec::with_capacity(cod.size() * dom.size());
        for row in rows {
            if row.len() != dom.size() {
                return Err(Error::DimensionMismatch {
                    expected: dom.size(),
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Self::from_entries(dom, cod, entries)
    }

    /// Builds a kernel from its columns (one per domain element).
    pub fn from_columns(dom: FinSet, cod: FinSet, columns: Vec<Vec<S>>) -> Result<Self> {
        if columns.len() != dom.size() {
            return Err(Error::DimensionMismatch {
                expected: dom.size(),
                found: columns.len(),
            });
        }
        for column in &columns {
            if column.len() != cod.size() {
                return Err(Error::DimensionMismatch {
                    expected: cod.size(),
                    found: column.len(),
                });
            }
        }
        let (nx, ny) = (dom.size(), cod.size());
        let entries = (0..ny * nx)
            .map(|i| columns[i % nx][i / nx].clone())
            .collect();
        Self::from_entries(dom, cod, entries)
    }

    /// A distribution `I → cod`.
    pub fn state(cod: FinSet, weights: Vec<S>) -> Result<Self> {
        Self::from_columns(FinSet::unit(), cod, vec![weights])
    }

    pub fn from_fn(dom: FinSet, cod: FinSet, f: impl Fn(usize, usize) -> S) -> Result<Self> {
        let nx = dom.size();
        let entries = (0..cod.size() * nx).map(|i| f(i / nx, i % nx)).collect();
        Self::from_entries(dom, cod, entries)
    }

    fn from_entries(dom: FinSet, cod: FinSet, entries: Vec<S>) -> Result<Self> {
        let k = Kernel { dom, cod, entries };
        k.validate()?;
        Ok(k)
    }

    /// Used by operations that preserve normalization by construction.
    pub(crate) fn from_raw(dom: FinSet, cod: FinSet, entries: Vec<S>) -> Self {
        debug_assert_eq!(entries.len(), dom.size() * cod.size());
        let k = Kernel { dom, cod, entries };
        debug_assert!(k.validate().is_ok(), "operation broke normalization: {k:?}");
        k
    }

    /// Checks value ranges and that every column sums to one.
    pub fn validate(&self) -> Result<()> {
        let nx = self.dom.size();
        for (i, v) in self.entries.iter().enumerate() {
            if !v.in_range() {
                return Err(Error::InvalidEntry {
                    row: i / nx,
                    column: i % nx,
                    value: v.to_string(),
                });
            }
        }
        for x in 0..nx {
            let sum = S::sum(self.column(x));
            if sum != S::one() {
                return Err(Error::NotNormalized {
                    column: x,
                    sum: sum.to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn dom(&self) -> &FinSet {
        &self.dom
    }

    pub fn cod(&self) -> &FinSet {
        &self.cod
    }

    /// `f(y|x)`.
    pub fn get(&self, y: usize, x: usize) -> &S {
        &self.entries[y * self.dom.size() + x]
    }

    pub fn column(&self, x: usize) -> impl Iterator<Item = &S> + '_ {
        let nx = self.dom.size();
        self.entries.iter().skip(x).step_by(nx.max(1))
    }

    pub fn column_vec(&self, x: usize) -> Vec<S> {
        self.column(x).cloned().collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> + '_ {
        self.entries.chunks(self.dom.size().max(1))
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    /// Looks up `f(y|x)` by labels (single-label or per-factor tuples).
    pub fn get_by_labels(&self, y: &[&str], x: &[&str]) -> Result<&S> {
        Ok(self.get(self.cod.index_of(y)?, self.dom.index_of(x)?))
    }

    /// When every column is a point mass at one, the underlying function as
    /// the image index of each domain element.
    pub fn as_function(&self) -> Option<Vec<usize>> {
        (0..self.dom.size())
            .map(|x| {
                let mut hit = None;
                for (y, v) in self.column(x).enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    if *v != S::one() || hit.is_some() {
                        return None;
                    }
                    hit = Some(y);
                }
                hit
            })
            .collect()
    }

    /// Replaces the domain/codomain labels, keeping the matrix.
    pub fn relabel(&self, dom: FinSet, cod: FinSet) -> Result<Self> {
        if dom.size() != self.dom.size() || cod.size() != self.cod.size() {
            return Err(Error::TypeMismatch(format!(
                "relabeling must keep sizes: {:?} → {:?} vs {:?} → {:?}",
                self.dom, self.cod, dom, cod
            )));
        }
        Ok(Kernel {
            dom,
            cod,
            entries: self.entries.clone(),
        })
    }
}

/// `g ∘ f`, the Chapman–Kolmogorov sum `Σ_y g(z|y) f(y|x)`.
pub fn compose<S: Semiring>(g: &Kernel<S>, f: &Kernel<S>) -> Result<Kernel<S>> {
    if f.cod != g.dom {
        return Err(Error::TypeMismatch(format!(
            "cannot compose {:?} → {:?} after {:?} → {:?}",
            g.dom, g.cod, f.dom, f.cod
        )));
    }
    let (nx, ny, nz) = (f.dom.size(), f.cod.size(), g.cod.size());
    let mut out = vec![S::zero(); nz * nx];
    for y in 0..ny {
        let g_row_start = y;
        for x in 0..nx {
            let fyx = &f.entries[y * nx + x];
            if fyx.is_zero() {
                continue;
            }
            for z in 0..nz {
                let gzy = &g.entries[z * ny + g_row_start];
                if gzy.is_zero() {
                    continue;
                }
                let slot = &mut out[z * nx + x];
                *slot = slot.add(&gzy.mul(fyx));
            }
        }
    }
    Ok(Kernel::from_raw(f.dom.clone(), g.cod.clone(), out))
}

/// `(f ⊗ g)(x,y|a,b) = f(x|a) g(y|b)`.
pub fn tensor<S: Semiring>(f: &Kernel<S>, g: &Kernel<S>) -> Kernel<S> {
    let (na, nb) = (f.dom.size(), g.dom.size());
    let (nx, ny) = (f.cod.size(), g.cod.size());
    let ncol = na * nb;
    let mut out = vec![S::zero(); nx * ny * ncol];
    for x in 0..nx {
        for a in 0..na {
            let fxa = &f.entries[x * na + a];
            if fxa.is_zero() {
                continue;
            }
            for y in 0..ny {
                for b in 0..nb {
                    let gyb = &g.entries[y * nb + b];
                    if gyb.is_zero() {
                        continue;
                    }
                    out[(x * ny + y) * ncol + a * nb + b] = fxa.mul(gyb);
                }
            }
        }
    }
    Kernel::from_raw(f.dom.tensor(&g.dom), f.cod.tensor(&g.cod), out)
}

/// 0/1 kernel of a function given by the image index of each domain element.
pub fn from_function<S: Semiring>(dom: FinSet, cod: FinSet, images: &[usize]) -> Result<Kernel<S>> {
    if images.len() != dom.size() {
        return Err(Error::DimensionMismatch {
            expected: dom.size(),
            found: images.len(),
        });
    }
    if let Some(&bad) = images.iter().find(|&&y| y >= cod.size()) {
        return Err(Error::UnknownLabel(format!("codomain index {bad}")));
    }
    let nx = dom.size();
    let mut entries = vec![S::zero(); cod.size() * nx];
    for (x, &y) in images.iter().enumerate() {
        entries[y * nx + x] = S::one();
    }
    Ok(Kernel::from_raw(dom, cod, entries))
}

/// 0/1 kernel of a function given on element labels (see [`FinSet::label`]).
pub fn from_label_map<S: Semiring>(
    dom: FinSet,
    cod: FinSet,
    map: impl Fn(&str) -> String,
) -> Result<Kernel<S>> {
    let lookup: HashMap<String, usize> = (0..cod.size()).map(|y| (cod.label(y), y)).collect();
    let images = (0..dom.size())
        .map(|x| {
            let image = map(&dom.label(x));
            lookup.get(&image).copied().ok_or(Error::UnknownLabel(image))
        })
        .collect::<Result<Vec<_>>>()?;
    from_function(dom, cod, &images)
}

pub fn identity<S: Semiring>(x: &FinSet) -> Kernel<S> {
    let images: Vec<usize> = (0..x.size()).collect();
    from_function(x.clone(), x.clone(), &images).expect("identity is a function")
}

pub fn copy<S: Semiring>(x: &FinSet) -> Kernel<S> {
    let n = x.size();
    let images: Vec<usize> = (0..n).map(|i| i * n + i).collect();
    from_function(x.clone(), x.tensor(x), &images).expect("copy is a function")
}

pub fn discard<S: Semiring>(x: &FinSet) -> Kernel<S> {
    from_function(x.clone(), FinSet::unit(), &vec![0; x.size()]).expect("discard is a function")
}

/// `X ⊗ Y → Y ⊗ X`.
pub fn swap<S: Semiring>(x: &FinSet, y: &FinSet) -> Kernel<S> {
    let (nx, ny) = (x.size(), y.size());
    let images: Vec<usize> = (0..nx * ny).map(|i| (i % ny) * nx + i / ny).collect();
    from_function(x.tensor(y), y.tensor(x), &images).expect("swap is a function")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    Copy,
    Discard,
    Swap,
    Identity,
}

/// Structure morphisms by kind; `Swap` takes two objects, the rest one.
pub fn structure<S: Semiring>(kind: StructureKind, objects: &[&FinSet]) -> Result<Kernel<S>> {
    let expect = |n: usize| {
        if objects.len() == n {
            Ok(())
        } else {
            Err(Error::TypeMismatch(format!(
                "{kind:?} takes {n} object(s), got {}",
                objects.len()
            )))
        }
    };
    match kind {
        StructureKind::Copy => expect(1).map(|_| copy(objects[0])),
        StructureKind::Discard => expect(1).map(|_| discard(objects[0])),
        StructureKind::Identity => expect(1).map(|_| identity(objects[0])),
        StructureKind::Swap => expect(2).map(|_| swap(objects[0], objects[1])),
    }
}

/// Keeps the listed output factors in the listed order, summing out the rest.
/// Indices must be distinct.
pub fn project<S: Semiring>(f: &Kernel<S>, keep: &[usize]) -> Result<Kernel<S>> {
    let nfac = f.cod.factor_count();
    let mut seen = vec![false; nfac];
    for &i in keep {
        if i >= nfac || std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidSplit(format!(
                "invalid factor selection {keep:?} for {nfac} output factors"
            )));
        }
    }
    let cod = f.cod.select(keep)?;
    let nx = f.dom.size();
    let mut out = vec![S::zero(); cod.size() * nx];
    for y in 0..f.cod.size() {
        let coords = f.cod.coords(y);
        let kept: Vec<usize> = keep.iter().map(|&i| coords[i]).collect();
        let target = cod.index_of_coords(&kept);
        for x in 0..nx {
            let v = &f.entries[y * nx + x];
            if !v.is_zero() {
                let slot = &mut out[target * nx + x];
                *slot = slot.add(v);
            }
        }
    }
    Ok(Kernel::from_raw(f.dom.clone(), cod, out))
}

/// Marginal on a set of output factors (kept in ascending order).
pub fn marginalize<S: Semiring>(f: &Kernel<S>, keep: &[usize]) -> Result<Kernel<S>> {
    let mut sorted = keep.to_vec();
    sorted.sort_unstable();
    project(f, &sorted)
}

/// Reorders the output factors; `order` must be a permutation of the factor indices.
pub fn permute_outputs<S: Semiring>(f: &Kernel<S>, order: &[usize]) -> Result<Kernel<S>> {
    if order.len() != f.cod.factor_count() {
        return Err(Error::InvalidSplit(format!(
            "{order:?} is not a permutation of {} factors",
            f.cod.factor_count()
        )));
    }
    project(f, order)
}

/// Reorders the input factors; `order[i]` is the old factor placed at position `i`.
pub fn permute_inputs<S: Semiring>(f: &Kernel<S>, order: &[usize]) -> Result<Kernel<S>> {
    let nfac = f.dom.factor_count();
    let mut seen = vec![false; nfac];
    if order.len() != nfac || order.iter().any(|&i| i >= nfac || std::mem::replace(&mut seen[i], true)) {
        return Err(Error::InvalidSplit(format!(
            "{order:?} is not a permutation of {nfac} factors"
        )));
    }
    let dom = f.dom.select(order)?;
    let n_old = f.dom.size();
    // new column x' corresponds to old column with coords[order[i]] = new_coords[i]
    let mut old_of_new = vec![0; n_old];
    for (new_x, slot) in old_of_new.iter_mut().enumerate() {
        let new_coords = dom.coords(new_x);
        let mut old_coords = vec![0; nfac];
        for (i, &o) in order.iter().enumerate() {
            old_coords[o] = new_coords[i];
        }
        *slot = f.dom.index_of_coords(&old_coords);
    }
    let ny = f.cod.size();
    let entries = (0..ny * n_old)
        .map(|i| f.entries[(i / n_old) * n_old + old_of_new[i % n_old]].clone())
        .collect();
    Ok(Kernel::from_raw(dom, f.cod.clone(), entries))
}

impl<S: Semiring> fmt::Debug for Kernel<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Kernel<{}> {:?} → {:?}", S::TAG, self.dom, self.cod)?;
        for (y, row) in self.rows().enumerate() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  {:>8} | {}", self.cod.label(y), cells.join("  "))?;
        }
        Ok(())
    }
}
