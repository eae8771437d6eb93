//! Seeded generators for random problem instances.
//!
//! Every generator builds its instance from randomly sampled component
//! kernels, so the structural property it advertises holds by construction.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::category::SeededRng;
use crate::finprob::Stoch;
use crate::matcat::{random_kernel, FinSet, Kernel, Prob, Semiring};
use crate::stats::{StatModel, Statistic};

/// One output variable of a [`random_network`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub size: usize,
    /// Earlier nodes this node depends on.
    pub parents: Vec<usize>,
    /// Whether the node also depends on the input.
    pub uses_input: bool,
}

impl Node {
    pub fn new(size: usize, parents: &[usize], uses_input: bool) -> Self {
        Node {
            size,
            parents: parents.to_vec(),
            uses_input,
        }
    }
}

/// A kernel `dom → ⊗ range(node.size)` that factors as the product of one
/// random conditional table per node.
///
/// Panics if a node lists a parent that is not earlier in `nodes`.
pub fn random_network(dom: &FinSet, nodes: &[Node], rng: &mut SeededRng) -> Stoch {
    let tables: Vec<Stoch> = nodes
        .iter()
        .enumerate()
        .map(|(i, node)| {
            assert!(node.parents.iter().all(|&p| p < i), "parents must precede node {i}");
            let mut parts: Vec<FinSet> = Vec::new();
            if node.uses_input {
                parts.push(dom.clone());
            }
            parts.extend(node.parents.iter().map(|&p| FinSet::range(nodes[p].size)));
            let config = FinSet::product(&parts.iter().collect::<Vec<_>>());
            random_kernel(&config, &FinSet::range(node.size), rng)
        })
        .collect();
    let ranges: Vec<FinSet> = nodes.iter().map(|n| FinSet::range(n.size)).collect();
    let cod = FinSet::product(&ranges.iter().collect::<Vec<_>>());
    Kernel::from_fn(dom.clone(), cod.clone(), |y, a| {
        let values = cod.coords(y);
        nodes.iter().zip(&tables).enumerate().fold(Prob::one(), |acc, (i, (node, table))| {
            if acc.is_zero() {
                return acc;
            }
            let mut config = 0;
            if node.uses_input {
                config = a;
            }
            for &p in &node.parents {
                config = config * nodes[p].size + values[p];
            }
            acc.mul(table.get(values[i], config))
        })
    })
    .expect("products of conditional tables are normalized")
}

/// A size in `1..=max`.
pub fn random_size(rng: &mut SeededRng, max: usize) -> usize {
    rng.random_range(1..=max)
}

/// A single-factor set of random size in `1..=max`.
pub fn random_object(rng: &mut SeededRng, max: usize) -> FinSet {
    FinSet::range(random_size(rng, max))
}

/// Column-dominant weights: the first `cod.size()` columns have a dominant
/// diagonal, so the kernel has full row rank with every row charged.
/// Requires `cod.size() <= dom.size()`.
pub fn random_complete_kernel(dom: &FinSet, cod: &FinSet, rng: &mut SeededRng) -> Stoch {
    let (nt, nv) = (dom.size(), cod.size());
    assert!(nv <= nt, "a complete kernel needs |V| <= |Θ|");
    let columns = (0..nt)
        .map(|t| {
            let mut weights: Vec<i64> = (0..nv).map(|_| rng.random_range(0..=3)).collect();
            if t < nv {
                weights[t] = weights.iter().sum::<i64>() + 1;
            } else if weights.iter().all(|&w| w == 0) {
                weights[rng.random_range(0..nv)] = 1;
            }
            let total: i64 = weights.iter().sum();
            weights.into_iter().map(|w| Prob::ratio(w, total)).collect()
        })
        .collect();
    Kernel::from_columns(dom.clone(), cod.clone(), columns).expect("weights are normalized")
}

/// A product-form model `p(u, v | θ) = n(u) q(v | θ)` on `U ⊗ V` together
/// with the projections onto `V` (sufficient, with complete pushforward)
/// and onto `U` (ancillary). Sizes are at most `max`.
pub fn product_model(rng: &mut SeededRng, max: usize) -> (StatModel, Statistic, Statistic) {
    let theta = random_object(rng, max);
    let u = random_object(rng, max);
    let v = FinSet::range(rng.random_range(1..=theta.size()));
    let noise_state: Stoch = random_kernel(&FinSet::unit(), &u, rng);
    let q = random_complete_kernel(&theta, &v, rng);
    let x = u.tensor(&v);
    let p = Kernel::from_fn(theta, x.clone(), |y, t| {
        let (ui, vi) = (y / v.size(), y % v.size());
        noise_state.get(ui, 0).mul(q.get(vi, t))
    })
    .expect("product of normalized columns");
    let to_v = (0..x.size()).map(|y| y % v.size()).collect::<Vec<_>>();
    let to_u = (0..x.size()).map(|y| y / v.size()).collect::<Vec<_>>();
    (
        StatModel::new(p),
        Statistic::from_images(x.clone(), v, &to_v).expect("projection"),
        Statistic::from_images(x, u, &to_u).expect("projection"),
    )
}

/// A model `p = α ∘ q` where `α : V → X` has disjoint fibers, returned with
/// the fiber statistic `X → V`, which is sufficient by construction.
pub fn sufficient_model(rng: &mut SeededRng, max_params: usize, max_sample: usize) -> (StatModel, Statistic) {
    let theta = random_object(rng, max_params);
    let x = FinSet::range(rng.random_range(1..=max_sample));
    let v = FinSet::range(rng.random_range(1..=x.size()));
    let mut images: Vec<usize> = (0..x.size()).map(|i| if i < v.size() { i } else { rng.random_range(0..v.size()) }).collect();
    images.shuffle(rng);
    let q: Stoch = random_kernel(&theta, &v, rng);
    let columns: Vec<Vec<Prob>> = (0..v.size())
        .map(|w| {
            let fiber: Vec<usize> = (0..x.size()).filter(|&e| images[e] == w).collect();
            let mut weights: Vec<i64> = fiber.iter().map(|_| rng.random_range(1..=4)).collect();
            let total: i64 = weights.iter().sum();
            let mut column = vec![Prob::zero(); x.size()];
            for (&e, w) in fiber.iter().zip(weights.drain(..)) {
                column[e] = Prob::ratio(w, total);
            }
            column
        })
        .collect();
    let alpha = Kernel::from_columns(v.clone(), x.clone(), columns).expect("fiber weights are normalized");
    let p = crate::matcat::compose(&alpha, &q).expect("types chain");
    (StatModel::new(p), Statistic::from_images(x, v, &images).expect("images are in range"))
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation(rng: &mut SeededRng, n: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    order
}
