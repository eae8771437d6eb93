use markov_core::finprob::{
    as_equal, bayes_invert, ci_proc, ci_state, conditional, conditional_product, conditional_product_with,
    conditional_with, coupling_compose, disintegrate, disintegration_holds, marginal, randomness_pushback,
    recompose, Coupling, Fill, Stoch, TripleSplit,
};
use markov_core::matcat::{
    from_function, identity, marginalize, permute_inputs, random_function, random_kernel, swap, FinSet, FinStoch,
    Prob, Semiring,
};
use markov_core::{is_deterministic, seeded, MarkovCategory, SeededRng};
use proptest::prelude::*;
use rand::Rng;

fn size(rng: &mut SeededRng, max: usize) -> FinSet {
    FinSet::range(rng.random_range(1..=max))
}

fn joint(rng: &mut SeededRng, dom: &FinSet, parts: &[&FinSet]) -> Stoch {
    random_kernel(dom, &FinSet::product(parts), rng)
}

#[test]
fn conditionals_reconstruct() {
    let mut rng = seeded(100);
    for _ in 0..500 {
        let (a, x, y) = (size(&mut rng, 5), size(&mut rng, 5), size(&mut rng, 5));
        let f = joint(&mut rng, &a, &[&x, &y]);
        let cond = conditional(&f, 1).unwrap();
        assert_eq!(recompose(&marginal(&f, 1).unwrap(), &cond).unwrap(), f);
        // pointwise chain rule as an independent oracle
        for ai in 0..a.size() {
            for xi in 0..x.size() {
                let fx: Prob = Prob::sum((0..y.size()).map(|yi| f.get(xi * y.size() + yi, ai)));
                for yi in 0..y.size() {
                    let c = cond.get(yi, xi * a.size() + ai);
                    assert_eq!(c.mul(&fx), *f.get(xi * y.size() + yi, ai));
                }
            }
        }
    }
}

#[test]
fn double_conditionals_are_conditionals() {
    let mut rng = seeded(101);
    for _ in 0..200 {
        let (a, x, y, z) = (size(&mut rng, 3), size(&mut rng, 3), size(&mut rng, 3), size(&mut rng, 3));
        let f = joint(&mut rng, &a, &[&x, &y, &z]);
        // (f_{|X})_{|Y} : Y ⊗ X ⊗ A → Z, reordered to X ⊗ Y ⊗ A.
        let once = conditional(&f, 1).unwrap();
        let twice = permute_inputs(&conditional(&once, 1).unwrap(), &[1, 0, 2]).unwrap();
        assert_eq!(recompose(&marginal(&f, 2).unwrap(), &twice).unwrap(), f);
    }
}

#[test]
fn conditionals_agree_almost_surely() {
    let mut rng = seeded(102);
    for _ in 0..200 {
        let (x, y) = (size(&mut rng, 4), size(&mut rng, 4));
        let psi = joint(&mut rng, &FinSet::unit(), &[&x, &y]);
        let point = rng.random_range(0..y.size());
        let uniform = conditional_with(&psi, 1, Fill::Uniform).unwrap();
        let pointed = conditional_with(&psi, 1, Fill::Point(point)).unwrap();
        let psi_x = marginal(&psi, 1).unwrap();
        assert!(as_equal(&psi_x, &uniform, &pointed).unwrap());
    }
}

/// `ψ : I → X ⊗ W` and `φ : I → W ⊗ Y ⊗ Z` with equal `W` marginals.
fn compatible(rng: &mut SeededRng) -> (Stoch, Stoch, [FinSet; 4]) {
    let [x, w, y, z] = [size(rng, 3), size(rng, 3), size(rng, 3), size(rng, 2)];
    let cat = FinStoch::new();
    let w_state: Stoch = random_kernel(&FinSet::unit(), &w, rng);
    let x_given_w: Stoch = random_kernel(&w, &x, rng);
    let rest: Stoch = random_kernel(&w, &y.tensor(&z), rng);
    let psi = cat
        .compose(&cat.tensor(&x_given_w, &identity(&w)).unwrap(), &cat.compose(&cat.copy(&w), &w_state).unwrap())
        .unwrap();
    let phi = cat.compose(&cat.pair(&identity(&w), &rest).unwrap(), &w_state).unwrap();
    (psi, phi, [x, w, y, z])
}

#[test]
fn conditional_products_glue() {
    let mut rng = seeded(103);
    for _ in 0..200 {
        let (psi, phi, _) = compatible(&mut rng);
        let product = conditional_product(&psi, &phi, 1).unwrap();
        assert_eq!(marginalize(&product, &[0, 1]).unwrap(), psi);
        assert_eq!(marginalize(&product, &[1, 2, 3]).unwrap(), phi);
        assert!(ci_state(&product, TripleSplit::new(1, 2)).unwrap().holds());

        let other = conditional_product_with(&psi, &phi, 1, Fill::Point(0)).unwrap();
        assert_eq!(other, product);

        // Two steps: first glue the W ⊗ Y marginal, then the rest over W ⊗ Y.
        let phi_wy = marginalize(&phi, &[0, 1]).unwrap();
        let first = conditional_product(&psi, &phi_wy, 1).unwrap();
        let second = conditional_product(&first, &phi, 2).unwrap();
        assert_eq!(second, product);
    }
}

#[test]
fn mismatched_marginals_are_rejected() {
    let half = Prob::ratio(1, 2);
    let psi = markov_core::Kernel::state(FinSet::range(2), vec![half.clone(), half]).unwrap();
    let phi = markov_core::Kernel::state(FinSet::range(2), vec![Prob::ratio(1, 3), Prob::ratio(2, 3)]).unwrap();
    assert!(matches!(
        conditional_product(&psi, &phi, 1),
        Err(markov_core::Error::MarginalMismatch { .. })
    ));
}

fn random_coupling(rng: &mut SeededRng) -> (Stoch, Stoch, Coupling) {
    let (x, y) = (size(rng, 4), size(rng, 4));
    let pi: Stoch = random_kernel(&FinSet::unit(), &x, rng);
    let f: Stoch = random_kernel(&x, &y, rng);
    let c = Coupling::from_kernel(&pi, &f).unwrap();
    (pi, f, c)
}

#[test]
fn dagger_laws() {
    let cat = FinStoch::new();
    let mut rng = seeded(104);
    for _ in 0..200 {
        let (pi, f, c) = random_coupling(&mut rng);
        let id = Coupling::identity(&pi).unwrap();
        assert_eq!(id.dagger(), id);
        assert_eq!(c.dagger().dagger(), c);

        let f_dagger = bayes_invert(&pi, &f).unwrap();
        let back = bayes_invert(&cat.compose(&f, &pi).unwrap(), &f_dagger).unwrap();
        assert!(as_equal(&pi, &back, &f).unwrap());

        // identity coupling is a unit for composition
        assert_eq!(coupling_compose(&id, &c).unwrap(), c);
        assert_eq!(coupling_compose(&c, &Coupling::identity(&c.target()).unwrap()).unwrap(), c);
    }
}

#[test]
fn swaps_invert_under_the_dagger() {
    let cat = FinStoch::new();
    let mut rng = seeded(105);
    for _ in 0..100 {
        let (x, y) = (size(&mut rng, 3), size(&mut rng, 3));
        let psi = joint(&mut rng, &FinSet::unit(), &[&x, &y]);
        let sigma = swap(&x, &y);
        let inverse = bayes_invert(&psi, &sigma).unwrap();
        let pushed = cat.compose(&sigma, &psi).unwrap();
        assert!(as_equal(&pushed, &inverse, &swap(&y, &x)).unwrap());
    }
}

#[test]
fn deterministic_couplings_compose_like_functions() {
    let mut rng = seeded(106);
    for _ in 0..50 {
        let (x, y, z) = (size(&mut rng, 4), size(&mut rng, 4), size(&mut rng, 4));
        let pi: Stoch = random_kernel(&FinSet::unit(), &x, &mut rng);
        let f: Stoch = random_function(&x, &y, &mut rng);
        let g: Stoch = random_function(&y, &z, &mut rng);
        let first = Coupling::from_kernel(&pi, &f).unwrap();
        let second = Coupling::from_kernel(&first.target(), &g).unwrap();
        let gf = FinStoch::new().compose(&g, &f).unwrap();
        assert_eq!(coupling_compose(&first, &second).unwrap(), Coupling::from_kernel(&pi, &gf).unwrap());
    }
}

#[test]
fn deterministic_marginals_force_independence() {
    let cat = FinStoch::new();
    let mut rng = seeded(107);
    for _ in 0..200 {
        let (a, x, y) = (size(&mut rng, 4), size(&mut rng, 4), size(&mut rng, 4));
        let s: Stoch = random_function(&a, &x, &mut rng);
        let h: Stoch = random_kernel(&a.tensor(&x), &y, &mut rng);
        // f(x, y | a) = δ_{s(a)}(x) h(y | a, x)
        let f = markov_core::Kernel::from_fn(a.clone(), x.tensor(&y), |xy, ai| {
            let (xi, yi) = (xy / y.size(), xy % y.size());
            if s.get(xi, ai).is_zero() { Prob::zero() } else { h.get(yi, ai * x.size() + xi).clone() }
        })
        .unwrap();
        assert!(is_deterministic(&cat, &marginal(&f, 1).unwrap()));
        assert!(ci_proc(&f, 1).unwrap().holds());
    }
}

#[test]
fn pushbacks_reconstruct() {
    let mut rng = seeded(108);
    let mut done = 0;
    while done < 100 {
        let (x, y) = (size(&mut rng, 4), size(&mut rng, 4));
        if (y.size() as u128).pow(x.size() as u32) > 10_000 {
            continue;
        }
        done += 1;
        let f: Stoch = random_kernel(&x, &y, &mut rng);
        let pb = randomness_pushback(&f, 10_000).unwrap();
        assert!(pb.g.as_function().is_some());
        assert_eq!(pb.recompose().unwrap(), f);
    }
}

#[test]
fn disintegrations_reconstruct() {
    let cat = FinStoch::new();
    let mut rng = seeded(109);
    for _ in 0..100 {
        let (a, x, y) = (size(&mut rng, 3), size(&mut rng, 4), size(&mut rng, 4));
        let p: Stoch = random_kernel(&a, &x, &mut rng);
        let f: Stoch = random_kernel(&x, &y, &mut rng);
        let s = disintegrate(&p, &f).unwrap();
        assert!(disintegration_holds(&p, &f, &s).unwrap());
        // (s ⊗ id_Y) ∘ (id_A ⊗ copy_Y) ∘ (id_A ⊗ fp) ∘ copy_A = (id_X ⊗ f) ∘ copy_X ∘ p
        let fp = cat.compose(&f, &p).unwrap();
        let lhs = cat
            .chain(&[
                &cat.copy(&a),
                &cat.tensor(&identity(&a), &fp).unwrap(),
                &cat.tensor(&identity(&a), &cat.copy(&y)).unwrap(),
                &cat.tensor(&s, &identity(&y)).unwrap(),
            ])
            .unwrap();
        let rhs = cat.compose(&cat.pair(&identity(&x), &f).unwrap(), &p).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn disintegrating_identity_recovers_points() {
    let mut rng = seeded(110);
    let x = FinSet::range(3);
    let p: Stoch = random_kernel(&FinSet::unit(), &x, &mut rng);
    let s = disintegrate(&p, &identity(&x)).unwrap();
    let delta = from_function(x.clone(), x.clone(), &[0, 1, 2]).unwrap();
    assert_eq!(s.dom(), &x);
    assert!(as_equal(&p, &s, &delta).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn prop_bayes_inversion_is_two_sided(seed in any::<u64>(), nx in 1usize..=4, ny in 1usize..=4) {
        let cat = FinStoch::new();
        let mut rng = seeded(seed);
        let (x, y) = (FinSet::range(nx), FinSet::range(ny));
        let pi: Stoch = random_kernel(&FinSet::unit(), &x, &mut rng);
        let f: Stoch = random_kernel(&x, &y, &mut rng);
        let f_dagger = bayes_invert(&pi, &f).unwrap();
        let forward = cat.compose(&cat.pair(&identity(&x), &f).unwrap(), &pi).unwrap();
        let fp = cat.compose(&f, &pi).unwrap();
        let backward = cat
            .compose(&cat.swap(&y, &x), &cat.compose(&cat.pair(&identity(&y), &f_dagger).unwrap(), &fp).unwrap())
            .unwrap();
        prop_assert_eq!(forward, backward);
    }
}
