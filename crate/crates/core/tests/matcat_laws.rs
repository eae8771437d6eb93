use markov_core::matcat::{
    compose, copy, from_function, identity, random_function, random_kernel, tensor, Bool, FinSet, Fuzzy,
    Kernel, MatCat, Prob, Semiring, Signed,
};
use markov_core::{check_comonoid_laws, is_deterministic, seeded, MarkovCategory, SeededRng};
use proptest::prelude::*;
use rand::Rng;

fn object(rng: &mut SeededRng) -> FinSet {
    FinSet::range(rng.random_range(1..=4))
}

fn associativity_and_bifunctoriality<S: Semiring>(seed: u64, rounds: usize) {
    let mut rng = seeded(seed);
    for _ in 0..rounds {
        let (a, b, c, d) = (object(&mut rng), object(&mut rng), object(&mut rng), object(&mut rng));
        let f: Kernel<S> = random_kernel(&a, &b, &mut rng);
        let g: Kernel<S> = random_kernel(&b, &c, &mut rng);
        let h: Kernel<S> = random_kernel(&c, &d, &mut rng);
        assert_eq!(
            compose(&h, &compose(&g, &f).unwrap()).unwrap(),
            compose(&compose(&h, &g).unwrap(), &f).unwrap()
        );
        assert_eq!(compose(&f, &identity(&a)).unwrap(), f);
        assert_eq!(compose(&identity(&b), &f).unwrap(), f);

        let f2: Kernel<S> = random_kernel(&d, &a, &mut rng);
        let g2: Kernel<S> = random_kernel(&a, &c, &mut rng);
        let lhs = compose(&tensor(&g, &g2), &tensor(&f, &f2)).unwrap();
        let rhs = tensor(&compose(&g, &f).unwrap(), &compose(&g2, &f2).unwrap());
        assert_eq!(lhs, rhs);
        assert_eq!(tensor(&tensor(&f, &g), &h), tensor(&f, &tensor(&g, &h)));
    }
}

#[test]
fn category_laws_prob() {
    associativity_and_bifunctoriality::<Prob>(1, 500);
}

#[test]
fn category_laws_signed() {
    associativity_and_bifunctoriality::<Signed>(2, 500);
}

#[test]
fn category_laws_bool() {
    associativity_and_bifunctoriality::<Bool>(3, 500);
}

#[test]
fn category_laws_fuzzy() {
    associativity_and_bifunctoriality::<Fuzzy>(4, 500);
}

/// Every nonempty-column boolean relation `X → Y` with `|X|, |Y| ≤ 3`.
fn all_relations(nx: usize, ny: usize) -> impl Iterator<Item = Kernel<Bool>> {
    let columns: Vec<Vec<Bool>> = (1u32..(1 << ny))
        .map(|mask| (0..ny).map(|y| Bool(mask >> y & 1 == 1)).collect())
        .collect();
    let count = columns.len().pow(nx as u32);
    (0..count).map(move |mut code| {
        let chosen = (0..nx)
            .map(|_| {
                let c = columns[code % columns.len()].clone();
                code /= columns.len();
                c
            })
            .collect();
        Kernel::from_columns(FinSet::range(nx), FinSet::range(ny), chosen).unwrap()
    })
}

#[test]
fn exhaustive_boolean_relations() {
    let cat = MatCat::<Bool>::new();
    for nx in 1..=3 {
        for ny in 1..=3 {
            for r in all_relations(nx, ny) {
                let single_valued = (0..nx).all(|x| r.column(x).filter(|b| b.0).count() == 1);
                assert_eq!(is_deterministic(&cat, &r), single_valued, "{r:?}");
                assert_eq!(r.as_function().is_some(), single_valued);
                // discard is natural for every normalized relation
                assert_eq!(
                    cat.compose(&cat.discard(r.cod()), &r).unwrap(),
                    cat.discard(r.dom())
                );
            }
        }
    }
}

#[test]
fn functions_are_deterministic() {
    let mut rng = seeded(5);
    let cat = MatCat::<Prob>::new();
    for _ in 0..200 {
        let (a, b) = (object(&mut rng), object(&mut rng));
        let images: Vec<usize> = (0..a.size()).map(|_| rng.random_range(0..b.size())).collect();
        let f: Kernel<Prob> = from_function(a, b, &images).unwrap();
        assert!(is_deterministic(&cat, &f));
        assert_eq!(f.as_function(), Some(images));
    }
}

fn zero_one_scan<S: Semiring>(f: &Kernel<S>) -> bool {
    (0..f.dom().size()).all(|x| {
        let mut ones = 0;
        for v in f.column(x) {
            if *v == S::one() {
                ones += 1;
            } else if !v.is_zero() {
                return false;
            }
        }
        ones == 1
    })
}

fn determinism_matches_scan<S: Semiring>(seed: u64) {
    let cat = MatCat::<S>::new();
    let mut rng = seeded(seed);
    for i in 0..300 {
        let (a, b) = (object(&mut rng), object(&mut rng));
        let f: Kernel<S> = if i % 3 == 0 {
            random_function(&a, &b, &mut rng)
        } else {
            random_kernel(&a, &b, &mut rng)
        };
        assert_eq!(is_deterministic(&cat, &f), zero_one_scan(&f), "{f:?}");
    }
}

#[test]
fn determinism_is_the_zero_one_scan() {
    determinism_matches_scan::<Prob>(6);
    determinism_matches_scan::<Bool>(7);
}

#[test]
fn copy_is_deterministic_everywhere() {
    for n in 1..=4 {
        let x = FinSet::range(n);
        assert!(is_deterministic(&MatCat::<Prob>::new(), &copy::<Prob>(&x)));
        assert!(is_deterministic(&MatCat::<Signed>::new(), &copy::<Signed>(&x)));
        assert!(is_deterministic(&MatCat::<Bool>::new(), &copy::<Bool>(&x)));
        assert!(is_deterministic(&MatCat::<Fuzzy>::new(), &copy::<Fuzzy>(&x)));
    }
}

#[test]
fn comonoid_laws_on_multi_factor_objects() {
    let objects = vec![
        FinSet::range(2),
        FinSet::of(&["a", "b", "c"]),
        FinSet::range(2).tensor(&FinSet::range(2)),
    ];
    let sampler = markov_core::matcat::KernelSampler::default();
    assert!(check_comonoid_laws(&MatCat::<Prob>::new(), &objects, &sampler, 20, 8).unwrap().passed());
    assert!(check_comonoid_laws(&MatCat::<Fuzzy>::new(), &objects, &sampler, 20, 9).unwrap().passed());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prop_composition_is_associative(seed in any::<u64>(), sizes in prop::array::uniform4(1usize..=4)) {
        let mut rng = seeded(seed);
        let [a, b, c, d] = sizes.map(FinSet::range);
        let f: Kernel<Prob> = random_kernel(&a, &b, &mut rng);
        let g: Kernel<Prob> = random_kernel(&b, &c, &mut rng);
        let h: Kernel<Prob> = random_kernel(&c, &d, &mut rng);
        prop_assert_eq!(
            compose(&h, &compose(&g, &f).unwrap()).unwrap(),
            compose(&compose(&h, &g).unwrap(), &f).unwrap()
        );
    }

    #[test]
    fn prop_swap_is_natural(seed in any::<u64>(), sizes in prop::array::uniform4(1usize..=3)) {
        let cat = MatCat::<Signed>::new();
        let mut rng = seeded(seed);
        let [a, b, c, d] = sizes.map(FinSet::range);
        let f: Kernel<Signed> = random_kernel(&a, &b, &mut rng);
        let g: Kernel<Signed> = random_kernel(&c, &d, &mut rng);
        let lhs = cat.compose(&cat.swap(&b, &d), &tensor(&f, &g)).unwrap();
        let rhs = cat.compose(&tensor(&g, &f), &cat.swap(&a, &c)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn prop_kernels_stay_normalized(seed in any::<u64>(), sizes in prop::array::uniform3(1usize..=5)) {
        let mut rng = seeded(seed);
        let [a, b, c] = sizes.map(FinSet::range);
        let f: Kernel<Fuzzy> = random_kernel(&a, &b, &mut rng);
        let g: Kernel<Fuzzy> = random_kernel(&b, &c, &mut rng);
        prop_assert!(compose(&g, &f).unwrap().validate().is_ok());
    }
}
