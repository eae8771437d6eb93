//! Scalar semirings for the matrix backends.
//!
//! Every semiring here is commutative, and column normalization is uniformly
//! "the semiring sum of the column equals one": ordinary sums for the two
//! rational backends, "some entry is true" for the boolean backend and
//! "the column maximum is one" for max-min fuzzy scalars.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};
use num::Signed as _;
use rand::Rng;

use crate::category::SeededRng;

pub trait Semiring: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static {
    /// Tag used in kernel files.
    const TAG: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;

    /// Whether the value lies in the semiring's admissible range.
    fn in_range(&self) -> bool {
        true
    }

    fn parse(text: &str) -> Option<Self>;

    /// A random normalized column of the given length (`len >= 1`).
    fn random_column(len: usize, rng: &mut SeededRng) -> Vec<Self>;

    fn sum<'a>(values: impl IntoIterator<Item = &'a Self>) -> Self {
        values
            .into_iter()
            .fold(Self::zero(), |acc, v| acc.add(v))
    }
}

fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => BigInt::from_str(text).ok().map(BigRational::from_integer),
    }
}

/// Random nonnegative integer weights with at least one positive, normalized.
fn random_weights(len: usize, rng: &mut SeededRng) -> Vec<BigRational> {
    assert!(len > 0, "cannot normalize an empty column");
    let mut weights: Vec<i64> = (0..len)
        .map(|_| if rng.random_bool(0.25) { 0 } else { rng.random_range(1..=6) })
        .collect();
    if weights.iter().all(|&w| w == 0) {
        weights[rng.random_range(0..len)] = 1;
    }
    let total: i64 = weights.iter().sum();
    weights
        .into_iter()
        .map(|w| BigRational::new(BigInt::from(w), BigInt::from(total)))
        .collect()
}

/// Nonnegative rationals: the FinStoch backend.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prob(BigRational);

impl Prob {
    /// Panics if `value` is negative.
    pub fn new(value: BigRational) -> Self {
        assert!(!value.is_negative(), "probabilities are nonnegative");
        Prob(value)
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Prob::new(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn into_value(self) -> BigRational {
        self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// `self / other`; panics on a zero divisor.
    pub fn div(&self, other: &Self) -> Self {
        Prob(&self.0 / &other.0)
    }
}

impl Semiring for Prob {
    const TAG: &'static str = "rational-nonneg";

    fn zero() -> Self {
        Prob(BigRational::zero())
    }
    fn one() -> Self {
        Prob(BigRational::one())
    }
    fn add(&self, other: &Self) -> Self {
        Prob(&self.0 + &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Prob(&self.0 * &other.0)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn in_range(&self) -> bool {
        !self.0.is_negative() && self.0 <= BigRational::one()
    }
    fn parse(text: &str) -> Option<Self> {
        parse_rational(text).filter(|v| !v.is_negative()).map(Prob)
    }
    fn random_column(len: usize, rng: &mut SeededRng) -> Vec<Self> {
        random_weights(len, rng).into_iter().map(Prob).collect()
    }
}

/// Signed rationals: quasi-probabilities, the FinStoch± backend.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signed(BigRational);

impl Signed {
    pub fn new(value: BigRational) -> Self {
        Signed(value)
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Signed(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl Semiring for Signed {
    const TAG: &'static str = "rational";

    fn zero() -> Self {
        Signed(BigRational::zero())
    }
    fn one() -> Self {
        Signed(BigRational::one())
    }
    fn add(&self, other: &Self) -> Self {
        Signed(&self.0 + &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Signed(&self.0 * &other.0)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn parse(text: &str) -> Option<Self> {
        parse_rational(text).map(Signed)
    }
    fn random_column(len: usize, rng: &mut SeededRng) -> Vec<Self> {
        let denom = rng.random_range(1..=4);
        let mut column: Vec<BigRational> = (0..len)
            .map(|_| BigRational::new(BigInt::from(rng.random_range(-4..=4)), BigInt::from(denom)))
            .collect();
        let partial: BigRational = column[..len - 1].iter().sum();
        column[len - 1] = BigRational::one() - partial;
        column.into_iter().map(Signed).collect()
    }
}

/// Booleans with `1 + 1 = 1`: multivalued functions (FinSetMulti).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bool(pub bool);

impl Semiring for Bool {
    const TAG: &'static str = "boolean";

    fn zero() -> Self {
        Bool(false)
    }
    fn one() -> Self {
        Bool(true)
    }
    fn add(&self, other: &Self) -> Self {
        Bool(self.0 || other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Bool(self.0 && other.0)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn parse(text: &str) -> Option<Self> {
        match text.trim() {
            "0" => Some(Bool(false)),
            "1" => Some(Bool(true)),
            _ => None,
        }
    }
    fn random_column(len: usize, rng: &mut SeededRng) -> Vec<Self> {
        let mut column: Vec<Bool> = (0..len).map(|_| Bool(rng.random_bool(0.4))).collect();
        if column.iter().all(|b| !b.0) {
            column[rng.random_range(0..len)] = Bool(true);
        }
        column
    }
}

/// Max-min scalars on `[0, 1]`, kept as exact rationals (fuzzy relations).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fuzzy(BigRational);

impl Fuzzy {
    /// Panics outside `[0, 1]`.
    pub fn new(value: BigRational) -> Self {
        assert!(
            !value.is_negative() && value <= BigRational::one(),
            "fuzzy values lie in [0, 1]"
        );
        Fuzzy(value)
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Fuzzy::new(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl Semiring for Fuzzy {
    const TAG: &'static str = "fuzzy";

    fn zero() -> Self {
        Fuzzy(BigRational::zero())
    }
    fn one() -> Self {
        Fuzzy(BigRational::one())
    }
    fn add(&self, other: &Self) -> Self {
        if self.0 >= other.0 {
            self.clone()
        } else {
            other.clone()
        }
    }
    fn mul(&self, other: &Self) -> Self {
        if self.0 <= other.0 {
            self.clone()
        } else {
            other.clone()
        }
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn in_range(&self) -> bool {
        !self.0.is_negative() && self.0 <= BigRational::one()
    }
    fn parse(text: &str) -> Option<Self> {
        parse_rational(text)
            .filter(|v| !v.is_negative() && *v <= BigRational::one())
            .map(Fuzzy)
    }
    fn random_column(len: usize, rng: &mut SeededRng) -> Vec<Self> {
        let mut column: Vec<Fuzzy> = (0..len)
            .map(|_| Fuzzy(BigRational::new(BigInt::from(rng.random_range(0..=4)), BigInt::from(4))))
            .collect();
        column[rng.random_range(0..len)] = Fuzzy::one();
        column
    }
}

macro_rules! rational_display {
    ($($t:ty),*) => {$(
        impl Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                Display::fmt(&self.0, f)
            }
        }
        impl Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                Display::fmt(&self.0, f)
            }
        }
    )*};
}

rational_display!(Prob, Signed, Fuzzy);

impl Display for Bool {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

impl Debug for Bool {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

/// Shorthand for building exact rationals in tests and examples.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
