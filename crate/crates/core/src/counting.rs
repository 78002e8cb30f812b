//! Exact enumeration formulas for forests of rooted uniform hypertrees and
//! for uniform hypercycles.
//!
//! Everything is evaluated as a big rational and then checked to be an
//! integer; nothing here touches floating point.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::shape::ForestShape;

pub type ExactCount = BigUint;
pub type ExactRational = BigRational;

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    // Each partial product is itself a binomial coefficient, so the division is exact.
    (0..r).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn pow(base: u64, exp: u64) -> BigUint {
    num_traits::pow(BigUint::from(base), exp as usize)
}

fn ratio(num: BigUint, den: BigUint) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn integral(value: ExactRational, what: &str) -> Result<ExactCount> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::Invariant(format!("{what} evaluated to {value}, not a non-negative integer")));
    }
    Ok(value.to_integer().to_biguint().expect("non-negative"))
}

/// Number of ways to split `m` labelled items into `s` unordered blocks of
/// size `block`: `m! / (s! · block!^s)`.
pub fn partition_count(m: u64, s: u64, block: u64) -> BigUint {
    if s * block != m {
        return BigUint::zero();
    }
    factorial(m) / (factorial(s) * num_traits::pow(factorial(block), s as usize))
}

/// Forests of `k + 1` rooted `b`-uniform hypertrees with `s` hyperedges:
/// `n!/k! · n^{s−1} / (s! · (b−1)!^s)` with `n = s(b−1) + k + 1`.
pub fn count_forests(b: u32, s: u32, k: u32) -> Result<ExactCount> {
    let shape = ForestShape::new(b, s, k)?;
    if s == 0 {
        return Ok(BigUint::one());
    }
    let n = u64::from(shape.n());
    let (s, k, b) = (u64::from(s), u64::from(k), u64::from(b));
    let num = factorial(n) * pow(n, s - 1);
    let den = factorial(k) * factorial(s) * num_traits::pow(factorial(b - 1), s as usize);
    integral(ratio(num, den), "forest count")
}

/// The same count read off the code space, one factor per component of
/// the 4-tuple: `C(n, k+1) · (k+1) · |partitions| · n^{s−1}`.
pub fn code_space_cardinality(shape: ForestShape) -> ExactCount {
    let n = u64::from(shape.n());
    let roots = u64::from(shape.root_count());
    let s = u64::from(shape.s());
    if s == 0 {
        return binomial(n, roots);
    }
    binomial(n, roots)
        * roots
        * partition_count(n - roots, s, u64::from(shape.b() - 1))
        * pow(n, s - 1)
}

/// Rooted `b`-uniform hypertrees with `s ≥ 1` hyperedges:
/// `(n−1)! · n^s / (s! · (b−1)!^s)` with `n = s(b−1) + 1`.
pub fn count_rooted_hypertrees(b: u32, s: u32) -> Result<ExactCount> {
    if s == 0 {
        return Err(Error::range("a hypertree count needs s ≥ 1"));
    }
    let shape = ForestShape::new(b, s, 0)?;
    let n = u64::from(shape.n());
    let (s, b) = (u64::from(s), u64::from(b));
    let num = factorial(n - 1) * pow(n, s);
    let den = factorial(s) * num_traits::pow(factorial(b - 1), s as usize);
    integral(ratio(num, den), "hypertree count")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HypercycleForm {
    /// `… · 1/(s·(s−2)!)`
    Closed,
    /// `… · Σ_{j=2}^{s} j/(s^j·(s−j)!)`
    Sum,
}

fn hypercycle_vertices(b: u32, s: u32) -> Result<u64> {
    if b < 2 {
        return Err(Error::range(format!("uniformity b={b} must be at least 2")));
    }
    if s < 2 {
        return Err(Error::range(format!("a hypercycle needs s ≥ 2, got s={s}")));
    }
    Ok(u64::from(s) * u64::from(b - 1))
}

/// The hypercycle count with `s` hyperedges on `n = s(b−1)` vertices, in
/// either of its two stated forms. The forms share no intermediate values.
pub fn count_hypercycles(b: u32, s: u32, form: HypercycleForm) -> Result<ExactCount> {
    let n = hypercycle_vertices(b, s)?;
    let (s, b) = (u64::from(s), u64::from(b));
    let value = match form {
        HypercycleForm::Closed => {
            let num = (b - 1) * factorial(n) * pow(n, s - 1);
            let den = 2u32 * num_traits::pow(factorial(b - 1), s as usize) * s * factorial(s - 2);
            ratio(num, den)
        }
        HypercycleForm::Sum => {
            let prefactor = ratio(
                (b - 1) * factorial(n) * pow(n, s - 1),
                2u32 * num_traits::pow(factorial(b - 1), s as usize),
            );
            prefactor * cycle_length_sum(s)
        }
    };
    integral(value, "hypercycle count")
}

/// Hypercycles whose cycle has length `j`, as the product of the forest
/// factor and the smooth-cycle factor.
pub fn hypercycle_class_count(b: u32, s: u32, j: u32) -> Result<ExactCount> {
    let n = hypercycle_vertices(b, s)?;
    if !(2..=s).contains(&j) {
        return Err(Error::range(format!("cycle length j={j} outside [2, s={s}]")));
    }
    let (s, b, j) = (u64::from(s), u64::from(b), u64::from(j));
    let on_cycle = j * (b - 1);
    let off_cycle = (s - j) * (b - 1);
    let forests = ratio(
        binomial(n, on_cycle) * on_cycle * factorial(off_cycle),
        factorial(s - j) * num_traits::pow(factorial(b - 1), (s - j) as usize),
    );
    let cycles = ratio(factorial(on_cycle), 2u32 * num_traits::pow(factorial(b - 2), j as usize));
    integral(forests * cycles, "hypercycle class count")
}

/// Every cycle-length class for `(b, s)`, keyed by `j`.
pub fn hypercycle_classes(b: u32, s: u32) -> Result<BTreeMap<u32, ExactCount>> {
    hypercycle_vertices(b, s)?;
    (2..=s).map(|j| Ok((j, hypercycle_class_count(b, s, j)?))).collect()
}

fn cycle_length_sum(s: u64) -> ExactRational {
    (2..=s).fold(BigRational::zero(), |acc, j| {
        acc + ratio(BigUint::from(j), pow(s, j) * factorial(s - j))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSumIdentity {
    /// `Σ_{j=2}^{s} j/(s^j·(s−j)!)`
    pub lhs: ExactRational,
    /// `1/(s·(s−2)!)`
    pub rhs: ExactRational,
    pub equal: bool,
}

pub fn cycle_sum_identity(s: u32) -> Result<CycleSumIdentity> {
    if s < 2 {
        return Err(Error::range(format!("the cycle sum needs s ≥ 2, got s={s}")));
    }
    let s = u64::from(s);
    let lhs = cycle_length_sum(s);
    let rhs = ratio(BigUint::one(), s * factorial(s - 2));
    let equal = lhs == rhs;
    Ok(CycleSumIdentity { lhs, rhs, equal })
}

/// `gcd`-reduced check used by tests: the rational is in lowest terms.
pub fn is_reduced(value: &ExactRational) -> bool {
    value.numer().gcd(value.denom()).is_one() && value.denom().is_positive()
}
