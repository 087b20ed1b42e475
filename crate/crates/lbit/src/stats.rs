//! Statistics over co-sequences: symbol frequencies, pairwise agreement and
//! correlation, the dispersion product, and seeded sampling.
//!
//! Exact counts and Monte-Carlo estimates never share a field: a report is
//! tagged with how it was obtained and sampled reports carry their draw
//! count.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::kernels;
use crate::signperm::{CoSequence, Sign, SignAt};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    /// Every entry inspected.
    Exact,
    /// Uniform draws with replacement; `total` is the number of draws.
    Sampled,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyReport {
    pub total: u64,
    pub plus_count: u64,
    pub frequency: BigRational,
    pub mode: CountMode,
}

fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact plus-symbol frequency of a dense co-sequence.
pub fn frequency(s: &CoSequence) -> FrequencyReport {
    let total = s.len() as u64;
    let plus_count = kernels::count_plus(s.signs());
    FrequencyReport {
        total,
        plus_count,
        frequency: ratio(plus_count, total),
        mode: CountMode::Exact,
    }
}

/// Sampled plus-symbol frequency for indexed co-sequences too large to
/// materialize.
pub fn frequency_sampled<S: SignAt + Sync + ?Sized>(
    s: &S,
    samples: u64,
    seed: u64,
) -> FrequencyReport {
    let plus_count = kernels::sampled_plus_count(s, samples, seed);
    FrequencyReport {
        total: samples,
        plus_count,
        frequency: ratio(plus_count, samples),
        mode: CountMode::Sampled,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationReport {
    pub total: u64,
    pub agree_count: u64,
    pub agreement: BigRational,
    /// `2·agreement - 1`.
    pub correlation: BigRational,
    pub mode: CountMode,
}

impl CorrelationReport {
    fn from_counts(agree_count: u64, total: u64, mode: CountMode) -> Self {
        let agreement = ratio(agree_count, total);
        let correlation =
            &agreement * BigRational::from_integer(BigInt::from(2)) - BigRational::one();
        CorrelationReport {
            total,
            agree_count,
            agreement,
            correlation,
            mode,
        }
    }
}

/// Positional agreement between two co-sequences of equal length; compares
/// sign vectors only, labels are bookkeeping.
pub fn agreement(s1: &CoSequence, s2: &CoSequence) -> Result<CorrelationReport> {
    if s1.len() != s2.len() {
        return Err(Error::DimensionMismatch {
            left: s1.len() as u64,
            right: s2.len() as u64,
        });
    }
    let agree = kernels::count_agree(s1.signs(), s2.signs());
    Ok(CorrelationReport::from_counts(
        agree,
        s1.len() as u64,
        CountMode::Exact,
    ))
}

pub fn agreement_sampled<S1, S2>(
    s1: &S1,
    s2: &S2,
    samples: u64,
    seed: u64,
) -> Result<CorrelationReport>
where
    S1: SignAt + Sync + ?Sized,
    S2: SignAt + Sync + ?Sized,
{
    if s1.len_u64() != s2.len_u64() {
        return Err(Error::DimensionMismatch {
            left: s1.len_u64(),
            right: s2.len_u64(),
        });
    }
    let agree = kernels::sampled_agree_count(s1, s2, samples, seed);
    Ok(CorrelationReport::from_counts(
        agree,
        samples,
        CountMode::Sampled,
    ))
}

/// The dispersion product `Δ₁·Δ₂` where `Δ` is the population standard
/// deviation of a co-sequence mapped to `±1/2`.
///
/// With plus-frequency `p` the variance is exactly `p(1-p)`, so the product
/// is `sqrt(p₁(1-p₁)·p₂(1-p₂))` — generally irrational. The report keeps the
/// exact squares; the bound `Δ₁Δ₂ <= 1/4` is equivalent to
/// `product_squared <= 1/16`.
#[derive(Debug, Clone, PartialEq)]
pub struct DispersionReport {
    pub delta1_squared: BigRational,
    pub delta2_squared: BigRational,
    pub product_squared: BigRational,
}

impl DispersionReport {
    pub fn within_quarter_bound(&self) -> bool {
        let bound = BigRational::new(BigInt::from(1), BigInt::from(16));
        self.product_squared <= bound
    }

    /// True exactly at the symmetric point `p₁ = p₂ = 1/2`.
    pub fn at_equality_boundary(&self) -> bool {
        let bound = BigRational::new(BigInt::from(1), BigInt::from(16));
        self.product_squared == bound
    }

    /// Render `Δ₁Δ₂` exactly: a plain fraction when the square root is
    /// rational, else `√(p/q)` (with the denominator pulled out when it is a
    /// perfect square).
    pub fn product_display(&self) -> String {
        crate::rational::sqrt_display(&self.product_squared)
    }
}

fn variance_of(s: &CoSequence) -> BigRational {
    let p = frequency(s).frequency;
    &p * (BigRational::one() - &p)
}

pub fn dispersion(s1: &CoSequence, s2: &CoSequence) -> DispersionReport {
    let v1 = variance_of(s1);
    let v2 = variance_of(s2);
    let product_squared = &v1 * &v2;
    DispersionReport {
        delta1_squared: v1,
        delta2_squared: v2,
        product_squared,
    }
}

/// `n` uniform draws with replacement; deterministic for a given seed.
pub fn sample_signs<S: SignAt + ?Sized>(s: &S, n: u64, seed: u64) -> Vec<Sign> {
    kernels::sample_signs(s, n, seed)
}

/// Exact 3-sigma binomial acceptance test, entirely in rationals:
/// `(observed/n - p)² · n <= 9·p(1-p)`.
pub fn within_three_sigma(observed: u64, n: u64, p: &BigRational) -> bool {
    let phat = ratio(observed, n);
    let diff = &phat - p;
    let lhs = &diff * &diff * BigRational::from_integer(BigInt::from(n));
    let rhs = BigRational::from_integer(BigInt::from(9)) * p * (BigRational::one() - p);
    lhs <= rhs
}
