//! Dyadic exponents `α = k / 2^R mod 4` and the discrete circle coordinate.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::config::AmbientConfig;
use crate::error::{Error, Result};

/// An exponent on the dyadic lattice mod 4, stored reduced: either `res == 0`
/// and `num < 4`, or `num` is odd and `num < 2^(res+2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Q2Exponent {
    num: u64,
    res: u32,
}

impl Q2Exponent {
    fn normalized(mut num: u64, mut res: u32) -> Self {
        num &= (4u64 << res) - 1;
        while res > 0 && num % 2 == 0 {
            num /= 2;
            res -= 1;
        }
        Q2Exponent { num, res }
    }

    /// `α = num / 2^res mod 4`; fails if the reduced resolution exceeds the
    /// config's finest constructible root.
    pub fn from_parts(num: u64, res: u32, config: &AmbientConfig) -> Result<Self> {
        if res > 60 {
            return Err(Error::UndefinedExponent {
                value: format!("{num}/2^{res}"),
                r_max: config.max_resolution(),
            });
        }
        let e = Q2Exponent::normalized(num, res);
        if e.res > config.max_resolution() {
            return Err(Error::UndefinedExponent {
                value: e.to_string(),
                r_max: config.max_resolution(),
            });
        }
        Ok(e)
    }

    pub fn from_integer(k: i64, _config: &AmbientConfig) -> Self {
        Q2Exponent {
            num: k.rem_euclid(4) as u64,
            res: 0,
        }
    }

    /// Membership test plus conversion in one step: the rational is reduced
    /// mod 4 and must land on the lattice.
    pub fn from_rational(x: &BigRational, config: &AmbientConfig) -> Result<Self> {
        let four = BigRational::from_integer(BigInt::from(4));
        let mut v = x.clone();
        while v.is_negative() {
            v += &four;
        }
        while v >= four {
            v -= &four;
        }
        let den = v.denom();
        let r_max = config.max_resolution();
        let mut res = 0u32;
        let mut d = den.clone();
        let two = BigInt::from(2);
        while (&d % &two).is_zero() {
            d /= &two;
            res += 1;
        }
        if !d.is_one() || res > r_max {
            return Err(Error::UndefinedExponent {
                value: x.to_string(),
                r_max,
            });
        }
        let num = v.numer().to_u64().ok_or_else(|| Error::UndefinedExponent {
            value: x.to_string(),
            r_max,
        })?;
        Ok(Q2Exponent::normalized(num, res))
    }

    pub fn zero() -> Self {
        Q2Exponent { num: 0, res: 0 }
    }

    #[inline]
    pub fn numerator(&self) -> u64 {
        self.num
    }

    #[inline]
    pub fn resolution(&self) -> u32 {
        self.res
    }

    /// Numerator lifted to resolution `res >= self.res`.
    pub fn numerator_at(&self, res: u32) -> u64 {
        self.num << (res - self.res)
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.res == 0
    }

    pub fn is_odd_integer(&self) -> bool {
        self.res == 0 && self.num % 2 == 1
    }

    /// `α ∈ {0, 2}`: the power is the scalar `±1` and commutes with
    /// everything.
    pub fn is_scalar(&self) -> bool {
        self.res == 0 && self.num % 2 == 0
    }

    /// Lattice addition mod 4.
    pub fn add(&self, other: &Q2Exponent) -> Q2Exponent {
        let res = self.res.max(other.res);
        Q2Exponent::normalized(self.numerator_at(res) + other.numerator_at(res), res)
    }

    /// Lattice subtraction mod 4.
    pub fn sub(&self, other: &Q2Exponent) -> Q2Exponent {
        let res = self.res.max(other.res);
        let modulus = 4u64 << res;
        let a = self.numerator_at(res);
        let b = other.numerator_at(res);
        Q2Exponent::normalized((a + modulus - b) % modulus, res)
    }

    pub fn neg(&self) -> Q2Exponent {
        Q2Exponent::zero().sub(self)
    }

    pub fn as_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(1u64 << self.res))
    }

    /// The frequency law value `|1 - α/2|`, exact.
    pub fn plus_frequency(&self) -> BigRational {
        let half_den = BigInt::from(2u64 << self.res);
        let centered = BigInt::from(2u64 << self.res) - BigInt::from(self.num);
        BigRational::new(centered.abs(), half_den)
    }

    /// True on the `α ∈ [0, 2]` half of the circle (the `θ ∈ [0, π]` branch).
    pub fn on_upper_branch(&self) -> bool {
        self.num <= 2u64 << self.res
    }
}

impl fmt::Display for Q2Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.res == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, 1u64 << self.res)
        }
    }
}

/// Discrete circle coordinate `1 <= J <= 4M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CircleCoord(u32);

impl CircleCoord {
    pub fn new(j: u32, config: &AmbientConfig) -> Result<Self> {
        let max = config.circle_len();
        if j == 0 || j > max {
            return Err(Error::CoordinateOutOfRange { j, max });
        }
        Ok(CircleCoord(j))
    }

    #[inline]
    pub fn get(&self) -> u32 {
        self.0
    }

    /// `J + k·M mod 4M`, staying in `1..=4M`.
    pub fn advance(&self, k: u32, config: &AmbientConfig) -> CircleCoord {
        let len = config.circle_len();
        let j = (self.0 - 1 + k * config.circle_m()) % len + 1;
        CircleCoord(j)
    }
}

impl fmt::Display for CircleCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
