//! Exact number theory: which rational angles have rational cosines, which
//! cosines admit rational sine partners, dyadic-lattice membership, and the
//! definability of combined orientations. No floating point appears in any
//! decision path; every square test is exact integer arithmetic.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::config::AmbientConfig;
use crate::error::{Error, Result};

pub fn big_ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Exact square root of a non-negative rational, if it is one.
pub fn rational_sqrt_exact(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(BigRational::new(
            BigInt::from(sn),
            BigInt::from(sd),
        ))
    } else {
        None
    }
}

/// Render `√r` exactly: a fraction when `r` is a perfect square, else
/// `√(p/q)`, simplifying to `√p/s` when the denominator is square.
pub fn sqrt_display(r: &BigRational) -> String {
    if let Some(s) = rational_sqrt_exact(r) {
        return s.to_string();
    }
    let den = r.denom().magnitude();
    let sd = den.sqrt();
    if &(&sd * &sd) == den {
        format!("√{}/{}", r.numer(), sd)
    } else {
        format!("√({})", r)
    }
}

/// An angle `θ = π·num/den`, stored reduced with `den >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalAngle {
    num: i64,
    den: i64,
}

impl RationalAngle {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Unsupported("angle denominator zero".into()));
        }
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = num.abs().gcd(&den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        Ok(RationalAngle { num, den })
    }

    pub fn zero() -> Self {
        RationalAngle { num: 0, den: 1 }
    }

    pub fn pi() -> Self {
        RationalAngle { num: 1, den: 1 }
    }

    #[inline]
    pub fn num(&self) -> i64 {
        self.num
    }

    #[inline]
    pub fn den(&self) -> i64 {
        self.den
    }

    /// `θ/π` as a rational.
    pub fn over_pi(&self) -> BigRational {
        big_ratio(self.num, self.den)
    }

    /// Reduce mod 2π: numerator into `[0, 2·den)`.
    pub fn normalized(&self) -> RationalAngle {
        let num = self.num.rem_euclid(2 * self.den);
        RationalAngle::new(num, self.den).expect("den > 0")
    }

    /// Fold into `[0, π]` using `cos(2π - θ) = cos θ`; the cosine only
    /// depends on this folded angle.
    pub fn folded(&self) -> RationalAngle {
        let n = self.normalized();
        if n.num > n.den {
            RationalAngle::new(2 * n.den - n.num, n.den).expect("den > 0")
        } else {
            n
        }
    }

    pub fn radians_f64(&self) -> f64 {
        std::f64::consts::PI * (self.num as f64) / (self.den as f64)
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.num, self.den) {
            (0, _) => write!(f, "0"),
            (1, 1) => write!(f, "π"),
            (-1, 1) => write!(f, "-π"),
            (n, 1) => write!(f, "{n}π"),
            (1, d) => write!(f, "π/{d}"),
            (-1, d) => write!(f, "-π/{d}"),
            (n, d) => write!(f, "{n}π/{d}"),
        }
    }
}

/// Verdict on the cosine of a rational angle. `niven_classify` only ever
/// produces the five values `0, ±1/2, ±1` in the `Rational` arm;
/// `sine_partner` reuses the type with unrestricted rational values.
#[derive(Debug, Clone, PartialEq)]
pub enum CosineClass {
    Rational(BigRational),
    Irrational,
}

/// Closed-form decision: after folding `θ = π·m/n` into `[0, π]` and
/// reducing, `cos θ` is rational exactly when the denominator is 1, 2 or 3.
pub fn niven_classify(angle: &RationalAngle) -> CosineClass {
    let f = angle.folded();
    match (f.num, f.den) {
        (0, 1) => CosineClass::Rational(big_ratio(1, 1)),
        (1, 1) => CosineClass::Rational(big_ratio(-1, 1)),
        (1, 2) => CosineClass::Rational(BigRational::zero()),
        (1, 3) => CosineClass::Rational(big_ratio(1, 2)),
        (2, 3) => CosineClass::Rational(big_ratio(-1, 2)),
        _ => CosineClass::Irrational,
    }
}

/// The five candidate rational cosines.
fn candidates() -> [BigRational; 5] {
    [
        big_ratio(1, 1),
        big_ratio(1, 2),
        BigRational::zero(),
        big_ratio(-1, 2),
        big_ratio(-1, 1),
    ]
}

/// Independent decision procedure built on the doubling orbit
/// `x_k = 2·cos(2^k θ)`, which evolves as `x -> x² - 2`.
///
/// For each candidate value `c` the orbit of `2c` is compared against the
/// exactly-known structure of the angle-doubling sequence: equal folded
/// angles force equal orbit values, distinct folded angles force distinct
/// values, and angles whose folded denominator is ≤ 3 anchor the orbit to a
/// known cosine. A candidate with denominator > 1 dies on its own: the
/// orbit denominators square at every step and grow without limit, so the
/// orbit can never close. Exactly one candidate survives when the cosine is
/// rational; none survives when it is irrational.
pub fn niven_classify_by_orbit(angle: &RationalAngle) -> CosineClass {
    let norm = angle.normalized();
    let two_den = 2 * norm.den;

    // Angle-doubling residues r_k = 2^k·m mod 2n, carried one step past the
    // first repeat.
    let mut residues = vec![norm.num % two_den];
    loop {
        let next = (residues.last().unwrap() * 2) % two_den;
        let seen = residues.contains(&next);
        residues.push(next);
        if seen {
            break;
        }
    }
    let steps = residues.len();

    // Folded angle (num, den) per step, reduced.
    let folded: Vec<(i64, i64)> = residues
        .iter()
        .map(|&r| {
            let f = RationalAngle::new(r, norm.den).expect("den > 0").folded();
            (f.num, f.den)
        })
        .collect();

    let anchor = |f: (i64, i64)| -> Option<BigInt> {
        // 2·cos at the folded angle, when the denominator pins it.
        match f {
            (0, 1) => Some(BigInt::from(2)),
            (1, 1) => Some(BigInt::from(-2)),
            (1, 2) => Some(BigInt::zero()),
            (1, 3) => Some(BigInt::one()),
            (2, 3) => Some(BigInt::from(-1)),
            _ => None,
        }
    };

    let mut survivors = Vec::new();
    for c in candidates() {
        // Orbit of 2c under x -> x² - 2; integer for all five candidates.
        let mut orbit = Vec::with_capacity(steps);
        let mut x = (&c * BigRational::from_integer(BigInt::from(2)))
            .to_integer();
        for _ in 0..steps {
            orbit.push(x.clone());
            x = &x * &x - BigInt::from(2);
        }

        let mut ok = true;
        'outer: for k in 0..steps {
            if let Some(a) = anchor(folded[k]) {
                if orbit[k] != a {
                    ok = false;
                    break;
                }
            }
            for l in (k + 1)..steps {
                let same_angle = folded[k] == folded[l];
                let same_value = orbit[k] == orbit[l];
                if same_angle != same_value {
                    ok = false;
                    break 'outer;
                }
            }
        }
        if ok {
            survivors.push(c);
        }
    }

    match survivors.len() {
        0 => CosineClass::Irrational,
        1 => CosineClass::Rational(survivors.pop().unwrap()),
        // Multiple survivors would mean the angle constraints cannot tell
        // two candidate cosines apart; the consistency suite would flag it.
        _ => CosineClass::Irrational,
    }
}

/// Reduced denominators of `x_k = 2c, x² - 2, …`: the refutation object for
/// a hypothetical rational cosine. If `2c` is not an integer, the reduced
/// denominator squares at every step (any prime dividing both `p² - 2q²`
/// and `q²` would divide `p` and `q`), so the orbit can never revisit a
/// value — yet the doubling sequence of a rational angle takes finitely
/// many values. Hence only integer `2c` survives, pinning the cosine to
/// `{0, ±1/2, ±1}`.
pub fn orbit_denominators(c: &BigRational, steps: usize) -> Vec<BigUint> {
    let mut x = c * BigRational::from_integer(BigInt::from(2));
    let two = BigRational::from_integer(BigInt::from(2));
    let mut out = Vec::with_capacity(steps);
    for _ in 0..steps {
        out.push(x.denom().magnitude().clone());
        x = &x * &x - &two;
    }
    out
}

/// Trace of the doubling orbit for reporting: `(angle, 2cos exact?)` per
/// step, where the exact value is only known at anchored angles.
pub fn orbit_trace(angle: &RationalAngle, steps: usize) -> Vec<(RationalAngle, Option<BigRational>)> {
    let norm = angle.normalized();
    let mut out = Vec::with_capacity(steps);
    let mut r = norm.num % (2 * norm.den);
    for _ in 0..steps {
        let a = RationalAngle::new(r, norm.den).expect("den > 0");
        let cos = match niven_classify(&a) {
            CosineClass::Rational(v) => Some(v),
            CosineClass::Irrational => None,
        };
        out.push((a, cos));
        r = (r * 2) % (2 * norm.den);
    }
    out
}

/// Given a rational cosine `c = p/q`, decide whether the matching sine is
/// rational: it is exactly when `q² - p²` is a perfect square, and then
/// equals `√(q²-p²)/q` (non-negative branch). For dyadic `c` strictly
/// between −1 and 1 this is never the case: a Pythagorean triple's
/// hypotenuse is odd.
pub fn sine_partner(c: &BigRational) -> Result<CosineClass> {
    if c.abs() > BigRational::one() {
        return Err(Error::CosineOutOfRange {
            value: c.to_string(),
        });
    }
    let p = c.numer();
    let q = c.denom();
    let rest: BigInt = q * q - p * p;
    let root = rest.magnitude().sqrt();
    if &(&root * &root) == rest.magnitude() {
        Ok(CosineClass::Rational(BigRational::new(
            BigInt::from(root),
            q.clone(),
        )))
    } else {
        Ok(CosineClass::Irrational)
    }
}

/// Lattice membership: `x mod 4` lies on the dyadic exponent lattice, i.e.
/// the reduced denominator is a power of two no finer than the config's
/// resolution.
pub fn is_q2_member(x: &BigRational, config: &AmbientConfig) -> bool {
    dyadic_resolution(x).is_some_and(|r| r <= config.max_resolution())
}

/// `log2` of the reduced denominator, if it is a power of two.
pub fn dyadic_resolution(x: &BigRational) -> Option<u32> {
    let den = x.denom().magnitude();
    let bits = den.bits();
    if den == &(BigUint::one() << (bits - 1)) {
        Some(bits as u32 - 1)
    } else {
        None
    }
}

/// Resolution bookkeeping for a product of two dyadic rationals: how many
/// trailing zero bits the product's numerator happened to contribute. For
/// independently-set cosines this gain is almost always small, which is why
/// products of dyadic cosines fall off the lattice; the diagnostic measures
/// it, the decision procedures never use it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DyadicGain {
    pub res_left: u32,
    pub res_right: u32,
    pub res_product: u32,
    /// `res_left + res_right - res_product`.
    pub gain: u32,
}

pub fn dyadic_product_gain(a: &BigRational, b: &BigRational) -> Option<DyadicGain> {
    let ra = dyadic_resolution(a)?;
    let rb = dyadic_resolution(b)?;
    let rp = dyadic_resolution(&(a * b))?;
    Some(DyadicGain {
        res_left: ra,
        res_right: rb,
        res_product: rp,
        gain: ra + rb - rp,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineBranch {
    /// `cos(θ + θ')`.
    Sum,
    /// `cos(θ - θ')`.
    Difference,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UndefinedReason {
    /// The surd `√((1-c₁²)(1-c₂²))` (or a `sin·sin·cos P` term) is not a
    /// rational number.
    IrrationalSurd,
    /// All terms are rational but the result leaves the dyadic lattice.
    RationalButOffLattice,
}

impl fmt::Display for UndefinedReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UndefinedReason::IrrationalSurd => write!(f, "irrational surd"),
            UndefinedReason::RationalButOffLattice => write!(f, "rational but off the lattice"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Definedness {
    Defined(BigRational),
    Undefined(UndefinedReason),
}

impl Definedness {
    pub fn is_defined(&self) -> bool {
        matches!(self, Definedness::Defined(_))
    }
}

fn check_cosine_input(c: &BigRational, config: &AmbientConfig) -> Result<()> {
    if c.abs() > BigRational::one() {
        return Err(Error::CosineOutOfRange {
            value: c.to_string(),
        });
    }
    if !is_q2_member(c, config) {
        return Err(Error::OffLattice {
            value: c.to_string(),
        });
    }
    Ok(())
}

/// Definability of `cos(θ ∓ θ')` from on-lattice cosines:
/// `c₁c₂ ± √((1-c₁²)(1-c₂²))` is Defined only when the surd is a rational
/// square and the total stays on the lattice.
pub fn combine_cosines(
    c1: &BigRational,
    c2: &BigRational,
    branch: CombineBranch,
    config: &AmbientConfig,
) -> Result<Definedness> {
    check_cosine_input(c1, config)?;
    check_cosine_input(c2, config)?;
    let one = BigRational::one();
    let surd_sq = (&one - c1 * c1) * (&one - c2 * c2);
    let Some(s) = rational_sqrt_exact(&surd_sq) else {
        return Ok(Definedness::Undefined(UndefinedReason::IrrationalSurd));
    };
    let value = match branch {
        CombineBranch::Difference => c1 * c2 + s,
        CombineBranch::Sum => c1 * c2 - s,
    };
    if is_q2_member(&value, config) {
        Ok(Definedness::Defined(value))
    } else {
        Ok(Definedness::Undefined(UndefinedReason::RationalButOffLattice))
    }
}

/// Exact representation of `cos P` when it is a rational or a pure quadratic
/// surd `r·√d`; everything else is unrepresentable in single-surd
/// arithmetic.
enum ExactCos {
    Rational(BigRational),
    PureSurd { coeff: BigRational, radicand: u32 },
    Other,
}

fn exact_cos(p: &RationalAngle) -> ExactCos {
    if let CosineClass::Rational(v) = niven_classify(p) {
        return ExactCos::Rational(v);
    }
    let f = p.folded();
    match (f.num, f.den) {
        (1, 4) => ExactCos::PureSurd {
            coeff: big_ratio(1, 2),
            radicand: 2,
        },
        (3, 4) => ExactCos::PureSurd {
            coeff: big_ratio(-1, 2),
            radicand: 2,
        },
        (1, 6) => ExactCos::PureSurd {
            coeff: big_ratio(1, 2),
            radicand: 3,
        },
        (5, 6) => ExactCos::PureSurd {
            coeff: big_ratio(-1, 2),
            radicand: 3,
        },
        _ => ExactCos::Other,
    }
}

/// The spherical cosine rule `cos θ'' = cos θ cos θ' + sin θ sin θ' cos P`
/// as a definability test. The sine product is a single surd `√((1-c₁²)(1-c₂²))`;
/// it combines with `cos P` into a rational only when the radicands match,
/// otherwise the third side is undefined. `P = π` degenerates to the sum
/// branch of `combine_cosines`.
pub fn third_side_cosine(
    c1: &BigRational,
    c2: &BigRational,
    p: &RationalAngle,
    config: &AmbientConfig,
) -> Result<Definedness> {
    check_cosine_input(c1, config)?;
    check_cosine_input(c2, config)?;
    let one = BigRational::one();
    let surd_sq = (&one - c1 * c1) * (&one - c2 * c2);

    let term = if surd_sq.is_zero() {
        Some(BigRational::zero())
    } else {
        match exact_cos(p) {
            ExactCos::Rational(r) => {
                if r.is_zero() {
                    Some(BigRational::zero())
                } else {
                    rational_sqrt_exact(&surd_sq).map(|s| s * r)
                }
            }
            ExactCos::PureSurd { coeff, radicand } => {
                // sinθ·sinθ'·cosP = coeff·√(surd_sq·d): rational when the
                // combined radicand is square.
                let combined = &surd_sq * BigRational::from_integer(BigInt::from(radicand));
                rational_sqrt_exact(&combined).map(|s| s * coeff)
            }
            ExactCos::Other => None,
        }
    };

    let Some(term) = term else {
        return Ok(Definedness::Undefined(UndefinedReason::IrrationalSurd));
    };
    let value = c1 * c2 + term;
    if is_q2_member(&value, config) {
        Ok(Definedness::Defined(value))
    } else {
        Ok(Definedness::Undefined(UndefinedReason::RationalButOffLattice))
    }
}
