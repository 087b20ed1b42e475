//! Test-only fixed-point numeric oracle: cos(π·m/n) to 80 decimal digits
//! using nothing but big-integer arithmetic (Machin's formula for π, Taylor
//! series for cosine). Completely independent of the library's
//! number-theoretic decision procedures, which it cross-checks to 60
//! digits.

use num_bigint::BigInt;

pub const DIGITS: u32 = 80;

pub fn scale() -> BigInt {
    BigInt::from(10).pow(DIGITS)
}

fn arctan_inv(x: u64, f: &BigInt) -> BigInt {
    let xx = BigInt::from(x) * BigInt::from(x);
    let mut power = BigInt::from(x);
    let mut k: u64 = 0;
    let mut sum = BigInt::from(0);
    loop {
        let term = f / (&power * BigInt::from(2 * k + 1));
        if term == BigInt::from(0) {
            break;
        }
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        power *= &xx;
        k += 1;
    }
    sum
}

pub fn pi_fixed() -> BigInt {
    let f = scale();
    BigInt::from(16) * arctan_inv(5, &f) - BigInt::from(4) * arctan_inv(239, &f)
}

/// cos(x) for fixed-point `x` in `[0, π·F]`.
pub fn cos_fixed(x: &BigInt, f: &BigInt) -> BigInt {
    let x2 = (x * x) / f;
    let mut term = f.clone();
    let mut sum = f.clone();
    let mut k: u64 = 1;
    loop {
        term = &term * &x2 / f / BigInt::from((2 * k - 1) * (2 * k));
        if term == BigInt::from(0) {
            break;
        }
        if k % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        k += 1;
    }
    sum
}

/// cos(π·m/n) in fixed point, for any integer `m` and `n >= 1`.
pub fn cos_of_angle(m: i64, n: i64, pi: &BigInt, f: &BigInt) -> BigInt {
    let mut m = m.rem_euclid(2 * n);
    if m > n {
        m = 2 * n - m;
    }
    let x = pi * BigInt::from(m) / BigInt::from(n);
    cos_fixed(&x, f)
}

/// The five rational cosine candidates in fixed point: (2·value, fixed).
pub fn candidates(f: &BigInt) -> Vec<(i64, i64, BigInt)> {
    vec![
        (1, 1, f.clone()),
        (1, 2, f / BigInt::from(2)),
        (0, 1, BigInt::from(0)),
        (-1, 2, -(f / BigInt::from(2))),
        (-1, 1, -f.clone()),
    ]
}

/// Which candidate (if any) the numeric value matches to 60 digits.
pub fn numeric_rational_verdict(value: &BigInt, f: &BigInt) -> Option<(i64, i64)> {
    let tol = f / BigInt::from(10).pow(60);
    candidates(f)
        .into_iter()
        .find(|(_, _, c)| (value - c).magnitude() < tol.magnitude())
        .map(|(p, q, _)| (p, q))
}
