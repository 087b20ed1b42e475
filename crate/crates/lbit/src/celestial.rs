//! The cylinder-to-sphere chart between lbit parameters `(α, J)` and
//! directions `(θ, φ)` on the celestial sphere. Directions never store `θ`
//! itself — only `cos θ` (exact rational) and the hemisphere branch — so all
//! checks stay in exact arithmetic.

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::config::AmbientConfig;
use crate::error::{Error, Result};
use crate::exponent::{CircleCoord, Q2Exponent};
use crate::rational::{is_q2_member, RationalAngle};

/// Which half of the `θ` circle the direction sits on. The map
/// `α = 1 - cos θ` is two-valued in `cos θ`, so the branch is explicit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hemisphere {
    /// `θ ∈ [0, π]`, i.e. `α ∈ [0, 2]`.
    Upper,
    /// `θ ∈ [π, 2π]`, i.e. `α ∈ [2, 4)`.
    Lower,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Direction {
    cos_theta: BigRational,
    hemisphere: Hemisphere,
    phi: RationalAngle,
}

impl Direction {
    pub fn new(cos_theta: BigRational, hemisphere: Hemisphere, phi: RationalAngle) -> Result<Self> {
        if cos_theta.abs() > BigRational::one() {
            return Err(Error::CosineOutOfRange {
                value: cos_theta.to_string(),
            });
        }
        Ok(Direction {
            cos_theta,
            hemisphere,
            phi,
        })
    }

    pub fn cos_theta(&self) -> &BigRational {
        &self.cos_theta
    }

    pub fn hemisphere(&self) -> Hemisphere {
        self.hemisphere
    }

    pub fn phi(&self) -> &RationalAngle {
        &self.phi
    }
}

/// `α = 1 - cos θ` on the upper branch, `α = 3 + cos θ` on the lower,
/// mod 4. Fails with `OffLattice` when `cos θ` is not a dyadic lattice
/// point — that failure is the counterfactual-incompleteness verdict.
pub fn alpha_from_direction(d: &Direction, config: &AmbientConfig) -> Result<Q2Exponent> {
    if !is_q2_member(&d.cos_theta, config) {
        return Err(Error::OffLattice {
            value: d.cos_theta.to_string(),
        });
    }
    let one = BigRational::one();
    let three = BigRational::from_integer(3.into());
    let alpha = match d.hemisphere {
        Hemisphere::Upper => one - &d.cos_theta,
        Hemisphere::Lower => three + &d.cos_theta,
    };
    Q2Exponent::from_rational(&alpha, config)
}

/// Exact inversion of `φ = (π/2)·(J/M)`: requires `2M·(φ/π)` to be an
/// integer in `1..=4M`. `φ = 2π` is the pole convention `J = 4M`.
pub fn coordinate_from_phi(phi: &RationalAngle, config: &AmbientConfig) -> Result<CircleCoord> {
    let m = config.circle_m() as i64;
    let num = phi.num() * 2 * m;
    let den = phi.den();
    if num % den != 0 {
        return Err(Error::NonRepresentablePhi {
            angle: format!("{}/{}", phi.num(), phi.den()),
        });
    }
    let j = num / den;
    if j < 1 || j > 4 * m {
        return Err(Error::NonRepresentablePhi {
            angle: format!("{}/{}", phi.num(), phi.den()),
        });
    }
    CircleCoord::new(j as u32, config)
}

/// The forward chart `(α, J) -> (cos θ, branch, φ)`; total on the lattice.
pub fn direction_from_lbit(
    alpha: &Q2Exponent,
    j: CircleCoord,
    config: &AmbientConfig,
) -> Direction {
    let one = BigRational::one();
    let three = BigRational::from_integer(3.into());
    let (cos_theta, hemisphere) = if alpha.on_upper_branch() {
        (one - alpha.as_rational(), Hemisphere::Upper)
    } else {
        (alpha.as_rational() - three, Hemisphere::Lower)
    };
    let phi = RationalAngle::new(j.get() as i64, 2 * config.circle_m() as i64)
        .expect("M >= 1");
    Direction {
        cos_theta,
        hemisphere,
        phi,
    }
}
