//! Classify the cosine of a rational angle: closed-form rule, independent
//! doubling-orbit route, and lattice membership of the value.

use num_traits::ToPrimitive;

use lbit::rational::{
    is_q2_member, niven_classify, niven_classify_by_orbit, orbit_trace, sine_partner,
    CosineClass, RationalAngle,
};
use lbit::{AmbientConfig, Result};

use crate::report::Report;

pub struct NivenArgs {
    pub angle: RationalAngle,
}

pub fn run(args: &NivenArgs, n_tot: u32, seed: u64, samples: u64) -> Result<Report> {
    let config = AmbientConfig::new(n_tot)?;
    let mut report = Report::new("niven", n_tot, seed, samples);
    report.param("angle", args.angle);

    let folded = args.angle.folded();
    report.note("angle", "θ", args.angle);
    report.note("angle", "folded into [0, π]", folded);

    let closed = niven_classify(&args.angle);
    let orbit = niven_classify_by_orbit(&args.angle);
    match &closed {
        CosineClass::Rational(v) => {
            report.exact_noted("classification", "cos θ", v, "rational (closed-form rule)");
            report.note(
                "classification",
                "lattice membership",
                if is_q2_member(v, &config) {
                    "cos θ is on the dyadic exponent lattice"
                } else {
                    "rational but off the dyadic lattice"
                },
            );
            if let Ok(CosineClass::Rational(s)) = sine_partner(v) {
                report.exact_noted("classification", "sin θ partner", &s, "also rational");
            } else {
                report.note("classification", "sin θ partner", "irrational");
            }
        }
        CosineClass::Irrational => {
            report.note(
                "classification",
                "cos θ",
                "irrational (denominator rule: folded denominator not in {1, 2, 3})",
            );
            report.reference(
                "classification",
                "cos θ numeric reference",
                args.angle.radians_f64().cos(),
                "reference only",
            );
        }
    }
    report.note(
        "classification",
        "doubling-orbit route",
        if orbit == closed {
            "agrees with the closed form"
        } else {
            "DISAGREES with the closed form"
        },
    );

    // The proof object: x_k = 2cos(2^k θ) under x -> x² - 2. Anchored steps
    // show their exact value.
    for (k, (angle, cos)) in orbit_trace(&args.angle, 8).into_iter().enumerate() {
        let value = match cos {
            Some(v) => format!("2cosθ = {}", v * num_rational::BigRational::from_integer(2.into())),
            None => format!(
                "≈ {:.6}",
                2.0 * angle.radians_f64().cos()
            ),
        };
        report.note(
            "doubling orbit",
            &format!("step {k}"),
            format!("angle {} -> {}", angle, value),
        );
    }
    let _ = args.angle.over_pi().to_f64();

    Ok(report)
}
