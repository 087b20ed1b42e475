//! Definability of a combined orientation: the sum/difference cosine rule
//! or the spherical triangle's third side, with exact verdicts.

use num_rational::BigRational;
use num_traits::One;

use lbit::rational::{
    combine_cosines, dyadic_product_gain, rational_sqrt_exact, third_side_cosine, CombineBranch,
    Definedness, RationalAngle,
};
use lbit::{AmbientConfig, Result};

use crate::report::Report;

pub struct DefinedArgs {
    pub cos1: BigRational,
    pub cos2: BigRational,
    pub branch: CombineBranch,
    pub included_angle: Option<RationalAngle>,
}

pub fn run(args: &DefinedArgs, n_tot: u32, seed: u64, samples: u64) -> Result<Report> {
    let config = AmbientConfig::new(n_tot)?;
    let mut report = Report::new("defined", n_tot, seed, samples);
    report.param("cos1", &args.cos1);
    report.param("cos2", &args.cos2);
    match args.included_angle {
        Some(p) => report.param("included_angle", p),
        None => report.param(
            "branch",
            match args.branch {
                CombineBranch::Sum => "sum",
                CombineBranch::Difference => "difference",
            },
        ),
    }

    report.exact("inputs", "cos θ", &args.cos1);
    report.exact("inputs", "cos θ'", &args.cos2);

    let one = BigRational::one();
    let surd_sq = (&one - &args.cos1 * &args.cos1) * (&one - &args.cos2 * &args.cos2);
    report.exact_noted(
        "surd",
        "(1-cos²θ)(1-cos²θ')",
        &surd_sq,
        match rational_sqrt_exact(&surd_sq) {
            Some(_) => "perfect rational square",
            None => "not a rational square",
        },
    );
    if let Some(gain) = dyadic_product_gain(&args.cos1, &args.cos2) {
        report.note(
            "surd",
            "dyadic diagnostic",
            format!(
                "product resolution {} from {} + {} (trailing-zero gain {})",
                gain.res_product, gain.res_left, gain.res_right, gain.gain
            ),
        );
    }

    let verdict = match args.included_angle {
        Some(p) => third_side_cosine(&args.cos1, &args.cos2, &p, &config)?,
        None => combine_cosines(&args.cos1, &args.cos2, args.branch, &config)?,
    };
    match verdict {
        Definedness::Defined(v) => {
            report.exact_noted(
                "verdict",
                "combined cosine",
                &v,
                "Defined: the combined orientation exists on the lattice",
            );
        }
        Definedness::Undefined(reason) => {
            report.note(
                "verdict",
                "combined cosine",
                format!("Undefined ({reason})"),
            );
        }
    }

    Ok(report)
}
