//! Granular-time precession: enumerate the discrete times at which the
//! precession exponent lands on the dyadic lattice. The admissible
//! frequencies `cos²(ωt/π) = |1-α/2|` are enumerated exactly over the
//! lattice; only the times themselves are emitted numerically.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use lbit::{AmbientConfig, Error, Q2Exponent, Result};

use crate::report::Report;

pub struct PrecessionArgs {
    pub omega: BigRational,
    pub t_max: Option<f64>,
}

struct Admissible {
    t: f64,
    alpha: Q2Exponent,
}

pub fn run(args: &PrecessionArgs, n_tot: u32, seed: u64, samples: u64) -> Result<Report> {
    let config = AmbientConfig::new(n_tot)?;
    let omega = args.omega.to_f64().filter(|w| *w > 0.0).ok_or_else(|| {
        Error::Unsupported(format!("omega must be a positive rational, got {}", args.omega))
    })?;
    if args.omega.is_negative() {
        return Err(Error::Unsupported("omega must be positive".into()));
    }

    // One full α-cycle lasts π²/ω; the default window is exactly one cycle.
    let period = std::f64::consts::PI * std::f64::consts::PI / omega;
    let t_max = args.t_max.unwrap_or(period);
    if t_max <= 0.0 || !t_max.is_finite() {
        return Err(Error::Unsupported(format!("t-max must be positive, got {t_max}")));
    }

    let res = config.max_resolution();
    let freq_den = 2u64 << res; // |1-α/2| lives on k / 2^(res+1)

    // Solutions of cos²(x) = v with x = ωt/π: per winding w, x0 + wπ always
    // (branch α = 2-2v), and (π-x0) + wπ when 0 < x0 < π/2 (branch
    // α = 2+2v). Everything but t itself is exact.
    let mut times: Vec<Admissible> = Vec::new();
    let eps = 1e-9 * period.max(1.0);
    for k in 0..=freq_den {
        let v = BigRational::new(BigInt::from(k), BigInt::from(freq_den));
        let vf = v.to_f64().expect("v in [0,1]");
        let x0 = vf.sqrt().clamp(0.0, 1.0).acos();
        let two_v = &v * BigRational::from_integer(2.into());
        let from_two = |offset: BigRational| -> Q2Exponent {
            Q2Exponent::from_rational(&offset, &config).expect("lattice by construction")
        };
        let alpha_down = from_two(BigRational::from_integer(2.into()) - &two_v);
        let alpha_up = from_two(BigRational::from_integer(2.into()) + &two_v);
        let mut w = 0u64;
        loop {
            let base = w as f64 * std::f64::consts::PI;
            let t1 = std::f64::consts::PI * (x0 + base) / omega;
            let t2 = std::f64::consts::PI * ((std::f64::consts::PI - x0) + base) / omega;
            if t1 > t_max + eps && t2 > t_max + eps {
                break;
            }
            if t1 <= t_max + eps {
                times.push(Admissible { t: t1, alpha: alpha_down });
            }
            if x0 > 0.0 && x0 < std::f64::consts::FRAC_PI_2 && t2 <= t_max + eps {
                times.push(Admissible { t: t2, alpha: alpha_up });
            }
            w += 1;
            if w > 1_000_000 {
                return Err(Error::Unsupported(
                    "t-max spans more than 10^6 windings; narrow the window".into(),
                ));
            }
        }
    }
    times.sort_by(|a, b| a.t.partial_cmp(&b.t).expect("finite times"));

    let mut report = Report::new("precession", n_tot, seed, samples);
    report.param("omega", &args.omega);
    report.param("t_max", format!("{t_max:.12}"));
    report.note(
        "window",
        "full period π²/ω",
        format!("{period:.12}"),
    );
    report.note(
        "window",
        "admissible times found",
        format!("{}", times.len()),
    );
    report.note(
        "window",
        "lattice frequencies in [0, 1]",
        format!("{} (each hit once per monotone half-period)", freq_den + 1),
    );

    for (k, adm) in times.iter().enumerate() {
        report.push(crate::report::Row {
            section: "admissible times".into(),
            name: format!("t_{k}"),
            exact: Some(adm.alpha.to_string()),
            approx: Some(format!("{:.12}", adm.t)),
            samples: None,
            note: Some(format!("frequency |1-α/2| = {}", adm.alpha.plus_frequency())),
        });
    }

    // The gaps are non-uniform: show the first few spacings.
    for (k, pair) in times.windows(2).take(8).enumerate() {
        report.note(
            "spacing",
            &format!("t_{} - t_{}", k + 1, k),
            format!("{:.12}", pair[1].t - pair[0].t),
        );
    }

    Ok(report)
}
