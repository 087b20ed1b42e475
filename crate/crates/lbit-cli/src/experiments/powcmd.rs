//! Inspect one fractional power: frequency law, operator properties, ket
//! correspondence and a co-sequence preview. Dense configs count exactly;
//! at n_tot = 5 the operator is evaluated row by row and the frequency is
//! sampled.

use num_rational::BigRational;

use lbit::stats::{frequency, frequency_sampled, within_three_sigma};
use lbit::{
    AmbientConfig, CircleCoord, CoSequence, Q2Exponent, Result, RootFamily, RowIndexed, Sign,
    SignAt,
};

use crate::experiments::ghz::ket_correspondence;
use crate::report::Report;

pub struct PowArgs {
    pub j: u32,
    pub alpha: BigRational,
}

struct IndexedAllPlus<'a>(&'a lbit::PowOp);

impl SignAt for IndexedAllPlus<'_> {
    fn len_u64(&self) -> u64 {
        self.0.ambient_dim()
    }

    fn sign_at(&self, r: u64) -> Sign {
        self.0.row_at(r).1
    }
}

pub fn run(args: &PowArgs, n_tot: u32, seed: u64, samples: u64) -> Result<Report> {
    let config = AmbientConfig::new(n_tot)?;
    let family = RootFamily::build(config);
    let j = CircleCoord::new(args.j, &config)?;
    let alpha = Q2Exponent::from_rational(&args.alpha, &config)?;

    let mut report = Report::new("pow", n_tot, seed, samples);
    report.param("j", args.j);
    report.param("alpha", &args.alpha);

    let two_m = 2 * config.circle_m();
    let base_name = if args.j <= two_m {
        format!("+E_{}", args.j)
    } else {
        format!("-E_{}", args.j - two_m)
    };
    report.note("operator", "circle coordinate", format!("J = {j} -> {base_name}"));
    report.note("operator", "ambient dimension", config.ambient_len());
    report.note(
        "operator",
        "exponent",
        format!("α = {alpha} (resolution 2^-{})", alpha.resolution()),
    );

    if config.dense_ok() {
        let op = family.pow(j, &alpha)?;
        report.note("operator", "unitary", op.is_unitary());
        report.note(
            "operator",
            "hermitian (i-convention)",
            format!("{} (odd integer exponents only)", op.is_hermitian()),
        );
        report.exact("frequency", "|1-α/2| predicted", &alpha.plus_frequency());

        let base = CoSequence::all_plus("a", config.ambient_len() as usize)?;
        let out = op.apply(&base)?;
        let counted = frequency(&out);
        report.exact_noted(
            "frequency",
            "counted",
            &counted.frequency,
            if counted.frequency == alpha.plus_frequency() {
                "matches the frequency law exactly"
            } else {
                "DEVIATES from the frequency law"
            },
        );
        if samples > 0 {
            let sampled = frequency_sampled(&out, samples, seed);
            report.sampled_noted(
                "frequency",
                "sampled",
                &sampled.frequency,
                samples,
                if within_three_sigma(sampled.plus_count, samples, &counted.frequency) {
                    "within 3σ of exact"
                } else {
                    "OUTSIDE 3σ of exact"
                },
            );
        }
        report.note("cosequence", "preview", out.preview(16));
    } else {
        // Indexed mode: too large to materialize; rows on demand, sampled
        // statistics only.
        let op = family.pow_indexed(j, &alpha);
        report.note(
            "operator",
            "access mode",
            "indexed (row on demand); exact counting needs n_tot <= 4",
        );
        report.exact("frequency", "|1-α/2| predicted", &alpha.plus_frequency());
        let view = IndexedAllPlus(&op);
        let draws = samples.max(1);
        let sampled = frequency_sampled(&view, draws, seed);
        report.sampled_noted(
            "frequency",
            "sampled",
            &sampled.frequency,
            draws,
            if within_three_sigma(sampled.plus_count, draws, &alpha.plus_frequency()) {
                "within 3σ of |1-α/2|"
            } else {
                "OUTSIDE 3σ of |1-α/2|"
            },
        );
        let head: Vec<String> = (0..16u64)
            .map(|r| view.sign_at(r).render("a"))
            .collect();
        report.note("cosequence", "preview", format!("({} …)", head.join(" ")));
    }

    report.note(
        "cosequence",
        "ket correspondence",
        ket_correspondence("a", &alpha.plus_frequency(), args.j, &config),
    );

    Ok(report)
}
