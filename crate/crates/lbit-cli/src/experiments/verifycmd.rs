//! Render the invariant suites as a report: one row per check, PASS/FAIL
//! with witnesses.

use lbit::verify;
use lbit::{AmbientConfig, Result};

use crate::report::Report;

pub fn run(n_tot: u32, seed: u64, samples: u64) -> Result<(Report, bool)> {
    let config = AmbientConfig::new(n_tot)?;
    let outcomes = verify::run_all(&config, samples, seed)?;

    let mut report = Report::new("verify", n_tot, seed, samples);
    let mut all_passed = true;
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        let note = match &o.witness {
            Some(w) => format!("{status}: {} — witness: {w}", o.detail),
            None => format!("{status}: {}", o.detail),
        };
        report.note("checks", &o.name, note);
        all_passed &= o.passed;
    }
    report.note(
        "summary",
        "result",
        if all_passed {
            format!("all {} checks passed", outcomes.len())
        } else {
            let failed: Vec<&str> = outcomes
                .iter()
                .filter(|o| !o.passed)
                .map(|o| o.name.as_str())
                .collect();
            format!("FAILED: {}", failed.join(", "))
        },
    );
    Ok((report, all_passed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_report_lists_every_check() {
        let (report, ok) = run(2, 0, 5000).unwrap();
        assert!(ok);
        let names: Vec<&str> = report
            .rows
            .iter()
            .filter(|r| r.section == "checks")
            .map(|r| r.name.as_str())
            .collect();
        for expected in [
            "square_roots",
            "quaternion_triples",
            "frequency_law",
            "exponent_additivity",
            "epr_agreement",
            "dispersion_bound",
            "celestial_roundtrip",
            "niven_consistency",
            "lattice_cardinality",
        ] {
            assert!(names.contains(&expected), "missing check {expected}");
        }
    }
}
