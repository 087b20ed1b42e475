//! The uniform report model every experiment emits: one metadata block and
//! a flat list of rows. Exact rationals and sampled estimates never share a
//! field; sampled rows always carry their draw count.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Meta {
    pub experiment: String,
    pub version: String,
    pub schema: u32,
    pub n_tot: u32,
    pub seed: u64,
    pub samples: u64,
    pub params: Vec<(String, String)>,
}

#[derive(Debug, Clone, Serialize, Default)]
pub struct Row {
    pub section: String,
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub approx: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub meta: Meta,
    pub rows: Vec<Row>,
}

impl Report {
    pub fn new(experiment: &str, n_tot: u32, seed: u64, samples: u64) -> Self {
        Report {
            meta: Meta {
                experiment: experiment.to_string(),
                version: env!("CARGO_PKG_VERSION").to_string(),
                schema: SCHEMA_VERSION,
                n_tot,
                seed,
                samples,
                params: Vec::new(),
            },
            rows: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.meta.params.push((key.to_string(), value.to_string()));
    }

    pub fn push(&mut self, row: Row) {
        self.rows.push(row);
    }

    /// An exact rational result: fraction string plus its 12-digit decimal.
    pub fn exact(&mut self, section: &str, name: &str, value: &BigRational) {
        self.rows.push(Row {
            section: section.to_string(),
            name: name.to_string(),
            exact: Some(value.to_string()),
            approx: Some(decimal12(value)),
            ..Row::default()
        });
    }

    pub fn exact_noted(&mut self, section: &str, name: &str, value: &BigRational, note: &str) {
        self.rows.push(Row {
            section: section.to_string(),
            name: name.to_string(),
            exact: Some(value.to_string()),
            approx: Some(decimal12(value)),
            note: Some(note.to_string()),
            ..Row::default()
        });
    }

    /// A Monte-Carlo estimate; never carries an `exact` field.
    pub fn sampled(&mut self, section: &str, name: &str, estimate: &BigRational, draws: u64) {
        self.rows.push(Row {
            section: section.to_string(),
            name: name.to_string(),
            approx: Some(decimal12(estimate)),
            samples: Some(draws),
            ..Row::default()
        });
    }

    pub fn sampled_noted(
        &mut self,
        section: &str,
        name: &str,
        estimate: &BigRational,
        draws: u64,
        note: &str,
    ) {
        self.rows.push(Row {
            section: section.to_string(),
            name: name.to_string(),
            approx: Some(decimal12(estimate)),
            samples: Some(draws),
            note: Some(note.to_string()),
            ..Row::default()
        });
    }

    /// A float-only reference value (explicitly not a co-sequence statistic).
    pub fn reference(&mut self, section: &str, name: &str, value: f64, note: &str) {
        self.rows.push(Row {
            section: section.to_string(),
            name: name.to_string(),
            approx: Some(format!("{value:.12}")),
            note: Some(note.to_string()),
            ..Row::default()
        });
    }

    pub fn note(&mut self, section: &str, name: &str, note: impl ToString) {
        self.rows.push(Row {
            section: section.to_string(),
            name: name.to_string(),
            note: Some(note.to_string()),
            ..Row::default()
        });
    }
}

/// Decimal expansion to exactly 12 fractional digits, rounding half away
/// from zero. Pure integer arithmetic, so identical on every platform.
pub fn decimal12(value: &BigRational) -> String {
    let scale = BigInt::from(10u64.pow(12));
    let scaled = value.numer() * &scale;
    let den = value.denom();
    let (q, r) = (scaled.clone() / den, scaled % den);
    let mut q = q;
    let two_r = r.abs() * BigInt::from(2);
    if two_r >= den.abs() {
        if value.is_negative() {
            q -= 1;
        } else {
            q += 1;
        }
    }
    let neg = q.is_negative();
    let q = q.abs();
    let int_part = &q / &scale;
    let frac_part = &q % &scale;
    format!(
        "{}{}.{:012}",
        if neg { "-" } else { "" },
        int_part,
        frac_part
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal12(&frac(7, 8)), "0.875000000000");
        assert_eq!(decimal12(&frac(-7, 8)), "-0.875000000000");
        assert_eq!(decimal12(&frac(1, 3)), "0.333333333333");
        assert_eq!(decimal12(&frac(2, 3)), "0.666666666667");
        assert_eq!(decimal12(&frac(5, 2)), "2.500000000000");
        assert_eq!(decimal12(&frac(0, 1)), "0.000000000000");
        assert_eq!(decimal12(&frac(-1, 3)), "-0.333333333333");
    }
}
