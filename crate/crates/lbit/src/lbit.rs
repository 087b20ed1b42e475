//! n-lbit construction: families of co-sequences generated by arrays of
//! fractional operator powers, one row per label. The explicit row/column
//! tables for n = 1..4 are hard-coded; larger n use the combinatoric
//! generator below.


use crate::error::{Error, Result};
use crate::exponent::{CircleCoord, Q2Exponent};
use crate::family::{PowOp, RootFamily};
use crate::signperm::CoSequence;

use num_rational::BigRational;

/// Which parameter each label row uses in each column, 1-based parameter
/// indices as conventionally written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LbitAssignment {
    pub n: usize,
    /// `rows[i]` lists the parameter indices of label `i`, column by column.
    pub rows: Vec<Vec<usize>>,
}

impl LbitAssignment {
    pub fn columns(&self) -> usize {
        self.rows[0].len()
    }
}

/// The explicit tables for n = 1..4.
fn verbatim_rows(n: usize) -> Option<Vec<Vec<usize>>> {
    match n {
        1 => Some(vec![vec![1]]),
        2 => Some(vec![vec![1, 3], vec![2, 3]]),
        3 => Some(vec![
            vec![1, 3, 5, 7],
            vec![2, 3, 6, 7],
            vec![2, 4, 5, 7],
        ]),
        4 => Some(vec![
            vec![1, 3, 5, 7, 9, 11, 13, 15],
            vec![2, 3, 6, 7, 9, 12, 14, 15],
            vec![2, 4, 5, 7, 10, 11, 14, 15],
            vec![1, 4, 6, 8, 9, 11, 14, 15],
        ]),
        _ => None,
    }
}

/// Combinatoric generator: one parameter per nonempty subset of the labels.
/// Each column pairs a subset with its complement (the all-labels subset has
/// a column of its own, placed last), so a row meets exactly one parameter
/// per column and `n_col = 2^(n-1)`. Columns are ordered by imbalance
/// `|2·|S| - n|` ascending, ties broken by ascending bitmask of the side
/// containing the first label; within a column that side takes the lower
/// parameter index. This convention reproduces the explicit n ≤ 3 tables
/// verbatim and the n = 4 table up to relabeling.
pub fn generated_assignment(n: usize) -> LbitAssignment {
    assert!(n >= 1 && n <= 20, "lbit label count out of range");
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut asides: Vec<u32> = (1..full).filter(|s| s & 1 == 1).collect();
    let imbalance = |s: u32| ((2 * s.count_ones()) as i32 - n as i32).unsigned_abs();
    asides.sort_by_key(|&s| (imbalance(s), s));

    let mut rows = vec![Vec::with_capacity(1 << (n - 1)); n];
    let mut next_param = 1usize;
    for aside in asides {
        let p_aside = next_param;
        let p_comp = next_param + 1;
        next_param += 2;
        for (i, row) in rows.iter_mut().enumerate() {
            if aside & (1 << i) != 0 {
                row.push(p_aside);
            } else {
                row.push(p_comp);
            }
        }
    }
    let p_full = next_param;
    for row in rows.iter_mut() {
        row.push(p_full);
    }
    debug_assert_eq!(p_full, (1 << n) - 1);
    LbitAssignment { n, rows }
}

/// Assignment used by `build_lbit`: explicit tables up to n = 4, generated
/// beyond.
pub fn assignment_table(n: usize) -> LbitAssignment {
    match verbatim_rows(n) {
        Some(rows) => LbitAssignment { n, rows },
        None => generated_assignment(n),
    }
}

fn label_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("a{}", i)
    }
}

/// The full parameter set of an n-lbit: `2^n - 1` pairs `(J_i, α_i)`,
/// totalling `2^(n+1) - 2` free parameters.
#[derive(Debug, Clone)]
pub struct LbitParams {
    pub pairs: Vec<(CircleCoord, Q2Exponent)>,
}

impl LbitParams {
    pub fn new(pairs: Vec<(CircleCoord, Q2Exponent)>) -> Result<Self> {
        let len = pairs.len();
        if len == 0 || !(len + 1).is_power_of_two() {
            return Err(Error::BadAssignment {
                reason: format!("{len} parameter pairs; an n-lbit needs 2^n - 1"),
            });
        }
        Ok(LbitParams { pairs })
    }

    pub fn label_count(&self) -> usize {
        (usize::BITS - self.pairs.len().leading_zeros()) as usize
    }

    pub fn free_parameter_count(&self) -> usize {
        2 * self.pairs.len()
    }
}

#[derive(Debug, Clone)]
pub struct LbitState {
    pub labels: Vec<String>,
    pub cosequences: Vec<CoSequence>,
}

impl LbitState {
    pub fn cosequence(&self, row: usize) -> &CoSequence {
        &self.cosequences[row]
    }
}

/// The operator chain of one label row, leftmost applied last, without
/// materializing anything. This is the indexed-access route for configs too
/// large to hold co-sequences.
pub fn row_chain_indexed(
    params: &LbitParams,
    family: &RootFamily,
    row: usize,
) -> Result<Vec<PowOp>> {
    let n = params.label_count();
    if row >= n {
        return Err(Error::BadAssignment {
            reason: format!("row {row} out of range for {n} labels"),
        });
    }
    let table = assignment_table(n);
    Ok(table.rows[row]
        .iter()
        .map(|&p| {
            let (j, alpha) = &params.pairs[p - 1];
            family.pow_indexed(*j, alpha)
        })
        .collect())
}

/// Build every label's co-sequence by applying its assigned operator powers
/// in written order (rightmost first) to the all-plus base.
pub fn build_lbit(params: &LbitParams, family: &RootFamily) -> Result<LbitState> {
    let config = family.config();
    if !config.dense_ok() {
        return Err(Error::Unsupported(
            "dense lbit construction needs n_tot <= 4; use row_chain_indexed".into(),
        ));
    }
    let n = params.label_count();
    let table = assignment_table(n);
    debug_assert_eq!(params.free_parameter_count(), (1 << (n + 1)) - 2);

    let len = config.ambient_len() as usize;
    let mut labels = Vec::with_capacity(n);
    let mut cosequences = Vec::with_capacity(n);
    for (i, row) in table.rows.iter().enumerate() {
        let label = label_name(i);
        let mut s = CoSequence::all_plus(label.clone(), len)?;
        for &p in row.iter().rev() {
            let (j, alpha) = &params.pairs[p - 1];
            if alpha.is_zero() {
                continue;
            }
            let op = family.pow(*j, alpha)?;
            s = op.apply(&s)?;
        }
        labels.push(label);
        cosequences.push(s);
    }
    Ok(LbitState {
        labels,
        cosequences,
    })
}

/// A 2-lbit with the first two parameters sharing one circle coordinate;
/// the co-sequence correlation is then governed by `δ = α₂ - α₁`.
///
/// The predicted agreement `|1 - δ/2|` is exact, independent of `α₁`, as
/// long as the pair-linking factor commutes with the relative rotation:
/// `j3 == j1`, or `α₃ ∈ {0, 2}` (scalar factor). Outside that domain the
/// exact elementwise count can deviate from the prediction (a mixed-
/// coordinate fractional `α₃` twists the base the relative rotation acts
/// on); reports must always quote the counted value next to the predicted
/// one.
#[derive(Debug, Clone)]
pub struct EntangledPair {
    pub state: LbitState,
    pub delta: Q2Exponent,
    pub predicted_agreement: BigRational,
    pub predicted_correlation: BigRational,
}

pub fn entangled_pair(
    alpha1: &Q2Exponent,
    alpha2: &Q2Exponent,
    alpha3: &Q2Exponent,
    j1: CircleCoord,
    j3: CircleCoord,
    family: &RootFamily,
) -> Result<EntangledPair> {
    let params = LbitParams::new(vec![
        (j1, *alpha1),
        (j1, *alpha2),
        (j3, *alpha3),
    ])?;
    let state = build_lbit(&params, family)?;
    let delta = alpha2.sub(alpha1);
    let predicted_agreement = delta.plus_frequency();
    let two = BigRational::from_integer(2.into());
    let predicted_correlation = two * &predicted_agreement - BigRational::from_integer(1.into());
    Ok(EntangledPair {
        state,
        delta,
        predicted_agreement,
        predicted_correlation,
    })
}

/// Parameters of the fully-shared 3-lbit: the six pair-linking coordinates
/// all equal `j_shared`, the last column uses `j_last`.
#[derive(Debug, Clone)]
pub struct GhzParams {
    pub j_shared: CircleCoord,
    pub j_last: CircleCoord,
    pub alphas: [Q2Exponent; 7],
}

#[derive(Debug, Clone)]
pub struct GhzTriple {
    pub state: LbitState,
    /// Row exponent sums: `β₁ = α₁+α₃+α₅`, `β₂ = α₂+α₃+α₆`, `β₃ = α₂+α₄+α₅`.
    pub betas: [Q2Exponent; 3],
}

impl GhzParams {
    pub fn betas(&self) -> [Q2Exponent; 3] {
        let a = &self.alphas;
        [
            a[0].add(&a[2]).add(&a[4]),
            a[1].add(&a[2]).add(&a[5]),
            a[1].add(&a[3]).add(&a[4]),
        ]
    }
}

pub fn ghz_triple(params: &GhzParams, family: &RootFamily) -> Result<GhzTriple> {
    let pairs = params
        .alphas
        .iter()
        .enumerate()
        .map(|(k, alpha)| {
            let j = if k == 6 { params.j_last } else { params.j_shared };
            (j, *alpha)
        })
        .collect();
    let state = build_lbit(&LbitParams::new(pairs)?, family)?;
    Ok(GhzTriple {
        state,
        betas: params.betas(),
    })
}

/// The collapsed form of the shared-coordinate 3-lbit: each row written as
/// `pow(J, β_i) ∘ pow(J₇, α₇)`. Equal to the full construction row by row;
/// the verification suite checks that identity.
pub fn ghz_collapsed_row(
    params: &GhzParams,
    family: &RootFamily,
    row: usize,
) -> Result<CoSequence> {
    let config = family.config();
    let len = config.ambient_len() as usize;
    let betas = params.betas();
    let base = CoSequence::all_plus(label_name(row), len)?;
    let last = family.pow(params.j_last, &params.alphas[6])?;
    let outer = family.pow(params.j_shared, &betas[row])?;
    outer.apply(&last.apply(&base)?)
}
