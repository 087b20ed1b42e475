//! Signed permutation operators and symbol co-sequences.
//!
//! Every operator in this crate is a square matrix with exactly one nonzero
//! entry per row and per column, that entry being `1` (identity symbol) or
//! `¬` (negation symbol). Such a matrix is stored as a permutation plus a
//! sign per row, never densely. Co-sequences are the column vectors of
//! signed symbols these operators act on.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// The two symbol states: `Plus` renders as the bare label (`a`), `Minus`
/// as the negated label (`¬a`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(i8)]
pub enum Sign {
    Plus = 1,
    Minus = -1,
}

impl Sign {
    #[inline]
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    #[inline]
    pub fn is_plus(self) -> bool {
        matches!(self, Sign::Plus)
    }

    pub fn render(self, label: &str) -> String {
        match self {
            Sign::Plus => label.to_string(),
            Sign::Minus => format!("¬{label}"),
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    #[inline]
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

#[inline]
pub(crate) fn is_power_of_two(n: u64) -> bool {
    n != 0 && n & (n - 1) == 0
}

/// A signed permutation operator: row `r` has its single nonzero entry in
/// column `target[r]`, with value `sign[r]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermOp {
    target: Vec<usize>,
    sign: Vec<Sign>,
}

impl SignedPermOp {
    /// Build from raw row data, validating the one-nonzero-per-row-and-column
    /// invariant and the power-of-two dimension.
    pub fn from_parts(target: Vec<usize>, sign: Vec<Sign>) -> Result<Self> {
        let dim = target.len();
        if sign.len() != dim {
            return Err(Error::DimensionMismatch {
                left: dim as u64,
                right: sign.len() as u64,
            });
        }
        if !is_power_of_two(dim as u64) {
            return Err(Error::NotPowerOfTwo { dim: dim as u64 });
        }
        let mut seen = vec![false; dim];
        for &t in &target {
            if t >= dim || seen[t] {
                return Err(Error::NotBijective { col: t as u64 });
            }
            seen[t] = true;
        }
        Ok(SignedPermOp { target, sign })
    }

    pub fn identity(dim: usize) -> Self {
        SignedPermOp {
            target: (0..dim).collect(),
            sign: vec![Sign::Plus; dim],
        }
    }

    /// The 2x2 operator `i` with `1` in the top-right and `¬` in the
    /// bottom-left: the canonical square root of the negation operator.
    pub fn imaginary_unit() -> Self {
        SignedPermOp {
            target: vec![1, 0],
            sign: vec![Sign::Plus, Sign::Minus],
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.target.len()
    }

    #[inline]
    pub fn row(&self, r: usize) -> (usize, Sign) {
        (self.target[r], self.sign[r])
    }

    pub fn targets(&self) -> &[usize] {
        &self.target
    }

    pub fn signs(&self) -> &[Sign] {
        &self.sign
    }

    /// Number of `+1` rows; `apply` to an all-plus co-sequence yields exactly
    /// this many plus symbols.
    pub fn plus_sign_count(&self) -> usize {
        self.sign.iter().filter(|s| s.is_plus()).count()
    }

    /// Matrix product `self · other` (so `other` acts first on co-sequences).
    pub fn compose(&self, other: &SignedPermOp) -> Result<SignedPermOp> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim() as u64,
                right: other.dim() as u64,
            });
        }
        let dim = self.dim();
        let mut target = Vec::with_capacity(dim);
        let mut sign = Vec::with_capacity(dim);
        for r in 0..dim {
            let mid = self.target[r];
            target.push(other.target[mid]);
            sign.push(self.sign[r] * other.sign[mid]);
        }
        Ok(SignedPermOp { target, sign })
    }

    /// Flip every entry's sign; equals multiplication by the negation operator.
    pub fn negate(&self) -> SignedPermOp {
        SignedPermOp {
            target: self.target.clone(),
            sign: self.sign.iter().map(|s| s.flip()).collect(),
        }
    }

    /// Transpose; the signs travel with their entries. For these operators the
    /// adjoint is always a two-sided inverse.
    pub fn adjoint(&self) -> SignedPermOp {
        let dim = self.dim();
        let mut target = vec![0usize; dim];
        let mut sign = vec![Sign::Plus; dim];
        for r in 0..dim {
            target[self.target[r]] = r;
            sign[self.target[r]] = self.sign[r];
        }
        SignedPermOp { target, sign }
    }

    /// Block-diagonal extension to `ambient` by repetition.
    pub fn bar_replicate(&self, ambient: usize) -> Result<SignedPermOp> {
        let dim = self.dim();
        if !is_power_of_two(ambient as u64) || ambient % dim != 0 {
            return Err(Error::BadReplication {
                dim: dim as u64,
                ambient: ambient as u64,
            });
        }
        let copies = ambient / dim;
        let mut target = Vec::with_capacity(ambient);
        let mut sign = Vec::with_capacity(ambient);
        for c in 0..copies {
            let off = c * dim;
            for r in 0..dim {
                target.push(self.target[r] + off);
                sign.push(self.sign[r]);
            }
        }
        Ok(SignedPermOp { target, sign })
    }

    /// `diag(a, b)` at doubled dimension.
    pub fn block_diag(a: &SignedPermOp, b: &SignedPermOp) -> Result<SignedPermOp> {
        if a.dim() != b.dim() {
            return Err(Error::DimensionMismatch {
                left: a.dim() as u64,
                right: b.dim() as u64,
            });
        }
        let d = a.dim();
        let mut target = Vec::with_capacity(2 * d);
        let mut sign = Vec::with_capacity(2 * d);
        for r in 0..d {
            target.push(a.target[r]);
            sign.push(a.sign[r]);
        }
        for r in 0..d {
            target.push(b.target[r] + d);
            sign.push(b.sign[r]);
        }
        Ok(SignedPermOp { target, sign })
    }

    /// `[[0, tr], [bl, 0]]` at doubled dimension: `tr` sits in the top-right
    /// block, `bl` in the bottom-left.
    pub fn block_antidiag(tr: &SignedPermOp, bl: &SignedPermOp) -> Result<SignedPermOp> {
        if tr.dim() != bl.dim() {
            return Err(Error::DimensionMismatch {
                left: tr.dim() as u64,
                right: bl.dim() as u64,
            });
        }
        let d = tr.dim();
        let mut target = Vec::with_capacity(2 * d);
        let mut sign = Vec::with_capacity(2 * d);
        for r in 0..d {
            target.push(tr.target[r] + d);
            sign.push(tr.sign[r]);
        }
        for r in 0..d {
            target.push(bl.target[r]);
            sign.push(bl.sign[r]);
        }
        Ok(SignedPermOp { target, sign })
    }

    pub fn apply(&self, s: &CoSequence) -> Result<CoSequence> {
        if self.dim() != s.len() {
            return Err(Error::DimensionMismatch {
                left: self.dim() as u64,
                right: s.len() as u64,
            });
        }
        let signs = (0..self.dim())
            .map(|r| self.sign[r] * s.signs[self.target[r]])
            .collect();
        Ok(CoSequence {
            label: s.label.clone(),
            signs,
        })
    }

    /// `adjoint(A)∘A == 1`. True for every valid signed permutation operator;
    /// exposed because the harness reports it per operator.
    pub fn is_unitary(&self) -> bool {
        self.adjoint()
            .compose(self)
            .map(|c| c == SignedPermOp::identity(self.dim()))
            .unwrap_or(false)
    }

    /// Hermiticity under the `i`-convention: `(ī∘A)* == ī∘A`, with `ī` the
    /// 2x2 imaginary unit replicated to this operator's dimension.
    pub fn is_hermitian(&self) -> bool {
        let ibar = SignedPermOp::imaginary_unit()
            .bar_replicate(self.dim())
            .expect("dim is a power of two >= 2");
        let h = ibar.compose(self).expect("matched dims");
        h.adjoint() == h
    }
}

impl fmt::Display for SignedPermOp {
    /// Row list `r -> ±c`, compact enough for witnesses in reports.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.dim() {
            if r > 0 {
                write!(f, " ")?;
            }
            let (t, s) = self.row(r);
            match s {
                Sign::Plus => write!(f, "{t}")?,
                Sign::Minus => write!(f, "¬{t}")?,
            }
        }
        write!(f, "]")
    }
}

/// A column vector of signed symbols over one label, e.g. `(a ¬a a ¬a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoSequence {
    label: String,
    signs: Vec<Sign>,
}

impl CoSequence {
    pub fn new(label: impl Into<String>, signs: Vec<Sign>) -> Result<Self> {
        if !is_power_of_two(signs.len() as u64) {
            return Err(Error::NotPowerOfTwo {
                dim: signs.len() as u64,
            });
        }
        Ok(CoSequence {
            label: label.into(),
            signs,
        })
    }

    /// The base co-sequence `|a)`: every entry the bare label.
    pub fn all_plus(label: impl Into<String>, len: usize) -> Result<Self> {
        CoSequence::new(label, vec![Sign::Plus; len])
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    #[inline]
    pub fn sign(&self, r: usize) -> Sign {
        self.signs[r]
    }

    pub fn negate(&self) -> CoSequence {
        CoSequence {
            label: self.label.clone(),
            signs: self.signs.iter().map(|s| s.flip()).collect(),
        }
    }

    /// Render the first `limit` symbols, e.g. `(a ¬a a ¬a)`.
    pub fn preview(&self, limit: usize) -> String {
        let shown = self.signs.iter().take(limit);
        let mut out = String::from("(");
        for (k, s) in shown.enumerate() {
            if k > 0 {
                out.push(' ');
            }
            out.push_str(&s.render(&self.label));
        }
        if self.len() > limit {
            out.push_str(" …");
        }
        out.push(')');
        out
    }
}

/// Row access without materializing the full operator; implemented both by
/// dense operators and by on-demand power recipes.
pub trait RowIndexed {
    fn ambient_dim(&self) -> u64;
    /// `(column, sign)` of row `r`.
    fn row_at(&self, r: u64) -> (u64, Sign);
}

impl RowIndexed for SignedPermOp {
    fn ambient_dim(&self) -> u64 {
        self.dim() as u64
    }

    fn row_at(&self, r: u64) -> (u64, Sign) {
        let (t, s) = self.row(r as usize);
        (t as u64, s)
    }
}

/// Entry access for co-sequences, dense or virtual.
pub trait SignAt {
    fn len_u64(&self) -> u64;
    fn sign_at(&self, r: u64) -> Sign;
}

impl SignAt for CoSequence {
    fn len_u64(&self) -> u64 {
        self.len() as u64
    }

    fn sign_at(&self, r: u64) -> Sign {
        self.signs[r as usize]
    }
}

/// The co-sequence obtained by applying a chain of row-indexed operators
/// (leftmost applied last) to an all-plus base, evaluated entry by entry.
/// This is the indexed-access mode used when the ambient length is too large
/// to materialize.
pub struct ChainedAllPlus<'a, O: RowIndexed> {
    ops: Vec<&'a O>,
    len: u64,
}

impl<'a, O: RowIndexed> ChainedAllPlus<'a, O> {
    pub fn new(ops: Vec<&'a O>) -> Result<Self> {
        let len = ops
            .first()
            .map(|o| o.ambient_dim())
            .ok_or_else(|| Error::Unsupported("empty operator chain".into()))?;
        for op in &ops {
            if op.ambient_dim() != len {
                return Err(Error::DimensionMismatch {
                    left: len,
                    right: op.ambient_dim(),
                });
            }
        }
        Ok(ChainedAllPlus { ops, len })
    }
}

impl<O: RowIndexed> SignAt for ChainedAllPlus<'_, O> {
    fn len_u64(&self) -> u64 {
        self.len
    }

    fn sign_at(&self, r: u64) -> Sign {
        let mut idx = r;
        let mut acc = Sign::Plus;
        for op in &self.ops {
            let (t, s) = op.row_at(idx);
            acc = acc * s;
            idx = t;
        }
        acc
    }
}
