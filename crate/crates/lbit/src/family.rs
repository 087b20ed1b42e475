//! The self-similar family of square-root-of-minus-one operators, the
//! discrete circle of coordinates it generates, and fractional powers on the
//! dyadic exponent lattice.

use crate::config::AmbientConfig;
use crate::error::{Error, Result};
use crate::exponent::{CircleCoord, Q2Exponent};
use crate::kernels;
use crate::signperm::{RowIndexed, Sign, SignedPermOp};

/// The `N-1` operators `E_1 .. E_{N-1}` of dimension `N`, built by the
/// block recursion: each level-k member `e` contributes `diag(e, -e)` and
/// `antidiag(e, e)` at level k+1, and `antidiag(-1, 1)` is appended last.
#[derive(Debug, Clone)]
pub struct RootFamily {
    config: AmbientConfig,
    members: Vec<SignedPermOp>,
}

impl RootFamily {
    pub fn build(config: AmbientConfig) -> Self {
        let mut level = vec![SignedPermOp::imaginary_unit()];
        let mut dim = 2;
        while dim < config.operator_dim() {
            let mut next = Vec::with_capacity(2 * level.len() + 1);
            for e in &level {
                next.push(SignedPermOp::block_diag(e, &e.negate()).expect("same dims"));
            }
            for e in &level {
                next.push(SignedPermOp::block_antidiag(e, e).expect("same dims"));
            }
            let id = SignedPermOp::identity(dim);
            next.push(SignedPermOp::block_antidiag(&id.negate(), &id).expect("same dims"));
            level = next;
            dim *= 2;
        }
        debug_assert_eq!(level.len(), config.operator_dim() - 1);
        RootFamily {
            config,
            members: level,
        }
    }

    /// Diagnostic constructor: accepts arbitrary members (dimensions checked,
    /// algebra not) so verification routines can be exercised against
    /// deliberately corrupted families.
    pub fn from_members(config: AmbientConfig, members: Vec<SignedPermOp>) -> Result<Self> {
        if members.len() != config.operator_dim() - 1 {
            return Err(Error::Unsupported(format!(
                "family needs {} members, got {}",
                config.operator_dim() - 1,
                members.len()
            )));
        }
        for m in &members {
            if m.dim() != config.operator_dim() {
                return Err(Error::DimensionMismatch {
                    left: m.dim() as u64,
                    right: config.operator_dim() as u64,
                });
            }
        }
        Ok(RootFamily { config, members })
    }

    pub fn config(&self) -> &AmbientConfig {
        &self.config
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `E_j`, 1-based, `1 <= j <= N-1`.
    pub fn member(&self, j: u32) -> Result<&SignedPermOp> {
        if j == 0 || j as usize > self.members.len() {
            return Err(Error::CoordinateOutOfRange {
                j,
                max: self.members.len() as u32,
            });
        }
        Ok(&self.members[j as usize - 1])
    }

    /// The operator sitting at circle coordinate `J`: family members for
    /// `J <= 2M`, their negatives for `2M < J <= 4M`. Pre-multiplying by
    /// `E_{N-1}` walks `J -> J + M`.
    pub fn cycle_coordinate(&self, j: CircleCoord) -> SignedPermOp {
        let two_m = 2 * self.config.circle_m();
        let jj = j.get();
        if jj <= two_m {
            self.members[jj as usize - 1].clone()
        } else {
            self.members[(jj - two_m) as usize - 1].negate()
        }
    }

    /// Schedule a fractional power `Ē_J^α` at the ambient dimension `2^N`,
    /// without materializing it.
    pub fn pow_indexed(&self, j: CircleCoord, alpha: &Q2Exponent) -> PowOp {
        PowOp::new(
            self.cycle_coordinate(j),
            alpha,
            self.config.ambient_len(),
        )
    }

    /// Materialized fractional power. Only for configs whose ambient length
    /// fits in memory.
    pub fn pow(&self, j: CircleCoord, alpha: &Q2Exponent) -> Result<SignedPermOp> {
        self.pow_indexed(j, alpha).materialize()
    }

    /// Verify the quaternionic relations of the triple
    /// `(E_j, E_{j+M}, E_{N-1})` for `1 <= j <= M`, reporting the first
    /// violated relation with a row witness.
    pub fn quaternion_triple(&self, j: u32) -> Result<TripleReport> {
        let m = self.config.circle_m();
        if j == 0 || j > m {
            return Err(Error::CoordinateOutOfRange { j, max: m });
        }
        let e_j = self.member(j)?;
        let e_jm = self.member(j + m)?;
        let e_last = self.member(2 * m + 1)?;
        let dim = e_j.dim();
        let minus_one = SignedPermOp::identity(dim).negate();

        let mut failures = Vec::new();
        let mut check = |name: &str, got: SignedPermOp, want: &SignedPermOp| {
            if &got != want {
                let row = (0..dim)
                    .find(|&r| got.row(r) != want.row(r))
                    .unwrap_or(0);
                failures.push(TripleViolation {
                    relation: name.to_string(),
                    row,
                    got: format!("{:?}", got.row(row)),
                    want: format!("{:?}", want.row(row)),
                });
            }
        };

        check("E_j^2 = -1", e_j.compose(e_j)?, &minus_one);
        check("E_{j+M}^2 = -1", e_jm.compose(e_jm)?, &minus_one);
        check("E_{N-1}^2 = -1", e_last.compose(e_last)?, &minus_one);
        // Verified multiplication convention: E_j ∘ E_{j+M} = +E_{N-1}, and
        // cyclically E_{j+M} ∘ E_{N-1} = E_j, E_{N-1} ∘ E_j = E_{j+M}.
        check("E_j∘E_{j+M} = E_{N-1}", e_j.compose(e_jm)?, e_last);
        check("E_{j+M}∘E_{N-1} = E_j", e_jm.compose(e_last)?, e_j);
        check("E_{N-1}∘E_j = E_{j+M}", e_last.compose(e_j)?, e_jm);
        check(
            "E_{N-1}∘E_{j+M} = -E_j",
            e_last.compose(e_jm)?,
            &e_j.negate(),
        );

        Ok(TripleReport { j, failures })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleViolation {
    pub relation: String,
    pub row: usize,
    pub got: String,
    pub want: String,
}

#[derive(Debug, Clone)]
pub struct TripleReport {
    pub j: u32,
    pub failures: Vec<TripleViolation>,
}

impl TripleReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// One root-doubling step: `[[0, 1], [A, 0]]` at twice the dimension, which
/// squares to `diag(A, A)`.
pub fn root_step(a: &SignedPermOp) -> SignedPermOp {
    let id = SignedPermOp::identity(a.dim());
    SignedPermOp::block_antidiag(&id, a).expect("same dims")
}

/// An unevaluated `bar( root^R(base) ^ m )` at a given ambient dimension,
/// with per-row access in `O(R)`. `base` is `±E_J` at dimension `N`; the
/// block being replicated has dimension `N·2^R`.
#[derive(Debug, Clone)]
pub struct PowOp {
    base: SignedPermOp,
    resolution: u32,
    numerator: u64,
    ambient: u64,
}

impl PowOp {
    pub fn new(base: SignedPermOp, alpha: &Q2Exponent, ambient: u64) -> Self {
        PowOp {
            base,
            resolution: alpha.resolution(),
            numerator: alpha.numerator(),
            ambient,
        }
    }

    pub fn block_dim(&self) -> u64 {
        (self.base.dim() as u64) << self.resolution
    }

    /// Row of `root^res(base) ^ m` at block dimension `base.dim() << res`.
    ///
    /// Powers of a root-doubled operator split by parity:
    ///   B^(2q)   = diag(C^q, C^q)
    ///   B^(2q+1) = [[0, C^q], [C^(q+1), 0]]
    /// with `C = root^(res-1)(base)`, so one recursion level strips one
    /// doubling and halves the exponent.
    fn block_row(&self, res: u32, m: u64, r: u64) -> (u64, Sign) {
        if res == 0 {
            let (t, s) = self.base.row_at(r % self.base.dim() as u64);
            return match m % 4 {
                0 => (r, Sign::Plus),
                1 => (t, s),
                2 => (r, Sign::Minus),
                _ => (t, s.flip()),
            };
        }
        let half = (self.base.dim() as u64) << (res - 1);
        let child_mod = 4u64 << (res - 1);
        if m % 2 == 0 {
            let q = (m / 2) % child_mod;
            if r < half {
                self.block_row(res - 1, q, r)
            } else {
                let (t, s) = self.block_row(res - 1, q, r - half);
                (t + half, s)
            }
        } else if r < half {
            let q = ((m - 1) / 2) % child_mod;
            let (t, s) = self.block_row(res - 1, q, r);
            (t + half, s)
        } else {
            let q = ((m + 1) / 2) % child_mod;
            self.block_row(res - 1, q, r - half)
        }
    }

    /// Dense form; rejects ambient dimensions beyond `2^20`.
    pub fn materialize(&self) -> Result<SignedPermOp> {
        if self.ambient > 1 << 20 {
            return Err(Error::Unsupported(format!(
                "ambient dimension {} too large to materialize; use indexed access",
                self.ambient
            )));
        }
        let n = self.ambient as usize;
        let rows = kernels::map_rows(n, |r| self.row_at(r as u64));
        let mut target = Vec::with_capacity(n);
        let mut sign = Vec::with_capacity(n);
        for (t, s) in rows {
            target.push(t as usize);
            sign.push(s);
        }
        SignedPermOp::from_parts(target, sign)
    }
}

impl RowIndexed for PowOp {
    fn ambient_dim(&self) -> u64 {
        self.ambient
    }

    fn row_at(&self, r: u64) -> (u64, Sign) {
        let block = self.block_dim();
        let q = r / block;
        let (t, s) = self.block_row(self.resolution, self.numerator, r % block);
        (q * block + t, s)
    }
}
