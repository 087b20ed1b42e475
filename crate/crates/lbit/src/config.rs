//! The universe constants: `n_tot`, the operator dimension `N = 2^n_tot`,
//! the circle constant `M = N/2 - 1` and the ambient co-sequence length
//! `L = 2^N`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AmbientConfig {
    n_tot: u32,
}

impl AmbientConfig {
    /// `n_tot` in `2..=5`. At `n_tot = 5` the ambient length is `2^32`, so
    /// co-sequences exist only in indexed-access mode; exact dense statistics
    /// are available for `n_tot <= 4`.
    pub fn new(n_tot: u32) -> Result<Self> {
        if !(2..=5).contains(&n_tot) {
            return Err(Error::UnsupportedConfig { n_tot });
        }
        Ok(AmbientConfig { n_tot })
    }

    #[inline]
    pub fn n_tot(&self) -> u32 {
        self.n_tot
    }

    /// `N = 2^n_tot`: dimension of the root-family operators.
    #[inline]
    pub fn operator_dim(&self) -> usize {
        1usize << self.n_tot
    }

    /// `M = N/2 - 1`: the number of quaternionic triples.
    #[inline]
    pub fn circle_m(&self) -> u32 {
        (self.operator_dim() as u32) / 2 - 1
    }

    /// `4M`: the period of the discrete circle coordinate.
    #[inline]
    pub fn circle_len(&self) -> u32 {
        4 * self.circle_m()
    }

    /// `L = 2^N`: length of the ambient co-sequences.
    #[inline]
    pub fn ambient_len(&self) -> u64 {
        1u64 << self.operator_dim()
    }

    /// Finest constructible root resolution: exponents live on
    /// `{ k / 2^max_resolution mod 4 }`, the smallest positive one being
    /// `N / 2^N = 2^-(N - n_tot)`.
    #[inline]
    pub fn max_resolution(&self) -> u32 {
        self.operator_dim() as u32 - self.n_tot
    }

    /// Number of lattice points `4 * 2^max_resolution`.
    #[inline]
    pub fn lattice_size(&self) -> u64 {
        4u64 << self.max_resolution()
    }

    /// Whether co-sequences of length `L` can be held in memory.
    #[inline]
    pub fn dense_ok(&self) -> bool {
        self.n_tot <= 4
    }
}
