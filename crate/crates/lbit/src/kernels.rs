//! Hot inner loops, each in a sequential and (behind the `parallel` feature)
//! a rayon flavor. The public functions dispatch on the feature; both
//! flavors stay callable so the bench suite can compare them directly.
//!
//! Every parallel kernel is bitwise deterministic: work is split into
//! fixed-size chunks whose results only ever combine through order-free
//! reductions (integer sums) or order-preserving collection.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::signperm::{Sign, SignAt};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Draws per RNG stream; one stream per chunk index, so counts do not depend
/// on how many workers run.
pub const SAMPLE_CHUNK: u64 = 4096;

pub fn count_plus_seq(signs: &[Sign]) -> u64 {
    signs.iter().filter(|s| s.is_plus()).count() as u64
}

#[cfg(feature = "parallel")]
pub fn count_plus_par(signs: &[Sign]) -> u64 {
    signs
        .par_chunks(1 << 14)
        .map(|c| c.iter().filter(|s| s.is_plus()).count() as u64)
        .sum()
}

pub fn count_plus(signs: &[Sign]) -> u64 {
    #[cfg(feature = "parallel")]
    {
        count_plus_par(signs)
    }
    #[cfg(not(feature = "parallel"))]
    {
        count_plus_seq(signs)
    }
}

pub fn count_agree_seq(a: &[Sign], b: &[Sign]) -> u64 {
    a.iter().zip(b).filter(|(x, y)| x == y).count() as u64
}

#[cfg(feature = "parallel")]
pub fn count_agree_par(a: &[Sign], b: &[Sign]) -> u64 {
    a.par_chunks(1 << 14)
        .zip(b.par_chunks(1 << 14))
        .map(|(ca, cb)| ca.iter().zip(cb).filter(|(x, y)| x == y).count() as u64)
        .sum()
}

pub fn count_agree(a: &[Sign], b: &[Sign]) -> u64 {
    #[cfg(feature = "parallel")]
    {
        count_agree_par(a, b)
    }
    #[cfg(not(feature = "parallel"))]
    {
        count_agree_seq(a, b)
    }
}

pub fn map_rows_seq<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    (0..n).map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_rows_par<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    (0..n).into_par_iter().map(f).collect()
}

/// Order-preserving map over `0..n`; used for materializing operator rows.
pub fn map_rows<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    #[cfg(feature = "parallel")]
    {
        map_rows_par(n, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_rows_seq(n, f)
    }
}

/// Order-preserving map over a work list; used by the verification sweeps.
pub fn map_items<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

fn chunk_plus_count<S: SignAt + ?Sized>(s: &S, seed: u64, chunk: u64, draws: u64) -> u64 {
    let len = s.len_u64();
    let mut rng = chunk_rng(seed, chunk);
    let mut count = 0u64;
    for _ in 0..draws {
        let r = rng.random_range(0..len);
        if s.sign_at(r).is_plus() {
            count += 1;
        }
    }
    count
}

fn chunk_sizes(n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut c = 0;
    let mut left = n;
    while left > 0 {
        let take = left.min(SAMPLE_CHUNK);
        out.push((c, take));
        left -= take;
        c += 1;
    }
    out
}

pub fn sampled_plus_count_seq<S: SignAt + Sync + ?Sized>(s: &S, n: u64, seed: u64) -> u64 {
    chunk_sizes(n)
        .iter()
        .map(|&(c, take)| chunk_plus_count(s, seed, c, take))
        .sum()
}

#[cfg(feature = "parallel")]
pub fn sampled_plus_count_par<S: SignAt + Sync + ?Sized>(s: &S, n: u64, seed: u64) -> u64 {
    chunk_sizes(n)
        .par_iter()
        .map(|&(c, take)| chunk_plus_count(s, seed, c, take))
        .sum()
}

/// Monte-Carlo count of plus draws over `n` uniform positions.
pub fn sampled_plus_count<S: SignAt + Sync + ?Sized>(s: &S, n: u64, seed: u64) -> u64 {
    #[cfg(feature = "parallel")]
    {
        sampled_plus_count_par(s, n, seed)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sampled_plus_count_seq(s, n, seed)
    }
}

fn chunk_agree_count<S1, S2>(
    s1: &S1,
    s2: &S2,
    seed: u64,
    chunk: u64,
    draws: u64,
) -> u64
where
    S1: SignAt + ?Sized,
    S2: SignAt + ?Sized,
{
    let len = s1.len_u64();
    let mut rng = chunk_rng(seed, chunk);
    let mut count = 0u64;
    for _ in 0..draws {
        let r = rng.random_range(0..len);
        if s1.sign_at(r) == s2.sign_at(r) {
            count += 1;
        }
    }
    count
}

pub fn sampled_agree_count_seq<S1, S2>(s1: &S1, s2: &S2, n: u64, seed: u64) -> u64
where
    S1: SignAt + Sync + ?Sized,
    S2: SignAt + Sync + ?Sized,
{
    chunk_sizes(n)
        .iter()
        .map(|&(c, take)| chunk_agree_count(s1, s2, seed, c, take))
        .sum()
}

#[cfg(feature = "parallel")]
pub fn sampled_agree_count_par<S1, S2>(s1: &S1, s2: &S2, n: u64, seed: u64) -> u64
where
    S1: SignAt + Sync + ?Sized,
    S2: SignAt + Sync + ?Sized,
{
    chunk_sizes(n)
        .par_iter()
        .map(|&(c, take)| chunk_agree_count(s1, s2, seed, c, take))
        .sum()
}

/// Monte-Carlo count of positions where both co-sequences carry the same
/// sign, over `n` uniform positions.
pub fn sampled_agree_count<S1, S2>(s1: &S1, s2: &S2, n: u64, seed: u64) -> u64
where
    S1: SignAt + Sync + ?Sized,
    S2: SignAt + Sync + ?Sized,
{
    #[cfg(feature = "parallel")]
    {
        sampled_agree_count_par(s1, s2, n, seed)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sampled_agree_count_seq(s1, s2, n, seed)
    }
}

/// Single-stream list of sampled signs; for small draw lists where the
/// caller wants the symbols themselves, not a count.
pub fn sample_signs<S: SignAt + ?Sized>(s: &S, n: u64, seed: u64) -> Vec<Sign> {
    let len = s.len_u64();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| s.sign_at(rng.random_range(0..len)))
        .collect()
}

/// Equality on sampled row indices, for operators too large to compare
/// entry by entry. Exhaustive comparison stays mandatory wherever both
/// operators are dense.
pub fn rows_equal_sampled<A, B>(a: &A, b: &B, samples: u64, seed: u64) -> bool
where
    A: crate::signperm::RowIndexed + ?Sized,
    B: crate::signperm::RowIndexed + ?Sized,
{
    if a.ambient_dim() != b.ambient_dim() {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).all(|_| {
        let r = rng.random_range(0..a.ambient_dim());
        a.row_at(r) == b.row_at(r)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signperm::CoSequence;

    #[test]
    fn sequential_and_dispatched_counts_agree() {
        let signs: Vec<Sign> = (0..10_000)
            .map(|k| if k % 3 == 0 { Sign::Plus } else { Sign::Minus })
            .collect();
        assert_eq!(count_plus(&signs), count_plus_seq(&signs));
    }

    #[test]
    fn sampling_is_chunk_deterministic() {
        let s = CoSequence::new(
            "a",
            (0..1024)
                .map(|k| if k % 5 == 0 { Sign::Plus } else { Sign::Minus })
                .collect(),
        )
        .unwrap();
        let a = sampled_plus_count_seq(&s, 10_000, 42);
        let b = sampled_plus_count_seq(&s, 10_000, 42);
        assert_eq!(a, b);
        #[cfg(feature = "parallel")]
        assert_eq!(a, sampled_plus_count_par(&s, 10_000, 42));
        // Different seed, different stream.
        assert_ne!(a, sampled_plus_count_seq(&s, 10_000, 43));
    }

    #[test]
    fn sample_signs_deterministic_per_seed() {
        let s = CoSequence::all_plus("a", 64).unwrap();
        assert_eq!(sample_signs(&s, 32, 7), sample_signs(&s, 32, 7));
        assert_eq!(sample_signs(&s, 5, 7), vec![Sign::Plus; 5]);
    }
}
