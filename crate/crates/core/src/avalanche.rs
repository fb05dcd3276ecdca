//! Single-bit-flip statistics for the digest.
//!
//! Each sample draws its own random stream from `(seed, sample index)`, so
//! samples can be computed in any order or in parallel and still give the
//! same record.

use alloc::vec::Vec;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hash::{digest, HashConfig, Mode, WIDTH};
use crate::{Error, Result};

pub const HISTOGRAM_BINS: usize = 10;

#[derive(Clone, Debug, PartialEq)]
pub struct AvalancheStats {
    pub samples: usize,
    pub message_length: usize,
    /// Mean fraction of digest bits that changed.
    pub mean: f64,
    pub min: f64,
    pub max: f64,
    /// Counts of samples per tenth of the fraction range; 1.0 falls in the
    /// last bin.
    pub histogram: [usize; HISTOGRAM_BINS],
    /// Changed digest bits, per sample.
    pub flipped_bits: Vec<usize>,
}

impl AvalancheStats {
    /// Builds the summary from per-sample changed-bit counts.
    pub fn from_counts(message_length: usize, flipped_bits: Vec<usize>) -> Result<Self> {
        if flipped_bits.is_empty() {
            return Err(Error::ZeroCount("samples"));
        }
        let fractions = flipped_bits.iter().map(|&b| b as f64 / WIDTH as f64);
        let mut histogram = [0; HISTOGRAM_BINS];
        let (mut sum, mut min, mut max) = (0.0, f64::INFINITY, f64::NEG_INFINITY);
        for f in fractions {
            sum += f;
            min = min.min(f);
            max = max.max(f);
            let bin = ((f * HISTOGRAM_BINS as f64) as usize).min(HISTOGRAM_BINS - 1);
            histogram[bin] += 1;
        }
        Ok(AvalancheStats {
            samples: flipped_bits.len(),
            message_length,
            mean: sum / flipped_bits.len() as f64,
            min,
            max,
            histogram,
            flipped_bits,
        })
    }

    /// Fraction of samples that changed at least `bits` digest bits.
    pub fn share_at_least(&self, bits: usize) -> f64 {
        let hits = self.flipped_bits.iter().filter(|&&b| b >= bits).count();
        hits as f64 / self.samples as f64
    }
}

fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// The random message for sample `index` together with the bit chosen to flip
/// (as `(byte, mask)`).
pub fn sample_message(
    index: u64,
    message_length: usize,
    seed: u64,
    cfg: &HashConfig,
) -> (Vec<u8>, (usize, u8)) {
    let mut rng = sample_rng(seed, index);
    let mut message = alloc::vec![0u8; message_length];
    rng.fill_bytes(&mut message);
    if cfg.mode == Mode::PaperText {
        message.iter_mut().for_each(|b| *b &= 0x7F);
    }
    let bps = cfg.mode.bits_per_symbol();
    let bit = rng.random_range(0..message_length * bps);
    (message, (bit / bps, 1u8 << (bps - 1 - bit % bps)))
}

/// Changed digest bits for one sample.
pub fn avalanche_sample(
    index: u64,
    message_length: usize,
    seed: u64,
    cfg: &HashConfig,
) -> Result<usize> {
    if message_length == 0 {
        return Err(Error::ZeroCount("message length"));
    }
    let (mut message, (byte, mask)) = sample_message(index, message_length, seed, cfg);
    let before = digest(&message, cfg)?;
    message[byte] ^= mask;
    let after = digest(&message, cfg)?;
    Ok(before.flipped_bits(&after))
}

/// Hashes `samples` random messages of `message_length` bytes before and
/// after a single random bit flip.
pub fn avalanche_stats(
    samples: usize,
    message_length: usize,
    seed: u64,
    cfg: &HashConfig,
) -> Result<AvalancheStats> {
    if samples == 0 {
        return Err(Error::ZeroCount("samples"));
    }
    if message_length == 0 {
        return Err(Error::ZeroCount("message length"));
    }
    let counts = (0..samples as u64)
        .map(|i| avalanche_sample(i, message_length, seed, cfg))
        .collect::<Result<Vec<_>>>()?;
    AvalancheStats::from_counts(message_length, counts)
}
