//! Hashing through chaotic iterations of the vectorial negation.
//!
//! A message becomes an initial condition `(S, E)` for `N = 256` cells:
//!
//! 1. [`encode_message`]: 7-bit (paper-text mode) or 8-bit (raw-bytes mode)
//!    codes, MSB first, followed by a `1` bit.
//! 2. [`append_length`]: the bit length so far in minimal binary, then `1`.
//! 3. [`mirror_extend`]: the string followed by its reversal.
//! 4. [`pad_to_512`]: repeated and truncated to a multiple of 512 bits; this
//!    is `D`.
//! 5. [`fold_e`]: `E` is the XOR of the 256-bit blocks of `D`.
//! 6. [`derive_u`] and [`derive_s`]: `D` read as bytes over eight one-bit
//!    left rotations gives `u`, and `S^n = u^n + 2·S^{n−1} + n (mod 256)`.
//!
//! The digest is the state after iterating `G_{f_0}` over every term of `S`.
//! Raw strategy values `0..=255` drive cells `1..=256`.
//!
//! [`Variant::Published`] swaps three stages for the ones that reproduce the
//! published worked example: the mirror does not repeat the last bit, each
//! rotation moves the last bit to the front, and the final eight strategy
//! terms are not iterated.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::dynamics::{iterate, Negation, Point, StateVector, Strategy};
use crate::{Error, Result};

/// Number of cells in the hash state.
pub const WIDTH: usize = 256;
/// `D` is a multiple of this many bits.
pub const BLOCK_BITS: usize = 512;
/// Number of readings of `D` (the unrotated one plus seven rotations).
pub const ROTATION_PASSES: usize = 8;

/// How input bytes are turned into bits.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    /// 7-bit ASCII codes; bytes at or above 128 are rejected.
    PaperText,
    /// Every byte contributes 8 bits.
    #[default]
    RawBytes,
}

impl Mode {
    pub fn bits_per_symbol(self) -> usize {
        match self {
            Mode::PaperText => 7,
            Mode::RawBytes => 8,
        }
    }
}

/// Which preprocessing pipeline to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Full mirror, left rotations, every strategy term iterated.
    #[default]
    Canonical,
    /// Matches the published example listings and digests bit for bit.
    Published,
}

/// Direction of the one-bit rotation between readings of `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rotation {
    /// The first bit moves to the end.
    Left,
    /// The last bit moves to the front.
    Right,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct HashConfig {
    pub mode: Mode,
    pub variant: Variant,
}

impl HashConfig {
    pub const fn new(mode: Mode) -> Self {
        HashConfig {
            mode,
            variant: Variant::Canonical,
        }
    }

    pub const fn with_variant(mut self, variant: Variant) -> Self {
        self.variant = variant;
        self
    }

    pub const fn width(&self) -> usize {
        WIDTH
    }
}

/// An arbitrary-length sequence of bits.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitString {
    bits: Vec<bool>,
}

impl BitString {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        BitString { bits }
    }

    /// Parses `0`/`1` characters, ignoring ASCII whitespace.
    pub fn from_binary(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_ascii_whitespace())
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse("bit string")),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_bits)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    #[inline]
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    /// Appends the low `width` bits of `value`, most significant first.
    pub fn push_bits(&mut self, value: u64, width: usize) {
        self.bits
            .extend((0..width).rev().map(|i| (value >> i) & 1 == 1));
    }

    pub fn to_binary(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({})", self.to_binary())
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_binary())
    }
}

/// Step 1: symbol codes followed by a single `1` bit.
pub fn encode_message(input: &[u8], cfg: &HashConfig) -> Result<BitString> {
    let width = cfg.mode.bits_per_symbol();
    let mut out = BitString {
        bits: Vec::with_capacity(input.len() * width + 1),
    };
    for (position, &byte) in input.iter().enumerate() {
        if cfg.mode == Mode::PaperText && byte >= 0x80 {
            return Err(Error::NonAscii { position, byte });
        }
        out.push_bits(u64::from(byte), width);
    }
    out.push(true);
    Ok(out)
}

/// Step 2: the current length in minimal-width binary (`0` for zero), then
/// a single `1` bit.
pub fn append_length(s: &BitString) -> BitString {
    let len = s.len() as u64;
    let width = (u64::BITS - len.leading_zeros()).max(1) as usize;
    let mut out = s.clone();
    out.bits.reserve(width + 1);
    out.push_bits(len, width);
    out.push(true);
    out
}

/// Step 3: `s` followed by its full reversal.
pub fn mirror_extend(s: &BitString) -> BitString {
    let mut bits = Vec::with_capacity(2 * s.len());
    bits.extend_from_slice(&s.bits);
    bits.extend(s.bits.iter().rev());
    BitString { bits }
}

/// Mirror used by [`Variant::Published`]: `s` followed by the reversal of
/// all but its last bit, so the result is a palindrome of odd length
/// `2·len − 1`.
pub fn mirror_extend_shared_pivot(s: &BitString) -> BitString {
    let mut bits = Vec::with_capacity((2 * s.len()).saturating_sub(1));
    bits.extend_from_slice(&s.bits);
    if let Some((_, head)) = s.bits.split_last() {
        bits.extend(head.iter().rev());
    }
    BitString { bits }
}

/// Step 4: repeats `s` and truncates at the smallest multiple of 512 that
/// is at least `max(len, 512)`.
pub fn pad_to_512(s: &BitString) -> Result<BitString> {
    if s.is_empty() {
        return Err(Error::BadLength {
            stage: "pad_to_512",
            len: 0,
        });
    }
    let target = s.len().div_ceil(BLOCK_BITS).max(1) * BLOCK_BITS;
    Ok(BitString {
        bits: s.bits.iter().copied().cycle().take(target).collect(),
    })
}

/// Step 5: XOR of the 256-bit blocks of `d`.
pub fn fold_e(d: &BitString) -> Result<StateVector> {
    if d.is_empty() || d.len() % WIDTH != 0 {
        return Err(Error::BadLength {
            stage: "fold_e",
            len: d.len(),
        });
    }
    let mut chunks = d.bits.chunks_exact(WIDTH);
    let mut e = StateVector::from_bits(chunks.next().unwrap().iter().copied())?;
    for block in chunks {
        e.xor_assign(&StateVector::from_bits(block.iter().copied())?);
    }
    Ok(e)
}

/// Step 6a: bytes of `d` read MSB first, once unrotated and then after each
/// of seven successive one-bit left rotations. Returns `d.len()` values.
pub fn derive_u(d: &BitString) -> Result<Vec<u8>> {
    derive_u_rotating(d, Rotation::Left)
}

/// [`derive_u`] with a choice of rotation direction.
pub fn derive_u_rotating(d: &BitString, rotation: Rotation) -> Result<Vec<u8>> {
    let n = d.len();
    if n == 0 || n % 8 != 0 {
        return Err(Error::BadLength {
            stage: "derive_u",
            len: n,
        });
    }
    let mut u = Vec::with_capacity(n / 8 * ROTATION_PASSES);
    for pass in 0..ROTATION_PASSES {
        // After `pass` left rotations position i holds original bit
        // (i + pass) mod n; after right rotations it holds (i - pass) mod n.
        let offset = match rotation {
            Rotation::Left => pass,
            Rotation::Right => n - pass,
        };
        for block in 0..n / 8 {
            let byte = (0..8).fold(0u8, |acc, j| {
                (acc << 1) | u8::from(d.bits[(block * 8 + j + offset) % n])
            });
            u.push(byte);
        }
    }
    Ok(u)
}

/// One step of the strategy recurrence. `prev` is `None` for the first term.
#[inline]
pub fn next_strategy_value(u: u8, prev: Option<u8>, n: u64) -> u8 {
    match prev {
        None => u,
        Some(p) => u
            .wrapping_add(p.wrapping_mul(2))
            .wrapping_add((n % 256) as u8),
    }
}

/// Step 6b: raw strategy values `S^0 = u^0`, `S^n = u^n + 2·S^{n−1} + n`
/// (mod 256).
pub fn derive_raw_strategy(u: &[u8]) -> Result<Vec<u8>> {
    if u.is_empty() {
        return Err(Error::ZeroCount("strategy seed length"));
    }
    let mut out = Vec::with_capacity(u.len());
    let mut prev = None;
    for (n, &term) in u.iter().enumerate() {
        let s = next_strategy_value(term, prev, n as u64);
        out.push(s);
        prev = Some(s);
    }
    Ok(out)
}

/// Step 6b as a strategy on 256 cells (raw value `v` drives cell `v + 1`).
pub fn derive_s(u: &[u8]) -> Result<Strategy> {
    let raw = derive_raw_strategy(u)?;
    Strategy::new(WIDTH, raw.into_iter().map(|v| usize::from(v) + 1).collect())
}

/// Strategy terms left uniterated by [`Variant::Published`].
pub const PUBLISHED_SKIPPED_TERMS: usize = 8;

/// The intermediate products of the pipeline for one message.
#[derive(Clone, Debug, PartialEq)]
pub struct InitialCondition {
    /// The padded string `D`.
    pub padded: BitString,
    /// `u` derived from `D`.
    pub seed: Vec<u8>,
    /// The starting point `(S, E)`.
    pub point: Point,
    /// How many strategy terms the digest iterates over.
    pub iterations: usize,
}

/// Runs the whole preprocessing pipeline up to the starting point.
pub fn initial_condition(input: &[u8], cfg: &HashConfig) -> Result<InitialCondition> {
    let framed = append_length(&encode_message(input, cfg)?);
    let (mirrored, rotation) = match cfg.variant {
        Variant::Canonical => (mirror_extend(&framed), Rotation::Left),
        Variant::Published => (mirror_extend_shared_pivot(&framed), Rotation::Right),
    };
    let d = pad_to_512(&mirrored)?;
    let e = fold_e(&d)?;
    let seed = derive_u_rotating(&d, rotation)?;
    let strategy = derive_s(&seed)?;
    let iterations = match cfg.variant {
        Variant::Canonical => strategy.len(),
        Variant::Published => strategy.len() - PUBLISHED_SKIPPED_TERMS,
    };
    Ok(InitialCondition {
        point: Point::new(strategy, e)?,
        padded: d,
        seed,
        iterations,
    })
}

/// Hashes `input`: the final state of `G_{f_0}` iterated over the derived
/// strategy (all of it, for the canonical variant).
pub fn digest(input: &[u8], cfg: &HashConfig) -> Result<Digest> {
    let ic = initial_condition(input, cfg)?;
    let last = iterate(&Negation, &ic.point, ic.iterations)?;
    let (_, state) = last.into_parts();
    Ok(Digest { state })
}

/// A 256-bit digest; displays as 64 uppercase hex digits, cell 1 first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digest {
    state: StateVector,
}

impl Digest {
    pub fn from_state(state: StateVector) -> Result<Self> {
        if state.width() != WIDTH {
            return Err(Error::WidthMismatch {
                left: state.width(),
                right: WIDTH,
            });
        }
        Ok(Digest { state })
    }

    pub fn state(&self) -> &StateVector {
        &self.state
    }

    pub fn to_hex(&self) -> String {
        self.state.to_hex().expect("256 is a multiple of 4")
    }

    /// Number of differing bits.
    pub fn flipped_bits(&self, other: &Digest) -> usize {
        self.state.hamming(&other.state).expect("digests share a width")
    }
}

impl fmt::Display for Digest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for Digest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digest({})", self.to_hex())
    }
}

impl FromStr for Digest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() != WIDTH / 4 {
            return Err(Error::Parse("digest (expected 64 hex digits)"));
        }
        Digest::from_state(StateVector::from_hex(s)?)
    }
}

/// Streaming form of the hash: a Mealy machine whose input is the `u`
/// sequence and whose state is the current cell vector.
///
/// Each fed term advances the strategy recurrence by one value and toggles
/// the corresponding cell, so only the previous strategy value is kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChaosMachine {
    state: StateVector,
    step_counter: u64,
    last_term: Option<u8>,
}

impl ChaosMachine {
    pub fn new(initial: StateVector) -> Result<Self> {
        if initial.width() != WIDTH {
            return Err(Error::WidthMismatch {
                left: initial.width(),
                right: WIDTH,
            });
        }
        Ok(ChaosMachine {
            state: initial,
            step_counter: 0,
            last_term: None,
        })
    }

    /// Machine seeded with the folded state of an already padded `D`.
    pub fn for_padded(d: &BitString) -> Result<Self> {
        Self::new(fold_e(d)?)
    }

    /// Consumes one `u` term and emits the cell it toggled.
    pub fn feed(&mut self, u_term: u8) -> usize {
        let raw = next_strategy_value(u_term, self.last_term, self.step_counter);
        let cell = usize::from(raw) + 1;
        self.state.toggle(cell);
        self.last_term = Some(raw);
        self.step_counter += 1;
        cell
    }

    pub fn feed_all<I: IntoIterator<Item = u8>>(&mut self, terms: I) {
        for t in terms {
            self.feed(t);
        }
    }

    pub fn read(&self) -> &StateVector {
        &self.state
    }

    pub fn steps(&self) -> u64 {
        self.step_counter
    }

    pub fn last_term(&self) -> Option<u8> {
        self.last_term
    }

    pub fn digest(&self) -> Digest {
        Digest {
            state: self.state.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PAPER: HashConfig = HashConfig::new(Mode::PaperText);
    const BYTES: HashConfig = HashConfig::new(Mode::RawBytes);

    fn bs(s: &str) -> BitString {
        BitString::from_binary(s).unwrap()
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode_message(b"T", &PAPER).unwrap(), bs("10101001"));
        assert_eq!(
            encode_message(b"Th", &PAPER).unwrap(),
            bs("1010100 1101000 1")
        );
        assert_eq!(encode_message(b"", &PAPER).unwrap(), bs("1"));
        assert_eq!(
            encode_message(&[0xFF, 0x01], &BYTES).unwrap(),
            bs("11111111 00000001 1")
        );
        assert_eq!(
            encode_message(b"ab\xC3", &PAPER),
            Err(Error::NonAscii {
                position: 2,
                byte: 0xC3
            })
        );
    }

    #[test]
    fn length_examples() {
        let s = BitString::from_bits(alloc::vec![true; 120]);
        let out = append_length(&s);
        assert_eq!(out.len(), 128);
        assert_eq!(&out.to_binary()[120..], "11110001");
        assert_eq!(append_length(&bs("0")), bs("011"));
        assert_eq!(append_length(&BitString::new()), bs("01"));
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(mirror_extend(&bs("10")), bs("1001"));
        assert_eq!(mirror_extend(&BitString::new()), BitString::new());
        assert_eq!(mirror_extend(&bs("110")), bs("110011"));
    }

    #[test]
    fn pad_examples() {
        let s = BitString::from_bits((0..256).map(|i| i % 7 == 0).collect());
        let d = pad_to_512(&s).unwrap();
        assert_eq!(d.len(), 512);
        assert_eq!(&d.bits()[..256], s.bits());
        assert_eq!(&d.bits()[256..], s.bits());

        let s = BitString::from_bits((0..512).map(|i| i % 5 == 0).collect());
        assert_eq!(pad_to_512(&s).unwrap(), s);

        let s = BitString::from_bits((0..513).map(|i| i % 3 == 0).collect());
        let d = pad_to_512(&s).unwrap();
        assert_eq!(d.len(), 1024);
        assert_eq!(&d.bits()[..513], s.bits());
        assert_eq!(&d.bits()[513..], &s.bits()[..511]);

        assert_eq!(pad_to_512(&bs("1")).unwrap(), BitString::from_bits(alloc::vec![true; 512]));
        assert!(pad_to_512(&BitString::new()).is_err());
    }

    #[test]
    fn fold_examples() {
        let s: Vec<bool> = (0..256).map(|i| i % 11 < 4).collect();
        let doubled = BitString::from_bits([s.clone(), s.clone()].concat());
        assert_eq!(fold_e(&doubled).unwrap().count_ones(), 0);

        let with_zero = BitString::from_bits([s.clone(), alloc::vec![false; 256]].concat());
        assert_eq!(fold_e(&with_zero).unwrap(), StateVector::from_bits(s).unwrap());

        assert!(fold_e(&BitString::from_bits(alloc::vec![true; 300])).is_err());
        assert!(fold_e(&BitString::new()).is_err());
    }

    #[test]
    fn derive_u_examples() {
        let d = bs("00000001 00000000");
        let u = derive_u(&d).unwrap();
        assert_eq!(u.len(), 16);
        assert_eq!(&u[..4], &[1, 0, 2, 0]);
        // Pass p reads the single set bit p places further left.
        for p in 0..8 {
            assert_eq!(u[2 * p], 1 << p);
            assert_eq!(u[2 * p + 1], 0);
        }
        assert!(derive_u(&BitString::from_bits(alloc::vec![false; 512]))
            .unwrap()
            .iter()
            .all(|&v| v == 0));
        assert_eq!(derive_u(&BitString::from_bits(alloc::vec![true; 512])).unwrap().len(), 512);
        assert!(derive_u(&bs("101")).is_err());
    }

    #[test]
    fn derive_u_rotation_wraps_around() {
        // Pass 1 moves the first bit to the end of D.
        let d = bs("10000000 00000000");
        let u = derive_u(&d).unwrap();
        assert_eq!(&u[..4], &[128, 0, 0, 1]);
    }

    #[test]
    fn derive_s_examples() {
        assert_eq!(derive_raw_strategy(&[3, 5, 7]).unwrap(), [3, 12, 33]);
        assert_eq!(derive_raw_strategy(&[0, 0, 0, 0]).unwrap(), [0, 1, 4, 11]);
        let s = derive_s(&[255]).unwrap();
        assert_eq!(s.terms(), &[256]);
        assert_eq!(derive_s(&[3, 5, 7]).unwrap().terms(), &[4, 13, 34]);
        assert!(derive_s(&[]).is_err());
        // n wraps modulo 256 as well.
        let long = derive_raw_strategy(&[0; 300]).unwrap();
        assert_eq!(long[257], long[256].wrapping_mul(2).wrapping_add(1));
    }

    #[test]
    fn digest_is_64_uppercase_hex() {
        for input in [&b""[..], b"a", b"The original text"] {
            let h = digest(input, &PAPER).unwrap().to_hex();
            assert_eq!(h.len(), 64);
            assert!(h.chars().all(|c| c.is_ascii_digit() || c.is_ascii_uppercase()));
            assert_eq!(digest(input, &PAPER).unwrap().to_hex(), h);
        }
    }

    #[test]
    fn digest_hex_parses_back() {
        let d = digest(b"round trip", &BYTES).unwrap();
        assert_eq!(d.to_hex().parse::<Digest>().unwrap(), d);
        assert_eq!(d.to_hex().to_lowercase().parse::<Digest>().unwrap(), d);
        assert!("ABC".parse::<Digest>().is_err());
    }

    #[test]
    fn machine_examples() {
        let mut m = ChaosMachine::new(StateVector::zeros(WIDTH).unwrap()).unwrap();
        assert_eq!(m.feed(3), 4);
        assert!(m.read().bit(4));
        assert_eq!(m.read().count_ones(), 1);
        assert_eq!(m.steps(), 1);
        assert_eq!(m.last_term(), Some(3));

        let fresh = ChaosMachine::new(StateVector::zeros(WIDTH).unwrap()).unwrap();
        let mut idle = fresh.clone();
        idle.feed_all(core::iter::empty());
        assert_eq!(idle, fresh);
        assert!(ChaosMachine::new(StateVector::zeros(8).unwrap()).is_err());
    }

    #[test]
    fn machine_matches_batch_digest() {
        for input in [&b""[..], b"x", b"streaming equals batch"] {
            let ic = initial_condition(input, &BYTES).unwrap();
            let mut m = ChaosMachine::for_padded(&ic.padded).unwrap();
            m.feed_all(ic.seed.iter().copied());
            assert_eq!(m.digest(), digest(input, &BYTES).unwrap());
        }
    }

    #[test]
    fn shared_pivot_mirror() {
        assert_eq!(mirror_extend_shared_pivot(&bs("10")), bs("101"));
        assert_eq!(mirror_extend_shared_pivot(&bs("1")), bs("1"));
        assert_eq!(mirror_extend_shared_pivot(&BitString::new()), BitString::new());
    }

    #[test]
    fn right_rotation_moves_last_bit_to_front() {
        let d = bs("00000000 00000001");
        let u = derive_u_rotating(&d, Rotation::Right).unwrap();
        assert_eq!(&u[..4], &[0, 1, 128, 0]);
    }

    #[test]
    fn published_variant_iterates_all_but_eight() {
        let cfg = PAPER.with_variant(Variant::Published);
        let ic = initial_condition(b"abc", &cfg).unwrap();
        assert_eq!(ic.point.strategy().len(), 512);
        assert_eq!(ic.iterations, 504);
    }

    #[test]
    fn pipeline_lengths() {
        for len in [0usize, 1, 10, 63, 64, 200] {
            let input: Vec<u8> = (0..len).map(|i| (i * 37 % 128) as u8).collect();
            let ic = initial_condition(&input, &PAPER).unwrap();
            assert_eq!(ic.padded.len() % 512, 0);
            assert!(ic.padded.len() >= 512);
            assert_eq!(ic.point.strategy().len(), ic.padded.len());
        }
    }
}
