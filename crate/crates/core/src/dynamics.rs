//! State vectors, strategies and the chaotic-iteration maps.
//!
//! Cells are numbered from 1 to `N`. In every textual rendering cell 1 is the
//! leftmost (most significant) bit. Strategy terms are stored from index 0,
//! so `initial` returns the term at storage index 0.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

const WORD: usize = 64;

/// Kronecker-style discrete metric on integers: 0 when equal, 1 otherwise.
#[inline]
pub fn discrete_delta<T: PartialEq>(x: T, y: T) -> u8 {
    u8::from(x != y)
}

/// A vector of `N` Boolean cells.
///
/// Bits are packed most-significant-first into 64-bit words; padding bits in
/// the last word are always zero so derived equality and hashing are exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateVector {
    width: usize,
    words: Vec<u64>,
}

impl StateVector {
    /// All-zero state of the given width.
    pub fn zeros(width: usize) -> Result<Self> {
        if width == 0 {
            return Err(Error::ZeroWidth);
        }
        Ok(StateVector {
            width,
            words: vec![0; width.div_ceil(WORD)],
        })
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Result<Self> {
        let mut words = Vec::new();
        let mut width = 0;
        for b in bits {
            if width % WORD == 0 {
                words.push(0);
            }
            if b {
                *words.last_mut().unwrap() |= 1 << (WORD - 1 - width % WORD);
            }
            width += 1;
        }
        if width == 0 {
            return Err(Error::ZeroWidth);
        }
        Ok(StateVector { width, words })
    }

    /// Parses a string of `0`/`1` characters, cell 1 first.
    pub fn from_binary(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse("binary state")),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bits(bits)
    }

    /// Parses hexadecimal digits (either case), four cells per digit.
    pub fn from_hex(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len() * 4);
        for c in s.chars() {
            let v = c.to_digit(16).ok_or(Error::Parse("hexadecimal state"))?;
            bits.extend((0..4).rev().map(|i| (v >> i) & 1 == 1));
        }
        Self::from_bits(bits)
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    fn locate(&self, cell: usize) -> (usize, u64) {
        assert!(
            (1..=self.width).contains(&cell),
            "cell {cell} outside 1..={}",
            self.width
        );
        let i = cell - 1;
        (i / WORD, 1 << (WORD - 1 - i % WORD))
    }

    /// Value of `cell` (1-based). Panics when out of range.
    #[inline]
    pub fn bit(&self, cell: usize) -> bool {
        let (w, m) = self.locate(cell);
        self.words[w] & m != 0
    }

    #[inline]
    pub fn set(&mut self, cell: usize, value: bool) {
        let (w, m) = self.locate(cell);
        if value {
            self.words[w] |= m;
        } else {
            self.words[w] &= !m;
        }
    }

    #[inline]
    pub fn toggle(&mut self, cell: usize) {
        let (w, m) = self.locate(cell);
        self.words[w] ^= m;
    }

    pub fn check_cell(&self, cell: usize) -> Result<()> {
        if (1..=self.width).contains(&cell) {
            Ok(())
        } else {
            Err(Error::CellOutOfRange {
                cell,
                width: self.width,
            })
        }
    }

    /// Cells in order, cell 1 first.
    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.width).map(move |c| self.bit(c))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Componentwise exclusive or.
    pub fn xor(&self, other: &StateVector) -> Result<StateVector> {
        self.same_width(other)?;
        Ok(StateVector {
            width: self.width,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a ^ b)
                .collect(),
        })
    }

    pub(crate) fn xor_assign(&mut self, other: &StateVector) {
        debug_assert_eq!(self.width, other.width);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Number of cells where the two states differ.
    pub fn hamming(&self, other: &StateVector) -> Result<usize> {
        self.same_width(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum())
    }

    /// Cells (ascending) where the two states differ.
    pub fn differing_cells(&self, other: &StateVector) -> Result<Vec<usize>> {
        self.same_width(other)?;
        Ok((1..=self.width)
            .filter(|&c| self.bit(c) != other.bit(c))
            .collect())
    }

    pub(crate) fn same_width(&self, other: &StateVector) -> Result<()> {
        if self.width == other.width {
            Ok(())
        } else {
            Err(Error::WidthMismatch {
                left: self.width,
                right: other.width,
            })
        }
    }

    pub fn to_binary(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }

    /// Uppercase hexadecimal, four cells per digit. `None` unless the width is
    /// a multiple of four.
    pub fn to_hex(&self) -> Option<String> {
        if self.width % 4 != 0 {
            return None;
        }
        let mut out = String::with_capacity(self.width / 4);
        for nibble in 0..self.width / 4 {
            let v = (0..4).fold(0u32, |acc, i| {
                (acc << 1) | u32::from(self.bit(nibble * 4 + i + 1))
            });
            out.push(char::from_digit(v, 16).unwrap().to_ascii_uppercase());
        }
        Some(out)
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_binary())
    }
}

impl fmt::Debug for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StateVector({})", self.to_binary())
    }
}

/// Componentwise complement of `state`.
pub fn vectorial_negation(state: &StateVector) -> StateVector {
    let mut words: Vec<u64> = state.words.iter().map(|w| !w).collect();
    let tail = state.width % WORD;
    if tail != 0 {
        *words.last_mut().unwrap() &= !0u64 << (WORD - tail);
    }
    StateVector {
        width: state.width,
        words,
    }
}

/// A finite sequence of cell indices in `1..=width`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Strategy {
    width: usize,
    terms: Vec<usize>,
}

impl Strategy {
    pub fn new(width: usize, terms: Vec<usize>) -> Result<Self> {
        if width == 0 {
            return Err(Error::ZeroWidth);
        }
        if let Some(&cell) = terms.iter().find(|&&t| t == 0 || t > width) {
            return Err(Error::CellOutOfRange { cell, width });
        }
        Ok(Strategy { width, terms })
    }

    pub fn empty(width: usize) -> Result<Self> {
        Self::new(width, Vec::new())
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn terms(&self) -> &[usize] {
        &self.terms
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn into_terms(self) -> Vec<usize> {
        self.terms
    }

    /// The first `len` terms (or all of them if shorter).
    pub fn prefix(&self, len: usize) -> Strategy {
        Strategy {
            width: self.width,
            terms: self.terms[..len.min(self.terms.len())].to_vec(),
        }
    }

    /// The strategy with its first `n` terms dropped, i.e. `n` shifts.
    pub fn skip(&self, n: usize) -> Result<Strategy> {
        if n > self.terms.len() {
            return Err(Error::ExhaustedStrategy {
                step: self.terms.len(),
            });
        }
        Ok(Strategy {
            width: self.width,
            terms: self.terms[n..].to_vec(),
        })
    }

    /// Concatenation; widths must agree.
    pub fn concat(&self, tail: &Strategy) -> Result<Strategy> {
        if self.width != tail.width {
            return Err(Error::WidthMismatch {
                left: self.width,
                right: tail.width,
            });
        }
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&tail.terms);
        Ok(Strategy {
            width: self.width,
            terms,
        })
    }

    /// Repeats the terms cyclically until exactly `len` terms are produced.
    /// An empty strategy cycles to an empty strategy.
    pub fn cycled(&self, len: usize) -> Strategy {
        let terms = if self.terms.is_empty() {
            Vec::new()
        } else {
            self.terms.iter().copied().cycle().take(len).collect()
        };
        Strategy {
            width: self.width,
            terms,
        }
    }
}

/// The shift map: drops the first term.
pub fn shift(strategy: &Strategy) -> Result<Strategy> {
    strategy.skip(1)
}

/// The initial-term map: returns the first term.
pub fn initial(strategy: &Strategy) -> Result<usize> {
    strategy
        .terms
        .first()
        .copied()
        .ok_or(Error::ExhaustedStrategy { step: 0 })
}

/// A point of the phase space: a strategy together with a state.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Point {
    strategy: Strategy,
    state: StateVector,
}

impl Point {
    pub fn new(strategy: Strategy, state: StateVector) -> Result<Self> {
        if strategy.width != state.width {
            return Err(Error::WidthMismatch {
                left: strategy.width,
                right: state.width,
            });
        }
        Ok(Point { strategy, state })
    }

    #[inline]
    pub fn strategy(&self) -> &Strategy {
        &self.strategy
    }

    #[inline]
    pub fn state(&self) -> &StateVector {
        &self.state
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.state.width
    }

    pub fn into_parts(self) -> (Strategy, StateVector) {
        (self.strategy, self.state)
    }
}

/// A total, deterministic map from states of some width to states of the
/// same width.
pub trait IterateFn {
    fn name(&self) -> &str;

    /// The width this function is defined on, or `None` when it applies to
    /// every width.
    fn width(&self) -> Option<usize> {
        None
    }

    fn map(&self, state: &StateVector) -> StateVector;

    /// Component `cell` of `map(state)`. Override when a single component is
    /// cheaper to compute than the whole image.
    fn component(&self, state: &StateVector, cell: usize) -> bool {
        self.map(state).bit(cell)
    }
}

/// Vectorial logical negation `f_0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Negation;

impl IterateFn for Negation {
    fn name(&self) -> &str {
        "negation"
    }

    fn map(&self, state: &StateVector) -> StateVector {
        vectorial_negation(state)
    }

    #[inline]
    fn component(&self, state: &StateVector, cell: usize) -> bool {
        !state.bit(cell)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Identity;

impl IterateFn for Identity {
    fn name(&self) -> &str {
        "identity"
    }

    fn map(&self, state: &StateVector) -> StateVector {
        state.clone()
    }

    #[inline]
    fn component(&self, state: &StateVector, cell: usize) -> bool {
        state.bit(cell)
    }
}

fn check_fn_width<F: IterateFn + ?Sized>(f: &F, width: usize) -> Result<()> {
    match f.width() {
        Some(w) if w != width => Err(Error::WidthMismatch {
            left: w,
            right: width,
        }),
        _ => Ok(()),
    }
}

/// `F_f(k, E)`: recompute cell `k` through `f`, keep every other cell.
pub fn apply_f<F: IterateFn + ?Sized>(f: &F, k: usize, state: &StateVector) -> Result<StateVector> {
    check_fn_width(f, state.width)?;
    state.check_cell(k)?;
    let mut next = state.clone();
    next.set(k, f.component(state, k));
    Ok(next)
}

/// `G_f(S, E) = (shift(S), F_f(initial(S), E))`.
pub fn step<F: IterateFn + ?Sized>(f: &F, point: &Point) -> Result<Point> {
    let k = initial(&point.strategy)?;
    Ok(Point {
        state: apply_f(f, k, &point.state)?,
        strategy: shift(&point.strategy)?,
    })
}

/// `G_f` applied `n` times. Fails without partial output if the strategy has
/// fewer than `n` terms.
pub fn iterate<F: IterateFn + ?Sized>(f: &F, point: &Point, n: usize) -> Result<Point> {
    check_fn_width(f, point.width())?;
    let terms = point.strategy.terms();
    if n > terms.len() {
        return Err(Error::ExhaustedStrategy { step: terms.len() });
    }
    let mut state = point.state.clone();
    for &k in &terms[..n] {
        let v = f.component(&state, k);
        state.set(k, v);
    }
    Ok(Point {
        strategy: point.strategy.skip(n)?,
        state,
    })
}

/// Lazy orbit `x, G_f(x), G_f²(x), …` ending when the strategy is exhausted.
///
/// The first item is the starting point itself.
pub struct Orbit<'a, F: ?Sized> {
    f: &'a F,
    state: StateVector,
    strategy: &'a Strategy,
    pos: usize,
    started: bool,
}

impl<'a, F: IterateFn + ?Sized> Orbit<'a, F> {
    pub fn new(f: &'a F, point: &'a Point) -> Result<Self> {
        check_fn_width(f, point.width())?;
        Ok(Orbit {
            f,
            state: point.state.clone(),
            strategy: &point.strategy,
            pos: 0,
            started: false,
        })
    }

    /// Number of steps taken so far.
    pub fn steps(&self) -> usize {
        self.pos
    }
}

impl<F: IterateFn + ?Sized> Iterator for Orbit<'_, F> {
    type Item = StateVector;

    fn next(&mut self) -> Option<StateVector> {
        if !self.started {
            self.started = true;
            return Some(self.state.clone());
        }
        let &k = self.strategy.terms().get(self.pos)?;
        let v = self.f.component(&self.state, k);
        self.state.set(k, v);
        self.pos += 1;
        Some(self.state.clone())
    }
}
