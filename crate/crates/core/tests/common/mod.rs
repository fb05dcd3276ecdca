#![allow(dead_code)]

use chaos_iter::{StateVector, Strategy};
use rand::Rng;

/// `E XOR p` where `p_i` is the parity of how often cell `i` occurs among
/// `terms`. For the vectorial negation this is exactly the state reached by
/// iterating over `terms`.
pub fn parity_oracle(state: &StateVector, terms: &[usize]) -> StateVector {
    let mut counts = vec![0u32; state.width() + 1];
    for &t in terms {
        counts[t] += 1;
    }
    StateVector::from_bits((1..=state.width()).map(|c| state.bit(c) ^ (counts[c] % 2 == 1))).unwrap()
}

pub fn random_state<R: Rng>(rng: &mut R, width: usize) -> StateVector {
    StateVector::from_bits((0..width).map(|_| rng.random::<bool>())).unwrap()
}

pub fn random_strategy<R: Rng>(rng: &mut R, width: usize, len: usize) -> Strategy {
    Strategy::new(width, (0..len).map(|_| rng.random_range(1..=width)).collect()).unwrap()
}

/// Reference pipeline written over `String`s of '0'/'1', one stage per line,
/// independent of the library's bit handling.
pub fn reference_initial_condition(msg: &[u8], bits_per_symbol: usize) -> (Vec<bool>, Vec<usize>) {
    let mut s: String = msg
        .iter()
        .map(|b| format!("{:0width$b}", b, width = bits_per_symbol))
        .collect();
    s.push('1');
    s += &format!("{:b}", s.len());
    s.push('1');
    let rev: String = s.chars().rev().collect();
    s += &rev;
    let target = s.len().div_ceil(512).max(1) * 512;
    let d: String = s.repeat(target / s.len() + 1)[..target].to_string();

    let mut e = vec![false; 256];
    for block in d.as_bytes().chunks(256) {
        for (j, &c) in block.iter().enumerate() {
            e[j] ^= c == b'1';
        }
    }

    let mut u = Vec::new();
    let mut w = d.clone();
    for pass in 0..8 {
        if pass > 0 {
            w = format!("{}{}", &w[1..], &w[..1]);
        }
        for i in (0..w.len()).step_by(8) {
            u.push(u32::from_str_radix(&w[i..i + 8], 2).unwrap());
        }
    }
    let mut cells = Vec::with_capacity(u.len());
    let mut prev = 0u32;
    for (n, &x) in u.iter().enumerate() {
        let v = if n == 0 { x } else { (x + 2 * prev + n as u32) % 256 };
        cells.push(v as usize + 1);
        prev = v;
    }
    (e, cells)
}
