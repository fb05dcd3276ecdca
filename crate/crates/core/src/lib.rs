//! Discrete chaotic iterations over Boolean state vectors.
//!
//! The crate is organised bottom-up:
//!
//! * [`dynamics`] holds the state, strategy and phase-space point types,
//!   the one-cell update `F_f`, the shift map and the combined step `G_f`.
//! * [`metric`] measures distances in the phase space.
//! * [`devaney`] builds and checks constructive witnesses for regularity,
//!   transitivity and sensitivity of the vectorial negation.
//! * [`hash`] turns a message into an initial condition and iterates it into
//!   a 256-bit digest, either in one shot or through the streaming
//!   [`hash::ChaosMachine`].
//! * [`avalanche`] measures how many digest bits move under one-bit input flips.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod avalanche;
pub mod devaney;
pub mod dynamics;
mod error;
pub mod hash;
pub mod metric;

pub use error::{Error, Result};

pub use dynamics::{
    apply_f, discrete_delta, initial, iterate, shift, step, vectorial_negation, Identity,
    IterateFn, Negation, Orbit, Point, StateVector, Strategy,
};
pub use metric::{distance, state_distance, strategy_distance, MetricConfig};
