//! Channel-capacity limits of impulse-radio ultra-wideband links.
//!
//! The capacity of a binary IR-UWB link without inter-symbol interference is
//! one bit per `T_p + d_RMS`, so the channel's RMS delay spread caps the rate
//! at `1/d_RMS` however fast the hardware is. This crate evaluates that bound
//! for ideal, mostly-digital (ADC-limited) and mixed (analog-circuit-limited)
//! transceivers, ships the converter, pulse-generator and channel surveys
//! needed to put numbers on it, sweeps the design space, and checks the
//! no-ISI spacing against synthetic multipath channels.
//!
//! - [`capacity`]: closed-form capacities, derivatives, asymptotes, inverses
//! - [`datasets`]: embedded survey tables, CSV ingestion, queries
//! - [`explorer`]: parameter sweeps and table reproduction
//! - [`isi`]: tapped-delay-line ISI spill oracle
//! - [`cli`]: the `uwbcap` command line front end

pub mod capacity;
pub mod cli;
pub mod datasets;
pub mod error;
pub mod explorer;
pub mod isi;
pub mod output;
pub mod units;

pub use error::{Error, Result};
