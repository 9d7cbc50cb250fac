//! Exact-arithmetic umbral calculus.
//!
//! The crate builds Sheffer and associated polynomial sequences from
//! generating-function pairs over arbitrary-precision rationals or over the
//! rational-function field Q(lambda), provides the transfer formula and the
//! Pincherle derivative, and ships a registry of machine-checked identities
//! for the lambda-deformed special families (Daehee, Changhee, Mittag-Leffler
//! and relatives) with exact, coefficient-level mismatch localization.
//!
//! There is no floating point anywhere: every comparison is exact equality
//! in Q or Q(lambda).
//!
//! Start with the runnable programs under `examples/` for a tour, or with
//! [`families::family_sequence`] and [`identities::verify`].

pub mod cli;
pub mod coefficients;
mod error;
pub mod families;
pub mod identities;
pub mod polyop;
pub mod render;
pub mod series;
pub mod umbral;

pub use error::{Error, Result};
