//! Exact-arithmetic obstructions for rational cuspidal curves of type `(a, b)`
//! in the Hirzebruch surface `X_e`.
//!
//! Two independent necessary conditions are implemented:
//!
//! * the semigroup-counting inequality `R(m + g) >= P(s1, s2)` coming from
//!   Heegaard–Floer d-invariants of the boundary of a tubular neighbourhood
//!   ([`hf`]);
//! * semicontinuity of the spectrum, comparing the spectra of the cusps with
//!   the spectrum of the link at infinity ([`spectrum`]).
//!
//! [`enumerate`] generates every genus-compatible configuration of
//! one-Puiseux-pair cusps and runs both filters over it. [`dedekind`] holds
//! the sawtooth/Dedekind-sum machinery used for the large-`e` asymptotics of
//! the spectrum at infinity.
//!
//! Everything is exact: fractions are [`Rational`], never floats.

pub mod curve;
pub mod dedekind;
pub mod enumerate;
mod error;
pub mod hf;
mod rational;
pub mod semigroup;
pub mod spectrum;

pub use curve::{CurveType, CuspConfiguration, PuiseuxCusp};
pub use error::{Error, Result};
pub use rational::Rational;
