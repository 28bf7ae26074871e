//! Exact computation on Sturmian and balanced sequences.
//!
//! The crate is `no_std` (it needs `alloc`) and keeps every quantity exact:
//! word exponents and ratios are big rationals, slopes are eventually periodic
//! continued fractions compared against rationals by convergent nesting.
//!
//! * [`words`]: periods, exponents, balance, occurrences, return words and
//!   special factors of finite words.
//! * [`sturmian`]: continued fractions, convergents, standard-sequence
//!   prefixes, the factor-existence window and bispecial descriptors.
//! * [`colouring`]: constant gap sequences, colourings and named presets.
//! * [`critexp`]: brute-force, Sturmian-formula and certification engines for
//!   critical exponents.
//! * [`pansiot`]: finite-word predicates for Pansiot words, stick traces and
//!   residue detectors, plus a bounded DFS over balanced Pansiot words.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod colouring;
pub mod critexp;
mod error;
mod fraction;
pub mod pansiot;
pub mod sturmian;
pub mod words;

pub use error::{Error, Result};
pub use fraction::{Fraction, Rational};
pub use words::{Alphabet, Letter, ParikhVector, Word};
