//! Exact Euler/Bernoulli polynomial algebra, integrals of their products over
//! `[0, 1]`, integration-by-parts reduction chains, and an auditor that checks
//! closed-form identities against brute-force ground truth.
//!
//! Everything is computed over arbitrary-precision rationals; no floating
//! point is used anywhere, and every comparison is exact.

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod identities;
pub mod oracle;
pub mod polyalg;
pub mod special_sequences;

pub use error::{Error, Result};
pub use exactnum::{beta_int, binomial, factorial, Rational};
pub use polyalg::{bernoulli_poly, euler_poly, Family, Poly};
pub use special_sequences::{bernoulli_numbers, euler_numbers, SequenceKind, SequenceTable};
