//! Exact evaluation of generalized m-step Fibonacci recurrences
//!
//! ```text
//! V(n) = r_1 V(n-1) + ... + r_m V(n-m)
//! ```
//!
//! at any integer index, together with the Hankel determinant
//! `f(n) = det[V(n + m - 1 - i - j)]` and its closed form
//! `f(n) = y(n) r_m^n f(0)`.
//!
//! ```
//! use mstep::{catalog, simson};
//!
//! let fib = &catalog::lookup("horadam/fibonacci").unwrap().spec;
//! assert_eq!(fib.term(-6).unwrap().to_string(), "-8");
//! let report = simson::verify_simson(fib, -10, 10).unwrap();
//! assert!(report.pass);
//! ```

pub mod catalog;
pub mod error;
pub mod fast;
pub mod matrix;
pub mod rational;
pub mod recurrence;
pub mod simson;

pub use catalog::{Catalog, CatalogEntry, Family};
pub use error::{Error, Result};
pub use fast::{kitamasa_term, matrix_pow_term, Algorithm, CharPoly, CompanionMatrix};
pub use matrix::Matrix;
pub use rational::Rational;
pub use recurrence::{SequenceSpec, TermCache};
pub use simson::{ClosedForm, HankelWindow, SimsonReport};
