//! Quaternary linear codes and the quantum codes they give.
//!
//! The crate covers:
//!
//! - exact GF(4) arithmetic over bitsliced words, with the hermitian and
//!   trace inner products ([`gf4`]);
//! - linear codes: row reduction, hermitian duals, shortening, circulant
//!   generators and the self-orthogonality predicates ([`codes`]);
//! - weight enumerators by Gray-code enumeration and the MacWilliams
//!   transform ([`enumerator`]);
//! - the doubling construction of `[2n+1, k+1]` and `[2n+2, k+2]`
//!   self-orthogonal codes from a pair of `[n, k]` ones ([`doubling`]);
//! - `[[n, k, d]]` parameters and purity of the associated quantum codes
//!   ([`quantum`]);
//! - a small catalog of named codes ([`catalog`]) and the text formats and
//!   command line built on top ([`format`], [`cli`]).
//!
//! ```
//! use gf4codes::{catalog, doubling, quantum, Budget};
//!
//! let a = catalog::get("c13_6_a").unwrap().code;
//! let b = catalog::get("c13_6_b").unwrap().code;
//! let x1 = doubling::OddDualVector::all_ones(&a).unwrap();
//! let x2 = doubling::OddDualVector::all_ones(&b).unwrap();
//! let c = doubling::double_even(&a, &b, &x1, &x2).unwrap();
//! let q = quantum::quantum_params(&c, Budget::default()).unwrap();
//! assert_eq!(q.to_string(), "[[28,12,6]] pure");
//! ```

pub mod catalog;
pub mod cli;
pub mod codes;
pub mod doubling;
pub mod enumerator;
pub mod error;
pub mod format;
pub mod gf4;
pub mod quantum;

pub use codes::{circulant, GeneratorMatrix, LinearCode};
pub use enumerator::{Budget, WeightEnumerator};
pub use error::{Error, Result};
pub use gf4::{Gf4, Gf4Vector};
pub use quantum::QuantumParams;
