//! Exact geometric (Clifford) algebra over integer-indexed generators.
//!
//! Every basis blade is a finite set of integer indices: generator
//! `e[i]` squares to +1 for i ≥ 0 and to −1 for i < 0, and distinct
//! generators anticommute. The product of two blades is the blade on
//! the symmetric difference of their index sets, with a sign computed
//! by counting inversion pairs and shared negative indices. Working
//! over all integers at once means a single arithmetic covers every
//! finite signature GA(p,q): the indices −q..p−1 carve out its basis.
//!
//! ```
//! use gacalc::{Multivector, Signature};
//!
//! let x = Multivector::basis_vector(0);
//! let y = Multivector::basis_vector(-1);
//! assert_eq!(x.product(&x), Multivector::one());
//! assert_eq!(y.product(&y), Multivector::scalar(-1.0));
//! assert_eq!(x.product(&y), -y.product(&x));
//!
//! let sig: Signature = "1,1".parse().unwrap();
//! assert!(sig.contains(&x.product(&y)));
//! assert_eq!(sig.dimension().unwrap(), 4);
//! ```
//!
//! Coefficients are `f64`, so arithmetic on integer-valued coefficients
//! (within ±2⁵³) is exact; signs and blades are always exact.
//!
//! The `gacalc` binary wraps this into an expression calculator; see
//! [`cli`] for the subcommands and [`expr`] for the grammar.

pub mod blade;
pub mod cli;
pub mod expr;
pub mod multivector;
pub mod signature;
pub mod word;

pub use blade::{alpha, beta, blade_product, sigma, sym_diff, BasisBlade, Sign, SignedBlade};
pub use expr::{EvalError, Expr, SyntaxError};
pub use multivector::Multivector;
pub use signature::{CayleyTable, Signature, SignatureError};
pub use word::{GeneratorWord, WordTooLong};
