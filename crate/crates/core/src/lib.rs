//! Bound states of the one-dimensional pseudoharmonic oscillator
//! `V(x) = x²/2 + α/(2x²)` in oscillator units (ħ = m = ω = 1), for the singular
//! potential and for its constant-cutoff regularization.
//!
//! * [`specfun`]: gamma, Kummer M, Tricomi U, Bessel K, Laguerre, Si.
//! * [`unreg`]: closed-form spectrum and eigenfunctions of the singular potential.
//! * [`regspec`]: transcendental eigenvalue conditions of the regularized potential.
//! * [`asymptotics`]: small-cutoff corrections and the ground-state coefficient `c0`.
//! * [`matmech`]: sine-basis matrix mechanics in an enclosing infinite well.

// Tabulated constants keep all their digits; `!(x > 0.0)` forms also reject NaN.
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod error;
pub mod matmech;
pub mod model;
pub mod quad;
pub mod reference;
pub mod regspec;
pub mod roots;
pub mod specfun;
pub mod unreg;

pub use error::{Error, Result};
pub use model::{BranchLabel, EigenSolution, Method, Parity, PotentialSpec};
