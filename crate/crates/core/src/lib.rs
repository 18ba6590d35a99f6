//! Exact computations with Jack(gl_N) symmetric functions and the Yangian
//! Gelfand–Zetlin decomposition of the fermionic Fock space of affine sl_N.

pub mod arith;
pub mod error;

pub use arith::{Param, ParamRational, Poly, Rational};
pub use error::{Error, Result};
pub mod partition;
pub mod symfunc;

pub use partition::{Composition, Partition};
pub use symfunc::{Basis, SymFunc};
pub mod macdonald;
pub mod dunkl;
pub mod fock;
pub mod yangian;
