//! Exact symbolic computation with Dunkl operators, Dunkl-Dirac operators
//! and slice functions over the Clifford algebra R_{0,m}.
//!
//! All arithmetic is over the rationals. Polynomials are sparse maps from
//! monomials in x_0, ..., x_m to Clifford coefficients.

pub mod clifford;
pub mod dirac;
pub mod dunkl;
pub mod error;
pub mod fueter;
pub mod intertwine;
pub mod io;
pub mod linalg;
pub mod ops;
pub mod poly;
pub mod random;
pub mod report;
pub mod rational;
pub mod stem;
pub mod suite;

pub use clifford::{Blade, CliffordElement};
pub use dirac::{GammaRoute, MonogenicBasis, OperatorTag};
pub use dunkl::{RootSystem, Singularity, ValidationReport};
pub use error::{Error, Result};
pub use fueter::{LocalDecomposition, ShiftReport, ShiftStep};
pub use intertwine::BiCliffPoly;
pub use poly::{CliffPoly, LinearSubstitution, Monomial};
pub use rational::Rational;
pub use stem::{BiPoly, StemPoly, VekuaParameter};
