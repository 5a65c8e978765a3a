//! Exact blow-up invariants on smooth surfaces: multiplicity clusters of
//! finite-colength monomial ideals and plane-curve pencils, colength and
//! Samuel multiplicity, integral closure, genus of pencils, and
//! closed-form genus bounds for hypersurfaces and polarized K3 surfaces.
//! All verdicts are decided in exact integer/rational arithmetic.

pub mod algebra;
pub mod blowup;
pub mod bounds;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod parse;
pub mod pencil;
pub mod staircase;

pub use error::{Error, Result};
