//! Exact computer algebra for two towers of purely ramified extensions: the
//! cyclotomic number-field tower over Q and the Carlitz module tower over
//! F_r(Y). The library constructs relative Eisenstein minimal polynomials of
//! the tower uniformizers exactly and machine-checks coefficient valuation
//! bounds, congruences, trace identities and related conjectures at desk
//! scale.

pub mod carlitz;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod fq;
pub mod frac;
pub mod linalg;
pub mod padic;
pub mod pitower;
pub mod poly;
pub mod report;
pub mod ring;

pub use error::Error;
