//! Local constants, Whittaker normalizations, matrix coefficients, and
//! Rallis zeta integrals attached to GSp(4) representations, with every
//! closed form cross-checked against an independent numerical or exact
//! arithmetic oracle.

pub mod archzeta;
pub mod checks;
pub mod constants;
pub mod error;
pub mod exact;
pub mod numkit;
pub mod padic;
pub mod report;
pub mod specfile;
pub mod special;
pub mod whittaker;

pub use error::{Error, Result};
