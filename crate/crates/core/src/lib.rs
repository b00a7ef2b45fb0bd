//! Feasible edge-replacement groups of labeled graphs.
//!
//! The crate decides the local-amoeba, global-amoeba, stem-symmetric and
//! hang-symmetric properties of labeled graphs by building the groups
//! generated by their feasible edge-replacements, and provides executable
//! checks for the structural statements relating these properties under
//! adding leaves, adding isolated vertices and taking comb products.

pub mod classify;
pub mod construct;
pub mod error;
pub mod fer;
pub mod lgraph;
pub mod oracle;
pub mod permgroup;

pub use error::{Error, Result};
