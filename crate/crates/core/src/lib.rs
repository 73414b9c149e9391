//! Wonderful varieties and simple immersions.
//!
//! Decides whether a wonderful variety, given by its combinatorial invariants,
//! embeds equivariantly in the projective space of a simple module, and
//! re-checks the explicit rank-1 computations behind that decision in exact
//! arithmetic.

pub mod rootsys;
pub mod symalg;
pub mod classify;
pub mod descriptor;
pub mod exec;
pub mod picard;
pub mod strict;
pub mod verify;
pub mod cli;
