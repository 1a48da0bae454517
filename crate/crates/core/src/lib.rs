//! Exact computations in `E_n(u)`, the algebra of braids and ties.
//!
//! - [`word`], [`scalar`]: elements over `Q(u)` and their text syntax.
//! - [`rewrite`]: normal forms, identity checks, structure constants, dimensions.
//! - [`diagram`]: tied braid diagrams.
//! - [`symmetric`], [`specht`], [`hyperoct`]: representations of `E_n(1)`
//!   through the hyperoctahedral group.
//! - [`cli`]: the `tiealg` command line.

pub mod cli;
pub mod diagram;
pub mod hyperoct;
pub mod linalg;
pub mod rewrite;
pub mod scalar;
pub mod specht;
pub mod symmetric;
pub mod word;
