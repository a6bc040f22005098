//! Exact computations with the rotation-invariant web basis of the flamingo
//! Specht modules `S^(d^3, 1^(n-3d))`.
//!
//! The crate is organised bottom-up:
//!
//! - [`tableaux`]: shapes, tableaux and weakly noncrossing set partitions.
//! - [`plabic`]: plabic graphs as rotation systems, trips, faces and depth.
//! - [`webs`]: augmented webs and the bijection with 3-weakly noncrossing partitions.
//! - [`invariants`]: polynomials, perfect orientations, labellings and web invariants.
//! - [`skein`]: skein relations and reduction to the augmented web basis.
//! - [`weblike`]: decomposition of web invariants into `SL3` web invariants.
//! - [`sieving`]: q-analogues and the cyclic sieving check.
//! - [`cli`]: the command-line front end and renderers.

pub mod cli;
pub mod error;
pub mod invariants;
pub mod plabic;
pub mod sieving;
pub mod skein;
pub mod tableaux;
pub mod weblike;
pub mod webs;

pub use error::{Error, Result};
