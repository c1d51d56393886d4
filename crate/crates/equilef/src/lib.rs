//! Exact computation of equivariant fixed-point invariants on finite proper
//! G-CW complexes: orbifold Lefschetz numbers, equivariant Lefschetz classes,
//! Burnside-ring degrees, local Lefschetz classes, character maps, universal
//! equivariant Euler characteristics and equivariant vector-field indices.
//!
//! Everything is exact: integers and reduced rationals throughout, no
//! floating point. The identities connecting the invariants (global = local,
//! character-map compatibility, Euler characteristic = vector-field index)
//! hold on the nose and are checked as such in the test suite.
//!
//! All values are immutable once validated and every operation is a pure
//! function over shared references, so independent computations can run
//! concurrently without synchronization.

pub mod burnside;
pub mod cli;
pub mod error;
pub mod fingroup;
pub mod gcw;
pub mod io;
pub mod lefschetz;
pub mod linalg;
pub mod localfix;
pub mod presented;
pub mod realize;

pub use error::{Error, Result};
pub use linalg::{rat, rat_frac, QMat, Rat};
