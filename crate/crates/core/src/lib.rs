//! Congruence quotients of Hecke groups and the regular maps they carry.
//!
//! The crate enumerates `H_q / H_q(n)` for `q ∈ {3, 4, 6}` in exact residue
//! arithmetic, labels the vertices of the resulting maps with Hecke–Farey
//! coordinates, and reconstructs the 20-gon side pairing of Bring's genus-4
//! map `M₄(5)` from a Farey circuit.

pub mod coords;
pub mod error;
pub mod exact;
pub mod graph;
pub mod group;
pub mod map;
pub mod names;
pub mod perm;
pub mod polygon;
pub mod render;
pub mod verify;
pub mod ring;

pub use error::{Error, Result};
