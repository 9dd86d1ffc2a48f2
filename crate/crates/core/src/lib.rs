//! Reidemeister numbers and twisted conjugacy for finite groups and integer lattices.

pub mod chars;
pub mod corpus;
pub mod dynamics;
pub mod group;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod modp;
pub mod number;
pub mod twisted;
pub mod verify;

pub use group::{Automorphism, Element, FiniteGroup, GroupError, GroupHom, Partition, Subgroup};
