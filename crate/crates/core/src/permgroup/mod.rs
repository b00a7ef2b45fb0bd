//! Exact finite permutation groups: composition, Schreier–Sims, orbits,
//! block systems and imprimitive wreath products.

mod blocks;
mod domain;
mod group;
mod perm;
mod wreath;

pub use blocks::{is_block_system, minimal_block_system, preserves_partition, BlockSystem};
pub use domain::{Domain, Label};
pub use group::{factorial, GroupJson, PermGroup};
pub use perm::{compose, Permutation};
pub use wreath::wreath_product;

pub(crate) use domain::same_domain;
