//! Conjugacy classes and the class-sum algebra of the block permutation groups
//! `B_{kn}^k ≅ S_k ≀ S_n`.

pub mod budget;
pub mod center;
pub mod cli;
pub mod conjugacy;
pub mod error;
pub mod partitions;
pub mod perm;
pub mod wreath;

pub use budget::Budget;
pub use error::{Error, Result};
pub use partitions::Partition;
pub use perm::Perm;
pub use wreath::{BlockPermutation, ClassType, WreathElement};
