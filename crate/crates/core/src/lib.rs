//! Partition overlaps, staircase walks, and exact Schur and Littlewood-Schur
//! functions, with checkers for the identities relating them.

pub mod cli;
pub mod identities;
pub mod littlewood_schur;
pub mod overlap;
pub mod partitions;
pub mod polyring;
pub mod schur;
pub mod walks;

pub use overlap::{overlap, OverlapPair, OverlapResult};
pub use partitions::Partition;
pub use polyring::{MultiPoly, Sign, Var, VarSeq};
pub use walks::StaircaseWalk;
