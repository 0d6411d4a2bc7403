//! Permutations of four coordinates and the subgroup machinery of S₄:
//! enumeration, conjugacy classes, tables of marks, stabilizers and orbits.

mod action;
mod classes;
mod lattice;
mod marks;
mod perm;
mod subgroup;

pub use action::{orbits, stabilizer, Orbit};
pub use classes::{classify_subgroup, ClassName, ElementClass, SubgroupClass};
pub use lattice::GroupLattice;
pub use marks::TableOfMarks;
pub use perm::{Permutation, DEGREE};
pub use subgroup::{coset_rep, enumerate_subgroups, Subgroup};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("image table {0:?} is not a permutation of 0..4")]
    NotABijection(Vec<u8>),
    #[error("malformed cycle notation: {0}")]
    BadCycle(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("unknown subgroup class {0}")]
    UnknownClass(String),
    #[error("subgroup {0} is not contained in the ambient group")]
    NotInLattice(String),
    #[error("point set not closed: image of point {point} under {element} matches no listed point")]
    PointsNotClosed { point: usize, element: Permutation },
}
