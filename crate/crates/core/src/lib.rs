//! Exact computation of the essential algebra of the Burnside biset functor
//! shifted by a finite group `T`, evaluated at a finite group `G`.
//!
//! The pipeline enumerates the generating classes (subgroups `D ≤ G×G×T`
//! with full first and second projections and trivial first and second
//! kernels), scans every factorization through groups smaller than `G` with
//! the Mackey formula, and reduces the resulting composition vectors to an
//! exact rank. The monomial side counts the product-type classes
//! `D_{σ,α,T0}` and checks their multiplication law.

pub mod bitset;
pub mod cache;
pub mod error;
pub mod essential;
pub mod group;
pub mod lattice;
pub mod monomial;
pub mod oracle;
pub mod product;
pub mod rank;
pub mod star;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use essential::{essential_report, EssentialReport, ScanConfig};
pub use group::{catalog_lookup, FiniteGroup, Group, GroupHom, Subgroup};
pub use lattice::SubgroupClass;
pub use product::TripleProduct;
pub mod verify;
