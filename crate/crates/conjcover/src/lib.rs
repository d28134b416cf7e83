//! Exact conjugate-product covering numbers of finite permutation groups.
//!
//! A covering here is a sequence of at least two proper, pairwise-conjugate
//! subgroups whose ordered setwise product is the whole group; the covering
//! number γ_cp is the minimal length of such a sequence, infinite exactly
//! for nilpotent groups. The crate enumerates groups element-by-element at
//! desk scale, searches minimal coverings over bitmask product states, and
//! builds the explicit witnesses coming from coset ranks, dihedral rotation
//! towers and affine frames over prime fields.
//!
//! Entry points:
//! - [`table::GroupTable::generate`] closes a generator set into an indexed
//!   table; [`constructions`] has named builders.
//! - [`search::gamma_cp_exact`] computes γ_cp with a per-class witness;
//!   [`search::gamma_bruteforce_oracle`] is the reduction-free cross-check.
//! - [`witness::rank_factorization`], [`solvable::dihedral_factorization`]
//!   and [`solvable::solvable_covering`] produce constructive witnesses.

pub mod constructions;
pub mod error;
pub mod lattice;
pub mod mask;
pub mod perm;
pub mod product;
pub mod search;
pub mod solvable;
pub mod structure;
pub mod subgroup;
pub mod table;
pub mod witness;

pub use error::{Error, Result};
pub use mask::SubsetMask;
pub use perm::Perm;
pub use search::{Gamma, GammaResult, SearchConfig};
pub use subgroup::Subgroup;
pub use table::GroupTable;
pub use witness::CoveringWitness;
