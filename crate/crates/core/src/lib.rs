//! Exact order-theoretic invariants of finite groups.
//!
//! This crate builds finite groups from a catalog of families (cyclic,
//! products, dihedral, dicyclic, symmetric, alternating, Cayley tables,
//! permutation closures), computes the invariants
//!
//! * `psi(G)` — the sum of the orders of all elements,
//! * `sigma(G)` — the sum of the orders of all cyclic subgroups,
//! * `n_d(G)` — the number of cyclic subgroups of each order `d`,
//!
//! and verifies, in exact integer arithmetic, a family of Menon-type
//! identities tying them to the unit group mod `n = |G|`, from the classical
//! `sum_a gcd(a-1, n) = phi(n) tau(n)` to the group-level
//! `sum_a psi(G_{gcd(a-1, n)}) = phi(n) sigma(G)`, together with the
//! weighted orbit-counting lemma the latter rests on.
//!
//! All verification is exact: sums are accumulated in 128-bit integers and
//! inequalities are compared cross-multiplied. There is no floating point in
//! any identity path.

pub mod action;
pub mod arith;
pub mod catalog;
pub mod groups;
pub mod identities;

pub use action::{
    power_subset, weighted_burnside_check, BurnsideError, OrbitDecomposition, UnitsAction,
    WeightedBurnsideReport,
};
pub use arith::Factorization;
pub use groups::{
    build_group, parse_group_spec, validate_group, BuildError, Element, FiniteGroup, GroupSpec,
    Perm, SpecError, ValidationReport, DEFAULT_MAX_ORDER,
};
pub use identities::{CyclicSubgroupCensus, Identity, IdentityReport};
