//! Combinatorics of minimal wonderful models of finite Coxeter arrangements,
//! and the Garside algebra of the attached Artin-Tits groups.
//!
//! The crate is organized bottom-up:
//!
//! * [`arith`]: exact rationals, cyclotomic fields and row reduction.
//! * [`arrangement`]: subspaces, central arrangements, reflection groups of
//!   types A, B, D and G₂, orbits and stabilizers.
//! * [`building`]: the sum-closure of the dual lines, irreducible
//!   decompositions, the minimal building set, nested sets and the S_n / D_n
//!   label codecs.
//! * [`wonderful`]: boundary stratification, blow-up order, point encodings,
//!   stabilizers of boundary points and Springer regularity.
//! * [`garside`]: braid words, left-greedy normal forms, Δ and Δ*, centers
//!   and inertia elements of parabolic subgroups.
//! * [`verify`]: a conformance runner that replays the known identities and
//!   counts.
//!
//! All arithmetic is exact; nothing here touches floating point.

pub mod arith;
pub mod arrangement;
pub mod building;
pub mod caps;
pub mod garside;
pub mod verify;
pub mod wonderful;

mod error;

pub use error::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;
