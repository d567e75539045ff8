//! Schubert polynomials, standard elementary monomial expansions and lattice
//! path determinants, in exact integer arithmetic.
//!
//! Every algebraic routine is generic over a [`scalar::Coefficient`] ring.
//! [`Integer`] and [`Poly`] fix the arbitrary-precision choice used by the
//! command line tool and the verification sweeps.

pub mod lpr;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod scalar;
pub mod schubert;
pub mod verify;

pub use perm::Permutation;

pub type Integer = num_bigint::BigInt;
pub type Poly = poly::Polynomial<Integer>;
pub type Sem = poly::SemExpansion<Integer>;
