//! Coefficient rings.
//!
//! Every polynomial in this crate has coefficients in an exact integer ring.
//! The arithmetic is generic over [`Coefficient`]; the crate root fixes the
//! arbitrary-precision choice as [`crate::Integer`]. Machine integers work for
//! small inputs but will overflow on large Schubert polynomials.
//!
//! Floating point types are deliberately not coefficients: determinants are
//! computed with exact division and SEM expansions are checked for exact
//! equality.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::{BigInt, ToBigInt};
use num_integer::Integer as IntegerOps;
use num_traits::{Signed, ToPrimitive};

/// An exact integral domain usable as polynomial coefficients.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + Hash
    + Ord
    + Send
    + Sync
    + FromStr
    + IntegerOps
    + Signed
    + ToBigInt
    + 'static
{
    /// Converts from an arbitrary-precision integer, `None` on overflow.
    fn from_bigint(value: &BigInt) -> Option<Self>;

    fn from_i64(value: i64) -> Self;

    /// Residue in `[0, modulus)`.
    fn residue(&self, modulus: u64) -> u64;
}

impl Coefficient for BigInt {
    fn from_bigint(value: &BigInt) -> Option<Self> {
        Some(value.clone())
    }

    fn from_i64(value: i64) -> Self {
        BigInt::from(value)
    }

    fn residue(&self, modulus: u64) -> u64 {
        let m = BigInt::from(modulus);
        self.mod_floor(&m).to_u64().expect("residue fits in u64")
    }
}

macro_rules! machine_coefficient {
    ($($t:ty),*) => {$(
        impl Coefficient for $t {
            fn from_bigint(value: &BigInt) -> Option<Self> {
                value.to_i128().and_then(|v| <$t>::try_from(v).ok())
            }

            fn from_i64(value: i64) -> Self {
                <$t>::try_from(value).expect("coefficient out of range")
            }

            fn residue(&self, modulus: u64) -> u64 {
                (*self as i128).rem_euclid(modulus as i128) as u64
            }
        }
    )*};
}

machine_coefficient!(i32, i64, i128);
