//! Exact scalars and linear algebra.
//!
//! Everything downstream is built on [`Rational`] (arbitrary precision) and
//! [`Cyclotomic`] (elements of `Q[x]/Φ_m`). There is no floating point in
//! this crate.

mod cyclotomic;
mod matrix;
mod poly;
mod rational;

pub use cyclotomic::{euler_phi, Cyclotomic, CyclotomicJson};
pub use matrix::{eigenspace, Matrix, MatrixCyc, MatrixQ, Rref};
pub use poly::{cyclotomic_polynomial, IntPoly};
pub use rational::{format_rational, parse_rational, rational_string_vec, Rational};

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// A commutative field with exact equality.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Multiplicative inverse. Panics on zero.
    fn inverse(&self) -> Self;

    fn from_rational(q: &Rational) -> Self;
}

impl Field for Rational {
    fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

/// Dot product of two vectors of equal length.
pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(F::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Integer vector to rational vector.
pub fn qvec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(x.into())).collect()
}
