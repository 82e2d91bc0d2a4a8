//! Coefficient fields: exact rationals and rational functions in named parameters.

mod parse;
mod poly;
mod rational;
mod ratfun;

pub use parse::parse_ratfun;
pub use poly::{gcd as poly_gcd, Monomial, Poly, Var};
pub use rational::Rational;
pub use ratfun::RatFun;

use crate::error::Result;
use std::fmt::{Debug, Display};

/// A field element with exact arithmetic and a canonical representative.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn is_zero(&self) -> bool;

    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn inverse(&self) -> Result<Self>;

    fn over(&self, other: &Self) -> Result<Self> {
        Ok(self.times(&other.inverse()?))
    }
    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from(n))
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    /// Lift into the rational function field.
    fn to_ratfun(&self) -> RatFun;
    /// Canonical string form, parseable by [`parse_ratfun`].
    fn canonical(&self) -> String {
        self.to_string()
    }
}

/// `(-1)^(a*b)` for parities `a`, `b`.
pub fn koszul(a: bool, b: bool) -> i64 {
    if a && b {
        -1
    } else {
        1
    }
}

/// Multiply by a sign in {+1, -1}.
pub fn signed<F: Scalar>(s: i64, x: &F) -> F {
    if s < 0 {
        x.negated()
    } else {
        x.clone()
    }
}
