//! A small ring abstraction so the moment recursions can be written once
//! and instantiated with exact rationals, exact bivariate polynomials, or
//! arbitrary-precision floats.

use std::ops::{Add, Mul, Sub};

use rug::{Float, Rational};

use super::{rational_to_float, BivariatePolynomial};

/// Ring of coefficients for the recursions. `proto` arguments carry the
/// "kind" of the value (for `Float`, its precision).
pub trait Scalar:
    Clone
    + PartialEq
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_int(v: i64, proto: &Self) -> Self;
    fn from_rat(q: &Rational, proto: &Self) -> Self;
    fn is_zero_val(&self) -> bool;
    /// Divide by a nonzero integer (exact for the exact kinds).
    fn div_int(self, k: i64) -> Self;

    fn mul_int(self, k: i64) -> Self {
        let c = Self::from_int(k, &self);
        self * &c
    }

    fn neg_val(self) -> Self {
        let zero = Self::from_int(0, &self);
        zero - &self
    }
}

impl Scalar for Rational {
    fn from_int(v: i64, _proto: &Self) -> Self {
        Rational::from(v)
    }
    fn from_rat(q: &Rational, _proto: &Self) -> Self {
        q.clone()
    }
    fn is_zero_val(&self) -> bool {
        *self == 0
    }
    fn div_int(self, k: i64) -> Self {
        self / Rational::from(k)
    }
}

impl Scalar for BivariatePolynomial {
    fn from_int(v: i64, _proto: &Self) -> Self {
        BivariatePolynomial::constant(Rational::from(v))
    }
    fn from_rat(q: &Rational, _proto: &Self) -> Self {
        BivariatePolynomial::constant(q.clone())
    }
    fn is_zero_val(&self) -> bool {
        self.is_zero()
    }
    fn div_int(self, k: i64) -> Self {
        self.scale(&Rational::from((1, k)))
    }
}

impl Scalar for Float {
    fn from_int(v: i64, proto: &Self) -> Self {
        Float::with_val(proto.prec(), v)
    }
    fn from_rat(q: &Rational, proto: &Self) -> Self {
        rational_to_float(q, proto.prec())
    }
    fn is_zero_val(&self) -> bool {
        self.is_zero()
    }
    fn div_int(self, k: i64) -> Self {
        self / Float::with_val(64, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;

    fn square_plus_one<S: Scalar>(x: &S) -> S {
        x.clone() * x + &S::from_int(1, x)
    }

    #[test]
    fn generic_over_all_three_kinds() {
        assert_eq!(square_plus_one(&rat(3, 2)), rat(13, 4));

        let p = BivariatePolynomial::mu();
        let q = square_plus_one(&p);
        assert_eq!(q.coeff(2, 0), rat(1, 1));
        assert_eq!(q.coeff(0, 0), rat(1, 1));

        let f = Float::with_val(128, 1.5f64);
        let g = square_plus_one(&f);
        assert_eq!(g.prec(), 128);
        assert_eq!(g.to_f64(), 3.25);
    }
}
