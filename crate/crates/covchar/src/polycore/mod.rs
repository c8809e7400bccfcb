//! Exact rational arithmetic, bivariate polynomials and arbitrary-precision
//! floats. Everything downstream is built on these carriers.
//!
//! `Rational` and `Integer` are re-exported from `rug` (GMP): values are
//! always stored in lowest terms with positive denominator, and arithmetic
//! is exact. `Float` is MPFR-backed with per-value precision in bits;
//! conversions from `Rational` are correctly rounded at the target
//! precision.

mod complex;
mod poly;
mod scalar;

pub use complex::CFloat;
pub use poly::BivariatePolynomial;
pub use scalar::Scalar;

pub use rug::{Float, Integer, Rational};

/// Default working precision in bits. Chosen so that theorem-scale runs
/// (cancellation budgets around `exp(4N)` intermediates at `N <= 1000`)
/// keep ten-plus spare decimal digits past the tightest acceptance
/// tolerance.
pub const DEFAULT_PREC: u32 = 256;

/// Rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::from((num, den))
}

/// Rational from an `i64`.
pub fn rat_int(v: i64) -> Rational {
    Rational::from(v)
}

/// Parse a rational from "p/q", "p", or "-p/q" form.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| format!("invalid rational {s:?}: {e}"))
}

/// `n!` as an exact integer.
pub fn factorial(n: u32) -> Integer {
    Integer::factorial(n).into()
}

/// Binomial coefficient `C(n, k)` for `n >= 0`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::from(0);
    }
    Integer::from(n).binomial(k as u32)
}

/// Float of precision `prec` from anything `rug` can assign.
pub fn bf<T>(prec: u32, value: T) -> Float
where
    Float: rug::Assign<T>,
{
    Float::with_val(prec, value)
}

/// Correctly rounded conversion of a rational at the given precision.
pub fn rational_to_float(q: &Rational, prec: u32) -> Float {
    Float::with_val(prec, q)
}

/// pi at the given precision.
pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, rug::float::Constant::Pi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_is_canonical() {
        let q = rat(6, -4);
        assert_eq!(q, rat(-3, 2));
        assert_eq!(q.denom(), &Integer::from(2));
        assert!(q.numer() < &Integer::from(0));
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("7/3").unwrap(), rat(7, 3));
        assert_eq!(parse_rational("-5").unwrap(), rat_int(-5));
        assert_eq!(parse_rational(" 10/4 ").unwrap(), rat(5, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(factorial(0), Integer::from(1));
        assert_eq!(factorial(5), Integer::from(120));
        assert_eq!(binomial(5, 2), Integer::from(10));
        assert_eq!(binomial(3, 7), Integer::from(0));
    }

    #[test]
    fn rational_float_round_trip_at_high_precision() {
        // Rational -> Float -> Rational reproduces the value to within one
        // ulp at the stated precision.
        let q = rat(355, 113);
        let f = rational_to_float(&q, 192);
        let back = f.to_rational().unwrap();
        let diff = Rational::from(&q - &back).abs();
        let ulp = Rational::from((Integer::from(4), Integer::from(1)))
            * Rational::from((Integer::from(1), Integer::from(1) << 190u32));
        assert!(diff <= ulp, "diff {diff} exceeds ulp bound {ulp}");
    }
}
