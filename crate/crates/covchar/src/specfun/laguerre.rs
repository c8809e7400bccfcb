//! Generalized Laguerre polynomials from the definition sum
//! `L_n^(a)(x) = sum_v binom(n+a, n-v) (-x)^v / v!`, exact over any
//! coefficient ring.

use rug::{Float, Rational};

use crate::polycore::{binomial, factorial, Scalar};

/// `L_n^(a)(x)` for integer `a` with `n + a >= 0`, exact when `x` is exact.
///
/// Supports negative upper index down to `a = -n`, where the sum collapses
/// to `(-x)^n / n!`.
pub fn laguerre<S: Scalar>(n: u32, a: i64, x: &S) -> S {
    assert!(
        n as i64 + a >= 0,
        "laguerre requires n + a >= 0, got n = {n}, a = {a}"
    );
    let upper = (n as i64 + a) as u64;
    // Horner in x over exact rational coefficients c_v = binom(n+a, n-v)/v!
    // with alternating sign absorbed into the evaluation.
    let mut acc = S::from_int(0, x);
    for v in (0..=n).rev() {
        let c = Rational::from((binomial(upper, (n - v) as u64), factorial(v)));
        let sign = if v % 2 == 0 { c } else { -c };
        acc = acc * x + &S::from_rat(&sign, x);
        if v == 0 {
            break;
        }
    }
    acc
}

/// Float evaluation at the precision of `x`.
pub fn laguerre_float(n: u32, a: i64, x: &Float) -> Float {
    laguerre(n, a, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{bf, rat, rat_int, rational_to_float, BivariatePolynomial};

    #[test]
    fn low_order_values() {
        // L_1^(0)(x) = 1 - x
        let x = BivariatePolynomial::mu();
        let p = laguerre(1, 0, &x);
        assert_eq!(p.coeff(0, 0), rat_int(1));
        assert_eq!(p.coeff(1, 0), rat_int(-1));
        // L_0^(a)(x) = 1 for any a
        assert_eq!(laguerre(0, 7, &rat(9, 4)), rat_int(1));
        assert_eq!(laguerre(0, -0, &rat(1, 3)), rat_int(1));
        // L_1^(0)(0) = 1
        assert_eq!(laguerre(1, 0, &rat_int(0)), rat_int(1));
    }

    #[test]
    fn negative_upper_index_collapses() {
        // L_m^(-m)(x) = (-x)^m / m!
        for m in 1..=6u32 {
            let x = rat(7, 5);
            let got = laguerre(m, -(m as i64), &x);
            let mut expected = rat_int(1);
            for _ in 0..m {
                expected *= rat(-7, 5);
            }
            expected /= rat_int(crate::polycore::factorial(m).to_i64().unwrap());
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn m_direction_recurrence_exact() {
        // m L_m^(n-m)(x) = -x L_{m-1}^(n-m+1)(x) + n L_{m-1}^(n-m)(x)
        for n in 0..=8i64 {
            for m in 1..=(n as u32).max(1) {
                if m as i64 > n {
                    continue;
                }
                for x in [rat_int(0), rat_int(1), rat(7, 3), rat(-2, 9)] {
                    let lhs = laguerre(m, n - m as i64, &x).mul_int(m as i64);
                    let rhs = (laguerre(m - 1, n - m as i64 + 1, &x) * &x).neg_val()
                        + &laguerre(m - 1, n - m as i64, &x).mul_int(n);
                    assert_eq!(lhs, rhs, "n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn n_direction_recurrence_exact() {
        // L_m^(n-m)(x) = L_m^(n-1-m)(x) + L_{m-1}^(n-m)(x)
        for n in 1..=8i64 {
            for m in 1..=8u32 {
                if m as i64 > n {
                    continue;
                }
                for x in [rat_int(1), rat(7, 3), rat(-5, 2)] {
                    let lhs = laguerre(m, n - m as i64, &x);
                    let rhs = laguerre(m, n - 1 - m as i64, &x)
                        + &laguerre(m - 1, n - m as i64, &x);
                    assert_eq!(lhs, rhs, "n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn float_path_agrees_with_rational_path() {
        let x = rat(13, 7);
        let exact = laguerre(6, 2, &x);
        let f = laguerre_float(6, 2, &rational_to_float(&x, 192));
        let diff = (f - rational_to_float(&exact, 192)).abs();
        assert!(diff < bf(64, 1e-45));
    }
}
