//! Correlation functions of characteristic polynomials of sample covariance
//! matrices, computed exactly and in arbitrary precision.
//!
//! For an `n x m` matrix `X` with i.i.d. entries (complex entries with
//! independent real/imaginary parts of variance 1/2, or real entries of
//! variance 1; fourth moment `b` in both cases), the central object is
//!
//! ```text
//! f(n, m; mu, nu) = E[ det(X*X - mu) det(X*X - nu) ]
//! ```
//!
//! a bivariate polynomial in `mu`, `nu` with rational coefficients once `b`
//! is rational. The crate provides:
//!
//! * exact recursions for `f(n, m)` (three independent routes), with
//!   arbitrary-precision rational coefficients ([`recursion`]);
//! * the closed-form generating function of `f(m+alpha, m)/((m+alpha)! m!)`
//!   and its coefficient recursion, again by two independent routes;
//! * numeric evaluation of `f(n, m)/(n! m!)` through a Cauchy contour
//!   integral with spectrally accurate trapezoid quadrature ([`contour`]);
//! * sine / Airy / Bessel limit kernels and their "differentiated" variants,
//!   with removable-singularity handling ([`kernels`]);
//! * the special functions backing all of the above ([`specfun`]);
//! * Monte Carlo and exact-enumeration oracles over explicit random
//!   matrices ([`ensemble`]).
//!
//! All floating-point work uses MPFR via the `rug` crate, so precision is
//! explicit everywhere and exponent range is a non-issue even for quantities
//! like `exp(4N)` at `N = 1000`.

pub mod contour;
pub mod ensemble;
pub mod kernels;
pub mod polycore;
pub mod recursion;
pub mod specfun;

pub use polycore::{BivariatePolynomial, Float, Integer, Rational};
pub use recursion::{EnsembleSpec, Variant};
