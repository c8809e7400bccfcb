//! Complex arithmetic over MPFR floats. Only what the contour quadrature
//! and Bessel evaluation need; no MPC dependency.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::Float;

/// Complex number with `Float` components of a common precision.
#[derive(Clone, Debug, PartialEq)]
pub struct CFloat {
    pub re: Float,
    pub im: Float,
}

impl CFloat {
    pub fn new(re: Float, im: Float) -> Self {
        Self { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Self::new(Float::new(prec), Float::new(prec))
    }

    pub fn one(prec: u32) -> Self {
        Self::new(Float::with_val(prec, 1), Float::new(prec))
    }

    pub fn from_real(re: Float) -> Self {
        let prec = re.prec();
        Self::new(re, Float::new(prec))
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        Self::new(Float::with_val(prec, re), Float::with_val(prec, im))
    }

    /// Point on the circle of radius `r`: `r e^{it}`.
    pub fn from_polar(r: &Float, t: &Float) -> Self {
        let prec = r.prec().max(t.prec());
        let (sin, cos) = t.clone().sin_cos(Float::new(prec));
        Self::new(Float::with_val(prec, r * &cos), Float::with_val(prec, r * &sin))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), Float::with_val(self.im.prec(), -&self.im))
    }

    pub fn norm_sqr(&self) -> Float {
        let prec = self.prec();
        Float::with_val(prec, &self.re * &self.re) + Float::with_val(prec, &self.im * &self.im)
    }

    pub fn abs(&self) -> Float {
        self.norm_sqr().sqrt()
    }

    /// Principal argument via atan2.
    pub fn arg(&self) -> Float {
        self.im.clone().atan2(&self.re)
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn scale(&self, c: &Float) -> Self {
        let prec = self.prec();
        Self::new(
            Float::with_val(prec, &self.re * c),
            Float::with_val(prec, &self.im * c),
        )
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sqr();
        let prec = self.prec();
        Self::new(
            Float::with_val(prec, &self.re / &d),
            -Float::with_val(prec, &self.im / &d),
        )
    }

    pub fn div(&self, rhs: &Self) -> Self {
        self.clone() * &rhs.recip()
    }

    /// `e^z = e^re (cos im + i sin im)`.
    pub fn exp(&self) -> Self {
        let prec = self.prec();
        let mag = self.re.clone().exp();
        let (sin, cos) = self.im.clone().sin_cos(Float::new(prec));
        Self::new(
            Float::with_val(prec, &mag * &cos),
            Float::with_val(prec, &mag * &sin),
        )
    }

    /// Principal square root: `sqrt(|z|) e^{i arg(z)/2}`, so the branch cut
    /// sits on the negative real axis and `arg sqrt(z)` lies in
    /// `[-pi/2, pi/2]`.
    pub fn sqrt(&self) -> Self {
        let prec = self.prec();
        let r = self.abs().sqrt();
        let half_arg = self.arg() / 2u32;
        let (sin, cos) = half_arg.sin_cos(Float::new(prec));
        Self::new(
            Float::with_val(prec, &r * &cos),
            Float::with_val(prec, &r * &sin),
        )
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        Self::new(self.abs().ln(), self.arg())
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut e = e;
        let mut acc = Self::one(self.prec());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            base = base.clone() * &base;
            e >>= 1;
        }
        acc
    }
}

impl Add<&CFloat> for CFloat {
    type Output = CFloat;
    fn add(self, rhs: &CFloat) -> CFloat {
        CFloat::new(self.re + &rhs.re, self.im + &rhs.im)
    }
}

impl Sub<&CFloat> for CFloat {
    type Output = CFloat;
    fn sub(self, rhs: &CFloat) -> CFloat {
        CFloat::new(self.re - &rhs.re, self.im - &rhs.im)
    }
}

impl Mul<&CFloat> for CFloat {
    type Output = CFloat;
    fn mul(self, rhs: &CFloat) -> CFloat {
        let prec = self.prec().max(rhs.prec());
        let re = Float::with_val(prec, &self.re * &rhs.re)
            - Float::with_val(prec, &self.im * &rhs.im);
        let im = Float::with_val(prec, &self.re * &rhs.im)
            + Float::with_val(prec, &self.im * &rhs.re);
        CFloat::new(re, im)
    }
}

impl Neg for CFloat {
    type Output = CFloat;
    fn neg(self) -> CFloat {
        CFloat::new(-self.re, -self.im)
    }
}

impl fmt::Display for CFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{bf, pi};

    #[test]
    fn exp_of_i_pi_is_minus_one() {
        let z = CFloat::new(Float::new(128), pi(128));
        let e = z.exp();
        assert!((e.re.clone() + bf(128, 1)).abs() < bf(64, 1e-35));
        assert!(e.im.clone().abs() < bf(64, 1e-35));
    }

    #[test]
    fn sqrt_branch_on_circle() {
        // sqrt(R e^{it}) = sqrt(R) e^{it/2} for t in (-pi, pi]
        let root = bf(128, 0.9);
        let r = bf(128, &root * &root);
        let t = bf(128, 2.8);
        let z = CFloat::from_polar(&r, &t);
        let s = z.sqrt();
        let expect = CFloat::from_polar(&root, &(t / 2u32));
        assert!((s.re.clone() - &expect.re).abs() < bf(64, 1e-35));
        assert!((s.im.clone() - &expect.im).abs() < bf(64, 1e-35));
        // arg sqrt stays in [-pi/2, pi/2]
        assert!(s.arg().abs() <= pi(128) / 2u32 + bf(64, 1e-30));
    }

    #[test]
    fn division_and_powi() {
        let a = CFloat::from_f64(128, 3.0, -4.0);
        let b = CFloat::from_f64(128, 1.0, 2.0);
        let q = a.div(&b);
        let back = q * &b;
        assert!((back.re.clone() - &a.re).abs() < bf(64, 1e-35));
        assert!((back.im.clone() - &a.im).abs() < bf(64, 1e-35));
        let p = b.powi(3);
        // (1+2i)^3 = 1 + 6i - 12 - 8i = -11 - 2i
        assert!((p.re.clone() + bf(128, 11)).abs() < bf(64, 1e-30));
        assert!((p.im.clone() + bf(128, 2)).abs() < bf(64, 1e-30));
    }
}
