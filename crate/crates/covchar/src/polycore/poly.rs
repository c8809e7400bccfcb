//! Bivariate polynomials in `mu`, `nu` over the rationals, stored sparsely
//! as a map from exponent pairs to coefficients. No zero coefficients are
//! ever stored, so equality of maps is equality of polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::{Float, Rational};

use super::rational_to_float;

/// Sparse exact polynomial in two variables `mu` (exponent `i`) and `nu`
/// (exponent `j`).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::from(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    /// The variable `mu`.
    pub fn mu() -> Self {
        Self::monomial(1, 0, Rational::from(1))
    }

    /// The variable `nu`.
    pub fn nu() -> Self {
        Self::monomial(0, 1, Rational::from(1))
    }

    pub fn monomial(i: u32, j: u32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `mu^i nu^j` (zero if absent).
    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Terms in lexicographic `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree_mu(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn degree_nu(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    fn insert_add(&mut self, key: (u32, u32), c: Rational) {
        if c == 0 {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += c;
                if *existing == 0 {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if *c == 0 {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&k, v)| (k, Rational::from(v * c)))
                .collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&Rational::from(c))
    }

    /// `self * mu^i nu^j`.
    pub fn mul_monomial(&self, i: u32, j: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((a + i, b + j), v.clone()))
                .collect(),
        }
    }

    /// Substitute `mu -> mu^2`, `nu -> nu^2`.
    pub fn substitute_squares(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), v)| ((2 * i, 2 * j), v.clone()))
                .collect(),
        }
    }

    /// Exchange the roles of `mu` and `nu`.
    pub fn swap_vars(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), v)| ((j, i), v.clone()))
                .collect(),
        }
    }

    /// Symmetric under `mu <-> nu` exchange.
    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&(i, j), v)| self.terms.get(&(j, i)) == Some(v))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at rational `mu`, `nu` by two-level Horner: group
    /// terms by `mu`-degree, evaluate each group in `nu`, then fold in `mu`.
    pub fn eval_rational(&self, mu: &Rational, nu: &Rational) -> Rational {
        self.eval_generic(
            |q| q.clone(),
            |acc, x, c| acc * x + c,
            Rational::default(),
            mu,
            nu,
        )
    }

    /// Evaluation at `Float` points, at the precision of the inputs.
    pub fn eval_float(&self, mu: &Float, nu: &Float) -> Float {
        let prec = mu.prec().max(nu.prec());
        self.eval_generic(
            |q| rational_to_float(q, prec),
            |acc, x, c| acc * x + c,
            Float::new(prec),
            mu,
            nu,
        )
    }

    fn eval_generic<T>(
        &self,
        lift: impl Fn(&Rational) -> T,
        fma: impl Fn(T, &T, T) -> T,
        zero: T,
        mu: &T,
        nu: &T,
    ) -> T
    where
        T: Clone,
    {
        // rows[i] = coefficients of nu^j within mu^i, densely indexed
        let mut rows: BTreeMap<u32, Vec<&Rational>> = BTreeMap::new();
        let deg_nu = self.degree_nu() as usize;
        static ZERO_RAT: std::sync::OnceLock<Rational> = std::sync::OnceLock::new();
        let zero_rat = ZERO_RAT.get_or_init(Rational::default);
        for (&(i, j), c) in &self.terms {
            let row = rows.entry(i).or_insert_with(|| vec![zero_rat; deg_nu + 1]);
            row[j as usize] = c;
        }
        let mut result = zero.clone();
        let mut prev_deg: Option<u32> = None;
        // iterate mu-degrees descending; the fma below multiplies by mu
        // once, so only the remaining gap is filled here
        for (&i, row) in rows.iter().rev() {
            if let Some(p) = prev_deg {
                for _ in 0..(p - i - 1) {
                    result = fma(result, mu, zero.clone());
                }
            }
            let mut row_val = zero.clone();
            for c in row.iter().rev() {
                row_val = fma(row_val, nu, lift(c));
            }
            result = fma(result, mu, row_val);
            prev_deg = Some(i);
        }
        if let Some(p) = prev_deg {
            for _ in 0..p {
                result = fma(result, mu, zero.clone());
            }
        }
        result
    }

    /// Deterministic term list `[(i, j, "num/den")]` in `(i, j)` order.
    pub fn to_term_strings(&self) -> Vec<(u32, u32, String)> {
        self.terms
            .iter()
            .map(|(&(i, j), c)| (i, j, c.to_string()))
            .collect()
    }

    pub fn from_term_strings(
        terms: &[(u32, u32, String)],
    ) -> Result<Self, String> {
        let mut p = Self::zero();
        for (i, j, s) in terms {
            p.insert_add((*i, *j), super::parse_rational(s)?);
        }
        Ok(p)
    }
}

impl Add<&BivariatePolynomial> for BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(mut self, rhs: &BivariatePolynomial) -> Self {
        for (&k, v) in &rhs.terms {
            self.insert_add(k, v.clone());
        }
        self
    }
}

impl Sub<&BivariatePolynomial> for BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(mut self, rhs: &BivariatePolynomial) -> Self {
        for (&k, v) in &rhs.terms {
            self.insert_add(k, Rational::from(-v.clone()));
        }
        self
    }
}

impl Mul<&BivariatePolynomial> for BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> Self {
        &self * rhs
    }
}

impl Mul<&BivariatePolynomial> for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(a, b), u) in &self.terms {
            for (&(c, d), v) in &rhs.terms {
                out.insert_add((a + c, b + d), Rational::from(u * v));
            }
        }
        out
    }
}

impl Neg for BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> Self {
        Self {
            terms: self
                .terms
                .into_iter()
                .map(|(k, v)| (k, -v))
                .collect(),
        }
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest total degree first, then lexicographic
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| (std::cmp::Reverse(i + j), std::cmp::Reverse(i)));
        for (i, j) in keys {
            let c = &self.terms[&(i, j)];
            let neg = *c < 0;
            let mag = c.clone().abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != 1 || (i == 0 && j == 0) {
                factors.push(mag.to_string());
            }
            if i == 1 {
                factors.push("mu".into());
            } else if i > 1 {
                factors.push(format!("mu^{i}"));
            }
            if j == 1 {
                factors.push("nu".into());
            } else if j > 1 {
                factors.push(format!("nu^{j}"));
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
