//! Univariate polynomials over an exact field.
//!
//! Coefficients are stored from the constant term upward with no trailing
//! zeros; the zero polynomial is the empty coefficient list and its degree
//! is `None` rather than a sentinel integer. All arithmetic is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Field;

/// Dense univariate polynomial with exact coefficients.
#[derive(Clone, PartialEq)]
pub struct Poly<K: Field> {
    coeffs: Vec<K>,
}

impl<K: Field> Poly<K> {
    /// Builds a polynomial from coefficients ordered constant term first,
    /// stripping trailing zeros.
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(value: K) -> Self {
        Poly::new(vec![value])
    }

    /// `value * x^degree`.
    pub fn monomial(value: K, degree: usize) -> Self {
        if value.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![value.zero_like(); degree];
        coeffs.push(value);
        Poly { coeffs }
    }

    /// Coefficients, constant term first. Empty for the zero polynomial.
    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient; `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Horner evaluation at a point.
    pub fn eval(&self, x: &K) -> K {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, factor: &K) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * factor).collect())
    }

    /// Divides every coefficient by `divisor`; errors on zero.
    pub fn scale_div(&self, divisor: &K) -> Result<Self> {
        let inv = divisor.inv()?;
        Ok(self.scale(&inv))
    }

    /// The unique monic scalar multiple; errors on the zero polynomial.
    pub fn make_monic(&self) -> Result<Self> {
        let lead = self
            .leading()
            .ok_or_else(|| Error::Precondition("cannot normalize the zero polynomial".into()))?;
        self.scale_div(&lead.clone())
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * &c.int_like(k as i64))
            .collect();
        Poly::new(coeffs)
    }

    /// Euclidean division: `self = q * divisor + r` with
    /// `deg r < deg divisor`, exactly.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let d_deg = divisor.degree().ok_or(Error::ZeroPolynomialDivisor)?;
        let lead_inv = divisor.leading().expect("nonzero divisor").inv()?;
        if self.is_zero() || self.degree().unwrap() < d_deg {
            return Ok((Poly::zero(), self.clone()));
        }
        let n_deg = self.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let zero = lead_inv.zero_like();
        let mut quot = vec![zero.clone(); n_deg - d_deg + 1];
        for k in (0..=n_deg - d_deg).rev() {
            let factor = rem[k + d_deg].clone() * &lead_inv;
            if factor.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - &(factor.clone() * dc);
            }
            quot[k] = factor;
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InvariantViolation(format!(
                "expected exact polynomial division, got remainder {r}"
            )));
        }
        Ok(q)
    }

    /// Monic greatest common divisor. Errors when both inputs are zero.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::Precondition(
                "gcd of two zero polynomials is undefined".into(),
            ));
        }
        let mut r0 = a.clone();
        let mut r1 = b.clone();
        while !r1.is_zero() {
            // Remainders are normalized monic each round to keep rational
            // coefficients small.
            let (_, r) = r0.div_rem(&r1)?;
            r0 = r1;
            r1 = if r.is_zero() { r } else { r.make_monic()? };
        }
        r0.make_monic()
    }

    /// The monic polynomial with the same distinct roots as `self`, each
    /// simple: `self / gcd(self, self')` after normalizing `self` monic.
    ///
    /// In characteristic `p` this is only valid for `deg < p` (otherwise the
    /// derivative can vanish on a nonconstant polynomial); violating that
    /// guard is reported as an unsupported-field error.
    ///
    /// ```
    /// use trace_hankel::{Poly, Rational};
    ///
    /// let rat = |n: i64| Rational::from_integer(n.into());
    /// // (x - 1)^2 (x - 2) = x^3 - 4x^2 + 5x - 2
    /// let f = Poly::new(vec![rat(-2), rat(5), rat(-4), rat(1)]);
    /// let squarefree = f.squarefree_part()?;
    /// assert_eq!(squarefree.coeffs(), &[rat(2), rat(-3), rat(1)]); // x^2 - 3x + 2
    /// # Ok::<(), trace_hankel::Error>(())
    /// ```
    pub fn squarefree_part(&self) -> Result<Self> {
        let deg = self.degree().ok_or_else(|| {
            Error::Precondition("squarefree part of the zero polynomial is undefined".into())
        })?;
        let ctx_char = K::characteristic(self.coeffs[0].context());
        if ctx_char != 0 && deg as u64 >= ctx_char {
            return Err(Error::UnsupportedField(format!(
                "squarefree part needs degree < characteristic, got degree {deg} in characteristic {ctx_char}"
            )));
        }
        let f = self.make_monic()?;
        if deg == 0 {
            return Ok(Poly::constant(self.coeffs[0].one_like()));
        }
        let g = Poly::gcd(&f, &f.derivative())?;
        f.div_exact(&g)?.make_monic()
    }
}

impl<K: Field> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<K: Field> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{c}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<K: Field> Add for &Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: &Poly<K>) -> Poly<K> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let zero = self.coeffs[0].zero_like();
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = rhs.coeffs.get(i).unwrap_or(&zero);
                a.clone() + b
            })
            .collect();
        Poly::new(coeffs)
    }
}

impl<K: Field> Sub for &Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: &Poly<K>) -> Poly<K> {
        self + &(-rhs)
    }
}

impl<K: Field> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<K: Field> Mul for &Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: &Poly<K>) -> Poly<K> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut coeffs = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + &(a.clone() * b);
            }
        }
        Poly::new(coeffs)
    }
}
