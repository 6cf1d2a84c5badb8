//! Exact dense square matrices and the determinant/trace kernels.
//!
//! Two entry types are supported: field scalars ([`Matrix`]) and univariate
//! polynomials over the field ([`PolyMatrix`]). Scalar determinants use
//! ordinary Gaussian elimination (every intermediate stays fully reduced);
//! polynomial determinants use fraction-free Bareiss elimination, whose
//! divisions are exact in the polynomial ring. Entries use 0-based indexing
//! in code; formulas quoted in documentation follow the usual 1-based
//! convention for `[A]_i^j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

/// Dense square matrix over an exact field.
#[derive(Clone, PartialEq)]
pub struct Matrix<K: Field> {
    order: usize,
    entries: Vec<K>,
}

impl<K: Field> Matrix<K> {
    /// Builds a matrix from rows, validating squareness and (for GF(p))
    /// that every entry lives in the same field.
    pub fn from_rows(rows: Vec<Vec<K>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::Validation("matrix order must be positive".into()));
        }
        let mut entries = Vec::with_capacity(order * order);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != order {
                return Err(Error::Validation(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    order
                )));
            }
            entries.extend(row);
        }
        let ctx = entries[0].context();
        if entries.iter().any(|e| e.context() != ctx) {
            return Err(Error::Validation(
                "matrix entries drawn from different fields".into(),
            ));
        }
        Ok(Matrix { order, entries })
    }

    /// Builds an `order x order` matrix entry by entry.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        assert!(order > 0, "matrix order must be positive");
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        Matrix { order, entries }
    }

    pub fn zero(order: usize, ctx: K::Context) -> Self {
        Matrix::from_fn(order, |_, _| K::zero(ctx))
    }

    pub fn identity(order: usize, ctx: K::Context) -> Self {
        Matrix::from_fn(
            order,
            |i, j| {
                if i == j {
                    K::one(ctx)
                } else {
                    K::zero(ctx)
                }
            },
        )
    }

    pub fn diagonal(values: Vec<K>) -> Self {
        assert!(!values.is_empty(), "matrix order must be positive");
        let zero = values[0].zero_like();
        let order = values.len();
        let mut m = Matrix::from_fn(order, |_, _| zero.clone());
        for (i, v) in values.into_iter().enumerate() {
            *m.get_mut(i, i) = v;
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn context(&self) -> K::Context {
        self.entries[0].context()
    }

    pub fn get(&self, row: usize, col: usize) -> &K {
        &self.entries[row * self.order + col]
    }

    pub fn get_mut(&mut self, row: usize, col: usize) -> &mut K {
        &mut self.entries[row * self.order + col]
    }

    pub fn trace(&self) -> K {
        let mut acc = self.entries[0].zero_like();
        for i in 0..self.order {
            acc = acc + self.get(i, i);
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "order mismatch in matrix product");
        let zero = self.entries[0].zero_like();
        Matrix::from_fn(self.order, |i, j| {
            let mut acc = zero.clone();
            for k in 0..self.order {
                acc = acc + &(self.get(i, k).clone() * rhs.get(k, j));
            }
            acc
        })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "order mismatch in matrix sum");
        Matrix::from_fn(self.order, |i, j| self.get(i, j).clone() + rhs.get(i, j))
    }

    /// Scalar multiple `factor * self`.
    pub fn scale(&self, factor: &K) -> Self {
        Matrix::from_fn(self.order, |i, j| self.get(i, j).clone() * factor)
    }

    /// Evaluates a polynomial at this matrix by Horner's rule; the constant
    /// term contributes a multiple of the identity.
    pub fn eval_poly(&self, p: &Poly<K>) -> Self {
        let ctx = self.context();
        let mut acc = Matrix::zero(self.order, ctx);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..self.order {
                *acc.get_mut(i, i) = acc.get(i, i).clone() + c;
            }
        }
        acc
    }

    /// Exact determinant by Gaussian elimination with row pivoting.
    pub fn determinant(&self) -> K {
        let n = self.order;
        let one = self.entries[0].one_like();
        let zero = self.entries[0].zero_like();
        let mut a = self.entries.clone();
        let at = |v: &Vec<K>, i: usize, j: usize| v[i * n + j].clone();
        let mut det = one;
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&r| !at(&a, r, col).is_zero()) else {
                return zero;
            };
            if pivot_row != col {
                for j in 0..n {
                    a.swap(pivot_row * n + j, col * n + j);
                }
                det = -det;
            }
            let pivot = at(&a, col, col);
            det = det * &pivot;
            let pivot_inv = pivot.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = at(&a, r, col) * &pivot_inv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let delta = factor.clone() * &at(&a, col, j);
                    a[r * n + j] = at(&a, r, j) - &delta;
                }
            }
        }
        det
    }

    /// Traces of the powers `G^0 .. G^max_power`, maintaining one running
    /// power (so `max_power` matrix products in total). The 0th entry is the
    /// order of the matrix embedded in the field.
    pub fn power_traces(&self, max_power: usize) -> Vec<K> {
        let mut traces = Vec::with_capacity(max_power + 1);
        traces.push(self.entries[0].int_like(self.order as i64));
        let mut running = self.clone();
        for k in 1..=max_power {
            if k > 1 {
                running = running.mul(self);
            }
            traces.push(running.trace());
        }
        traces
    }

    /// Monic characteristic polynomial via the Faddeev-LeVerrier recurrence.
    ///
    /// The recurrence divides by 1..n, so the field characteristic must be 0
    /// or exceed the matrix order.
    pub fn char_poly(&self) -> Result<Poly<K>> {
        let n = self.order;
        let ctx = self.context();
        let ch = K::characteristic(ctx);
        if ch != 0 && ch <= n as u64 {
            return Err(Error::UnsupportedField(format!(
                "characteristic polynomial of an order-{n} matrix needs characteristic 0 or > {n}, got {ch}"
            )));
        }
        let mut coeffs = vec![K::zero(ctx); n + 1];
        coeffs[n] = K::one(ctx);
        let mut aux = Matrix::identity(n, ctx);
        for k in 1..=n {
            if k > 1 {
                aux = self.mul(&aux);
                let shift = coeffs[n - k + 1].clone();
                for i in 0..n {
                    *aux.get_mut(i, i) = aux.get(i, i).clone() + &shift;
                }
            }
            // tr(G * aux) without forming the product.
            let mut t = K::zero(ctx);
            for i in 0..n {
                for j in 0..n {
                    t = t + &(self.get(i, j).clone() * aux.get(j, i));
                }
            }
            let k_inv = K::from_int(ctx, k as i64)
                .inv()
                .expect("k < characteristic");
            coeffs[n - k] = -(t * &k_inv);
        }
        Ok(Poly::new(coeffs))
    }
}

impl<K: Field> fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<K: Field> fmt::Display for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.order {
            for j in 0..self.order {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            if i + 1 < self.order {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Dense square matrix with univariate polynomial entries.
#[derive(Clone, PartialEq)]
pub struct PolyMatrix<K: Field> {
    order: usize,
    entries: Vec<Poly<K>>,
}

impl<K: Field> PolyMatrix<K> {
    pub fn from_rows(rows: Vec<Vec<Poly<K>>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::Validation("matrix order must be positive".into()));
        }
        let mut entries = Vec::with_capacity(order * order);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != order {
                return Err(Error::Validation(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    order
                )));
            }
            entries.extend(row);
        }
        Ok(PolyMatrix { order, entries })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Poly<K>) -> Self {
        assert!(order > 0, "matrix order must be positive");
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> &Poly<K> {
        &self.entries[row * self.order + col]
    }

    /// Evaluates every entry at a scalar point.
    pub fn eval(&self, x: &K) -> Matrix<K> {
        Matrix::from_fn(self.order, |i, j| self.get(i, j).eval(x))
    }

    /// Exact determinant in the polynomial ring by fraction-free Bareiss
    /// elimination; every interior division is exact.
    pub fn determinant(&self) -> Poly<K> {
        let n = self.order;
        if n == 1 {
            return self.entries[0].clone();
        }
        let mut a: Vec<Poly<K>> = self.entries.clone();
        let at = |v: &Vec<Poly<K>>, i: usize, j: usize| v[i * n + j].clone();
        let Some(witness) = self.entries.iter().find(|p| !p.is_zero()) else {
            return Poly::zero();
        };
        let one = Poly::constant(witness.coeffs()[0].one_like());
        let mut negate = false;
        let mut prev_pivot = one;
        for step in 0..n - 1 {
            let Some(pivot_row) = (step..n).find(|&r| !at(&a, r, step).is_zero()) else {
                return Poly::zero();
            };
            if pivot_row != step {
                for j in 0..n {
                    a.swap(pivot_row * n + j, step * n + j);
                }
                negate = !negate;
            }
            let pivot = at(&a, step, step);
            for i in step + 1..n {
                for j in step + 1..n {
                    let num = &(&at(&a, i, j) * &pivot) - &(&at(&a, i, step) * &at(&a, step, j));
                    a[i * n + j] = num
                        .div_exact(&prev_pivot)
                        .expect("Bareiss division is exact");
                }
                a[i * n + step] = Poly::zero();
            }
            prev_pivot = pivot;
        }
        let det = at(&a, n - 1, n - 1);
        if negate {
            -&det
        } else {
            det
        }
    }
}
