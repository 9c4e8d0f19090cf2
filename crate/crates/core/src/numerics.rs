//! Dense LU factorization, moments and rank correlation.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Pivots below this magnitude are treated as singular.
pub const PIVOT_THRESHOLD: f64 = 1e-12;

/// Row-major `n × n` matrix with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<T> {
    order: usize,
    entries: Vec<T>,
}

impl<T: Scalar> SquareMatrix<T> {
    pub fn new(order: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != order * order {
            return Err(Error::Dimension {
                expected: order * order,
                found: entries.len(),
            });
        }
        if entries.iter().any(|e| !e.is_finite()) {
            return Err(Error::InvalidParameter("matrix entry is not finite".into()));
        }
        Ok(Self { order, entries })
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let entries = (0..order * order)
            .map(|k| f(k / order, k % order))
            .collect();
        Self { order, entries }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * self.order + j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order;
        Self::from_fn(n, |i, j| {
            (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum()
        })
    }

    pub fn sum(&self) -> T {
        self.entries.iter().copied().sum()
    }

    pub fn lu(&self) -> Result<Lu<T>> {
        Lu::factor(self)
    }

    pub fn invert(&self) -> Result<Self> {
        self.lu()?.inverse()
    }
}

/// `PA = LU` with partial pivoting; `L` has a unit diagonal and shares storage with `U`.
#[derive(Debug, Clone)]
pub struct Lu<T> {
    n: usize,
    lu: Vec<T>,
    perm: Vec<usize>,
}

impl<T: Scalar> Lu<T> {
    pub fn factor(mat: &SquareMatrix<T>) -> Result<Self> {
        let n = mat.order;
        let mut lu = mat.entries.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let threshold = T::lit(PIVOT_THRESHOLD);
        for k in 0..n {
            let (p, pivot) =
                (k..n)
                    .map(|r| (r, lu[r * n + k].abs()))
                    .fold(
                        (k, T::zero()),
                        |best, cur| if cur.1 > best.1 { cur } else { best },
                    );
            if pivot < threshold {
                return Err(Error::SingularMatrix {
                    column: k,
                    pivot: pivot.as_f64(),
                });
            }
            if p != k {
                for c in 0..n {
                    lu.swap(k * n + c, p * n + c);
                }
                perm.swap(k, p);
            }
            let d = lu[k * n + k];
            for r in k + 1..n {
                let f = lu[r * n + k] / d;
                lu[r * n + k] = f;
                if f != T::zero() {
                    for c in k + 1..n {
                        let u = lu[k * n + c];
                        lu[r * n + c] -= f * u;
                    }
                }
            }
        }
        Ok(Self { n, lu, perm })
    }

    /// Solves `A x = b`.
    pub fn solve(&self, b: &[T]) -> Vec<T> {
        let n = self.n;
        let mut x: Vec<T> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            let row = &self.lu[i * n..i * n + i];
            let s = row
                .iter()
                .zip(&x[..i])
                .fold(x[i], |s, (&l, &xj)| s - l * xj);
            x[i] = s;
        }
        for i in (0..n).rev() {
            let row = &self.lu[i * n + i + 1..(i + 1) * n];
            let s = row
                .iter()
                .zip(&x[i + 1..])
                .fold(x[i], |s, (&u, &xj)| s - u * xj);
            x[i] = s / self.lu[i * n + i];
        }
        x
    }

    pub fn inverse(&self) -> Result<SquareMatrix<T>> {
        let n = self.n;
        let mut entries = vec![T::zero(); n * n];
        let mut e = vec![T::zero(); n];
        for j in 0..n {
            e.iter_mut().for_each(|v| *v = T::zero());
            e[j] = T::one();
            for (i, v) in self.solve(&e).into_iter().enumerate() {
                entries[i * n + j] = v;
            }
        }
        SquareMatrix::new(n, entries)
    }
}

pub fn invert<T: Scalar>(mat: &SquareMatrix<T>) -> Result<SquareMatrix<T>> {
    mat.invert()
}

/// Arithmetic mean and population standard deviation (divides by the count).
pub fn mean_std<T: Scalar>(values: &[T]) -> Result<(T, T)> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = T::from_count(values.len());
    let mean = values.iter().copied().sum::<T>() / n;
    let var = values.iter().map(|&v| (v - mean) * (v - mean)).sum::<T>() / n;
    Ok((mean, var.sqrt()))
}

/// Kendall τ-b with tie correction. Returns 0 when either argument is constant.
pub fn kendall_tau(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::Dimension {
            expected: a.len(),
            found: b.len(),
        });
    }
    if a.len() < 2 {
        return Err(Error::InvalidParameter(
            "kendall tau needs at least two observations".into(),
        ));
    }
    let (mut concordant, mut discordant) = (0i64, 0i64);
    let (mut ties_a, mut ties_b) = (0i64, 0i64);
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let da = a[i].partial_cmp(&a[j]).unwrap_or(std::cmp::Ordering::Equal);
            let db = b[i].partial_cmp(&b[j]).unwrap_or(std::cmp::Ordering::Equal);
            use std::cmp::Ordering::Equal;
            match (da, db) {
                (Equal, Equal) => {
                    ties_a += 1;
                    ties_b += 1;
                }
                (Equal, _) => ties_a += 1,
                (_, Equal) => ties_b += 1,
                _ if da == db => concordant += 1,
                _ => discordant += 1,
            }
        }
    }
    let pairs = (a.len() * (a.len() - 1) / 2) as f64;
    let denom = ((pairs - ties_a as f64) * (pairs - ties_b as f64)).sqrt();
    if denom == 0.0 {
        return Ok(0.0);
    }
    Ok((concordant - discordant) as f64 / denom)
}
