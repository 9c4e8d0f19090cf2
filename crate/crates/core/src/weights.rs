//! Simplex-lattice weight designs.

use crate::error::{Error, Result};
use crate::geometry::{Pfa, Point};
use crate::scalar::Scalar;

/// Weight vectors on the unit simplex (nonnegative, summing to one).
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSet<T> {
    vectors: Vec<Point<T>>,
    m: usize,
}

impl<T: Scalar> WeightSet<T> {
    pub fn new(m: usize, vectors: Vec<Point<T>>) -> Result<Self> {
        let tol = T::lit(1e-12).max(T::epsilon() * T::from_count(4 * m));
        for v in &vectors {
            if v.dim() != m {
                return Err(Error::Dimension {
                    expected: m,
                    found: v.dim(),
                });
            }
            if v.coords().iter().any(|&c| c < T::zero()) || (v.sum() - T::one()).abs() > tol {
                return Err(Error::InvalidParameter(format!(
                    "{:?} is not a weight vector",
                    v.coords()
                )));
            }
        }
        Ok(Self { vectors, m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Point<T>] {
        &self.vectors
    }

    /// The weights as a point set, e.g. for export to a PFA file.
    pub fn to_pfa(&self) -> Result<Pfa<T>> {
        Pfa::new(self.vectors.clone())
    }
}

/// `C(n, k)` without overflow for the sizes used here.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of vectors in `simplex_lattice(m, h)`.
pub fn lattice_size(m: usize, h: usize) -> usize {
    if h == 0 {
        0
    } else {
        binomial(h + m - 1, m - 1)
    }
}

/// Number of vectors in `two_layer_lattice(m, h1, h2)`.
pub fn two_layer_size(m: usize, h1: usize, h2: usize) -> usize {
    lattice_size(m, h1) + lattice_size(m, h2)
}

fn compositions(m: usize, h: usize) -> Vec<Vec<usize>> {
    fn rec(out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, left: usize, slots: usize) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for i in 0..=left {
            cur.push(i);
            rec(out, cur, left - i, slots - 1);
            cur.pop();
        }
    }
    let mut out = Vec::with_capacity(binomial(h + m - 1, m - 1));
    rec(&mut out, &mut Vec::with_capacity(m), h, m);
    out
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least 2 objectives, got {m}"
        )));
    }
    Ok(())
}

/// All vectors `(i₁/H, …, i_m/H)` with nonnegative integers summing to `H`,
/// in lexicographic order of `(i₁, …, i_m)`. `H = 0` yields the empty set.
pub fn simplex_lattice<T: Scalar>(m: usize, h: usize) -> Result<WeightSet<T>> {
    check_m(m)?;
    if h == 0 {
        return WeightSet::new(m, Vec::new());
    }
    let denom = T::from_count(h);
    let vectors = compositions(m, h)
        .into_iter()
        .map(|c| Point::new(c.into_iter().map(|i| T::from_count(i) / denom).collect()))
        .collect::<Result<Vec<_>>>()?;
    WeightSet::new(m, vectors)
}

/// Outer lattice `H1` followed by the `H2` lattice shrunk halfway toward the centroid.
pub fn two_layer_lattice<T: Scalar>(m: usize, h1: usize, h2: usize) -> Result<WeightSet<T>> {
    if h1 == 0 {
        return Err(Error::InvalidParameter("outer layer needs H1 >= 1".into()));
    }
    let outer = simplex_lattice::<T>(m, h1)?;
    let inner = simplex_lattice::<T>(m, h2)?;
    let half = T::lit(0.5);
    let shift = half / T::from_count(m);
    let mut vectors = outer.vectors;
    vectors.extend(inner.vectors.iter().map(|w| w.map(|_, c| c * half + shift)));
    WeightSet::new(m, vectors)
}
