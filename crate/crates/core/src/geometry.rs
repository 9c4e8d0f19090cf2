//! Objective-space primitives: points, point sets, distances, normalization
//! and Pareto dominance.

use std::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An objective vector with at least two finite coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Point<T> {
    coords: Vec<T>,
}

impl<T: Scalar> Point<T> {
    pub fn new(coords: Vec<T>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidPoint(format!(
                "need at least 2 objectives, got {}",
                coords.len()
            )));
        }
        if let Some(i) = coords.iter().position(|c| !c.is_finite()) {
            return Err(Error::InvalidPoint(format!("coordinate {i} is not finite")));
        }
        Ok(Self { coords })
    }

    /// Builds a point from `f64` literals, converting to `T`.
    pub fn from_f64(coords: &[f64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| T::lit(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<T> {
        self.coords
    }

    pub fn sum(&self) -> T {
        self.coords.iter().copied().sum()
    }

    pub fn norm(&self) -> T {
        self.coords.iter().map(|&c| c * c).sum::<T>().sqrt()
    }

    /// `true` when `self` Pareto-dominates `other` (minimization).
    pub fn dominates(&self, other: &Self) -> bool {
        let mut strictly = false;
        for (&a, &b) in self.coords.iter().zip(&other.coords) {
            if a > b {
                return false;
            }
            if a < b {
                strictly = true;
            }
        }
        strictly
    }

    pub(crate) fn map(&self, f: impl Fn(usize, T) -> T) -> Self {
        Self {
            coords: self
                .coords
                .iter()
                .enumerate()
                .map(|(i, &c)| f(i, c))
                .collect(),
        }
    }
}

impl<T> Index<usize> for Point<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.coords[i]
    }
}

/// Distance (or quasi-distance) between objective vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistanceKind {
    Euclidean,
    Chebyshev,
    /// `(Σ|aᵢ−bᵢ|^p)^(1/p)`; a quasi-norm without the triangle inequality when `p < 1`.
    LpQuasi(f64),
}

impl DistanceKind {
    pub fn validate(&self) -> Result<()> {
        match *self {
            DistanceKind::LpQuasi(p) if !(p > 0.0 && p.is_finite()) => Err(
                Error::InvalidParameter(format!("Lp exponent must be positive, got {p}")),
            ),
            _ => Ok(()),
        }
    }

    /// Distance on raw coordinate slices; lengths are assumed equal.
    #[inline]
    pub(crate) fn eval<T: Scalar>(&self, a: &[T], b: &[T]) -> T {
        match *self {
            DistanceKind::Euclidean => a
                .iter()
                .zip(b)
                .map(|(&x, &y)| (x - y) * (x - y))
                .sum::<T>()
                .sqrt(),
            DistanceKind::Chebyshev => a
                .iter()
                .zip(b)
                .fold(T::zero(), |acc, (&x, &y)| acc.max((x - y).abs())),
            DistanceKind::LpQuasi(p) => {
                let p = T::lit(p);
                let s: T = a.iter().zip(b).map(|(&x, &y)| (x - y).abs().powf(p)).sum();
                if s == T::zero() {
                    T::zero()
                } else {
                    s.powf(p.recip())
                }
            }
        }
    }
}

pub fn distance<T: Scalar>(a: &Point<T>, b: &Point<T>, kind: DistanceKind) -> Result<T> {
    if a.dim() != b.dim() {
        return Err(Error::Dimension {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    kind.validate()?;
    Ok(kind.eval(a.coords(), b.coords()))
}

/// Axis that had zero extent during min-max normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegenerateAxis {
    pub axis: usize,
}

/// A Pareto front approximation: `N ≥ 1` points sharing dimension `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct Pfa<T> {
    points: Vec<Point<T>>,
    m: usize,
    normalized: bool,
}

impl<T: Scalar> Pfa<T> {
    pub fn new(points: Vec<Point<T>>) -> Result<Self> {
        let m = points.first().ok_or(Error::EmptyInput)?.dim();
        if let Some(p) = points.iter().find(|p| p.dim() != m) {
            return Err(Error::Dimension {
                expected: m,
                found: p.dim(),
            });
        }
        Ok(Self {
            points,
            m,
            normalized: false,
        })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| Point::from_f64(r))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// Marks the set as normalized after checking every coordinate lies in `[0, 1]`.
    pub fn mark_normalized(mut self) -> Result<Self> {
        let out_of_range = self
            .points
            .iter()
            .flat_map(|p| p.coords())
            .any(|&c| c < T::zero() || c > T::one());
        if out_of_range {
            return Err(Error::InvalidPoint(
                "normalized set has a coordinate outside [0, 1]".into(),
            ));
        }
        self.normalized = true;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn points(&self) -> &[Point<T>] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point<T>> {
        self.points.iter()
    }

    pub fn into_points(self) -> Vec<Point<T>> {
        self.points
    }

    /// Subset by index, in the given order. Keeps the normalized flag.
    pub fn select(&self, indices: &[usize]) -> Result<Self> {
        let points: Vec<_> = indices.iter().map(|&i| self.points[i].clone()).collect();
        let mut out = Self::new(points)?;
        out.normalized = self.normalized;
        Ok(out)
    }

    /// Applies a coordinate map to every point. The result is not marked normalized.
    pub(crate) fn map_points(&self, f: impl Fn(&Point<T>) -> Point<T>) -> Self {
        Self {
            points: self.points.iter().map(f).collect(),
            m: self.m,
            normalized: false,
        }
    }

    pub(crate) fn with_flag(mut self, normalized: bool) -> Self {
        self.normalized = normalized;
        self
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.points
            .iter()
            .map(|p| p.coords().iter().map(|c| c.as_f64()).collect())
            .collect()
    }

    /// Per-objective min-max scaling to `[0, 1]`.
    ///
    /// An objective with zero extent maps to 0 and is reported as a [`DegenerateAxis`].
    pub fn normalize(&self) -> (Self, Vec<DegenerateAxis>) {
        let mut lo = self.points[0].coords().to_vec();
        let mut hi = lo.clone();
        for p in &self.points[1..] {
            for (i, &c) in p.coords().iter().enumerate() {
                lo[i] = lo[i].min(c);
                hi[i] = hi[i].max(c);
            }
        }
        let degenerate: Vec<DegenerateAxis> = (0..self.m)
            .filter(|&i| hi[i] == lo[i])
            .map(|axis| DegenerateAxis { axis })
            .collect();
        for d in &degenerate {
            log::warn!("objective {} has zero extent; mapped to 0", d.axis);
        }
        let out = self.map_points(|p| {
            p.map(|i, c| {
                let span = hi[i] - lo[i];
                if span == T::zero() {
                    T::zero()
                } else {
                    // Clamp guards the last ulp; min and max map to exactly 0 and 1.
                    ((c - lo[i]) / span).max(T::zero()).min(T::one())
                }
            })
        });
        (out.with_flag(true), degenerate)
    }

    /// Removes every Pareto-dominated point, keeping the original order.
    pub fn nondominated_filter(&self) -> Self {
        let keep: Vec<usize> = (0..self.len())
            .filter(|&i| {
                !self
                    .points
                    .iter()
                    .any(|other| other.dominates(&self.points[i]))
            })
            .collect();
        // At least one point is always non-dominated.
        self.select(&keep).expect("non-empty")
    }

    /// Smallest distance over index-distinct pairs, `None` for a singleton.
    pub fn min_pairwise_distance(&self, kind: DistanceKind) -> Option<T> {
        let mut best: Option<T> = None;
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                let d = kind.eval(self.points[i].coords(), self.points[j].coords());
                best = Some(best.map_or(d, |b| b.min(d)));
            }
        }
        best
    }

    /// `true` when two index-distinct points share all coordinates.
    pub fn has_duplicates(&self) -> bool {
        let mut keys: Vec<Vec<u64>> = self
            .points
            .iter()
            .map(|p| p.coords().iter().map(|c| c.as_f64().to_bits()).collect())
            .collect();
        keys.sort_unstable();
        keys.windows(2).any(|w| w[0] == w[1])
    }
}

impl<'a, T> IntoIterator for &'a Pfa<T> {
    type Item = &'a Point<T>;
    type IntoIter = std::slice::Iter<'a, Point<T>>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// Functional forms of the [`Pfa`] methods.
pub fn normalize<T: Scalar>(set: &Pfa<T>) -> (Pfa<T>, Vec<DegenerateAxis>) {
    set.normalize()
}

pub fn nondominated_filter<T: Scalar>(set: &Pfa<T>) -> Pfa<T> {
    set.nondominated_filter()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn p(c: &[f64]) -> Point<f64> {
        Point::<f64>::from_f64(c).unwrap()
    }

    #[test]
    fn distance_examples() {
        let o = p(&[0.0, 0.0]);
        assert_relative_eq!(
            distance(&o, &p(&[1.0, 1.0]), DistanceKind::Euclidean).unwrap(),
            std::f64::consts::SQRT_2
        );
        assert_eq!(
            distance(&o, &p(&[0.3, 0.9]), DistanceKind::Chebyshev).unwrap(),
            0.9
        );
        // (1^0.1 + 1^0.1)^(1/0.1) = 2^10
        let lp = distance(&o, &p(&[1.0, 1.0]), DistanceKind::LpQuasi(0.1)).unwrap();
        assert_relative_eq!(lp, 1024.0, max_relative = 1e-12);
        let direct = (1f64.powf(0.1) + 1f64.powf(0.1)).powf(10.0);
        assert_relative_eq!(lp, direct, max_relative = 1e-14);
    }

    #[test]
    fn distance_dimension_mismatch() {
        let err = distance(
            &p(&[0.0, 0.0]),
            &p(&[0.0, 0.0, 1.0]),
            DistanceKind::Euclidean,
        );
        assert_eq!(
            err,
            Err(Error::Dimension {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn rejects_bad_points() {
        assert!(Point::<f64>::new(vec![1.0]).is_err());
        assert!(Point::new(vec![1.0, f64::NAN]).is_err());
        assert!(Pfa::<f64>::new(vec![]).is_err());
        assert!(DistanceKind::LpQuasi(0.0).validate().is_err());
    }

    #[test]
    fn normalize_examples() {
        let set = Pfa::<f64>::from_rows(&[vec![2.0, 4.0], vec![6.0, 8.0]]).unwrap();
        let (n, warn) = set.normalize();
        assert!(warn.is_empty());
        assert!(n.is_normalized());
        assert_eq!(n.to_rows(), vec![vec![0.0, 0.0], vec![1.0, 1.0]]);
        let (again, _) = n.normalize();
        assert_eq!(again, n);

        let set = Pfa::<f64>::from_rows(&[vec![1.0, 5.0], vec![1.0, 9.0]]).unwrap();
        let (n, warn) = set.normalize();
        assert_eq!(n.to_rows(), vec![vec![0.0, 0.0], vec![0.0, 1.0]]);
        assert_eq!(warn, vec![DegenerateAxis { axis: 0 }]);
    }

    #[test]
    fn nondominated_examples() {
        let set = Pfa::<f64>::from_rows(&[
            vec![0.0, 1.0],
            vec![1.0, 0.0],
            vec![0.5, 0.5],
            vec![0.6, 0.6],
        ])
        .unwrap();
        assert_eq!(
            set.nondominated_filter().to_rows(),
            vec![vec![0.0, 1.0], vec![1.0, 0.0], vec![0.5, 0.5]]
        );
        let front = Pfa::<f64>::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert_eq!(front.nondominated_filter(), front);
        let set = Pfa::<f64>::from_rows(&[vec![0.0, 0.0], vec![1.0, 1.0]]).unwrap();
        assert_eq!(set.nondominated_filter().to_rows(), vec![vec![0.0, 0.0]]);
    }

    #[test]
    fn mark_normalized_checks_range() {
        let set = Pfa::<f64>::from_rows(&[vec![0.0, 1.5]]).unwrap();
        assert!(set.mark_normalized().is_err());
    }

    fn arb_pair(m: usize) -> impl Strategy<Value = (Vec<f64>, Vec<f64>, Vec<f64>)> {
        (
            prop::collection::vec(0.0f64..1.0, m),
            prop::collection::vec(0.0f64..1.0, m),
            prop::collection::vec(0.0f64..1.0, m),
        )
    }

    proptest! {
        #[test]
        fn distance_metric_properties((a, b, c) in (2usize..6).prop_flat_map(arb_pair)) {
            let (a, b, c) = (p(&a), p(&b), p(&c));
            for kind in [DistanceKind::Euclidean, DistanceKind::Chebyshev, DistanceKind::LpQuasi(0.1)] {
                let ab = distance(&a, &b, kind).unwrap();
                let ba = distance(&b, &a, kind).unwrap();
                prop_assert!(ab >= 0.0);
                prop_assert!((ab - ba).abs() <= 1e-12 * ab.max(1.0));
                prop_assert_eq!(distance(&a, &a, kind).unwrap(), 0.0);
                let ra = a.map(|_, x| 1.0 - x);
                let rb = b.map(|_, x| 1.0 - x);
                let r = distance(&ra, &rb, kind).unwrap();
                prop_assert!((r - ab).abs() <= 1e-9 * ab.max(1.0));
            }
            for kind in [DistanceKind::Euclidean, DistanceKind::Chebyshev] {
                let ab = distance(&a, &b, kind).unwrap();
                let bc = distance(&b, &c, kind).unwrap();
                let ac = distance(&a, &c, kind).unwrap();
                prop_assert!(ac <= ab + bc + 1e-12);
            }
        }

        #[test]
        fn normalize_is_idempotent(rows in prop::collection::vec(prop::collection::vec(-5.0f64..5.0, 3), 1..20)) {
            let set = Pfa::<f64>::from_rows(&rows).unwrap();
            let (once, _) = set.normalize();
            let (twice, _) = once.normalize();
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn nondominated_output_is_mutually_nondominated(rows in prop::collection::vec(prop::collection::vec(0.0f64..1.0, 3), 1..30)) {
            let set = Pfa::<f64>::from_rows(&rows).unwrap();
            let nd = set.nondominated_filter();
            for x in nd.iter() {
                for y in nd.iter() {
                    prop_assert!(!x.dominates(y));
                }
            }
            // Every removed point is dominated by something in the input.
            for q in set.iter() {
                if !nd.iter().any(|k| k == q) {
                    prop_assert!(set.iter().any(|o| o.dominates(q)));
                }
            }
        }
    }
}
