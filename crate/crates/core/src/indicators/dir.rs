use super::{require_len, IndicatorId, IndicatorResult};
use crate::error::{Error, Result};
use crate::geometry::Pfa;
use crate::numerics::mean_std;
use crate::scalar::{clearly_less, tie_tol, Scalar};
use crate::weights::WeightSet;

/// Norm guard for a point coincident with the ideal point.
const NORM_GUARD: f64 = 1e-12;

/// Reference-vector coverage spread.
///
/// Each reference vector is assigned to the point with the smallest angle to it
/// (ideal point at the origin, ties to the lower point index). The result is the
/// population standard deviation of the per-point assignment counts.
pub fn dir<T: Scalar>(a: &Pfa<T>, w: &WeightSet<T>) -> Result<IndicatorResult<T>> {
    require_len(a, 2, "DIR")?;
    if w.is_empty() {
        return Err(Error::InvalidParameter(
            "DIR needs at least one reference vector".into(),
        ));
    }
    if w.m() != a.m() {
        return Err(Error::Dimension {
            expected: a.m(),
            found: w.m(),
        });
    }
    let guard = T::lit(NORM_GUARD);
    let norms: Vec<T> = a.iter().map(|p| p.norm() + guard).collect();
    let tol = tie_tol::<T>();
    let mut counts = vec![T::zero(); a.len()];
    for v in w.vectors() {
        let vn = v.norm();
        let mut best: Option<(usize, T)> = None;
        for (i, p) in a.iter().enumerate() {
            let dot: T = p
                .coords()
                .iter()
                .zip(v.coords())
                .map(|(&x, &y)| x * y)
                .sum();
            let cos = (dot / (vn * norms[i])).max(-T::one()).min(T::one());
            // Smaller angle ⇔ larger cosine.
            match best {
                Some((_, c)) if !clearly_less(c, cos, tol) => {}
                _ => best = Some((i, cos)),
            }
        }
        counts[best.expect("non-empty set").0] += T::one();
    }
    let (_, std) = mean_std(&counts)?;
    Ok(IndicatorResult::new(IndicatorId::Dir, std).with("M", w.len() as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use crate::weights::simplex_lattice;
    use approx::assert_relative_eq;

    fn pfa(rows: &[&[f64]]) -> Pfa<f64> {
        Pfa::<f64>::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn perfect_coverage_is_zero() {
        let w = simplex_lattice::<f64>(3, 5).unwrap();
        let a = w.to_pfa().unwrap();
        assert_eq!(dir(&a, &w).unwrap().value, 0.0);
    }

    #[test]
    fn single_point_takes_everything() {
        // Every reference vector is closest to the centroid-direction point.
        let w = simplex_lattice::<f64>(2, 4).unwrap();
        let a = pfa(&[&[0.5, 0.5], &[0.0001, 1.0], &[1.0, 0.0001]]);
        let narrow =
            WeightSet::new(2, vec![Point::<f64>::from_f64(&[0.5, 0.5]).unwrap(); 6]).unwrap();
        let r = dir(&a, &narrow).unwrap();
        let (m, n) = (6.0, 3.0);
        assert_relative_eq!(r.value, m / n * (n - 1.0f64).sqrt(), max_relative = 1e-12);
        assert!(dir(&a, &w).unwrap().value < r.value);
    }

    #[test]
    fn hand_computed_angle_table() {
        let a = pfa(&[&[1.0, 0.0], &[0.0, 1.0]]);
        let w = WeightSet::new(
            2,
            [
                [1.0, 0.0],
                [0.75, 0.25],
                [0.5, 0.5],
                [0.25, 0.75],
                [0.0, 1.0],
            ]
            .iter()
            .map(|r| Point::<f64>::from_f64(r).unwrap())
            .collect(),
        )
        .unwrap();
        assert_relative_eq!(dir(&a, &w).unwrap().value, 0.5, max_relative = 1e-15);
    }

    #[test]
    fn origin_point_is_guarded() {
        let a = pfa(&[&[0.0, 0.0], &[1.0, 0.0]]);
        let w = simplex_lattice::<f64>(2, 2).unwrap();
        assert!(dir(&a, &w).unwrap().value.is_finite());
    }
}
