use super::{positive, IndicatorId, IndicatorResult};
use crate::error::{Error, Result};
use crate::geometry::{DistanceKind, Pfa};
use crate::numerics::SquareMatrix;
use crate::scalar::Scalar;

/// Solow–Polasky diversity: the sum of all entries of `C⁻¹` with
/// `c_ij = exp(−θ‖a_i − a_j‖)`.
///
/// Computed as `1ᵀx` for `Cx = 1`, which equals the entry sum of the inverse.
pub fn spd<T: Scalar>(a: &Pfa<T>, theta: T) -> Result<IndicatorResult<T>> {
    positive(theta.as_f64(), "SPD theta")?;
    if a.has_duplicates() {
        return Err(Error::DuplicatePoints("SPD"));
    }
    let pts = a.points();
    let c = SquareMatrix::from_fn(a.len(), |i, j| {
        if i == j {
            T::one()
        } else {
            (-theta * DistanceKind::Euclidean.eval(pts[i].coords(), pts[j].coords())).exp()
        }
    });
    let lu = c.lu().map_err(|e| match e {
        Error::SingularMatrix { .. } => Error::DuplicatePoints("SPD"),
        other => other,
    })?;
    let value: T = lu.solve(&vec![T::one(); a.len()]).into_iter().sum();
    Ok(IndicatorResult::new(IndicatorId::Spd, value).with("theta", theta.as_f64()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn singleton_is_one() {
        let a = Pfa::<f64>::from_rows(&[vec![0.2, 0.4]]).unwrap();
        assert_eq!(spd(&a, 10.0).unwrap().value, 1.0);
    }

    #[test]
    fn two_point_closed_form() {
        let a = Pfa::<f64>::from_rows(&[vec![0.0, 0.0], vec![0.06, 0.08]]).unwrap();
        let want = 2.0 / (1.0 + (-1.0f64).exp());
        assert_relative_eq!(spd(&a, 10.0).unwrap().value, want, max_relative = 1e-12);
        assert_relative_eq!(want, 1.46212, max_relative = 1e-5);

        let far = Pfa::<f64>::from_rows(&[vec![0.0, 0.0], vec![6.0, 8.0]]).unwrap();
        assert!((spd(&far, 10.0).unwrap().value - 2.0).abs() < 1e-8);
    }

    #[test]
    fn agrees_with_explicit_inverse() {
        let a = Pfa::<f64>::from_rows(&[
            vec![0.0, 1.0],
            vec![0.3, 0.7],
            vec![0.5, 0.5],
            vec![1.0, 0.0],
        ])
        .unwrap();
        let pts = a.points();
        let c = SquareMatrix::from_fn(4, |i, j| {
            (-10.0 * DistanceKind::Euclidean.eval(pts[i].coords(), pts[j].coords())).exp()
        });
        let want = c.invert().unwrap().sum();
        assert_relative_eq!(spd(&a, 10.0).unwrap().value, want, max_relative = 1e-12);
    }

    #[test]
    fn duplicates_and_near_duplicates_fail() {
        let a = Pfa::<f64>::from_rows(&[vec![0.1, 0.9], vec![0.1, 0.9]]).unwrap();
        assert_eq!(spd(&a, 10.0).unwrap_err(), Error::DuplicatePoints("SPD"));
        let b = Pfa::<f64>::from_rows(&[vec![0.1, 0.9], vec![0.1, 0.9 + 1e-16]]).unwrap();
        assert_eq!(spd(&b, 10.0).unwrap_err(), Error::DuplicatePoints("SPD"));
        assert!(spd(&b, 0.0).is_err());
    }
}
