use super::{IndicatorId, IndicatorResult};
use crate::error::{Error, Result};
use crate::geometry::Pfa;
use crate::scalar::Scalar;

/// Region covered by the ENI grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EniFrame {
    /// The bounding box of the projected set; an axis with zero extent gets a
    /// unit-width box centred on the points.
    #[default]
    BoundingBox,
    /// The fixed square `[0, 1]²`.
    UnitSquare,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EniOptions {
    /// Gaussian bandwidth in objective units; `None` means `1/T`.
    pub bandwidth: Option<f64>,
    pub frame: EniFrame,
}

/// Entropy of Gaussian influence densities sampled on a `T × T` grid, with the
/// default options.
pub fn eni<T: Scalar>(a: &Pfa<T>, t: usize) -> Result<IndicatorResult<T>> {
    eni_with(a, t, &EniOptions::default())
}

/// Two-dimensional working coordinates: the objectives themselves for `m = 2`,
/// otherwise the first two coordinates in an orthonormal basis of the plane
/// `Σf = 0` (Helmert basis), which is an isometry for points on a common
/// simplex hyperplane.
pub(crate) fn plane_coords<T: Scalar>(a: &Pfa<T>) -> Vec<[T; 2]> {
    if a.m() == 2 {
        return a.iter().map(|p| [p[0], p[1]]).collect();
    }
    let two = T::lit(2.0);
    let six = T::lit(6.0);
    a.iter()
        .map(|p| {
            let u = (p[0] - p[1]) / two.sqrt();
            let v = (p[0] + p[1] - two * p[2]) / six.sqrt();
            [u, v]
        })
        .collect()
}

pub fn eni_with<T: Scalar>(a: &Pfa<T>, t: usize, opts: &EniOptions) -> Result<IndicatorResult<T>> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!(
            "ENI grid needs T >= 2, got {t}"
        )));
    }
    let sigma = opts.bandwidth.unwrap_or(1.0 / t as f64);
    super::positive(sigma, "ENI bandwidth")?;
    let sigma = T::lit(sigma);
    let xy = plane_coords(a);
    let tf = T::from_count(t);
    let half = T::lit(0.5);

    // Cell-centre coordinates per axis.
    let centres: Vec<Vec<T>> = (0..2)
        .map(|axis| {
            let (lo, width) = match opts.frame {
                EniFrame::UnitSquare => (T::zero(), T::one()),
                EniFrame::BoundingBox => {
                    let lo = xy.iter().map(|p| p[axis]).fold(T::infinity(), T::min);
                    let hi = xy.iter().map(|p| p[axis]).fold(T::neg_infinity(), T::max);
                    if hi - lo > T::epsilon() {
                        (lo, hi - lo)
                    } else {
                        ((lo + hi) * half - half, T::one())
                    }
                }
            };
            (0..t)
                .map(|i| lo + (T::from_count(i) + half) * width / tf)
                .collect()
        })
        .collect();

    // The Gaussian kernel factorizes over the two axes.
    let inv = T::one() / (T::lit(2.0) * sigma * sigma);
    let kernel = |axis: usize| -> Vec<Vec<T>> {
        centres[axis]
            .iter()
            .map(|&c| {
                xy.iter()
                    .map(|p| {
                        let d = p[axis] - c;
                        (-(d * d) * inv).exp()
                    })
                    .collect()
            })
            .collect()
    };
    let gx = kernel(0);
    let gy = kernel(1);

    let mut density = Vec::with_capacity(t * t);
    for row in &gx {
        for col in &gy {
            density.push(row.iter().zip(col).map(|(&x, &y)| x * y).sum::<T>());
        }
    }
    let total: T = density.iter().copied().sum();
    if total.is_nan() || total <= T::zero() {
        // Every kernel underflowed; all mass is effectively off-grid.
        return Ok(eni_result(T::zero(), t, sigma));
    }
    // Filter after dividing: a tiny positive density can still underflow to
    // rho = 0, and 0 ln 0 must contribute nothing rather than NaN.
    let entropy = density
        .into_iter()
        .map(|d| d / total)
        .filter(|&rho| rho > T::zero())
        .map(|rho| -rho * rho.ln())
        .sum::<T>()
        .max(T::zero());
    Ok(eni_result(entropy, t, sigma))
}

fn eni_result<T: Scalar>(value: T, t: usize, sigma: T) -> IndicatorResult<T> {
    IndicatorResult::new(IndicatorId::Eni, value)
        .with("T", t as f64)
        .with("sigma", sigma.as_f64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn pfa(rows: &[[f64; 2]]) -> Pfa<f64> {
        Pfa::<f64>::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn concentrated_mass_has_no_entropy() {
        let a = pfa(&[[0.25, 0.25], [0.25, 0.25]]);
        for frame in [EniFrame::UnitSquare, EniFrame::BoundingBox] {
            let opts = EniOptions {
                bandwidth: Some(1e-4),
                frame,
            };
            let v = eni_with(&a, 2, &opts).unwrap().value;
            assert!(v < 1e-12, "{frame:?}: {v}");
        }
    }

    #[test]
    fn flat_density_reaches_the_maximum() {
        let a = pfa(&[[0.1, 0.2], [0.9, 0.4]]);
        let opts = EniOptions {
            bandwidth: Some(1e6),
            frame: EniFrame::UnitSquare,
        };
        let v = eni_with(&a, 10, &opts).unwrap().value;
        assert_relative_eq!(v, (100f64).ln(), max_relative = 1e-9);
    }

    #[test]
    fn hand_evaluated_two_by_two() {
        // Points at the centres of the two left cells; σ = 1/2.
        let a = pfa(&[[0.25, 0.25], [0.25, 0.75]]);
        let opts = EniOptions {
            bandwidth: None,
            frame: EniFrame::UnitSquare,
        };
        let v = eni_with(&a, 2, &opts).unwrap().value;
        // Squared distances from each point to the four centres are 0, 1/4, 1/4, 1/2 → kernels e^0, e^-1/2, e^-1/2, e^-1.
        let (k0, k1, k2) = (1.0, (-0.5f64).exp(), (-1.0f64).exp());
        let left = k0 + k1;
        let right = k1 + k2;
        let total = 2.0 * (left + right);
        let want =
            -2.0 * (left / total * (left / total).ln() + right / total * (right / total).ln());
        assert_relative_eq!(v, want, max_relative = 1e-13);
        assert!(v > 0.0 && v < 4f64.ln());
    }

    #[test]
    fn shrinking_raises_entropy_in_bounding_box_frame() {
        let line: Vec<[f64; 2]> = (0..20)
            .map(|i| [i as f64 / 19.0, 1.0 - i as f64 / 19.0])
            .collect();
        let shrunk: Vec<[f64; 2]> = line
            .iter()
            .map(|p| [0.2 * p[0] + 0.4, 0.2 * p[1] + 0.4])
            .collect();
        let full = eni(&pfa(&line), 20).unwrap().value;
        let small = eni(&pfa(&shrunk), 20).unwrap().value;
        assert!(small > full);
        // With a fixed square the smaller set concentrates mass instead.
        let opts = EniOptions {
            bandwidth: None,
            frame: EniFrame::UnitSquare,
        };
        let full_u = eni_with(&pfa(&line), 20, &opts).unwrap().value;
        let small_u = eni_with(&pfa(&shrunk), 20, &opts).unwrap().value;
        assert!(small_u < full_u);
    }

    #[test]
    fn reflection_invariant() {
        let a = pfa(&[[0.1, 0.8], [0.4, 0.55], [0.7, 0.2], [0.95, 0.0]]);
        let r = pfa(&[[0.9, 0.2], [0.6, 0.45], [0.3, 0.8], [0.05, 1.0]]);
        let x = eni(&a, 10).unwrap().value;
        let y = eni(&r, 10).unwrap().value;
        assert_relative_eq!(x, y, max_relative = 1e-9);
    }

    #[test]
    fn underflowing_cells_do_not_zero_the_entropy() {
        use crate::fronts::{structured_front, FrontKind};
        use crate::scenarios::shrink_coverage;
        use crate::weights::simplex_lattice;
        let front = structured_front(
            &FrontKind::LinearSimplex,
            &simplex_lattice::<f64>(2, 99).unwrap(),
        )
        .unwrap();
        let prev = eni(&shrink_coverage(&front, 0.7).unwrap(), 100)
            .unwrap()
            .value;
        let v = eni(&shrink_coverage(&front, 0.8).unwrap(), 100)
            .unwrap()
            .value;
        assert!(v.is_finite() && v > 6.0 && v < prev, "{v} vs {prev}");
    }

    #[test]
    fn rejects_small_grid() {
        assert!(eni(&pfa(&[[0.0, 1.0]]), 1).is_err());
    }
}
