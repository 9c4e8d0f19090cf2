use super::{positive, require_len, IndicatorId, IndicatorResult};
use crate::error::{Error, Result};
use crate::geometry::{DistanceKind, Pfa};
use crate::scalar::Scalar;

fn pair_distances<T: Scalar>(a: &Pfa<T>) -> Result<Vec<T>> {
    require_len(a, 2, "RSE")?;
    let pts = a.points();
    let mut d = Vec::with_capacity(a.len() * (a.len() - 1) / 2);
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let v = DistanceKind::Euclidean.eval(pts[i].coords(), pts[j].coords());
            if v == T::zero() {
                return Err(Error::DuplicatePoints("RSE"));
            }
            d.push(v);
        }
    }
    Ok(d)
}

/// Riesz s-energy over ordered pairs: `Σ_{i≠j} ‖a_i − a_j‖^{−s}`.
pub fn rse<T: Scalar>(a: &Pfa<T>, s: T) -> Result<IndicatorResult<T>> {
    positive(s.as_f64(), "RSE exponent s")?;
    let d = pair_distances(a)?;
    let half: T = d.iter().map(|&x| x.powf(-s)).sum();
    Ok(IndicatorResult::new(IndicatorId::Rse, half + half).with("s", s.as_f64()))
}

/// `ln RSE`, accumulated in log space so it stays finite when the energy overflows.
pub fn rse_ln<T: Scalar>(a: &Pfa<T>, s: T) -> Result<T> {
    positive(s.as_f64(), "RSE exponent s")?;
    let logs: Vec<T> = pair_distances(a)?
        .into_iter()
        .map(|x| -s * x.ln())
        .collect();
    let top = logs.iter().copied().fold(T::neg_infinity(), T::max);
    let sum: T = logs.iter().map(|&l| (l - top).exp()).sum();
    Ok(T::lit(2.0).ln() + top + sum.ln())
}
