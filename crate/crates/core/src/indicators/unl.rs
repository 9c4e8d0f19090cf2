use super::{require_len, IndicatorId, IndicatorResult};
use crate::error::Result;
use crate::geometry::{DistanceKind, Pfa};
use crate::scalar::Scalar;

/// Smallest pairwise distance (Chebyshev by default).
pub fn unl<T: Scalar>(a: &Pfa<T>, kind: DistanceKind) -> Result<IndicatorResult<T>> {
    require_len(a, 2, "UNL")?;
    kind.validate()?;
    let value = a.min_pairwise_distance(kind).expect("two points");
    Ok(IndicatorResult::new(IndicatorId::Unl, value))
}
