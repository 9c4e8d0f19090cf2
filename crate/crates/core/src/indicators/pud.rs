use super::{distance_matrix, IndicatorId, IndicatorResult};
use crate::error::Result;
use crate::geometry::{DistanceKind, Pfa};
use crate::scalar::{clearly_less, tie_tol, Scalar};

/// Largest set size evaluated with the exact recursion.
pub const EXACT_LIMIT: usize = 12;

/// Weitzman-style diversity with a point-to-set nearest-neighbour dissimilarity.
///
/// Sets of up to [`EXACT_LIMIT`] points use the exact recursion, larger sets the
/// greedy removal approximation.
pub fn pud<T: Scalar>(a: &Pfa<T>, kind: DistanceKind) -> Result<IndicatorResult<T>> {
    kind.validate()?;
    let (value, exact) = if a.len() <= EXACT_LIMIT {
        (pud_exact(a, kind)?, true)
    } else {
        (pud_greedy(a, kind)?, false)
    };
    let mut r =
        IndicatorResult::new(IndicatorId::Pud, value).with("exact", if exact { 1.0 } else { 0.0 });
    if let DistanceKind::LpQuasi(p) = kind {
        r = r.with("p", p);
    }
    Ok(r)
}

/// `W(S) = max_{a∈S} W(S∖a) + D(a, S∖a)` with `W({a}) = 0`, memoized over subsets.
pub fn pud_exact<T: Scalar>(a: &Pfa<T>, kind: DistanceKind) -> Result<T> {
    kind.validate()?;
    let n = a.len();
    if n > 20 {
        return Err(crate::error::Error::InvalidParameter(format!(
            "exact recursion limited to 20 points, got {n}"
        )));
    }
    let d = distance_matrix(a, kind);
    let full = (1usize << n) - 1;
    let mut w = vec![T::zero(); full + 1];
    for mask in 1..=full {
        if mask.count_ones() < 2 {
            continue;
        }
        let mut best = T::neg_infinity();
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = mask & !(1 << i);
            let mut nn = T::infinity();
            let mut r = rest;
            while r != 0 {
                let j = r.trailing_zeros() as usize;
                r &= r - 1;
                nn = nn.min(d[i * n + j]);
            }
            best = best.max(w[rest] + nn);
        }
        w[mask] = best;
    }
    Ok(w[full])
}

/// Repeatedly removes the point farthest from its nearest remaining neighbour,
/// accumulating that distance, until one point remains.
///
/// Mutual nearest neighbours tie on that distance, so candidates are compared
/// on their whole sorted distance profile (nearest, then second nearest, ...).
/// This keeps the value independent of input order; only mirror-symmetric
/// candidates, whose removals are equivalent, fall through to the lower index.
pub fn pud_greedy<T: Scalar>(a: &Pfa<T>, kind: DistanceKind) -> Result<T> {
    kind.validate()?;
    let n = a.len();
    let d = distance_matrix(a, kind);
    let tol = tie_tol::<T>();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut total = T::zero();
    while alive.len() > 1 {
        let mut pick: Option<(usize, Vec<T>)> = None;
        for (pos, &i) in alive.iter().enumerate() {
            let mut profile: Vec<T> = alive
                .iter()
                .filter(|&&j| j != i)
                .map(|&j| d[i * n + j])
                .collect();
            profile.sort_by(|x, y| x.partial_cmp(y).expect("finite distances"));
            let better = match &pick {
                None => true,
                Some((_, best)) => profile_greater(&profile, best, tol),
            };
            if better {
                pick = Some((pos, profile));
            }
        }
        let (pos, profile) = pick.expect("at least two alive");
        let nn = profile[0];
        total += nn;
        alive.remove(pos);
    }
    Ok(total)
}

/// Tolerant lexicographic `a > b` over equally long sorted profiles.
fn profile_greater<T: Scalar>(a: &[T], b: &[T], tol: T) -> bool {
    for (&x, &y) in a.iter().zip(b) {
        if clearly_less(y, x, tol) {
            return true;
        }
        if clearly_less(x, y, tol) {
            return false;
        }
    }
    false
}
