use std::collections::BTreeSet;

use super::{IndicatorId, IndicatorResult};
use crate::error::{Error, Result};
use crate::geometry::{DistanceKind, Pfa, Point};
use crate::scalar::{clearly_less, tie_tol, Scalar};

/// Simplex projection `p = a / Σa` followed by the stick-breaking map onto
/// `[0, 1]^{m−1}`: `q_j = p_j / (1 − Σ_{i<j} p_i)`, with `0/0 → 0`.
/// Points with `Σa < 1e-12` map to the simplex centroid.
pub fn stick_breaking<T: Scalar>(a: &Point<T>) -> Vec<T> {
    let m = a.dim();
    let s = a.sum();
    let p: Vec<T> = if s < T::lit(1e-12) {
        vec![T::one() / T::from_count(m); m]
    } else {
        a.coords().iter().map(|&c| c / s).collect()
    };
    let mut used = T::zero();
    let mut q = Vec::with_capacity(m - 1);
    for &pj in &p[..m - 1] {
        let rest = T::one() - used;
        let v = if rest <= T::epsilon() {
            T::zero()
        } else {
            pj / rest
        };
        q.push(v.max(T::zero()).min(T::one()));
        used += pj;
    }
    q
}

/// Cells per axis: the largest `g ≥ 2` with `g^{m−1} ≤ M` (or 2 when `M` is small).
pub fn grid_divisions(reference_size: usize, m: usize) -> usize {
    let dims = (m - 1) as u32;
    let mut g = 1usize;
    while (g + 1)
        .checked_pow(dims)
        .is_some_and(|v| v <= reference_size)
    {
        g += 1;
    }
    g.max(2)
}

/// Grid cell of stick-breaking coordinates `q`. Lattice points sit on cell
/// boundaries, so a coordinate within rounding of a grid line counts as on it.
fn cell_of<T: Scalar>(q: &[T], g: usize) -> Vec<usize> {
    let gf = T::from_count(g);
    let tol = tie_tol::<T>();
    q.iter()
        .map(|&x| {
            let y = x * gf;
            let r = y.round();
            let y = if (y - r).abs() <= tol * y.abs().max(T::one()) {
                r
            } else {
                y.floor()
            };
            y.to_usize().unwrap_or(0).min(g - 1)
        })
        .collect()
}

/// Share of the reference set's occupied grid cells that the set also occupies,
/// after snapping each point to its nearest reference point.
pub fn cpf<T: Scalar>(a: &Pfa<T>, z: &Pfa<T>) -> Result<IndicatorResult<T>> {
    if z.is_empty() {
        return Err(Error::EmptyReference);
    }
    if z.m() != a.m() {
        return Err(Error::Dimension {
            expected: a.m(),
            found: z.m(),
        });
    }
    let g = grid_divisions(z.len(), a.m());
    let ref_cells: Vec<Vec<usize>> = z.iter().map(|p| cell_of(&stick_breaking(p), g)).collect();
    let covered_by_ref: BTreeSet<&Vec<usize>> = ref_cells.iter().collect();
    let tol = tie_tol::<T>();
    let mut covered: BTreeSet<&Vec<usize>> = BTreeSet::new();
    for p in a.iter() {
        // Nearest reference point; rounding-level ties keep the lower index.
        let mut best = 0;
        let mut best_d = T::infinity();
        for (k, r) in z.iter().enumerate() {
            let d = DistanceKind::Euclidean.eval(p.coords(), r.coords());
            if best_d.is_infinite() || clearly_less(d, best_d, tol) {
                best_d = d;
                best = k;
            }
        }
        covered.insert(&ref_cells[best]);
    }
    let value = T::from_count(covered.len()) / T::from_count(covered_by_ref.len());
    Ok(IndicatorResult::new(IndicatorId::Cpf, value)
        .with("M", z.len() as f64)
        .with("G", g as f64))
}
