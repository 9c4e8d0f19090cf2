use super::{positive, IndicatorId, IndicatorResult};
use crate::error::Result;
use crate::geometry::{DistanceKind, Pfa};
use crate::scalar::{clearly_less, tie_tol, Scalar};

struct Cluster<T> {
    centroid: Vec<T>,
    size: usize,
}

/// Centroid-linkage agglomerative clustering with threshold `d̄`; returns the
/// number of clusters divided by `N`.
///
/// The closest pair of centroids merges while its distance is below `d̄`.
/// Distances within a relative `1e-12` of `d̄` count as equal to it, so
/// lattice spacings that equal the threshold never merge through rounding.
pub fn cdi<T: Scalar>(a: &Pfa<T>, dbar: T) -> Result<IndicatorResult<T>> {
    positive(dbar.as_f64(), "CDI threshold")?;
    let tol = tie_tol::<T>();
    let mut clusters: Vec<Cluster<T>> = a
        .iter()
        .map(|p| Cluster {
            centroid: p.coords().to_vec(),
            size: 1,
        })
        .collect();
    while clusters.len() > 1 {
        let mut best: Option<(usize, usize, T)> = None;
        for i in 0..clusters.len() {
            for j in i + 1..clusters.len() {
                let d = DistanceKind::Euclidean.eval(&clusters[i].centroid, &clusters[j].centroid);
                match best {
                    Some((_, _, b)) if !clearly_less(d, b, tol) => {}
                    _ => best = Some((i, j, d)),
                }
            }
        }
        let (i, j, d) = best.expect("two clusters");
        if !clearly_less(d, dbar, tol) {
            break;
        }
        let other = clusters.remove(j);
        let keep = &mut clusters[i];
        let (ni, nj) = (T::from_count(keep.size), T::from_count(other.size));
        for (c, o) in keep.centroid.iter_mut().zip(&other.centroid) {
            *c = (*c * ni + *o * nj) / (ni + nj);
        }
        keep.size += other.size;
    }
    let value = T::from_count(clusters.len()) / T::from_count(a.len());
    Ok(IndicatorResult::new(IndicatorId::Cdi, value).with("dbar", dbar.as_f64()))
}
