use super::{require_len, IndicatorId, IndicatorResult};
use crate::error::{Error, Result};
use crate::geometry::{DistanceKind, Pfa};
use crate::numerics::mean_std;
use crate::scalar::{tie_tol, Scalar};

/// `k` nearest neighbours of `i` by repeated tolerant argmin; ties go to the
/// lower index so that sets differing only by rounding agree.
fn nearest<T: Scalar>(d: &[T], n: usize, i: usize, k: usize, tol: T) -> Vec<usize> {
    let mut taken = vec![false; n];
    taken[i] = true;
    let mut out = Vec::with_capacity(k);
    for _ in 0..k.min(n - 1) {
        let min = (0..n)
            .filter(|&j| !taken[j])
            .map(|j| d[i * n + j])
            .fold(T::infinity(), T::min);
        let limit = min + tol * min.abs().max(T::one());
        let j = (0..n)
            .find(|&j| !taken[j] && d[i * n + j] <= limit)
            .expect("candidate exists");
        taken[j] = true;
        out.push(j);
    }
    out
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// k-NN uniformity: clusters are connected components of the mutual k-NN graph
/// (each neighbourhood clipped at `k`). A cluster of two or more points scores
/// `σ/(μ+σ)` over its members' within-cluster nearest-neighbour distances; a
/// singleton scores 1. The result is the mean cluster score.
pub fn kua<T: Scalar>(a: &Pfa<T>, k: usize) -> Result<IndicatorResult<T>> {
    require_len(a, 2, "KUA")?;
    if k == 0 {
        return Err(Error::InvalidParameter("KUA needs k >= 1".into()));
    }
    let n = a.len();
    let d = super::distance_matrix(a, DistanceKind::Euclidean);
    let tol = tie_tol::<T>();
    let mut is_neighbour = vec![false; n * n];
    for i in 0..n {
        for j in nearest(&d, n, i, k, tol) {
            is_neighbour[i * n + j] = true;
        }
    }
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in i + 1..n {
            if is_neighbour[i * n + j] && is_neighbour[j * n + i] {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        let r = find(&mut parent, i);
        members[r].push(i);
    }
    let mut scores = Vec::new();
    for cluster in members.iter().filter(|c| !c.is_empty()) {
        if cluster.len() == 1 {
            scores.push(T::one());
            continue;
        }
        let nn: Vec<T> = cluster
            .iter()
            .map(|&i| {
                cluster
                    .iter()
                    .filter(|&&j| j != i)
                    .map(|&j| d[i * n + j])
                    .fold(T::infinity(), T::min)
            })
            .collect();
        let (mu, sigma) = mean_std(&nn)?;
        // Spread at rounding level is a tie, not non-uniformity.
        let sigma = if sigma <= tol * mu { T::zero() } else { sigma };
        let denom = mu + sigma;
        scores.push(if denom > T::zero() {
            sigma / denom
        } else {
            T::zero()
        });
    }
    let (value, _) = mean_std(&scores)?;
    Ok(IndicatorResult::new(IndicatorId::Kua, value)
        .with("k", k as f64)
        .with("clusters", scores.len() as f64))
}
