//! Controlled degradation scenarios: coverage loss, uniformity loss and
//! pathological distributions.

use std::collections::HashSet;
use std::fmt;

use rand::seq::index::sample;
use rand::Rng;

use crate::error::{Error, Result};
use crate::geometry::{DistanceKind, Pfa, Point};
use crate::rng;
use crate::scalar::{clearly_less, tie_tol, Scalar};
use crate::weights::WeightSet;

/// Riesz exponent for the boundary-seeking subset selection of pathology case 1.
pub const BOUNDARY_CASE_EXPONENT: f64 = 0.01;

/// Residual tolerance when recognizing a simplex-type hyperplane.
const HYPERPLANE_TOL: f64 = 1e-9;

/// The three pathological distributions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathologyCase {
    /// Points concentrated on the manifold boundary.
    Boundary = 1,
    /// Clusters around the extreme points.
    ClusteredExtremes = 2,
    /// Clusters around a random number of random centroids.
    Clustered = 3,
}

impl PathologyCase {
    pub const ALL: [PathologyCase; 3] = [
        PathologyCase::Boundary,
        PathologyCase::ClusteredExtremes,
        PathologyCase::Clustered,
    ];

    pub fn from_number(n: u8) -> Result<Self> {
        match n {
            1 => Ok(PathologyCase::Boundary),
            2 => Ok(PathologyCase::ClusteredExtremes),
            3 => Ok(PathologyCase::Clustered),
            _ => Err(Error::InvalidParameter(format!(
                "pathology case must be 1, 2 or 3, got {n}"
            ))),
        }
    }

    pub fn number(self) -> u8 {
        self as u8
    }
}

/// Which degradation produced an instance, with its level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Scenario {
    /// Fraction `γ` of the original coverage.
    Coverage(f64),
    /// Percentage `β` of points kept from the uniform set.
    Uniformity(u32),
    Pathology(PathologyCase),
    Control,
}

impl Scenario {
    pub fn kind(&self) -> &'static str {
        match self {
            Scenario::Coverage(_) => "coverage",
            Scenario::Uniformity(_) => "uniformity",
            Scenario::Pathology(_) => "pathology",
            Scenario::Control => "control",
        }
    }

    /// Level as written to results files.
    pub fn level(&self) -> String {
        match self {
            Scenario::Coverage(g) => format!("{g:.1}"),
            Scenario::Uniformity(b) => b.to_string(),
            Scenario::Pathology(c) => format!("case{}", c.number()),
            Scenario::Control => "control".into(),
        }
    }

    pub fn is_ground_truth(&self) -> bool {
        match *self {
            Scenario::Coverage(g) => g == 1.0,
            Scenario::Uniformity(b) => b == 100,
            Scenario::Pathology(_) => false,
            Scenario::Control => true,
        }
    }

    /// Position in the degradation order; larger is closer to the ground truth.
    pub fn truth_order(&self) -> f64 {
        match *self {
            Scenario::Coverage(g) => g,
            Scenario::Uniformity(b) => f64::from(b),
            Scenario::Pathology(_) => 0.0,
            Scenario::Control => 1.0,
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.kind(), self.level())
    }
}

/// A labeled scenario variant ready for evaluation.
#[derive(Debug, Clone)]
pub struct ScenarioInstance {
    pub pfa: Pfa<f64>,
    pub problem: String,
    pub m: usize,
    pub scenario: Scenario,
    pub cardinality: usize,
    pub seed: u64,
}

impl ScenarioInstance {
    pub fn metadata(&self) -> Vec<(String, String)> {
        vec![
            ("problem".into(), self.problem.clone()),
            ("m".into(), self.m.to_string()),
            ("scenario".into(), self.scenario.kind().into()),
            ("level".into(), self.scenario.level()),
            ("cardinality".into(), self.cardinality.to_string()),
            ("seed".into(), self.seed.to_string()),
        ]
    }
}

/// Right-hand side `c` of the hyperplane `Σf = c` shared by every point.
fn hyperplane_level<T: Scalar>(front: &Pfa<T>) -> Result<T> {
    let m = T::from_count(front.m());
    let tol = T::lit(HYPERPLANE_TOL);
    [T::one(), m - T::one(), T::lit(0.5)]
        .into_iter()
        .find(|&c| front.iter().all(|p| (p.sum() - c).abs() <= tol))
        .ok_or_else(|| {
            Error::UnsupportedFront("points do not share a simplex hyperplane Σf = c".into())
        })
}

/// Homothety of ratio `γ` toward the centroid of the front's hyperplane.
pub fn shrink_coverage<T: Scalar>(front: &Pfa<T>, gamma: T) -> Result<Pfa<T>> {
    if !(gamma > T::zero() && gamma <= T::one()) {
        return Err(Error::InvalidParameter(format!(
            "coverage factor must lie in (0, 1], got {gamma}"
        )));
    }
    let c = hyperplane_level(front)?;
    if gamma == T::one() {
        return Ok(front.clone());
    }
    let center = c / T::from_count(front.m());
    let out = front.map_points(|p| p.map(|_, x| gamma * x + (T::one() - gamma) * center));
    Ok(out.with_flag(front.is_normalized()))
}

/// Achievement scalarizing function `maxᵢ wᵢ·|aᵢ − zᵢ|`.
pub fn asf_value<T: Scalar>(a: &Point<T>, w: &Point<T>, z: &Point<T>) -> Result<T> {
    if a.dim() != w.dim() || a.dim() != z.dim() {
        return Err(Error::Dimension {
            expected: a.dim(),
            found: if w.dim() != a.dim() { w.dim() } else { z.dim() },
        });
    }
    Ok(asf(a.coords(), w.coords(), z.coords()))
}

#[inline]
fn asf<T: Scalar>(a: &[T], w: &[T], z: &[T]) -> T {
    a.iter()
        .zip(w)
        .zip(z)
        .fold(T::zero(), |acc, ((&ai, &wi), &zi)| {
            acc.max(wi * (ai - zi).abs())
        })
}

/// For each direction `w`, the unselected dense point minimizing the ASF with
/// reference point at the origin.
///
/// The ASF weights are the reciprocals of the direction components, so the
/// minimizer lies along `w`. A direction on the simplex boundary (some
/// `w_i = 0`) has no such minimizer in a finite sample: the masked axis
/// dominates and the pick lands anywhere along the face. Those directions take
/// the point nearest to the ray `t·w` instead. Ties go to the lower dense index.
pub fn uniform_subset<T: Scalar>(dense: &Pfa<T>, weights: &WeightSet<T>) -> Result<Pfa<T>> {
    if weights.m() != dense.m() {
        return Err(Error::Dimension {
            expected: dense.m(),
            found: weights.m(),
        });
    }
    if dense.len() < weights.len() {
        return Err(Error::InsufficientDense {
            needed: weights.len(),
            available: dense.len(),
        });
    }
    let z = vec![T::zero(); dense.m()];
    let mut taken = vec![false; dense.len()];
    let mut chosen = Vec::with_capacity(weights.len());
    for w in weights.vectors() {
        let on_boundary = w.coords().iter().any(|&c| c <= T::zero());
        let asf_w: Vec<T> = w.coords().iter().map(|&c| c.recip()).collect();
        let unit: Vec<T> = w.coords().iter().map(|&c| c / w.norm()).collect();
        let mut best: Option<(usize, T)> = None;
        for (i, a) in dense.iter().enumerate() {
            if taken[i] {
                continue;
            }
            let v = if on_boundary {
                ray_distance_sq(a.coords(), &unit)
            } else {
                asf(a.coords(), &asf_w, &z)
            };
            if best.is_none_or(|(_, b)| v < b) {
                best = Some((i, v));
            }
        }
        let (i, _) = best.expect("dense has enough unselected points");
        taken[i] = true;
        chosen.push(i);
    }
    dense.select(&chosen)
}

/// Squared distance from `a` to the line through the origin along unit vector `u`.
fn ray_distance_sq<T: Scalar>(a: &[T], u: &[T]) -> T {
    let t: T = a.iter().zip(u).map(|(&x, &y)| x * y).sum();
    a.iter()
        .zip(u)
        .map(|(&x, &y)| (x - t * y) * (x - t * y))
        .sum()
}

fn bit_key<T: Scalar>(p: &Point<T>) -> Vec<u64> {
    p.coords().iter().map(|c| c.as_f64().to_bits()).collect()
}

/// Number of points kept from the uniform set: `β·N/100` rounded half up.
pub fn kept_count(beta: u32, n: usize) -> usize {
    (beta as usize * n + 50) / 100
}

/// Keeps `β%` of `uniform` (random, in original order) and fills the rest with
/// random dense points not already present.
pub fn degrade_uniformity<T: Scalar>(
    uniform: &Pfa<T>,
    dense: &Pfa<T>,
    beta: u32,
    seed: u64,
) -> Result<Pfa<T>> {
    if beta > 100 {
        return Err(Error::InvalidParameter(format!(
            "uniformity percentage must be at most 100, got {beta}"
        )));
    }
    if uniform.m() != dense.m() {
        return Err(Error::Dimension {
            expected: uniform.m(),
            found: dense.m(),
        });
    }
    if beta == 100 {
        return Ok(uniform.clone());
    }
    let n = uniform.len();
    let keep = kept_count(beta, n);
    let mut rng = rng::stream(seed);
    let mut kept: Vec<usize> = sample(&mut rng, n, keep).into_vec();
    kept.sort_unstable();

    let mut seen: HashSet<Vec<u64>> = kept
        .iter()
        .map(|&i| bit_key(&uniform.points()[i]))
        .collect();
    let candidates: Vec<usize> = (0..dense.len())
        .filter(|&i| seen.insert(bit_key(&dense.points()[i])))
        .collect();
    let fill = n - keep;
    if candidates.len() < fill {
        return Err(Error::InsufficientDense {
            needed: fill,
            available: candidates.len(),
        });
    }
    let picks = sample(&mut rng, candidates.len(), fill);
    let mut points: Vec<Point<T>> = kept.iter().map(|&i| uniform.points()[i].clone()).collect();
    points.extend(picks.iter().map(|k| dense.points()[candidates[k]].clone()));
    Ok(Pfa::new(points)?.with_flag(uniform.is_normalized() && dense.is_normalized()))
}

/// Builds a pathological subset of `n` dense points.
pub fn pathology<T: Scalar>(
    dense: &Pfa<T>,
    case: PathologyCase,
    n: usize,
    seed: u64,
) -> Result<Pfa<T>> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "pathology size must be positive".into(),
        ));
    }
    if dense.len() < n {
        return Err(Error::InsufficientDense {
            needed: n,
            available: dense.len(),
        });
    }
    let chosen = match case {
        PathologyCase::Boundary => riesz_removal(dense, n, T::lit(BOUNDARY_CASE_EXPONENT)),
        PathologyCase::ClusteredExtremes => {
            let centroids = extreme_points(dense);
            claim_nearest(dense, &centroids, n)
        }
        PathologyCase::Clustered => {
            let mut rng = rng::stream(seed);
            let m = dense.m();
            let k = rng.random_range(2..=2 * m).min(dense.len());
            let centroids = sample(&mut rng, dense.len(), k).into_vec();
            claim_nearest(dense, &centroids, n)
        }
    };
    dense.select(&chosen)
}

/// Greedy Riesz s-energy subset selection: drop the point with the largest
/// energy contribution until `n` remain. Returns kept indices in order.
fn riesz_removal<T: Scalar>(dense: &Pfa<T>, n: usize, s: T) -> Vec<usize> {
    let pts = dense.points();
    let len = pts.len();
    // Coincident points get a huge but finite energy so they are removed first.
    let tiny = T::min_positive_value();
    let energy = |i: usize, j: usize| {
        DistanceKind::Euclidean
            .eval(pts[i].coords(), pts[j].coords())
            .max(tiny)
            .powf(-s)
    };
    let mut contrib = vec![T::zero(); len];
    for i in 0..len {
        for j in i + 1..len {
            let e = energy(i, j);
            contrib[i] += e;
            contrib[j] += e;
        }
    }
    let mut alive = vec![true; len];
    let tol = tie_tol::<T>();
    for _ in 0..len - n {
        let mut worst: Option<usize> = None;
        for i in (0..len).filter(|&i| alive[i]) {
            match worst {
                Some(w) if !clearly_less(contrib[w], contrib[i], tol) => {}
                _ => worst = Some(i),
            }
        }
        let r = worst.expect("points remain");
        alive[r] = false;
        for j in (0..len).filter(|&j| alive[j]) {
            contrib[j] -= energy(r, j);
        }
    }
    (0..len).filter(|&i| alive[i]).collect()
}

/// Per-objective maximizers (lowest index on ties), one per objective.
fn extreme_points<T: Scalar>(dense: &Pfa<T>) -> Vec<usize> {
    (0..dense.m())
        .map(|axis| {
            let mut best = 0;
            for (i, p) in dense.iter().enumerate() {
                if p[axis] > dense.points()[best][axis] {
                    best = i;
                }
            }
            best
        })
        .collect()
}

/// Each centroid in turn claims its `⌈n/k⌉` nearest unclaimed points until `n`
/// are claimed. Returns the claimed indices grouped by centroid.
fn claim_nearest<T: Scalar>(dense: &Pfa<T>, centroids: &[usize], n: usize) -> Vec<usize> {
    let per = n.div_ceil(centroids.len());
    let mut claimed = vec![false; dense.len()];
    let mut out = Vec::with_capacity(n);
    for &c in centroids {
        if out.len() == n {
            break;
        }
        let quota = per.min(n - out.len());
        let center = dense.points()[c].coords();
        let mut order: Vec<(T, usize)> = (0..dense.len())
            .filter(|&i| !claimed[i])
            .map(|i| {
                (
                    DistanceKind::Euclidean.eval(center, dense.points()[i].coords()),
                    i,
                )
            })
            .collect();
        order.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.cmp(&b.1)));
        for &(_, i) in order.iter().take(quota) {
            claimed[i] = true;
            out.push(i);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fronts::{dense_sample, structured_front, FrontKind};
    use crate::weights::{simplex_lattice, two_layer_lattice};
    use approx::assert_relative_eq;

    fn pt(c: &[f64]) -> Point<f64> {
        Point::<f64>::from_f64(c).unwrap()
    }

    fn lattice_front(kind: FrontKind, m: usize, h: usize) -> Pfa<f64> {
        structured_front(&kind, &simplex_lattice(m, h).unwrap()).unwrap()
    }

    #[test]
    fn shrink_identity_and_example() {
        let front = lattice_front(FrontKind::LinearSimplex, 3, 4);
        assert_eq!(shrink_coverage(&front, 1.0).unwrap(), front);
        let one = Pfa::new(vec![pt(&[1.0, 0.0, 0.0])]).unwrap();
        let s = shrink_coverage(&one, 0.4).unwrap();
        let p = &s.points()[0];
        assert_relative_eq!(p[0], 0.6, max_relative = 1e-15);
        assert_relative_eq!(p[1], 0.2, max_relative = 1e-15);
        assert_relative_eq!(p[2], 0.2, max_relative = 1e-15);
        assert_relative_eq!(p.sum(), 1.0, max_relative = 1e-15);
    }

    #[test]
    fn shrink_preserves_plane_and_scales_distances() {
        for kind in [
            FrontKind::LinearSimplex,
            FrontKind::InvertedSimplex,
            FrontKind::Dtlz1,
        ] {
            let front = lattice_front(kind, 3, 6);
            for gamma in [0.1, 0.35, 0.9] {
                let s = shrink_coverage(&front, gamma).unwrap();
                assert_eq!(s.len(), front.len());
                for (a, b) in front.iter().zip(s.iter()) {
                    assert!((a.sum() - b.sum()).abs() < 1e-12);
                }
                for kind in [DistanceKind::Euclidean, DistanceKind::Chebyshev] {
                    let d0 = front.min_pairwise_distance(kind).unwrap();
                    let d1 = s.min_pairwise_distance(kind).unwrap();
                    assert_relative_eq!(d1, gamma * d0, max_relative = 1e-10);
                }
            }
        }
    }

    #[test]
    fn shrink_rejects_off_plane_fronts() {
        let sphere = lattice_front(FrontKind::Dtlz2Sphere, 3, 4);
        assert!(matches!(
            shrink_coverage(&sphere, 0.5),
            Err(Error::UnsupportedFront(_))
        ));
        let front = lattice_front(FrontKind::LinearSimplex, 2, 4);
        assert!(shrink_coverage(&front, 0.0).is_err());
    }

    #[test]
    fn asf_examples() {
        let z = pt(&[0.0, 0.0]);
        assert_relative_eq!(
            asf_value(&pt(&[0.2, 0.8]), &pt(&[0.5, 0.5]), &z).unwrap(),
            0.4
        );
        assert_eq!(asf_value(&z, &pt(&[0.5, 0.5]), &z).unwrap(), 0.0);
        assert_eq!(
            asf_value(&pt(&[0.3, 0.9]), &pt(&[1.0, 0.0]), &z).unwrap(),
            0.3
        );
        assert!(asf_value(&pt(&[0.3, 0.9, 0.0]), &pt(&[1.0, 0.0]), &z).is_err());
    }

    #[test]
    fn boundary_directions_stay_near_their_lattice_point() {
        // Lattice spacing is 1/13 per coordinate; every pick must stay well inside it.
        let dense = dense_sample::<f64>(&FrontKind::LinearSimplex, 3, 3000, 1).unwrap();
        let w = simplex_lattice::<f64>(3, 13).unwrap();
        let u = uniform_subset(&dense, &w).unwrap();
        for (p, w) in u.iter().zip(w.vectors()) {
            let d = DistanceKind::Euclidean.eval(p.coords(), w.coords());
            assert!(d < 0.06, "{:?} picked {:?}", w.coords(), p.coords());
        }
    }

    #[test]
    fn uniform_subset_recovers_lattice() {
        for (m, h1, h2) in [(2, 9, 0), (3, 13, 0), (4, 5, 2)] {
            let w = two_layer_lattice::<f64>(m, h1, h2).unwrap();
            let dense = structured_front(&FrontKind::LinearSimplex, &w).unwrap();
            let picked = uniform_subset(&dense, &w).unwrap();
            assert_eq!(picked, dense, "m={m}");
        }
    }

    #[test]
    fn uniform_subset_centroid_matches_exhaustive_argmin() {
        let dense = dense_sample::<f64>(&FrontKind::LinearSimplex, 3, 400, 5).unwrap();
        let c = 1.0 / 3.0;
        let w = WeightSet::new(3, vec![pt(&[c, c, c])]).unwrap();
        let got = uniform_subset(&dense, &w).unwrap();
        // Brute force: the centroid direction's ASF is proportional to the largest coordinate.
        let mut best = 0;
        for (i, p) in dense.iter().enumerate() {
            let v = p.coords().iter().cloned().fold(0.0, f64::max);
            let b = dense.points()[best]
                .coords()
                .iter()
                .cloned()
                .fold(0.0, f64::max);
            if v < b {
                best = i;
            }
        }
        assert_eq!(got.points()[0], dense.points()[best]);

        let single = Pfa::new(vec![pt(&[0.3, 0.7])]).unwrap();
        let w = WeightSet::new(2, vec![pt(&[0.5, 0.5])]).unwrap();
        assert_eq!(uniform_subset(&single, &w).unwrap(), single);
    }

    #[test]
    fn degrade_uniformity_contract() {
        let dense = dense_sample::<f64>(&FrontKind::LinearSimplex, 3, 800, 1).unwrap();
        let w = simplex_lattice::<f64>(3, 8).unwrap();
        let uniform = uniform_subset(&dense, &w).unwrap();
        assert_eq!(
            degrade_uniformity(&uniform, &dense, 100, 9).unwrap(),
            uniform
        );
        for beta in [0, 10, 50, 90] {
            let a = degrade_uniformity(&uniform, &dense, beta, 9).unwrap();
            let b = degrade_uniformity(&uniform, &dense, beta, 9).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.len(), uniform.len());
            assert!(!a.has_duplicates());
            let from_uniform = a.iter().filter(|p| uniform.iter().any(|u| u == *p)).count();
            assert!(from_uniform >= kept_count(beta, uniform.len()));
        }
        assert_eq!(kept_count(50, 45), 23);
        assert_eq!(kept_count(10, 105), 11);
        let tiny = Pfa::new(dense.points()[..20].to_vec()).unwrap();
        assert!(matches!(
            degrade_uniformity(&uniform, &tiny, 10, 1),
            Err(Error::InsufficientDense { .. })
        ));
    }

    #[test]
    fn clustered_extremes_two_objectives() {
        let dense = dense_sample::<f64>(&FrontKind::LinearSimplex, 2, 1000, 3).unwrap();
        let out = pathology(&dense, PathologyCase::ClusteredExtremes, 50, 0).unwrap();
        assert_eq!(out.len(), 50);
        let ext = extreme_points(&dense);
        for (k, &c) in ext.iter().enumerate() {
            let center = &dense.points()[c];
            assert!(out.iter().any(|p| p == center));
            // Recompute the 25 nearest to this centroid among points not claimed earlier.
            let cluster = &out.points()[k * 25..(k + 1) * 25];
            let mut d: Vec<f64> = dense
                .iter()
                .filter(|p| k == 0 || !out.points()[..25].contains(p))
                .map(|p| DistanceKind::Euclidean.eval(center.coords(), p.coords()))
                .collect();
            d.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let radius = d[24];
            for p in cluster {
                assert!(DistanceKind::Euclidean.eval(center.coords(), p.coords()) <= radius);
            }
        }
        // The two clusters sit at the vertices (1,0) and (0,1).
        assert!(out.points()[..25].iter().all(|p| p[0] > 0.9));
        assert!(out.points()[25..].iter().all(|p| p[1] > 0.9));
    }

    #[test]
    fn boundary_case_keeps_everything_when_nothing_to_remove() {
        let dense = dense_sample::<f64>(&FrontKind::LinearSimplex, 3, 60, 3).unwrap();
        assert_eq!(
            pathology(&dense, PathologyCase::Boundary, 60, 0).unwrap(),
            dense
        );
    }

    #[test]
    fn boundary_case_prefers_the_boundary() {
        let dense = dense_sample::<f64>(&FrontKind::LinearSimplex, 3, 600, 8).unwrap();
        let out = pathology(&dense, PathologyCase::Boundary, 60, 0).unwrap();
        let min_coord = |p: &Point<f64>| p.coords().iter().cloned().fold(1.0, f64::min);
        let mean_in = out.iter().map(min_coord).sum::<f64>() / out.len() as f64;
        let mean_all = dense.iter().map(min_coord).sum::<f64>() / dense.len() as f64;
        assert!(mean_in < 0.5 * mean_all, "{mean_in} vs {mean_all}");
    }

    #[test]
    fn clustered_case_is_deterministic() {
        let dense = dense_sample::<f64>(&FrontKind::Dtlz1, 3, 500, 2).unwrap();
        let a = pathology(&dense, PathologyCase::Clustered, 45, 17).unwrap();
        let b = pathology(&dense, PathologyCase::Clustered, 45, 17).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 45);
        assert!(!a.has_duplicates());
        assert!(matches!(
            pathology(&dense, PathologyCase::Clustered, 501, 17),
            Err(Error::InsufficientDense { .. })
        ));
    }
}
