//! Analytic Pareto fronts, dense samplers and external point clouds.

use std::fmt;
use std::path::{Path, PathBuf};

use rand::Rng;
use rand_distr::{Exp1, StandardNormal};

use crate::error::{Error, Result};
use crate::geometry::{Pfa, Point};
use crate::rng;
use crate::scalar::Scalar;
use crate::weights::WeightSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FrontKind {
    /// `Σf = 1`
    LinearSimplex,
    /// `Σf = m − 1`, the componentwise reflection of the linear simplex.
    InvertedSimplex,
    /// `Σf = 1/2`
    Dtlz1,
    /// Positive orthant of the unit sphere.
    Dtlz2Sphere,
    External(PathBuf),
}

impl FrontKind {
    pub fn label(&self) -> String {
        match self {
            FrontKind::LinearSimplex => "linear".into(),
            FrontKind::InvertedSimplex => "inverted".into(),
            FrontKind::Dtlz1 => "dtlz1".into(),
            FrontKind::Dtlz2Sphere => "dtlz2".into(),
            FrontKind::External(p) => p
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| p.display().to_string()),
        }
    }

    /// Parses a builtin name; anything else is taken as a path to an external front.
    pub fn parse(s: &str) -> Self {
        match s.to_ascii_lowercase().as_str() {
            "linear" | "linear-simplex" | "l" => FrontKind::LinearSimplex,
            "inverted" | "inverted-simplex" | "i" => FrontKind::InvertedSimplex,
            "dtlz1" => FrontKind::Dtlz1,
            "dtlz2" | "sphere" => FrontKind::Dtlz2Sphere,
            _ => FrontKind::External(PathBuf::from(s)),
        }
    }

    /// Residual of the front's defining equation at `p`.
    pub fn manifold_residual<T: Scalar>(&self, p: &Point<T>) -> Option<T> {
        let m = T::from_count(p.dim());
        match self {
            FrontKind::LinearSimplex => Some(p.sum() - T::one()),
            FrontKind::InvertedSimplex => Some(p.sum() - (m - T::one())),
            FrontKind::Dtlz1 => Some(p.sum() - T::lit(0.5)),
            FrontKind::Dtlz2Sphere => Some(p.norm() - T::one()),
            FrontKind::External(_) => None,
        }
    }

    fn builtin(&self) -> Result<()> {
        match self {
            FrontKind::External(p) => Err(Error::UnsupportedFront(format!(
                "external front {} cannot be generated",
                p.display()
            ))),
            _ => Ok(()),
        }
    }

    fn map_weight<T: Scalar>(&self, index: usize, w: &Point<T>) -> Result<Point<T>> {
        Ok(match self {
            FrontKind::LinearSimplex => w.clone(),
            FrontKind::InvertedSimplex => w.map(|_, c| T::one() - c),
            FrontKind::Dtlz1 => w.map(|_, c| c * T::lit(0.5)),
            FrontKind::Dtlz2Sphere => {
                let n = w.norm();
                if n <= T::epsilon() {
                    return Err(Error::DegenerateWeight(index));
                }
                w.map(|_, c| c / n)
            }
            FrontKind::External(_) => unreachable!("checked by builtin()"),
        })
    }
}

impl fmt::Display for FrontKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Maps each weight vector onto the front of `kind`.
pub fn structured_front<T: Scalar>(kind: &FrontKind, weights: &WeightSet<T>) -> Result<Pfa<T>> {
    kind.builtin()?;
    let points = weights
        .vectors()
        .iter()
        .enumerate()
        .map(|(i, w)| kind.map_weight(i, w))
        .collect::<Result<Vec<_>>>()?;
    Pfa::new(points)
}

/// `count` points drawn uniformly from the front manifold with a seeded stream.
///
/// Simplex-type fronts use symmetric Dirichlet(1, …, 1) draws; the sphere uses
/// normalized absolute Gaussian draws.
pub fn dense_sample<T: Scalar>(
    kind: &FrontKind,
    m: usize,
    count: usize,
    seed: u64,
) -> Result<Pfa<T>> {
    kind.builtin()?;
    if count == 0 {
        return Err(Error::EmptyInput);
    }
    if m < 2 {
        return Err(Error::InvalidParameter(format!("need m >= 2, got {m}")));
    }
    let mut rng = rng::stream(seed);
    let mut points = Vec::with_capacity(count);
    while points.len() < count {
        let p = match kind {
            FrontKind::Dtlz2Sphere => {
                let g: Vec<f64> = (0..m)
                    .map(|_| rng.sample::<f64, _>(StandardNormal).abs())
                    .collect();
                let n = g.iter().map(|x| x * x).sum::<f64>().sqrt();
                if n == 0.0 {
                    continue;
                }
                let g: Vec<T> = g.iter().map(|&x| T::lit(x)).collect();
                let n = g.iter().map(|&x| x * x).sum::<T>().sqrt();
                Point::new(g.into_iter().map(|x| x / n).collect())?
            }
            _ => {
                let e: Vec<f64> = (0..m).map(|_| rng.sample::<f64, _>(Exp1)).collect();
                let total: f64 = e.iter().sum();
                if total == 0.0 {
                    continue;
                }
                let w = Point::new(e.iter().map(|&x| T::lit(x / total)).collect())?;
                kind.map_weight(points.len(), &w)?
            }
        };
        points.push(p);
    }
    Pfa::new(points)
}

/// Reads an external front in the PFA CSV format. The result is not normalized.
pub fn load_external<T: Scalar>(path: &Path) -> Result<Pfa<T>> {
    let pfa: Pfa<f64> = crate::io::read_pfa(path)?;
    Pfa::from_rows_generic(&pfa)
}

impl<T: Scalar> Pfa<T> {
    pub(crate) fn from_rows_generic(src: &Pfa<f64>) -> Result<Self> {
        Pfa::new(
            src.iter()
                .map(|p| Point::new(p.coords().iter().map(|&c| T::lit(c)).collect()))
                .collect::<Result<Vec<_>>>()?,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{simplex_lattice, two_layer_lattice};

    #[test]
    fn structured_examples() {
        let w = WeightSet::new(2, vec![Point::<f64>::from_f64(&[0.25, 0.75]).unwrap()]).unwrap();
        let f = structured_front(&FrontKind::LinearSimplex, &w).unwrap();
        assert_eq!(f.to_rows(), vec![vec![0.25, 0.75]]);

        let w = WeightSet::new(3, vec![Point::<f64>::from_f64(&[1.0, 0.0, 0.0]).unwrap()]).unwrap();
        let f = structured_front(&FrontKind::InvertedSimplex, &w).unwrap();
        assert_eq!(f.to_rows(), vec![vec![0.0, 1.0, 1.0]]);
        assert_eq!(f.points()[0].sum(), 2.0);

        let w = WeightSet::new(2, vec![Point::<f64>::from_f64(&[0.5, 0.5]).unwrap()]).unwrap();
        let f = structured_front(&FrontKind::Dtlz2Sphere, &w).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((f.points()[0][0] - h).abs() < 1e-15);
        assert!((f.points()[0].norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn external_kind_is_not_generated() {
        let w = simplex_lattice::<f64>(2, 3).unwrap();
        let ext = FrontKind::External("x.csv".into());
        assert!(matches!(
            structured_front(&ext, &w),
            Err(Error::UnsupportedFront(_))
        ));
        assert!(dense_sample::<f64>(&ext, 2, 10, 0).is_err());
    }

    #[test]
    fn inverted_is_reflection_of_linear() {
        let w = two_layer_lattice::<f64>(3, 5, 2).unwrap();
        let l = structured_front(&FrontKind::LinearSimplex, &w).unwrap();
        let i = structured_front(&FrontKind::InvertedSimplex, &w).unwrap();
        for (a, b) in l.iter().zip(i.iter()) {
            for (x, y) in a.coords().iter().zip(b.coords()) {
                assert_eq!(1.0 - x, *y);
            }
            assert!((a.sum() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn dense_samples_lie_on_their_manifold() {
        for kind in [
            FrontKind::LinearSimplex,
            FrontKind::InvertedSimplex,
            FrontKind::Dtlz1,
            FrontKind::Dtlz2Sphere,
        ] {
            for m in [2, 3, 5] {
                let s = dense_sample::<f64>(&kind, m, 1000, 11).unwrap();
                assert_eq!(s.len(), 1000);
                for p in s.iter() {
                    assert!(
                        kind.manifold_residual(p).unwrap().abs() <= 1e-12,
                        "{kind} m={m}"
                    );
                    assert!(p.coords().iter().all(|&c| c >= 0.0));
                }
            }
        }
    }

    #[test]
    fn dense_sample_is_deterministic() {
        let a = dense_sample::<f64>(&FrontKind::Dtlz1, 3, 500, 42).unwrap();
        let b = dense_sample::<f64>(&FrontKind::Dtlz1, 3, 500, 42).unwrap();
        let c = dense_sample::<f64>(&FrontKind::Dtlz1, 3, 500, 43).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn parse_labels() {
        assert_eq!(FrontKind::parse("Linear"), FrontKind::LinearSimplex);
        assert_eq!(FrontKind::parse("dtlz2"), FrontKind::Dtlz2Sphere);
        assert_eq!(
            FrontKind::parse("data/wfg1.csv"),
            FrontKind::External("data/wfg1.csv".into())
        );
        assert_eq!(FrontKind::parse("data/wfg1.csv").label(), "wfg1");
    }
}
