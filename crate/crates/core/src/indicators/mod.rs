//! The nine distribution indicators and their registry.
//!
//! Every indicator is a pure functional of a point set. Orientation and ranges:
//!
//! | id  | orientation | range |
//! |-----|-------------|-------|
//! | DIR | min | `[0, (M/N)√(N−1)]` |
//! | PUD | max | `[0, ∞)` |
//! | SPD | max | `[1, N]` |
//! | RSE | min | `(0, ∞)` |
//! | ENI | max | `[0, ln T²]` |
//! | CPF | max | `[0, 1]` |
//! | UNL | min | `[0, ∞)` |
//! | CDI | max | `(0, 1]` |
//! | KUA | min | `[0, 1]` |

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fronts::{structured_front, FrontKind};
use crate::geometry::{DistanceKind, Pfa};
use crate::scalar::Scalar;
use crate::tables::coverage_row;
use crate::weights::{lattice_size, simplex_lattice, two_layer_lattice, WeightSet};

mod cdi;
mod cpf;
mod dir;
mod eni;
mod kua;
mod pud;
mod rse;
mod spd;
mod unl;

pub use cdi::cdi;
pub use cpf::{cpf, grid_divisions, stick_breaking};
pub use dir::dir;
pub use eni::{eni, eni_with, EniFrame, EniOptions};
pub use kua::kua;
pub use pud::{pud, pud_exact, pud_greedy, EXACT_LIMIT};
pub use rse::{rse, rse_ln};
pub use spd::spd;
pub use unl::unl;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndicatorId {
    Dir,
    Pud,
    Spd,
    Rse,
    Eni,
    Cpf,
    Unl,
    Cdi,
    Kua,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Maximize,
    Minimize,
}

impl Orientation {
    pub fn label(self) -> &'static str {
        match self {
            Orientation::Maximize => "max",
            Orientation::Minimize => "min",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "max" => Some(Orientation::Maximize),
            "min" => Some(Orientation::Minimize),
            _ => None,
        }
    }
}

impl IndicatorId {
    pub const ALL: [IndicatorId; 9] = [
        IndicatorId::Dir,
        IndicatorId::Pud,
        IndicatorId::Spd,
        IndicatorId::Rse,
        IndicatorId::Eni,
        IndicatorId::Cpf,
        IndicatorId::Unl,
        IndicatorId::Cdi,
        IndicatorId::Kua,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IndicatorId::Dir => "DIR",
            IndicatorId::Pud => "PUD",
            IndicatorId::Spd => "SPD",
            IndicatorId::Rse => "RSE",
            IndicatorId::Eni => "ENI",
            IndicatorId::Cpf => "CPF",
            IndicatorId::Unl => "UNL",
            IndicatorId::Cdi => "CDI",
            IndicatorId::Kua => "KUA",
        }
    }

    pub fn orientation(self) -> Orientation {
        use IndicatorId::*;
        match self {
            Pud | Spd | Eni | Cpf | Cdi => Orientation::Maximize,
            Dir | Rse | Unl | Kua => Orientation::Minimize,
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
    }
}

impl fmt::Display for IndicatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One indicator evaluation with its orientation and the parameters used.
#[derive(Debug, Clone, PartialEq)]
pub struct IndicatorResult<T> {
    pub indicator: IndicatorId,
    pub value: T,
    pub orientation: Orientation,
    pub params: BTreeMap<String, f64>,
}

impl<T: Scalar> IndicatorResult<T> {
    pub(crate) fn new(indicator: IndicatorId, value: T) -> Self {
        Self {
            indicator,
            value,
            orientation: indicator.orientation(),
            params: BTreeMap::new(),
        }
    }

    pub(crate) fn with(mut self, name: &str, value: f64) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }
}

/// Parameters for [`evaluate_all`]. `None` fields are derived from the input set.
#[derive(Debug, Clone)]
pub struct IndicatorParams<T> {
    /// DIR reference vectors; default is [`default_weights`].
    pub weights: Option<WeightSet<T>>,
    /// SPD decay rate.
    pub theta: f64,
    /// RSE exponent; default `m − 1`.
    pub s: Option<f64>,
    /// ENI grid divisions per axis.
    pub t_grid: usize,
    pub eni: EniOptions,
    /// CPF reference set; default is the linear simplex over [`default_weights`].
    pub reference: Option<Pfa<T>>,
    /// CDI merge threshold; default is the smallest pairwise Euclidean distance of the set.
    pub dbar: Option<f64>,
    /// KUA neighborhood size.
    pub k: usize,
    pub pud_distance: DistanceKind,
    pub unl_distance: DistanceKind,
}

impl<T: Scalar> Default for IndicatorParams<T> {
    fn default() -> Self {
        Self {
            weights: None,
            theta: 10.0,
            s: None,
            t_grid: 100,
            eni: EniOptions::default(),
            reference: None,
            dbar: None,
            k: 3,
            pud_distance: DistanceKind::LpQuasi(0.1),
            unl_distance: DistanceKind::Chebyshev,
        }
    }
}

/// Weight design for `m` objectives: the coverage-table lattice when `m` has a
/// row, otherwise the smallest simplex lattice with at least `n` vectors.
pub fn default_weights<T: Scalar>(m: usize, n: usize) -> Result<WeightSet<T>> {
    if let Some(row) = coverage_row(m) {
        return two_layer_lattice(m, row.h1, row.h2);
    }
    let h = (1..)
        .find(|&h| lattice_size(m, h) >= n.max(1))
        .expect("lattice grows");
    simplex_lattice(m, h)
}

/// Outcome of one indicator inside [`evaluate_all`].
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation<T> {
    pub indicator: IndicatorId,
    pub outcome: Result<IndicatorResult<T>>,
}

/// Evaluates one indicator with the given parameters.
pub fn evaluate<T: Scalar>(
    a: &Pfa<T>,
    id: IndicatorId,
    params: &IndicatorParams<T>,
) -> Result<IndicatorResult<T>> {
    let m = a.m();
    match id {
        IndicatorId::Dir => match &params.weights {
            Some(w) => dir(a, w),
            None => dir(a, &default_weights(m, a.len())?),
        },
        IndicatorId::Pud => pud(a, params.pud_distance),
        IndicatorId::Spd => spd(a, T::lit(params.theta)),
        IndicatorId::Rse => rse(a, T::lit(params.s.unwrap_or((m - 1) as f64))),
        IndicatorId::Eni => eni_with(a, params.t_grid, &params.eni),
        IndicatorId::Cpf => match &params.reference {
            Some(z) => cpf(a, z),
            None => {
                let w = default_weights::<T>(m, a.len())?;
                cpf(a, &structured_front(&FrontKind::LinearSimplex, &w)?)
            }
        },
        IndicatorId::Unl => unl(a, params.unl_distance),
        IndicatorId::Cdi => {
            let dbar = match params.dbar {
                Some(d) => T::lit(d),
                None => a
                    .min_pairwise_distance(DistanceKind::Euclidean)
                    .filter(|d| *d > T::zero())
                    .unwrap_or_else(T::one),
            };
            cdi(a, dbar)
        }
        IndicatorId::Kua => kua(a, params.k),
    }
}

/// Runs all nine indicators; a failing indicator does not stop the others.
pub fn evaluate_all<T: Scalar>(a: &Pfa<T>, params: &IndicatorParams<T>) -> Vec<Evaluation<T>> {
    IndicatorId::ALL
        .into_iter()
        .map(|indicator| Evaluation {
            indicator,
            outcome: evaluate(a, indicator, params),
        })
        .collect()
}

pub(crate) fn require_len<T: Scalar>(a: &Pfa<T>, min: usize, who: &str) -> Result<()> {
    if a.len() < min {
        return Err(Error::InvalidParameter(format!(
            "{who} needs at least {min} points, got {}",
            a.len()
        )));
    }
    Ok(())
}

pub(crate) fn positive(value: f64, what: &str) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{what} must be positive, got {value}"
        )))
    }
}

/// Full symmetric distance matrix, row-major.
pub(crate) fn distance_matrix<T: Scalar>(a: &Pfa<T>, kind: DistanceKind) -> Vec<T> {
    let n = a.len();
    let mut d = vec![T::zero(); n * n];
    for i in 0..n {
        for j in i + 1..n {
            let v = kind.eval(a.points()[i].coords(), a.points()[j].coords());
            d[i * n + j] = v;
            d[j * n + i] = v;
        }
    }
    d
}
