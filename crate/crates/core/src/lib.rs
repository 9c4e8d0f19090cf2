//! Distribution indicators for Pareto front approximations.
//!
//! The crate provides the nine indicators DIR, PUD, SPD, RSE, ENI, CPF, UNL,
//! CDI and KUA, generators for coverage-loss, uniformity-loss and pathological
//! scenarios, and a harness that ranks and grades scenario variants per
//! indicator.
//!
//! Geometry and indicators are generic over [`Scalar`] (`f32` or `f64`); the
//! harness and file formats work in `f64`.

pub mod error;
pub mod fronts;
pub mod geometry;
pub mod harness;
pub mod indicators;
pub mod io;
pub mod numerics;
pub mod results;
pub mod rng;
pub mod scalar;
pub mod scenarios;
pub mod svg;
pub mod tables;
pub mod weights;

pub use error::{Error, Result};
pub use fronts::FrontKind;
pub use geometry::{DistanceKind, Pfa, Point};
pub use indicators::{IndicatorId, IndicatorParams, IndicatorResult, Orientation};
pub use scalar::Scalar;
pub use scenarios::{PathologyCase, Scenario, ScenarioInstance};
pub use weights::WeightSet;

pub type Point64 = Point<f64>;
pub type Pfa64 = Pfa<f64>;
pub type WeightSet64 = WeightSet<f64>;
pub type IndicatorResult64 = IndicatorResult<f64>;
pub type IndicatorParams64 = IndicatorParams<f64>;

pub type Point32 = Point<f32>;
pub type Pfa32 = Pfa<f32>;
pub type WeightSet32 = WeightSet<f32>;
pub type IndicatorResult32 = IndicatorResult<f32>;

/// Crate version recorded in output metadata.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
