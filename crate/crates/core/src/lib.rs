//! Radio labeling toolkit for the Cartesian product of a square mesh and a
//! star, `P(m,m) □ K_{1,n}`.
//!
//! * [`graph`] and [`product`] build the graphs and give exact BFS distances.
//! * [`labeling`], [`search`] and [`ordering`] validate labelings, compute
//!   exact radio numbers on small instances and produce the pairing-based
//!   constructions.
//! * [`formulas`] evaluates the closed-form bounds in exact arithmetic.
//! * [`claims`] checks each stated value against computed ground truth.

// `(m + 1) / 2` is kept as written in the formulas
#![allow(clippy::manual_div_ceil)]

pub mod claims;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod ordering;
pub mod product;
pub mod search;

pub use error::{Error, Result};
pub use formulas::Rational;
pub use graph::{DistanceMatrix, Graph};
pub use labeling::{Labeling, OrderingPlan, RadioSystem};
pub use product::{CellIndexing, ProductGraph, ProductParams, VertexCoord};
pub use search::{Budget, RnResult, RnStatus};
