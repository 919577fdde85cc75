//! High-order entropy conservative and entropy stable finite difference
//! schemes for special relativistic hydrodynamics in one and two dimensions.
//!
//! Everything is generic over the scalar type ([`Real`]) and the spatial
//! dimension ([`D1`], [`D2`]); the aliases at the crate root fix the scalar
//! to `f64`.

pub mod bench;
pub mod dim;
pub mod ecflux;
pub mod eigen;
pub mod error;
pub mod means;
pub mod num;
pub mod scheme;
pub mod state;
pub mod timeint;
pub mod weno;

pub use bench::{AnyProblem, ConvergenceRow, Problem, ProblemParams, ProblemSpec};
pub use dim::{Array, Axis, Dimension, Matrix, D1, D2};
pub use eigen::{DissipationKind, ScaledEigenSystem};
pub use error::{Error, Result};
pub use num::Real;
pub use scheme::{BoundaryConditions, BoundaryKind, Field, FluxMode, Grid, SchemeConfig};
pub use state::{ConsState, EosParams, PrimState};
pub use timeint::{EntropyTrace, RunOutput, Simulation, TimeControls};

pub type Eos = EosParams<f64>;
pub type Prim1 = PrimState<f64, D1>;
pub type Prim2 = PrimState<f64, D2>;
pub type Cons1 = ConsState<f64, D1>;
pub type Cons2 = ConsState<f64, D2>;
pub type Grid64 = Grid<f64>;
pub type Field1 = Field<f64, D1>;
pub type Field2 = Field<f64, D2>;
pub type Problem1 = ProblemSpec<f64, D1>;
pub type Problem2 = ProblemSpec<f64, D2>;
pub type Config = SchemeConfig<f64>;
pub type Controls = TimeControls<f64>;
