//! Volume bounds in hyperbolic 3-space.
//!
//! The crate is organised bottom-up:
//!
//! - [`numerics`]: adaptive quadrature, bracketed root finding and clamped
//!   inverse functions;
//! - [`hyptrig`]: displacement and angle functions, ball volumes and the
//!   Böröczky packing density;
//! - [`caps`]: volumes of caps of a ball and of intersections and unions of
//!   two caps;
//! - [`bounds`]: the near/far volume lower bounds and their interval and
//!   rectangle forms;
//! - [`verify`]: grid sweeps certifying the bounds, with reports.
//!
//! Everything is generic over [`Real`] (`f32` or `f64`). The aliases at the
//! crate root fix the scalar to `f64`, which is what the verification
//! drivers use.

pub mod bounds;
pub mod caps;
pub mod error;
pub mod hyptrig;
pub mod numerics;
mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Tolerances64 = numerics::Tolerances<f64>;
pub type Tolerances32 = numerics::Tolerances<f32>;
pub type QuadratureResult64 = numerics::QuadratureResult<f64>;
pub type LoxodromicParams64 = hyptrig::LoxodromicParams<f64>;
pub type BoroczkyProfile64 = hyptrig::BoroczkyProfile<f64>;
