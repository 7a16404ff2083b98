//! Certified computations for hyperbolic hypersurfaces that arise as secant
//! varieties of real curves. All verdicts are computed in exact rational
//! arithmetic; sampling-based certificates say so in their status.

pub mod curves;
pub mod detrep;
pub mod error;
pub mod exactalg;
pub mod fixtures;
pub mod hyperbolic;
pub mod io;
pub mod shadows;

pub use error::{Error, Result};
