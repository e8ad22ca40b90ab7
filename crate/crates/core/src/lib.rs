//! Radial positive definite functions: Schoenberg kernels and matrices,
//! Schoenberg measures and their transition formulas, and the witnesses
//! that separate the classes Φ_n.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision, clippy::needless_range_loop)]

pub mod analysis;
pub mod error;
pub mod geometry;
pub mod grammar;
pub mod io;
pub mod kernels;
pub mod matrices;
pub mod measures;
pub mod quadrature;
pub mod specfun;
pub mod verify;

pub use analysis::CertificateReport;
pub use error::{Error, Result};
pub use geometry::{ConfigLabel, PointConfig};
pub use grammar::{parse_config, parse_kernel};
pub use kernels::{RadialKernel, TaylorFront};
pub use matrices::{Inertia, SymmetricMatrix};
pub use measures::RadialMeasure;
pub use quadrature::{Abscissa, EndpointHints, Integral, QuadratureMethod, QuadratureSpec};
