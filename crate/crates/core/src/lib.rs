//! Geometric analysis toolkit: Poincaré models of the hyperbolic plane and
//! box-counting fractal dimension estimation of raster drawings.
//!
//! The crate is split into independent modules:
//!
//! - [`hyperbolic`] — points, geodesics and distances in the Poincaré
//!   half-plane and disc models, plus triangle machinery.
//! - [`raster`] — PGM (P2/P5) reading/writing and thresholding to binary
//!   ink rasters.
//! - [`boxcount`] — box-counting dimension estimation over binary rasters.
//! - [`generators`] — deterministic rasterizers for reference fractals with
//!   known dimensions.
//! - [`stats`] — summary statistics (mean, sample deviation, Pearson
//!   correlation) over per-scale dimension series.
//!
//! All types are immutable values after construction and all operations are
//! pure functions, so everything is safe to use from multiple threads.

pub mod boxcount;
pub mod generators;
pub mod hyperbolic;
pub mod raster;
pub mod stats;
