//! Poincaré models of the hyperbolic (Lobachevski) plane.
//!
//! Two conformal models are implemented over `f64` complex coordinates:
//!
//! - the half-plane model: points with `im > 0`, geodesics are vertical rays
//!   or semicircles centered on the absolute (the real axis);
//! - the disc model: points with `|z| < 1`, reached from the half-plane via
//!   the Möbius map `w = (z - i)/(z + i)` and back via `z = i(1 + w)/(1 - w)`.
//!
//! Distances use the closed hyperbolic forms
//! `d(p, q) = arcosh(1 + |p - q|^2 / (2 im(p) im(q)))` in the half-plane and
//! `d(p, q) = 2 artanh |(p - q)/(1 - conj(p) q)|` in the disc; both models
//! have curvature -1 so the map between them is an isometry.

mod geodesic;
mod triangle;

pub use geodesic::{
    angle_at, between, geodesic_through, limiting_parallels, on_geodesic,
    segment_intersects_geodesic, Geodesic, IdealPoint,
};
pub use triangle::{pythagoras_residual, triangle_angle_sum, HTriangle};

use num_complex::Complex64;
use thiserror::Error;

/// Default absolute tolerance for geometric predicates.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("coordinates must be finite, got {re} + {im}i")]
    NonFinite { re: f64, im: f64 },
    #[error("half-plane point requires im > 0, got im = {0}")]
    OutsideHalfPlane(f64),
    #[error("disc point requires |z| < 1, got |z| = {0}")]
    OutsideDisc(f64),
    #[error("degenerate pair: the two points coincide")]
    DegeneratePair,
    #[error("point ({re}, {im}) does not lie on the geodesic")]
    NotOnGeodesic { re: f64, im: f64 },
    #[error("points do not lie on a common geodesic")]
    NotCollinear,
    #[error("point lies on the geodesic; no limiting parallels exist")]
    PointOnGeodesic,
    #[error("degenerate angle: the geodesics coincide at the vertex")]
    DegenerateAngle,
    #[error("degenerate triangle: vertices lie on one geodesic")]
    DegenerateTriangle,
    #[error("segment endpoint lies on the line")]
    EndpointOnLine,
    #[error("constraint violation: {0}")]
    ConstraintViolation(&'static str),
    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),
}

/// Scale constant and tolerance for the half-plane angle-form distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypConfig {
    /// Positive scale constant in `d = c |ln(tg a / tg b)|`.
    pub c: f64,
    /// Absolute tolerance for geometric predicates.
    pub tol: f64,
}

impl Default for HypConfig {
    fn default() -> Self {
        Self { c: 1.0, tol: DEFAULT_TOL }
    }
}

impl HypConfig {
    pub fn new(c: f64, tol: f64) -> Result<Self, GeometryError> {
        if !(c.is_finite() && c > 0.0) {
            return Err(GeometryError::InvalidConfig("scale constant c must be positive"));
        }
        if !(tol.is_finite() && tol > 0.0) {
            return Err(GeometryError::InvalidConfig("tolerance must be positive"));
        }
        Ok(Self { c, tol })
    }
}

/// Point of the half-plane model: `im > 0`, strictly above the absolute.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlanePoint {
    z: Complex64,
}

impl HalfPlanePoint {
    pub fn new(re: f64, im: f64) -> Result<Self, GeometryError> {
        if !re.is_finite() || !im.is_finite() {
            return Err(GeometryError::NonFinite { re, im });
        }
        if im <= 0.0 {
            return Err(GeometryError::OutsideHalfPlane(im));
        }
        Ok(Self { z: Complex64::new(re, im) })
    }

    pub fn re(&self) -> f64 {
        self.z.re
    }

    pub fn im(&self) -> f64 {
        self.z.im
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }
}

/// Point of the disc model: `|z| < 1`, strictly inside the absolute.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscPoint {
    z: Complex64,
}

impl DiscPoint {
    pub fn new(re: f64, im: f64) -> Result<Self, GeometryError> {
        if !re.is_finite() || !im.is_finite() {
            return Err(GeometryError::NonFinite { re, im });
        }
        let norm = (re * re + im * im).sqrt();
        if norm >= 1.0 {
            return Err(GeometryError::OutsideDisc(norm));
        }
        Ok(Self { z: Complex64::new(re, im) })
    }

    pub fn re(&self) -> f64 {
        self.z.re
    }

    pub fn im(&self) -> f64 {
        self.z.im
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }
}

/// Half-plane distance, the hyperbolic cosine form
/// `arcosh(1 + |p - q|^2 / (2 im(p) im(q)))` evaluated as
/// `2 arsinh(|p - q| / (2 sqrt(im(p) im(q))))`, which keeps full precision
/// for nearby points where the arcosh argument would round to 1.
pub fn dist_half_plane(p: HalfPlanePoint, q: HalfPlanePoint) -> f64 {
    let diff = p.z - q.z;
    2.0 * f64::asinh(diff.norm() / (2.0 * f64::sqrt(p.im() * q.im())))
}

/// Half-plane distance in the angle form `c |ln(tg a / tg b)|`, where the
/// angles are taken at an ideal endpoint of the geodesic through `p` and
/// `q` (between the absolute and the chords to the two points). For a
/// vertical-ray geodesic the limit form `c |ln(im(p)/im(q))|` applies.
/// Coinciding points return 0 by convention.
pub fn dist_half_plane_angle_form(p: HalfPlanePoint, q: HalfPlanePoint, cfg: &HypConfig) -> f64 {
    match geodesic_through(p, q) {
        Err(_) => 0.0,
        Ok(Geodesic::VerticalRay { .. }) => cfg.c * (p.im() / q.im()).ln().abs(),
        Ok(Geodesic::Semicircle { center, .. }) => {
            // tan(theta/2) = im / (re - (center - radius)) for theta the
            // central angle; the chord-angle tangents reduce to this.
            let tan_half = |pt: HalfPlanePoint| {
                let theta = f64::atan2(pt.im(), pt.re() - center);
                (theta / 2.0).tan()
            };
            cfg.c * (tan_half(p) / tan_half(q)).ln().abs()
        }
    }
}

/// Disc-model distance `2 artanh |(p - q)/(1 - conj(p) q)|`.
pub fn dist_disc(p: DiscPoint, q: DiscPoint) -> f64 {
    let num = p.z - q.z;
    let den = Complex64::new(1.0, 0.0) - p.z.conj() * q.z;
    2.0 * (num.norm() / den.norm()).atanh()
}

/// Isometry from the half-plane to the disc model: `w = (z - i)/(z + i)`.
pub fn to_disc(p: HalfPlanePoint) -> DiscPoint {
    let i = Complex64::i();
    let w = (p.z - i) / (p.z + i);
    // |w| < 1 holds exactly for im > 0; clamp is never expected to fire but
    // guards against rounding at extreme coordinates.
    debug_assert!(w.norm() < 1.0 + 1e-15);
    DiscPoint { z: w }
}

/// Inverse isometry from the disc to the half-plane: `z = i(1 + w)/(1 - w)`.
pub fn to_half_plane(p: DiscPoint) -> HalfPlanePoint {
    let one = Complex64::new(1.0, 0.0);
    let z = Complex64::i() * (one + p.z) / (one - p.z);
    debug_assert!(z.im > 0.0);
    HalfPlanePoint { z }
}

pub(crate) fn approx_eq_points(p: HalfPlanePoint, q: HalfPlanePoint, tol: f64) -> bool {
    let scale = 1f64.max(p.re().abs()).max(q.re().abs()).max(p.im()).max(q.im());
    (p.re() - q.re()).abs() <= tol * scale && (p.im() - q.im()).abs() <= tol * scale
}
