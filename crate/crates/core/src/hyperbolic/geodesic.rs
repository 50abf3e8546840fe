//! Geodesics ("straight lines") of the half-plane model: vertical rays and
//! semicircles centered on the absolute, together with incidence, order and
//! parallelism predicates.

use serde::{Deserialize, Serialize};

use super::{GeometryError, HalfPlanePoint, DEFAULT_TOL};

/// A line of the half-plane model: any semicircle centered on the absolute,
/// or a ray perpendicular to the absolute.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Geodesic {
    VerticalRay { foot: f64 },
    Semicircle { center: f64, radius: f64 },
}

/// A point where a geodesic meets the absolute. Vertical rays have one
/// endpoint at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IdealPoint {
    Infinity,
    Foot(f64),
}

impl IdealPoint {
    pub fn approx_eq(&self, other: &IdealPoint, tol: f64) -> bool {
        match (self, other) {
            (IdealPoint::Infinity, IdealPoint::Infinity) => true,
            (IdealPoint::Foot(a), IdealPoint::Foot(b)) => {
                (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
            }
            _ => false,
        }
    }
}

impl Geodesic {
    /// Both ideal endpoints. Rays list infinity first; semicircles list the
    /// left endpoint (`center - radius`) first.
    pub fn ideal_endpoints(&self) -> [IdealPoint; 2] {
        match *self {
            Geodesic::VerticalRay { foot } => [IdealPoint::Infinity, IdealPoint::Foot(foot)],
            Geodesic::Semicircle { center, radius } => {
                [IdealPoint::Foot(center - radius), IdealPoint::Foot(center + radius)]
            }
        }
    }
}

/// The unique geodesic through two distinct points. The Euclidean
/// perpendicular bisector of the segment `pq` meets the absolute at the
/// semicircle center; points sharing a real part (within tolerance) produce
/// a vertical ray instead, since the center diverges.
pub fn geodesic_through(p: HalfPlanePoint, q: HalfPlanePoint) -> Result<Geodesic, GeometryError> {
    if super::approx_eq_points(p, q, DEFAULT_TOL) {
        return Err(GeometryError::DegeneratePair);
    }
    let re_scale = 1f64.max(p.re().abs()).max(q.re().abs());
    if (p.re() - q.re()).abs() < DEFAULT_TOL * re_scale {
        return Ok(Geodesic::VerticalRay { foot: (p.re() + q.re()) / 2.0 });
    }
    let p2 = p.re() * p.re() + p.im() * p.im();
    let q2 = q.re() * q.re() + q.im() * q.im();
    let center = (p2 - q2) / (2.0 * (p.re() - q.re()));
    let radius = f64::hypot(p.re() - center, p.im());
    Ok(Geodesic::Semicircle { center, radius })
}

/// Incidence test with absolute tolerance `tol`.
pub fn on_geodesic(p: HalfPlanePoint, g: &Geodesic, tol: f64) -> bool {
    match *g {
        Geodesic::VerticalRay { foot } => (p.re() - foot).abs() < tol,
        Geodesic::Semicircle { center, radius } => {
            (f64::hypot(p.re() - center, p.im()) - radius).abs() < tol
        }
    }
}

/// Ordering coordinate along a geodesic: the projection onto the absolute
/// for semicircles, the height for vertical rays.
fn order_coordinate(p: HalfPlanePoint, g: &Geodesic) -> f64 {
    match g {
        Geodesic::VerticalRay { .. } => p.im(),
        Geodesic::Semicircle { .. } => p.re(),
    }
}

/// Whether `a` lies strictly between `b` and `c` on their common geodesic.
/// Errors when the three points are not collinear.
pub fn between(
    a: HalfPlanePoint,
    b: HalfPlanePoint,
    c: HalfPlanePoint,
) -> Result<bool, GeometryError> {
    let g = [(b, c), (a, b), (a, c)]
        .iter()
        .find_map(|&(u, v)| geodesic_through(u, v).ok())
        .ok_or(GeometryError::DegeneratePair)?;
    for p in [a, b, c] {
        if !on_geodesic(p, &g, DEFAULT_TOL) {
            return Err(GeometryError::NotCollinear);
        }
    }
    let (ta, tb, tc) = (order_coordinate(a, &g), order_coordinate(b, &g), order_coordinate(c, &g));
    Ok((tb < ta && ta < tc) || (tc < ta && ta < tb))
}

/// The geodesic through `p` with the given ideal endpoint.
fn geodesic_with_endpoint(p: HalfPlanePoint, endpoint: IdealPoint) -> Geodesic {
    match endpoint {
        IdealPoint::Infinity => Geodesic::VerticalRay { foot: p.re() },
        IdealPoint::Foot(e) => {
            let scale = 1f64.max(p.re().abs()).max(e.abs());
            if (p.re() - e).abs() < DEFAULT_TOL * scale {
                return Geodesic::VerticalRay { foot: e };
            }
            // |p - center| = |e - center| solved for the center on the absolute.
            let p2 = p.re() * p.re() + p.im() * p.im();
            let center = (e * e - p2) / (2.0 * (e - p.re()));
            Geodesic::Semicircle { center, radius: (e - center).abs() }
        }
    }
}

/// The two limiting parallels to `g` through an external point `p`: the
/// geodesics through `p` sharing exactly one ideal endpoint with `g`. The
/// pair follows the order of [`Geodesic::ideal_endpoints`].
pub fn limiting_parallels(
    g: &Geodesic,
    p: HalfPlanePoint,
) -> Result<(Geodesic, Geodesic), GeometryError> {
    if on_geodesic(p, g, DEFAULT_TOL) {
        return Err(GeometryError::PointOnGeodesic);
    }
    let [e1, e2] = g.ideal_endpoints();
    Ok((geodesic_with_endpoint(p, e1), geodesic_with_endpoint(p, e2)))
}

/// Unit tangent of `g` at a point on it, oriented along increasing
/// parameter: upward for rays, counterclockwise for semicircles.
fn canonical_tangent(p: HalfPlanePoint, g: &Geodesic) -> (f64, f64) {
    match *g {
        Geodesic::VerticalRay { .. } => (0.0, 1.0),
        Geodesic::Semicircle { center, .. } => {
            let (tx, ty) = (-p.im(), p.re() - center);
            let n = f64::hypot(tx, ty);
            (tx / n, ty / n)
        }
    }
}

/// Unit tangent of `g` at `from`, pointing toward `to` along the geodesic.
pub(super) fn tangent_toward(from: HalfPlanePoint, to: HalfPlanePoint, g: &Geodesic) -> (f64, f64) {
    let (tx, ty) = canonical_tangent(from, g);
    let forward = match *g {
        Geodesic::VerticalRay { .. } => to.im() > from.im(),
        Geodesic::Semicircle { center, .. } => {
            let theta_from = f64::atan2(from.im(), from.re() - center);
            let theta_to = f64::atan2(to.im(), to.re() - center);
            theta_to > theta_from
        }
    };
    if forward {
        (tx, ty)
    } else {
        (-tx, -ty)
    }
}

/// Angle between two unit directions, in `[0, pi]`, computed through
/// `atan2` so it stays accurate near 0 and pi.
pub(super) fn direction_angle(u: (f64, f64), v: (f64, f64)) -> f64 {
    let dot = u.0 * v.0 + u.1 * v.1;
    let cross = u.0 * v.1 - u.1 * v.0;
    f64::atan2(cross.abs(), dot)
}

/// The angle in `(0, pi)` between two geodesics at a common point. The model
/// is conformal, so this is the Euclidean angle between the tangents (taken
/// in their canonical orientations). Coinciding geodesics are degenerate.
pub fn angle_at(
    vertex: HalfPlanePoint,
    g1: &Geodesic,
    g2: &Geodesic,
) -> Result<f64, GeometryError> {
    for g in [g1, g2] {
        if !on_geodesic(vertex, g, DEFAULT_TOL) {
            return Err(GeometryError::NotOnGeodesic { re: vertex.re(), im: vertex.im() });
        }
    }
    let angle = direction_angle(canonical_tangent(vertex, g1), canonical_tangent(vertex, g2));
    if !(DEFAULT_TOL..=std::f64::consts::PI - DEFAULT_TOL).contains(&angle) {
        return Err(GeometryError::DegenerateAngle);
    }
    Ok(angle)
}

/// Which side of `g` a point falls on: negative inside the semicircle disc
/// (or left of a ray), positive outside (right).
fn side_of(p: HalfPlanePoint, g: &Geodesic) -> f64 {
    match *g {
        Geodesic::VerticalRay { foot } => p.re() - foot,
        Geodesic::Semicircle { center, radius } => f64::hypot(p.re() - center, p.im()) - radius,
    }
}

/// Whether the hyperbolic segment `ab` crosses the line `g`. Two geodesics
/// meet in at most one point of the half-plane, so the segment crosses `g`
/// exactly when its endpoints fall on opposite sides. Endpoints on `g`
/// (within tolerance) are rejected.
pub fn segment_intersects_geodesic(
    a: HalfPlanePoint,
    b: HalfPlanePoint,
    g: &Geodesic,
) -> Result<bool, GeometryError> {
    if super::approx_eq_points(a, b, DEFAULT_TOL) {
        return Err(GeometryError::DegeneratePair);
    }
    let (sa, sb) = (side_of(a, g), side_of(b, g));
    if sa.abs() < DEFAULT_TOL || sb.abs() < DEFAULT_TOL {
        return Err(GeometryError::EndpointOnLine);
    }
    Ok(sa * sb < 0.0)
}
