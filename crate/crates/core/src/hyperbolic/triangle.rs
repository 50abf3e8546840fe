//! Hyperbolic triangles: interior angle sums and the right-triangle
//! cosh identity.

use super::geodesic::{direction_angle, geodesic_through, on_geodesic, tangent_toward};
use super::{dist_half_plane, GeometryError, HalfPlanePoint, DEFAULT_TOL};

/// A triangle in the half-plane model. Construction rejects vertex triples
/// lying on a single geodesic, so angle computations cannot degenerate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HTriangle {
    a: HalfPlanePoint,
    b: HalfPlanePoint,
    c: HalfPlanePoint,
}

impl HTriangle {
    pub fn new(
        a: HalfPlanePoint,
        b: HalfPlanePoint,
        c: HalfPlanePoint,
    ) -> Result<Self, GeometryError> {
        let g = geodesic_through(a, b).map_err(|_| GeometryError::DegenerateTriangle)?;
        if super::approx_eq_points(a, c, DEFAULT_TOL)
            || super::approx_eq_points(b, c, DEFAULT_TOL)
            || on_geodesic(c, &g, DEFAULT_TOL)
        {
            return Err(GeometryError::DegenerateTriangle);
        }
        Ok(Self { a, b, c })
    }

    pub fn vertices(&self) -> [HalfPlanePoint; 3] {
        [self.a, self.b, self.c]
    }

    /// Interior angle at `vertex`, between the sides toward the other two
    /// vertices.
    fn interior_angle(
        &self,
        vertex: HalfPlanePoint,
        to_first: HalfPlanePoint,
        to_second: HalfPlanePoint,
    ) -> f64 {
        let g1 = geodesic_through(vertex, to_first).expect("vertices distinct by construction");
        let g2 = geodesic_through(vertex, to_second).expect("vertices distinct by construction");
        let t1 = tangent_toward(vertex, to_first, &g1);
        let t2 = tangent_toward(vertex, to_second, &g2);
        direction_angle(t1, t2)
    }
}

/// Sum of the three interior angles, always strictly below pi.
pub fn triangle_angle_sum(t: &HTriangle) -> f64 {
    t.interior_angle(t.a, t.b, t.c)
        + t.interior_angle(t.b, t.a, t.c)
        + t.interior_angle(t.c, t.a, t.b)
}

/// Residual of the right-triangle identity ch c = ch a * ch b for the
/// triangle with vertices `r*i`, `u + v*i` and `i`, right-angled at `i`.
/// The legs meet the constraint circle `u^2 + v^2 = 1`; all three sides
/// are measured with [`dist_half_plane`], not closed forms.
pub fn pythagoras_residual(r: f64, u: f64, v: f64) -> Result<f64, GeometryError> {
    if !(r.is_finite() && u.is_finite() && v.is_finite()) {
        return Err(GeometryError::ConstraintViolation("inputs must be finite"));
    }
    if r <= 1.0 {
        return Err(GeometryError::ConstraintViolation("r must exceed 1"));
    }
    if v <= 0.0 {
        return Err(GeometryError::ConstraintViolation("v must be positive"));
    }
    if (u * u + v * v - 1.0).abs() > DEFAULT_TOL {
        return Err(GeometryError::ConstraintViolation("u^2 + v^2 must equal 1"));
    }
    let apex = HalfPlanePoint::new(0.0, r)?;
    let foot = HalfPlanePoint::new(u, v)?;
    let corner = HalfPlanePoint::new(0.0, 1.0)?;
    let leg_a = dist_half_plane(apex, corner);
    let leg_b = dist_half_plane(foot, corner);
    let hyp = dist_half_plane(apex, foot);
    Ok((hyp.cosh() - leg_a.cosh() * leg_b.cosh()).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn hp(re: f64, im: f64) -> HalfPlanePoint {
        HalfPlanePoint::new(re, im).unwrap()
    }

    fn tri(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> HTriangle {
        HTriangle::new(hp(a.0, a.1), hp(b.0, b.1), hp(c.0, c.1)).unwrap()
    }

    #[test]
    fn collinear_vertices_rejected() {
        // All three on the unit semicircle.
        let e = HTriangle::new(hp(-0.6, 0.8), hp(0.0, 1.0), hp(0.6, 0.8)).unwrap_err();
        assert_eq!(e, GeometryError::DegenerateTriangle);
        // Repeated vertex.
        let e = HTriangle::new(hp(0.0, 1.0), hp(0.0, 1.0), hp(1.0, 1.0)).unwrap_err();
        assert_eq!(e, GeometryError::DegenerateTriangle);
    }

    #[test]
    fn angle_sum_below_pi() {
        let t = tri((0.0, 1.0), (2.0, 1.0), (1.0, 3.0));
        let sum = triangle_angle_sum(&t);
        assert!(sum > 0.0 && sum < PI, "sum = {sum}");
    }

    #[test]
    fn ideal_like_triangle_has_small_sum() {
        // Nearly-ideal: vertices close to the absolute, angles near 0.
        let t = tri((-1.0, 0.01), (1.0, 0.01), (0.0, 100.0));
        assert!(triangle_angle_sum(&t) < 0.1);
    }

    #[test]
    fn shrinking_triangle_approaches_pi() {
        let base = [(0.0, 0.0), (1.0, 0.0), (0.3, 0.8)];
        let anchor = (0.0, 1.0);
        let mut last = 0.0;
        for k in 0..3 {
            let s = 0.1 / f64::powi(4.0, k);
            let t = tri(
                (anchor.0 + s * base[0].0, anchor.1 + s * base[0].1),
                (anchor.0 + s * base[1].0, anchor.1 + s * base[1].1),
                (anchor.0 + s * base[2].0, anchor.1 + s * base[2].1),
            );
            let sum = triangle_angle_sum(&t);
            assert!(sum < PI && sum > last, "k={k}: sum={sum}, last={last}");
            last = sum;
        }
        assert!(PI - last < 1e-3);
    }

    #[test]
    fn cevian_splits_add_one_pi() {
        // D is the apex of the semicircle through B and C, hence between them.
        let a = hp(0.3, 2.5);
        let b = hp(-1.0, 1.0);
        let c = hp(1.0, 1.0);
        let d = hp(0.0, f64::sqrt(2.0));
        let abc = triangle_angle_sum(&HTriangle::new(a, b, c).unwrap());
        let abd = triangle_angle_sum(&HTriangle::new(a, b, d).unwrap());
        let acd = triangle_angle_sum(&HTriangle::new(a, c, d).unwrap());
        assert!((abd + acd - abc - PI).abs() < 1e-9);
    }

    #[test]
    fn pythagoras_reference_configuration() {
        let v = 1.0 / f64::sqrt(2.0);
        let residual = pythagoras_residual(2.0, v, v).unwrap();
        assert!(residual < 1e-12, "residual = {residual}");
        // Side coshes for this configuration.
        let apex = hp(0.0, 2.0);
        let foot = hp(v, v);
        let corner = hp(0.0, 1.0);
        assert!((dist_half_plane(apex, corner).cosh() - 1.25).abs() < 1e-12);
        assert!((dist_half_plane(foot, corner).cosh() - f64::sqrt(2.0)).abs() < 1e-12);
        assert!((dist_half_plane(apex, foot).cosh() - 5.0 * f64::sqrt(2.0) / 4.0).abs() < 1e-12);
    }

    #[test]
    fn pythagoras_near_degenerate_r() {
        let v = 1.0 / f64::sqrt(2.0);
        let residual = pythagoras_residual(1.0 + 1e-6, v, v).unwrap();
        assert!(residual < 1e-12);
    }

    #[test]
    fn pythagoras_constraint_checks() {
        assert!(matches!(
            pythagoras_residual(0.5, 0.6, 0.8),
            Err(GeometryError::ConstraintViolation(_))
        ));
        assert!(matches!(
            pythagoras_residual(2.0, 0.6, -0.8),
            Err(GeometryError::ConstraintViolation(_))
        ));
        assert!(matches!(
            pythagoras_residual(2.0, 0.9, 0.9),
            Err(GeometryError::ConstraintViolation(_))
        ));
    }
}
