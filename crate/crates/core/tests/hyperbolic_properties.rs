//! Randomized and property-based checks of the hyperbolic models: metric
//! axioms, the half-plane/disc isometry, angle-sum behavior, the
//! right-triangle cosh identity, parallelism structure, and the Pasch
//! axiom.

use std::f64::consts::PI;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use archgeom_core::hyperbolic::{
    dist_disc, dist_half_plane, dist_half_plane_angle_form, geodesic_through, limiting_parallels,
    on_geodesic, pythagoras_residual, segment_intersects_geodesic, to_disc, to_half_plane,
    triangle_angle_sum, DiscPoint, Geodesic, HTriangle, HalfPlanePoint, HypConfig, IdealPoint,
};

const SEED: u64 = 0x0005_eeda_b501;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

fn random_hp(rng: &mut ChaCha8Rng) -> HalfPlanePoint {
    HalfPlanePoint::new(rng.random_range(-3.0..3.0), rng.random_range(0.05..5.0)).unwrap()
}

fn random_dp(rng: &mut ChaCha8Rng) -> DiscPoint {
    // Radius capped below 1 so distances stay moderate.
    let r = 0.95 * rng.random_range(0.0f64..1.0).sqrt();
    let t = rng.random_range(0.0..2.0 * PI);
    DiscPoint::new(r * t.cos(), r * t.sin()).unwrap()
}

fn random_triangle(rng: &mut ChaCha8Rng) -> HTriangle {
    loop {
        let (a, b, c) = (random_hp(rng), random_hp(rng), random_hp(rng));
        if let Ok(t) = HTriangle::new(a, b, c) {
            return t;
        }
    }
}

#[test]
fn metric_axioms_half_plane() {
    let mut rng = rng();
    for _ in 0..1000 {
        let (p, q, r) = (random_hp(&mut rng), random_hp(&mut rng), random_hp(&mut rng));
        let (dpq, dqp) = (dist_half_plane(p, q), dist_half_plane(q, p));
        assert!(dpq >= 0.0);
        assert!((dpq - dqp).abs() < 1e-9);
        assert_eq!(dist_half_plane(p, p), 0.0);
        let (dpr, dqr) = (dist_half_plane(p, r), dist_half_plane(q, r));
        assert!(dpr <= dpq + dqr + 1e-9, "triangle inequality: {dpr} > {dpq} + {dqr}");
    }
}

#[test]
fn metric_axioms_disc() {
    let mut rng = rng();
    for _ in 0..1000 {
        let (p, q, r) = (random_dp(&mut rng), random_dp(&mut rng), random_dp(&mut rng));
        let (dpq, dqp) = (dist_disc(p, q), dist_disc(q, p));
        assert!(dpq >= 0.0);
        assert!((dpq - dqp).abs() < 1e-9);
        assert_eq!(dist_disc(p, p), 0.0);
        let (dpr, dqr) = (dist_disc(p, r), dist_disc(q, r));
        assert!(dpr <= dpq + dqr + 1e-9);
    }
}

#[test]
fn isometry_between_models() {
    let mut rng = rng();
    for _ in 0..1000 {
        let (p, q) = (random_hp(&mut rng), random_hp(&mut rng));
        let d_half = dist_half_plane(p, q);
        let d_disc = dist_disc(to_disc(p), to_disc(q));
        assert!((d_half - d_disc).abs() < 1e-9, "half {d_half} vs disc {d_disc}");
    }
}

#[test]
fn round_trips_between_models() {
    let mut rng = rng();
    for _ in 0..1000 {
        let p = random_hp(&mut rng);
        let w = to_disc(p);
        assert!(w.z().norm() < 1.0);
        let back = to_half_plane(w);
        assert!((back.re() - p.re()).abs() < 1e-9);
        assert!((back.im() - p.im()).abs() < 1e-9);

        let d = random_dp(&mut rng);
        let there = to_disc(to_half_plane(d));
        assert!((there.re() - d.re()).abs() < 1e-9);
        assert!((there.im() - d.im()).abs() < 1e-9);
    }
}

#[test]
fn angle_form_agrees_with_cosh_form() {
    let cfg = HypConfig::default();
    let mut rng = rng();
    for i in 0..1000 {
        let p = random_hp(&mut rng);
        // Every tenth pair is vertically aligned to hit the ray limit form.
        let q = if i % 10 == 0 {
            HalfPlanePoint::new(p.re(), rng.random_range(0.05..5.0)).unwrap()
        } else {
            random_hp(&mut rng)
        };
        let reference = dist_half_plane(p, q);
        let via_angles = dist_half_plane_angle_form(p, q, &cfg);
        assert!(
            (via_angles - reference).abs() <= 1e-9 * reference.max(1.0),
            "angle form {via_angles} vs cosh form {reference}"
        );
    }
}

#[test]
fn angle_sum_always_below_pi() {
    let mut rng = rng();
    for _ in 0..1000 {
        let t = random_triangle(&mut rng);
        let sum = triangle_angle_sum(&t);
        assert!(sum > 0.0 && sum < PI, "sum {sum} for {t:?}");
    }
}

#[test]
fn angle_sum_rises_as_triangles_shrink() {
    // Pulling two vertices toward the third along their geodesics nests
    // each triangle strictly inside the previous one, so the area falls
    // and the angle sum strictly rises toward pi.
    let mut rng = rng();
    let mut checked = 0;
    while checked < 200 {
        let t = random_triangle(&mut rng);
        let [a, b, c] = t.vertices();
        let sums: Option<Vec<f64>> = [1.0, 0.25, 0.0625]
            .iter()
            .map(|&s| {
                let (b_s, c_s) = if s == 1.0 {
                    (b, c)
                } else {
                    (point_between(a, b, s), point_between(a, c, s))
                };
                HTriangle::new(a, b_s, c_s).ok().map(|t| triangle_angle_sum(&t))
            })
            .collect();
        // Contraction can make near-degenerate triples fail validation; skip.
        let Some(sums) = sums else { continue };
        assert!(sums[0] < sums[1] && sums[1] < sums[2], "sums {sums:?}");
        assert!(sums[2] < PI);
        checked += 1;
    }
}

/// A point strictly between `b` and `c` on their geodesic.
fn point_between(b: HalfPlanePoint, c: HalfPlanePoint, t: f64) -> HalfPlanePoint {
    match geodesic_through(b, c).unwrap() {
        Geodesic::VerticalRay { foot } => {
            let im = b.im().powf(1.0 - t) * c.im().powf(t);
            HalfPlanePoint::new(foot, im).unwrap()
        }
        Geodesic::Semicircle { center, radius } => {
            let theta_b = f64::atan2(b.im(), b.re() - center);
            let theta_c = f64::atan2(c.im(), c.re() - center);
            let theta = theta_b + t * (theta_c - theta_b);
            HalfPlanePoint::new(center + radius * theta.cos(), radius * theta.sin()).unwrap()
        }
    }
}

#[test]
fn cevian_split_adds_exactly_pi() {
    let mut rng = rng();
    let mut checked = 0;
    while checked < 1000 {
        let t = random_triangle(&mut rng);
        let [a, b, c] = t.vertices();
        let d = point_between(b, c, rng.random_range(0.1..0.9));
        let (Ok(abd), Ok(acd)) = (HTriangle::new(a, b, d), HTriangle::new(a, c, d)) else {
            continue;
        };
        let whole = triangle_angle_sum(&t);
        let split = triangle_angle_sum(&abd) + triangle_angle_sum(&acd);
        assert!((split - whole - PI).abs() < 1e-9, "split {split} vs whole {whole}");
        checked += 1;
    }
}

#[test]
fn pythagoras_residual_sweep() {
    let mut rng = rng();
    for _ in 0..1000 {
        let r = rng.random_range(1.000001f64..20.0);
        let phi = rng.random_range(0.01..PI / 2.0 - 0.01);
        let (u, v) = (phi.cos(), phi.sin());
        let residual = pythagoras_residual(r, u, v).unwrap();
        // Relative to ch c = (1 + r^2) / (2 r v).
        let ch_c = (1.0 + r * r) / (2.0 * r * v);
        assert!(residual < 1e-9 * ch_c, "residual {residual} at r={r}, v={v}");
    }
}

#[test]
fn euclidean_limit_defect_shrinks_quadratically() {
    // Isoceles right triangle with legs exactly s: apex (0, e^s), corner
    // (0, 1), foot (tanh s, 1/cosh s).
    let defect = |s: f64| {
        let apex = HalfPlanePoint::new(0.0, s.exp()).unwrap();
        let corner = HalfPlanePoint::new(0.0, 1.0).unwrap();
        let foot = HalfPlanePoint::new(s.tanh(), 1.0 / s.cosh()).unwrap();
        let a = dist_half_plane(apex, corner);
        let b = dist_half_plane(foot, corner);
        let c = dist_half_plane(apex, foot);
        (c * c - a * a - b * b).abs() / (c * c)
    };
    let defects: Vec<f64> = [0.1, 0.05, 0.025].iter().map(|&s| defect(s)).collect();
    for pair in defects.windows(2) {
        let ratio = pair[0] / pair[1];
        assert!((3.5..=4.5).contains(&ratio), "defect ratio {ratio}, defects {defects:?}");
    }
}

#[test]
fn limiting_parallels_are_not_transitive() {
    let g = Geodesic::VerticalRay { foot: 0.0 };
    let p = HalfPlanePoint::new(1.0, 1.0).unwrap();
    let (first, second) = limiting_parallels(&g, p).unwrap();
    let shares = |a: &Geodesic, b: &Geodesic| {
        a.ideal_endpoints().iter().any(|e| b.ideal_endpoints().iter().any(|f| e.approx_eq(f, 1e-9)))
    };
    // Each limiting parallel meets g at one ideal point, but the two
    // parallels share no ideal point with each other.
    assert!(shares(&first, &g) && shares(&second, &g));
    assert!(!shares(&first, &second));
    assert_eq!(first, Geodesic::VerticalRay { foot: 1.0 });
    match second {
        Geodesic::Semicircle { center, radius } => {
            assert!((center - 1.0).abs() < 1e-12 && (radius - 1.0).abs() < 1e-12);
        }
        other => panic!("expected semicircle, got {other:?}"),
    }
}

#[test]
fn parallels_pass_through_the_point_and_touch_g_at_infinity_only() {
    let mut rng = rng();
    for _ in 0..500 {
        let (p, q) = (random_hp(&mut rng), random_hp(&mut rng));
        let Ok(g) = geodesic_through(p, q) else { continue };
        let x = random_hp(&mut rng);
        if on_geodesic(x, &g, 1e-9) {
            continue;
        }
        let (u, v) = limiting_parallels(&g, x).unwrap();
        for parallel in [&u, &v] {
            // Near-vertical parallels have huge radii; scale the tolerance.
            let tol = match *parallel {
                Geodesic::Semicircle { radius, .. } => 1e-9 * radius.max(1.0),
                Geodesic::VerticalRay { .. } => 1e-9,
            };
            assert!(on_geodesic(x, parallel, tol));
        }
        let [e1, e2] = g.ideal_endpoints();
        assert!(u.ideal_endpoints().iter().any(|e| e.approx_eq(&e1, 1e-9)));
        assert!(v.ideal_endpoints().iter().any(|e| e.approx_eq(&e2, 1e-9)));
    }
}

#[test]
fn pasch_axiom_on_random_triangles() {
    let mut rng = rng();
    let mut crossing_instances = 0;
    while crossing_instances < 1000 {
        let t = random_triangle(&mut rng);
        let [a, b, c] = t.vertices();
        let (u, v) = (random_hp(&mut rng), random_hp(&mut rng));
        let Ok(g) = geodesic_through(u, v) else { continue };
        let sides = [(a, b), (b, c), (c, a)];
        let mut crossed = 0;
        let mut skip = false;
        for (p, q) in sides {
            match segment_intersects_geodesic(p, q, &g) {
                Ok(true) => crossed += 1,
                Ok(false) => {}
                // A vertex (or degenerate side) on g: not an interior crossing.
                Err(_) => skip = true,
            }
        }
        if skip || crossed == 0 {
            continue;
        }
        assert_eq!(crossed, 2, "geodesic {g:?} crossed {crossed} sides of {t:?}");
        crossing_instances += 1;
    }
}

proptest! {
    #[test]
    fn prop_distance_symmetric_and_positive(
        re1 in -3.0f64..3.0, im1 in 0.05f64..5.0,
        re2 in -3.0f64..3.0, im2 in 0.05f64..5.0,
    ) {
        let p = HalfPlanePoint::new(re1, im1).unwrap();
        let q = HalfPlanePoint::new(re2, im2).unwrap();
        let d = dist_half_plane(p, q);
        prop_assert!(d >= 0.0);
        prop_assert!((d - dist_half_plane(q, p)).abs() < 1e-12);
    }

    #[test]
    fn prop_round_trip_half_plane(re in -3.0f64..3.0, im in 0.05f64..5.0) {
        let p = HalfPlanePoint::new(re, im).unwrap();
        let back = to_half_plane(to_disc(p));
        prop_assert!((back.re() - re).abs() < 1e-9);
        prop_assert!((back.im() - im).abs() < 1e-9);
    }

    #[test]
    fn prop_geodesic_contains_its_defining_points(
        re1 in -3.0f64..3.0, im1 in 0.05f64..5.0,
        re2 in -3.0f64..3.0, im2 in 0.05f64..5.0,
    ) {
        let p = HalfPlanePoint::new(re1, im1).unwrap();
        let q = HalfPlanePoint::new(re2, im2).unwrap();
        prop_assume!((re1 - re2).abs() + (im1 - im2).abs() > 1e-6);
        let g = geodesic_through(p, q).unwrap();
        prop_assert!(on_geodesic(p, &g, 1e-6));
        prop_assert!(on_geodesic(q, &g, 1e-6));
        if let Geodesic::Semicircle { radius, .. } = g {
            prop_assert!(radius > 0.0);
        }
    }
}

#[test]
fn ideal_endpoint_equality_rules() {
    let inf = IdealPoint::Infinity;
    let foot = IdealPoint::Foot(2.0);
    assert!(inf.approx_eq(&IdealPoint::Infinity, 1e-9));
    assert!(!inf.approx_eq(&foot, 1e-9));
    assert!(foot.approx_eq(&IdealPoint::Foot(2.0 + 1e-12), 1e-9));
    assert!(!foot.approx_eq(&IdealPoint::Foot(2.1), 1e-9));
}
