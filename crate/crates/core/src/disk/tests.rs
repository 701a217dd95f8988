use super::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn dp(x: f64, y: f64) -> DiskPoint {
    DiskPoint::new(x, y).unwrap()
}

fn random_point(rng: &mut impl Rng, rmax: f64) -> DiskPoint {
    let r = rmax * rng.gen::<f64>().sqrt();
    let t = rng.gen_range(0.0..2.0 * PI);
    DiskPoint::from_vec(Vec2::from_polar(r, t)).unwrap()
}

fn random_triangle(rng: &mut impl Rng) -> DiskTriangle {
    loop {
        let (a, b, c) = (random_point(rng, 0.9), random_point(rng, 0.9), random_point(rng, 0.9));
        if let Ok(t) = DiskTriangle::new(a, b, c) {
            return t;
        }
    }
}

/// Disk automorphism z -> e^{iφ}(z − a)/(1 − ā z).
fn mobius(z: Vec2, a: Vec2, phi: f64) -> Vec2 {
    let num = z - a;
    // 1 − ā z
    let den = Vec2::new(1.0 - (a.x * z.x + a.y * z.y), -(a.x * z.y - a.y * z.x));
    let d2 = den.norm_sq();
    let q = Vec2::new(
        (num.x * den.x + num.y * den.y) / d2,
        (num.y * den.x - num.x * den.y) / d2,
    );
    q.rotate(phi)
}

fn golden_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..200 {
        let x1 = hi - g * (hi - lo);
        let x2 = lo + g * (hi - lo);
        if f(x1) < f(x2) {
            hi = x2;
        } else {
            lo = x1;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn point_validation() {
    assert!(DiskPoint::new(0.999, 0.0).is_ok());
    assert!(matches!(DiskPoint::new(1.0, 0.0), Err(Error::OutOfDisk(..))));
    assert!(DiskPoint::new(0.8, 0.8).is_err());
    assert!(DiskPoint::new(f64::NAN, 0.0).is_err());
}

#[test]
fn distance_examples() {
    assert_eq!(distance(DiskPoint::ORIGIN, DiskPoint::ORIGIN), 0.0);
    let d = distance(DiskPoint::ORIGIN, dp(0.5, 0.0));
    assert!((d - 2.0 * 0.5f64.atanh()).abs() < 1e-15);
    assert!((d - 3f64.ln()).abs() < 1e-15);
    assert!((d - 1.098612).abs() < 1e-6);
}

#[test]
fn distance_is_symmetric_and_satisfies_triangle_inequality() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..1000 {
        let (a, b, c) = (
            random_point(&mut rng, 0.99),
            random_point(&mut rng, 0.99),
            random_point(&mut rng, 0.99),
        );
        assert!((distance(a, b) - distance(b, a)).abs() <= 1e-12);
        assert!(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
        assert!(distance(a, b) >= 0.0);
    }
}

#[test]
fn mobius_maps_preserve_distance() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..500 {
        let (z, w) = (random_point(&mut rng, 0.9), random_point(&mut rng, 0.9));
        let a = random_point(&mut rng, 0.7).coords();
        let phi = rng.gen_range(0.0..2.0 * PI);
        let (fz, fw) = (
            DiskPoint::from_vec(mobius(z.coords(), a, phi)).unwrap(),
            DiskPoint::from_vec(mobius(w.coords(), a, phi)).unwrap(),
        );
        assert!((distance(z, w) - distance(fz, fw)).abs() <= 1e-9);
    }
}

#[test]
fn geodesic_through_origin_is_a_diameter() {
    let g = geodesic_through(DiskPoint::ORIGIN, dp(0.5, 0.0)).unwrap();
    assert_eq!(
        g,
        DiskGeodesic::Diameter {
            direction: Vec2::new(1.0, 0.0)
        }
    );
    let g2 = geodesic_through(dp(-0.3, 0.0), dp(0.4, 0.0)).unwrap();
    assert_eq!(g, g2);
    assert!(matches!(
        geodesic_through(dp(0.2, 0.1), dp(0.2, 0.1)),
        Err(Error::Degenerate(_))
    ));
}

#[test]
fn geodesic_arc_example() {
    let (z, w) = (dp(0.5, 0.0), dp(0.0, 0.5));
    let g = geodesic_through(z, w).unwrap();
    // oracle: c·z = (1 + |z|²)/2 for both points gives c = (1.25, 1.25)
    let DiskGeodesic::Arc { center, radius } = g else {
        panic!("expected an arc")
    };
    assert!((center.x - 1.25).abs() < 1e-12 && (center.y - 1.25).abs() < 1e-12);
    assert!(((center - z.coords()).norm() - (center - w.coords()).norm()).abs() < 1e-12);
    assert!((center.norm_sq() - radius * radius - 1.0).abs() < 1e-9);
    assert!(g.contains(z, 1e-9) && g.contains(w, 1e-9));
}

#[test]
fn random_geodesics_pass_through_their_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..1000 {
        let (z, w) = (random_point(&mut rng, 0.95), random_point(&mut rng, 0.95));
        let g = geodesic_through(z, w).unwrap();
        assert!(g.contains(z, 1e-9) && g.contains(w, 1e-9));
        if let DiskGeodesic::Arc { center, radius } = g {
            // nearly-diametral arcs have huge centres; compare relative to |c|²
            let c2 = center.norm_sq();
            assert!((c2 - radius * radius - 1.0).abs() <= 1e-9 * c2.max(1.0));
        }
        let (e1, e2) = g.ideal_endpoints();
        assert!((e1.norm() - 1.0).abs() < 1e-12 && (e2.norm() - 1.0).abs() < 1e-12);
        let rebuilt = DiskGeodesic::from_ideal_endpoints(e1, e2).unwrap();
        assert!(rebuilt.same_as(&g));
    }
}

#[test]
fn diameters_meet_at_origin() {
    let gx = DiskGeodesic::diameter(Vec2::new(1.0, 0.0)).unwrap();
    let gy = DiskGeodesic::diameter(Vec2::new(0.0, 1.0)).unwrap();
    let p = intersect(&gx, &gy).unwrap().unwrap();
    assert!(p.coords().norm() < 1e-15);
    assert_eq!(intersect(&gx, &gx), Err(Error::Identical("geodesics")));
}

#[test]
fn diameter_meets_symmetric_arc_on_axis() {
    let gx = DiskGeodesic::diameter(Vec2::new(1.0, 0.0)).unwrap();
    let (p, q) = (dp(0.5, 0.3), dp(0.5, -0.3));
    let arc = geodesic_through(p, q).unwrap();
    let x = intersect(&gx, &arc).unwrap().unwrap();
    // the midpoint of pq is the axis point minimising the distance to p
    let oracle = golden_min(|t| distance(p, dp(t, 0.0)), 0.0, 0.99);
    assert!((x.x() - oracle).abs() < 1e-7, "{} vs {}", x.x(), oracle);
    assert!(x.y().abs() < 1e-12);
    assert!(gx.contains(x, 1e-9) && arc.contains(x, 1e-9));
}

#[test]
fn random_intersections_lie_on_both() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut hits = 0;
    for _ in 0..2000 {
        let g1 = geodesic_through(random_point(&mut rng, 0.9), random_point(&mut rng, 0.9)).unwrap();
        let g2 = geodesic_through(random_point(&mut rng, 0.9), random_point(&mut rng, 0.9)).unwrap();
        if let Some(p) = intersect(&g1, &g2).unwrap() {
            hits += 1;
            assert!(g1.contains(p, 1e-8) && g2.contains(p, 1e-8));
            assert!(p.coords().norm() < 1.0);
        }
    }
    assert!(hits > 100);
}

#[test]
fn distance_to_geodesic_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..50 {
        let (z, w) = (random_point(&mut rng, 0.8), random_point(&mut rng, 0.8));
        let g = geodesic_through(z, w).unwrap();
        let p = random_point(&mut rng, 0.8);
        // minimise along the geodesic, parametrised by the ideal-endpoint chord angle
        let (e1, e2) = g.ideal_endpoints();
        let point_at = |t: f64| -> Vec2 {
            match g {
                DiskGeodesic::Diameter { direction } => direction * t,
                DiskGeodesic::Arc { center, radius } => {
                    let a1 = (e1 - center).angle();
                    let mut a2 = (e2 - center).angle();
                    if (a2 - a1).abs() > PI {
                        a2 += if a2 < a1 { 2.0 * PI } else { -2.0 * PI };
                    }
                    center + Vec2::from_polar(radius, a1 + (a2 - a1) * (t + 1.0) / 2.0)
                }
            }
        };
        let f = |t: f64| distance(p, DiskPoint::from_vec(point_at(t)).unwrap());
        // coarse scan, then golden refinement
        let mut best = (-0.999, f64::INFINITY);
        for i in 0..=2000 {
            let t = -0.999 + 1.998 * i as f64 / 2000.0;
            let v = f(t);
            if v < best.1 {
                best = (t, v);
            }
        }
        let t = golden_min(f, (best.0 - 0.001).max(-0.9999), (best.0 + 0.001).min(0.9999));
        assert!((g.distance_to(p) - f(t)).abs() < 1e-7);
    }
}

#[test]
fn right_isosceles_triangle_at_origin() {
    let t = DiskTriangle::new(DiskPoint::ORIGIN, dp(0.5, 0.0), dp(0.0, 0.5)).unwrap();
    let (a, b, c) = triangle_angles(&t).unwrap();
    assert!((a - PI / 2.0).abs() < 1e-12);
    assert!((b - c).abs() < 1e-12);
    let sum = a + b + c;
    assert!(sum < PI);
    let area = area_numeric(&t).unwrap();
    assert!((sum + area - PI).abs() < 1e-6, "sum {sum} area {area}");
}

#[test]
fn tiny_triangle_is_nearly_euclidean() {
    let pts = [(0.1, 0.2), (0.4, 0.25), (0.2, 0.6)].map(|(x, y)| (x * 1e-3, y * 1e-3));
    let t = DiskTriangle::new(dp(pts[0].0, pts[0].1), dp(pts[1].0, pts[1].1), dp(pts[2].0, pts[2].1)).unwrap();
    let (a, b, c) = triangle_angles(&t).unwrap();
    assert!((a + b + c - PI).abs() < 1e-5);
    let eu = |o: (f64, f64), p: (f64, f64), q: (f64, f64)| {
        let u = Vec2::new(p.0 - o.0, p.1 - o.1);
        let v = Vec2::new(q.0 - o.0, q.1 - o.1);
        u.cross(v).abs().atan2(u.dot(v))
    };
    assert!((a - eu(pts[0], pts[1], pts[2])).abs() < 1e-5);
}

#[test]
fn near_ideal_triangle_has_small_angles() {
    let v = [0.0, 2.0 * PI / 3.0, 4.0 * PI / 3.0].map(|t| DiskPoint::from_vec(Vec2::from_polar(0.999, t)).unwrap());
    let t = DiskTriangle::new(v[0], v[1], v[2]).unwrap();
    let (a, b, c) = triangle_angles(&t).unwrap();
    assert!(a + b + c < 0.1);
    let area = area_numeric(&t).unwrap();
    assert!((area - (PI - a - b - c)).abs() < 1e-5);
}

#[test]
fn degenerate_triangles() {
    let o = DiskPoint::ORIGIN;
    assert!(DiskTriangle::new(o, o, dp(0.5, 0.0)).is_err());
    assert!(DiskTriangle::new(o, dp(0.2, 0.0), dp(0.5, 0.0)).is_err());
    // all three on the geodesic through (0.5,0) and (0,0.5)
    let g = geodesic_through(dp(0.5, 0.0), dp(0.0, 0.5)).unwrap();
    let DiskGeodesic::Arc { center, radius } = g else {
        unreachable!()
    };
    let third = center + (Vec2::new(0.5, 0.0) - center).rotate(-0.1).normalized() * radius;
    assert!(DiskTriangle::new(dp(0.5, 0.0), dp(0.0, 0.5), DiskPoint::from_vec(third).unwrap()).is_err());
}

#[test]
fn sliver_area_is_negligible() {
    let t = DiskTriangle::new(dp(0.1, 0.0), dp(0.3, 0.0), dp(0.2, 1e-7)).unwrap();
    assert!(area_numeric(&t).unwrap() < 1e-6);
}

#[test]
fn defect_law_on_random_triangles() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..100 {
        let t = random_triangle(&mut rng);
        let (a, b, c) = triangle_angles(&t).unwrap();
        assert!(a + b + c < PI);
        for x in [a, b, c] {
            assert!(x > 0.0 && x < PI);
        }
        let area = area_numeric(&t).unwrap();
        assert!((area - (PI - a - b - c)).abs() <= 1e-5);
    }
}

#[test]
fn reflection_doubles_area() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..20 {
        let t = random_triangle(&mut rng);
        let side = geodesic_through(t.a, t.b).unwrap();
        let c2 = side.reflect(t.c);
        let mirrored = DiskTriangle::new(t.a, t.b, c2).unwrap();
        let a1 = area_numeric(&t).unwrap();
        let a2 = area_numeric(&mirrored).unwrap();
        assert!(((a1 + a2) - 2.0 * a1).abs() <= 1e-5);
        // reflection is an isometry
        assert!((distance(t.a, t.c) - distance(t.a, c2)).abs() < 1e-9);
    }
}

#[test]
fn circle_about_origin() {
    let c = hyperbolic_circle(DiskPoint::ORIGIN, 1.0).unwrap();
    assert!((c.euclidean_radius - 0.5f64.tanh()).abs() < 1e-15);
    assert!((c.euclidean_radius - 0.462117).abs() < 1e-6);
    let rim = dp(c.euclidean_radius, 0.0);
    assert!((distance(DiskPoint::ORIGIN, rim) - 1.0).abs() < 1e-12);
    assert!(c.circumference() > 2.0 * PI);
    assert!((c.circumference() - 2.0 * PI * 1.0f64.sinh()).abs() < 1e-12);

    let small = hyperbolic_circle(DiskPoint::ORIGIN, 1e-6).unwrap();
    assert!((small.euclidean_radius - 0.5e-6).abs() < 1e-15);
}

/// Length of the rendered circle under the metric 2|dz|/(1−|z|²),
/// by the periodic trapezoid rule.
fn metric_length(c: &HyperbolicCircle, n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        let t = 2.0 * PI * i as f64 / n as f64;
        let z = c.euclidean_center + Vec2::from_polar(c.euclidean_radius, t);
        s += 2.0 * c.euclidean_radius / (1.0 - z.norm_sq());
    }
    s * 2.0 * PI / n as f64
}

#[test]
fn rendered_circles_have_the_sinh_circumference() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for &r in &[0.1, 0.5, 1.0, 2.0] {
        let c = hyperbolic_circle(DiskPoint::ORIGIN, r).unwrap();
        assert!(c.circumference() > 2.0 * PI * r);
        assert!((metric_length(&c, 4096) - c.circumference()).abs() < 1e-9);
        for _ in 0..10 {
            let center = random_point(&mut rng, 0.6);
            let c = hyperbolic_circle(center, r).unwrap();
            assert!((metric_length(&c, 8192) - c.circumference()).abs() < 1e-9 * c.circumference().max(1.0));
            // every rendered point is at hyperbolic distance r from the centre
            for i in 0..16 {
                let t = 2.0 * PI * i as f64 / 16.0;
                let z = DiskPoint::from_vec(c.euclidean_center + Vec2::from_polar(c.euclidean_radius, t)).unwrap();
                assert!((distance(center, z) - r).abs() < 1e-9);
            }
        }
    }
}

#[test]
fn circle_errors() {
    assert!(hyperbolic_circle(DiskPoint::ORIGIN, 0.0).is_err());
    assert!(hyperbolic_circle(DiskPoint::ORIGIN, -1.0).is_err());
    assert!(hyperbolic_circle(dp(0.999, 0.0), 40.0).is_err());
}

#[test]
fn parallels_to_x_axis() {
    let g = DiskGeodesic::diameter(Vec2::new(1.0, 0.0)).unwrap();
    let p = dp(0.0, 0.5);
    let ps = parallels_through(&g, p, 3).unwrap();
    assert_eq!(ps.len(), 3);
    for h in &ps {
        assert!(h.contains(p, 1e-9));
        assert_eq!(intersect(&g, h).unwrap(), None);
    }
    for i in 0..3 {
        for j in i + 1..3 {
            assert!(!ps[i].same_as(&ps[j]));
            assert_eq!(
                intersect(&ps[i], &ps[j]).unwrap().map(|x| distance(x, p) < 1e-6),
                Some(true)
            );
        }
    }
}

#[test]
fn parallel_errors() {
    let g = DiskGeodesic::diameter(Vec2::new(1.0, 0.0)).unwrap();
    assert!(matches!(
        parallels_through(&g, dp(0.3, 0.0), 2),
        Err(Error::PointOnLine(_))
    ));
    assert!(parallels_through(&g, dp(0.0, 0.3), 0).is_err());
    assert!(matches!(
        parallels_through(&g, dp(0.0, 0.3), 10_000_000_000),
        Err(Error::Resolution { .. })
    ));
}

#[test]
fn parallels_for_random_lines_and_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut done = 0;
    while done < 300 {
        let g = geodesic_through(random_point(&mut rng, 0.95), random_point(&mut rng, 0.95)).unwrap();
        let p = random_point(&mut rng, 0.95);
        if g.distance_to(p) <= 1e-3 {
            continue;
        }
        let k = rng.gen_range(1..8);
        let ps = parallels_through(&g, p, k).unwrap();
        assert_eq!(ps.len(), k);
        for h in &ps {
            assert!(h.contains(p, 1e-9), "residual {}", h.residual(p.coords()));
            assert_eq!(intersect(&g, h).unwrap(), None);
        }
        done += 1;
    }
}
