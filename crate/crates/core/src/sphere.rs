//! Unit-sphere geometry: great circles are the straight lines, any two of them
//! meet in an antipodal pair, and triangle angle sums exceed π by the area.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::vector::{angle_between, Vec3};

/// Cross-product norm below which two points (or normals) count as parallel.
pub const PARALLEL_TOL: f64 = 1e-9;
/// Triple-product magnitude below which three vertices count as coplanar
/// with the origin, i.e. on one great circle.
pub const COPLANAR_TOL: f64 = 1e-14;
const UNIT_TOL: f64 = 1e-12;

/// A point on the unit sphere.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 3]", try_from = "[f64; 3]")]
pub struct SpherePoint(Vec3);

impl SpherePoint {
    /// Projects a non-zero finite vector onto the sphere.
    pub fn new(v: Vec3) -> Result<Self> {
        let n = v.norm();
        if !n.is_finite() || n < 1e-300 {
            return Err(domain(format!(
                "cannot place ({}, {}, {}) on the sphere",
                v.x, v.y, v.z
            )));
        }
        Ok(SpherePoint(v * (1.0 / n)))
    }

    pub fn from_xyz(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::new(Vec3::new(x, y, z))
    }

    /// Latitude/longitude in degrees; (90, 0) is the north pole and (0, 0)
    /// lies on the x axis.
    pub fn from_lat_lon_deg(lat: f64, lon: f64) -> Result<Self> {
        if !(-90.0..=90.0).contains(&lat) || !lon.is_finite() {
            return Err(domain(format!(
                "latitude must lie in [-90, 90] and longitude be finite, got ({lat}, {lon})"
            )));
        }
        let (phi, lam) = (lat.to_radians(), lon.to_radians());
        Self::new(Vec3::new(phi.cos() * lam.cos(), phi.cos() * lam.sin(), phi.sin()))
    }

    pub fn vector(self) -> Vec3 {
        self.0
    }

    pub fn lat_lon_deg(self) -> (f64, f64) {
        let v = self.0;
        (v.z.clamp(-1.0, 1.0).asin().to_degrees(), v.y.atan2(v.x).to_degrees())
    }

    /// Great-circle distance (arc length on the unit sphere).
    pub fn distance(self, o: SpherePoint) -> f64 {
        angle_between(self.0, o.0)
    }

    pub fn antipode(self) -> SpherePoint {
        SpherePoint(-self.0)
    }
}

impl From<SpherePoint> for [f64; 3] {
    fn from(p: SpherePoint) -> Self {
        p.0.to_array()
    }
}

impl TryFrom<[f64; 3]> for SpherePoint {
    type Error = Error;
    fn try_from(a: [f64; 3]) -> Result<Self> {
        let p = SpherePoint::from_xyz(a[0], a[1], a[2])?;
        if (Vec3::new(a[0], a[1], a[2]).norm() - 1.0).abs() > UNIT_TOL {
            return Err(domain("sphere point must have unit norm"));
        }
        Ok(p)
    }
}

/// Great circle given by its plane normal, canonicalised so the first
/// non-negligible component is positive (`n` and `-n` are the same circle).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GreatCircle {
    normal: Vec3,
}

fn canonical_sign(v: Vec3) -> Vec3 {
    for c in v.to_array() {
        if c.abs() > UNIT_TOL {
            return if c > 0.0 { v } else { -v };
        }
    }
    v
}

impl GreatCircle {
    pub fn from_normal(n: Vec3) -> Result<Self> {
        let len = n.norm();
        if !len.is_finite() || len < PARALLEL_TOL {
            return Err(Error::Degenerate("great-circle normal must be non-zero".into()));
        }
        Ok(GreatCircle {
            normal: canonical_sign(n * (1.0 / len)),
        })
    }

    pub fn normal(self) -> Vec3 {
        self.normal
    }

    pub fn contains(self, p: SpherePoint, tol: f64) -> bool {
        self.normal.dot(p.0).abs() <= tol
    }
}

/// The unique great circle through two points that are neither equal nor
/// antipodal.
pub fn great_circle_through(p: SpherePoint, q: SpherePoint) -> Result<GreatCircle> {
    let n = p.0.cross(q.0);
    if n.norm() < PARALLEL_TOL {
        return Err(Error::Degenerate(
            "points are equal or antipodal; the great circle is not unique".into(),
        ));
    }
    GreatCircle::from_normal(n)
}

/// Intersection of two distinct great circles: always an antipodal pair, so
/// spherical geometry has no parallel lines.
pub fn intersect_great_circles(c1: GreatCircle, c2: GreatCircle) -> Result<(SpherePoint, SpherePoint)> {
    let d = c1.normal.cross(c2.normal);
    let len = d.norm();
    if len < PARALLEL_TOL {
        return Err(Error::Identical("great circles"));
    }
    let p = SpherePoint(canonical_sign(d * (1.0 / len)));
    Ok((p, p.antipode()))
}

/// Triangle whose sides are the minor great-circle arcs between its vertices.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SphericalTriangle {
    pub a: SpherePoint,
    pub b: SpherePoint,
    pub c: SpherePoint,
}

impl SphericalTriangle {
    pub fn new(a: SpherePoint, b: SpherePoint, c: SpherePoint) -> Result<Self> {
        for (name, p, q) in [("a, b", a, b), ("b, c", b, c), ("c, a", c, a)] {
            if p.0.cross(q.0).norm() < PARALLEL_TOL {
                return Err(Error::Degenerate(format!("vertices {name} are equal or antipodal")));
            }
        }
        let det = a.0.dot(b.0.cross(c.0));
        if det.abs() < COPLANAR_TOL {
            return Err(Error::Degenerate("vertices lie on a single great circle".into()));
        }
        Ok(SphericalTriangle { a, b, c })
    }

    pub fn vertices(&self) -> [SpherePoint; 3] {
        [self.a, self.b, self.c]
    }

    /// Side lengths opposite a, b, c.
    pub fn sides(&self) -> (f64, f64, f64) {
        (
            self.b.distance(self.c),
            self.c.distance(self.a),
            self.a.distance(self.b),
        )
    }
}

/// Dihedral angle at `v` between the great-circle planes toward `p` and `q`.
fn vertex_angle(v: Vec3, p: Vec3, q: Vec3) -> f64 {
    angle_between(v.cross(p), v.cross(q))
}

/// Interior angles at a, b, c.
pub fn triangle_angles(t: &SphericalTriangle) -> (f64, f64, f64) {
    let (a, b, c) = (t.a.0, t.b.0, t.c.0);
    (vertex_angle(a, b, c), vertex_angle(b, c, a), vertex_angle(c, a, b))
}

/// Area of a unit-sphere triangle from its angles: the spherical excess.
pub fn triangle_area_excess(angles: (f64, f64, f64)) -> Result<f64> {
    let sum = angles.0 + angles.1 + angles.2;
    if !(sum > PI && sum < 3.0 * PI) {
        return Err(domain(format!("angle sum {sum} must lie strictly between π and 3π")));
    }
    Ok(sum - PI)
}

/// Area from the three side lengths by L'Huilier's theorem.
pub fn triangle_area_lhuilier(t: &SphericalTriangle) -> f64 {
    let (a, b, c) = t.sides();
    let s = 0.5 * (a + b + c);
    let prod = (0.5 * s).tan()
        * (0.5 * (s - a)).tan().max(0.0)
        * (0.5 * (s - b)).tan().max(0.0)
        * (0.5 * (s - c)).tan().max(0.0);
    4.0 * prod.sqrt().atan()
}

/// `n` evenly spaced points on the minor arc from `p` to `q` (slerp).
pub fn sample_geodesic(p: SpherePoint, q: SpherePoint, n: usize) -> Result<Vec<SpherePoint>> {
    if n < 2 {
        return Err(domain(format!("need at least 2 samples, got {n}")));
    }
    great_circle_through(p, q)?;
    let omega = p.distance(q);
    let s = omega.sin();
    let mut out = Vec::with_capacity(n);
    out.push(p);
    for i in 1..n - 1 {
        let t = i as f64 / (n - 1) as f64;
        let v = p.0 * (((1.0 - t) * omega).sin() / s) + q.0 * ((t * omega).sin() / s);
        out.push(SpherePoint::new(v)?);
    }
    out.push(q);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pt(x: f64, y: f64, z: f64) -> SpherePoint {
        SpherePoint::from_xyz(x, y, z).unwrap()
    }

    fn random_point(rng: &mut impl Rng) -> SpherePoint {
        let z: f64 = rng.gen_range(-1.0..1.0);
        let phi: f64 = rng.gen_range(0.0..2.0 * PI);
        let r = (1.0 - z * z).sqrt();
        pt(r * phi.cos(), r * phi.sin(), z)
    }

    fn random_triangle(rng: &mut impl Rng) -> SphericalTriangle {
        loop {
            let (a, b, c) = (random_point(rng), random_point(rng), random_point(rng));
            if let Ok(t) = SphericalTriangle::new(a, b, c) {
                // keep clear of near-degenerate configurations
                if a.0.dot(b.0.cross(c.0)).abs() > 1e-3 {
                    return t;
                }
            }
        }
    }

    /// Rotation matrix from an axis-angle pair (Rodrigues).
    fn rotate(v: Vec3, axis: Vec3, theta: f64) -> Vec3 {
        let k = axis.normalized();
        v * theta.cos() + k.cross(v) * theta.sin() + k * (k.dot(v) * (1.0 - theta.cos()))
    }

    fn close(a: Vec3, b: Vec3) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn great_circle_examples() {
        let eq = great_circle_through(pt(1.0, 0.0, 0.0), pt(0.0, 1.0, 0.0)).unwrap();
        assert!(close(eq.normal(), Vec3::new(0.0, 0.0, 1.0)));
        let mer = great_circle_through(pt(0.0, 0.0, 1.0), pt(1.0, 0.0, 0.0)).unwrap();
        assert!(close(mer.normal(), Vec3::new(0.0, 1.0, 0.0)));
        assert!(matches!(
            great_circle_through(pt(0.0, 0.0, 1.0), pt(0.0, 0.0, 1.0)),
            Err(Error::Degenerate(_))
        ));
        assert!(great_circle_through(pt(0.0, 0.0, 1.0), pt(0.0, 0.0, -1.0)).is_err());
    }

    #[test]
    fn canonical_normal_is_sign_independent() {
        let a = GreatCircle::from_normal(Vec3::new(-1.0, 2.0, 0.5)).unwrap();
        let b = GreatCircle::from_normal(Vec3::new(1.0, -2.0, -0.5)).unwrap();
        assert_eq!(a, b);
        assert!(a.normal().x > 0.0);
    }

    #[test]
    fn equator_meets_meridian_on_x_axis() {
        let eq = GreatCircle::from_normal(Vec3::new(0.0, 0.0, 1.0)).unwrap();
        let mer = GreatCircle::from_normal(Vec3::new(0.0, 1.0, 0.0)).unwrap();
        let (p, q) = intersect_great_circles(eq, mer).unwrap();
        assert!(close(p.vector(), Vec3::new(1.0, 0.0, 0.0)));
        assert!(close(q.vector(), Vec3::new(-1.0, 0.0, 0.0)));
        assert_eq!(intersect_great_circles(eq, eq), Err(Error::Identical("great circles")));
    }

    #[test]
    fn random_great_circles_always_meet() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut seen = 0;
        while seen < 1000 {
            let c1 = GreatCircle::from_normal(random_point(&mut rng).vector()).unwrap();
            let c2 = GreatCircle::from_normal(random_point(&mut rng).vector()).unwrap();
            if c1.normal().cross(c2.normal()).norm() < PARALLEL_TOL {
                continue;
            }
            let (p, q) = intersect_great_circles(c1, c2).unwrap();
            for x in [p, q] {
                assert!(c1.contains(x, 1e-9) && c2.contains(x, 1e-9));
            }
            assert!(close(p.vector(), -q.vector()));
            seen += 1;
        }
    }

    #[test]
    fn octant_triangle_has_three_right_angles() {
        let t = SphericalTriangle::new(pt(0.0, 0.0, 1.0), pt(1.0, 0.0, 0.0), pt(0.0, 1.0, 0.0)).unwrap();
        let (a, b, c) = triangle_angles(&t);
        for x in [a, b, c] {
            assert!((x - PI / 2.0).abs() < 1e-15);
        }
        let area = triangle_area_excess((a, b, c)).unwrap();
        assert!((area - PI / 2.0).abs() < 1e-12);
        assert!((area - 4.0 * PI / 8.0).abs() < 1e-12);
        assert!((triangle_area_lhuilier(&t) - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn lat_lon_octant_triangle() {
        let t = SphericalTriangle::new(
            SpherePoint::from_lat_lon_deg(90.0, 0.0).unwrap(),
            SpherePoint::from_lat_lon_deg(0.0, 0.0).unwrap(),
            SpherePoint::from_lat_lon_deg(0.0, 90.0).unwrap(),
        )
        .unwrap();
        let (a, b, c) = triangle_angles(&t);
        for x in [a, b, c] {
            assert!((x.to_degrees() - 90.0).abs() < 1e-7);
        }
    }

    #[test]
    fn equilateral_quarter_sides_is_octant() {
        // same triangle rotated: side lengths π/2 each
        let axis = Vec3::new(1.0, 2.0, 3.0);
        let vs = [
            Vec3::new(0.0, 0.0, 1.0),
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
        ]
        .map(|v| SpherePoint::new(rotate(v, axis, 0.7)).unwrap());
        let t = SphericalTriangle::new(vs[0], vs[1], vs[2]).unwrap();
        let (a, b, c) = t.sides();
        for s in [a, b, c] {
            assert!((s - PI / 2.0).abs() < 1e-12);
        }
        assert!((triangle_area_lhuilier(&t) - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_triangles_rejected() {
        let n = pt(0.0, 0.0, 1.0);
        let x = pt(1.0, 0.0, 0.0);
        assert!(matches!(SphericalTriangle::new(n, n, x), Err(Error::Degenerate(_))));
        assert!(SphericalTriangle::new(n, n.antipode(), x).is_err());
        // three points on the equator
        assert!(SphericalTriangle::new(x, pt(0.0, 1.0, 0.0), pt(-1.0, 1.0, 0.0)).is_err());
    }

    #[test]
    fn tiny_triangle_is_nearly_flat() {
        let base = SpherePoint::from_lat_lon_deg(20.0, 30.0).unwrap().vector();
        let e1 = Vec3::new(0.0, 0.0, 1.0).cross(base).normalized();
        let e2 = base.cross(e1);
        let offs = [(0.0, 0.0), (4e-4, 0.0), (1e-4, 3e-4)];
        let vs = offs.map(|(u, v)| SpherePoint::new(base + e1 * u + e2 * v).unwrap());
        let t = SphericalTriangle::new(vs[0], vs[1], vs[2]).unwrap();
        let (a, b, c) = triangle_angles(&t);
        assert!((a + b + c - PI).abs() < 1e-5);
        // planar angles of the tangent-plane triangle
        let p = offs.map(|(u, v)| (u, v));
        let planar = |o: (f64, f64), x: (f64, f64), y: (f64, f64)| {
            let (ux, uy) = (x.0 - o.0, x.1 - o.1);
            let (vx, vy) = (y.0 - o.0, y.1 - o.1);
            (ux * vy - uy * vx).abs().atan2(ux * vx + uy * vy)
        };
        assert!((a - planar(p[0], p[1], p[2])).abs() < 1e-5);
        assert!((b - planar(p[1], p[2], p[0])).abs() < 1e-5);
    }

    #[test]
    fn excess_rejects_flat_or_hyperbolic_sums() {
        assert!(triangle_area_excess((1.0, 1.0, PI - 2.0)).is_err());
        assert!(triangle_area_excess((PI, PI, PI)).is_err());
        let tiny = triangle_area_excess((1.0, 1.0, PI - 2.0 + 1e-10)).unwrap();
        assert!(tiny < 1e-9);
    }

    #[test]
    fn sliver_has_negligible_area() {
        let a = SpherePoint::from_lat_lon_deg(0.0, 0.0).unwrap();
        let b = SpherePoint::from_lat_lon_deg(0.0, 0.05).unwrap();
        let c = SpherePoint::from_lat_lon_deg(1e-5, 0.02).unwrap();
        let t = SphericalTriangle::new(a, b, c).unwrap();
        assert!(triangle_area_lhuilier(&t) < 1e-6);
    }

    #[test]
    fn excess_matches_lhuilier_on_random_triangles() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let t = random_triangle(&mut rng);
            let angles = triangle_angles(&t);
            assert!(angles.0 + angles.1 + angles.2 > PI);
            let e = triangle_area_excess(angles).unwrap();
            let l = triangle_area_lhuilier(&t);
            assert!((e - l).abs() <= 1e-9, "excess {e} vs L'Huilier {l}");
        }
    }

    #[test]
    fn angles_are_rotation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let t = random_triangle(&mut rng);
            let axis = random_point(&mut rng).vector();
            let theta = rng.gen_range(0.0..2.0 * PI);
            let r = |p: SpherePoint| SpherePoint::new(rotate(p.vector(), axis, theta)).unwrap();
            let rt = SphericalTriangle::new(r(t.a), r(t.b), r(t.c)).unwrap();
            let (a0, b0, c0) = triangle_angles(&t);
            let (a1, b1, c1) = triangle_angles(&rt);
            assert!((a0 - a1).abs() <= 1e-9 && (b0 - b1).abs() <= 1e-9 && (c0 - c1).abs() <= 1e-9);
        }
    }

    #[test]
    fn geodesic_samples() {
        let p = pt(1.0, 0.0, 0.0);
        let q = pt(0.0, 1.0, 0.0);
        let s = sample_geodesic(p, q, 3).unwrap();
        let h = 0.5f64.sqrt();
        assert!(close(s[1].vector(), Vec3::new(h, h, 0.0)));
        assert_eq!(sample_geodesic(p, q, 2).unwrap(), vec![p, q]);
        assert!(sample_geodesic(p, p, 4).is_err());
        assert!(sample_geodesic(p, q, 1).is_err());

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let (p, q) = (random_point(&mut rng), random_point(&mut rng));
            let Ok(gc) = great_circle_through(p, q) else { continue };
            let n = rng.gen_range(2..40);
            let s = sample_geodesic(p, q, n).unwrap();
            assert_eq!((s[0], s[n - 1]), (p, q));
            let gap = p.distance(q) / (n - 1) as f64;
            for w in s.windows(2) {
                assert!((w[0].distance(w[1]) - gap).abs() < 1e-9);
            }
            for x in &s {
                assert!((x.vector().norm() - 1.0).abs() < 1e-12);
                assert!(gc.contains(*x, 1e-9));
            }
        }
    }
}
