//! Poincaré-disk model of the hyperbolic plane (curvature −1).
//!
//! Geodesics are diameters or circular arcs meeting the unit circle at right
//! angles. The model is conformal, so angles between geodesics are read off
//! from Euclidean tangent directions.

mod quadrature;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::curvature::{circle_circumference, Curvature};
use crate::error::{domain, Error, Result};
use crate::vector::Vec2;

pub use quadrature::{area_numeric, MAX_DEPTH, RELATIVE_TOLERANCE};

/// Points must stay this far inside the unit circle.
pub const BOUNDARY_MARGIN: f64 = 1e-12;
/// `|z × w|` below which two points are collinear with the origin.
pub const COLLINEAR_TOL: f64 = 1e-9;
/// Hyperbolic distance under which a point counts as lying on a geodesic
/// when building parallels.
pub const ON_LINE_TOL: f64 = 1e-6;
const ENDPOINT_TOL: f64 = 1e-9;

/// A point of the open unit disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 2]", try_from = "[f64; 2]")]
pub struct DiskPoint(Vec2);

impl DiskPoint {
    pub const ORIGIN: DiskPoint = DiskPoint(Vec2::ZERO);

    pub fn new(x: f64, y: f64) -> Result<Self> {
        let v = Vec2::new(x, y);
        if !(v.norm() < 1.0 - BOUNDARY_MARGIN) {
            return Err(Error::OutOfDisk(x, y));
        }
        Ok(DiskPoint(v))
    }

    pub fn from_vec(v: Vec2) -> Result<Self> {
        Self::new(v.x, v.y)
    }

    pub fn coords(self) -> Vec2 {
        self.0
    }

    pub fn x(self) -> f64 {
        self.0.x
    }

    pub fn y(self) -> f64 {
        self.0.y
    }

    pub fn distance(self, o: DiskPoint) -> f64 {
        distance(self, o)
    }
}

impl From<DiskPoint> for [f64; 2] {
    fn from(p: DiskPoint) -> Self {
        [p.0.x, p.0.y]
    }
}

impl TryFrom<[f64; 2]> for DiskPoint {
    type Error = Error;
    fn try_from(a: [f64; 2]) -> Result<Self> {
        DiskPoint::new(a[0], a[1])
    }
}

/// `acosh(1 + x)` without the cancellation of forming `1 + x`.
fn acosh_1p(x: f64) -> f64 {
    (x + (x * (x + 2.0)).sqrt()).ln_1p()
}

/// Hyperbolic distance between two disk points.
pub fn distance(z: DiskPoint, w: DiskPoint) -> f64 {
    let num = 2.0 * (z.0 - w.0).norm_sq();
    let den = (1.0 - z.0.norm_sq()) * (1.0 - w.0.norm_sq());
    acosh_1p(num / den)
}

/// A complete geodesic of the disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DiskGeodesic {
    /// Diameter through the origin along a unit direction.
    Diameter { direction: Vec2 },
    /// Arc of the circle `|x − center| = radius`, with `|center|² = 1 + radius²`.
    Arc { center: Vec2, radius: f64 },
}

fn canonical_direction(d: Vec2) -> Vec2 {
    let d = d.normalized();
    if d.y < -ENDPOINT_TOL || (d.y.abs() <= ENDPOINT_TOL && d.x < 0.0) {
        -d
    } else {
        d
    }
}

fn normalize_angle(a: f64) -> f64 {
    let t = a.rem_euclid(2.0 * PI);
    if t >= 2.0 * PI {
        0.0
    } else {
        t
    }
}

/// Counterclockwise angular offset of `b` from `a`, in `[0, 2π)`.
fn ccw_offset(a: f64, b: f64) -> f64 {
    normalize_angle(b - a)
}

impl DiskGeodesic {
    pub fn diameter(direction: Vec2) -> Result<Self> {
        if !(direction.norm() > 0.0) || !direction.norm().is_finite() {
            return Err(domain("diameter direction must be a non-zero finite vector"));
        }
        Ok(DiskGeodesic::Diameter {
            direction: canonical_direction(direction),
        })
    }

    /// Geodesic joining two distinct points of the unit circle.
    pub fn from_ideal_endpoints(e1: Vec2, e2: Vec2) -> Result<Self> {
        let (e1, e2) = (e1.normalized(), e2.normalized());
        if (e1 - e2).norm() < ENDPOINT_TOL {
            return Err(Error::Degenerate("ideal endpoints coincide".into()));
        }
        if (e1 + e2).norm() < ENDPOINT_TOL {
            return Self::diameter(e1);
        }
        // tangent lines at e1 and e2 meet at the centre of the orthogonal circle
        let center = (e1 + e2) * (1.0 / (1.0 + e1.dot(e2)));
        Ok(DiskGeodesic::Arc {
            center,
            radius: (center - e1).norm(),
        })
    }

    /// Well-conditioned form of the carrier: the geodesic is the zero set of
    /// `f(z) = n·z − s(1 + |z|²)/2` with `n` a unit vector and `s = 1/|c| ∈
    /// [0, 1)`; `s = 0` is a diameter with normal `n`. `f > 0` on the side
    /// whose ideal arc runs counterclockwise from the first to the second
    /// ideal endpoint.
    fn normal_form(&self) -> (Vec2, f64) {
        match *self {
            DiskGeodesic::Diameter { direction } => (direction.perp(), 0.0),
            DiskGeodesic::Arc { center, .. } => {
                let len = center.norm();
                (center * (1.0 / len), 1.0 / len)
            }
        }
    }

    fn level(&self, z: Vec2) -> f64 {
        let (n, s) = self.normal_form();
        n.dot(z) - 0.5 * s * (1.0 + z.norm_sq())
    }

    /// The two points at infinity, ordered counterclockwise so that the arc
    /// from the first to the second bounds the side containing the arc's
    /// centre (for a diameter, the side to its left).
    pub fn ideal_endpoints(&self) -> (Vec2, Vec2) {
        let (n, s) = self.normal_form();
        let c = (1.0 - s * s).max(0.0).sqrt();
        (n * s - n.perp() * c, n * s + n.perp() * c)
    }

    /// Euclidean residual of `p` with respect to the geodesic's carrier line
    /// or circle.
    pub fn residual(&self, p: Vec2) -> f64 {
        let (n, s) = self.normal_form();
        let f = self.level(p);
        2.0 * f.abs() / ((p * s - n).norm() + (1.0 - s * s).max(0.0).sqrt())
    }

    pub fn contains(&self, p: DiskPoint, tol: f64) -> bool {
        self.residual(p.0) <= tol
    }

    /// Hyperbolic distance from `p` to the geodesic.
    pub fn distance_to(&self, p: DiskPoint) -> f64 {
        let (_, s) = self.normal_form();
        let z = p.0;
        let sinh = 2.0 * self.level(z).abs() / ((1.0 - s * s).max(0.0).sqrt() * (1.0 - z.norm_sq()));
        sinh.asinh()
    }

    /// Whether `p` lies on the side bounded by the counterclockwise ideal arc
    /// from `ideal_endpoints().0` to `.1`.
    fn on_first_side(&self, p: Vec2) -> bool {
        self.level(p) > 0.0
    }

    /// Hyperbolic reflection (an isometry) across this geodesic.
    pub fn reflect(&self, p: DiskPoint) -> DiskPoint {
        // inversion z' = c + ρ²(z − c)/|z − c|², rewritten without |c|
        let (n, s) = self.normal_form();
        let z = p.0;
        let w = z * s - n;
        DiskPoint(z + w * (2.0 * self.level(z) / w.norm_sq()))
    }

    /// Unit tangent at `from`, pointing along the geodesic toward `to`.
    /// Both points must lie on the geodesic.
    pub fn tangent(&self, from: Vec2, to: Vec2) -> Vec2 {
        let (n, s) = self.normal_form();
        let t = (n - from * s).perp().normalized();
        if t.dot(to - from) < 0.0 {
            -t
        } else {
            t
        }
    }

    fn same_as(&self, other: &DiskGeodesic) -> bool {
        let (a1, b1) = self.ideal_endpoints();
        let (a2, b2) = other.ideal_endpoints();
        let close = |u: Vec2, v: Vec2| (u - v).norm() < ENDPOINT_TOL;
        (close(a1, a2) && close(b1, b2)) || (close(a1, b2) && close(b1, a2))
    }
}

/// Geodesic through two distinct disk points.
pub fn geodesic_through(z: DiskPoint, w: DiskPoint) -> Result<DiskGeodesic> {
    let (a, b) = (z.0, w.0);
    if (a - b).norm() < 1e-15 || distance(z, w) <= 1e-9 {
        return Err(Error::Degenerate("geodesic needs two distinct points".into()));
    }
    let det = a.cross(b);
    if det.abs() <= COLLINEAR_TOL {
        let dir = if a.norm() >= b.norm() { a } else { b };
        return DiskGeodesic::diameter(dir);
    }
    // c·z = (1 + |z|²)/2 for every point z on a circle orthogonal to the unit circle
    let (ra, rb) = (0.5 * (1.0 + a.norm_sq()), 0.5 * (1.0 + b.norm_sq()));
    let center = Vec2::new((ra * b.y - rb * a.y) / det, (a.x * rb - b.x * ra) / det);
    let radius = (center.norm_sq() - 1.0).sqrt();
    Ok(DiskGeodesic::Arc { center, radius })
}

/// Geodesic from a point at infinity `e` (unit vector) through `p`.
fn geodesic_from_ideal(e: Vec2, p: Vec2) -> Result<DiskGeodesic> {
    let det = e.cross(p);
    if det.abs() <= COLLINEAR_TOL * p.norm().max(1e-3) {
        return DiskGeodesic::diameter(e);
    }
    let rp = 0.5 * (1.0 + p.norm_sq());
    let center = Vec2::new((p.y - rp * e.y) / det, (e.x * rp - p.x) / det);
    let radius = (center.norm_sq() - 1.0).sqrt();
    Ok(DiskGeodesic::Arc { center, radius })
}

fn ideal_angles(g: &DiskGeodesic) -> (f64, f64) {
    let (a, b) = g.ideal_endpoints();
    (normalize_angle(a.angle()), normalize_angle(b.angle()))
}

/// Two geodesics cross iff their ideal endpoints interleave on the circle.
fn endpoints_interleave(g1: &DiskGeodesic, g2: &DiskGeodesic) -> bool {
    let (a1, b1) = ideal_angles(g1);
    let (a2, b2) = ideal_angles(g2);
    let span = ccw_offset(a1, b1);
    let inside = |t: f64| {
        let o = ccw_offset(a1, t);
        o > ENDPOINT_TOL && o < span - ENDPOINT_TOL
    };
    let outside = |t: f64| {
        let o = ccw_offset(a1, t);
        o > span + ENDPOINT_TOL && o < 2.0 * PI - ENDPOINT_TOL
    };
    (inside(a2) && outside(b2)) || (outside(a2) && inside(b2))
}

/// Intersection point of two distinct geodesics inside the open disk, if any.
pub fn intersect(g1: &DiskGeodesic, g2: &DiskGeodesic) -> Result<Option<DiskPoint>> {
    if g1.same_as(g2) {
        return Err(Error::Identical("geodesics"));
    }
    if !endpoints_interleave(g1, g2) {
        return Ok(None);
    }
    let (n1, s1) = g1.normal_form();
    let (n2, s2) = g2.normal_form();
    // s2·f1 − s1·f2 vanishes on a line through the origin holding the crossing
    let m = n1 * s2 - n2 * s1;
    if m.norm() < 1e-300 {
        return Ok(Some(DiskPoint::ORIGIN));
    }
    let u = m.perp().normalized();
    // along z = t·u: s·t² − 2b·t + s = 0, roots multiply to 1
    let (b1, b2) = (n1.dot(u), n2.dot(u));
    let (b, s) = if b1.abs() >= b2.abs() { (b1, s1) } else { (b2, s2) };
    let t = s / (b + b.signum() * (b * b - s * s).max(0.0).sqrt());
    let p = u * t;
    Ok(Some(DiskPoint(p)))
}

/// Triangle with geodesic sides.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskTriangle {
    pub a: DiskPoint,
    pub b: DiskPoint,
    pub c: DiskPoint,
}

impl DiskTriangle {
    pub fn new(a: DiskPoint, b: DiskPoint, c: DiskPoint) -> Result<Self> {
        for (name, p, q) in [("a, b", a, b), ("b, c", b, c), ("c, a", c, a)] {
            if distance(p, q) <= 1e-9 {
                return Err(Error::Degenerate(format!("vertices {name} coincide")));
            }
        }
        if geodesic_through(a, b)?.distance_to(c) <= 1e-12 {
            return Err(Error::Degenerate("vertices lie on one geodesic".into()));
        }
        Ok(DiskTriangle { a, b, c })
    }

    pub fn vertices(&self) -> [DiskPoint; 3] {
        [self.a, self.b, self.c]
    }

    /// The three sides as geodesics: bc, ca, ab.
    pub fn sides(&self) -> [DiskGeodesic; 3] {
        // vertices are validated distinct, so these cannot fail
        [(self.b, self.c), (self.c, self.a), (self.a, self.b)]
            .map(|(p, q)| geodesic_through(p, q).expect("validated triangle"))
    }
}

fn vertex_angle(v: DiskPoint, p: DiskPoint, q: DiskPoint) -> Result<f64> {
    let tp = geodesic_through(v, p)?.tangent(v.0, p.0);
    let tq = geodesic_through(v, q)?.tangent(v.0, q.0);
    Ok(tp.cross(tq).abs().atan2(tp.dot(tq)))
}

/// Interior angles at a, b, c.
pub fn triangle_angles(t: &DiskTriangle) -> Result<(f64, f64, f64)> {
    Ok((
        vertex_angle(t.a, t.b, t.c)?,
        vertex_angle(t.b, t.c, t.a)?,
        vertex_angle(t.c, t.a, t.b)?,
    ))
}

/// A hyperbolic circle together with its Euclidean rendering in the disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HyperbolicCircle {
    pub center: DiskPoint,
    pub radius: f64,
    pub euclidean_center: Vec2,
    pub euclidean_radius: f64,
}

impl HyperbolicCircle {
    /// `2π·sinh r`, strictly more than `2πr`.
    pub fn circumference(&self) -> f64 {
        circle_circumference(Curvature::UNIT_HYPERBOLIC, self.radius).expect("radius validated positive")
    }
}

pub fn hyperbolic_circle(center: DiskPoint, r: f64) -> Result<HyperbolicCircle> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(domain(format!("hyperbolic radius must be positive, got {r}")));
    }
    let s = center.0.norm();
    let dir = if s > 0.0 {
        center.0 * (1.0 / s)
    } else {
        Vec2::new(1.0, 0.0)
    };
    // distance from the origin along the ray is 2·artanh(t)
    let u0 = 2.0 * s.atanh();
    let far = (0.5 * (u0 + r)).tanh();
    let near = (0.5 * (u0 - r)).tanh();
    if far >= 1.0 - BOUNDARY_MARGIN {
        return Err(domain(format!(
            "circle of radius {r} about ({}, {}) does not fit inside the disk",
            center.x(),
            center.y()
        )));
    }
    Ok(HyperbolicCircle {
        center,
        radius: r,
        euclidean_center: dir * (0.5 * (far + near)),
        euclidean_radius: 0.5 * (far - near),
    })
}

/// `k` distinct geodesics through `p`, none of which meets `g`.
///
/// Let `a, b` be the ideal endpoints of `g` bounding `p`'s side, and `b'` the
/// far endpoint of the geodesic from `b` through `p`. Every geodesic through
/// `p` with one endpoint strictly between `a` and `b'` keeps both endpoints
/// on `p`'s side; the `k` endpoints are spread evenly over that arc.
pub fn parallels_through(g: &DiskGeodesic, p: DiskPoint, k: usize) -> Result<Vec<DiskGeodesic>> {
    if k == 0 {
        return Err(domain("need at least one parallel"));
    }
    let d = g.distance_to(p);
    if d <= ON_LINE_TOL {
        return Err(Error::PointOnLine(d));
    }
    let (e1, e2) = g.ideal_endpoints();
    // counterclockwise ideal arc a -> b on p's side
    let (a, b) = if g.on_first_side(p.0) { (e1, e2) } else { (e2, e1) };
    let theta_a = normalize_angle(a.angle());
    let span = ccw_offset(theta_a, normalize_angle(b.angle()));

    let through_b = geodesic_from_ideal(b, p.0)?;
    let (x, y) = through_b.ideal_endpoints();
    let b_far = if (x - b).norm() > (y - b).norm() { x } else { y };
    let limit = ccw_offset(theta_a, normalize_angle(b_far.angle()));
    if !(limit > 0.0 && limit < span) {
        return Err(Error::Construction(
            "limiting parallel endpoint fell outside the ideal arc".into(),
        ));
    }
    let step = limit / (k + 1) as f64;
    if step < 1e-9 {
        return Err(Error::Resolution { requested: k });
    }
    (1..=k)
        .map(|j| geodesic_from_ideal(Vec2::from_polar(1.0, theta_a + step * j as f64), p.0))
        .collect()
}

#[cfg(test)]
mod tests;
