//! Closed-form laws of constant-curvature geometry.
//!
//! Every function here is uniform in the Gaussian curvature `K`: the sphere
//! (`K > 0`), the plane (`K = 0`) and the hyperbolic plane (`K < 0`) share one
//! entry point, and near `K = 0` the trigonometric forms are replaced by their
//! Taylor series so results stay continuous across the flat case.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Below this value of `|K|·r²` circle laws are evaluated by series.
pub const SERIES_THRESHOLD: f64 = 1e-8;

/// Gaussian curvature in 1/length².
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Curvature(f64);

/// Sign class of a curvature value or a discrete angle defect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurvatureSign {
    Positive,
    Zero,
    Negative,
}

impl CurvatureSign {
    pub fn as_str(self) -> &'static str {
        match self {
            CurvatureSign::Positive => "positive",
            CurvatureSign::Zero => "zero",
            CurvatureSign::Negative => "negative",
        }
    }

    /// Name of the model geometry with this curvature sign.
    pub fn geometry(self) -> &'static str {
        match self {
            CurvatureSign::Positive => "spherical",
            CurvatureSign::Zero => "flat",
            CurvatureSign::Negative => "hyperbolic",
        }
    }
}

impl fmt::Display for CurvatureSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Curvature {
    pub const FLAT: Curvature = Curvature(0.0);
    pub const UNIT_SPHERE: Curvature = Curvature(1.0);
    pub const UNIT_HYPERBOLIC: Curvature = Curvature(-1.0);

    pub fn new(k: f64) -> Result<Self> {
        if !k.is_finite() {
            return Err(domain(format!("curvature must be finite, got {k}")));
        }
        Ok(Curvature(k))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn sign(self) -> CurvatureSign {
        classify_curvature(self)
    }

    /// Largest radius of a circle on the surface, `π/√K` for a sphere.
    pub fn max_radius(self) -> f64 {
        if self.0 > 0.0 {
            PI / self.0.sqrt()
        } else {
            f64::INFINITY
        }
    }
}

impl fmt::Display for Curvature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Sum of the interior angles of a triangle, in radians.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct AngleSum {
    pub radians: f64,
}

impl AngleSum {
    pub fn degrees(self) -> f64 {
        self.radians.to_degrees()
    }

    /// Deviation from the flat sum π; positive on spheres, negative on
    /// hyperbolic surfaces.
    pub fn excess(self) -> f64 {
        self.radians - PI
    }
}

pub fn classify_curvature(k: Curvature) -> CurvatureSign {
    if k.0 > 0.0 {
        CurvatureSign::Positive
    } else if k.0 < 0.0 {
        CurvatureSign::Negative
    } else {
        CurvatureSign::Zero
    }
}

fn check_radius(k: Curvature, r: f64) -> Result<()> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(domain(format!("radius must be positive and finite, got {r}")));
    }
    if r > k.max_radius() {
        return Err(domain(format!(
            "radius {r} exceeds π/√K = {} on a sphere of curvature {}",
            k.max_radius(),
            k.0
        )));
    }
    Ok(())
}

/// Circumference of a geodesic circle of radius `r`.
///
/// `2π·sin(√K r)/√K` on spheres, `2πr` in the plane and `2π·sinh(√|K| r)/√|K|`
/// on hyperbolic surfaces.
pub fn circle_circumference(k: Curvature, r: f64) -> Result<f64> {
    check_radius(k, r)?;
    let kr2 = k.0 * r * r;
    if kr2.abs() < SERIES_THRESHOLD {
        return Ok(2.0 * PI * r * (1.0 - kr2 / 6.0 + kr2 * kr2 / 120.0));
    }
    let s = k.0.abs().sqrt();
    Ok(if k.0 > 0.0 {
        2.0 * PI * (s * r).sin() / s
    } else {
        2.0 * PI * (s * r).sinh() / s
    })
}

/// Area enclosed by a geodesic circle of radius `r`.
pub fn circle_area(k: Curvature, r: f64) -> Result<f64> {
    check_radius(k, r)?;
    let kr2 = k.0 * r * r;
    if kr2.abs() < SERIES_THRESHOLD {
        return Ok(PI * r * r * (1.0 - kr2 / 12.0 + kr2 * kr2 / 360.0));
    }
    let s = k.0.abs().sqrt();
    // 1 - cos x = 2 sin²(x/2) and cosh x - 1 = 2 sinh²(x/2), without cancellation
    let half = if k.0 > 0.0 {
        (0.5 * s * r).sin()
    } else {
        (0.5 * s * r).sinh()
    };
    Ok(4.0 * PI * half * half / k.0.abs())
}

/// Angle sum `π + K·A` of a geodesic triangle of area `A`.
pub fn triangle_angle_sum(k: Curvature, area: f64) -> Result<AngleSum> {
    if !(area >= 0.0) || !area.is_finite() {
        return Err(domain(format!("area must be non-negative and finite, got {area}")));
    }
    if k.0 > 0.0 && k.0 * area >= 4.0 * PI {
        return Err(domain(format!(
            "K·area = {} must stay below 4π for a triangle on the sphere",
            k.0 * area
        )));
    }
    if k.0 < 0.0 && -k.0 * area > PI {
        return Err(domain(format!(
            "|K|·area = {} exceeds π, the area of an ideal hyperbolic triangle",
            -k.0 * area
        )));
    }
    Ok(AngleSum {
        radians: PI + k.0 * area,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k(v: f64) -> Curvature {
        Curvature::new(v).unwrap()
    }

    // composite Simpson on [a, b]
    fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
        let h = (b - a) / n as f64;
        let mut s = f(a) + f(b);
        for i in 1..n {
            let x = a + i as f64 * h;
            s += if i % 2 == 1 { 4.0 } else { 2.0 } * f(x);
        }
        s * h / 3.0
    }

    #[test]
    #[allow(clippy::approx_constant)] // the literal is the independent oracle
    fn flat_circumference_is_two_pi_r() {
        assert!((circle_circumference(Curvature::FLAT, 1.0).unwrap() - 2.0 * PI).abs() < 1e-15);
        assert!((circle_circumference(Curvature::FLAT, 1.0).unwrap() - 6.283185307).abs() < 1e-9);
    }

    #[test]
    fn equator_matches_latitude_arc_length() {
        let c = circle_circumference(k(1.0), PI / 2.0).unwrap();
        // latitude circle at colatitude θ: (sin θ cos φ, sin θ sin φ, cos θ), |d/dφ| = sin θ
        let theta = PI / 2.0;
        let arc = simpson(
            |phi| {
                let (dx, dy) = (-theta.sin() * phi.sin(), theta.sin() * phi.cos());
                (dx * dx + dy * dy).sqrt()
            },
            0.0,
            2.0 * PI,
            1000,
        );
        assert!((c - 2.0 * PI).abs() < 1e-12);
        assert!((c - arc).abs() < 1e-9);
        assert!(c < 2.0 * PI * (PI / 2.0));
    }

    #[test]
    fn hyperbolic_circumference_unit_radius() {
        let c = circle_circumference(k(-1.0), 1.0).unwrap();
        assert!((1.0f64.sinh() - 1.175201).abs() < 1e-6);
        assert!((c - 7.384007).abs() < 1e-6);
        assert!((c - 2.0 * PI * 1.0f64.sinh()).abs() < 1e-12);
    }

    #[test]
    fn circle_area_examples() {
        assert!((circle_area(Curvature::FLAT, 2.0).unwrap() - 4.0 * PI).abs() < 1e-12);
        assert!((circle_area(k(1.0), PI).unwrap() - 4.0 * PI).abs() < 1e-12);
        let h = circle_area(k(-1.0), 1.0).unwrap();
        assert!((h - 2.0 * PI * (1.0f64.cosh() - 1.0)).abs() < 1e-12);
        assert!((h - 3.412276).abs() < 1e-6);
        // disk-model quadrature: a hyperbolic circle of radius 1 about the origin has
        // Euclidean radius tanh(1/2); area element 4/(1-ρ²)² in polar coordinates
        let rho = 0.5f64.tanh();
        let quad = 2.0 * PI * simpson(|p| 4.0 * p / (1.0 - p * p).powi(2), 0.0, rho, 2000);
        assert!((h - quad).abs() < 1e-9);
    }

    #[test]
    fn angle_sum_examples() {
        let flat = triangle_angle_sum(Curvature::FLAT, 123.0).unwrap();
        assert_eq!(flat.radians, PI);
        let sphere = triangle_angle_sum(k(1.0), PI / 2.0).unwrap();
        assert!((sphere.radians - 1.5 * PI).abs() < 1e-15);
        assert!((sphere.degrees() - 270.0).abs() < 1e-12);
        let hyp = triangle_angle_sum(k(-1.0), PI / 4.0).unwrap();
        assert!((hyp.degrees() - 135.0).abs() < 1e-12);
    }

    #[test]
    fn classification() {
        assert_eq!(classify_curvature(k(1.0)), CurvatureSign::Positive);
        assert_eq!(classify_curvature(k(0.0)), CurvatureSign::Zero);
        assert_eq!(classify_curvature(k(-0.0)), CurvatureSign::Zero);
        assert_eq!(classify_curvature(k(-0.03324)), CurvatureSign::Negative);
    }

    #[test]
    fn domain_errors() {
        assert!(Curvature::new(f64::NAN).is_err());
        assert!(Curvature::new(f64::INFINITY).is_err());
        assert!(circle_circumference(Curvature::FLAT, 0.0).is_err());
        assert!(circle_circumference(Curvature::FLAT, -1.0).is_err());
        assert!(circle_circumference(k(1.0), PI + 1e-9).is_err());
        assert!(circle_circumference(k(1.0), PI).is_ok());
        assert!(circle_area(k(4.0), 2.0).is_err());
        assert!(triangle_angle_sum(k(1.0), -1e-3).is_err());
        assert!(triangle_angle_sum(k(1.0), 4.0 * PI).is_err());
        assert!(triangle_angle_sum(k(-1.0), 4.0).is_err());
    }

    #[test]
    fn flat_limit_taylor_agreement() {
        for &r in &[0.1, 1.0, 10.0] {
            for e in -12..=-6 {
                for &sgn in &[1.0, -1.0] {
                    let kv = sgn * 10f64.powi(e);
                    let c = circle_circumference(k(kv), r).unwrap();
                    let taylor = 2.0 * PI * r * (1.0 - kv * r * r / 6.0);
                    assert!((c - taylor).abs() <= 1e-9 * r, "K={kv} r={r}");
                }
            }
        }
    }

    #[test]
    fn series_branch_is_continuous_at_threshold() {
        let r = 1.0;
        let below = circle_circumference(k(SERIES_THRESHOLD * 0.999_999), r).unwrap();
        let above = circle_circumference(k(SERIES_THRESHOLD * 1.000_001), r).unwrap();
        assert!((below - above).abs() < 1e-12);
        let below = circle_area(k(-SERIES_THRESHOLD * 0.999_999), r).unwrap();
        let above = circle_area(k(-SERIES_THRESHOLD * 1.000_001), r).unwrap();
        assert!((below - above).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn comparison_law(r in 1e-3f64..20.0, kv in 1e-3f64..5.0) {
            let neg = circle_circumference(k(-kv), r).unwrap();
            prop_assert!(neg > 2.0 * PI * r);
            let rs = r.min(0.999 * PI / kv.sqrt());
            let pos = circle_circumference(k(kv), rs).unwrap();
            prop_assert!(pos < 2.0 * PI * rs);
        }

        #[test]
        fn area_derivative_is_circumference(r in 0.05f64..3.0, kv in -2.0f64..2.0) {
            let kk = k(kv);
            let h = 1e-5 * r;
            prop_assume!(r + h < kk.max_radius());
            let d = (circle_area(kk, r + h).unwrap() - circle_area(kk, r - h).unwrap()) / (2.0 * h);
            let c = circle_circumference(kk, r).unwrap();
            prop_assert!(((d - c) / c).abs() < 1e-6);
        }

        #[test]
        fn angle_sum_is_affine_in_area(kv in -1.0f64..1.0, a in 0.0f64..3.0, b in 0.0f64..3.0) {
            let kk = k(kv);
            let sa = triangle_angle_sum(kk, a).unwrap().radians;
            let sb = triangle_angle_sum(kk, b).unwrap().radians;
            prop_assert!(((sa - sb) - kv * (a - b)).abs() < 1e-12);
        }
    }
}
