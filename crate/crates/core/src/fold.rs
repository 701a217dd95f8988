//! Curved-folding annulus templates and the effective-cone model.
//!
//! A paper annulus creased along concentric circles with alternating
//! mountain/valley folds pleats into a zigzag. Folding cannot stretch the
//! paper, so each crease keeps its length `2πr`, but the pleats pull the
//! crease in towards the centre. A circle of length `2πr` around a smaller
//! radius carries more angle than the plane allows: the excess is what makes
//! the folded annulus behave like a negatively curved surface.
//!
//! The model here is kinematic and axisymmetric: one global fold angle `φ`
//! contracts every strip's radial width by `cos φ`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CreaseKind {
    Mountain,
    Valley,
}

impl CreaseKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CreaseKind::Mountain => "mountain",
            CreaseKind::Valley => "valley",
        }
    }

    fn flipped(self) -> Self {
        match self {
            CreaseKind::Mountain => CreaseKind::Valley,
            CreaseKind::Valley => CreaseKind::Mountain,
        }
    }
}

impl fmt::Display for CreaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Crease {
    pub radius: f64,
    pub kind: CreaseKind,
}

/// Placement rule for crease radii between the two cut circles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "rule", content = "ratio")]
pub enum Spacing {
    /// Equal gaps: `r_in + k·(r_out − r_in)/(n + 1)`.
    Uniform,
    /// Each gap is `ratio` times the previous one; `n` creases leave `n + 1`
    /// gaps spanning the annulus.
    Geometric(f64),
}

impl fmt::Display for Spacing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Spacing::Uniform => f.write_str("uniform"),
            Spacing::Geometric(r) => write!(f, "geometric:{r}"),
        }
    }
}

impl FromStr for Spacing {
    type Err = Error;
    /// Accepts `uniform` or `geometric:RATIO`.
    fn from_str(s: &str) -> Result<Self> {
        if s == "uniform" {
            return Ok(Spacing::Uniform);
        }
        let ratio = s
            .strip_prefix("geometric:")
            .and_then(|r| r.parse::<f64>().ok())
            .ok_or_else(|| domain(format!("spacing must be uniform or geometric:RATIO, got {s:?}")))?;
        Ok(Spacing::Geometric(ratio))
    }
}

/// A cut annulus with its crease circles, all lengths in mm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnnulusTemplate {
    r_in: f64,
    r_out: f64,
    creases: Vec<Crease>,
}

impl AnnulusTemplate {
    /// Validates radii ordering and strict mountain/valley alternation.
    pub fn new(r_in: f64, r_out: f64, creases: Vec<Crease>) -> Result<Self> {
        check_bounds(r_in, r_out)?;
        let mut last = r_in;
        for (i, c) in creases.iter().enumerate() {
            if !(c.radius > last) {
                return Err(domain(format!(
                    "crease radii must increase strictly from the inner radius, got {} after {last}",
                    c.radius
                )));
            }
            if i > 0 && c.kind == creases[i - 1].kind {
                return Err(domain("crease kinds must alternate between mountain and valley"));
            }
            last = c.radius;
        }
        if !(last < r_out) {
            return Err(domain(format!(
                "outermost crease {last} must lie inside the outer radius {r_out}"
            )));
        }
        Ok(AnnulusTemplate { r_in, r_out, creases })
    }

    pub fn r_in(&self) -> f64 {
        self.r_in
    }

    pub fn r_out(&self) -> f64 {
        self.r_out
    }

    pub fn creases(&self) -> &[Crease] {
        &self.creases
    }
}

fn check_bounds(r_in: f64, r_out: f64) -> Result<()> {
    if !(r_in > 0.0) || !r_in.is_finite() {
        return Err(domain(format!("inner radius must be positive, got {r_in}")));
    }
    if !(r_out > r_in) || !r_out.is_finite() {
        return Err(domain(format!(
            "outer radius must exceed inner radius, got inner {r_in} and outer {r_out}"
        )));
    }
    Ok(())
}

/// Creases strictly between the cut circles, alternating from a mountain.
pub fn make_annulus_template(r_in: f64, r_out: f64, n_creases: usize, spacing: Spacing) -> Result<AnnulusTemplate> {
    check_bounds(r_in, r_out)?;
    if n_creases == 0 {
        return Err(domain("need at least one crease"));
    }
    let width = r_out - r_in;
    let radii: Vec<f64> = match spacing {
        Spacing::Uniform => (1..=n_creases)
            .map(|k| r_in + k as f64 * width / (n_creases + 1) as f64)
            .collect(),
        Spacing::Geometric(q) => {
            if !(q > 0.0) || !q.is_finite() {
                return Err(domain(format!("geometric spacing ratio must be positive, got {q}")));
            }
            let gaps: Vec<f64> = (0..=n_creases).map(|k| q.powi(k as i32)).collect();
            let total: f64 = gaps.iter().sum();
            let mut acc = 0.0;
            gaps[..n_creases]
                .iter()
                .map(|g| {
                    acc += g;
                    r_in + width * acc / total
                })
                .collect()
        }
    };
    let mut kind = CreaseKind::Mountain;
    let creases = radii
        .into_iter()
        .map(|radius| {
            let c = Crease { radius, kind };
            kind = kind.flipped();
            c
        })
        .collect();
    // collapsing gaps surface here as ordering violations
    AnnulusTemplate::new(r_in, r_out, creases).map_err(|_| {
        domain(format!(
            "spacing {spacing} is too extreme: crease radii are not distinct"
        ))
    })
}

/// Length `2πr` of every crease; folding leaves these unchanged.
pub fn crease_lengths(t: &AnnulusTemplate) -> Vec<f64> {
    t.creases.iter().map(|c| 2.0 * PI * c.radius).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfileRecord {
    pub material_radius: f64,
    /// Planform distance from the centre after folding.
    pub effective_radius: f64,
    pub circumference: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FoldProfile {
    pub fold_angle: f64,
    pub records: Vec<ProfileRecord>,
}

fn check_fold_angle(phi: f64) -> Result<()> {
    if !(0.0..FRAC_PI_2).contains(&phi) {
        return Err(domain(format!(
            "fold angle must lie in [0, 90) degrees, got {} degrees",
            phi.to_degrees()
        )));
    }
    Ok(())
}

/// Planform radii of the creases when every strip is folded by `fold_angle`.
pub fn effective_profile(t: &AnnulusTemplate, fold_angle: f64) -> Result<FoldProfile> {
    check_fold_angle(fold_angle)?;
    let c = fold_angle.cos();
    let lengths = crease_lengths(t);
    let records = t
        .creases
        .iter()
        .zip(lengths)
        .map(|(cr, circumference)| ProfileRecord {
            material_radius: cr.radius,
            effective_radius: t.r_in + c * (cr.radius - t.r_in),
            circumference,
        })
        .collect();
    Ok(FoldProfile { fold_angle, records })
}

/// Angle in excess of 2π around the apex of the effective cone,
/// `2π(sec φ − 1)`.
pub fn apex_angle_surplus(fold_angle: f64) -> Result<f64> {
    check_fold_angle(fold_angle)?;
    Ok(2.0 * PI * (1.0 / fold_angle.cos() - 1.0))
}

/// Curvature `K ≈ −C″/C` at each interior crease, with `C″` taken as the
/// second divided difference of circumference over effective radius.
pub fn estimate_effective_curvature(p: &FoldProfile) -> Result<Vec<f64>> {
    let s: Vec<f64> = p.records.iter().map(|r| r.effective_radius).collect();
    let c: Vec<f64> = p.records.iter().map(|r| r.circumference).collect();
    curvature_from_samples(&s, &c)
}

/// `−C″/C` at the interior samples of a circumference curve `C(s)`.
pub fn curvature_from_samples(s: &[f64], c: &[f64]) -> Result<Vec<f64>> {
    if s.len() != c.len() {
        return Err(domain("radius and circumference columns differ in length"));
    }
    if s.len() < 3 {
        return Err(Error::TooFewCreases {
            needed: 3,
            got: s.len(),
        });
    }
    (1..s.len() - 1)
        .map(|k| {
            let (h0, h1) = (s[k] - s[k - 1], s[k + 1] - s[k]);
            if !(h0 > 0.0 && h1 > 0.0) {
                return Err(Error::Degenerate("effective radii must increase strictly".to_string()));
            }
            let second = 2.0 * ((c[k + 1] - c[k]) / h1 - (c[k] - c[k - 1]) / h0) / (h0 + h1);
            Ok(-second / c[k])
        })
        .collect()
}
