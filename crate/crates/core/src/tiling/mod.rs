//! Polygon tiling models: exact vertex arithmetic, patch growth and nets.
//!
//! The supported tilings are the three classroom models with vertex
//! configuration `(p,6,6)`: the soccer ball (`p = 5`), the honeycomb (`p = 6`)
//! and the hyperbolic football (`p = 7`). Angles are exact rationals; the
//! sign of `360° − Σ` at a vertex is the discrete curvature.

mod angle;
mod net;
mod patch;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::curvature::CurvatureSign;
use crate::error::{domain, Error, Result};

pub use angle::{interior_angle, ExactAngle};
pub use net::{
    unfold_net, unfold_net_with_tabs, EdgeKind, GlueTab, Net, NetEdge, PlacedFace, Strategy, DEFAULT_TAB_DEPTH_MM,
    OVERLAP_TOL_MM,
};
pub use patch::{generate_patch, total_defect, Face, FaceClass, HalfEdge, TilingPatch, Vertex, MAX_FACES};

/// Cyclic list of polygon side counts meeting at a vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexConfig {
    gons: Vec<u32>,
}

impl VertexConfig {
    pub fn new(gons: Vec<u32>) -> Result<Self> {
        if gons.len() < 3 {
            return Err(domain(format!(
                "a vertex needs at least 3 polygons, got {}",
                gons.len()
            )));
        }
        if let Some(&g) = gons.iter().find(|&&g| g < 3) {
            return Err(domain(format!("polygon side count must be at least 3, got {g}")));
        }
        Ok(VertexConfig { gons })
    }

    pub fn gons(&self) -> &[u32] {
        &self.gons
    }

    /// True when `seq` lists the same polygons in the same cyclic order, up to
    /// rotation and reflection.
    pub fn matches_cyclic(&self, seq: &[u32]) -> bool {
        let n = self.gons.len();
        if seq.len() != n {
            return false;
        }
        (0..n).any(|shift| {
            (0..n).all(|i| seq[(i + shift) % n] == self.gons[i])
                || (0..n).all(|i| seq[(shift + n - i) % n] == self.gons[i])
        })
    }
}

impl fmt::Display for VertexConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gons.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for VertexConfig {
    type Err = Error;
    /// Parses `7,6,6`, with or without surrounding parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let gons = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| domain(format!("invalid vertex configuration {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        VertexConfig::new(gons)
    }
}

impl Serialize for VertexConfig {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.gons.serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexConfig {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let gons = Vec::<u32>::deserialize(d)?;
        VertexConfig::new(gons).map_err(serde::de::Error::custom)
    }
}

/// Exact sum of the polygon angles meeting at a vertex.
pub fn vertex_angle_sum(config: &VertexConfig) -> ExactAngle {
    config
        .gons
        .iter()
        .map(|&n| interior_angle(n).expect("validated side count"))
        .sum()
}

/// `360° − vertex_angle_sum`: positive where the surface closes up like a
/// sphere, negative where it ruffles like a saddle.
pub fn angle_defect(config: &VertexConfig) -> ExactAngle {
    ExactAngle::FULL_TURN - vertex_angle_sum(config)
}

pub fn classify_vertex(config: &VertexConfig) -> CurvatureSign {
    angle_defect(config).sign()
}
