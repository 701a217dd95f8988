//! Constant-curvature geometry and fabrication templates.
//!
//! The crate covers the three model geometries (sphere, plane, hyperbolic
//! plane) through closed-form circle and triangle laws, concrete models of the
//! unit sphere and the Poincaré disk, and generators for physical models:
//! polygon-tiling nets, curved-folding annulus crease patterns and hyperbolic
//! crochet schedules. SVG and JSON emitters in [`render`] and [`report`] are
//! byte-deterministic.
//!
//! ```
//! use noneuclid::disk::{area_numeric, triangle_angles, DiskPoint, DiskTriangle};
//! use noneuclid::tiling::{generate_patch, total_defect, VertexConfig};
//!
//! let t = DiskTriangle::new(DiskPoint::new(0.0, 0.0)?, DiskPoint::new(0.5, 0.0)?, DiskPoint::new(0.0, 0.5)?)?;
//! let (a, b, c) = triangle_angles(&t)?;
//! let defect = std::f64::consts::PI - (a + b + c);
//! assert!((area_numeric(&t)? - defect).abs() < 1e-6);
//!
//! let ball = generate_patch(&"5,6,6".parse::<VertexConfig>()?, 99)?;
//! assert_eq!(total_defect(&ball)?.to_string(), "720/1");
//! # Ok::<(), noneuclid::Error>(())
//! ```

// `!(x > 0.0)` deliberately rejects NaN along with non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod crochet;
pub mod curvature;
pub mod disk;
pub mod error;
pub mod fold;
pub mod render;
pub mod report;
pub mod sphere;
pub mod svg;
pub mod tiling;
pub mod vector;

pub use curvature::{AngleSum, Curvature, CurvatureSign};
pub use error::{Error, Result};
pub use vector::{Vec2, Vec3};
