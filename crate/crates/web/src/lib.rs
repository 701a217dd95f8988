//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Three operations: a geodesic triangle in the Poincaré disk, a tiling net,
//! and a fold template. Each returns the SVG drawing together with its JSON
//! report. The plain-Rust functions below do the work and are tested
//! natively; the exported wrappers only convert errors for JavaScript.

use noneuclid::disk::{DiskPoint, DiskTriangle};
use noneuclid::fold::{make_annulus_template, Spacing};
use noneuclid::render::{render_disk, render_fold, render_net, DiskFigure, RenderStyle};
use noneuclid::report::{disk_triangle_report, fold_report, tiling_report, to_json};
use noneuclid::tiling::{generate_patch, unfold_net, Strategy, VertexConfig};
use wasm_bindgen::prelude::*;

/// Rings beyond this make nets too large to be useful on screen.
pub const MAX_DEMO_RINGS: u32 = 6;

/// Square drawing area for the disk, so clicks map to disk coordinates with
/// [`DISK_CENTER_MM`] and [`DISK_RADIUS_MM`].
pub const DISK_PAGE_MM: f64 = 200.0;
pub const DISK_MARGIN_MM: f64 = 5.0;
pub const DISK_CENTER_MM: f64 = DISK_PAGE_MM / 2.0;
pub const DISK_RADIUS_MM: f64 = DISK_PAGE_MM / 2.0 - DISK_MARGIN_MM;

#[wasm_bindgen]
#[derive(Debug, Clone)]
pub struct Figure {
    svg: String,
    report: String,
    summary: String,
}

#[wasm_bindgen]
impl Figure {
    #[wasm_bindgen(getter)]
    pub fn svg(&self) -> String {
        self.svg.clone()
    }

    /// Pretty JSON report.
    #[wasm_bindgen(getter)]
    pub fn report(&self) -> String {
        self.report.clone()
    }

    /// One line for the page's status area.
    #[wasm_bindgen(getter)]
    pub fn summary(&self) -> String {
        self.summary.clone()
    }
}

fn disk_style() -> RenderStyle {
    RenderStyle {
        page_width_mm: DISK_PAGE_MM,
        page_height_mm: DISK_PAGE_MM,
        margin_mm: DISK_MARGIN_MM,
        ..RenderStyle::default()
    }
}

/// `coords` holds x, y for each of the three vertices.
pub fn disk_triangle_figure(coords: &[f64]) -> Result<Figure, String> {
    if coords.len() != 6 {
        return Err(format!("expected 6 coordinates, got {}", coords.len()));
    }
    let p = |i: usize| DiskPoint::new(coords[2 * i], coords[2 * i + 1]).map_err(|e| e.to_string());
    let t = DiskTriangle::new(p(0)?, p(1)?, p(2)?).map_err(|e| e.to_string())?;
    let r = disk_triangle_report(&t).map_err(|e| e.to_string())?;
    Ok(Figure {
        svg: render_disk(&DiskFigure::Triangle(&t), &disk_style(), &[]),
        report: to_json(&r),
        summary: format!("{}; area {:.6}", r.summary(), r.area_numeric),
    })
}

pub fn tiling_figure(config: &str, rings: u32, edge_mm: f64, strategy: &str) -> Result<Figure, String> {
    if rings > MAX_DEMO_RINGS {
        return Err(format!("the demo draws at most {MAX_DEMO_RINGS} rings"));
    }
    let config: VertexConfig = config.parse().map_err(|e: noneuclid::Error| e.to_string())?;
    let strategy: Strategy = strategy.parse().map_err(|e: noneuclid::Error| e.to_string())?;
    let patch = generate_patch(&config, rings).map_err(|e| e.to_string())?;
    let net = unfold_net(&patch, edge_mm, strategy).map_err(|e| e.to_string())?;
    let r = tiling_report(&patch, &net).map_err(|e| e.to_string())?;
    let mut summary = format!(
        "{} faces, vertex sum {}° ({}°), {} overlapping pairs",
        r.counts.faces, r.vertex_angle_sum, r.vertex_angle_sum_mixed, r.overlap_count
    );
    if let Some(d) = r.total_defect {
        summary.push_str(&format!("; closed, total defect {d}°"));
    }
    Ok(Figure {
        svg: render_net(&net, &RenderStyle::default(), &[]),
        report: to_json(&r),
        summary,
    })
}

pub fn fold_figure(
    inner: f64,
    outer: f64,
    creases: usize,
    spacing: &str,
    fold_angle_deg: f64,
) -> Result<Figure, String> {
    let spacing: Spacing = spacing.parse().map_err(|e: noneuclid::Error| e.to_string())?;
    let t = make_annulus_template(inner, outer, creases, spacing).map_err(|e| e.to_string())?;
    let r = fold_report(&t, spacing, fold_angle_deg).map_err(|e| e.to_string())?;
    let summary = format!(
        "apex surplus {:.2}°; outermost crease moves from {:.1} mm to {:.1} mm",
        r.apex_surplus_deg,
        r.profile.material_radius.last().copied().unwrap_or(inner),
        r.profile.effective_radius.last().copied().unwrap_or(inner),
    );
    Ok(Figure {
        svg: render_fold(&t, &RenderStyle::default(), &[]),
        report: to_json(&r),
        summary,
    })
}

#[wasm_bindgen(js_name = diskTriangle)]
pub fn disk_triangle_js(coords: Vec<f64>) -> Result<Figure, JsError> {
    disk_triangle_figure(&coords).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = tilingNet)]
pub fn tiling_net_js(config: &str, rings: u32, edge_mm: f64, strategy: &str) -> Result<Figure, JsError> {
    tiling_figure(config, rings, edge_mm, strategy).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = foldTemplate)]
pub fn fold_template_js(
    inner: f64,
    outer: f64,
    creases: usize,
    spacing: &str,
    fold_angle_deg: f64,
) -> Result<Figure, JsError> {
    fold_figure(inner, outer, creases, spacing, fold_angle_deg).map_err(|e| JsError::new(&e))
}

/// Page geometry of the disk drawing: `[page, centre, radius]` in mm.
#[wasm_bindgen(js_name = diskFrame)]
pub fn disk_frame() -> Vec<f64> {
    vec![DISK_PAGE_MM, DISK_CENTER_MM, DISK_RADIUS_MM]
}
