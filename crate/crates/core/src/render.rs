//! SVG figures: disk constructions, sphere triangles, tiling nets and fold
//! templates.
//!
//! Every drawing is laid out in millimetres on a page from [`RenderStyle`];
//! templates that do not fit grow the page rather than scale, so printed
//! lengths stay true.

use serde::{Deserialize, Serialize};

use crate::disk::{DiskGeodesic, DiskPoint, DiskTriangle, HyperbolicCircle};
use crate::error::{domain, Result};
use crate::fold::{AnnulusTemplate, CreaseKind};
use crate::sphere::{sample_geodesic, SpherePoint, SphericalTriangle};
use crate::svg::{num, SvgDoc};
use crate::tiling::{EdgeKind, Net};
use crate::vector::{Vec2, Vec3};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StrokeWidths {
    pub cut: f64,
    pub fold: f64,
    pub mountain: f64,
    pub valley: f64,
    pub geodesic: f64,
    pub circle: f64,
}

impl Default for StrokeWidths {
    fn default() -> Self {
        StrokeWidths {
            cut: 0.3,
            fold: 0.2,
            mountain: 0.3,
            valley: 0.3,
            geodesic: 0.4,
            circle: 0.4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RenderStyle {
    pub page_width_mm: f64,
    pub page_height_mm: f64,
    pub margin_mm: f64,
    pub strokes: StrokeWidths,
}

impl Default for RenderStyle {
    /// A4 portrait with a 10 mm margin.
    fn default() -> Self {
        RenderStyle {
            page_width_mm: 210.0,
            page_height_mm: 297.0,
            margin_mm: 10.0,
            strokes: StrokeWidths::default(),
        }
    }
}

impl RenderStyle {
    pub fn validate(&self) -> Result<()> {
        let s = self.strokes;
        let dims = [
            ("page width", self.page_width_mm),
            ("page height", self.page_height_mm),
            ("margin", self.margin_mm),
            ("cut stroke", s.cut),
            ("fold stroke", s.fold),
            ("mountain stroke", s.mountain),
            ("valley stroke", s.valley),
            ("geodesic stroke", s.geodesic),
            ("circle stroke", s.circle),
        ];
        for (name, v) in dims {
            if !(v > 0.0) || !v.is_finite() {
                return Err(domain(format!("{name} must be positive, got {v}")));
            }
        }
        let half = 0.5 * self.page_width_mm.min(self.page_height_mm);
        if self.margin_mm >= half {
            return Err(domain(format!(
                "margin {} must be less than half the smaller page side ({half})",
                self.margin_mm
            )));
        }
        Ok(())
    }
}

fn stroke(color: &str, width: f64) -> String {
    format!("fill: none; stroke: {color}; stroke-width: {}", num(width))
}

fn with_meta(doc: &mut SvgDoc, meta: &[(String, String)]) {
    for (k, v) in meta {
        doc.meta(k, v);
    }
}

// ---------------------------------------------------------------------------
// Poincaré disk

/// A construction to draw inside the disk.
pub enum DiskFigure<'a> {
    Triangle(&'a DiskTriangle),
    Parallels {
        line: &'a DiskGeodesic,
        point: DiskPoint,
        parallels: &'a [DiskGeodesic],
    },
    Circle(&'a HyperbolicCircle),
}

struct DiskFrame {
    center: Vec2,
    scale: f64,
}

impl DiskFrame {
    fn map(&self, z: Vec2) -> Vec2 {
        Vec2::new(self.center.x + self.scale * z.x, self.center.y - self.scale * z.y)
    }

    /// Path along `g` from `p` to `q`, both on the geodesic (or its ends).
    fn segment(&self, g: &DiskGeodesic, p: Vec2, q: Vec2) -> String {
        let (a, b) = (self.map(p), self.map(q));
        match g {
            DiskGeodesic::Diameter { .. } => {
                format!("M {} {} L {} {}", num(a.x), num(a.y), num(b.x), num(b.y))
            }
            DiskGeodesic::Arc { center, radius } => {
                // the part inside the disk is the minor arc; on the y-down page a
                // clockwise turn in disk coordinates is SVG's positive sweep
                let sweep = u8::from((p - *center).cross(q - *center) < 0.0);
                let r = num(radius * self.scale);
                format!(
                    "M {} {} A {r} {r} 0 0 {sweep} {} {}",
                    num(a.x),
                    num(a.y),
                    num(b.x),
                    num(b.y)
                )
            }
        }
    }

    fn full(&self, g: &DiskGeodesic) -> String {
        let (e1, e2) = g.ideal_endpoints();
        self.segment(g, e1, e2)
    }
}

pub fn render_disk(fig: &DiskFigure<'_>, style: &RenderStyle, meta: &[(String, String)]) -> String {
    let (w, h) = (style.page_width_mm, style.page_height_mm);
    let frame = DiskFrame {
        center: Vec2::new(0.5 * w, 0.5 * h),
        scale: 0.5 * w.min(h) - style.margin_mm,
    };
    let title = match fig {
        DiskFigure::Triangle(_) => "Poincaré disk: geodesic triangle",
        DiskFigure::Parallels { .. } => "Poincaré disk: parallels through a point",
        DiskFigure::Circle(_) => "Poincaré disk: hyperbolic circle",
    };
    let mut doc = SvgDoc::new(w, h, title);
    with_meta(&mut doc, meta);
    let s = style.strokes;
    doc.class("boundary", stroke("#000000", s.cut));
    doc.class("geodesic", stroke("#1f4e9c", s.geodesic));
    doc.class("parallel", stroke("#b0361f", s.geodesic));
    doc.class("circle", stroke("#2a7a2a", s.circle));
    doc.class("point", "fill: #000000; stroke: none");
    doc.class("label", "font: 4px sans-serif; fill: #000000");
    doc.circle("boundary", frame.center, frame.scale);

    let dot = 0.8;
    match fig {
        DiskFigure::Triangle(t) => {
            let v = t.vertices();
            for (g, (p, q)) in t.sides().iter().zip([(1, 2), (2, 0), (0, 1)]) {
                doc.path("geodesic", &frame.segment(g, v[p].coords(), v[q].coords()));
            }
            for (p, name) in v.iter().zip(["A", "B", "C"]) {
                let at = frame.map(p.coords());
                doc.circle("point", at, dot);
                doc.text("label", at + Vec2::new(1.5, -1.5), name);
            }
        }
        DiskFigure::Parallels { line, point, parallels } => {
            doc.path("geodesic", &frame.full(line));
            for g in parallels.iter() {
                doc.path("parallel", &frame.full(g));
            }
            let at = frame.map(point.coords());
            doc.circle("point", at, dot);
            doc.text("label", at + Vec2::new(1.5, -1.5), "P");
        }
        DiskFigure::Circle(c) => {
            doc.circle(
                "circle",
                frame.map(c.euclidean_center),
                c.euclidean_radius * frame.scale,
            );
            doc.circle("point", frame.map(c.center.coords()), dot);
        }
    }
    doc.finish()
}

// ---------------------------------------------------------------------------
// Sphere

/// Orthographic view from the direction `(1, 1, 1)`, which centres the
/// octant triangle.
pub fn render_sphere(t: &SphericalTriangle, style: &RenderStyle, meta: &[(String, String)]) -> String {
    let (w, h) = (style.page_width_mm, style.page_height_mm);
    let center = Vec2::new(0.5 * w, 0.5 * h);
    let scale = 0.5 * w.min(h) - style.margin_mm;
    let view = Vec3::new(1.0, 1.0, 1.0).normalized();
    let up = Vec3::new(0.0, 0.0, 1.0);
    let north = (up - view * up.dot(view)).normalized();
    let east = north.cross(view);
    let project = |p: Vec3| Vec2::new(center.x + scale * p.dot(east), center.y - scale * p.dot(north));

    let mut doc = SvgDoc::new(w, h, "Unit sphere: geodesic triangle (orthographic view)");
    with_meta(&mut doc, meta);
    let s = style.strokes;
    doc.class("boundary", stroke("#000000", s.cut));
    doc.class("guide", format!("{}; stroke-dasharray: 1 1", stroke("#888888", s.fold)));
    doc.class("geodesic", stroke("#1f4e9c", s.geodesic));
    doc.class(
        "hidden",
        format!("{}; stroke-dasharray: 2 1.5", stroke("#1f4e9c", s.fold)),
    );
    doc.class("point", "fill: #000000; stroke: none");
    doc.class("label", "font: 4px sans-serif; fill: #000000");
    doc.circle("boundary", center, scale);

    // equator, front half only
    let equator: Vec<Vec3> = (0..=360)
        .map(|d| {
            let a = (d as f64).to_radians();
            Vec3::new(a.cos(), a.sin(), 0.0)
        })
        .collect();
    for (front, run) in visibility_runs(&equator, view) {
        if front {
            doc.polyline("guide", &run.iter().map(|&p| project(p)).collect::<Vec<_>>());
        }
    }

    let v = t.vertices();
    for (p, q) in [(0, 1), (1, 2), (2, 0)] {
        let pts: Vec<Vec3> = sample_geodesic(v[p], v[q], 96)
            .expect("validated triangle")
            .into_iter()
            .map(SpherePoint::vector)
            .collect();
        for (front, run) in visibility_runs(&pts, view) {
            let line: Vec<Vec2> = run.iter().map(|&p| project(p)).collect();
            doc.polyline(if front { "geodesic" } else { "hidden" }, &line);
        }
    }
    for (p, name) in v.iter().zip(["A", "B", "C"]) {
        let at = project(p.vector());
        doc.circle("point", at, 0.8);
        doc.text("label", at + Vec2::new(1.5, -1.5), name);
    }
    doc.finish()
}

/// Splits a sampled curve into maximal runs on one side of the horizon.
fn visibility_runs(pts: &[Vec3], view: Vec3) -> Vec<(bool, Vec<Vec3>)> {
    let mut runs: Vec<(bool, Vec<Vec3>)> = Vec::new();
    for &p in pts {
        let front = p.dot(view) >= 0.0;
        match runs.last_mut() {
            Some((f, run)) if *f == front => run.push(p),
            Some((_, run)) => {
                // share the crossing sample so the two runs meet
                let last = *run.last().unwrap();
                runs.push((front, vec![last, p]));
            }
            None => runs.push((front, vec![p])),
        }
    }
    runs
}

// ---------------------------------------------------------------------------
// Tiling net

pub fn render_net(net: &Net, style: &RenderStyle, meta: &[(String, String)]) -> String {
    let (lo, hi) = net.bounds();
    let m = style.margin_mm;
    let w = style.page_width_mm.max(hi.x - lo.x + 2.0 * m);
    let h = style.page_height_mm.max(hi.y - lo.y + 2.0 * m);
    // y grows downwards on the page; flipping keeps the net's handedness
    let map = |p: Vec2| Vec2::new(m + p.x - lo.x, m + hi.y - p.y);

    let mut doc = SvgDoc::new(w, h, "Polygon tiling net");
    with_meta(&mut doc, meta);
    let s = style.strokes;
    doc.class("face", "fill: none; stroke: none");
    doc.class("overlap", "fill: #d04030; fill-opacity: 0.25; stroke: none");
    doc.class("tab", "fill: #e8e8e8; stroke: none");
    doc.class("cut", stroke("#000000", s.cut));
    doc.class("fold", format!("{}; stroke-dasharray: 2 1", stroke("#000000", s.fold)));
    doc.class("label", "font: 3px sans-serif; fill: #000000; text-anchor: middle");

    let overlapped: std::collections::BTreeSet<usize> = net.overlaps.iter().flat_map(|&(a, b)| [a, b]).collect();
    for f in &net.faces {
        let pts: Vec<Vec2> = f.points.iter().map(|&p| map(p)).collect();
        let class = if overlapped.contains(&f.face) {
            "overlap"
        } else {
            "face"
        };
        doc.polygon(class, &pts);
    }
    for t in &net.tabs {
        let pts: Vec<Vec2> = t.points.iter().map(|&p| map(p)).collect();
        doc.polygon("tab", &pts);
        doc.polyline("cut", &[pts[1], pts[2], pts[3], pts[0]]);
    }
    for e in &net.edges {
        let class = match e.kind {
            EdgeKind::Cut => "cut",
            EdgeKind::Fold => "fold",
            // the tab hinge folds; the partner edge is cut free
            EdgeKind::Tab if net.tabs[e.tab.unwrap()].face == e.face => "fold",
            EdgeKind::Tab => "cut",
        };
        doc.line(class, map(e.a), map(e.b));
    }
    for e in net.edges.iter().filter(|e| e.kind == EdgeKind::Tab) {
        let tab = &net.tabs[e.tab.unwrap()];
        let mid = (e.a + e.b) * 0.5;
        let inward = (e.b - e.a).perp().normalized();
        let at = if tab.face == e.face {
            // centre of the tab
            (tab.points[0] + tab.points[1] + tab.points[2] + tab.points[3]) * 0.25
        } else {
            mid + inward * 3.0
        };
        doc.text("label", map(at), &tab.id.to_string());
    }
    doc.finish()
}

// ---------------------------------------------------------------------------
// Fold template

pub fn render_fold(t: &AnnulusTemplate, style: &RenderStyle, meta: &[(String, String)]) -> String {
    let m = style.margin_mm;
    let side = 2.0 * t.r_out() + 2.0 * m;
    let w = style.page_width_mm.max(side);
    let h = style.page_height_mm.max(side);
    let center = Vec2::new(0.5 * w, 0.5 * h);

    let mut doc = SvgDoc::new(w, h, "Curved-folding annulus template");
    with_meta(&mut doc, meta);
    let s = style.strokes;
    doc.class("cut", stroke("#000000", s.cut));
    doc.class(
        "mountain",
        format!("{}; stroke-dasharray: 4 2", stroke("#b0361f", s.mountain)),
    );
    doc.class(
        "valley",
        format!("{}; stroke-dasharray: 1 2 4 2", stroke("#1f4e9c", s.valley)),
    );
    doc.circle("cut", center, t.r_out());
    doc.circle("cut", center, t.r_in());
    for c in t.creases() {
        let class = match c.kind {
            CreaseKind::Mountain => "mountain",
            CreaseKind::Valley => "valley",
        };
        doc.circle(class, center, c.radius);
    }
    doc.finish()
}
