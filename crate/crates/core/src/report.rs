//! Typed reports behind the command-line and browser front ends.
//!
//! Every report serializes to pretty JSON that parses back to an equal value
//! and re-emits the same bytes. Angles in reports are degrees unless the field
//! name says otherwise.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io;

use serde::{de::DeserializeOwned, Deserialize, Serialize};
use serde_json::ser::{CompactFormatter, Formatter, PrettyFormatter};

use crate::crochet::{estimate_curvature, instructions, CrochetSchedule, CrochetSpec, Gauge};
use crate::curvature::{circle_area, circle_circumference, triangle_angle_sum, Curvature, CurvatureSign};
use crate::disk::{self, area_numeric, intersect, DiskGeodesic, DiskPoint, DiskTriangle, HyperbolicCircle};
use crate::error::{domain, Result};
use crate::fold::{
    apex_angle_surplus, crease_lengths, effective_profile, estimate_effective_curvature, AnnulusTemplate, Crease,
    Spacing,
};
use crate::sphere::{
    great_circle_through, intersect_great_circles, triangle_angles, triangle_area_excess, triangle_area_lhuilier,
    SpherePoint, SphericalTriangle,
};
use crate::svg::num;
use crate::tiling::{
    angle_defect, classify_vertex, total_defect, vertex_angle_sum, ExactAngle, FaceClass, GlueTab, Net, NetEdge,
    Strategy, TilingPatch, Vertex, VertexConfig,
};
use crate::vector::{Vec2, Vec3};

/// Pretty JSON with a trailing newline; `-0.0` is written as `0.0`.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, ZeroFolding(PrettyFormatter::new()));
    value.serialize(&mut ser).expect("reports contain only finite numbers");
    out.push(b'\n');
    String::from_utf8(out).expect("serde_json emits UTF-8")
}

/// Pretty printer that never emits a negative zero.
struct ZeroFolding(PrettyFormatter<'static>);

impl Formatter for ZeroFolding {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, v: f64) -> io::Result<()> {
        CompactFormatter.write_f64(w, if v == 0.0 { 0.0 } else { v })
    }
    fn write_f32<W: ?Sized + io::Write>(&mut self, w: &mut W, v: f32) -> io::Result<()> {
        CompactFormatter.write_f32(w, if v == 0.0 { 0.0 } else { v })
    }
    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }
    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }
    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }
    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }
    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }
    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }
    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }
    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }
    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

pub fn from_json<T: DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| domain(format!("malformed report: {e}")))
}

fn deg(x: f64) -> String {
    format!("{x:.6}°")
}

// ---------------------------------------------------------------------------
// Curvature laws

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeometryReport {
    pub curvature: f64,
    pub sign: CurvatureSign,
    pub geometry: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circle: Option<CircleLaw>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangle: Option<TriangleLaw>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircleLaw {
    pub radius: f64,
    pub circumference: f64,
    /// `2πr`, the flat circumference for comparison.
    pub flat_circumference: f64,
    /// `"< 2πr"`, `"= 2πr"` or `"> 2πr"`.
    pub comparison: String,
    pub area: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TriangleLaw {
    pub area: f64,
    pub angle_sum_deg: f64,
    pub angle_sum_rad: f64,
    /// Angle sum minus π, in radians.
    pub excess_rad: f64,
}

pub fn geometry_report(k: Curvature, radius: Option<f64>, area: Option<f64>) -> Result<GeometryReport> {
    if radius.is_none() && area.is_none() {
        return Err(domain("give a radius, an area, or both"));
    }
    let circle = radius
        .map(|r| -> Result<CircleLaw> {
            let c = circle_circumference(k, r)?;
            let flat = 2.0 * PI * r;
            let comparison = match k.sign() {
                CurvatureSign::Positive => "< 2πr",
                CurvatureSign::Zero => "= 2πr",
                CurvatureSign::Negative => "> 2πr",
            };
            Ok(CircleLaw {
                radius: r,
                circumference: c,
                flat_circumference: flat,
                comparison: comparison.to_string(),
                area: circle_area(k, r)?,
            })
        })
        .transpose()?;
    let triangle = area
        .map(|a| -> Result<TriangleLaw> {
            let s = triangle_angle_sum(k, a)?;
            Ok(TriangleLaw {
                area: a,
                angle_sum_deg: s.degrees(),
                angle_sum_rad: s.radians,
                excess_rad: s.excess(),
            })
        })
        .transpose()?;
    Ok(GeometryReport {
        curvature: k.value(),
        sign: k.sign(),
        geometry: k.sign().geometry().to_string(),
        circle,
        triangle,
    })
}

impl GeometryReport {
    pub fn to_text(&self) -> String {
        let mut s = format!("curvature K = {} ({}, {})\n", self.curvature, self.sign, self.geometry);
        if let Some(c) = &self.circle {
            let _ = writeln!(s, "circle of radius {}:", c.radius);
            let _ = writeln!(
                s,
                "  circumference {:.6} ({}, 2πr = {:.6})",
                c.circumference, c.comparison, c.flat_circumference
            );
            let _ = writeln!(s, "  area {:.6}", c.area);
        }
        if let Some(t) = &self.triangle {
            let rel = match self.sign {
                CurvatureSign::Positive => ">",
                CurvatureSign::Zero => "=",
                CurvatureSign::Negative => "<",
            };
            let _ = writeln!(s, "triangle of area {}:", t.area);
            let _ = writeln!(s, "  angle sum {} {rel} 180°", deg(t.angle_sum_deg));
        }
        s
    }
}

// ---------------------------------------------------------------------------
// Sphere

/// Latitude and longitude in degrees.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LatLon {
    pub lat: f64,
    pub lon: f64,
}

impl From<SpherePoint> for LatLon {
    fn from(p: SpherePoint) -> Self {
        let (lat, lon) = p.lat_lon_deg();
        // fold negative zero
        LatLon {
            lat: lat + 0.0,
            lon: lon + 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SphereTriangleReport {
    pub vertices: [LatLon; 3],
    pub angles_deg: [f64; 3],
    pub angle_sum_deg: f64,
    /// Arc lengths opposite each vertex on the unit sphere.
    pub sides: [f64; 3],
    /// Area as angle excess, `Σ − π`.
    pub area_excess: f64,
    /// Area from the side lengths alone.
    pub area_lhuilier: f64,
}

pub fn sphere_triangle_report(t: &SphericalTriangle) -> Result<SphereTriangleReport> {
    let (a, b, c) = triangle_angles(t);
    let (sa, sb, sc) = t.sides();
    Ok(SphereTriangleReport {
        vertices: t.vertices().map(LatLon::from),
        angles_deg: [a.to_degrees(), b.to_degrees(), c.to_degrees()],
        angle_sum_deg: (a + b + c).to_degrees(),
        sides: [sa, sb, sc],
        area_excess: triangle_area_excess((a, b, c))?,
        area_lhuilier: triangle_area_lhuilier(t),
    })
}

impl SphereTriangleReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (name, (v, a)) in ["A", "B", "C"].iter().zip(self.vertices.iter().zip(self.angles_deg)) {
            let _ = writeln!(s, "{name} = ({}, {}): angle {}", num(v.lat), num(v.lon), deg(a));
        }
        let _ = writeln!(s, "angle sum {} > 180°", deg(self.angle_sum_deg));
        let _ = writeln!(s, "area (angle excess) {:.9}", self.area_excess);
        let _ = writeln!(s, "area (L'Huilier)    {:.9}", self.area_lhuilier);
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SphereIntersectReport {
    pub first: [LatLon; 2],
    pub second: [LatLon; 2],
    /// The antipodal pair where the two great circles cross.
    pub points: [LatLon; 2],
    pub vectors: [Vec3; 2],
}

pub fn sphere_intersect_report(first: [SpherePoint; 2], second: [SpherePoint; 2]) -> Result<SphereIntersectReport> {
    let c1 = great_circle_through(first[0], first[1])?;
    let c2 = great_circle_through(second[0], second[1])?;
    let (p, q) = intersect_great_circles(c1, c2)?;
    Ok(SphereIntersectReport {
        first: first.map(LatLon::from),
        second: second.map(LatLon::from),
        points: [p.into(), q.into()],
        vectors: [p.vector(), q.vector()],
    })
}

impl SphereIntersectReport {
    pub fn to_text(&self) -> String {
        let [p, q] = self.points;
        format!(
            "great circles meet at ({}, {}) and its antipode ({}, {})\n",
            num(p.lat),
            num(p.lon),
            num(q.lat),
            num(q.lon)
        )
    }
}

// ---------------------------------------------------------------------------
// Poincaré disk

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiskTriangleReport {
    pub vertices: [Vec2; 3],
    pub angles_deg: [f64; 3],
    pub angle_sum_deg: f64,
    /// `π − Σ`, which equals the hyperbolic area.
    pub defect_rad: f64,
    /// Area by numerical integration of the hyperbolic area element.
    pub area_numeric: f64,
}

pub fn disk_triangle_report(t: &DiskTriangle) -> Result<DiskTriangleReport> {
    let (a, b, c) = disk::triangle_angles(t)?;
    let sum = a + b + c;
    Ok(DiskTriangleReport {
        vertices: t.vertices().map(DiskPoint::coords),
        angles_deg: [a.to_degrees(), b.to_degrees(), c.to_degrees()],
        angle_sum_deg: sum.to_degrees(),
        defect_rad: PI - sum,
        area_numeric: area_numeric(t)?,
    })
}

impl DiskTriangleReport {
    /// One-line summary of the angle sum.
    pub fn summary(&self) -> String {
        format!("angle sum {:.1}° < 180°", self.angle_sum_deg)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParallelReport {
    pub geodesic: DiskGeodesic,
    /// Distance of the point from this geodesic's circle (0 when it passes
    /// through the point).
    pub residual: f64,
    /// True when the geodesic never meets the base line inside the disk.
    pub disjoint: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiskParallelsReport {
    pub line: DiskGeodesic,
    pub point: Vec2,
    pub parallels: Vec<ParallelReport>,
}

pub fn disk_parallels_report(
    line: &DiskGeodesic,
    point: DiskPoint,
    parallels: &[DiskGeodesic],
) -> Result<DiskParallelsReport> {
    let parallels = parallels
        .iter()
        .map(|g| {
            Ok(ParallelReport {
                geodesic: *g,
                residual: g.residual(point.coords()),
                disjoint: intersect(line, g)?.is_none(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(DiskParallelsReport {
        line: *line,
        point: point.coords(),
        parallels,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiskCircleReport {
    pub center: Vec2,
    pub radius: f64,
    pub euclidean_center: Vec2,
    pub euclidean_radius: f64,
    pub circumference: f64,
}

pub fn disk_circle_report(c: &HyperbolicCircle) -> DiskCircleReport {
    DiskCircleReport {
        center: c.center.coords(),
        radius: c.radius,
        euclidean_center: c.euclidean_center,
        euclidean_radius: c.euclidean_radius,
        circumference: c.circumference(),
    }
}

// ---------------------------------------------------------------------------
// Tiling

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TilingCounts {
    pub faces: usize,
    pub vertices: usize,
    pub edges: usize,
    pub polygons: usize,
    pub hexagons: usize,
    /// `V − E + F`.
    pub euler_characteristic: i64,
    /// For a closed surface, whether `V − E + F = 2`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler_check: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TilingFace {
    pub id: usize,
    pub sides: u32,
    pub class: FaceClass,
    pub ring: u32,
    /// Placed corner coordinates in mm.
    pub points: Vec<Vec2>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TilingReport {
    pub config: VertexConfig,
    pub rings_requested: u32,
    pub closed: bool,
    /// Exact angle sum at a vertex of the configuration, in degrees.
    pub vertex_angle_sum: ExactAngle,
    /// The same sum as a mixed number, e.g. `368 4/7`.
    pub vertex_angle_sum_mixed: String,
    pub vertex_defect: ExactAngle,
    pub classification: CurvatureSign,
    /// Sum of all vertex defects of a closed surface.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_defect: Option<ExactAngle>,
    pub counts: TilingCounts,
    pub ring_counts: Vec<usize>,
    pub edge_mm: f64,
    pub tab_depth_mm: f64,
    pub strategy: Strategy,
    pub overlap_count: usize,
    pub overlaps: Vec<(usize, usize)>,
    pub faces: Vec<TilingFace>,
    pub edges: Vec<NetEdge>,
    pub tabs: Vec<GlueTab>,
    pub vertices: Vec<Vertex>,
}

pub fn tiling_report(patch: &TilingPatch, net: &Net) -> Result<TilingReport> {
    let sum = vertex_angle_sum(&patch.config);
    let count = |c: FaceClass| patch.faces.iter().filter(|f| f.class == c).count();
    let euler = patch.euler_characteristic();
    let faces = patch
        .faces
        .iter()
        .zip(&net.faces)
        .map(|(f, placed)| TilingFace {
            id: f.id,
            sides: f.sides,
            class: f.class,
            ring: f.ring,
            points: placed.points.clone(),
        })
        .collect();
    Ok(TilingReport {
        config: patch.config.clone(),
        rings_requested: patch.rings,
        closed: patch.closed,
        vertex_angle_sum: sum,
        vertex_angle_sum_mixed: sum.mixed(),
        vertex_defect: angle_defect(&patch.config),
        classification: classify_vertex(&patch.config),
        total_defect: if patch.closed { Some(total_defect(patch)?) } else { None },
        counts: TilingCounts {
            faces: patch.face_count(),
            vertices: patch.vertex_count(),
            edges: patch.edge_count(),
            polygons: count(FaceClass::Polygon),
            hexagons: count(FaceClass::Hexagon),
            euler_characteristic: euler,
            euler_check: patch.closed.then_some(euler == 2),
        },
        ring_counts: patch.ring_counts(),
        edge_mm: net.edge_mm,
        tab_depth_mm: net.tab_depth_mm,
        strategy: net.strategy,
        overlap_count: net.overlap_count(),
        overlaps: net.overlaps.clone(),
        faces,
        edges: net.edges.clone(),
        tabs: net.tabs.clone(),
        vertices: patch.vertices.clone(),
    })
}

impl TilingReport {
    pub fn to_text(&self) -> String {
        let c = &self.counts;
        let mut s = format!(
            "{} tiling: vertex angle sum {}° ({}°), defect {}°, {}\n",
            self.config, self.vertex_angle_sum, self.vertex_angle_sum_mixed, self.vertex_defect, self.classification
        );
        let _ = writeln!(
            s,
            "F = {}, V = {}, E = {}, V − E + F = {}",
            c.faces, c.vertices, c.edges, c.euler_characteristic
        );
        let _ = writeln!(s, "faces per ring: {:?}", self.ring_counts);
        if let Some(d) = self.total_defect {
            let _ = writeln!(s, "closed surface, total defect {d}°");
        }
        let _ = writeln!(s, "net overlaps: {}", self.overlap_count);
        s
    }
}

// ---------------------------------------------------------------------------
// Fold

/// Profile as parallel columns, one entry per crease.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileColumns {
    pub material_radius: Vec<f64>,
    pub effective_radius: Vec<f64>,
    pub circumference: Vec<f64>,
    /// Curvature estimate at interior creases; `null` at the two ends.
    #[serde(rename = "K_estimate")]
    pub k_estimate: Vec<Option<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FoldReport {
    pub inner_mm: f64,
    pub outer_mm: f64,
    pub spacing: Spacing,
    pub fold_angle_deg: f64,
    pub creases: Vec<Crease>,
    pub crease_lengths: Vec<f64>,
    pub apex_surplus_rad: f64,
    pub apex_surplus_deg: f64,
    pub profile: ProfileColumns,
}

pub fn fold_report(t: &AnnulusTemplate, spacing: Spacing, fold_angle_deg: f64) -> Result<FoldReport> {
    let phi = fold_angle_deg.to_radians();
    let p = effective_profile(t, phi)?;
    let surplus = apex_angle_surplus(phi)?;
    let n = p.records.len();
    let mut k_estimate = vec![None; n];
    if n >= 3 {
        for (slot, k) in k_estimate[1..n - 1].iter_mut().zip(estimate_effective_curvature(&p)?) {
            *slot = Some(k);
        }
    }
    Ok(FoldReport {
        inner_mm: t.r_in(),
        outer_mm: t.r_out(),
        spacing,
        fold_angle_deg,
        creases: t.creases().to_vec(),
        crease_lengths: crease_lengths(t),
        apex_surplus_rad: surplus,
        apex_surplus_deg: surplus.to_degrees(),
        profile: ProfileColumns {
            material_radius: p.records.iter().map(|r| r.material_radius).collect(),
            effective_radius: p.records.iter().map(|r| r.effective_radius).collect(),
            circumference: p.records.iter().map(|r| r.circumference).collect(),
            k_estimate,
        },
    })
}

// ---------------------------------------------------------------------------
// Crochet

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrochetReport {
    pub foundation: u64,
    pub increase_every: u64,
    pub rows: u32,
    pub gauge: Gauge,
    pub counts: Vec<u64>,
    /// Per row, the stitches of the previous row worked as increases.
    pub increases: Vec<Vec<u64>>,
    /// Estimated Gaussian curvature in 1/mm².
    pub curvature_per_mm2: f64,
    pub instructions: Vec<String>,
}

pub fn crochet_report(spec: &CrochetSpec, schedule: &CrochetSchedule) -> CrochetReport {
    CrochetReport {
        foundation: spec.foundation(),
        increase_every: spec.increase_every(),
        rows: spec.rows(),
        gauge: spec.gauge(),
        counts: schedule.counts.clone(),
        increases: schedule.increases.clone(),
        curvature_per_mm2: estimate_curvature(spec).value(),
        instructions: instructions(schedule),
    }
}

impl CrochetReport {
    /// The handout: one line per row, then the curvature estimate.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for line in &self.instructions {
            s.push_str(line);
            s.push('\n');
        }
        let _ = writeln!(
            s,
            "Gauge {} mm per stitch, {} mm per row: curvature K ≈ {:.6e} per mm²",
            self.gauge.stitch_width_mm, self.gauge.row_height_mm, self.curvature_per_mm2
        );
        s
    }
}
