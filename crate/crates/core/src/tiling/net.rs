//! Unfolding a patch into a printable net of flat regular polygons.
//!
//! A spanning tree of the face-adjacency graph is laid out edge to edge in the
//! plane. Tree edges become shared fold lines; every other interior edge gets
//! a glue tab on the face with the smaller id. Wherever the vertex angles do
//! not sum to 360° the layout cannot stay flat, and overlapping polygons are
//! reported rather than repaired.

use std::collections::VecDeque;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::TilingPatch;
use crate::error::{domain, Error, Result};
use crate::vector::Vec2;

pub const DEFAULT_TAB_DEPTH_MM: f64 = 8.0;

/// Separation below which two polygons count as touching, not overlapping.
pub const OVERLAP_TOL_MM: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    #[default]
    Bfs,
    Dfs,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Bfs => "bfs",
            Strategy::Dfs => "dfs",
        })
    }
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bfs" | "bfs-tree" => Ok(Strategy::Bfs),
            "dfs" | "dfs-tree" => Ok(Strategy::Dfs),
            _ => Err(domain(format!("unknown net strategy {s:?}; expected bfs or dfs"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    /// Outer boundary of the patch.
    Cut,
    /// Spanning-tree edge shared by two placed polygons.
    Fold,
    /// One side of an edge that is closed with a glue tab.
    Tab,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlacedFace {
    pub face: usize,
    pub sides: u32,
    /// Corner coordinates in mm, counterclockwise, in the face's vertex order.
    pub points: Vec<Vec2>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetEdge {
    pub kind: EdgeKind,
    pub face: usize,
    pub neighbor: Option<usize>,
    /// Glue-tab pair id, shared by both sides of a tabbed edge.
    pub tab: Option<usize>,
    pub a: Vec2,
    pub b: Vec2,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GlueTab {
    pub id: usize,
    /// Face carrying the tab (the smaller id of the pair).
    pub face: usize,
    pub partner: usize,
    /// Trapezoid corners: the hinge edge first, then the outer edge.
    pub points: [Vec2; 4],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Net {
    pub edge_mm: f64,
    pub tab_depth_mm: f64,
    pub strategy: Strategy,
    /// Placed polygons, indexed by face id.
    pub faces: Vec<PlacedFace>,
    pub edges: Vec<NetEdge>,
    pub tabs: Vec<GlueTab>,
    /// Pairs of face ids whose interiors intersect, sorted.
    pub overlaps: Vec<(usize, usize)>,
}

impl Net {
    pub fn overlap_count(&self) -> usize {
        self.overlaps.len()
    }

    /// Axis-aligned bounds `(min, max)` of polygons and tabs.
    pub fn bounds(&self) -> (Vec2, Vec2) {
        let pts = self
            .faces
            .iter()
            .flat_map(|f| f.points.iter())
            .chain(self.tabs.iter().flat_map(|t| t.points.iter()));
        let mut lo = Vec2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in pts {
            lo = Vec2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Vec2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        (lo, hi)
    }
}

/// Unfolds with the default tab depth.
pub fn unfold_net(patch: &TilingPatch, edge_mm: f64, strategy: Strategy) -> Result<Net> {
    unfold_net_with_tabs(patch, edge_mm, strategy, DEFAULT_TAB_DEPTH_MM)
}

pub fn unfold_net_with_tabs(patch: &TilingPatch, edge_mm: f64, strategy: Strategy, tab_depth_mm: f64) -> Result<Net> {
    if !(edge_mm > 0.0) || !edge_mm.is_finite() {
        return Err(domain(format!("edge length must be positive, got {edge_mm}")));
    }
    if !(tab_depth_mm >= 0.0) || !tab_depth_mm.is_finite() {
        return Err(domain(format!("tab depth must be non-negative, got {tab_depth_mm}")));
    }
    if patch.faces.is_empty() {
        return Err(domain("patch has no faces"));
    }

    let n = patch.faces.len();
    let mut points: Vec<Option<Vec<Vec2>>> = vec![None; n];
    let mut in_tree = vec![false; patch.half_edges.len()];
    points[0] = Some(regular_polygon(
        Vec2::new(0.0, 0.0),
        Vec2::new(edge_mm, 0.0),
        0,
        patch.faces[0].sides,
    ));

    let attach = |h: usize, points: &mut Vec<Option<Vec<Vec2>>>, in_tree: &mut Vec<bool>| -> Option<usize> {
        let t = patch.half_edges[h].twin?;
        let g = patch.half_edges[t].face;
        if points[g].is_some() {
            return None;
        }
        let f = patch.half_edges[h].face;
        let i = h - patch.faces[f].half_edge;
        let pf = points[f].as_ref().expect("parent placed");
        let (u, v) = (pf[i], pf[(i + 1) % pf.len()]);
        let k = t - patch.faces[g].half_edge;
        // the child walks the shared edge backwards: its corner k sits on v
        points[g] = Some(regular_polygon(v, u, k, patch.faces[g].sides));
        in_tree[h] = true;
        in_tree[t] = true;
        Some(g)
    };

    match strategy {
        Strategy::Bfs => {
            let mut queue = VecDeque::from([0usize]);
            while let Some(f) = queue.pop_front() {
                for h in patch.face_half_edges(f) {
                    if let Some(g) = attach(h, &mut points, &mut in_tree) {
                        queue.push_back(g);
                    }
                }
            }
        }
        Strategy::Dfs => {
            let mut stack = vec![(0usize, 0usize)];
            while let Some(&mut (f, ref mut next)) = stack.last_mut() {
                let range = patch.face_half_edges(f);
                if *next == range.len() {
                    stack.pop();
                    continue;
                }
                let h = range.start + *next;
                *next += 1;
                if let Some(g) = attach(h, &mut points, &mut in_tree) {
                    stack.push((g, 0));
                }
            }
        }
    }

    let faces: Vec<PlacedFace> = points
        .into_iter()
        .enumerate()
        .map(|(id, p)| PlacedFace {
            face: id,
            sides: patch.faces[id].sides,
            points: p.expect("patch faces form a connected graph"),
        })
        .collect();

    let mut edges = Vec::new();
    let mut tabs = Vec::new();
    let mut tab_of_edge = vec![None; patch.half_edges.len()];
    for (f, face) in faces.iter().enumerate() {
        let pts = &face.points;
        for (i, h) in patch.face_half_edges(f).enumerate() {
            let (a, b) = (pts[i], pts[(i + 1) % pts.len()]);
            let twin = patch.half_edges[h].twin;
            let neighbor = twin.map(|t| patch.half_edges[t].face);
            match (twin, neighbor) {
                (None, _) => edges.push(NetEdge {
                    kind: EdgeKind::Cut,
                    face: f,
                    neighbor: None,
                    tab: None,
                    a,
                    b,
                }),
                (Some(_), Some(g)) if in_tree[h] => {
                    if f < g {
                        edges.push(NetEdge {
                            kind: EdgeKind::Fold,
                            face: f,
                            neighbor: Some(g),
                            tab: None,
                            a,
                            b,
                        });
                    }
                }
                (Some(t), Some(g)) => {
                    let id = if f < g {
                        let id = tabs.len();
                        tabs.push(GlueTab {
                            id,
                            face: f,
                            partner: g,
                            points: tab_shape(a, b, tab_depth_mm),
                        });
                        tab_of_edge[t] = Some(id);
                        id
                    } else {
                        tab_of_edge[h].expect("smaller face assigned the tab first")
                    };
                    edges.push(NetEdge {
                        kind: EdgeKind::Tab,
                        face: f,
                        neighbor: Some(g),
                        tab: Some(id),
                        a,
                        b,
                    });
                }
                (Some(_), None) => unreachable!("twin always has a face"),
            }
        }
    }

    let overlaps = find_overlaps(&faces);
    Ok(Net {
        edge_mm,
        tab_depth_mm,
        strategy,
        faces,
        edges,
        tabs,
        overlaps,
    })
}

/// Regular `s`-gon whose corners `k` and `k + 1` are `p` and `q`.
fn regular_polygon(p: Vec2, q: Vec2, k: usize, s: u32) -> Vec<Vec2> {
    let s = s as usize;
    let turn = 2.0 * PI / s as f64;
    let mut pts = vec![Vec2::default(); s];
    pts[k] = p;
    pts[(k + 1) % s] = q;
    let step = q - p;
    for j in 2..s {
        let prev = pts[(k + j - 1) % s];
        pts[(k + j) % s] = prev + step.rotate(turn * (j - 1) as f64);
    }
    pts
}

/// Trapezoid hinged on `a → b`, on the right (outer) side of a
/// counterclockwise polygon edge, with 45° shoulders.
fn tab_shape(a: Vec2, b: Vec2, depth: f64) -> [Vec2; 4] {
    let d = b - a;
    let len = d.norm();
    let dir = d * (1.0 / len);
    let out = -dir.perp();
    let inset = depth.min(0.25 * len);
    [a, b, b - dir * inset + out * depth, a + dir * inset + out * depth]
}

fn find_overlaps(faces: &[PlacedFace]) -> Vec<(usize, usize)> {
    let boxes: Vec<(Vec2, Vec2)> = faces
        .iter()
        .map(|f| {
            f.points.iter().fold(
                (
                    Vec2::new(f64::INFINITY, f64::INFINITY),
                    Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
                ),
                |(lo, hi), p| {
                    (
                        Vec2::new(lo.x.min(p.x), lo.y.min(p.y)),
                        Vec2::new(hi.x.max(p.x), hi.y.max(p.y)),
                    )
                },
            )
        })
        .collect();
    let mut order: Vec<usize> = (0..faces.len()).collect();
    order.sort_by(|&i, &j| boxes[i].0.x.total_cmp(&boxes[j].0.x));
    let mut out = Vec::new();
    for (oi, &i) in order.iter().enumerate() {
        for &j in &order[oi + 1..] {
            if boxes[j].0.x >= boxes[i].1.x - OVERLAP_TOL_MM {
                break;
            }
            let (bi, bj) = (boxes[i], boxes[j]);
            if bj.0.y >= bi.1.y - OVERLAP_TOL_MM || bi.0.y >= bj.1.y - OVERLAP_TOL_MM {
                continue;
            }
            if convex_interiors_intersect(&faces[i].points, &faces[j].points) {
                out.push((i.min(j), i.max(j)));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Separating-axis test for convex polygons; contact along an edge or at a
/// corner, within [`OVERLAP_TOL_MM`], does not count.
pub(crate) fn convex_interiors_intersect(p: &[Vec2], q: &[Vec2]) -> bool {
    for poly in [p, q] {
        for i in 0..poly.len() {
            let e = poly[(i + 1) % poly.len()] - poly[i];
            let axis = e.perp() * (1.0 / e.norm());
            let (pmin, pmax) = project(p, axis);
            let (qmin, qmax) = project(q, axis);
            if pmax.min(qmax) - pmin.max(qmin) <= OVERLAP_TOL_MM {
                return false;
            }
        }
    }
    true
}

fn project(poly: &[Vec2], axis: Vec2) -> (f64, f64) {
    poly.iter()
        .map(|p| p.dot(axis))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), d| (lo.min(d), hi.max(d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::generate_patch;

    fn square(x: f64, y: f64, s: f64) -> Vec<Vec2> {
        vec![
            Vec2::new(x, y),
            Vec2::new(x + s, y),
            Vec2::new(x + s, y + s),
            Vec2::new(x, y + s),
        ]
    }

    #[test]
    fn separating_axis_cases() {
        let a = square(0.0, 0.0, 1.0);
        assert!(convex_interiors_intersect(&a, &square(0.5, 0.5, 1.0)));
        assert!(!convex_interiors_intersect(&a, &square(1.0, 0.0, 1.0)), "shared edge");
        assert!(!convex_interiors_intersect(&a, &square(1.0, 1.0, 1.0)), "shared corner");
        assert!(!convex_interiors_intersect(&a, &square(3.0, 0.0, 1.0)));
        assert!(convex_interiors_intersect(&a, &square(0.25, 0.25, 0.5)), "containment");
    }

    #[test]
    fn regular_polygon_has_equal_sides_and_closes() {
        for s in 3..=9 {
            let pts = regular_polygon(Vec2::new(1.0, 2.0), Vec2::new(4.0, 6.0), s as usize - 1, s);
            for i in 0..s as usize {
                let d = pts[i].distance(pts[(i + 1) % s as usize]);
                assert!((d - 5.0).abs() < 1e-12);
            }
            // counterclockwise: positive signed area
            let area: f64 = (0..s as usize).map(|i| pts[i].cross(pts[(i + 1) % s as usize])).sum();
            assert!(area > 0.0);
        }
    }

    #[test]
    fn single_hexagon_net() {
        let p = generate_patch(&"6,6,6".parse().unwrap(), 0).unwrap();
        let net = unfold_net(&p, 30.0, Strategy::Bfs).unwrap();
        assert_eq!(net.faces.len(), 1);
        assert!(net.tabs.is_empty() && net.overlaps.is_empty());
        assert_eq!(net.edges.len(), 6);
        assert!(net.edges.iter().all(|e| e.kind == EdgeKind::Cut));
    }

    #[test]
    fn rejects_bad_edge_length() {
        let p = generate_patch(&"6,6,6".parse().unwrap(), 0).unwrap();
        assert!(unfold_net(&p, 0.0, Strategy::Bfs).is_err());
        assert!(unfold_net(&p, f64::NAN, Strategy::Dfs).is_err());
        assert!(unfold_net_with_tabs(&p, 10.0, Strategy::Dfs, -1.0).is_err());
    }

    #[test]
    fn strategy_parsing() {
        assert_eq!("bfs".parse::<Strategy>().unwrap(), Strategy::Bfs);
        assert_eq!("dfs-tree".parse::<Strategy>().unwrap(), Strategy::Dfs);
        assert!("random".parse::<Strategy>().is_err());
    }
}
