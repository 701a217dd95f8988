//! Combinatorial growth of `(p,6,6)` patches.
//!
//! These tilings are truncations of the triangulation with `p` triangles at a
//! vertex: every p-gon is ringed by hexagons, and around each hexagon the
//! neighbours alternate p-gon, hexagon. Growth adds one face at a time along a
//! maximal run of boundary edges whose inner vertices already carry two faces,
//! so every completed vertex receives exactly one p-gon and two hexagons. A
//! face whose run covers the whole boundary closes the surface.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::{interior_angle, ExactAngle, VertexConfig};
use crate::error::{domain, Error, Result};

/// Growth stops with an error before a patch exceeds this many faces.
pub const MAX_FACES: usize = 200_000;

/// Role of a face in the tiling; for the honeycomb both classes are hexagons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceClass {
    /// The p-gon class: pentagons, heptagons, or the honeycomb's centre class.
    Polygon,
    Hexagon,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Face {
    pub id: usize,
    pub sides: u32,
    pub class: FaceClass,
    /// Face-graph distance from the central face.
    pub ring: u32,
    /// Vertex ids in counterclockwise order.
    pub vertices: Vec<usize>,
    /// Half-edge leaving `vertices[0]`; the face's half-edges are contiguous.
    pub half_edge: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfEdge {
    pub origin: usize,
    pub face: usize,
    pub next: usize,
    pub prev: usize,
    /// Opposite half-edge, absent on the patch boundary.
    pub twin: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: usize,
    /// Incident faces in counterclockwise order; on the boundary the list
    /// starts just after the gap.
    pub faces: Vec<usize>,
    pub interior: bool,
    pub angle_sum: ExactAngle,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TilingPatch {
    pub config: VertexConfig,
    pub rings: u32,
    pub faces: Vec<Face>,
    pub half_edges: Vec<HalfEdge>,
    pub vertices: Vec<Vertex>,
    pub closed: bool,
}

impl TilingPatch {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        let boundary = self.half_edges.iter().filter(|h| h.twin.is_none()).count();
        (self.half_edges.len() + boundary) / 2
    }

    /// `V − E + F`: 2 for a closed sphere, 1 for a disk-shaped patch.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Number of faces in each ring, starting with the central face.
    pub fn ring_counts(&self) -> Vec<usize> {
        let max = self.faces.iter().map(|f| f.ring).max().unwrap_or(0);
        let mut counts = vec![0; max as usize + 1];
        for f in &self.faces {
            counts[f.ring as usize] += 1;
        }
        counts
    }

    pub fn face_half_edges(&self, face: usize) -> std::ops::Range<usize> {
        let f = &self.faces[face];
        f.half_edge..f.half_edge + f.sides as usize
    }

    /// Neighbour across each edge of `face`, in edge order.
    pub fn face_neighbors(&self, face: usize) -> Vec<Option<usize>> {
        self.face_half_edges(face)
            .map(|h| self.half_edges[h].twin.map(|t| self.half_edges[t].face))
            .collect()
    }

    pub fn destination(&self, h: usize) -> usize {
        self.half_edges[self.half_edges[h].next].origin
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = &Vertex> {
        self.vertices.iter().filter(|v| v.interior)
    }

    /// Side counts of the faces around vertex `v`, in cyclic order.
    pub fn vertex_gons(&self, v: usize) -> Vec<u32> {
        self.vertices[v].faces.iter().map(|&f| self.faces[f].sides).collect()
    }
}

struct GrowFace {
    class: FaceClass,
    verts: Vec<usize>,
    /// Edge `i` borders a p-gon iff `i % 2 == parity` (hexagons only).
    parity: usize,
}

struct Builder {
    p: u32,
    faces: Vec<GrowFace>,
    edge_face: HashMap<(usize, usize), usize>,
    vertex_faces: Vec<Vec<usize>>,
    neighbors: Vec<Vec<usize>>,
}

impl Builder {
    fn new(p: u32) -> Self {
        let mut b = Builder {
            p,
            faces: Vec::new(),
            edge_face: HashMap::new(),
            vertex_faces: Vec::new(),
            neighbors: Vec::new(),
        };
        let verts: Vec<usize> = (0..p as usize).map(|_| b.fresh_vertex()).collect();
        b.insert(GrowFace {
            class: FaceClass::Polygon,
            verts,
            parity: 0,
        })
        .expect("first face cannot conflict");
        b
    }

    fn fresh_vertex(&mut self) -> usize {
        self.vertex_faces.push(Vec::new());
        self.neighbors.push(Vec::new());
        self.vertex_faces.len() - 1
    }

    fn sides(&self, class: FaceClass) -> usize {
        match class {
            FaceClass::Polygon => self.p as usize,
            FaceClass::Hexagon => 6,
        }
    }

    fn is_outside(&self, (a, b): (usize, usize)) -> bool {
        self.edge_face.contains_key(&(b, a)) && !self.edge_face.contains_key(&(a, b))
    }

    /// Outside half-edges in face-then-edge order.
    fn outside_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for f in &self.faces {
            let n = f.verts.len();
            for i in 0..n {
                let e = (f.verts[(i + 1) % n], f.verts[i]);
                if self.is_outside(e) {
                    out.push(e);
                }
            }
        }
        out
    }

    fn outside_from(&self, v: usize) -> Option<(usize, usize)> {
        self.neighbors[v].iter().map(|&w| (v, w)).find(|&e| self.is_outside(e))
    }

    fn outside_into(&self, v: usize) -> Option<(usize, usize)> {
        self.neighbors[v].iter().map(|&w| (w, v)).find(|&e| self.is_outside(e))
    }

    /// Class of the face across the edge `(b, a)` of an existing face, seen
    /// from the missing face that owns the outside half-edge `(a, b)`.
    fn class_across(&self, (a, b): (usize, usize)) -> FaceClass {
        let f = &self.faces[self.edge_face[&(b, a)]];
        match f.class {
            FaceClass::Polygon => FaceClass::Hexagon,
            FaceClass::Hexagon => {
                let i = f.verts.iter().position(|&v| v == b).expect("edge in face");
                if i % 2 == f.parity {
                    FaceClass::Polygon
                } else {
                    FaceClass::Hexagon
                }
            }
        }
    }

    /// Adds the missing face that owns outside half-edge `h`.
    fn fill(&mut self, h: (usize, usize)) -> Result<()> {
        let limit = self.p.max(6) as usize;
        let mut run = VecDeque::from([h]);
        let mut cycle = false;
        while self.vertex_faces[run.back().unwrap().1].len() == 2 {
            let next = self
                .outside_from(run.back().unwrap().1)
                .ok_or_else(|| broken("boundary walk lost its successor"))?;
            if next == run[0] {
                cycle = true;
                break;
            }
            run.push_back(next);
            if run.len() > limit {
                return Err(broken("boundary run longer than any face"));
            }
        }
        if !cycle {
            while self.vertex_faces[run[0].0].len() == 2 {
                let prev = self
                    .outside_into(run[0].0)
                    .ok_or_else(|| broken("boundary walk lost its predecessor"))?;
                run.push_front(prev);
                if run.len() > limit {
                    return Err(broken("boundary run longer than any face"));
                }
            }
        }

        let class = self.class_across(run[0]);
        let s = self.sides(class);
        let parity = match class {
            FaceClass::Polygon => 0,
            FaceClass::Hexagon => {
                let (a, b) = run[0];
                if self.faces[self.edge_face[&(b, a)]].class == FaceClass::Polygon {
                    0
                } else {
                    1
                }
            }
        };
        // With parity fixed by the first edge, every run edge must agree.
        for (j, &e) in run.iter().enumerate() {
            let want = match class {
                FaceClass::Polygon => FaceClass::Hexagon,
                FaceClass::Hexagon if j % 2 == parity => FaceClass::Polygon,
                FaceClass::Hexagon => FaceClass::Hexagon,
            };
            let seen = self.faces[self.edge_face[&(e.1, e.0)]].class;
            let seen_expects = self.class_across(e);
            if seen_expects != class || seen != want {
                return Err(broken("neighbouring faces disagree on the new face's type"));
            }
        }

        let m = run.len();
        let mut verts: Vec<usize> = run.iter().map(|e| e.0).collect();
        if cycle {
            if m != s {
                return Err(broken("closing face has the wrong number of sides"));
            }
        } else {
            if m >= s {
                return Err(broken("boundary run leaves no room for the new face"));
            }
            verts.push(run[m - 1].1);
            for _ in 0..s - m - 1 {
                let v = self.fresh_vertex();
                verts.push(v);
            }
        }
        self.insert(GrowFace { class, verts, parity })
    }

    fn insert(&mut self, face: GrowFace) -> Result<()> {
        let id = self.faces.len();
        let n = face.verts.len();
        for i in 0..n {
            let (a, b) = (face.verts[i], face.verts[(i + 1) % n]);
            if self.edge_face.insert((a, b), id).is_some() {
                return Err(broken("half-edge claimed by two faces"));
            }
            if !self.neighbors[a].contains(&b) {
                self.neighbors[a].push(b);
                self.neighbors[b].push(a);
            }
        }
        for &v in &face.verts {
            self.vertex_faces[v].push(id);
            let classes: Vec<FaceClass> = self.vertex_faces[v]
                .iter()
                .map(|&f| if f == id { face.class } else { self.faces[f].class })
                .collect();
            let polys = classes.iter().filter(|&&c| c == FaceClass::Polygon).count();
            if classes.len() > 3 || polys > 1 || (classes.len() == 3 && polys != 1) {
                return Err(broken("vertex received an invalid set of faces"));
            }
        }
        self.faces.push(face);
        Ok(())
    }

    /// Adds every face adjacent to the current patch.
    fn grow_layer(&mut self) -> Result<()> {
        for e in self.outside_edges() {
            if self.is_outside(e) {
                self.fill(e)?;
                if self.faces.len() > MAX_FACES {
                    return Err(domain(format!(
                        "patch would exceed {MAX_FACES} faces; request fewer rings"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn broken(msg: &str) -> Error {
    Error::Construction(msg.to_string())
}

fn supported_p(config: &VertexConfig) -> Result<u32> {
    let g = config.gons();
    let unsupported = || Error::UnsupportedConfig(config.to_string());
    if g.len() != 3 {
        return Err(unsupported());
    }
    let mut sorted = g.to_vec();
    sorted.sort_unstable();
    let p = match sorted.as_slice() {
        [5, 6, 6] => 5,
        [6, 6, 6] => 6,
        [6, 6, 7] => 7,
        _ => return Err(unsupported()),
    };
    Ok(p)
}

/// Grows the patch of all faces within `rings` steps of a central p-gon.
///
/// For `p = 5` the growth closes into the soccer ball once `rings` reaches
/// its face-graph radius; larger requests return the same closed patch.
/// Face ids are ordered by ring and then by growth order, so the output is
/// reproducible.
pub fn generate_patch(config: &VertexConfig, rings: u32) -> Result<TilingPatch> {
    let p = supported_p(config)?;
    let mut b = Builder::new(p);
    for _ in 0..rings {
        if b.outside_edges().is_empty() {
            break;
        }
        b.grow_layer()?;
    }

    // rings are face-graph distances; the grown patch contains the full ball
    let mut ring = vec![u32::MAX; b.faces.len()];
    ring[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(f) = queue.pop_front() {
        let n = b.faces[f].verts.len();
        for i in 0..n {
            let (u, v) = (b.faces[f].verts[i], b.faces[f].verts[(i + 1) % n]);
            if let Some(&g) = b.edge_face.get(&(v, u)) {
                if ring[g] == u32::MAX {
                    ring[g] = ring[f] + 1;
                    queue.push_back(g);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..b.faces.len()).filter(|&f| ring[f] <= rings).collect();
    order.sort_by_key(|&f| (ring[f], f));
    Ok(assemble(config.clone(), rings, &b, &order, &ring))
}

fn assemble(config: VertexConfig, rings: u32, b: &Builder, order: &[usize], ring: &[u32]) -> TilingPatch {
    let mut vid: HashMap<usize, usize> = HashMap::new();
    let mut faces = Vec::with_capacity(order.len());
    let mut half_edges: Vec<HalfEdge> = Vec::new();
    for (new_id, &old) in order.iter().enumerate() {
        let g = &b.faces[old];
        let verts: Vec<usize> = g
            .verts
            .iter()
            .map(|v| {
                let next = vid.len();
                *vid.entry(*v).or_insert(next)
            })
            .collect();
        let base = half_edges.len();
        let n = verts.len();
        for (i, &v) in verts.iter().enumerate() {
            half_edges.push(HalfEdge {
                origin: v,
                face: new_id,
                next: base + (i + 1) % n,
                prev: base + (i + n - 1) % n,
                twin: None,
            });
        }
        faces.push(Face {
            id: new_id,
            sides: n as u32,
            class: g.class,
            ring: ring[old],
            vertices: verts,
            half_edge: base,
        });
    }

    let by_ends: HashMap<(usize, usize), usize> = (0..half_edges.len())
        .map(|h| ((half_edges[h].origin, half_edges[half_edges[h].next].origin), h))
        .collect();
    for h in 0..half_edges.len() {
        let (a, b) = (half_edges[h].origin, half_edges[half_edges[h].next].origin);
        half_edges[h].twin = by_ends.get(&(b, a)).copied();
    }

    let mut outgoing = vec![usize::MAX; vid.len()];
    for (h, e) in half_edges.iter().enumerate() {
        if outgoing[e.origin] == usize::MAX {
            outgoing[e.origin] = h;
        }
    }
    let mut vertices = Vec::with_capacity(vid.len());
    for (v, &start) in outgoing.iter().enumerate() {
        // rewind clockwise to the boundary gap, if there is one
        let mut h = start;
        loop {
            match half_edges[h].twin {
                Some(t) if half_edges[t].next != start => h = half_edges[t].next,
                _ => break,
            }
        }
        let first = h;
        let mut around = Vec::new();
        loop {
            around.push(half_edges[h].face);
            match half_edges[half_edges[h].prev].twin {
                Some(t) if t != first => h = t,
                Some(_) => break,
                None => break,
            }
        }
        let interior = around.len() == config.gons().len() && half_edges[half_edges[first].prev].twin.is_some();
        let angle_sum = around
            .iter()
            .map(|&f| interior_angle(faces[f].sides).expect("polygon"))
            .sum();
        vertices.push(Vertex {
            id: v,
            faces: around,
            interior,
            angle_sum,
        });
    }
    let closed = half_edges.iter().all(|h| h.twin.is_some());
    TilingPatch {
        config,
        rings,
        faces,
        half_edges,
        vertices,
        closed,
    }
}

/// Sum of `360° − Σ` over all vertices of a closed patch.
pub fn total_defect(patch: &TilingPatch) -> Result<ExactAngle> {
    if !patch.closed {
        return Err(Error::NotClosed);
    }
    Ok(patch.vertices.iter().map(|v| ExactAngle::FULL_TURN - v.angle_sum).sum())
}
