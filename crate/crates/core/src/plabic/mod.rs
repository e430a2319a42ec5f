//! Plabic graphs as rotation systems.
//!
//! A [`PlabicMap`] stores half-edges paired by `twin`, a counterclockwise
//! rotation per vertex, vertex colours, and the clockwise list of boundary
//! vertices. The disk boundary itself is implicit: face traversal adds virtual
//! arcs between consecutive boundary vertices. When there are no boundary
//! vertices an anchor half-edge marks the face touching the disk boundary.

mod construct;
pub mod corpus;
mod faces;
mod iso;
pub mod moves;
mod quiver;
mod reduce;
mod skein;
mod split;
mod strands;
mod validate;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

pub use construct::construct_from_forest;
pub use faces::{Face, FaceData, FaceKind};
pub use quiver::Quiver;
pub use reduce::LeafSite;
pub use skein::{homfly_skein, skein_evaluate};
pub use split::SplitRoute;
pub use strands::StrandPermutation;
pub use validate::{Forbidden, ValidationReport, Violation};

use crate::forest::VertexId;

pub type HalfEdge = u32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlabicError {
    #[error("malformed plabic map: {0}")]
    Malformed(String),
    #[error("invalid plabic map: {0}")]
    Invalid(String),
    #[error("strand from boundary vertex {0} does not terminate")]
    NonTerminatingStrand(VertexId),
    #[error("move does not apply: {0}")]
    PatternMismatch(String),
    #[error("not simple: {0}")]
    NotSimple(String),
    #[error("face {0} is not a quiver leaf")]
    NotALeafFace(usize),
    #[error("no dividing edge found")]
    NotFound,
    #[error("quiver is not a forest")]
    NotAForestQuiver,
    #[error("skein value disagrees with the leaf recursion: {0}")]
    InternalMismatch(String),
    #[error("json: {0}")]
    Json(String),
    #[error(transparent)]
    Laurent(#[from] crate::laurent::LaurentError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
    Boundary,
}

impl Color {
    pub fn is_interior(self) -> bool {
        self != Color::Boundary
    }

    /// Black ↔ white; boundary stays.
    pub fn opposite(self) -> Self {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
            Color::Boundary => Color::Boundary,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct PlabicMap {
    color: BTreeMap<VertexId, Color>,
    rotation: BTreeMap<VertexId, Vec<HalfEdge>>,
    twin: BTreeMap<HalfEdge, HalfEdge>,
    vertex_of: BTreeMap<HalfEdge, VertexId>,
    boundary: Vec<VertexId>,
    outer: Option<HalfEdge>,
}

#[derive(Serialize, Deserialize)]
struct MapJson {
    vertices: Vec<VertexJson>,
    edges: Vec<[HalfEdge; 2]>,
    rotation: BTreeMap<String, Vec<HalfEdge>>,
    boundary: Vec<VertexId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    outer_face: Option<HalfEdge>,
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: VertexId,
    color: Color,
}

impl PlabicMap {
    /// Empty map (no vertices).
    pub fn empty() -> Self {
        Self {
            color: BTreeMap::new(),
            rotation: BTreeMap::new(),
            twin: BTreeMap::new(),
            vertex_of: BTreeMap::new(),
            boundary: Vec::new(),
            outer: None,
        }
    }

    /// Checks only the combinatorial structure (pairing, rotations).
    /// Plabic-specific conditions are left to [`PlabicMap::validate`].
    pub fn from_parts(
        colors: impl IntoIterator<Item = (VertexId, Color)>,
        edges: impl IntoIterator<Item = (HalfEdge, HalfEdge)>,
        rotation: BTreeMap<VertexId, Vec<HalfEdge>>,
        boundary: Vec<VertexId>,
        outer: Option<HalfEdge>,
    ) -> Result<Self, PlabicError> {
        let bad = |m: String| Err(PlabicError::Malformed(m));
        let mut color = BTreeMap::new();
        for (v, c) in colors {
            if color.insert(v, c).is_some() {
                return bad(format!("vertex {v} listed twice"));
            }
        }
        let mut twin = BTreeMap::new();
        for (h, k) in edges {
            if h == k {
                return bad(format!("half-edge {h} paired with itself"));
            }
            if twin.insert(h, k).is_some() || twin.insert(k, h).is_some() {
                return bad(format!("half-edge {h} or {k} used by two edges"));
            }
        }
        let mut vertex_of = BTreeMap::new();
        for (v, hs) in &rotation {
            if !color.contains_key(v) {
                return bad(format!("rotation for unknown vertex {v}"));
            }
            for h in hs {
                if !twin.contains_key(h) {
                    return bad(format!("half-edge {h} at vertex {v} is not in any edge"));
                }
                if vertex_of.insert(*h, *v).is_some() {
                    return bad(format!("half-edge {h} appears in two rotations"));
                }
            }
        }
        if let Some(h) = twin.keys().find(|h| !vertex_of.contains_key(h)) {
            return bad(format!("half-edge {h} is not in any rotation"));
        }
        let mut rotation = rotation;
        for v in color.keys() {
            rotation.entry(*v).or_default();
        }
        let mut seen = BTreeSet::new();
        for b in &boundary {
            if !color.contains_key(b) {
                return bad(format!("boundary lists unknown vertex {b}"));
            }
            if !seen.insert(*b) {
                return bad(format!("boundary lists {b} twice"));
            }
        }
        if let Some(h) = outer {
            if !twin.contains_key(&h) {
                return bad(format!("outer_face half-edge {h} does not exist"));
            }
        }
        Ok(Self { color, rotation, twin, vertex_of, boundary, outer })
    }

    pub fn from_json(s: &str) -> Result<Self, PlabicError> {
        let raw: MapJson = serde_json::from_str(s).map_err(|e| PlabicError::Json(e.to_string()))?;
        let mut rotation = BTreeMap::new();
        for (k, hs) in raw.rotation {
            let v: VertexId = k
                .parse()
                .map_err(|_| PlabicError::Json(format!("rotation key {k:?} is not a vertex id")))?;
            rotation.insert(v, hs);
        }
        Self::from_parts(
            raw.vertices.into_iter().map(|v| (v.id, v.color)),
            raw.edges.into_iter().map(|[a, b]| (a, b)),
            rotation,
            raw.boundary,
            raw.outer_face,
        )
    }

    pub fn to_json(&self) -> String {
        let raw = MapJson {
            vertices: self.color.iter().map(|(&id, &color)| VertexJson { id, color }).collect(),
            edges: self.edges().map(|(a, b)| [a, b]).collect(),
            rotation: self.rotation.iter().map(|(v, hs)| (v.to_string(), hs.clone())).collect(),
            boundary: self.boundary.clone(),
            outer_face: if self.boundary.is_empty() { self.outer } else { None },
        };
        serde_json::to_string_pretty(&raw).expect("map serializes")
    }

    // -- queries ----------------------------------------------------------

    pub fn vertices(&self) -> impl Iterator<Item = (VertexId, Color)> + '_ {
        self.color.iter().map(|(v, c)| (*v, *c))
    }

    pub fn vertex_count(&self) -> usize {
        self.color.len()
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.color.iter().filter(|(_, c)| c.is_interior()).map(|(v, _)| *v)
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.color.contains_key(&v)
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.color[&v]
    }

    pub fn rotation(&self, v: VertexId) -> &[HalfEdge] {
        self.rotation.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation(v).len()
    }

    pub fn half_edges(&self) -> impl Iterator<Item = HalfEdge> + '_ {
        self.twin.keys().copied()
    }

    pub fn has_half_edge(&self, h: HalfEdge) -> bool {
        self.twin.contains_key(&h)
    }

    /// Each edge once, as `(h, twin)` with `h < twin`.
    pub fn edges(&self) -> impl Iterator<Item = (HalfEdge, HalfEdge)> + '_ {
        self.twin.iter().filter(|(a, b)| a < b).map(|(a, b)| (*a, *b))
    }

    pub fn edge_count(&self) -> usize {
        self.twin.len() / 2
    }

    pub fn twin(&self, h: HalfEdge) -> HalfEdge {
        self.twin[&h]
    }

    pub fn vertex_of(&self, h: HalfEdge) -> VertexId {
        self.vertex_of[&h]
    }

    /// Vertex at the far end of `h`.
    pub fn head(&self, h: HalfEdge) -> VertexId {
        self.vertex_of(self.twin(h))
    }

    fn position(&self, h: HalfEdge) -> (VertexId, usize) {
        let v = self.vertex_of(h);
        let i = self.rotation[&v].iter().position(|x| *x == h).expect("rotation lists h");
        (v, i)
    }

    pub fn next_ccw(&self, h: HalfEdge) -> HalfEdge {
        let (v, i) = self.position(h);
        let r = &self.rotation[&v];
        r[(i + 1) % r.len()]
    }

    pub fn prev_ccw(&self, h: HalfEdge) -> HalfEdge {
        let (v, i) = self.position(h);
        let r = &self.rotation[&v];
        r[(i + r.len() - 1) % r.len()]
    }

    /// Clockwise boundary list; label `k` is index `k − 1`.
    pub fn boundary(&self) -> &[VertexId] {
        &self.boundary
    }

    /// Anchor for the disk-boundary face when there are no boundary vertices.
    pub fn outer_anchor(&self) -> Option<HalfEdge> {
        if self.boundary.is_empty() {
            self.outer
        } else {
            None
        }
    }

    pub fn is_loop(&self, h: HalfEdge) -> bool {
        self.vertex_of(h) == self.head(h)
    }

    /// Vertex sets of the connected components, by least id.
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &s in self.color.keys() {
            if !seen.insert(s) {
                continue;
            }
            let mut comp = BTreeSet::from([s]);
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &h in self.rotation(x) {
                    let y = self.head(h);
                    if seen.insert(y) {
                        comp.insert(y);
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    // -- low-level editing (callers keep the map consistent) --------------

    fn fresh_vertex(&self) -> VertexId {
        self.color.keys().next_back().map_or(0, |v| v + 1)
    }

    fn fresh_half_edge(&self) -> HalfEdge {
        self.twin.keys().next_back().map_or(0, |h| h + 1)
    }

    pub(crate) fn new_vertex(&mut self, c: Color) -> VertexId {
        let v = self.fresh_vertex();
        self.color.insert(v, c);
        self.rotation.insert(v, Vec::new());
        v
    }

    /// New edge `u — v`; the half-edges are not yet placed in rotations.
    pub(crate) fn new_edge_unplaced(&mut self, u: VertexId, v: VertexId) -> (HalfEdge, HalfEdge) {
        let a = self.fresh_half_edge();
        let b = a + 1;
        self.twin.insert(a, b);
        self.twin.insert(b, a);
        self.vertex_of.insert(a, u);
        self.vertex_of.insert(b, v);
        (a, b)
    }

    pub(crate) fn set_rotation(&mut self, v: VertexId, hs: Vec<HalfEdge>) {
        for h in &hs {
            self.vertex_of.insert(*h, v);
        }
        self.rotation.insert(v, hs);
    }

    pub(crate) fn set_boundary(&mut self, b: Vec<VertexId>) {
        self.boundary = b;
    }

    /// Removes an edge (both half-edges) from rotations and maps.
    pub(crate) fn drop_edge(&mut self, h: HalfEdge) {
        let t = self.twin(h);
        for x in [h, t] {
            let v = self.vertex_of(x);
            self.rotation.get_mut(&v).expect("vertex").retain(|y| *y != x);
            self.vertex_of.remove(&x);
            self.twin.remove(&x);
        }
    }

    /// Removes a vertex together with its edges.
    pub(crate) fn drop_vertex(&mut self, v: VertexId) {
        while let Some(&h) = self.rotation(v).first() {
            self.drop_edge(h);
        }
        self.rotation.remove(&v);
        self.color.remove(&v);
        self.boundary.retain(|b| *b != v);
    }

    /// After an edit, keep a usable outer-face anchor when the boundary is
    /// empty: any surviving half-edge that bordered a boundary face before
    /// the edit still borders the face touching the disk boundary.
    pub(crate) fn repair_outer(&mut self, before: &PlabicMap) {
        if !self.boundary.is_empty() {
            self.outer = None;
            return;
        }
        if self.outer.is_some_and(|h| self.has_half_edge(h)) {
            return;
        }
        let fd = before.faces();
        self.outer = fd
            .faces
            .iter()
            .filter(|f| f.kind == FaceKind::Boundary)
            .flat_map(|f| f.walk.iter().copied())
            .filter(|h| self.has_half_edge(*h))
            .min();
    }

    pub(crate) fn set_outer(&mut self, h: Option<HalfEdge>) {
        self.outer = h;
    }

    /// Sub-map induced on `keep`; edges leaving `keep` are dropped.
    pub fn induced_submap(&self, keep: &BTreeSet<VertexId>) -> PlabicMap {
        let mut out = self.clone();
        let drop: Vec<VertexId> = self.color.keys().filter(|v| !keep.contains(v)).copied().collect();
        for v in drop {
            out.drop_vertex(v);
        }
        out.outer = self.outer.filter(|h| out.has_half_edge(*h));
        out.repair_outer(self);
        out
    }

    /// Deletes vertices (and their edges), then boundary vertices left
    /// without an edge.
    pub fn delete_vertices(&self, vs: &[VertexId]) -> Result<PlabicMap, PlabicError> {
        let mut out = self.clone();
        for &v in vs {
            if !out.contains_vertex(v) {
                return Err(PlabicError::PatternMismatch(format!("no vertex {v}")));
            }
            out.drop_vertex(v);
        }
        let stranded: Vec<VertexId> = out
            .boundary
            .iter()
            .copied()
            .filter(|b| out.degree(*b) == 0 && self.degree(*b) > 0)
            .collect();
        for b in stranded {
            out.drop_vertex(b);
        }
        out.repair_outer(self);
        Ok(out)
    }

    /// Deletes one edge.
    pub fn delete_edge(&self, h: HalfEdge) -> Result<PlabicMap, PlabicError> {
        if !self.has_half_edge(h) {
            return Err(PlabicError::PatternMismatch(format!("no half-edge {h}")));
        }
        let mut out = self.clone();
        out.drop_edge(h);
        out.repair_outer(self);
        Ok(out)
    }
}

impl fmt::Debug for PlabicMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PlabicMap {{ boundary: {:?}, outer: {:?}", self.boundary, self.outer_anchor())?;
        for (v, c) in &self.color {
            let around: Vec<String> = self
                .rotation(*v)
                .iter()
                .map(|h| format!("{h}->{}", self.head(*h)))
                .collect();
            writeln!(f, "  {v} {c:?}: [{}]", around.join(", "))?;
        }
        write!(f, "}}")
    }
}
