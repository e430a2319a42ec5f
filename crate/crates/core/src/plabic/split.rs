use std::collections::BTreeSet;

use super::{FaceKind, HalfEdge, PlabicError, PlabicMap};
use crate::forest::VertexId;

/// Which moves a split needed before a dividing edge appeared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitRoute {
    /// The map was reduced or trivalentized first.
    pub rewritten: bool,
    /// A vertex was pulled apart to create the edge.
    pub uncontracted: bool,
    /// Empty loops were moved out of interior faces.
    pub loops_moved: bool,
}

impl PlabicMap {
    /// Splits a map whose quiver is disconnected along an edge with boundary
    /// faces on both sides whose removal separates interior faces. Falls back
    /// to uncontracting a vertex, or first pushing an empty loop out of an
    /// interior face, when no such edge exists yet. Same-colour contraction
    /// is tried too, since it can merge the vertices a split has to pull apart.
    pub fn split_at_dividing_edge(&self) -> Result<(PlabicMap, PlabicMap), PlabicError> {
        self.split_with_route().map(|(a, b, _)| (a, b))
    }

    /// Like [`PlabicMap::split_at_dividing_edge`], also reporting how the
    /// dividing edge was found.
    pub fn split_with_route(&self) -> Result<(PlabicMap, PlabicMap, SplitRoute), PlabicError> {
        let fd = self.faces();
        let q = self.quiver_with(&fd);
        let qf = q.to_forest()?;
        if qf.is_connected() {
            return Err(PlabicError::NotFound);
        }
        let prepared = self.prepare()?;
        let candidates = [
            (self.clone(), false),
            (self.bipartite_reduction(), true),
            (prepared.bipartite_reduction(), true),
            (prepared, true),
        ];
        for (mut g, rewritten) in candidates {
            let route = |via_loops: bool, uncontracted: bool| SplitRoute {
                rewritten,
                uncontracted,
                loops_moved: via_loops,
            };
            if let Some((a, b)) = g.split_direct() {
                return Ok((a, b, route(false, false)));
            }
            if let Some((a, b)) = g.split_by_uncontraction() {
                return Ok((a, b, route(false, true)));
            }
            // Empty loops inside interior faces hide the shared vertex.
            while let Some(next) = g.push_one_loop() {
                g = next;
                if let Some((a, b)) = g.split_direct() {
                    return Ok((a, b, route(true, false)));
                }
                if let Some((a, b)) = g.split_by_uncontraction() {
                    return Ok((a, b, route(true, true)));
                }
            }
        }
        Err(PlabicError::NotFound)
    }

    fn split_direct(&self) -> Option<(PlabicMap, PlabicMap)> {
        let fd = self.faces();
        let edges: Vec<HalfEdge> = self.edges().map(|(h, _)| h).collect();
        for h in edges {
            let t = self.twin(h);
            let (l, r) = (fd.left(h), fd.left(t));
            let bdy = |f: usize| fd.faces[f].kind == FaceKind::Boundary;
            if !bdy(l) || !bdy(r) || self.is_loop(h) {
                continue;
            }
            let cut = self.delete_edge(h).ok()?;
            let comps = cut.components();
            if comps.len() != self.components().len() + 1 {
                continue;
            }
            let u = self.vertex_of(h);
            let w = self.vertex_of(t);
            let side_u = comps.iter().find(|c| c.contains(&u)).expect("u somewhere").clone();
            let rest: BTreeSet<VertexId> =
                comps.iter().filter(|c| !c.contains(&u)).flatten().copied().collect();
            debug_assert!(rest.contains(&w));
            let a = self.part(&cut, &side_u);
            let b = self.part(&cut, &rest);
            if a.faces().interior_count() > 0 && b.faces().interior_count() > 0 {
                return Some((a, b));
            }
        }
        None
    }

    /// A side of a cut; its outer anchor comes from the uncut map, where the
    /// cut edge still lay in a boundary face.
    fn part(&self, cut: &PlabicMap, keep: &BTreeSet<VertexId>) -> PlabicMap {
        let mut p = cut.induced_submap(keep);
        if p.boundary.is_empty() {
            p.set_outer(None);
            p.repair_outer(self);
        }
        p
    }

    /// Pulls apart a vertex sitting in two boundary-face corners.
    fn split_by_uncontraction(&self) -> Option<(PlabicMap, PlabicMap)> {
        let fd = self.faces();
        let verts: Vec<VertexId> = self.interior_vertices().collect();
        for v in verts {
            let r = self.rotation(v).to_vec();
            let d = r.len();
            let corners: Vec<usize> = (0..d)
                .filter(|&i| fd.faces[fd.left(r[i])].kind == FaceKind::Boundary)
                .collect();
            for (a, &i) in corners.iter().enumerate() {
                for &j in &corners[a + 1..] {
                    let Ok((g, _, _)) = self.uncontract(v, i + 1, j - i) else { continue };
                    if let Some(parts) = g.split_direct() {
                        return Some(parts);
                    }
                }
            }
        }
        None
    }

    /// Finds a loop bounding a face by itself inside an interior face and
    /// moves it into a boundary-face corner of its vertex.
    fn push_one_loop(&self) -> Option<PlabicMap> {
        let fd = self.faces();
        for (h, _) in self.edges() {
            if !self.is_loop(h) {
                continue;
            }
            let v = self.vertex_of(h);
            let t = self.twin(h);
            let outer = if fd.face(fd.left(h)).walk.len() == 1 {
                t
            } else if fd.face(fd.left(t)).walk.len() == 1 {
                h
            } else {
                continue;
            };
            if fd.faces[fd.left(outer)].kind == FaceKind::Boundary {
                continue;
            }
            let target = self
                .rotation(v)
                .iter()
                .copied()
                .find(|&x| x != h && x != t && fd.faces[fd.left(x)].kind == FaceKind::Boundary)?;
            return self.move_loop(h, target).ok();
        }
        None
    }
}
