use std::collections::{BTreeMap, BTreeSet};

use super::{Color, FaceData, PlabicError, PlabicMap};
use crate::forest::{Forest, VertexId};

/// Dual quiver: one vertex per interior face, one arrow per black–white
/// edge separating two interior faces, oriented so that the black endpoint
/// lies on its right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    /// `faces[i]` is the face id behind quiver vertex `i`.
    pub faces: Vec<usize>,
    pub arrows: Vec<(VertexId, VertexId)>,
}

impl Quiver {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// No loops, 2-cycles or parallel arrows.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        for &(a, b) in &self.arrows {
            if a == b || !seen.insert((a.min(b), a.max(b))) {
                return false;
            }
        }
        true
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.arrows.iter().filter(|(a, b)| *a == v || *b == v).count()
    }

    pub fn to_forest(&self) -> Result<Forest, PlabicError> {
        if !self.is_simple() {
            return Err(PlabicError::NotAForestQuiver);
        }
        let mut f = Forest::new();
        for i in 0..self.len() {
            f.add_vertex(i as VertexId);
        }
        for &(a, b) in &self.arrows {
            f.add_arrow(a, b).map_err(|_| PlabicError::NotAForestQuiver)?;
        }
        Ok(f)
    }

    /// Quiver vertex of a face id.
    pub fn vertex_of_face(&self, face: usize) -> Option<VertexId> {
        self.faces.iter().position(|f| *f == face).map(|i| i as VertexId)
    }
}

impl PlabicMap {
    pub fn quiver(&self) -> Quiver {
        self.quiver_with(&self.faces())
    }

    pub(crate) fn quiver_with(&self, fd: &FaceData) -> Quiver {
        let faces: Vec<usize> = fd.interior().map(|f| f.id).collect();
        let index: BTreeMap<usize, VertexId> =
            faces.iter().enumerate().map(|(i, f)| (*f, i as VertexId)).collect();
        let mut arrows = Vec::new();
        for (h, t) in self.edges() {
            let (u, w) = (self.vertex_of(h), self.vertex_of(t));
            // h oriented black → white
            let h = match (self.color(u), self.color(w)) {
                (Color::Black, Color::White) => h,
                (Color::White, Color::Black) => t,
                _ => continue,
            };
            let (l, r) = (fd.left(h), fd.left(self.twin(h)));
            if let (Some(&a), Some(&b)) = (index.get(&l), index.get(&r)) {
                arrows.push((a, b));
            }
        }
        Quiver { faces, arrows }
    }
}
