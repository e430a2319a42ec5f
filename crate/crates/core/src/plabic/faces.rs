use std::collections::{BTreeMap, BTreeSet};

use super::{HalfEdge, PlabicMap};
use crate::forest::VertexId;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceKind {
    Interior,
    /// Touches the disk boundary.
    Boundary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    /// Real half-edges with this face on their left, in walk order.
    pub walk: Vec<HalfEdge>,
    pub kind: FaceKind,
}

#[derive(Debug, Clone)]
pub struct FaceData {
    pub faces: Vec<Face>,
    left: BTreeMap<HalfEdge, usize>,
    /// Number of closed walks, including the exterior and isolated vertices'
    /// trivial faces; used for the Euler check.
    pub(crate) walk_count: usize,
}

impl FaceData {
    /// Face on the left of `h`.
    pub fn left(&self, h: HalfEdge) -> usize {
        self.left[&h]
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn interior(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| f.kind == FaceKind::Interior)
    }

    pub fn interior_count(&self) -> usize {
        self.interior().count()
    }

    pub fn is_interior(&self, id: usize) -> bool {
        self.faces[id].kind == FaceKind::Interior
    }
}

/// Half-edges of the map with the boundary circle added: arc `A(k)` runs
/// from boundary vertex `k` to `k + 1`, `B(k)` back.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Aug {
    R(HalfEdge),
    A(usize),
    B(usize),
}

impl PlabicMap {
    pub fn faces(&self) -> FaceData {
        let n = self.boundary.len();
        let index: BTreeMap<VertexId, usize> =
            self.boundary.iter().enumerate().map(|(i, b)| (*b, i)).collect();

        let aug_rotation = |v: VertexId| -> Vec<Aug> {
            let mut r: Vec<Aug> = self.rotation(v).iter().map(|h| Aug::R(*h)).collect();
            if let Some(&k) = index.get(&v) {
                r.push(Aug::A(k));
                r.push(Aug::B((k + n - 1) % n));
            }
            r
        };
        let vertex = |a: Aug| match a {
            Aug::R(h) => self.vertex_of(h),
            Aug::A(k) => self.boundary[k],
            Aug::B(k) => self.boundary[(k + 1) % n],
        };
        let twin = |a: Aug| match a {
            Aug::R(h) => Aug::R(self.twin(h)),
            Aug::A(k) => Aug::B(k),
            Aug::B(k) => Aug::A(k),
        };
        let next = |a: Aug| {
            let t = twin(a);
            let r = aug_rotation(vertex(t));
            let i = r.iter().position(|x| *x == t).expect("aug rotation");
            r[(i + r.len() - 1) % r.len()]
        };

        let mut all: Vec<Aug> = self.half_edges().map(Aug::R).collect();
        all.extend((0..n).map(Aug::A));
        all.extend((0..n).map(Aug::B));
        let mut seen = BTreeSet::new();
        let mut raw: Vec<(Vec<HalfEdge>, bool, bool)> = Vec::new();
        for &s in &all {
            if seen.contains(&s) {
                continue;
            }
            let (mut walk, mut ext, mut bdy) = (Vec::new(), false, false);
            let mut a = s;
            loop {
                seen.insert(a);
                match a {
                    Aug::R(h) => walk.push(h),
                    Aug::A(_) => ext = true,
                    Aug::B(_) => bdy = true,
                }
                a = next(a);
                if a == s {
                    break;
                }
            }
            raw.push((walk, ext, bdy));
        }
        let walk_count = raw.len() + self.color.keys().filter(|v| self.degree(**v) == 0).count();

        let anchor = self.outer_anchor();
        let mut faces: Vec<(Vec<HalfEdge>, FaceKind)> = raw
            .into_iter()
            .filter(|(walk, ext, _)| !ext && !walk.is_empty())
            .map(|(walk, _, bdy)| {
                let kind = if bdy || (n == 0 && anchor.is_some_and(|h| walk.contains(&h))) {
                    FaceKind::Boundary
                } else {
                    FaceKind::Interior
                };
                (walk, kind)
            })
            .collect();
        faces.sort_by_key(|(w, _)| w.iter().min().copied());
        let mut left = BTreeMap::new();
        let faces: Vec<Face> = faces
            .into_iter()
            .enumerate()
            .map(|(id, (walk, kind))| {
                for h in &walk {
                    left.insert(*h, id);
                }
                Face { id, walk, kind }
            })
            .collect();
        FaceData { faces, left, walk_count }
    }

    /// Vertices visited by a face walk, in order.
    pub fn face_vertices(&self, face: &Face) -> Vec<VertexId> {
        face.walk.iter().map(|h| self.vertex_of(*h)).collect()
    }
}
