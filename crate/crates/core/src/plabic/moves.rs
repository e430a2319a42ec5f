//! Local moves. Each returns a new map and leaves `self` untouched.

use super::{Color, FaceKind, HalfEdge, PlabicError, PlabicMap};
use crate::forest::VertexId;

/// A local move together with its site.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// Contract a non-loop edge between interior vertices of one colour,
    /// keeping the vertex of the given half-edge.
    Contract(HalfEdge),
    /// Split `len` consecutive half-edges starting at rotation index `start`
    /// off `vertex` onto a new vertex of the same colour.
    Uncontract { vertex: VertexId, start: usize, len: usize },
    /// Put a degree-two vertex of the given colour on an edge.
    InsertMid(HalfEdge, Color),
    /// Remove a degree-two interior vertex.
    RemoveMid(VertexId),
    /// Hang a new boundary vertex off `vertex` in the corner after `after`.
    AddTail { after: HalfEdge },
    /// Remove a boundary vertex together with its edge.
    RemoveTail(VertexId),
}

fn mismatch<T>(m: impl Into<String>) -> Result<T, PlabicError> {
    Err(PlabicError::PatternMismatch(m.into()))
}

impl PlabicMap {
    pub fn apply(&self, mv: Move) -> Result<PlabicMap, PlabicError> {
        match mv {
            Move::Contract(h) => self.contract(h),
            Move::Uncontract { vertex, start, len } => self.uncontract(vertex, start, len).map(|r| r.0),
            Move::InsertMid(h, c) => self.insert_mid(h, c).map(|r| r.0),
            Move::RemoveMid(v) => self.remove_mid(v),
            Move::AddTail { after } => self.add_tail(after).map(|r| r.0),
            Move::RemoveTail(b) => self.remove_tail(b),
        }
    }

    /// Every site where a contraction/uncontraction or a degree-two vertex
    /// insertion/removal applies, in ascending id order. These moves keep the
    /// strand permutation and the quiver.
    pub fn local_move_sites(&self) -> Vec<Move> {
        let mut out = Vec::new();
        for h in self.half_edges() {
            if self.contract(h).is_ok() {
                out.push(Move::Contract(h));
            }
        }
        for v in self.interior_vertices() {
            let d = self.degree(v);
            for start in 0..d {
                for len in 1..d {
                    out.push(Move::Uncontract { vertex: v, start, len });
                }
            }
            if self.remove_mid(v).is_ok() {
                out.push(Move::RemoveMid(v));
            }
        }
        for (h, _) in self.edges() {
            out.push(Move::InsertMid(h, Color::Black));
            out.push(Move::InsertMid(h, Color::White));
        }
        out
    }

    pub fn contract(&self, h: HalfEdge) -> Result<PlabicMap, PlabicError> {
        if !self.has_half_edge(h) {
            return mismatch(format!("no half-edge {h}"));
        }
        let (u, w, t) = (self.vertex_of(h), self.head(h), self.twin(h));
        if u == w {
            return mismatch("cannot contract a loop");
        }
        let c = self.color(u);
        if !c.is_interior() || c != self.color(w) {
            return mismatch(format!("{u} and {w} are not interior vertices of one colour"));
        }
        let mut out = self.clone();
        let rw = self.rotation(w);
        let j = rw.iter().position(|x| *x == t).expect("t at w");
        let tail: Vec<HalfEdge> = (1..rw.len()).map(|k| rw[(j + k) % rw.len()]).collect();
        let mut ru = Vec::with_capacity(rw.len() + self.degree(u));
        for &x in self.rotation(u) {
            if x == h {
                ru.extend(&tail);
            } else {
                ru.push(x);
            }
        }
        out.drop_edge(h);
        out.rotation.remove(&w);
        out.color.remove(&w);
        out.set_rotation(u, ru);
        out.repair_outer(self);
        Ok(out)
    }

    /// Returns the new map, the new vertex, and the new edge's half-edge at
    /// the new vertex.
    pub fn uncontract(
        &self,
        v: VertexId,
        start: usize,
        len: usize,
    ) -> Result<(PlabicMap, VertexId, HalfEdge), PlabicError> {
        if !self.contains_vertex(v) || !self.color(v).is_interior() {
            return mismatch(format!("{v} is not an interior vertex"));
        }
        let r = self.rotation(v).to_vec();
        let d = r.len();
        if len == 0 || len >= d || start >= d {
            return mismatch(format!("bad block {start}+{len} at degree {d}"));
        }
        let block: Vec<HalfEdge> = (0..len).map(|k| r[(start + k) % d]).collect();
        let rest: Vec<HalfEdge> = (len..d).map(|k| r[(start + k) % d]).collect();
        let mut out = self.clone();
        let nv = out.new_vertex(self.color(v));
        let (at_v, at_n) = out.new_edge_unplaced(v, nv);
        // v keeps `rest` with the new edge where the block was.
        let mut rv = vec![at_v];
        rv.extend(rest);
        let mut rn = vec![at_n];
        rn.extend(block);
        out.set_rotation(v, rv);
        out.set_rotation(nv, rn);
        Ok((out, nv, at_n))
    }

    /// Returns the new map and the new vertex.
    pub fn insert_mid(&self, h: HalfEdge, c: Color) -> Result<(PlabicMap, VertexId), PlabicError> {
        if !self.has_half_edge(h) || !c.is_interior() {
            return mismatch("insert_mid needs an edge and an interior colour");
        }
        let t = self.twin(h);
        let mut out = self.clone();
        let m = out.new_vertex(c);
        let (mu, mw) = out.new_edge_unplaced(m, m);
        out.twin.insert(h, mu);
        out.twin.insert(mu, h);
        out.twin.insert(t, mw);
        out.twin.insert(mw, t);
        out.set_rotation(m, vec![mu, mw]);
        Ok((out, m))
    }

    pub fn remove_mid(&self, v: VertexId) -> Result<PlabicMap, PlabicError> {
        if !self.contains_vertex(v) || !self.color(v).is_interior() || self.degree(v) != 2 {
            return mismatch(format!("{v} is not an interior vertex of degree two"));
        }
        let (p, q) = (self.rotation(v)[0], self.rotation(v)[1]);
        if self.twin(p) == q {
            return mismatch(format!("{v} carries only a loop"));
        }
        let (a, b) = (self.twin(p), self.twin(q));
        let mut out = self.clone();
        for x in [p, q] {
            out.twin.remove(&x);
            out.vertex_of.remove(&x);
        }
        out.rotation.remove(&v);
        out.color.remove(&v);
        out.twin.insert(a, b);
        out.twin.insert(b, a);
        out.repair_outer(self);
        Ok(out)
    }

    /// New boundary vertex attached in the corner following `after`, which
    /// must lie in a boundary face. Returns the map and the new vertex.
    pub fn add_tail(&self, after: HalfEdge) -> Result<(PlabicMap, VertexId), PlabicError> {
        if !self.has_half_edge(after) {
            return mismatch(format!("no half-edge {after}"));
        }
        let v = self.vertex_of(after);
        if !self.color(v).is_interior() {
            return mismatch("tails attach to interior vertices");
        }
        let fd = self.faces();
        let face = fd.face(fd.left(after));
        if face.kind != FaceKind::Boundary {
            return mismatch("corner is not in a boundary face");
        }
        // Insert after the first boundary vertex met by walking the face
        // backwards from the corner (it precedes the corner clockwise).
        let i = face.walk.iter().position(|x| *x == after).expect("after in walk");
        let k = face.walk.len();
        let mut pos = self.boundary.len();
        for s in 1..=k {
            let x = face.walk[(i + k - s) % k];
            let b = self.vertex_of(x);
            if let Some(j) = self.boundary.iter().position(|y| *y == b) {
                pos = j + 1;
                break;
            }
        }
        let mut out = self.clone();
        let b = out.new_vertex(Color::Boundary);
        let (hv, hb) = out.new_edge_unplaced(v, b);
        let mut rv = self.rotation(v).to_vec();
        let at = rv.iter().position(|x| *x == after).expect("after at v");
        rv.insert(at + 1, hv);
        out.set_rotation(v, rv);
        out.set_rotation(b, vec![hb]);
        let mut bl = self.boundary.clone();
        bl.insert(pos.min(bl.len()), b);
        out.set_boundary(bl);
        out.set_outer(None);
        Ok((out, b))
    }

    pub fn remove_tail(&self, b: VertexId) -> Result<PlabicMap, PlabicError> {
        if !self.contains_vertex(b) || self.color(b) != Color::Boundary || self.degree(b) != 1 {
            return mismatch(format!("{b} is not a boundary vertex with one edge"));
        }
        let h = self.rotation(b)[0];
        let v = self.head(h);
        if !self.color(v).is_interior() || self.degree(v) < 3 {
            return mismatch(format!("tail at {b} does not end at an interior vertex of degree ≥ 3"));
        }
        let t = self.twin(h);
        let rest: Vec<HalfEdge> = self.rotation(v).iter().copied().filter(|x| *x != t).collect();
        if rest.len() == 2 && self.twin(rest[0]) == rest[1] {
            return mismatch(format!("removing the tail at {b} leaves only a loop"));
        }
        let anchor = self.prev_ccw(t);
        let mut out = self.clone();
        out.drop_vertex(b);
        if out.boundary.is_empty() {
            out.set_outer(Some(anchor));
        }
        Ok(out)
    }

    /// Moves the loop `h` (with its inner face bounded by the loop alone) to
    /// the corner of the same vertex following `after`.
    pub(crate) fn move_loop(&self, h: HalfEdge, after: HalfEdge) -> Result<PlabicMap, PlabicError> {
        let t = self.twin(h);
        let v = self.vertex_of(h);
        if self.vertex_of(t) != v || self.vertex_of(after) != v || after == h || after == t {
            return mismatch("move_loop needs a loop and another half-edge at the same vertex");
        }
        let (first, second) = if self.next_ccw(h) == t {
            (h, t)
        } else if self.next_ccw(t) == h {
            (t, h)
        } else {
            return mismatch("loop is not empty");
        };
        let mut r: Vec<HalfEdge> =
            self.rotation(v).iter().copied().filter(|x| *x != h && *x != t).collect();
        let at = r.iter().position(|x| *x == after).expect("after at v");
        r.insert(at + 1, second);
        r.insert(at + 1, first);
        let mut out = self.clone();
        out.set_rotation(v, r);
        Ok(out)
    }
}
