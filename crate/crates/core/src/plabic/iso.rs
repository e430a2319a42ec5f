use std::collections::BTreeMap;

use super::{HalfEdge, PlabicMap};
use crate::forest::VertexId;

impl PlabicMap {
    /// Isomorphism of connected maps preserving colours, rotations and the
    /// cyclic boundary order (labels may be rotated).
    pub fn is_isomorphic(&self, other: &PlabicMap) -> bool {
        if self.vertex_count() != other.vertex_count()
            || self.edge_count() != other.edge_count()
            || self.boundary.len() != other.boundary.len()
        {
            return false;
        }
        let mut ca: Vec<_> = self.vertices().map(|(_, c)| c).collect();
        let mut cb: Vec<_> = other.vertices().map(|(_, c)| c).collect();
        ca.sort();
        cb.sort();
        if ca != cb {
            return false;
        }
        if self.edge_count() == 0 {
            return true;
        }
        if !self.is_connected() || !other.is_connected() {
            return self == other;
        }
        let h0 = self.half_edges().next().expect("has edges");
        other.half_edges().any(|k0| self.try_map(other, h0, k0))
    }

    fn try_map(&self, other: &PlabicMap, h0: HalfEdge, k0: HalfEdge) -> bool {
        let mut hmap: BTreeMap<HalfEdge, HalfEdge> = BTreeMap::new();
        let mut used: BTreeMap<HalfEdge, HalfEdge> = BTreeMap::new();
        let mut vmap: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut stack = vec![(h0, k0)];
        while let Some((h, k)) = stack.pop() {
            if let Some(&m) = hmap.get(&h) {
                if m != k {
                    return false;
                }
                continue;
            }
            if used.contains_key(&k) {
                return false;
            }
            let (u, w) = (self.vertex_of(h), other.vertex_of(k));
            if self.color(u) != other.color(w) || self.degree(u) != other.degree(w) {
                return false;
            }
            match vmap.get(&u) {
                Some(&x) if x != w => return false,
                None => {
                    vmap.insert(u, w);
                }
                _ => {}
            }
            hmap.insert(h, k);
            used.insert(k, h);
            stack.push((self.twin(h), other.twin(k)));
            stack.push((self.next_ccw(h), other.next_ccw(k)));
        }
        let n = self.boundary.len();
        if n > 0 {
            let img = vmap[&self.boundary[0]];
            let Some(s) = other.boundary.iter().position(|b| *b == img) else { return false };
            if (0..n).any(|i| vmap[&self.boundary[i]] != other.boundary[(i + s) % n]) {
                return false;
            }
        } else if let (Some(a), Some(b)) = (self.outer_anchor(), other.outer_anchor()) {
            let fd = other.faces();
            if fd.left(hmap[&a]) != fd.left(b) {
                return false;
            }
        }
        true
    }
}
