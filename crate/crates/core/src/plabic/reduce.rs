use super::{Color, FaceKind, HalfEdge, PlabicError, PlabicMap};
use crate::forest::VertexId;

/// A normalized boundary leaf face: a bigon on `x` (black or white) and `y`
/// (the other colour). `e` separates it from a boundary face, `e_int` from
/// the unique adjacent interior face. Both are half-edges leaving `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeafSite {
    pub x: VertexId,
    pub y: VertexId,
    pub e: HalfEdge,
    pub e_int: HalfEdge,
    /// Moves spent getting there.
    pub steps: usize,
}

impl PlabicMap {
    fn removable_tail(&self, b: VertexId) -> bool {
        let h = self.rotation(b)[0];
        let v = self.head(h);
        if !self.color(v).is_interior() || self.degree(v) < 3 {
            return false;
        }
        let t = self.twin(h);
        let rest: Vec<HalfEdge> = self.rotation(v).iter().copied().filter(|x| *x != t).collect();
        !(rest.len() == 2 && self.twin(rest[0]) == rest[1])
    }

    /// Removes tails, least boundary vertex id first, while the move applies.
    /// The last boundary vertex is kept so the disk boundary stays marked.
    pub fn tail_reduction(&self) -> PlabicMap {
        let mut g = self.clone();
        loop {
            if g.boundary.len() <= 1 {
                return g;
            }
            let mut ids: Vec<VertexId> = g.boundary.clone();
            ids.sort_unstable();
            let Some(b) = ids.into_iter().find(|b| g.degree(*b) == 1 && g.removable_tail(*b)) else {
                return g;
            };
            g = g.remove_tail(b).expect("checked removable");
        }
    }

    /// Makes every interior vertex trivalent where possible: same-colour
    /// leaves are absorbed, degree-two vertices removed, high degrees split.
    pub fn trivalentize(&self) -> Result<PlabicMap, PlabicError> {
        let mut g = self.clone();
        'outer: loop {
            let interior: Vec<VertexId> = g.interior_vertices().collect();
            for &v in &interior {
                if g.degree(v) == 1 {
                    let h = g.rotation(v)[0];
                    let u = g.head(h);
                    if g.color(u) == g.color(v) {
                        g = g.contract(g.twin(h))?;
                        continue 'outer;
                    }
                    if g.color(u).is_interior() {
                        return Err(PlabicError::NotSimple(format!(
                            "interior leaf {v} on a vertex of the other colour"
                        )));
                    }
                }
            }
            for &v in &interior {
                if g.degree(v) == 2 {
                    if let Ok(next) = g.remove_mid(v) {
                        g = next;
                        continue 'outer;
                    }
                }
            }
            for &v in &interior {
                let d = g.degree(v);
                if d > 3 {
                    g = g.uncontract(v, 2, d - 2)?.0;
                    continue 'outer;
                }
            }
            return Ok(g);
        }
    }

    /// Tail reduction and trivalentization repeated to a fixed point.
    pub fn prepare(&self) -> Result<PlabicMap, PlabicError> {
        let mut g = self.clone();
        loop {
            let next = g.tail_reduction().trivalentize()?;
            if next == g {
                return Ok(g);
            }
            g = next;
        }
    }

    /// Contracts every edge joining two interior vertices of the same colour.
    pub fn bipartite_reduction(&self) -> PlabicMap {
        let mut g = self.clone();
        'outer: loop {
            let edges: Vec<HalfEdge> = g.edges().map(|(h, _)| h).collect();
            for h in edges {
                if g.contract(h).is_ok() {
                    g = g.contract(h).expect("checked");
                    continue 'outer;
                }
            }
            return g;
        }
    }

    /// Reshapes the boundary leaf face `face` (a face id for a quiver leaf)
    /// into a bigon with trivalent corners. Expects a trivalent map whose
    /// quiver is a tree with at least two vertices around this face.
    pub fn find_boundary_leaf_face(&self, face: usize) -> Result<(PlabicMap, LeafSite), PlabicError> {
        let fd = self.faces();
        let q = self.quiver_with(&fd);
        let qv = q.vertex_of_face(face).ok_or(PlabicError::NotALeafFace(face))?;
        if q.degree(qv) != 1 {
            return Err(PlabicError::NotALeafFace(face));
        }
        // The arrow's edge: black–white, interior faces on both sides.
        let track = fd
            .face(face)
            .walk
            .iter()
            .copied()
            .find(|&h| {
                let (c1, c2) = (self.color(self.vertex_of(h)), self.color(self.head(h)));
                c1.is_interior() && c2.is_interior() && c1 != c2 && fd.is_interior(fd.left(self.twin(h)))
            })
            .ok_or(PlabicError::NotALeafFace(face))?;

        let mut g = self.clone();
        let mut steps = 0;
        let limit = 4 * (self.vertex_count() + self.edge_count()) + 8;
        loop {
            let fd = g.faces();
            let walk = fd.face(fd.left(track)).walk.clone();
            if walk.len() == 2 {
                let (h1, h2) = (walk[0], walk[1]);
                let (x, y) = (g.vertex_of(h1), g.vertex_of(h2));
                let (cx, cy) = (g.color(x), g.color(y));
                let other = if h1 == track { h2 } else { h1 };
                if x != y
                    && cx.is_interior()
                    && cy.is_interior()
                    && cx != cy
                    && fd.faces[fd.left(g.twin(other))].kind == FaceKind::Boundary
                {
                    let e_int_at_x = if track == h1 { h1 } else { g.twin(h2) };
                    return g.trivalent_bigon(h1, h2, e_int_at_x, steps);
                }
            }
            if steps > limit {
                return Err(PlabicError::PatternMismatch("leaf face did not normalize".into()));
            }
            // Shrink the face: same-colour edges first, then degree-two vertices.
            let k = walk.len();
            let start = walk.iter().position(|h| *h == track).unwrap_or(0);
            let order: Vec<HalfEdge> = (1..=k).map(|s| walk[(start + s) % k]).collect();
            if let Some(&h) = order.iter().find(|&&h| h != track && g.contract(h).is_ok()) {
                g = g.contract(h)?;
                steps += 1;
                continue;
            }
            if let Some(v) = order
                .iter()
                .map(|h| g.vertex_of(*h))
                .find(|&v| g.color(v).is_interior() && g.degree(v) == 2 && g.remove_mid(v).is_ok())
            {
                g = g.remove_mid(v)?;
                steps += 1;
                continue;
            }
            // A kept tail may still block the face; drop it.
            if let Some(b) = order.iter().find_map(|h| {
                let v = g.vertex_of(*h);
                g.rotation(v)
                    .iter()
                    .map(|x| g.head(*x))
                    .find(|&b| g.color(b) == Color::Boundary && g.remove_tail(b).is_ok())
            }) {
                g = g.remove_tail(b)?;
                steps += 1;
                continue;
            }
            return Err(PlabicError::PatternMismatch("leaf face did not normalize".into()));
        }
    }

    /// `h1` leaves `x`, `h2` leaves `y`; both border the bigon. Splits off
    /// extra edges at `x` and `y` so both become trivalent.
    fn trivalent_bigon(
        &self,
        h1: HalfEdge,
        h2: HalfEdge,
        e_int_at_x: HalfEdge,
        mut steps: usize,
    ) -> Result<(PlabicMap, LeafSite), PlabicError> {
        let mut g = self.clone();
        for &side in &[h1, h2] {
            let v = g.vertex_of(side);
            let d = g.degree(v);
            if d > 3 {
                // Keep `side` and the next half-edge (the other bigon edge).
                let r = g.rotation(v);
                let i = r.iter().position(|x| *x == side).expect("side at v");
                g = g.uncontract(v, (i + 2) % d, d - 2)?.0;
                steps += 1;
            }
        }
        let (x, y) = (g.vertex_of(h1), g.vertex_of(h2));
        let e = if e_int_at_x == h1 { g.twin(h2) } else { h1 };
        Ok((g, LeafSite { x, y, e, e_int: e_int_at_x, steps }))
    }

    /// Boundary-facing edge of the bigon removed.
    pub fn leaf_deletion(&self, site: &LeafSite) -> Result<PlabicMap, PlabicError> {
        self.delete_edge(site.e)
    }

    /// Both bigon vertices removed.
    pub fn leaf_contraction(&self, site: &LeafSite) -> Result<PlabicMap, PlabicError> {
        self.delete_vertices(&[site.x, site.y])
    }
}
