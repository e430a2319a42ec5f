use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{Color, PlabicError, PlabicMap};
use crate::forest::VertexId;

/// Hard failures: the map is not a plabic graph in a disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    BoundaryDegree { vertex: VertexId, degree: usize },
    /// Boundary-coloured vertices and the boundary list disagree.
    BoundaryList(String),
    /// The rotation system is not planar once the disk boundary is added.
    NotPlanar { euler: i64, expected: i64 },
    /// A component with no boundary vertex (while others have some).
    Floating { vertex: VertexId },
    Disconnected,
    MissingOuterFace,
}

/// Local pictures that certify a graph is not reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Forbidden {
    /// Two trivalent vertices of opposite colours joined by two edges.
    DoubleEdge { black: VertexId, white: VertexId },
    /// An interior leaf hanging off an opposite-coloured vertex of degree ≥ 3.
    InteriorLeaf { leaf: VertexId, neighbor: VertexId },
    /// Two interior vertices of the same colour joined by parallel edges.
    /// Contracting one edge leaves a loop; putting a degree-two vertex on the
    /// loop and trivalentizing produces a double edge.
    SameColorBubble { x: VertexId, y: VertexId },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub forbidden: Vec<Forbidden>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn is_plausibly_reduced(&self) -> bool {
        self.violations.is_empty() && self.forbidden.is_empty()
    }

    pub fn into_result(self) -> Result<(), PlabicError> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(PlabicError::Invalid(self.to_string()))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() && self.forbidden.is_empty() {
            return write!(f, "ok");
        }
        let mut parts: Vec<String> = self.violations.iter().map(|v| format!("{v:?}")).collect();
        parts.extend(self.forbidden.iter().map(|v| format!("forbidden {v:?}")));
        write!(f, "{}", parts.join("; "))
    }
}

impl PlabicMap {
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::default();
        let listed: BTreeSet<VertexId> = self.boundary.iter().copied().collect();
        for (v, c) in self.vertices() {
            if c == Color::Boundary {
                if !listed.contains(&v) {
                    rep.violations.push(Violation::BoundaryList(format!(
                        "boundary vertex {v} missing from the boundary order"
                    )));
                }
                if self.degree(v) != 1 {
                    rep.violations.push(Violation::BoundaryDegree { vertex: v, degree: self.degree(v) });
                }
            } else if listed.contains(&v) {
                rep.violations
                    .push(Violation::BoundaryList(format!("interior vertex {v} in the boundary order")));
            }
        }
        if !rep.violations.is_empty() {
            return rep;
        }

        let comps = self.components();
        if self.boundary.is_empty() {
            if comps.len() > 1 {
                rep.violations.push(Violation::Disconnected);
            }
            if self.edge_count() > 0 && self.outer.is_none() {
                rep.violations.push(Violation::MissingOuterFace);
            }
        } else {
            for c in &comps {
                if !c.iter().any(|v| listed.contains(v)) {
                    rep.violations.push(Violation::Floating { vertex: *c.first().expect("nonempty") });
                }
            }
        }
        if !rep.violations.is_empty() {
            return rep;
        }

        // Euler: every component of the augmented map must be a sphere.
        let n = self.boundary.len() as i64;
        let aug_comps = if self.boundary.is_empty() {
            comps.len()
        } else {
            comps.len() - comps.iter().filter(|c| c.iter().any(|v| listed.contains(v))).count() + 1
        } as i64;
        let euler = self.vertex_count() as i64 - self.edge_count() as i64 - n
            + self.faces().walk_count as i64;
        if euler != 2 * aug_comps {
            rep.violations.push(Violation::NotPlanar { euler, expected: 2 * aug_comps });
            return rep;
        }

        rep.forbidden = self.forbidden_configurations();
        rep
    }

    fn forbidden_configurations(&self) -> Vec<Forbidden> {
        let mut out = Vec::new();
        let mut multiplicity: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
        for (h, _) in self.edges() {
            let (u, v) = (self.vertex_of(h), self.head(h));
            if u != v {
                *multiplicity.entry((u.min(v), u.max(v))).or_default() += 1;
            }
        }
        for (&(u, v), &m) in &multiplicity {
            let (cu, cv) = (self.color(u), self.color(v));
            if m < 2 || !cu.is_interior() || !cv.is_interior() {
                continue;
            }
            if cu == cv {
                out.push(Forbidden::SameColorBubble { x: u, y: v });
            } else if self.degree(u) == 3 && self.degree(v) == 3 {
                let (black, white) = if cu == Color::Black { (u, v) } else { (v, u) };
                out.push(Forbidden::DoubleEdge { black, white });
            }
        }
        for v in self.interior_vertices() {
            if self.degree(v) != 1 {
                continue;
            }
            let u = self.head(self.rotation(v)[0]);
            let cu = self.color(u);
            if cu.is_interior() && cu != self.color(v) && self.degree(u) >= 3 {
                out.push(Forbidden::InteriorLeaf { leaf: v, neighbor: u });
            }
        }
        out
    }
}
