use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Color, PlabicError, PlabicMap};

/// Permutation of boundary labels `1..=n` (label `k` is the `k`-th boundary
/// vertex in clockwise order).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StrandPermutation {
    images: Vec<usize>,
}

impl StrandPermutation {
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || std::mem::replace(&mut seen[i - 1], true) {
                return None;
            }
        }
        Some(Self { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// π(i), 1-based.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Cycles (fixed points included), each starting at its least label.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 1..=self.len() {
            if seen[s - 1] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = s;
            while !seen[i - 1] {
                seen[i - 1] = true;
                cyc.push(i);
                i = self.image(i);
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Display for StrandPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "()");
        }
        for c in self.cycles() {
            let items: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", items.join(" "))?;
        }
        Ok(())
    }
}

impl PlabicMap {
    /// Follows each strand from its boundary vertex: turn maximally right at
    /// black vertices, maximally left at white ones.
    pub fn strand_permutation(&self) -> Result<StrandPermutation, PlabicError> {
        self.strands(false)
    }

    fn strands(&self, mirrored: bool) -> Result<StrandPermutation, PlabicError> {
        let n = self.boundary.len();
        let label = |v| self.boundary.iter().position(|b| *b == v);
        let limit = 2 * self.edge_count() + 1;
        let mut images = Vec::with_capacity(n);
        for &b in &self.boundary {
            let Some(&start) = self.rotation(b).first() else {
                return Err(PlabicError::Invalid(format!("boundary vertex {b} has no edge")));
            };
            let mut h = start;
            let mut steps = 0;
            loop {
                let t = self.twin(h);
                let w = self.vertex_of(t);
                match self.color(w) {
                    Color::Boundary => {
                        images.push(label(w).expect("listed") + 1);
                        break;
                    }
                    c if (c == Color::Black) != mirrored => h = self.next_ccw(t),
                    _ => h = self.prev_ccw(t),
                }
                steps += 1;
                if steps > limit {
                    return Err(PlabicError::NonTerminatingStrand(b));
                }
            }
        }
        StrandPermutation::from_images(images)
            .ok_or_else(|| PlabicError::Invalid("strands do not pair boundary vertices".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plabic::corpus;

    #[test]
    fn pentagon_strands() {
        let g = corpus::load("a2_pentagon").unwrap();
        let p = g.strand_permutation().unwrap();
        assert_eq!(p.images(), &[4, 5, 1, 2, 3]);
        assert_eq!(p.to_string(), "(1 4 2 5 3)");
    }

    #[test]
    fn mirrored_rule_gives_the_inverse() {
        let g = corpus::load("a2_pentagon").unwrap();
        assert_eq!(g.strands(true).unwrap().to_string(), "(1 3 5 2 4)");
    }

    #[test]
    fn display_keeps_fixed_points() {
        let p = StrandPermutation::from_images(vec![1, 3, 2]).unwrap();
        assert_eq!(p.to_string(), "(1)(2 3)");
        assert!(StrandPermutation::from_images(vec![1, 1]).is_none());
        assert_eq!(p.cycles(), vec![vec![1], vec![2, 3]]);
    }
}
