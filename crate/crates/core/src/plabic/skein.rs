use super::{PlabicError, PlabicMap};
use crate::invariants::{homfly_recursive, homfly_single_vertex};
use crate::laurent::BivariateLaurent;

/// HOMFLY polynomial of the plabic link, evaluated by skein moves on the
/// graph itself and cross-checked against the leaf recursion on its quiver.
pub fn homfly_skein(g: &PlabicMap) -> Result<BivariateLaurent, PlabicError> {
    g.validate().into_result()?;
    let value = skein_evaluate(g)?;
    let quiver = g.prepare()?.quiver().to_forest()?;
    let expected = homfly_recursive(&quiver);
    if value != expected {
        return Err(PlabicError::InternalMismatch(format!(
            "skein gave {value}, recursion on the quiver gave {expected}"
        )));
    }
    Ok(value)
}

/// The skein evaluation alone, without the final cross-check.
pub fn skein_evaluate(g: &PlabicMap) -> Result<BivariateLaurent, PlabicError> {
    let g = g.prepare()?;
    let fd = g.faces();
    let q = g.quiver_with(&fd);
    if !q.is_simple() {
        return Err(PlabicError::NotSimple("quiver has loops, 2-cycles or parallel arrows".into()));
    }
    let f = q.to_forest()?;
    match f.len() {
        0 => return Ok(BivariateLaurent::one()),
        1 => return Ok(homfly_single_vertex()),
        _ => {}
    }
    if !g.is_connected() {
        return Err(PlabicError::NotSimple("graph fell apart during evaluation".into()));
    }
    if !f.is_connected() {
        let (a, b) = g.split_at_dividing_edge()?;
        let (pa, pb) = (skein_evaluate(&a)?, skein_evaluate(&b)?);
        return Ok(pa.checked_mul(&pb)?);
    }
    let leaf = f.leaves().into_iter().map(|(v, _)| v).min().expect("a tree has leaves");
    let face = q.faces[leaf as usize];
    let (h, site) = g.find_boundary_leaf_face(face)?;
    let deleted = skein_evaluate(&h.leaf_deletion(&site)?)?;
    let contracted = skein_evaluate(&h.leaf_contraction(&site)?)?;
    let lhs = BivariateLaurent::monomial(1, -1, 1).checked_mul(&deleted)?;
    let rhs = BivariateLaurent::monomial(1, -2, 0).checked_mul(&contracted)?;
    Ok(lhs.checked_add(&rhs)?)
}
