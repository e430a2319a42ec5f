use std::collections::BTreeMap;

use super::{Color, HalfEdge, PlabicMap};
use crate::forest::{Forest, VertexId};

/// A reduced plabic graph whose quiver is `f` (edges without an orientation
/// point from the smaller id to the larger). Trees are drawn one per disk
/// region and chained together by bridges near the boundary; the empty
/// forest gives a single boundary-to-boundary edge.
pub fn construct_from_forest(f: &Forest) -> PlabicMap {
    let f = f.oriented_default();
    let mut g = PlabicMap::empty();
    if f.is_empty() {
        let a = g.new_vertex(Color::Boundary);
        let b = g.new_vertex(Color::Boundary);
        let (ha, hb) = g.new_edge_unplaced(a, b);
        g.set_rotation(a, vec![ha]);
        g.set_rotation(b, vec![hb]);
        g.set_boundary(vec![a, b]);
        return g;
    }
    let tails: Vec<Vec<VertexId>> = f.components().iter().map(|t| build_tree(&mut g, t)).collect();
    for w in tails.windows(2) {
        let last = *w[0].last().expect("tails");
        let first = w[1][0];
        g = bridge(g, last, first);
    }
    let order = outer_order(&g, tails[0][0]);
    debug_assert_eq!(order, tails.concat());
    g.set_boundary(order);
    g
}

/// Boundary vertices met along the unbounded face, starting at `start`.
fn outer_order(g: &PlabicMap, start: VertexId) -> Vec<VertexId> {
    let h0 = g.rotation(start)[0];
    let mut out = Vec::new();
    let mut h = h0;
    loop {
        let v = g.vertex_of(h);
        if g.color(v) == Color::Boundary {
            out.push(v);
        }
        h = g.prev_ccw(g.twin(h));
        if h == h0 {
            return out;
        }
    }
}

/// Path `x → m₁ → … → m_k → y` of alternating colours, each middle vertex
/// carrying a tail. Returns the path's half-edges at `x` and at `y`.
fn tailed_path(g: &mut PlabicMap, x: VertexId, y: VertexId, k: usize) -> (HalfEdge, HalfEdge) {
    let mut c = g.color(x).opposite();
    let mids: Vec<VertexId> = (0..k)
        .map(|_| {
            let m = g.new_vertex(c);
            c = c.opposite();
            m
        })
        .collect();
    let mut chain = vec![x];
    chain.extend(&mids);
    chain.push(y);
    let halves: Vec<(HalfEdge, HalfEdge)> =
        chain.windows(2).map(|w| g.new_edge_unplaced(w[0], w[1])).collect();
    for (i, &m) in mids.iter().enumerate() {
        let b = g.new_vertex(Color::Boundary);
        let (hm, hb) = g.new_edge_unplaced(m, b);
        g.set_rotation(b, vec![hb]);
        g.set_rotation(m, vec![halves[i].1, hm, halves[i + 1].0]);
    }
    (halves[0].0, halves[k].1)
}

fn build_tree(g: &mut PlabicMap, t: &Forest) -> Vec<VertexId> {
    let base = g.fresh_vertex();
    if t.len() == 1 {
        // A lone vertex: a hexagon with a tail at every corner.
        let ms: Vec<VertexId> = (0..6)
            .map(|i| g.new_vertex(if i % 2 == 0 { Color::Black } else { Color::White }))
            .collect();
        let halves: Vec<(HalfEdge, HalfEdge)> =
            (0..6).map(|i| g.new_edge_unplaced(ms[i], ms[(i + 1) % 6])).collect();
        let mut tails = Vec::new();
        for i in 0..6 {
            let b = g.new_vertex(Color::Boundary);
            let (hm, hb) = g.new_edge_unplaced(ms[i], b);
            g.set_rotation(b, vec![hb]);
            g.set_rotation(ms[i], vec![halves[(i + 5) % 6].1, hm, halves[i].0]);
            tails.push(b);
        }
        return outer_order(g, tails[0]);
    }

    // Counterclockwise order of edges around each tree vertex, from a DFS.
    let edges: Vec<(VertexId, VertexId)> =
        t.edges().map(|(u, v)| t.orientation(u, v).expect("oriented")).collect();
    let index: BTreeMap<(VertexId, VertexId), usize> =
        edges.iter().enumerate().map(|(i, &(a, b))| ((a.min(b), a.max(b)), i)).collect();
    let eid = |a: VertexId, b: VertexId| index[&(a.min(b), a.max(b))];
    let root = t.vertices().next().expect("nonempty");
    let mut around: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    let mut stack = vec![(root, None::<VertexId>)];
    while let Some((q, parent)) = stack.pop() {
        let mut list = Vec::new();
        if let Some(p) = parent {
            list.push(eid(q, p));
        }
        for c in t.neighbors(q).filter(|c| Some(*c) != parent) {
            list.push(eid(q, c));
            stack.push((c, Some(q)));
        }
        around.insert(q, list);
    }

    // Each quiver edge crosses a black–white edge: white on the arrow's left.
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut link = Vec::new();
    for _ in &edges {
        let w = g.new_vertex(Color::White);
        let b = g.new_vertex(Color::Black);
        link.push(g.new_edge_unplaced(w, b));
        left.push(w);
        right.push(b);
    }
    let ccw_side = |q: VertexId, e: usize| if edges[e].0 == q { left[e] } else { right[e] };
    let cw_side = |q: VertexId, e: usize| if edges[e].0 == q { right[e] } else { left[e] };

    let mut connector: BTreeMap<(VertexId, VertexId), HalfEdge> = BTreeMap::new();
    for (&q, list) in &around {
        let d = list.len();
        for i in 0..d {
            let x = ccw_side(q, list[i]);
            let y = cw_side(q, list[(i + 1) % d]);
            let k = if d == 1 {
                4
            } else if g.color(x) == g.color(y) {
                1
            } else {
                2
            };
            let (hx, hy) = tailed_path(g, x, y, k);
            connector.insert((x, q), hx);
            connector.insert((y, q), hy);
        }
    }
    for (e, &(tail, head)) in edges.iter().enumerate() {
        let (gl, gr) = link[e];
        g.set_rotation(left[e], vec![gl, connector[&(left[e], head)], connector[&(left[e], tail)]]);
        g.set_rotation(right[e], vec![gr, connector[&(right[e], tail)], connector[&(right[e], head)]]);
    }
    let start = g
        .vertices()
        .filter(|(v, c)| *c == Color::Boundary && *v >= base)
        .map(|(v, _)| v)
        .next()
        .expect("tree has tails");
    outer_order(g, start)
}

/// Joins the component owning tail `last` to the one owning tail `first`.
fn bridge(g: PlabicMap, last: VertexId, first: VertexId) -> PlabicMap {
    let hb = g.rotation(last)[0];
    let v = g.head(hb);
    let (mut g, p) = g.insert_mid(hb, g.color(v).opposite()).expect("edge exists");
    let hb2 = g.rotation(first)[0];
    let v2 = g.head(hb2);
    let (g2, p2) = g.insert_mid(hb2, g.color(v2).opposite()).expect("edge exists");
    g = g2;
    let (to_b, to_v) = (g.rotation(p)[0], g.rotation(p)[1]);
    let (to_b2, to_v2) = (g.rotation(p2)[0], g.rotation(p2)[1]);
    let (br, br2) = g.new_edge_unplaced(p, p2);
    g.set_rotation(p, vec![to_v, br, to_b]);
    g.set_rotation(p2, vec![to_v2, to_b2, br2]);
    g
}
