//! Forest quivers and the counting data the closed formulas are built from.
//!
//! Vertex ids are kept (never re-indexed) by deletions so that recursion traces
//! stay readable. Orientations are stored but no invariant reads them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub type VertexId = u32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ForestError {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("not a forest: {0}")]
    NotAForest(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("invalid root set: {0}")]
    InvalidRootSet(String),
}

fn parse_err(line: usize, msg: impl Into<String>) -> ForestError {
    ForestError::Parse { line, msg: msg.into() }
}

/// Undirected forest with optional arrow directions.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Forest {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
    /// normalized edge `(min, max)` → tail of the arrow
    tails: BTreeMap<(VertexId, VertexId), VertexId>,
}

fn key(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    (u.min(v), u.max(v))
}

impl Forest {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.adj.entry(v).or_default();
    }

    /// Adds an undirected edge, registering endpoints as needed.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), ForestError> {
        if u == v {
            return Err(ForestError::NotAForest(format!("self-loop at {u}")));
        }
        if self.adj.get(&u).is_some_and(|s| s.contains(&v)) {
            return Err(ForestError::NotAForest(format!("repeated edge {u}-{v}")));
        }
        if self.adj.contains_key(&u) && self.adj.contains_key(&v) && self.connected(u, v) {
            return Err(ForestError::NotAForest(format!("edge {u}-{v} closes a cycle")));
        }
        self.adj.entry(u).or_default().insert(v);
        self.adj.entry(v).or_default().insert(u);
        Ok(())
    }

    /// Adds an edge oriented `from → to`.
    pub fn add_arrow(&mut self, from: VertexId, to: VertexId) -> Result<(), ForestError> {
        self.add_edge(from, to)?;
        self.tails.insert(key(from, to), from);
        Ok(())
    }

    pub fn from_edges<I: IntoIterator<Item = (VertexId, VertexId)>>(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: I,
    ) -> Result<Self, ForestError> {
        let mut f = Self::new();
        for v in vertices {
            f.add_vertex(v);
        }
        for (u, v) in edges {
            f.add_edge(u, v)?;
        }
        Ok(f)
    }

    pub fn path(n: u32) -> Self {
        Self::from_edges(0..n, (1..n).map(|i| (i - 1, i))).expect("path is a tree")
    }

    pub fn star(n: u32) -> Self {
        Self::from_edges(0..n, (1..n).map(|i| (0, i))).expect("star is a tree")
    }

    /// Labeled tree on `0..seq.len()+2` from a Prüfer sequence.
    pub fn from_prufer(seq: &[VertexId]) -> Result<Self, ForestError> {
        let n = seq.len() + 2;
        if let Some(&bad) = seq.iter().find(|&&s| s as usize >= n) {
            return Err(ForestError::UnknownVertex(bad));
        }
        let mut degree = vec![1usize; n];
        for &s in seq {
            degree[s as usize] += 1;
        }
        let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut edges = Vec::with_capacity(n - 1);
        for &s in seq {
            let leaf = leaves.pop_first().expect("a leaf always exists");
            edges.push((leaf as VertexId, s));
            degree[s as usize] -= 1;
            if degree[s as usize] == 1 {
                leaves.insert(s as usize);
            }
        }
        let a = leaves.pop_first().expect("two leaves remain");
        let b = leaves.pop_first().expect("two leaves remain");
        edges.push((a as VertexId, b as VertexId));
        Self::from_edges(0..n as VertexId, edges)
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    /// Edges as `(min, max)`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, ns)| ns.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    /// `Some((tail, head))` if the edge is oriented.
    pub fn orientation(&self, u: VertexId, v: VertexId) -> Option<(VertexId, VertexId)> {
        let k = key(u, v);
        self.tails.get(&k).map(|&t| if t == k.0 { k } else { (k.1, k.0) })
    }

    /// Copy with every unoriented edge directed from smaller to larger id.
    pub fn oriented_default(&self) -> Self {
        let mut f = self.clone();
        for e in self.edges() {
            f.tails.entry(e).or_insert(e.0);
        }
        f
    }

    /// Copy with all orientations dropped.
    pub fn unoriented(&self) -> Self {
        Self { adj: self.adj.clone(), tails: BTreeMap::new() }
    }

    fn connected(&self, u: VertexId, v: VertexId) -> bool {
        let mut seen = BTreeSet::from([u]);
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            if x == v {
                return true;
            }
            for y in self.neighbors(x) {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        false
    }

    /// Degree-one vertices with their neighbour, ascending by leaf.
    pub fn leaves(&self) -> Vec<(VertexId, VertexId)> {
        self.adj
            .iter()
            .filter(|(_, ns)| ns.len() == 1)
            .map(|(&v, ns)| (v, *ns.first().expect("degree one")))
            .collect()
    }

    /// Induced subforest on the complement of `vs`.
    pub fn remove_vertices(&self, vs: &[VertexId]) -> Result<Self, ForestError> {
        if let Some(&v) = vs.iter().find(|v| !self.contains(**v)) {
            return Err(ForestError::UnknownVertex(v));
        }
        let drop: BTreeSet<VertexId> = vs.iter().copied().collect();
        Ok(self.induced(|v| !drop.contains(&v)))
    }

    fn induced(&self, keep: impl Fn(VertexId) -> bool) -> Self {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| keep(**v))
            .map(|(&v, ns)| (v, ns.iter().copied().filter(|&u| keep(u)).collect()))
            .collect();
        let tails = self
            .tails
            .iter()
            .filter(|((u, v), _)| keep(*u) && keep(*v))
            .map(|(k, t)| (*k, *t))
            .collect();
        Self { adj, tails }
    }

    /// Connected components ordered by least id.
    pub fn components(&self) -> Vec<Self> {
        self.component_sets()
            .into_iter()
            .map(|set| self.induced(|v| set.contains(&v)))
            .collect()
    }

    pub(crate) fn component_sets(&self) -> Vec<BTreeSet<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = BTreeSet::from([v]);
            let mut stack = vec![v];
            seen.insert(v);
            while let Some(x) = stack.pop() {
                for y in self.neighbors(x) {
                    if seen.insert(y) {
                        comp.insert(y);
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_sets().len() <= 1
    }

    pub fn max_id(&self) -> Option<VertexId> {
        self.adj.keys().next_back().copied()
    }

    /// Disjoint union; `other` is shifted past this forest's largest id.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let off = self.max_id().map_or(0, |m| m + 1);
        let mut f = self.clone();
        for v in other.vertices() {
            f.add_vertex(v + off);
        }
        for (u, v) in other.edges() {
            f.add_edge(u + off, v + off).expect("shifted copy stays a forest");
            if let Some((t, _)) = other.orientation(u, v) {
                f.tails.insert((u + off, v + off), t + off);
            }
        }
        f
    }

    /// Dense index of every vertex, ascending id order.
    fn index(&self) -> (Vec<VertexId>, Vec<Vec<usize>>) {
        let ids: Vec<VertexId> = self.vertices().collect();
        let pos: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let nbrs = ids
            .iter()
            .map(|v| self.neighbors(*v).map(|u| pos[&u]).collect())
            .collect();
        (ids, nbrs)
    }

    /// `a_i`: independent sets of each size.
    pub fn independent_set_counts(&self) -> Vec<u64> {
        let (_, nbrs) = self.index();
        let mut total = vec![1u64];
        for (root, order, parent) in rooted_orders(&nbrs, None) {
            let n = nbrs.len();
            let mut inc: Vec<Vec<u64>> = vec![Vec::new(); n];
            let mut exc: Vec<Vec<u64>> = vec![Vec::new(); n];
            for &v in order.iter().rev() {
                let mut with = vec![0, 1];
                let mut without = vec![1];
                for &c in &nbrs[v] {
                    if parent[c] != Some(v) {
                        continue;
                    }
                    with = poly_mul(&with, &exc[c]);
                    without = poly_mul(&without, &poly_add(&inc[c], &exc[c]));
                }
                inc[v] = with;
                exc[v] = without;
            }
            total = poly_mul(&total, &poly_add(&inc[root], &exc[root]));
        }
        trim(total)
    }

    /// `b_i`: matchings with `i` edges.
    pub fn matching_counts(&self) -> Vec<u64> {
        let (_, nbrs) = self.index();
        let mut total = vec![1u64];
        for (root, order, parent) in rooted_orders(&nbrs, None) {
            let n = nbrs.len();
            let mut free: Vec<Vec<u64>> = vec![Vec::new(); n];
            let mut all: Vec<Vec<u64>> = vec![Vec::new(); n];
            for &v in order.iter().rev() {
                // v unmatched / v matched to a child, so far
                let mut f = vec![1u64];
                let mut m = vec![0u64];
                for &c in &nbrs[v] {
                    if parent[c] != Some(v) {
                        continue;
                    }
                    let shifted: Vec<u64> = std::iter::once(0).chain(free[c].iter().copied()).collect();
                    m = poly_add(&poly_mul(&m, &all[c]), &poly_mul(&f, &shifted));
                    f = poly_mul(&f, &all[c]);
                }
                all[v] = poly_add(&f, &m);
                free[v] = f;
            }
            total = poly_mul(&total, &all[root]);
        }
        trim(total)
    }

    /// Least id of each component.
    pub fn canonical_roots(&self) -> RootSet {
        RootSet {
            roots: self
                .component_sets()
                .iter()
                .map(|c| *c.first().expect("nonempty component"))
                .collect(),
        }
    }

    /// `c_{i,j}` for the canonical root set.
    pub fn cij(&self) -> CoefficientTable {
        self.cij_table(&self.canonical_roots()).expect("canonical roots are valid")
    }

    /// `c_{i,j}`: independent sets of size `i` with `i − j` distinct parents.
    pub fn cij_table(&self, roots: &RootSet) -> Result<CoefficientTable, ForestError> {
        roots.check(self)?;
        let (ids, nbrs) = self.index();
        let root_idx: Vec<usize> = roots
            .roots
            .iter()
            .map(|r| ids.binary_search(r).expect("checked root"))
            .collect();
        // tables indexed [size][parents]
        let mut total: Tab = vec![vec![1]];
        for (root, order, parent) in rooted_orders(&nbrs, Some(&root_idx)) {
            let n = nbrs.len();
            let mut inc: Vec<Tab> = vec![Vec::new(); n];
            let mut exc: Vec<Tab> = vec![Vec::new(); n];
            for &v in order.iter().rev() {
                let mut prod_exc: Tab = vec![vec![1]];
                let mut prod_all: Tab = vec![vec![1]];
                for &c in &nbrs[v] {
                    if parent[c] != Some(v) {
                        continue;
                    }
                    prod_exc = tab_mul(&prod_exc, &exc[c]);
                    prod_all = tab_mul(&prod_all, &tab_add(&inc[c], &exc[c]));
                }
                inc[v] = tab_shift(&prod_exc, 1, 0);
                let used = tab_sub(&prod_all, &prod_exc);
                exc[v] = tab_add(&prod_exc, &tab_shift(&used, 0, 1));
            }
            total = tab_mul(&total, &tab_add(&inc[root], &exc[root]));
        }
        let mut c = BTreeMap::new();
        for (i, row) in total.iter().enumerate() {
            for (p, &cnt) in row.iter().enumerate() {
                if cnt != 0 {
                    c.insert((i, i - p), cnt);
                }
            }
        }
        Ok(CoefficientTable { n: self.len(), c })
    }

    /// One vertex per edge; adjacent iff the edges share an endpoint.
    pub fn line_graph(&self) -> LineGraph {
        let edges: Vec<(VertexId, VertexId)> = self.edges().collect();
        let adjacency = edges
            .iter()
            .map(|&(a, b)| {
                edges
                    .iter()
                    .enumerate()
                    .filter(|(_, &(c, d))| (c, d) != (a, b) && (a == c || a == d || b == c || b == d))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        LineGraph { edges, adjacency }
    }

    /// Isomorphism-invariant string; with `oriented`, arrow directions count.
    pub fn canonical_form(&self, oriented: bool) -> String {
        let mut parts: Vec<String> = self
            .component_sets()
            .iter()
            .map(|c| self.tree_code(c, oriented))
            .collect();
        parts.sort();
        parts.join(",")
    }

    pub fn is_isomorphic(&self, other: &Self, oriented: bool) -> bool {
        self.len() == other.len() && self.canonical_form(oriented) == other.canonical_form(oriented)
    }

    fn tree_code(&self, comp: &BTreeSet<VertexId>, oriented: bool) -> String {
        // peel leaves down to the centre(s)
        let mut deg: BTreeMap<VertexId, usize> = comp.iter().map(|&v| (v, self.degree(v))).collect();
        let mut removed = BTreeSet::new();
        let mut layer: Vec<VertexId> = comp.iter().copied().filter(|v| deg[v] <= 1).collect();
        let mut remaining = comp.len();
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &v in &layer {
                removed.insert(v);
                for u in self.neighbors(v) {
                    if removed.contains(&u) {
                        continue;
                    }
                    let d = deg.get_mut(&u).expect("same component");
                    *d -= 1;
                    if *d == 1 {
                        next.push(u);
                    }
                }
            }
            layer = next;
        }
        comp.difference(&removed)
            .map(|&c| self.rooted_code(c, None, oriented))
            .min()
            .expect("a tree has a centre")
    }

    fn rooted_code(&self, v: VertexId, parent: Option<VertexId>, oriented: bool) -> String {
        let mut kids: Vec<String> = self
            .neighbors(v)
            .filter(|&u| Some(u) != parent)
            .map(|u| {
                let mark = match (oriented, self.orientation(v, u)) {
                    (false, _) | (true, None) => 'n',
                    (true, Some((t, _))) if t == v => 'd',
                    _ => 'u',
                };
                format!("{mark}{}", self.rooted_code(u, Some(v), oriented))
            })
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }

    /// Edge-list text accepted by [`parse_forest`].
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for v in self.vertices() {
            if self.degree(v) == 0 {
                out.push_str(&format!("{v}\n"));
            }
        }
        for (u, v) in self.edges() {
            match self.orientation(u, v) {
                Some((t, h)) => out.push_str(&format!("{t} > {h}\n")),
                None => out.push_str(&format!("{u} {v}\n")),
            }
        }
        out
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .map(|(u, v)| match self.orientation(u, v) {
                Some((t, h)) => format!("{t}>{h}"),
                None => format!("{u}-{v}"),
            })
            .collect();
        write!(f, "Forest{{V={:?}, E=[{}]}}", self.vertices().collect::<Vec<_>>(), edges.join(" "))
    }
}

/// One root per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSet {
    roots: BTreeSet<VertexId>,
}

impl RootSet {
    pub fn new(f: &Forest, roots: impl IntoIterator<Item = VertexId>) -> Result<Self, ForestError> {
        let r = Self { roots: roots.into_iter().collect() };
        r.check(f)?;
        Ok(r)
    }

    pub fn roots(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.roots.iter().copied()
    }

    fn check(&self, f: &Forest) -> Result<(), ForestError> {
        for comp in f.component_sets() {
            let hits = comp.intersection(&self.roots).count();
            if hits != 1 {
                return Err(ForestError::InvalidRootSet(format!(
                    "component containing {} has {hits} roots",
                    comp.first().expect("nonempty")
                )));
            }
        }
        if let Some(r) = self.roots.iter().find(|r| !f.contains(**r)) {
            return Err(ForestError::InvalidRootSet(format!("{r} is not a vertex")));
        }
        Ok(())
    }
}

/// The `c_{i,j}` table; absent entries are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    pub n: usize,
    c: BTreeMap<(usize, usize), u64>,
}

impl CoefficientTable {
    pub fn from_entries(n: usize, it: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        let mut c = BTreeMap::new();
        for (k, v) in it {
            if v != 0 {
                *c.entry(k).or_insert(0) += v;
            }
        }
        Self { n, c }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.c.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero `((i, j), count)` ascending.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.c.iter().map(|(k, v)| (*k, *v))
    }

    /// `Σ_j c_{i,j}` for each `i`.
    pub fn marginals(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for (&(i, _), &v) in &self.c {
            if out.len() <= i {
                out.resize(i + 1, 0);
            }
            out[i] += v;
        }
        out
    }

    /// `c_{i,0}` for each `i` up to the largest size present.
    pub fn deficiency_zero(&self) -> Vec<u64> {
        let top = self.c.keys().map(|k| k.0).max().unwrap_or(0);
        trim((0..=top).map(|i| self.get(i, 0)).collect())
    }

    /// Table of a disjoint union.
    pub fn convolve(&self, other: &Self) -> Self {
        let mut c = BTreeMap::new();
        for (&(i1, j1), &v1) in &self.c {
            for (&(i2, j2), &v2) in &other.c {
                let p = v1.checked_mul(v2).expect("coefficient overflow");
                let slot = c.entry((i1 + i2, j1 + j2)).or_insert(0u64);
                *slot = slot.checked_add(p).expect("coefficient overflow");
            }
        }
        Self { n: self.n + other.n, c }
    }
}

/// Line graph of a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraph {
    pub edges: Vec<(VertexId, VertexId)>,
    pub adjacency: Vec<Vec<usize>>,
}

impl LineGraph {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }
}

// ---------------------------------------------------------------------------
// Dense polynomial helpers for the DPs
// ---------------------------------------------------------------------------

type Tab = Vec<Vec<u64>>;

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_add(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] = *x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] = out[i].checked_add(*x).expect("count overflow");
    }
    out
}

fn poly_mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let p = x.checked_mul(*y).expect("count overflow");
            out[i + j] = out[i + j].checked_add(p).expect("count overflow");
        }
    }
    out
}

fn tab_mul(a: &Tab, b: &Tab) -> Tab {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out: Tab = vec![Vec::new(); a.len() + b.len() - 1];
    for (i, ra) in a.iter().enumerate() {
        for (j, rb) in b.iter().enumerate() {
            let p = poly_mul(ra, rb);
            out[i + j] = poly_add(&out[i + j], &p);
        }
    }
    out
}

fn tab_add(a: &Tab, b: &Tab) -> Tab {
    let mut out: Tab = vec![Vec::new(); a.len().max(b.len())];
    for (i, r) in a.iter().enumerate() {
        out[i] = poly_add(&out[i], r);
    }
    for (i, r) in b.iter().enumerate() {
        out[i] = poly_add(&out[i], r);
    }
    out
}

/// `a − b`, coefficientwise; callers guarantee `b ≤ a`.
fn tab_sub(a: &Tab, b: &Tab) -> Tab {
    let mut out = a.clone();
    for (i, r) in b.iter().enumerate() {
        if out.len() <= i {
            out.resize(i + 1, Vec::new());
        }
        if out[i].len() < r.len() {
            out[i].resize(r.len(), 0);
        }
        for (j, x) in r.iter().enumerate() {
            out[i][j] = out[i][j].checked_sub(*x).expect("dominated subtraction");
        }
    }
    out
}

fn tab_shift(a: &Tab, di: usize, dp: usize) -> Tab {
    let mut out: Tab = vec![Vec::new(); di];
    for r in a {
        let mut row = vec![0u64; dp];
        row.extend_from_slice(r);
        out.push(row);
    }
    out
}

/// Per component: root, DFS preorder, parent links (indices into `nbrs`).
fn rooted_orders(
    nbrs: &[Vec<usize>],
    roots: Option<&[usize]>,
) -> Vec<(usize, Vec<usize>, Vec<Option<usize>>)> {
    let n = nbrs.len();
    let mut seen = vec![false; n];
    let mut parent = vec![None; n];
    let mut out = Vec::new();
    let starts: Vec<usize> = match roots {
        Some(r) => {
            let mut r = r.to_vec();
            r.sort_unstable();
            r
        }
        None => (0..n).collect(),
    };
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut order = Vec::new();
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            order.push(v);
            for &u in &nbrs[v] {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = Some(v);
                    stack.push(u);
                }
            }
        }
        out.push((s, order, parent.clone()));
    }
    out
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// A preset expression (`A4`, `D5+A1`, `T9`, ...) or an edge list.
pub fn parse_forest(spec: &str) -> Result<Forest, ForestError> {
    let trimmed = spec.trim();
    if trimmed.is_empty() || trimmed.eq_ignore_ascii_case("empty") {
        return Ok(Forest::new());
    }
    let tokens: Vec<&str> = trimmed.split('+').map(str::trim).collect();
    if tokens.iter().all(|t| looks_like_preset(t)) {
        let mut f = Forest::new();
        for t in tokens {
            f = f.disjoint_union(&preset(t)?);
        }
        return Ok(f);
    }
    parse_edge_list(spec)
}

fn looks_like_preset(t: &str) -> bool {
    let mut chars = t.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && !t[1..].is_empty()
        && t[1..].chars().all(|c| c.is_ascii_digit())
}

/// A single named forest.
pub fn preset(name: &str) -> Result<Forest, ForestError> {
    let err = |m: &str| parse_err(1, format!("{name}: {m}"));
    let (head, digits) = name.split_at(1);
    let n: u32 = digits.parse().map_err(|_| err("expected a size"))?;
    let e_type = |len: u32| {
        let mut f = Forest::path(len);
        f.add_edge(2, len).expect("extra leaf");
        f
    };
    match (head, n) {
        ("A", 1..) => Ok(Forest::path(n)),
        ("S", 1..) => Ok(Forest::star(n)),
        ("D", 4..) => {
            let mut f = Forest::path(n - 1);
            f.add_edge(1, n - 1).expect("extra leaf");
            Ok(f)
        }
        ("D", _) => Err(err("D_n needs n >= 4 (use A3 for n = 3)")),
        ("E", 6..=8) => Ok(e_type(n - 1)),
        ("T", 9) => {
            let mut f = Forest::path(5);
            for (leaf, at) in [(5, 2), (6, 2), (7, 4), (8, 4)] {
                f.add_edge(at, leaf).expect("extra leaf");
            }
            Ok(f)
        }
        _ => Err(err("unknown preset (A<n>, D<n>, E6, E7, E8, S<n>, T9)")),
    }
}

/// `u v`, `u > v` or a lone `v` per line; `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Forest, ForestError> {
    let mut f = Forest::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").replace('>', " > ");
        let toks: Vec<&str> = body.split_whitespace().collect();
        let id = |s: &str| -> Result<VertexId, ForestError> {
            s.parse().map_err(|_| parse_err(line, format!("bad vertex id {s:?}")))
        };
        match toks.as_slice() {
            [] => {}
            [v] => f.add_vertex(id(v)?),
            [u, v] => f.add_edge(id(u)?, id(v)?)?,
            [u, ">", v] => f.add_arrow(id(u)?, id(v)?)?,
            _ => return Err(parse_err(line, format!("cannot read {:?}", raw.trim()))),
        }
    }
    Ok(f)
}
