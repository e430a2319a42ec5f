//! Helpers shared by the integration tests: seeded generators, exhaustive
//! enumerations and brute-force counters that don't touch the library's DP.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use forest_homfly::{CoefficientTable, Forest, HalfLaurent, RootSet, VertexId};
use rand::seq::SliceRandom;
use rand::Rng;

/// `(preset, HOMFLY, Alexander)` in canonical text rendering.
pub const TABLE: [(&str, &str, &str); 6] = [
    ("A4", "(z^4 + 4z^2 + 3)/a^4 - (z^2 + 2)/a^6", "t^-2(t^4 - t^3 + t^2 - t + 1)"),
    (
        "D5",
        "(z^5 + 5z^3 + 6z + 2z^-1)/a^5 - (z^3 + 4z + 3z^-1)/a^7 + z^-1/a^9",
        "t^-5/2(t^5 - t^4 + t - 1)",
    ),
    (
        "E6",
        "(z^6 + 6z^4 + 10z^2 + 5)/a^6 - (z^4 + 5z^2 + 5)/a^8 + 1/a^10",
        "t^-3(t^6 - t^5 + t^3 - t + 1)",
    ),
    (
        "E7",
        "(z^7 + 7z^5 + 15z^3 + 11z + 2z^-1)/a^7 - (z^5 + 6z^3 + 9z + 3z^-1)/a^9 + (z + z^-1)/a^11",
        "t^-7/2(t^7 - t^6 + t^4 - t^3 + t - 1)",
    ),
    (
        "E8",
        "(z^8 + 8z^6 + 21z^4 + 21z^2 + 7)/a^8 - (z^6 + 7z^4 + 14z^2 + 8)/a^10 + (z^2 + 2)/a^12",
        "t^-4(t^8 - t^7 + t^5 - t^4 + t^3 - t + 1)",
    ),
    (
        "T9",
        "(z^9 + 9z^7 + 28z^5 + 39z^3 + 28z + 11z^-1 + 2z^-3)/a^9 \
         - (z^7 + 11z^5 + 36z^3 + 47z + 28z^-1 + 7z^-3)/a^11 \
         + (5z^3 + 20z + 23z^-1 + 9z^-3)/a^13 - (z + 6z^-1 + 5z^-3)/a^15 + z^-3/a^17",
        "t^-9/2(t^9 - t^8 - 3t^7 + 7t^6 - 8t^5 + 8t^4 - 7t^3 + 3t^2 + t - 1)",
    ),
];

pub const D4_HOMFLY: &str = "(z^4 + 4z^2 + 3 + z^-2)/a^4 - (z^2 + 3 + 2z^-2)/a^6 + z^-2/a^8";

/// Uniform labeled tree on `0..n` (Prüfer).
pub fn random_tree(rng: &mut impl Rng, n: u32) -> Forest {
    match n {
        0 => Forest::new(),
        1 => Forest::path(1),
        _ => {
            let seq: Vec<VertexId> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            Forest::from_prufer(&seq).expect("valid sequence")
        }
    }
}

/// Random forest on exactly `n` vertices with ids shuffled and each edge
/// given a random direction (or none).
pub fn random_forest(rng: &mut impl Rng, n: u32, max_components: u32) -> Forest {
    let k = rng.random_range(1..=max_components.min(n).max(1));
    let mut sizes = vec![1u32; k as usize];
    for _ in k..n {
        let i = rng.random_range(0..sizes.len());
        sizes[i] += 1;
    }
    if n == 0 {
        sizes.clear();
    }
    let mut f = Forest::new();
    for s in sizes {
        f = f.disjoint_union(&random_tree(rng, s));
    }
    shuffle_and_orient(rng, &f)
}

/// Random tree with `lo..=hi` vertices.
pub fn random_tree_between(rng: &mut impl Rng, lo: u32, hi: u32) -> Forest {
    let n = rng.random_range(lo..=hi);
    let t = random_tree(rng, n);
    shuffle_and_orient(rng, &t)
}

pub fn shuffle_and_orient(rng: &mut impl Rng, f: &Forest) -> Forest {
    let ids: Vec<VertexId> = f.vertices().collect();
    let mut perm: Vec<VertexId> = (0..ids.len() as VertexId).map(|i| i * 3 + 1).collect();
    perm.shuffle(rng);
    let map: BTreeMap<VertexId, VertexId> = ids.iter().copied().zip(perm).collect();
    let mut out = Forest::new();
    for v in &ids {
        out.add_vertex(map[v]);
    }
    for (u, v) in f.edges() {
        let (u, v) = (map[&u], map[&v]);
        match rng.random_range(0..3) {
            0 => out.add_edge(u, v),
            1 => out.add_arrow(u, v),
            _ => out.add_arrow(v, u),
        }
        .expect("relabeled forest");
    }
    out
}

/// Every unlabeled tree on `n` vertices, grown leaf by leaf and deduplicated
/// by canonical form.
pub fn unlabeled_trees(n: u32) -> Vec<Forest> {
    if n == 0 {
        return vec![Forest::new()];
    }
    let mut level = vec![Forest::path(1)];
    for size in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in t.vertices().collect::<Vec<_>>() {
                let mut g = t.clone();
                g.add_edge(v, size).expect("fresh leaf");
                if seen.insert(g.canonical_form(false)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level
}

fn dense(f: &Forest) -> (Vec<VertexId>, Vec<(usize, usize)>) {
    let ids: Vec<VertexId> = f.vertices().collect();
    let pos = |v: VertexId| ids.binary_search(&v).expect("vertex");
    let edges = f.edges().map(|(u, v)| (pos(u), pos(v))).collect();
    (ids, edges)
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn independent(mask: u64, edges: &[(usize, usize)]) -> bool {
    edges.iter().all(|&(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0)
}

/// Independent sets by subset enumeration.
pub fn brute_independent(f: &Forest) -> Vec<u64> {
    let (ids, edges) = dense(f);
    let mut out = vec![0u64; ids.len() + 1];
    for mask in 0u64..1 << ids.len() {
        if independent(mask, &edges) {
            out[mask.count_ones() as usize] += 1;
        }
    }
    trim(out)
}

/// Matchings by enumerating edge subsets.
pub fn brute_matchings(f: &Forest) -> Vec<u64> {
    let (ids, edges) = dense(f);
    let mut out = vec![0u64; ids.len() / 2 + 1];
    for mask in 0u64..1 << edges.len() {
        let mut used = 0u64;
        let mut ok = true;
        for (k, &(u, v)) in edges.iter().enumerate() {
            if mask >> k & 1 == 1 {
                if used >> u & 1 == 1 || used >> v & 1 == 1 {
                    ok = false;
                    break;
                }
                used |= 1 << u | 1 << v;
            }
        }
        if ok {
            out[mask.count_ones() as usize] += 1;
        }
    }
    trim(out)
}

/// Parent of every non-root vertex, by BFS from each root.
fn parents(f: &Forest, roots: &RootSet) -> BTreeMap<VertexId, VertexId> {
    let mut parent = BTreeMap::new();
    let mut seen: BTreeSet<VertexId> = BTreeSet::new();
    for r in roots.roots() {
        let mut queue = VecDeque::from([r]);
        seen.insert(r);
        while let Some(v) = queue.pop_front() {
            for u in f.neighbors(v) {
                if seen.insert(u) {
                    parent.insert(u, v);
                    queue.push_back(u);
                }
            }
        }
    }
    parent
}

/// `c_{i,j}` by subset enumeration: `j = |I| − #{parents of members of I}`.
pub fn brute_cij(f: &Forest, roots: &RootSet) -> CoefficientTable {
    let (ids, edges) = dense(f);
    let parent = parents(f, roots);
    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for mask in 0u64..1 << ids.len() {
        if !independent(mask, &edges) {
            continue;
        }
        let members: Vec<VertexId> = (0..ids.len()).filter(|k| mask >> k & 1 == 1).map(|k| ids[k]).collect();
        let ps: BTreeSet<VertexId> = members.iter().filter_map(|v| parent.get(v).copied()).collect();
        *counts.entry((members.len(), members.len() - ps.len())).or_insert(0) += 1;
    }
    CoefficientTable::from_entries(ids.len(), counts)
}

/// One uniformly chosen root per component.
pub fn random_roots(rng: &mut impl Rng, f: &Forest) -> RootSet {
    let roots: Vec<VertexId> = f
        .components()
        .iter()
        .map(|c| {
            let vs: Vec<VertexId> = c.vertices().collect();
            vs[rng.random_range(0..vs.len())]
        })
        .collect();
    RootSet::new(f, roots).expect("one root per component")
}

fn t_pow(c: i64, k: i32) -> HalfLaurent {
    HalfLaurent::monomial(c, 2 * k)
}

fn one_minus_t() -> HalfLaurent {
    HalfLaurent::from_terms([(0, 1), (2, -1)]).unwrap()
}

fn sign(n: u32) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `t^{-n/2} Σ_k (−1)^{n−k} t^k`.
pub fn alexander_a(n: u32) -> HalfLaurent {
    let sum = (0..=n).fold(HalfLaurent::zero(), |acc, k| acc + t_pow(sign(n - k), k as i32));
    HalfLaurent::monomial(1, -(n as i32)) * sum
}

/// `t^{-n/2}(t^n − t^{n−1} + (−1)^{n−1} t + (−1)^n)`.
pub fn alexander_d(n: u32) -> HalfLaurent {
    let body = t_pow(1, n as i32) + t_pow(-1, n as i32 - 1) + t_pow(sign(n - 1), 1) + t_pow(sign(n), 0);
    HalfLaurent::monomial(1, -(n as i32)) * body
}

/// `(−1)^n t^{-n/2}((1−t)^n + (n−1)t(1−t)^{n−2})`.
pub fn alexander_s(n: u32) -> HalfLaurent {
    let body = one_minus_t().pow(n) + t_pow(n as i64 - 1, 1) * one_minus_t().pow(n - 2);
    HalfLaurent::monomial(sign(n), -(n as i32)) * body
}
