use std::collections::BTreeSet;

use forest_homfly::invariants::homfly_recursive;
use forest_homfly::plabic::moves::Move;
use forest_homfly::plabic::{
    construct_from_forest, corpus, homfly_skein, Color, FaceKind, Forbidden, PlabicError, PlabicMap,
    Violation,
};
use forest_homfly::{parse_forest, BivariateLaurent, Forest};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn load(name: &str) -> PlabicMap {
    corpus::load(name).unwrap_or_else(|| panic!("missing corpus map {name}"))
}

fn quiver_forest(g: &PlabicMap) -> Forest {
    g.quiver().to_forest().expect("forest quiver")
}

fn f(spec: &str) -> Forest {
    parse_forest(spec).unwrap()
}

#[test]
fn bundled_maps_validate() {
    for (name, _) in corpus::ALL {
        let rep = load(name).validate();
        assert!(rep.is_valid(), "{name}: {rep}");
    }
    assert!(load("a2_pentagon").validate().is_plausibly_reduced());
    assert!(load("a2_octagon").validate().is_plausibly_reduced());
}

#[test]
fn bubble_is_flagged_as_not_reduced() {
    let rep = load("a2_pentagon_bubble").validate();
    assert!(rep.is_valid());
    assert!(matches!(rep.forbidden.as_slice(), [Forbidden::SameColorBubble { .. }]), "{rep}");
}

#[test]
fn degree_two_boundary_vertex_is_rejected() {
    let json = r#"{
        "vertices": [{"id": 0, "color": "boundary"}, {"id": 1, "color": "black"}, {"id": 2, "color": "boundary"}],
        "edges": [[0, 1], [2, 3], [4, 5]],
        "rotation": {"0": [0, 2], "1": [1, 4], "2": [3], "3": []},
        "boundary": [0, 2]
    }"#;
    assert!(PlabicMap::from_json(json).is_err(), "vertex 3 is undeclared");
    let json = json.replace(r#", "3": []"#, "").replace(r#""1": [1, 4]"#, r#""1": [1, 4, 5]"#);
    let g = PlabicMap::from_json(&json).unwrap();
    let rep = g.validate();
    assert!(rep.violations.contains(&Violation::BoundaryDegree { vertex: 0, degree: 2 }), "{rep}");
    assert!(rep.into_result().is_err());
}

#[test]
fn json_round_trip_preserves_maps() {
    for (name, _) in corpus::ALL {
        let g = load(name);
        assert_eq!(PlabicMap::from_json(&g.to_json()).unwrap(), g, "{name}");
    }
    let g = load("hopf_black").remove_tail(0);
    assert!(g.is_err(), "only a loop would remain");
}

#[test]
fn face_counts() {
    let count = |g: &PlabicMap, k: FaceKind| g.faces().faces.iter().filter(|x| x.kind == k).count();
    let g = load("a2_pentagon");
    assert_eq!((count(&g, FaceKind::Interior), count(&g, FaceKind::Boundary)), (2, 5));
    assert_eq!(count(&load("lens"), FaceKind::Interior), 0);
    assert_eq!(count(&load("a2_octagon"), FaceKind::Interior), 2);
    assert_eq!(count(&load("e6_a2_forest"), FaceKind::Interior), 8);
}

#[test]
fn face_walks_partition_half_edges() {
    let mut maps: Vec<PlabicMap> = corpus::ALL.iter().map(|(n, _)| load(n)).collect();
    maps.extend(["A1", "D5", "E7", "A2+S4", "T9"].map(|s| construct_from_forest(&f(s))));
    for g in maps {
        let fd = g.faces();
        let mut seen = BTreeSet::new();
        for face in &fd.faces {
            for h in &face.walk {
                assert!(seen.insert(*h), "half-edge {h} in two walks");
            }
        }
        assert_eq!(seen.len(), 2 * g.edge_count());
    }
}

#[test]
fn strand_permutations() {
    assert_eq!(load("a2_pentagon").strand_permutation().unwrap().to_string(), "(1 4 2 5 3)");
    assert_eq!(load("a2_pentagon_bubble").strand_permutation().unwrap().to_string(), "(1 4 2 5 3)");
    assert_eq!(load("lens").strand_permutation().unwrap().to_string(), "(1 2)");
    let p = load("e6_a2_forest").strand_permutation().unwrap();
    assert_eq!(p.len(), 30);
}

#[test]
fn pentagon_quiver_arrow_points_right_to_left() {
    let g = load("a2_pentagon");
    let fd = g.faces();
    let q = g.quiver();
    assert_eq!(q.arrows.len(), 1);
    let (src, dst) = q.arrows[0];
    let verts = |i: u32| g.face_vertices(fd.face(q.faces[i as usize]));
    // w2 (id 7) bounds the right-hand face, w1 (id 5) the left-hand one.
    assert!(verts(src).contains(&7) && !verts(src).contains(&5));
    assert!(verts(dst).contains(&5) && !verts(dst).contains(&7));
}

#[test]
fn corpus_quivers() {
    assert!(quiver_forest(&load("a2_pentagon")).is_isomorphic(&f("A2"), false));
    assert!(quiver_forest(&load("a2_octagon")).is_isomorphic(&f("A2"), false));
    assert!(quiver_forest(&load("lens")).is_empty());
    assert!(quiver_forest(&load("hopf_white")).is_isomorphic(&f("A1"), false));
    assert!(quiver_forest(&load("e6_a2_forest")).is_isomorphic(&f("E6+A2"), false));
    assert!(quiver_forest(&load("a2_pentagon_bubble")).is_isomorphic(&f("A2+A1"), false));
}

#[test]
fn contraction_merges_degrees() {
    let g = load("a2_pentagon");
    // b1 (id 6) has degree four; split it and merge it back.
    let (split, nv, _) = g.uncontract(6, 1, 2).unwrap();
    assert_eq!((split.degree(6), split.degree(nv)), (3, 3));
    let link = split.rotation(nv)[0];
    let merged = split.contract(split.twin(link)).unwrap();
    assert_eq!(merged.degree(6), 4);
    assert!(merged.is_isomorphic(&g));
    assert!(matches!(g.contract(g.rotation(6)[0]), Err(PlabicError::PatternMismatch(_))));
}

#[test]
fn middle_vertex_removal_and_tails() {
    let g = load("a2_pentagon");
    let h = g.rotation(5)[1];
    let (with_mid, m) = g.insert_mid(h, Color::Black).unwrap();
    assert_eq!(with_mid.degree(m), 2);
    let back = with_mid.remove_mid(m).unwrap();
    assert!(back.is_isomorphic(&g));
    assert_eq!(back.edge_count(), g.edge_count());

    // Tail removal keeps the colour of the vertex it leaves.
    let b = g.boundary()[0];
    let v = g.head(g.rotation(b)[0]);
    let t = g.remove_tail(b).unwrap();
    assert_eq!(t.color(v), g.color(v));
    assert_eq!(t.boundary().len(), 4);
    assert!(matches!(g.remove_mid(v), Err(PlabicError::PatternMismatch(_))));

    // Adding the tail back in the same corner restores the map.
    let after = g.prev_ccw(g.twin(g.rotation(b)[0]));
    let (again, _) = t.add_tail(after).unwrap();
    assert!(again.is_isomorphic(&g));
    assert_eq!(again.strand_permutation().unwrap(), g.strand_permutation().unwrap());
}

#[test]
fn tail_reduction_of_lens_with_tails() {
    // b0 — w — b1 with a third boundary vertex hanging off w.
    let json = r#"{
        "vertices": [{"id": 0, "color": "boundary"}, {"id": 1, "color": "boundary"},
                     {"id": 2, "color": "boundary"}, {"id": 3, "color": "white"}],
        "edges": [[0, 1], [2, 3], [4, 5]],
        "rotation": {"0": [0], "1": [2], "2": [4], "3": [1, 5, 3]},
        "boundary": [0, 1, 2]
    }"#;
    let g = PlabicMap::from_json(json).unwrap();
    assert!(g.validate().is_valid());
    let r = g.tail_reduction();
    assert_eq!(r.boundary().len(), 2);
    assert!(r.trivalentize().unwrap().is_isomorphic(&load("lens")));
    assert!(load("lens").tail_reduction().is_isomorphic(&load("lens")));
    for name in ["hopf_black", "hopf_white"] {
        assert_eq!(load(name).tail_reduction(), load(name), "{name} is already tail reduced");
    }
}

#[test]
fn trivalentize_keeps_the_quiver() {
    let g = load("a2_pentagon");
    let t = g.trivalentize().unwrap();
    assert!(quiver_forest(&t).is_isomorphic(&quiver_forest(&g), true));
    assert!(t.interior_vertices().all(|v| t.degree(v) == 3));
    assert_eq!(t.trivalentize().unwrap(), t);

    // A same-colour leaf is absorbed.
    let b1 = 6;
    let (with_leaf, _, _) = g.uncontract(b1, 0, 1).unwrap();
    let (with_leaf, _) = with_leaf.insert_mid(with_leaf.rotation(b1)[0], Color::Black).unwrap();
    let t2 = with_leaf.trivalentize().unwrap();
    assert!(t2.interior_vertices().all(|v| t2.degree(v) == 3));
    assert!(quiver_forest(&t2).is_isomorphic(&quiver_forest(&g), true));
}

#[test]
fn leaf_face_normalization() {
    let g = load("a2_pentagon").prepare().unwrap();
    let q = g.quiver();
    let mut steps = Vec::new();
    for &face in &q.faces {
        let (h, site) = g.find_boundary_leaf_face(face).unwrap();
        steps.push(site.steps);
        assert_ne!(h.color(site.x), h.color(site.y));
        assert_eq!((h.degree(site.x), h.degree(site.y)), (3, 3));
        // Normalizing again is free.
        let fd = h.faces();
        let bigon = fd
            .faces
            .iter()
            .find(|x| x.walk.len() == 2 && x.walk.iter().any(|e| h.vertex_of(*e) == site.x))
            .unwrap();
        let (_, again) = h.find_boundary_leaf_face(bigon.id).unwrap();
        assert_eq!(again.steps, 0);
    }
    assert_eq!(steps, vec![2, 0]);
    let a3 = construct_from_forest(&f("A3")).prepare().unwrap();
    let q = a3.quiver();
    let middle = (0..q.len() as u32).find(|v| q.degree(*v) == 2).unwrap();
    assert_eq!(
        a3.find_boundary_leaf_face(q.faces[middle as usize]).unwrap_err(),
        PlabicError::NotALeafFace(q.faces[middle as usize])
    );
}

#[test]
fn splits() {
    let g = load("e6_a2_forest");
    let (a, b, route) = g.split_with_route().unwrap();
    assert!(!route.rewritten && !route.uncontracted);
    let (qa, qb) = (quiver_forest(&a), quiver_forest(&b));
    let e6 = f("E6");
    let a2 = f("A2");
    assert!(
        (qa.is_isomorphic(&e6, false) && qb.is_isomorphic(&a2, false))
            || (qa.is_isomorphic(&a2, false) && qb.is_isomorphic(&e6, false))
    );

    let (a, b, route) = load("figure_eight").split_with_route().unwrap();
    assert!(route.uncontracted && !route.loops_moved);
    assert_eq!((quiver_forest(&a).len(), quiver_forest(&b).len()), (1, 1));

    let (_, _, route) = load("nested_loops").split_with_route().unwrap();
    assert!(route.loops_moved);

    assert_eq!(load("a2_pentagon").split_at_dividing_edge().unwrap_err(), PlabicError::NotFound);
}

#[test]
fn skein_on_bundled_maps() {
    let hopf = "(z + z^-1)/a - z^-1/a^3";
    assert_eq!(homfly_skein(&load("hopf_black")).unwrap().to_string(), hopf);
    assert_eq!(homfly_skein(&load("hopf_white")).unwrap().to_string(), hopf);
    let trefoil = "(z^2 + 2)/a^2 - 1/a^4";
    assert_eq!(homfly_skein(&load("a2_pentagon")).unwrap().to_string(), trefoil);
    assert_eq!(homfly_skein(&load("a2_octagon")).unwrap().to_string(), trefoil);
    assert_eq!(homfly_skein(&load("lens")).unwrap(), BivariateLaurent::one());
    let e6a2 = homfly_recursive(&f("E6")) * homfly_recursive(&f("A2"));
    assert_eq!(homfly_skein(&load("e6_a2_forest")).unwrap(), e6a2);
    let a1 = homfly_recursive(&f("A1"));
    assert_eq!(homfly_skein(&load("figure_eight")).unwrap(), &a1 * &a1);
    assert_eq!(homfly_skein(&load("nested_loops")).unwrap(), &a1 * &a1);
}

#[test]
fn constructed_maps() {
    for spec in ["A1", "A2", "A5", "D4", "E6", "E8", "S5", "T9", "A1+A1", "A3+D4+A1"] {
        let fo = f(spec);
        let g = construct_from_forest(&fo);
        let rep = g.validate();
        assert!(rep.is_plausibly_reduced(), "{spec}: {rep}");
        assert!(quiver_forest(&g).is_isomorphic(&fo.oriented_default(), true), "{spec}");
        let fd = g.faces();
        for face in fd.interior() {
            assert!(face.walk.len() >= 6, "{spec}: interior face of degree {}", face.walk.len());
        }
    }
    let a2 = construct_from_forest(&f("A2"));
    assert_eq!(a2.faces().interior_count(), 2);
    assert!(construct_from_forest(&Forest::new()).is_isomorphic(&load("lens")));

    let one = construct_from_forest(&f("A1")).tail_reduction().trivalentize().unwrap();
    assert!(one.is_isomorphic(&load("hopf_black")) || one.is_isomorphic(&load("hopf_white")));
}

#[test]
fn arrows_follow_the_given_orientation() {
    let fo = parse_forest("0 > 1\n2 > 1\n2 > 3\n").unwrap();
    let g = construct_from_forest(&fo);
    assert!(quiver_forest(&g).is_isomorphic(&fo, true));
    let flipped = parse_forest("1 > 0\n2 > 1\n2 > 3\n").unwrap();
    assert!(!quiver_forest(&g).is_isomorphic(&flipped, true));
}

#[test]
fn random_moves_keep_strands_quiver_and_skein() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut maps: Vec<PlabicMap> = vec![load("a2_pentagon"), load("a2_octagon")];
    maps.extend(["A3", "D4", "A2+A1"].map(|s| construct_from_forest(&f(s))));
    for g0 in maps {
        let pi = g0.strand_permutation().unwrap();
        let q0 = quiver_forest(&g0);
        let mut g = g0.clone();
        for _ in 0..12 {
            let sites = g.local_move_sites();
            let mv = sites[rng.random_range(0..sites.len())];
            g = g.apply(mv).unwrap();
            assert!(g.validate().is_valid(), "{mv:?}");
            assert_eq!(g.strand_permutation().unwrap(), pi, "{mv:?}");
            assert!(quiver_forest(&g).is_isomorphic(&q0, true), "{mv:?}");
        }
        assert_eq!(homfly_skein(&g).unwrap(), homfly_recursive(&q0));
    }
}

#[test]
fn moves_reject_bad_sites() {
    let g = load("a2_pentagon");
    assert!(g.apply(Move::RemoveMid(0)).is_err());
    assert!(g.apply(Move::Uncontract { vertex: 0, start: 0, len: 1 }).is_err());
    assert!(g.apply(Move::Uncontract { vertex: 6, start: 0, len: 4 }).is_err());
    assert!(g.apply(Move::Contract(999)).is_err());
    assert!(g.apply(Move::RemoveTail(5)).is_err());
}
