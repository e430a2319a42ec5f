//! Hand-transcribed example maps.

use super::PlabicMap;

/// `(name, json)` for every bundled map.
pub const ALL: &[(&str, &str)] = &[
    ("a2_pentagon", include_str!("../../corpus/a2_pentagon.json")),
    ("a2_pentagon_bubble", include_str!("../../corpus/a2_pentagon_bubble.json")),
    ("a2_octagon", include_str!("../../corpus/a2_octagon.json")),
    ("lens", include_str!("../../corpus/lens.json")),
    ("hopf_black", include_str!("../../corpus/hopf_black.json")),
    ("hopf_white", include_str!("../../corpus/hopf_white.json")),
    ("e6_a2_forest", include_str!("../../corpus/e6_a2_forest.json")),
    ("figure_eight", include_str!("../../corpus/figure_eight.json")),
    ("nested_loops", include_str!("../../corpus/nested_loops.json")),
];

/// Loads a bundled map by name.
pub fn load(name: &str) -> Option<PlabicMap> {
    ALL.iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| PlabicMap::from_json(s).expect("bundled maps parse"))
}
