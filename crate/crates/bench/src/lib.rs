//! Shared inputs for the benchmarks.

use forest_homfly::{parse_forest, Forest};

/// Forests benchmarked by name.
pub const CASES: &[&str] = &["A4", "D5", "E8", "T9", "A3+D4", "S12", "A16"];

pub fn case(name: &str) -> Forest {
    parse_forest(name).expect("benchmark preset")
}
