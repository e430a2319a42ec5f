//! HOMFLY polynomials of forest quivers.
//!
//! Three routes to the same value: the leaf recursion, the closed
//! independent-set formula, and a skein evaluation on plabic graphs built
//! from the forest. Alexander, Conway and point-count specializations hang
//! off the same data.

pub mod forest;
pub mod invariants;
pub mod laurent;
pub mod plabic;

pub use forest::{parse_forest, CoefficientTable, Forest, ForestError, RootSet, VertexId};
pub use invariants::{InvariantError, InvariantReport, RPolynomial};
pub use laurent::{BivariateLaurent, Format, HalfLaurent, LaurentError};
pub use plabic::{Color, PlabicError, PlabicMap, StrandPermutation};
