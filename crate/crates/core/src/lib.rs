//! Topological indices of graphs, distance measures built on them, and
//! exhaustive search for tree pairs that separate those measures.

pub mod construct;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod indices;
pub mod io;
pub mod measures;
pub mod scalar;
pub mod search;
pub mod spectral;
pub mod tree;

pub use construct::{attach_tree, build_caterpillar, CaterpillarSpec, Tail};
pub use enumerate::{enumerate_trees, FreeTrees};
pub use error::{Error, Result};
pub use graph::Graph;
pub use indices::{IndexKind, IndexValue, LogBase};
pub use measures::{DistanceResult, Sigma};
pub use scalar::{Real, RootField};
pub use search::{CollisionPair, ConjectureId, SearchConfig, ViolationRecord};
pub use spectral::{char_poly, is_cospectral, CharPoly, JacobiOptions, Spectrum};
pub use tree::{CanonicalCode, Tree};

pub type Spectrum64 = Spectrum<f64>;
pub type Spectrum32 = Spectrum<f32>;
pub type IndexValue64 = IndexValue<f64>;
pub type DistanceResult64 = DistanceResult<f64>;
pub type Sigma64 = Sigma<f64>;
pub type LogBase64 = LogBase<f64>;
