//! Concrete fc-multicategories.

pub mod double;
pub mod monoidal;
pub mod multicat;
pub mod span;

pub use double::{double_fc, DoubleOracle, DoubleTables, Square, StrictDoublePresentation};
pub use monoidal::{
    monoidal_fc, FinSetProduct, MonoidalCategory, MonoidalOracle, MonoidalTables, Mor,
    PresentedMorphism, StrictMonoidalPresentation,
};
pub use multicat::{multicat_fc, MulticatOracle, MulticatPresentation, MulticatTables, Operation};
pub use span::{
    parbjn_check_and_restrict, path_limit, span_fc, FinFunction, FinSet, Span, SpanOracle,
    SpanUniverse,
};
