//! Finite fc-multicategories: construction, pasting composition, the Bim
//! construction, enriched categories, and exhaustive bounded law checking.

pub mod bim;
pub mod category;
pub mod cli;
pub mod enrich;
pub mod error;
pub mod fc;
pub mod instances;

pub use error::{Error, Result};
