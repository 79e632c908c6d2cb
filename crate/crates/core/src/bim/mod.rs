//! The Bim construction: monads, monad maps, bimodules and equivariant
//! 2-cells of an fc-multicategory, and their dictionary with categories,
//! functors and profunctors in the span model.
mod oracle;
pub mod span_model;
mod structure;

pub use oracle::{bim_oracle, enumerate_monads, BimOracle, BimoduleEntry, MapEntry};
pub use structure::{
    check_bim_cell, check_bimodule, check_monad, check_monad_map, laws, underlying_frame, BimFrame,
    BimTwoCell, Bimodule, Monad, MonadMap,
};
