//! Shapes, the abstract fc-multicategory interface, pasting composition and
//! the bounded law checker.

mod check;
mod graph;
pub mod mutation;
mod oracle;
mod report;
mod restrict;
mod shape;

pub use check::{
    check_fc_laws, check_fc_laws_with, check_vertical_laws, enumerate_frames, laws, Execution,
};
pub use graph::{free_paths, FreePath, Graph};
pub use oracle::{
    cells, cells_bounded, compose_cells, compose_with_identities, describe_cell, describe_frame,
    id_cell, identity_boundary, path_end, path_nodes, validate_frame, validate_path, FcOracle,
};
pub use report::{Bounds, LawReport, Violation};
pub use restrict::{restrict_verticals_to_identities, IdentityVerticals};
pub use shape::{CellId, Frame, HorId, ObjectId, Path, TwoCell, VertId};
