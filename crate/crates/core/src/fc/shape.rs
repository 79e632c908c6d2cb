//! The shape language: identifiers, paths of horizontal 1-cells, frames and
//! identified 2-cells.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

macro_rules! id_newtype {
    ($(#[$meta:meta])* $name:ident, $prefix:literal) => {
        $(#[$meta])*
        #[derive(
            Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
        )]
        pub struct $name(pub u32);

        impl $name {
            pub fn index(self) -> usize {
                self.0 as usize
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, concat!($prefix, "{}"), self.0)
            }
        }
    };
}

id_newtype!(
    /// An object of an fc-multicategory.
    ObjectId,
    "x"
);
id_newtype!(
    /// A vertical 1-cell. Its endpoints are looked up through the oracle.
    VertId,
    "v"
);
id_newtype!(
    /// A horizontal 1-cell. Its endpoints are looked up through the oracle.
    HorId,
    "h"
);

/// Identity of a 2-cell within its frame.
///
/// Instances intern cells canonically: a tabulated instance uses a single
/// index, `Span` uses the full value table. Two cells of the same frame are
/// equal exactly when their ids are equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellId(Arc<[u32]>);

impl CellId {
    pub fn atom(n: u32) -> Self {
        CellId(Arc::from(vec![n]))
    }

    pub fn from_table(table: Vec<u32>) -> Self {
        CellId(Arc::from(table))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// The single index of an atomic id.
    pub fn as_atom(&self) -> Option<u32> {
        match &*self.0 {
            [n] => Some(*n),
            _ => None,
        }
    }
}

impl fmt::Debug for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// A string of horizontal 1-cells `x_0 -> x_1 -> ... -> x_n`.
///
/// `anchor` is always the start object. For the empty path it is the only
/// information the path carries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Path {
    anchor: ObjectId,
    cells: Vec<HorId>,
}

impl Path {
    pub fn new(anchor: ObjectId, cells: Vec<HorId>) -> Self {
        Path { anchor, cells }
    }

    pub fn empty(anchor: ObjectId) -> Self {
        Path {
            anchor,
            cells: Vec::new(),
        }
    }

    pub fn single(anchor: ObjectId, m: HorId) -> Self {
        Path {
            anchor,
            cells: vec![m],
        }
    }

    pub fn anchor(&self) -> ObjectId {
        self.anchor
    }

    pub fn cells(&self) -> &[HorId] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// The boundary of a 2-cell.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Frame {
    pub source: Path,
    pub left: VertId,
    pub right: VertId,
    pub target: HorId,
}

impl Frame {
    pub fn new(source: Path, left: VertId, right: VertId, target: HorId) -> Self {
        Frame {
            source,
            left,
            right,
            target,
        }
    }

    pub fn arity(&self) -> usize {
        self.source.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwoCell {
    pub id: CellId,
    pub frame: Frame,
}

impl TwoCell {
    pub fn new(id: CellId, frame: Frame) -> Self {
        TwoCell { id, frame }
    }

    pub fn arity(&self) -> usize {
        self.frame.arity()
    }
}
