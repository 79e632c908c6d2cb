use super::oracle::FcOracle;
use super::shape::{CellId, Frame, HorId, ObjectId, TwoCell, VertId};
use crate::error::{Error, Result};

/// The sub-fc-multicategory keeping every object, horizontal 1-cell and
/// 2-cell, but only identity vertical 1-cells.
pub struct IdentityVerticals<V> {
    inner: V,
}

pub fn restrict_verticals_to_identities<V: FcOracle>(v: V) -> IdentityVerticals<V> {
    IdentityVerticals { inner: v }
}

impl<V> IdentityVerticals<V> {
    pub fn inner(&self) -> &V {
        &self.inner
    }
}

impl<V: FcOracle> IdentityVerticals<V> {
    fn is_identity(&self, f: VertId) -> Result<bool> {
        let (dom, cod) = self.inner.vert_ends(f)?;
        Ok(dom == cod && self.inner.id_vert(dom)? == f)
    }

    fn require_identity(&self, f: VertId) -> Result<()> {
        if self.is_identity(f)? {
            Ok(())
        } else {
            Err(Error::UnknownCell(format!(
                "vertical {} is discarded by the restriction",
                self.inner.vert_label(f)
            )))
        }
    }

    fn require_frame(&self, frame: &Frame) -> Result<()> {
        self.require_identity(frame.left)?;
        self.require_identity(frame.right)
    }
}

impl<V: FcOracle> FcOracle for IdentityVerticals<V> {
    fn objects(&self) -> Vec<ObjectId> {
        self.inner.objects()
    }

    fn verticals(&self, dom: ObjectId, cod: ObjectId) -> Vec<VertId> {
        if dom == cod {
            self.inner.id_vert(dom).into_iter().collect()
        } else {
            Vec::new()
        }
    }

    fn horizontals(&self, src: ObjectId, dst: ObjectId) -> Vec<HorId> {
        self.inner.horizontals(src, dst)
    }

    fn vert_ends(&self, f: VertId) -> Result<(ObjectId, ObjectId)> {
        self.require_identity(f)?;
        self.inner.vert_ends(f)
    }

    fn hor_ends(&self, m: HorId) -> Result<(ObjectId, ObjectId)> {
        self.inner.hor_ends(m)
    }

    fn compose_vert(&self, g: VertId, f: VertId) -> Result<VertId> {
        self.require_identity(g)?;
        self.require_identity(f)?;
        self.inner.compose_vert(g, f)
    }

    fn id_vert(&self, x: ObjectId) -> Result<VertId> {
        self.inner.id_vert(x)
    }

    fn cells_within(&self, frame: &Frame, budget: usize) -> Result<Vec<CellId>> {
        self.require_frame(frame)?;
        self.inner.cells_within(frame, budget)
    }

    fn has_cell(&self, frame: &Frame, id: &CellId) -> Result<bool> {
        if !self.is_identity(frame.left)? || !self.is_identity(frame.right)? {
            return Ok(false);
        }
        self.inner.has_cell(frame, id)
    }

    fn compose_raw(
        &self,
        theta: &TwoCell,
        children: &[TwoCell],
        boundary: &[VertId],
        result: &Frame,
    ) -> Result<CellId> {
        for &f in boundary {
            self.require_identity(f)?;
        }
        self.inner.compose_raw(theta, children, boundary, result)
    }

    fn id_cell_raw(&self, m: HorId) -> Result<CellId> {
        self.inner.id_cell_raw(m)
    }

    fn concurrent_reads(&self) -> bool {
        self.inner.concurrent_reads()
    }

    fn object_label(&self, x: ObjectId) -> String {
        self.inner.object_label(x)
    }

    fn vert_label(&self, f: VertId) -> String {
        self.inner.vert_label(f)
    }

    fn hor_label(&self, m: HorId) -> String {
        self.inner.hor_label(m)
    }

    fn cell_label(&self, cell: &TwoCell) -> String {
        self.inner.cell_label(cell)
    }
}
