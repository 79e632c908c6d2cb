//! Deliberately broken oracles for mutation testing of the checkers.

use super::oracle::FcOracle;
use super::shape::{CellId, Frame, HorId, ObjectId, TwoCell, VertId};
use crate::error::Result;

/// Wraps an oracle and remaps exactly one composite: pasting `children` onto
/// `theta` yields `replacement` instead of the true result.
pub struct RemapComposite<V> {
    inner: V,
    theta: TwoCell,
    children: Vec<TwoCell>,
    replacement: CellId,
}

impl<V> RemapComposite<V> {
    pub fn new(inner: V, theta: TwoCell, children: Vec<TwoCell>, replacement: CellId) -> Self {
        RemapComposite {
            inner,
            theta,
            children,
            replacement,
        }
    }
}

impl<V: FcOracle> FcOracle for RemapComposite<V> {
    fn objects(&self) -> Vec<ObjectId> {
        self.inner.objects()
    }
    fn verticals(&self, dom: ObjectId, cod: ObjectId) -> Vec<VertId> {
        self.inner.verticals(dom, cod)
    }
    fn horizontals(&self, src: ObjectId, dst: ObjectId) -> Vec<HorId> {
        self.inner.horizontals(src, dst)
    }
    fn vert_ends(&self, f: VertId) -> Result<(ObjectId, ObjectId)> {
        self.inner.vert_ends(f)
    }
    fn hor_ends(&self, m: HorId) -> Result<(ObjectId, ObjectId)> {
        self.inner.hor_ends(m)
    }
    fn compose_vert(&self, g: VertId, f: VertId) -> Result<VertId> {
        self.inner.compose_vert(g, f)
    }
    fn id_vert(&self, x: ObjectId) -> Result<VertId> {
        self.inner.id_vert(x)
    }
    fn cells_within(&self, frame: &Frame, budget: usize) -> Result<Vec<CellId>> {
        self.inner.cells_within(frame, budget)
    }
    fn has_cell(&self, frame: &Frame, id: &CellId) -> Result<bool> {
        self.inner.has_cell(frame, id)
    }
    fn compose_raw(
        &self,
        theta: &TwoCell,
        children: &[TwoCell],
        boundary: &[VertId],
        result: &Frame,
    ) -> Result<CellId> {
        if *theta == self.theta && children == self.children.as_slice() {
            return Ok(self.replacement.clone());
        }
        self.inner.compose_raw(theta, children, boundary, result)
    }
    fn id_cell_raw(&self, m: HorId) -> Result<CellId> {
        self.inner.id_cell_raw(m)
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
