use std::sync::Arc;

use super::shape::{CellId, Frame, HorId, ObjectId, Path, TwoCell, VertId};
use crate::error::{Error, Result};

/// An fc-multicategory presented by enumeration and composition capabilities.
///
/// All capabilities are total on valid inputs and deterministic. Enumerations
/// return ids in a fixed order. Instances must be read-only after
/// construction.
pub trait FcOracle: Send + Sync {
    fn objects(&self) -> Vec<ObjectId>;

    /// Vertical 1-cells `dom -> cod`.
    fn verticals(&self, dom: ObjectId, cod: ObjectId) -> Vec<VertId>;

    /// Horizontal 1-cells `src -> dst`.
    fn horizontals(&self, src: ObjectId, dst: ObjectId) -> Vec<HorId>;

    /// `(dom, cod)` of a vertical 1-cell.
    fn vert_ends(&self, f: VertId) -> Result<(ObjectId, ObjectId)>;

    /// `(src, dst)` of a horizontal 1-cell.
    fn hor_ends(&self, m: HorId) -> Result<(ObjectId, ObjectId)>;

    /// `g ∘ f`.
    fn compose_vert(&self, g: VertId, f: VertId) -> Result<VertId>;

    fn id_vert(&self, x: ObjectId) -> Result<VertId>;

    /// All cells of a well-formed frame, failing with `BudgetExceeded` as soon
    /// as more than `budget` would be produced.
    fn cells_within(&self, frame: &Frame, budget: usize) -> Result<Vec<CellId>>;

    /// Whether `id` names a cell of `frame`.
    fn has_cell(&self, frame: &Frame, id: &CellId) -> Result<bool>;

    /// Instance-specific part of pasting. Called by [`compose_cells`] only
    /// after every precondition has been checked; `result` is the frame of the
    /// composite.
    fn compose_raw(
        &self,
        theta: &TwoCell,
        children: &[TwoCell],
        boundary: &[VertId],
        result: &Frame,
    ) -> Result<CellId>;

    fn id_cell_raw(&self, m: HorId) -> Result<CellId>;

    /// Whether disjoint checks may query this oracle from several threads.
    fn concurrent_reads(&self) -> bool {
        true
    }

    fn object_label(&self, x: ObjectId) -> String {
        x.to_string()
    }

    fn vert_label(&self, f: VertId) -> String {
        f.to_string()
    }

    fn hor_label(&self, m: HorId) -> String {
        m.to_string()
    }

    fn cell_label(&self, cell: &TwoCell) -> String {
        cell.id.to_string()
    }
}

macro_rules! forward_oracle {
    ($($ty:ty),*) => {$(
        impl<T: FcOracle + ?Sized> FcOracle for $ty {
            fn objects(&self) -> Vec<ObjectId> { (**self).objects() }
            fn verticals(&self, dom: ObjectId, cod: ObjectId) -> Vec<VertId> { (**self).verticals(dom, cod) }
            fn horizontals(&self, src: ObjectId, dst: ObjectId) -> Vec<HorId> { (**self).horizontals(src, dst) }
            fn vert_ends(&self, f: VertId) -> Result<(ObjectId, ObjectId)> { (**self).vert_ends(f) }
            fn hor_ends(&self, m: HorId) -> Result<(ObjectId, ObjectId)> { (**self).hor_ends(m) }
            fn compose_vert(&self, g: VertId, f: VertId) -> Result<VertId> { (**self).compose_vert(g, f) }
            fn id_vert(&self, x: ObjectId) -> Result<VertId> { (**self).id_vert(x) }
            fn cells_within(&self, frame: &Frame, budget: usize) -> Result<Vec<CellId>> { (**self).cells_within(frame, budget) }
            fn has_cell(&self, frame: &Frame, id: &CellId) -> Result<bool> { (**self).has_cell(frame, id) }
            fn compose_raw(&self, theta: &TwoCell, children: &[TwoCell], boundary: &[VertId], result: &Frame) -> Result<CellId> {
                (**self).compose_raw(theta, children, boundary, result)
            }
            fn id_cell_raw(&self, m: HorId) -> Result<CellId> { (**self).id_cell_raw(m) }
            fn concurrent_reads(&self) -> bool { (**self).concurrent_reads() }
            fn object_label(&self, x: ObjectId) -> String { (**self).object_label(x) }
            fn vert_label(&self, f: VertId) -> String { (**self).vert_label(f) }
            fn hor_label(&self, m: HorId) -> String { (**self).hor_label(m) }
            fn cell_label(&self, cell: &TwoCell) -> String { (**self).cell_label(cell) }
        }
    )*};
}

forward_oracle!(&T, Box<T>, Arc<T>);

/// End object of a path.
pub fn path_end(v: &(impl FcOracle + ?Sized), path: &Path) -> Result<ObjectId> {
    match path.cells().last() {
        Some(&m) => Ok(v.hor_ends(m)?.1),
        None => Ok(path.anchor()),
    }
}

/// Checks that consecutive horizontals in `path` meet and that the anchor is
/// the start object.
pub fn validate_path(v: &(impl FcOracle + ?Sized), path: &Path) -> Result<()> {
    let mut at = path.anchor();
    for (i, &m) in path.cells().iter().enumerate() {
        let (src, dst) = v.hor_ends(m)?;
        if src != at {
            return Err(Error::MalformedPath(format!(
                "cell {i} ({}) starts at {} but the path is at {}",
                v.hor_label(m),
                v.object_label(src),
                v.object_label(at)
            )));
        }
        at = dst;
    }
    Ok(())
}

/// Checks the frame invariants.
pub fn validate_frame(v: &(impl FcOracle + ?Sized), frame: &Frame) -> Result<()> {
    validate_path(v, &frame.source).map_err(|e| Error::FrameError(e.to_string()))?;
    let start = frame.source.anchor();
    let end = path_end(v, &frame.source)?;
    let (ldom, lcod) = v.vert_ends(frame.left)?;
    let (rdom, rcod) = v.vert_ends(frame.right)?;
    let (tsrc, tdst) = v.hor_ends(frame.target)?;
    let fail = |what: &str| {
        Err(Error::FrameError(format!(
            "{what} in {}",
            describe_frame(v, frame)
        )))
    };
    if ldom != start {
        return fail("left vertical does not start at the source path");
    }
    if rdom != end {
        return fail("right vertical does not start at the end of the source path");
    }
    if lcod != tsrc {
        return fail("left vertical does not end at the target's source");
    }
    if rcod != tdst {
        return fail("right vertical does not end at the target's destination");
    }
    Ok(())
}

/// All cells of a frame without a budget.
pub fn cells(v: &(impl FcOracle + ?Sized), frame: &Frame) -> Result<Vec<TwoCell>> {
    cells_bounded(v, frame, usize::MAX)
}

pub fn cells_bounded(
    v: &(impl FcOracle + ?Sized),
    frame: &Frame,
    budget: usize,
) -> Result<Vec<TwoCell>> {
    Ok(v.cells_within(frame, budget)?
        .into_iter()
        .map(|id| TwoCell::new(id, frame.clone()))
        .collect())
}

fn ensure_known(v: &(impl FcOracle + ?Sized), cell: &TwoCell) -> Result<()> {
    if v.has_cell(&cell.frame, &cell.id)? {
        Ok(())
    } else {
        Err(Error::UnknownCell(describe_cell(v, cell)))
    }
}

/// Pastes `children` onto the source of `theta`.
///
/// `boundary` lists the verticals `f_0..f_n` running between the children;
/// for a nullary `theta` it is the single vertical `f_0` whiskering it.
pub fn compose_cells(
    v: &(impl FcOracle + ?Sized),
    theta: &TwoCell,
    children: &[TwoCell],
    boundary: &[VertId],
) -> Result<TwoCell> {
    let n = theta.arity();
    if children.len() != n {
        return Err(Error::boundary(
            children.len().min(n),
            format!(
                "{} children supplied for a cell of arity {n}",
                children.len()
            ),
        ));
    }
    if boundary.len() != n + 1 {
        return Err(Error::boundary(
            boundary.len().min(n + 1),
            format!(
                "{} boundary verticals supplied, {} expected",
                boundary.len(),
                n + 1
            ),
        ));
    }
    ensure_known(v, theta)?;

    let source = if n == 0 {
        let (dom, cod) = v.vert_ends(boundary[0])?;
        if cod != theta.frame.source.anchor() {
            return Err(Error::boundary(
                0,
                format!(
                    "whiskering vertical {} ends at {}, the nullary cell sits at {}",
                    v.vert_label(boundary[0]),
                    v.object_label(cod),
                    v.object_label(theta.frame.source.anchor())
                ),
            ));
        }
        Path::empty(dom)
    } else {
        let mut cells = Vec::new();
        for (i, child) in children.iter().enumerate() {
            let slot = i + 1;
            if child.frame.target != theta.frame.source.cells()[i] {
                return Err(Error::boundary(
                    slot,
                    format!(
                        "child target {} does not match source cell {}",
                        v.hor_label(child.frame.target),
                        v.hor_label(theta.frame.source.cells()[i])
                    ),
                ));
            }
            if child.frame.left != boundary[i] {
                return Err(Error::boundary(
                    slot,
                    "child left vertical differs from boundary",
                ));
            }
            if child.frame.right != boundary[i + 1] {
                return Err(Error::boundary(
                    slot,
                    "child right vertical differs from boundary",
                ));
            }
            ensure_known(v, child)?;
            cells.extend_from_slice(child.frame.source.cells());
        }
        Path::new(children[0].frame.source.anchor(), cells)
    };

    let result = Frame::new(
        source,
        v.compose_vert(theta.frame.left, boundary[0])?,
        v.compose_vert(theta.frame.right, boundary[n])?,
        theta.frame.target,
    );
    validate_frame(v, &result).map_err(|e| Error::ClosureViolation(e.to_string()))?;
    let id = v.compose_raw(theta, children, boundary, &result)?;
    Ok(TwoCell::new(id, result))
}

/// `θ ∘ ⟨children⟩` with identity verticals on the whole boundary. With no
/// children this whiskers `θ` by the identity at its anchor.
pub fn compose_with_identities(
    v: &(impl FcOracle + ?Sized),
    theta: &TwoCell,
    children: &[TwoCell],
) -> Result<TwoCell> {
    compose_cells(
        v,
        theta,
        children,
        &identity_boundary(v, &theta.frame.source)?,
    )
}

/// The identity 2-cell on a horizontal 1-cell.
pub fn id_cell(v: &(impl FcOracle + ?Sized), m: HorId) -> Result<TwoCell> {
    let (x, y) = v.hor_ends(m)?;
    let frame = Frame::new(Path::single(x, m), v.id_vert(x)?, v.id_vert(y)?, m);
    Ok(TwoCell::new(v.id_cell_raw(m)?, frame))
}

/// Identity verticals at every node of `path`.
pub fn identity_boundary(v: &(impl FcOracle + ?Sized), path: &Path) -> Result<Vec<VertId>> {
    let mut out = vec![v.id_vert(path.anchor())?];
    for &m in path.cells() {
        out.push(v.id_vert(v.hor_ends(m)?.1)?);
    }
    Ok(out)
}

/// Nodes `x_0..x_n` of a path.
pub fn path_nodes(v: &(impl FcOracle + ?Sized), path: &Path) -> Result<Vec<ObjectId>> {
    let mut out = vec![path.anchor()];
    for &m in path.cells() {
        out.push(v.hor_ends(m)?.1);
    }
    Ok(out)
}

pub fn describe_frame(v: &(impl FcOracle + ?Sized), frame: &Frame) -> String {
    let src = if frame.source.is_empty() {
        format!("()@{}", v.object_label(frame.source.anchor()))
    } else {
        let parts: Vec<_> = frame
            .source
            .cells()
            .iter()
            .map(|&m| v.hor_label(m))
            .collect();
        format!("({})", parts.join(", "))
    };
    format!(
        "{src} => {} [{} | {}]",
        v.hor_label(frame.target),
        v.vert_label(frame.left),
        v.vert_label(frame.right)
    )
}

pub fn describe_cell(v: &(impl FcOracle + ?Sized), cell: &TwoCell) -> String {
    format!(
        "{} : {}",
        v.cell_label(cell),
        describe_frame(v, &cell.frame)
    )
}
