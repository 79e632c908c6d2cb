//! Strict double categories as fc-multicategories.
//!
//! A 2-cell `(m_1, ..., m_n) => m` with sides `f, f'` is a square whose top
//! edge is the horizontal composite `m_n ∘ ... ∘ m_1` (the horizontal
//! identity when `n = 0`). Pasting places the children side by side and
//! stacks the result on top of `θ`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::category::FinCategory;
use crate::error::{Error, Result};
use crate::fc::{validate_frame, CellId, FcOracle, Frame, HorId, ObjectId, TwoCell, VertId};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Square {
    pub name: String,
    /// horizontal arrows
    pub top: u32,
    pub bottom: u32,
    /// vertical arrows
    pub left: u32,
    pub right: u32,
}

/// Raw tables of a [`StrictDoublePresentation`]. Both categories share the
/// object set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleTables {
    pub vertical: FinCategory,
    pub horizontal: FinCategory,
    pub squares: Vec<Square>,
    /// `(α, β, α|β)`: `β` to the right of `α`
    pub hcomp: Vec<(u32, u32, u32)>,
    /// `(α, β, α/β)`: `α` on top of `β`
    pub vcomp: Vec<(u32, u32, u32)>,
    /// square with identity top and bottom on each vertical arrow
    pub hid: Vec<u32>,
    /// square with identity sides on each horizontal arrow
    pub vid: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictDoublePresentation {
    t: DoubleTables,
    hcomp: HashMap<(u32, u32), u32>,
    vcomp: HashMap<(u32, u32), u32>,
    by_boundary: HashMap<(u32, u32, u32, u32), Vec<u32>>,
}

impl StrictDoublePresentation {
    pub fn new(tables: DoubleTables) -> Result<Self> {
        let p = Self::new_unchecked(tables)?;
        p.validate()?;
        Ok(p)
    }

    /// Checks only that the tables are in range and unambiguous.
    pub fn new_unchecked(t: DoubleTables) -> Result<Self> {
        let bad = |m: String| Err(Error::MalformedPresentation(m));
        if t.vertical.objects() != t.horizontal.objects() {
            return bad("vertical and horizontal categories must share their objects".into());
        }
        let (nv, nh) = (
            t.vertical.morphism_count() as u32,
            t.horizontal.morphism_count() as u32,
        );
        let mut by_boundary: HashMap<_, Vec<u32>> = HashMap::new();
        for (i, s) in t.squares.iter().enumerate() {
            if s.top >= nh || s.bottom >= nh || s.left >= nv || s.right >= nv {
                return bad(format!(
                    "square {} has an edge outside the categories",
                    s.name
                ));
            }
            by_boundary
                .entry((s.top, s.bottom, s.left, s.right))
                .or_default()
                .push(i as u32);
        }
        let ns = t.squares.len() as u32;
        let table = |entries: &[(u32, u32, u32)], what: &str| -> Result<HashMap<(u32, u32), u32>> {
            let mut map = HashMap::new();
            for &(a, b, c) in entries {
                if a >= ns || b >= ns || c >= ns {
                    return Err(Error::MalformedPresentation(format!(
                        "{what} entry ({a}, {b}, {c}) names a missing square"
                    )));
                }
                if map.insert((a, b), c).is_some_and(|old| old != c) {
                    return Err(Error::MalformedPresentation(format!(
                        "{what} of ({a}, {b}) is given twice"
                    )));
                }
            }
            Ok(map)
        };
        let hcomp = table(&t.hcomp, "horizontal composition")?;
        let vcomp = table(&t.vcomp, "vertical composition")?;
        Ok(StrictDoublePresentation {
            t,
            hcomp,
            vcomp,
            by_boundary,
        })
    }

    pub fn tables(&self) -> &DoubleTables {
        &self.t
    }

    pub fn vertical(&self) -> &FinCategory {
        &self.t.vertical
    }

    pub fn horizontal(&self) -> &FinCategory {
        &self.t.horizontal
    }

    pub fn square(&self, s: u32) -> &Square {
        &self.t.squares[s as usize]
    }

    pub fn squares_with(&self, top: u32, bottom: u32, left: u32, right: u32) -> &[u32] {
        self.by_boundary
            .get(&(top, bottom, left, right))
            .map_or(&[], Vec::as_slice)
    }

    pub fn hcomp(&self, a: u32, b: u32) -> Option<u32> {
        self.hcomp.get(&(a, b)).copied()
    }

    pub fn vcomp(&self, a: u32, b: u32) -> Option<u32> {
        self.vcomp.get(&(a, b)).copied()
    }

    /// Overwrites one vertical composite without re-checking the laws.
    pub fn set_vcomp_unchecked(&mut self, a: u32, b: u32, c: u32) {
        self.vcomp.insert((a, b), c);
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::MalformedPresentation(m));
        let (v, h) = (&self.t.vertical, &self.t.horizontal);
        v.validate()
            .map_err(|e| Error::MalformedPresentation(format!("vertical category: {e}")))?;
        h.validate()
            .map_err(|e| Error::MalformedPresentation(format!("horizontal category: {e}")))?;
        let sq = |s: u32| &self.t.squares[s as usize];
        for s in &self.t.squares {
            if h.dom(s.top) != v.dom(s.left)
                || h.cod(s.top) != v.dom(s.right)
                || h.dom(s.bottom) != v.cod(s.left)
                || h.cod(s.bottom) != v.cod(s.right)
            {
                return bad(format!("square {} does not close up", s.name));
            }
        }
        let ns = self.t.squares.len() as u32;
        if self.t.hid.len() != v.morphism_count() || self.t.vid.len() != h.morphism_count() {
            return bad("identity squares must cover every arrow".into());
        }
        for (f, &s) in self.t.hid.iter().enumerate() {
            let f = f as u32;
            if s >= ns {
                return bad("identity square is missing".into());
            }
            let q = sq(s);
            if q.left != f
                || q.right != f
                || q.top != h.identity(v.dom(f))
                || q.bottom != h.identity(v.cod(f))
            {
                return bad(format!(
                    "horizontal identity square on {} is mistyped",
                    v.morphism(f).name
                ));
            }
        }
        for (m, &s) in self.t.vid.iter().enumerate() {
            let m = m as u32;
            if s >= ns {
                return bad("identity square is missing".into());
            }
            let q = sq(s);
            if q.top != m
                || q.bottom != m
                || q.left != v.identity(h.dom(m))
                || q.right != v.identity(h.cod(m))
            {
                return bad(format!(
                    "vertical identity square on {} is mistyped",
                    h.morphism(m).name
                ));
            }
        }
        for a in 0..ns {
            for b in 0..ns {
                let (qa, qb) = (sq(a), sq(b));
                match (qa.right == qb.left, self.hcomp(a, b)) {
                    (false, None) => {}
                    (false, Some(_)) => {
                        return bad(format!(
                            "{} | {} is given but they do not meet",
                            qa.name, qb.name
                        ))
                    }
                    (true, None) => return bad(format!("{} | {} is missing", qa.name, qb.name)),
                    (true, Some(c)) => {
                        let qc = sq(c);
                        if Some(qc.top) != h.compose(qb.top, qa.top)
                            || Some(qc.bottom) != h.compose(qb.bottom, qa.bottom)
                            || qc.left != qa.left
                            || qc.right != qb.right
                        {
                            return bad(format!(
                                "{} | {} has the wrong boundary",
                                qa.name, qb.name
                            ));
                        }
                    }
                }
                match (qa.bottom == qb.top, self.vcomp(a, b)) {
                    (false, None) => {}
                    (false, Some(_)) => {
                        return bad(format!(
                            "{} / {} is given but they do not meet",
                            qa.name, qb.name
                        ))
                    }
                    (true, None) => return bad(format!("{} / {} is missing", qa.name, qb.name)),
                    (true, Some(c)) => {
                        let qc = sq(c);
                        if Some(qc.left) != v.compose(qb.left, qa.left)
                            || Some(qc.right) != v.compose(qb.right, qa.right)
                            || qc.top != qa.top
                            || qc.bottom != qb.bottom
                        {
                            return bad(format!(
                                "{} / {} has the wrong boundary",
                                qa.name, qb.name
                            ));
                        }
                    }
                }
            }
        }
        for a in 0..ns {
            let q = sq(a);
            if self.hcomp(self.t.hid[q.left as usize], a) != Some(a)
                || self.hcomp(a, self.t.hid[q.right as usize]) != Some(a)
            {
                return bad(format!("horizontal unit law fails at {}", q.name));
            }
            if self.vcomp(self.t.vid[q.top as usize], a) != Some(a)
                || self.vcomp(a, self.t.vid[q.bottom as usize]) != Some(a)
            {
                return bad(format!("vertical unit law fails at {}", q.name));
            }
        }
        for a in 0..ns {
            for b in 0..ns {
                for c in 0..ns {
                    if let (Some(ab), Some(bc)) = (self.hcomp(a, b), self.hcomp(b, c)) {
                        if self.hcomp(ab, c) != self.hcomp(a, bc) {
                            return bad(format!(
                                "horizontal composition is not associative at ({a}, {b}, {c})"
                            ));
                        }
                    }
                    if let (Some(ab), Some(bc)) = (self.vcomp(a, b), self.vcomp(b, c)) {
                        if self.vcomp(ab, c) != self.vcomp(a, bc) {
                            return bad(format!(
                                "vertical composition is not associative at ({a}, {b}, {c})"
                            ));
                        }
                    }
                }
            }
        }
        // (α | β) / (γ | δ) = (α / γ) | (β / δ)
        let hpairs: Vec<(u32, u32, u32)> =
            self.hcomp.iter().map(|(&(a, b), &c)| (a, b, c)).collect();
        for &(a, b, ab) in &hpairs {
            for &(c, d, cd) in &hpairs {
                let (Some(ac), Some(bd)) = (self.vcomp(a, c), self.vcomp(b, d)) else {
                    continue;
                };
                if self.vcomp(ab, cd) != self.hcomp(ac, bd) {
                    return bad(format!("interchange fails at ({a}, {b}, {c}, {d})"));
                }
            }
        }
        for (g, f, gf) in v.entries() {
            if self.vcomp(self.t.hid[f as usize], self.t.hid[g as usize])
                != Some(self.t.hid[gf as usize])
            {
                return bad("horizontal identities do not respect vertical composition".into());
            }
        }
        for (n, m, nm) in h.entries() {
            if self.hcomp(self.t.vid[m as usize], self.t.vid[n as usize])
                != Some(self.t.vid[nm as usize])
            {
                return bad("vertical identities do not respect horizontal composition".into());
            }
        }
        for x in 0..v.object_count() as u32 {
            if self.t.hid[v.identity(x) as usize] != self.t.vid[h.identity(x) as usize] {
                return bad("identity squares disagree on an object".into());
            }
        }
        Ok(())
    }

    /// Squares are the boundaries `(top, bottom, left, right)` in `c` with
    /// `right ∘ top = bottom ∘ left`; `c` is both the vertical and the
    /// horizontal category.
    pub fn commuting_squares(c: &FinCategory) -> Result<Self> {
        let n = c.morphism_count() as u32;
        let mut squares = Vec::new();
        let mut index = HashMap::new();
        for top in 0..n {
            for left in c.hom_from(c.dom(top)) {
                for right in c.hom_from(c.cod(top)) {
                    for bottom in c.hom(c.cod(left), c.cod(right)) {
                        if c.compose(right, top) == c.compose(bottom, left) {
                            index.insert((top, bottom, left, right), squares.len() as u32);
                            squares.push(Square {
                                name: format!(
                                    "[{}|{}|{}|{}]",
                                    c.morphism(top).name,
                                    c.morphism(bottom).name,
                                    c.morphism(left).name,
                                    c.morphism(right).name
                                ),
                                top,
                                bottom,
                                left,
                                right,
                            });
                        }
                    }
                }
            }
        }
        Self::thin(c.clone(), c.clone(), squares, &index)
    }

    /// One object, identity arrows only, one square.
    pub fn terminal() -> Self {
        Self::commuting_squares(&FinCategory::terminal())
            .expect("the terminal double category is valid")
    }

    /// The strict 2-category `c` with only identity 2-cells, as a double
    /// category whose vertical category is discrete.
    pub fn vertically_discrete(c: &FinCategory) -> Result<Self> {
        let v = FinCategory::discrete(c.objects().iter().cloned());
        let mut squares = Vec::new();
        let mut index = HashMap::new();
        for (m, mor) in c.morphisms().iter().enumerate() {
            let m = m as u32;
            let (l, r) = (v.identity(mor.dom), v.identity(mor.cod));
            index.insert((m, m, l, r), squares.len() as u32);
            squares.push(Square {
                name: format!("1_{}", mor.name),
                top: m,
                bottom: m,
                left: l,
                right: r,
            });
        }
        Self::thin(v, c.clone(), squares, &index)
    }

    // Composition tables for a double category with at most one square per
    // boundary.
    fn thin(
        v: FinCategory,
        h: FinCategory,
        squares: Vec<Square>,
        index: &HashMap<(u32, u32, u32, u32), u32>,
    ) -> Result<Self> {
        let ns = squares.len();
        let mut hcomp = Vec::new();
        let mut vcomp = Vec::new();
        let missing =
            || Error::MalformedPresentation("squares are not closed under composition".into());
        for a in 0..ns {
            for b in 0..ns {
                let (qa, qb) = (&squares[a], &squares[b]);
                if qa.right == qb.left {
                    let key = (
                        h.compose(qb.top, qa.top).ok_or_else(missing)?,
                        h.compose(qb.bottom, qa.bottom).ok_or_else(missing)?,
                        qa.left,
                        qb.right,
                    );
                    hcomp.push((a as u32, b as u32, *index.get(&key).ok_or_else(missing)?));
                }
                if qa.bottom == qb.top {
                    let key = (
                        qa.top,
                        qb.bottom,
                        v.compose(qb.left, qa.left).ok_or_else(missing)?,
                        v.compose(qb.right, qa.right).ok_or_else(missing)?,
                    );
                    vcomp.push((a as u32, b as u32, *index.get(&key).ok_or_else(missing)?));
                }
            }
        }
        let hid = (0..v.morphism_count() as u32)
            .map(|f| {
                let key = (h.identity(v.dom(f)), h.identity(v.cod(f)), f, f);
                index.get(&key).copied().ok_or_else(missing)
            })
            .collect::<Result<_>>()?;
        let vid = (0..h.morphism_count() as u32)
            .map(|m| {
                let key = (m, m, v.identity(h.dom(m)), v.identity(h.cod(m)));
                index.get(&key).copied().ok_or_else(missing)
            })
            .collect::<Result<_>>()?;
        Self::new(DoubleTables {
            vertical: v,
            horizontal: h,
            squares,
            hcomp,
            vcomp,
            hid,
            vid,
        })
    }
}

/// The fc-multicategory of a strict double category.
#[derive(Clone, Debug)]
pub struct DoubleOracle {
    d: StrictDoublePresentation,
}

pub fn double_fc(d: StrictDoublePresentation) -> DoubleOracle {
    DoubleOracle { d }
}

impl DoubleOracle {
    pub fn presentation(&self) -> &StrictDoublePresentation {
        &self.d
    }

    /// Horizontal composite of a well-formed source row.
    fn top(&self, frame: &Frame) -> Result<u32> {
        let h = self.d.horizontal();
        let mut acc = h.identity(frame.source.anchor().0);
        for m in frame.source.cells() {
            acc = h.compose(m.0, acc).ok_or_else(|| {
                Error::MalformedPath(format!("horizontal arrows do not compose at {m}"))
            })?;
        }
        Ok(acc)
    }

    fn squares_of(&self, frame: &Frame) -> Result<&[u32]> {
        validate_frame(self, frame)?;
        Ok(self.d.squares_with(
            self.top(frame)?,
            frame.target.0,
            frame.left.0,
            frame.right.0,
        ))
    }

    fn square_of(cell: &TwoCell) -> Result<u32> {
        cell.id
            .as_atom()
            .ok_or_else(|| Error::UnknownCell(cell.id.to_string()))
    }

    /// The cell of a square, with the given source row.
    pub fn cell(&self, source: crate::fc::Path, square: u32) -> Result<TwoCell> {
        let q = self
            .d
            .t
            .squares
            .get(square as usize)
            .ok_or_else(|| Error::UnknownCell(format!("square {square}")))?;
        let frame = Frame::new(source, VertId(q.left), VertId(q.right), HorId(q.bottom));
        if !self.squares_of(&frame)?.contains(&square) {
            return Err(Error::UnknownCell(format!(
                "square {} does not fit its source row",
                q.name
            )));
        }
        Ok(TwoCell::new(CellId::atom(square), frame))
    }
}

impl FcOracle for DoubleOracle {
    fn objects(&self) -> Vec<ObjectId> {
        (0..self.d.vertical().object_count() as u32)
            .map(ObjectId)
            .collect()
    }

    fn verticals(&self, dom: ObjectId, cod: ObjectId) -> Vec<VertId> {
        self.d
            .vertical()
            .hom(dom.0, cod.0)
            .into_iter()
            .map(VertId)
            .collect()
    }

    fn horizontals(&self, src: ObjectId, dst: ObjectId) -> Vec<HorId> {
        self.d
            .horizontal()
            .hom(src.0, dst.0)
            .into_iter()
            .map(HorId)
            .collect()
    }

    fn vert_ends(&self, f: VertId) -> Result<(ObjectId, ObjectId)> {
        let v = self.d.vertical();
        if f.index() >= v.morphism_count() {
            return Err(Error::UnknownCell(format!("vertical {f}")));
        }
        Ok((ObjectId(v.dom(f.0)), ObjectId(v.cod(f.0))))
    }

    fn hor_ends(&self, m: HorId) -> Result<(ObjectId, ObjectId)> {
        let h = self.d.horizontal();
        if m.index() >= h.morphism_count() {
            return Err(Error::UnknownCell(format!("horizontal {m}")));
        }
        Ok((ObjectId(h.dom(m.0)), ObjectId(h.cod(m.0))))
    }

    fn compose_vert(&self, g: VertId, f: VertId) -> Result<VertId> {
        self.vert_ends(g)?;
        self.vert_ends(f)?;
        self.d
            .vertical()
            .compose(g.0, f.0)
            .map(VertId)
            .ok_or_else(|| {
                Error::NotComposable(format!("{} ∘ {}", self.vert_label(g), self.vert_label(f)))
            })
    }

    fn id_vert(&self, x: ObjectId) -> Result<VertId> {
        self.d
            .vertical()
            .identities()
            .get(x.index())
            .map(|&i| VertId(i))
            .ok_or_else(|| Error::UnknownCell(format!("object {x}")))
    }

    fn cells_within(&self, frame: &Frame, budget: usize) -> Result<Vec<CellId>> {
        let squares = self.squares_of(frame)?;
        if squares.len() > budget {
            return Err(Error::BudgetExceeded {
                frame: crate::fc::describe_frame(self, frame),
                limit: budget,
            });
        }
        Ok(squares.iter().map(|&s| CellId::atom(s)).collect())
    }

    fn has_cell(&self, frame: &Frame, id: &CellId) -> Result<bool> {
        Ok(id
            .as_atom()
            .is_some_and(|s| self.squares_of(frame).is_ok_and(|q| q.contains(&s))))
    }

    fn compose_raw(
        &self,
        theta: &TwoCell,
        children: &[TwoCell],
        boundary: &[VertId],
        _: &Frame,
    ) -> Result<CellId> {
        let missing = |what: &str| Error::ClosureViolation(format!("{what} is not tabulated"));
        let top = match children.split_first() {
            None => self.d.t.hid[boundary[0].index()],
            Some((first, rest)) => {
                let mut acc = Self::square_of(first)?;
                for c in rest {
                    acc = self
                        .d
                        .hcomp(acc, Self::square_of(c)?)
                        .ok_or_else(|| missing("a horizontal composite"))?;
                }
                acc
            }
        };
        self.d
            .vcomp(top, Self::square_of(theta)?)
            .map(CellId::atom)
            .ok_or_else(|| missing("a vertical composite"))
    }

    fn id_cell_raw(&self, m: HorId) -> Result<CellId> {
        self.d
            .t
            .vid
            .get(m.index())
            .map(|&s| CellId::atom(s))
            .ok_or_else(|| Error::UnknownCell(format!("horizontal {m}")))
    }

    fn object_label(&self, x: ObjectId) -> String {
        self.d
            .vertical()
            .objects()
            .get(x.index())
            .cloned()
            .unwrap_or_else(|| x.to_string())
    }

    fn vert_label(&self, f: VertId) -> String {
        let v = self.d.vertical();
        if f.index() < v.morphism_count() {
            v.morphism(f.0).name.clone()
        } else {
            f.to_string()
        }
    }

    fn hor_label(&self, m: HorId) -> String {
        let h = self.d.horizontal();
        if m.index() < h.morphism_count() {
            h.morphism(m.0).name.clone()
        } else {
            m.to_string()
        }
    }

    fn cell_label(&self, cell: &TwoCell) -> String {
        cell.id
            .as_atom()
            .and_then(|s| self.d.t.squares.get(s as usize))
            .map_or_else(|| cell.id.to_string(), |q| q.name.clone())
    }
}
