//! Bounded exhaustive law checking for an arbitrary [`FcOracle`].

use std::collections::HashMap;

use rayon::prelude::*;

use super::graph::{free_paths, Graph};
use super::oracle::{
    cells_bounded, compose_cells, describe_cell, id_cell, identity_boundary, path_end, FcOracle,
};
use super::report::{Bounds, LawReport};
use super::shape::{Frame, HorId, ObjectId, Path, TwoCell, VertId};
use crate::error::{Error, Result};

pub mod laws {
    pub const VERTICAL_TYPING: &str = "vertical-typing";
    pub const VERTICAL_LEFT_UNIT: &str = "vertical-left-unit";
    pub const VERTICAL_RIGHT_UNIT: &str = "vertical-right-unit";
    pub const VERTICAL_ASSOC: &str = "vertical-assoc";
    pub const CELL_LEFT_UNIT: &str = "cell-left-unit";
    pub const CELL_RIGHT_UNIT: &str = "cell-right-unit";
    pub const CELL_ASSOC: &str = "cell-assoc";
    pub const CLOSURE: &str = "closure";
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    #[default]
    Sequential,
    /// Splits the 2-cell checks across threads when the oracle allows it.
    /// Reports are merged in sequential order, so the result is identical.
    Parallel,
}

pub fn check_fc_laws(v: &(impl FcOracle + ?Sized), bounds: &Bounds) -> Result<LawReport> {
    check_fc_laws_with(v, bounds, Execution::Sequential)
}

pub fn check_fc_laws_with(
    v: &(impl FcOracle + ?Sized),
    bounds: &Bounds,
    exec: Execution,
) -> Result<LawReport> {
    let mut report = LawReport::with_bounds(*bounds);
    report.merge(check_vertical_laws(v));
    if bounds.max_nesting == 0 {
        return Ok(report);
    }
    let checker = Checker::new(v, bounds)?;
    let n = checker.catalogue.len();
    let parts: Vec<LawReport> = if exec == Execution::Parallel && v.concurrent_reads() {
        (0..n)
            .into_par_iter()
            .map(|i| checker.check_entry(i))
            .collect()
    } else {
        (0..n).map(|i| checker.check_entry(i)).collect()
    };
    for part in parts {
        report.merge(part);
    }
    Ok(report)
}

/// Category laws for objects and vertical 1-cells.
pub fn check_vertical_laws(v: &(impl FcOracle + ?Sized)) -> LawReport {
    let mut report = LawReport::new();
    let objects = v.objects();
    let mut ids = HashMap::new();
    for &x in &objects {
        match v.id_vert(x) {
            Ok(id) => {
                report.expect(
                    laws::VERTICAL_TYPING,
                    v.vert_ends(id).ok() == Some((x, x)),
                    || format!("identity on {} has wrong endpoints", v.object_label(x)),
                );
                ids.insert(x, id);
            }
            Err(e) => report.violate(
                laws::VERTICAL_TYPING,
                format!("no identity on {}: {e}", v.object_label(x)),
            ),
        }
    }
    let mut homs: HashMap<(ObjectId, ObjectId), Vec<VertId>> = HashMap::new();
    for &x in &objects {
        for &y in &objects {
            homs.insert((x, y), v.verticals(x, y));
        }
    }
    for &x in &objects {
        for &y in &objects {
            for &f in &homs[&(x, y)] {
                report.expect(
                    laws::VERTICAL_TYPING,
                    v.vert_ends(f).ok() == Some((x, y)),
                    || {
                        format!(
                            "{} listed in hom({}, {}) with other endpoints",
                            v.vert_label(f),
                            v.object_label(x),
                            v.object_label(y)
                        )
                    },
                );
                if let (Some(&ix), Some(&iy)) = (ids.get(&x), ids.get(&y)) {
                    let left = v.compose_vert(iy, f);
                    report.expect(
                        laws::VERTICAL_LEFT_UNIT,
                        left.as_ref().ok() == Some(&f),
                        || format!("1 ∘ {} = {:?}", v.vert_label(f), left),
                    );
                    let right = v.compose_vert(f, ix);
                    report.expect(
                        laws::VERTICAL_RIGHT_UNIT,
                        right.as_ref().ok() == Some(&f),
                        || format!("{} ∘ 1 = {:?}", v.vert_label(f), right),
                    );
                }
            }
        }
    }
    for &x in &objects {
        for &y in &objects {
            for &f in &homs[&(x, y)] {
                for &z in &objects {
                    for &g in &homs[&(y, z)] {
                        let gf = match v.compose_vert(g, f) {
                            Ok(gf) => gf,
                            Err(e) => {
                                report.violate(
                                    laws::VERTICAL_TYPING,
                                    format!("{} ∘ {}: {e}", v.vert_label(g), v.vert_label(f)),
                                );
                                continue;
                            }
                        };
                        report.expect(
                            laws::VERTICAL_TYPING,
                            v.vert_ends(gf).ok() == Some((x, z)),
                            || {
                                format!(
                                    "{} ∘ {} has wrong endpoints",
                                    v.vert_label(g),
                                    v.vert_label(f)
                                )
                            },
                        );
                        for &w in &objects {
                            for &h in &homs[&(z, w)] {
                                let lhs = v.compose_vert(h, g).and_then(|hg| v.compose_vert(hg, f));
                                let rhs = v.compose_vert(h, gf);
                                report.expect(laws::VERTICAL_ASSOC, lhs.is_ok() && lhs == rhs, || {
                                    format!(
                                        "({h} ∘ {g}) ∘ {f} = {lhs:?} but {h} ∘ ({g} ∘ {f}) = {rhs:?}",
                                        h = v.vert_label(h),
                                        g = v.vert_label(g),
                                        f = v.vert_label(f)
                                    )
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// Every frame whose source has length at most `max_arity`, in a fixed
/// order: by path, then left vertical, right vertical and target.
pub fn enumerate_frames(v: &(impl FcOracle + ?Sized), max_arity: usize) -> Result<Vec<Frame>> {
    let objects = v.objects();
    let index: HashMap<ObjectId, usize> =
        objects.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut edges = Vec::new();
    let mut edge_ids = Vec::new();
    for &x in &objects {
        for &y in &objects {
            for m in v.horizontals(x, y) {
                edges.push((index[&x], index[&y]));
                edge_ids.push(m);
            }
        }
    }
    let graph = Graph::new(objects.len(), edges);
    let mut frames = Vec::new();
    for fp in free_paths(&graph, max_arity) {
        let path = Path::new(
            objects[fp.start],
            fp.edges.iter().map(|&e| edge_ids[e]).collect(),
        );
        let start = path.anchor();
        let end = path_end(v, &path)?;
        for &x in &objects {
            let lefts = v.verticals(start, x);
            if lefts.is_empty() {
                continue;
            }
            for &y in &objects {
                let rights = v.verticals(end, y);
                let targets = v.horizontals(x, y);
                for &f in &lefts {
                    for &g in &rights {
                        for &m in &targets {
                            frames.push(Frame::new(path.clone(), f, g, m));
                        }
                    }
                }
            }
        }
    }
    Ok(frames)
}

struct Checker<'a, V: ?Sized> {
    v: &'a V,
    bounds: Bounds,
    catalogue: Vec<TwoCell>,
    by_target: HashMap<HorId, Vec<usize>>,
    by_target_left: HashMap<(HorId, VertId), Vec<usize>>,
    verts_into: HashMap<ObjectId, Vec<VertId>>,
}

impl<'a, V: FcOracle + ?Sized> Checker<'a, V> {
    fn new(v: &'a V, bounds: &Bounds) -> Result<Self> {
        let mut catalogue = Vec::new();
        for frame in enumerate_frames(v, bounds.max_arity)? {
            catalogue.extend(cells_bounded(v, &frame, bounds.max_cells_per_frame)?);
        }
        let mut by_target: HashMap<HorId, Vec<usize>> = HashMap::new();
        let mut by_target_left: HashMap<(HorId, VertId), Vec<usize>> = HashMap::new();
        for (i, c) in catalogue.iter().enumerate() {
            by_target.entry(c.frame.target).or_default().push(i);
            by_target_left
                .entry((c.frame.target, c.frame.left))
                .or_default()
                .push(i);
        }
        let objects = v.objects();
        let mut verts_into: HashMap<ObjectId, Vec<VertId>> = HashMap::new();
        for &y in &objects {
            let list = verts_into.entry(y).or_default();
            for &x in &objects {
                list.extend(v.verticals(x, y));
            }
        }
        Ok(Checker {
            v,
            bounds: *bounds,
            catalogue,
            by_target,
            by_target_left,
            verts_into,
        })
    }

    fn compose(
        &self,
        report: &mut LawReport,
        theta: &TwoCell,
        children: &[TwoCell],
        boundary: &[VertId],
    ) -> Result<TwoCell> {
        let out = compose_cells(self.v, theta, children, boundary)?;
        let ok = self.v.has_cell(&out.frame, &out.id).unwrap_or(false);
        report.expect(laws::CLOSURE, ok, || {
            format!(
                "composite {} of {} with {} children is not a cell",
                describe_cell(self.v, &out),
                describe_cell(self.v, theta),
                children.len()
            )
        });
        Ok(out)
    }

    fn check_entry(&self, i: usize) -> LawReport {
        let mut report = LawReport::new();
        let theta = &self.catalogue[i];
        self.identity_laws(&mut report, theta);
        if self.bounds.max_nesting >= 2 {
            self.associativity(&mut report, theta);
        }
        report
    }

    fn identity_laws(&self, report: &mut LawReport, theta: &TwoCell) {
        let v = self.v;
        let right = identity_boundary(v, &theta.frame.source).and_then(|boundary| {
            let ids = theta
                .frame
                .source
                .cells()
                .iter()
                .map(|&m| id_cell(v, m))
                .collect::<Result<Vec<_>>>()?;
            self.compose(report, theta, &ids, &boundary)
        });
        report.expect(laws::CELL_RIGHT_UNIT, right.as_ref() == Ok(theta), || {
            format!(
                "{} ∘ ⟨1, …, 1⟩ = {}",
                describe_cell(v, theta),
                show(v, &right)
            )
        });
        let left = id_cell(v, theta.frame.target).and_then(|unit| {
            self.compose(
                report,
                &unit,
                std::slice::from_ref(theta),
                &[theta.frame.left, theta.frame.right],
            )
        });
        report.expect(laws::CELL_LEFT_UNIT, left.as_ref() == Ok(theta), || {
            format!("1 ∘ ⟨{}⟩ = {}", describe_cell(v, theta), show(v, &left))
        });
    }

    /// Enumerates chains of catalogue cells over `slots` whose verticals
    /// agree, with total arity at most `budget`.
    fn chains(&self, slots: &[HorId], budget: usize, visit: &mut dyn FnMut(&[usize])) {
        let mut chosen = Vec::with_capacity(slots.len());
        self.chain_step(slots, budget, &mut chosen, visit);
    }

    fn chain_step(
        &self,
        slots: &[HorId],
        budget: usize,
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        let k = chosen.len();
        if k == slots.len() {
            visit(chosen);
            return;
        }
        let candidates = match chosen.last() {
            None => self.by_target.get(&slots[k]),
            Some(&prev) => self
                .by_target_left
                .get(&(slots[k], self.catalogue[prev].frame.right)),
        };
        let Some(candidates) = candidates else { return };
        for &c in candidates {
            let arity = self.catalogue[c].arity();
            if arity > budget {
                continue;
            }
            chosen.push(c);
            self.chain_step(slots, budget - arity, chosen, visit);
            chosen.pop();
        }
    }

    fn associativity(&self, report: &mut LawReport, theta: &TwoCell) {
        let a = self.bounds.max_arity;
        let slots = theta.frame.source.cells().to_vec();
        if slots.is_empty() {
            let anchor = theta.frame.source.anchor();
            for &f0 in self.verts_into.get(&anchor).into_iter().flatten() {
                self.with_children(report, theta, &[], vec![f0]);
            }
            return;
        }
        let mut configs = Vec::new();
        self.chains(&slots, a, &mut |chosen| configs.push(chosen.to_vec()));
        for chosen in configs {
            let children: Vec<TwoCell> =
                chosen.iter().map(|&c| self.catalogue[c].clone()).collect();
            let mut boundary = vec![children[0].frame.left];
            boundary.extend(children.iter().map(|c| c.frame.right));
            self.with_children(report, theta, &children, boundary);
        }
    }

    fn with_children(
        &self,
        report: &mut LawReport,
        theta: &TwoCell,
        children: &[TwoCell],
        boundary: Vec<VertId>,
    ) {
        let v = self.v;
        let mid = match self.compose(report, theta, children, &boundary) {
            Ok(mid) => mid,
            Err(e) => {
                report.violate(
                    laws::CELL_ASSOC,
                    format!("inner composite of {} failed: {e}", describe_cell(v, theta)),
                );
                return;
            }
        };
        let slots = mid.frame.source.cells().to_vec();
        if slots.is_empty() {
            let anchor = mid.frame.source.anchor();
            for &h0 in self.verts_into.get(&anchor).into_iter().flatten() {
                self.compare(report, theta, children, &boundary, &mid, &[], &[h0]);
            }
            return;
        }
        let mut configs = Vec::new();
        self.chains(&slots, self.bounds.max_arity, &mut |chosen| {
            configs.push(chosen.to_vec())
        });
        for chosen in configs {
            let grand: Vec<TwoCell> = chosen.iter().map(|&c| self.catalogue[c].clone()).collect();
            let mut hb = vec![grand[0].frame.left];
            hb.extend(grand.iter().map(|c| c.frame.right));
            self.compare(report, theta, children, &boundary, &mid, &grand, &hb);
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn compare(
        &self,
        report: &mut LawReport,
        theta: &TwoCell,
        children: &[TwoCell],
        boundary: &[VertId],
        mid: &TwoCell,
        grand: &[TwoCell],
        grand_boundary: &[VertId],
    ) {
        let v = self.v;
        let lhs = self.compose(report, mid, grand, grand_boundary);
        let rhs = (|| -> Result<TwoCell> {
            let mut inner = Vec::with_capacity(children.len());
            let mut new_boundary = vec![v.compose_vert(boundary[0], grand_boundary[0])?];
            let mut pos = 0;
            for (i, child) in children.iter().enumerate() {
                let r = child.arity();
                let seg = &grand[pos..pos + r];
                let seg_boundary = &grand_boundary[pos..=pos + r];
                inner.push(self.compose(report, child, seg, seg_boundary)?);
                pos += r;
                new_boundary.push(v.compose_vert(boundary[i + 1], grand_boundary[pos])?);
            }
            self.compose(report, theta, &inner, &new_boundary)
        })();
        report.expect(laws::CELL_ASSOC, lhs.is_ok() && lhs == rhs, || {
            let kids: Vec<_> = children.iter().map(|c| describe_cell(v, c)).collect();
            let grands: Vec<_> = grand.iter().map(|c| describe_cell(v, c)).collect();
            let verts: Vec<_> = grand_boundary.iter().map(|&h| v.vert_label(h)).collect();
            format!(
                "θ = {}; children = [{}]; grandchildren = [{}]; outer boundary = [{}]; \
                 (θ∘⟨θᵢ⟩)∘⟨φ⟩ = {} but θ∘⟨θᵢ∘⟨φ⟩⟩ = {}",
                describe_cell(v, theta),
                kids.join("; "),
                grands.join("; "),
                verts.join(", "),
                show(v, &lhs),
                show(v, &rhs)
            )
        });
    }
}

fn show(v: &(impl FcOracle + ?Sized), r: &Result<TwoCell, Error>) -> String {
    match r {
        Ok(c) => describe_cell(v, c),
        Err(e) => format!("error ({e})"),
    }
}
