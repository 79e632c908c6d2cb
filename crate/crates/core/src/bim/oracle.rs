use std::collections::HashMap;

use super::structure::{
    act_src_frame, act_tgt_frame, bim_cell_laws, commute_law, monad_laws, monad_map_laws,
    src_action_laws, tgt_action_laws, BimFrame, Bimodule, Monad, MonadMap,
};
use crate::error::{Error, Result};
use crate::fc::{
    cells_bounded, compose_cells, describe_frame, CellId, FcOracle, Frame, HorId, LawReport,
    ObjectId, Path, TwoCell, VertId,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapEntry {
    pub map: MonadMap,
    pub src: ObjectId,
    pub tgt: ObjectId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleEntry {
    pub bimodule: Bimodule,
    pub src: ObjectId,
    pub tgt: ObjectId,
}

/// `Bim(V)`: monads, monad maps, bimodules and equivariant 2-cells of `V`,
/// materialized by enumeration.
///
/// Objects, vertical and horizontal 1-cells are listed in a fixed order:
/// monads by carrier object, endo-1-cell, multiplication and unit; maps by
/// source, target, vertical and 2-cell; bimodules by source, target,
/// carrier and actions. 2-cells are the 2-cells of `V` that pass the
/// equivariance check, with the same ids.
#[derive(Debug)]
pub struct BimOracle<V> {
    v: V,
    budget: usize,
    monads: Vec<Monad>,
    maps: Vec<MapEntry>,
    bimodules: Vec<BimoduleEntry>,
    identities: Vec<VertId>,
    vert_composites: HashMap<(VertId, VertId), VertId>,
    maps_by_ends: HashMap<(ObjectId, ObjectId), Vec<VertId>>,
    bimodules_by_ends: HashMap<(ObjectId, ObjectId), Vec<HorId>>,
}

fn passes(f: impl FnOnce(&mut LawReport) -> Result<()>) -> Result<bool> {
    let mut report = LawReport::new();
    f(&mut report)?;
    Ok(report.pass)
}

pub fn bim_oracle<V: FcOracle>(v: V, budget: usize) -> Result<BimOracle<V>> {
    BimOracle::new(v, budget)
}

impl<V: FcOracle> BimOracle<V> {
    /// Enumerates every monad on every horizontal endo-1-cell of `V`.
    pub fn new(v: V, budget: usize) -> Result<Self> {
        let mut carriers = Vec::new();
        for x in v.objects() {
            carriers.extend(v.horizontals(x, x));
        }
        Self::with_carriers(v, budget, &carriers)
    }

    /// Enumerates monads only on the given endo-1-cells.
    pub fn with_carriers(v: V, budget: usize, carriers: &[HorId]) -> Result<Self> {
        let monads = enumerate_monads(&v, budget, carriers)?;
        Self::from_monads(v, budget, monads, None)
    }

    /// A Bim oracle on the given monads, with monad maps and bimodules
    /// between them enumerated.
    pub fn with_monads(v: V, budget: usize, monads: Vec<Monad>) -> Result<Self> {
        for m in &monads {
            if !passes(|r| monad_laws(&v, m, r, false))? {
                return Err(Error::NotAMonad(v.hor_label(m.endo)));
            }
        }
        Self::from_monads(v, budget, monads, None)
    }

    /// A Bim oracle on the given monads and bimodules only. Monad maps
    /// between the monads are still enumerated.
    pub fn from_parts(
        v: V,
        budget: usize,
        monads: Vec<Monad>,
        bimodules: Vec<Bimodule>,
    ) -> Result<Self> {
        for m in &monads {
            if !passes(|r| monad_laws(&v, m, r, false))? {
                return Err(Error::NotAMonad(v.hor_label(m.endo)));
            }
        }
        Self::from_monads(v, budget, monads, Some(bimodules))
    }

    fn from_monads(
        v: V,
        budget: usize,
        monads: Vec<Monad>,
        bimodules: Option<Vec<Bimodule>>,
    ) -> Result<Self> {
        let mut maps = Vec::new();
        for (i, s) in monads.iter().enumerate() {
            for (j, t) in monads.iter().enumerate() {
                for f in v.verticals(s.carrier, t.carrier) {
                    let frame = Frame::new(Path::single(s.carrier, s.endo), f, f, t.endo);
                    for phi in cells_bounded(&v, &frame, budget)? {
                        let map = MonadMap { vert: f, phi };
                        if passes(|r| monad_map_laws(&v, &map, s, t, r, true))? {
                            maps.push(MapEntry {
                                map,
                                src: ObjectId(i as u32),
                                tgt: ObjectId(j as u32),
                            });
                        }
                    }
                }
            }
        }
        let index = |s: &Monad| {
            monads
                .iter()
                .position(|m| m == s)
                .map(|i| ObjectId(i as u32))
        };
        let bimodules = match bimodules {
            Some(given) => {
                let mut out = Vec::new();
                for b in given {
                    let (Some(src), Some(tgt)) = (index(&b.source), index(&b.target)) else {
                        return Err(Error::MalformedData(format!(
                            "bimodule {} acts through a monad that is not listed",
                            v.hor_label(b.carrier)
                        )));
                    };
                    if !super::check_bimodule(&v, &b)?.pass {
                        return Err(Error::MalformedData(format!(
                            "{} is not a bimodule",
                            v.hor_label(b.carrier)
                        )));
                    }
                    out.push(BimoduleEntry {
                        bimodule: b,
                        src,
                        tgt,
                    });
                }
                out
            }
            None => enumerate_bimodules(&v, budget, &monads)?,
        };
        let mut oracle = BimOracle {
            v,
            budget,
            monads,
            maps,
            bimodules,
            identities: Vec::new(),
            vert_composites: HashMap::new(),
            maps_by_ends: HashMap::new(),
            bimodules_by_ends: HashMap::new(),
        };
        oracle.index()?;
        Ok(oracle)
    }

    fn index(&mut self) -> Result<()> {
        for (i, e) in self.maps.iter().enumerate() {
            self.maps_by_ends
                .entry((e.src, e.tgt))
                .or_default()
                .push(VertId(i as u32));
        }
        for (i, e) in self.bimodules.iter().enumerate() {
            self.bimodules_by_ends
                .entry((e.src, e.tgt))
                .or_default()
                .push(HorId(i as u32));
        }
        let by_value: HashMap<(ObjectId, ObjectId, &MonadMap), VertId> = self
            .maps
            .iter()
            .enumerate()
            .map(|(i, e)| ((e.src, e.tgt, &e.map), VertId(i as u32)))
            .collect();
        let lookup =
            |src: ObjectId, tgt: ObjectId, map: &MonadMap| by_value.get(&(src, tgt, map)).copied();
        for (i, m) in self.monads.iter().enumerate() {
            let x = ObjectId(i as u32);
            let id = MonadMap {
                vert: self.v.id_vert(m.carrier)?,
                phi: crate::fc::id_cell(&self.v, m.endo)?,
            };
            let found = lookup(x, x, &id).ok_or_else(|| {
                Error::ClosureViolation(format!(
                    "identity map on monad {} is missing",
                    self.v.hor_label(m.endo)
                ))
            })?;
            self.identities.push(found);
        }
        for (fi, f) in self.maps.iter().enumerate() {
            for (gi, g) in self.maps.iter().enumerate() {
                if f.tgt != g.src {
                    continue;
                }
                let vert = self.v.compose_vert(g.map.vert, f.map.vert)?;
                let phi = compose_cells(
                    &self.v,
                    &g.map.phi,
                    &[f.map.phi.clone()],
                    &[f.map.vert, f.map.vert],
                )?;
                let composite = MonadMap { vert, phi };
                let found = lookup(f.src, g.tgt, &composite).ok_or_else(|| {
                    Error::ClosureViolation("a composite of monad maps is not a monad map".into())
                })?;
                self.vert_composites
                    .insert((VertId(gi as u32), VertId(fi as u32)), found);
            }
        }
        Ok(())
    }

    pub fn underlying(&self) -> &V {
        &self.v
    }

    pub fn monads(&self) -> &[Monad] {
        &self.monads
    }

    pub fn monad_maps(&self) -> &[MapEntry] {
        &self.maps
    }

    pub fn bimodules(&self) -> &[BimoduleEntry] {
        &self.bimodules
    }

    pub fn monad(&self, x: ObjectId) -> Result<&Monad> {
        self.monads
            .get(x.index())
            .ok_or_else(|| Error::UnknownCell(format!("monad {x}")))
    }

    pub fn monad_map(&self, f: VertId) -> Result<&MapEntry> {
        self.maps
            .get(f.index())
            .ok_or_else(|| Error::UnknownCell(format!("monad map {f}")))
    }

    pub fn bimodule(&self, m: HorId) -> Result<&BimoduleEntry> {
        self.bimodules
            .get(m.index())
            .ok_or_else(|| Error::UnknownCell(format!("bimodule {m}")))
    }

    pub fn find_monad(&self, m: &Monad) -> Option<ObjectId> {
        self.monads
            .iter()
            .position(|x| x == m)
            .map(|i| ObjectId(i as u32))
    }

    pub fn find_bimodule(&self, b: &Bimodule) -> Option<HorId> {
        self.bimodules
            .iter()
            .position(|x| &x.bimodule == b)
            .map(|i| HorId(i as u32))
    }

    /// The Bim frame of `frame`, with its pieces resolved.
    pub fn bim_frame(&self, frame: &Frame) -> Result<BimFrame> {
        crate::fc::validate_frame(self, frame)?;
        Ok(BimFrame {
            anchor: self.monad(frame.source.anchor())?.clone(),
            source: frame
                .source
                .cells()
                .iter()
                .map(|&m| Ok(self.bimodule(m)?.bimodule.clone()))
                .collect::<Result<_>>()?,
            left: self.monad_map(frame.left)?.map.clone(),
            right: self.monad_map(frame.right)?.map.clone(),
            target: self.bimodule(frame.target)?.bimodule.clone(),
        })
    }

    /// The frame in `V` under a frame of `Bim(V)`.
    pub fn underlying_frame(&self, frame: &Frame) -> Result<Frame> {
        super::underlying_frame(&self.v, &self.bim_frame(frame)?)
    }

    /// The 2-cell of `V` under a 2-cell of `Bim(V)`.
    pub fn underlying_cell(&self, cell: &TwoCell) -> Result<TwoCell> {
        Ok(TwoCell::new(
            cell.id.clone(),
            self.underlying_frame(&cell.frame)?,
        ))
    }

    fn equivariant(&self, theta: &TwoCell, frame: &BimFrame) -> Result<bool> {
        passes(|r| bim_cell_laws(&self.v, theta, frame, r, true))
    }

    /// Number of 2-cells of `V` in the underlying frame, before filtering.
    pub fn candidate_count(&self, frame: &Frame) -> Result<usize> {
        Ok(self
            .v
            .cells_within(&self.underlying_frame(frame)?, self.budget)?
            .len())
    }
}

/// Every monad on the given endo-1-cells, in carrier order and then by
/// multiplication and unit.
pub fn enumerate_monads(
    v: &(impl FcOracle + ?Sized),
    budget: usize,
    carriers: &[HorId],
) -> Result<Vec<Monad>> {
    let mut monads = Vec::new();
    for &t in carriers {
        let (x, y) = v.hor_ends(t)?;
        if x != y {
            return Err(Error::MalformedData(format!(
                "{} is not an endo-1-cell",
                v.hor_label(t)
            )));
        }
        let one = v.id_vert(x)?;
        let mult_frame = Frame::new(Path::new(x, vec![t, t]), one, one, t);
        let unit_frame = Frame::new(Path::empty(x), one, one, t);
        let units = cells_bounded(v, &unit_frame, budget)?;
        let mults = cells_bounded(v, &mult_frame, budget)?;
        for mult in &mults {
            for unit in &units {
                let m = Monad {
                    carrier: x,
                    endo: t,
                    mult: mult.clone(),
                    unit: unit.clone(),
                };
                if passes(|r| monad_laws(v, &m, r, true))? {
                    monads.push(m);
                }
            }
        }
    }
    Ok(monads)
}

fn enumerate_bimodules(
    v: &(impl FcOracle + ?Sized),
    budget: usize,
    monads: &[Monad],
) -> Result<Vec<BimoduleEntry>> {
    let mut out = Vec::new();
    for (i, s) in monads.iter().enumerate() {
        for (j, t) in monads.iter().enumerate() {
            for m in v.horizontals(s.carrier, t.carrier) {
                let mut rhos = Vec::new();
                for rho in cells_bounded(v, &act_src_frame(v, m, s)?, budget)? {
                    if passes(|r| src_action_laws(v, m, s, &rho, r, true))? {
                        rhos.push(rho);
                    }
                }
                let mut lambdas = Vec::new();
                for lambda in cells_bounded(v, &act_tgt_frame(v, m, t)?, budget)? {
                    if passes(|r| tgt_action_laws(v, m, t, &lambda, r, true))? {
                        lambdas.push(lambda);
                    }
                }
                for rho in &rhos {
                    for lambda in &lambdas {
                        let b = Bimodule {
                            carrier: m,
                            source: s.clone(),
                            target: t.clone(),
                            act_src: rho.clone(),
                            act_tgt: lambda.clone(),
                        };
                        if passes(|r| commute_law(v, &b, r))? {
                            out.push(BimoduleEntry {
                                bimodule: b,
                                src: ObjectId(i as u32),
                                tgt: ObjectId(j as u32),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

impl<V: FcOracle> FcOracle for BimOracle<V> {
    fn objects(&self) -> Vec<ObjectId> {
        (0..self.monads.len() as u32).map(ObjectId).collect()
    }

    fn verticals(&self, dom: ObjectId, cod: ObjectId) -> Vec<VertId> {
        self.maps_by_ends
            .get(&(dom, cod))
            .cloned()
            .unwrap_or_default()
    }

    fn horizontals(&self, src: ObjectId, dst: ObjectId) -> Vec<HorId> {
        self.bimodules_by_ends
            .get(&(src, dst))
            .cloned()
            .unwrap_or_default()
    }

    fn vert_ends(&self, f: VertId) -> Result<(ObjectId, ObjectId)> {
        let e = self.monad_map(f)?;
        Ok((e.src, e.tgt))
    }

    fn hor_ends(&self, m: HorId) -> Result<(ObjectId, ObjectId)> {
        let e = self.bimodule(m)?;
        Ok((e.src, e.tgt))
    }

    fn compose_vert(&self, g: VertId, f: VertId) -> Result<VertId> {
        self.vert_composites.get(&(g, f)).copied().ok_or_else(|| {
            Error::NotComposable(format!("{} ∘ {}", self.vert_label(g), self.vert_label(f)))
        })
    }

    fn id_vert(&self, x: ObjectId) -> Result<VertId> {
        self.identities
            .get(x.index())
            .copied()
            .ok_or_else(|| Error::UnknownCell(format!("monad {x}")))
    }

    fn cells_within(&self, frame: &Frame, budget: usize) -> Result<Vec<CellId>> {
        let bf = self.bim_frame(frame)?;
        let under = super::underlying_frame(&self.v, &bf)?;
        let candidates = self
            .v
            .cells_within(&under, budget.min(self.budget))
            .map_err(|e| match e {
                Error::BudgetExceeded { limit, .. } => Error::BudgetExceeded {
                    frame: describe_frame(self, frame),
                    limit,
                },
                e => e,
            })?;
        let mut out = Vec::new();
        for id in candidates {
            if self.equivariant(&TwoCell::new(id.clone(), under.clone()), &bf)? {
                out.push(id);
            }
        }
        Ok(out)
    }

    fn has_cell(&self, frame: &Frame, id: &CellId) -> Result<bool> {
        let bf = self.bim_frame(frame)?;
        let under = super::underlying_frame(&self.v, &bf)?;
        if !self.v.has_cell(&under, id)? {
            return Ok(false);
        }
        self.equivariant(&TwoCell::new(id.clone(), under), &bf)
    }

    fn compose_raw(
        &self,
        theta: &TwoCell,
        children: &[TwoCell],
        boundary: &[VertId],
        result: &Frame,
    ) -> Result<CellId> {
        let theta_v = self.underlying_cell(theta)?;
        let children_v = children
            .iter()
            .map(|c| self.underlying_cell(c))
            .collect::<Result<Vec<_>>>()?;
        let boundary_v = boundary
            .iter()
            .map(|&f| Ok(self.monad_map(f)?.map.vert))
            .collect::<Result<Vec<_>>>()?;
        let composite = compose_cells(&self.v, &theta_v, &children_v, &boundary_v)?;
        let bf = self.bim_frame(result)?;
        if composite.frame != super::underlying_frame(&self.v, &bf)?
            || !self.equivariant(&composite, &bf)?
        {
            return Err(Error::ClosureViolation(format!(
                "composite in {} is not equivariant",
                describe_frame(self, result)
            )));
        }
        Ok(composite.id)
    }

    fn id_cell_raw(&self, m: HorId) -> Result<CellId> {
        self.v.id_cell_raw(self.bimodule(m)?.bimodule.carrier)
    }

    fn concurrent_reads(&self) -> bool {
        self.v.concurrent_reads()
    }

    fn object_label(&self, x: ObjectId) -> String {
        match self.monads.get(x.index()) {
            Some(m) => format!("{}#{}", self.v.hor_label(m.endo), x.0),
            None => x.to_string(),
        }
    }

    fn vert_label(&self, f: VertId) -> String {
        match self.maps.get(f.index()) {
            Some(e) => format!("{}#{}", self.v.vert_label(e.map.vert), f.0),
            None => f.to_string(),
        }
    }

    fn hor_label(&self, m: HorId) -> String {
        match self.bimodules.get(m.index()) {
            Some(e) => format!("{}#{}", self.v.hor_label(e.bimodule.carrier), m.0),
            None => m.to_string(),
        }
    }
}
