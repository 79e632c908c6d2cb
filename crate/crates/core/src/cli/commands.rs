use std::collections::BTreeMap;

use serde::Serialize;

use super::format::Structure;
use super::model;
use crate::bim::{check_bimodule, check_monad, BimOracle};
use crate::enrich::{check_enriched, enrich_to_bim_with, parbjn_from_subsets, EnrichedCategory};
use crate::error::{Error, Result};
use crate::fc::{
    cells_bounded, check_fc_laws_with, enumerate_frames, Bounds, Execution, FcOracle, LawReport,
    Path,
};
use crate::instances::{
    double_fc, monoidal_fc, multicat_fc, path_limit, span_fc, MulticatPresentation, Span,
    SpanOracle, StrictDoublePresentation, StrictMonoidalPresentation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub bounds: Bounds,
    pub seed: u64,
    pub parallel: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            bounds: Bounds::default(),
            seed: 0,
            parallel: false,
        }
    }
}

impl CheckConfig {
    fn execution(&self) -> Execution {
        if self.parallel {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Presentation law failures found before any pasting is attempted become
/// violations rather than errors.
pub const PRESENTATION: &str = "presentation";
pub const PARTIAL_BIJECTION: &str = "partial-bijection";

fn failed(law: &str, e: Error) -> LawReport {
    let mut r = LawReport::new();
    r.violate(law, e.to_string());
    r
}

fn span_oracle(
    u: &crate::instances::SpanUniverse,
) -> Result<std::result::Result<SpanOracle, LawReport>> {
    match span_fc(u.clone()) {
        Ok(v) => Ok(Ok(v)),
        Err(e @ Error::NotMonic { .. }) => Ok(Err(failed(PARTIAL_BIJECTION, e))),
        Err(e) => Err(e),
    }
}

/// Runs the checks appropriate to the kind of `s`.
pub fn check(s: &Structure, config: &CheckConfig) -> Result<LawReport> {
    let bounds = &config.bounds;
    let exec = config.execution();
    let report = match s {
        Structure::SpanUniverse(u) => match span_oracle(u)? {
            Ok(v) => check_fc_laws_with(&v, bounds, exec)?,
            Err(r) => r,
        },
        Structure::Monoidal(t) => {
            let p = StrictMonoidalPresentation::new_unchecked(t.clone())?;
            match p.validate() {
                Ok(()) => check_fc_laws_with(&monoidal_fc(p), bounds, exec)?,
                Err(e) => failed(PRESENTATION, e),
            }
        }
        Structure::Multicat(t) => {
            let p = MulticatPresentation::new_unchecked(t.clone())?;
            match p.validate() {
                Ok(()) => check_fc_laws_with(&multicat_fc(p), bounds, exec)?,
                Err(e) => failed(PRESENTATION, e),
            }
        }
        Structure::Double(t) => {
            let p = StrictDoublePresentation::new_unchecked(t.clone())?;
            match p.validate() {
                Ok(()) => check_fc_laws_with(&double_fc(p), bounds, exec)?,
                Err(e) => failed(PRESENTATION, e),
            }
        }
        Structure::Monad(f) => {
            let v = span_fc(f.universe.clone())?;
            check_monad(&v, &model::monad(&v, &f.monad)?)?
        }
        Structure::Bimodule(f) => {
            let v = span_fc(f.universe.clone())?;
            let (b, src, tgt) = model::bimodule(&v, f)?;
            let mut r = check_monad(&v, &src)?;
            r.merge(check_monad(&v, &tgt)?);
            r.merge(check_bimodule(&v, &b)?);
            r
        }
        Structure::Enriched(f) => {
            let m = model::enriched(f)?;
            match m.base_law {
                None => check_enriched(&m.oracle, &m.category)?,
                Some(e) => failed(PRESENTATION, e),
            }
        }
        Structure::SubsetFamily(f) => {
            let (v, c) = parbjn_from_subsets(&f.set, &f.subsets)?;
            check_enriched(&v, &c)?
        }
    };
    Ok(LawReport {
        bounds: Some(*bounds),
        ..report.normalized()
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonadEntry {
    pub carrier: String,
    pub endo: String,
    pub mult: String,
    pub unit: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapEntryOut {
    pub source: usize,
    pub target: usize,
    pub vertical: String,
    pub cell: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BimoduleOut {
    pub source: usize,
    pub target: usize,
    pub carrier: String,
    pub act_src: String,
    pub act_tgt: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArityCount {
    pub arity: usize,
    pub frames: usize,
    pub cells: usize,
}

/// What `bim` found: monads, monad maps, bimodules and the number of
/// 2-cells by source arity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BimInventory {
    pub monads: Vec<MonadEntry>,
    pub monad_maps: Vec<MapEntryOut>,
    pub bimodules: Vec<BimoduleOut>,
    pub cells: Vec<ArityCount>,
}

pub fn inventory<V: FcOracle>(bim: &BimOracle<V>, config: &CheckConfig) -> Result<BimInventory> {
    let v = bim.underlying();
    let monads = bim
        .monads()
        .iter()
        .map(|m| MonadEntry {
            carrier: v.object_label(m.carrier),
            endo: v.hor_label(m.endo),
            mult: m.mult.id.to_string(),
            unit: m.unit.id.to_string(),
        })
        .collect();
    let monad_maps = bim
        .monad_maps()
        .iter()
        .map(|e| MapEntryOut {
            source: e.src.index(),
            target: e.tgt.index(),
            vertical: v.vert_label(e.map.vert),
            cell: e.map.phi.id.to_string(),
        })
        .collect();
    let bimodules = bim
        .bimodules()
        .iter()
        .map(|e| BimoduleOut {
            source: e.src.index(),
            target: e.tgt.index(),
            carrier: v.hor_label(e.bimodule.carrier),
            act_src: e.bimodule.act_src.id.to_string(),
            act_tgt: e.bimodule.act_tgt.id.to_string(),
        })
        .collect();
    let mut by_arity: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for frame in enumerate_frames(bim, config.bounds.max_arity)? {
        let n = cells_bounded(bim, &frame, config.bounds.max_cells_per_frame)?.len();
        let entry = by_arity.entry(frame.arity()).or_default();
        entry.0 += 1;
        entry.1 += n;
    }
    Ok(BimInventory {
        monads,
        monad_maps,
        bimodules,
        cells: by_arity
            .into_iter()
            .map(|(arity, (frames, cells))| ArityCount {
                arity,
                frames,
                cells,
            })
            .collect(),
    })
}

/// The Bim construction on the structure in `s`, listed.
pub fn bim(s: &Structure, config: &CheckConfig) -> Result<BimInventory> {
    let budget = config.bounds.max_cells_per_frame;
    match s {
        Structure::SpanUniverse(u) => {
            inventory(&BimOracle::new(span_fc(u.clone())?, budget)?, config)
        }
        Structure::Monoidal(t) => {
            let v = monoidal_fc(StrictMonoidalPresentation::new(t.clone())?);
            inventory(&BimOracle::new(v, budget)?, config)
        }
        Structure::Multicat(t) => {
            let v = multicat_fc(MulticatPresentation::new(t.clone())?);
            inventory(&BimOracle::new(v, budget)?, config)
        }
        Structure::Double(t) => {
            let v = double_fc(StrictDoublePresentation::new(t.clone())?);
            inventory(&BimOracle::new(v, budget)?, config)
        }
        other => Err(Error::UnsupportedKind(other.kind().into())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedBim {
    pub objects: Vec<String>,
    /// Bim object (monad) of each object
    pub ends: Vec<usize>,
    /// Bim horizontal (bimodule) of each pair, row-major
    pub homs: Vec<usize>,
    pub comp: Vec<String>,
    pub ids: Vec<String>,
    pub inventory: BimInventory,
    pub report: LawReport,
}

fn derived<V: FcOracle>(v: V, c: &EnrichedCategory, config: &CheckConfig) -> Result<DerivedBim> {
    let t = enrich_to_bim_with(v, c, config.bounds.max_cells_per_frame)?;
    let report = check_enriched(&t.oracle, &t.category)?.normalized();
    let inventory = inventory(&t.oracle, config)?;
    let cat = t.category;
    Ok(DerivedBim {
        objects: cat.objects.clone(),
        ends: cat.ends.iter().map(|x| x.index()).collect(),
        homs: cat.homs.iter().map(|m| m.index()).collect(),
        comp: cat.comp.iter().map(|c| c.id.to_string()).collect(),
        ids: cat.ids.iter().map(|c| c.id.to_string()).collect(),
        inventory,
        report,
    })
}

/// Transfers the enriched category in `s` to `Bim(V)` and checks it there.
pub fn derive_bim(s: &Structure, config: &CheckConfig) -> Result<DerivedBim> {
    match s {
        Structure::Enriched(f) => {
            let m = model::enriched(f)?;
            if let Some(e) = m.base_law {
                return Err(Error::SourceInvalid(e.to_string()));
            }
            derived(m.oracle, &m.category, config)
        }
        Structure::SubsetFamily(f) => {
            let (v, c) = parbjn_from_subsets(&f.set, &f.subsets)?;
            derived(v, &c, config)
        }
        other => Err(Error::UnsupportedKind(other.kind().into())),
    }
}

/// The composite span of a path of named spans.
pub fn compose_span(s: &Structure, names: &[String]) -> Result<Span> {
    let Structure::SpanUniverse(u) = s else {
        return Err(Error::UnsupportedKind(s.kind().into()));
    };
    let v = span_fc(u.clone())?;
    let mut cells = Vec::with_capacity(names.len());
    for name in names {
        cells.push(
            v.horizontal(name)
                .ok_or_else(|| Error::MalformedData(format!("no span named {name}")))?,
        );
    }
    let anchor = match cells.first() {
        Some(&m) => v.hor_ends(m)?.0,
        None => return Err(Error::MalformedPath("give at least one span".into())),
    };
    path_limit(v.universe(), &Path::new(anchor, cells))
}
