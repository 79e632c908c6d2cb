//! Spans of finite sets.
//!
//! Objects are sets, vertical 1-cells are functions, horizontal 1-cells are
//! spans `X <- M -> Y` (left leg to the source). A 2-cell with source
//! `M_1, ..., M_n` and target `M` is a function from the limit of the source
//! row into `M` commuting with both legs.
//!
//! Elements of a limit are stored as zigzag tuples
//! `(x_0, a_1, x_1, ..., a_n, x_n)`: apex elements interleaved with the
//! node values they induce. The empty path at `X` has the tuples `(x)` for
//! `x` in `X`. A 2-cell's id is its value table over the limit, listed in
//! lexicographic order of `(a_1, ..., a_n)`.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fc::{
    describe_frame, validate_frame, CellId, FcOracle, Frame, HorId, ObjectId, Path, TwoCell, VertId,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinSet {
    pub name: String,
    pub elements: Vec<String>,
}

impl FinSet {
    pub fn new<S: Into<String>>(
        name: impl Into<String>,
        elements: impl IntoIterator<Item = S>,
    ) -> Self {
        FinSet {
            name: name.into(),
            elements: elements.into_iter().map(Into::into).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, element: &str) -> Option<u32> {
        self.elements
            .iter()
            .position(|e| e == element)
            .map(|i| i as u32)
    }
}

/// A total function between two sets of a universe, given by its value table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinFunction {
    pub name: String,
    pub dom: usize,
    pub cod: usize,
    pub table: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub name: String,
    pub src: usize,
    pub dst: usize,
    pub apex: Vec<String>,
    /// apex -> src
    pub leg_l: Vec<u32>,
    /// apex -> dst
    pub leg_r: Vec<u32>,
}

/// Named finite sets, functions and spans. Sets and functions are referenced
/// by index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanUniverse {
    pub sets: Vec<FinSet>,
    pub functions: Vec<FinFunction>,
    pub spans: Vec<Span>,
    pub restrict_to_partial_bijections: bool,
}

fn is_injective(table: &[u32]) -> bool {
    let mut seen = HashSet::new();
    table.iter().all(|v| seen.insert(*v))
}

impl SpanUniverse {
    pub fn new() -> Self {
        SpanUniverse::default()
    }

    pub fn add_set<S: Into<String>>(
        &mut self,
        name: impl Into<String>,
        elements: impl IntoIterator<Item = S>,
    ) -> usize {
        self.sets.push(FinSet::new(name, elements));
        self.sets.len() - 1
    }

    pub fn set_index(&self, name: &str) -> Option<usize> {
        self.sets.iter().position(|s| s.name == name)
    }

    pub fn span_index(&self, name: &str) -> Option<usize> {
        self.spans.iter().position(|s| s.name == name)
    }

    pub fn function_index(&self, name: &str) -> Option<usize> {
        self.functions.iter().position(|s| s.name == name)
    }

    pub fn add_function(
        &mut self,
        name: impl Into<String>,
        dom: usize,
        cod: usize,
        table: Vec<u32>,
    ) -> usize {
        self.functions.push(FinFunction {
            name: name.into(),
            dom,
            cod,
            table,
        });
        self.functions.len() - 1
    }

    pub fn add_span(
        &mut self,
        name: impl Into<String>,
        src: usize,
        dst: usize,
        apex: Vec<String>,
        leg_l: Vec<u32>,
        leg_r: Vec<u32>,
    ) -> usize {
        self.spans.push(Span {
            name: name.into(),
            src,
            dst,
            apex,
            leg_l,
            leg_r,
        });
        self.spans.len() - 1
    }

    fn resolve_set(&self, name: &str) -> Result<usize> {
        self.set_index(name)
            .ok_or_else(|| Error::MalformedUniverse(format!("unknown set {name}")))
    }

    fn resolve_element(&self, set: usize, element: &str) -> Result<u32> {
        self.sets[set].position(element).ok_or_else(|| {
            Error::MalformedUniverse(format!(
                "{element} is not an element of {}",
                self.sets[set].name
            ))
        })
    }

    /// Adds a function given by element names, listed in domain order.
    pub fn add_function_named(
        &mut self,
        name: &str,
        dom: &str,
        cod: &str,
        values: &[&str],
    ) -> Result<usize> {
        let d = self.resolve_set(dom)?;
        let c = self.resolve_set(cod)?;
        let table = values
            .iter()
            .map(|v| self.resolve_element(c, v))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.add_function(name, d, c, table))
    }

    /// Adds a span from `(apex element, left value, right value)` triples.
    pub fn add_span_named(
        &mut self,
        name: &str,
        src: &str,
        dst: &str,
        entries: &[(&str, &str, &str)],
    ) -> Result<usize> {
        let s = self.resolve_set(src)?;
        let d = self.resolve_set(dst)?;
        let mut apex = Vec::new();
        let mut leg_l = Vec::new();
        let mut leg_r = Vec::new();
        for (a, l, r) in entries {
            apex.push((*a).to_owned());
            leg_l.push(self.resolve_element(s, l)?);
            leg_r.push(self.resolve_element(d, r)?);
        }
        Ok(self.add_span(name, s, d, apex, leg_l, leg_r))
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::MalformedUniverse(msg));
        let mut names = HashSet::new();
        for set in &self.sets {
            if !names.insert(&set.name) {
                return bad(format!("set name {} is used twice", set.name));
            }
            let mut seen = HashSet::new();
            for e in &set.elements {
                if !seen.insert(e) {
                    return bad(format!("set {} lists element {e} twice", set.name));
                }
            }
        }
        let nsets = self.sets.len();
        let mut names = HashSet::new();
        for f in &self.functions {
            if !names.insert(&f.name) {
                return bad(format!("function name {} is used twice", f.name));
            }
            if f.dom >= nsets || f.cod >= nsets {
                return bad(format!("function {} refers to a missing set", f.name));
            }
            if f.table.len() != self.sets[f.dom].len() {
                return bad(format!("function {} does not cover its domain", f.name));
            }
            if f.table
                .iter()
                .any(|&v| v as usize >= self.sets[f.cod].len())
            {
                return bad(format!(
                    "function {} has a value outside its codomain",
                    f.name
                ));
            }
        }
        let mut names = HashSet::new();
        for s in &self.spans {
            if !names.insert(&s.name) {
                return bad(format!("span name {} is used twice", s.name));
            }
            if s.src >= nsets || s.dst >= nsets {
                return bad(format!("span {} refers to a missing set", s.name));
            }
            let mut seen = HashSet::new();
            for e in &s.apex {
                if !seen.insert(e) {
                    return bad(format!("span {} lists apex element {e} twice", s.name));
                }
            }
            if s.leg_l.len() != s.apex.len() || s.leg_r.len() != s.apex.len() {
                return bad(format!("span {}: legs do not cover the apex", s.name));
            }
            if s.leg_l
                .iter()
                .any(|&v| v as usize >= self.sets[s.src].len())
                || s.leg_r
                    .iter()
                    .any(|&v| v as usize >= self.sets[s.dst].len())
            {
                return bad(format!("span {}: a leg leaves its set", s.name));
            }
            if self.restrict_to_partial_bijections {
                check_monic(s)?;
            }
        }
        Ok(())
    }
}

pub(crate) fn check_monic(s: &Span) -> Result<()> {
    if !is_injective(&s.leg_l) {
        return Err(Error::NotMonic {
            span: s.name.clone(),
            leg: "left".into(),
        });
    }
    if !is_injective(&s.leg_r) {
        return Err(Error::NotMonic {
            span: s.name.clone(),
            leg: "right".into(),
        });
    }
    Ok(())
}

/// The limit of a row of spans, as zigzag tuples.
#[derive(Debug)]
pub(crate) struct Limit {
    pub tuples: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, u32>,
}

impl Limit {
    pub fn position(&self, zigzag: &[u32]) -> Option<u32> {
        self.index.get(zigzag).copied()
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }
}

pub(crate) fn compute_limit(u: &SpanUniverse, anchor: usize, spans: &[usize]) -> Limit {
    let mut tuples = Vec::new();
    if spans.is_empty() {
        tuples.extend((0..u.sets[anchor].len() as u32).map(|x| vec![x]));
    } else {
        let mut current = Vec::with_capacity(2 * spans.len() + 1);
        extend_limit(u, spans, &mut current, &mut tuples);
    }
    let index = tuples
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i as u32))
        .collect();
    Limit { tuples, index }
}

fn extend_limit(
    u: &SpanUniverse,
    spans: &[usize],
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    let k = current.len() / 2;
    if k == spans.len() {
        out.push(current.clone());
        return;
    }
    let span = &u.spans[spans[k]];
    for a in 0..span.apex.len() {
        let l = span.leg_l[a];
        if k > 0 && *current.last().unwrap() != l {
            continue;
        }
        let mark = current.len();
        if k == 0 {
            current.push(l);
        }
        current.push(a as u32);
        current.push(span.leg_r[a]);
        extend_limit(u, spans, current, out);
        current.truncate(mark);
    }
}

fn check_path(u: &SpanUniverse, p: &Path) -> Result<(usize, Vec<usize>)> {
    let anchor = p.anchor().index();
    if anchor >= u.sets.len() {
        return Err(Error::MalformedPath(format!(
            "unknown anchor set {}",
            p.anchor()
        )));
    }
    let mut at = anchor;
    let mut spans = Vec::with_capacity(p.len());
    for &m in p.cells() {
        let s = u
            .spans
            .get(m.index())
            .ok_or_else(|| Error::MalformedPath(format!("unknown span {m}")))?;
        if s.src != at {
            return Err(Error::MalformedPath(format!(
                "span {} starts at {} but the path is at {}",
                s.name, u.sets[s.src].name, u.sets[at].name
            )));
        }
        at = s.dst;
        spans.push(m.index());
    }
    Ok((anchor, spans))
}

/// The composite span of a path: the limit of its row with the outermost
/// legs. The empty path gives the identity span on its anchor and a single
/// span is returned unchanged.
pub fn path_limit(u: &SpanUniverse, p: &Path) -> Result<Span> {
    let (anchor, spans) = check_path(u, p)?;
    match spans.len() {
        0 => {
            let set = &u.sets[anchor];
            let ids: Vec<u32> = (0..set.len() as u32).collect();
            Ok(Span {
                name: format!("1_{}", set.name),
                src: anchor,
                dst: anchor,
                apex: set.elements.clone(),
                leg_l: ids.clone(),
                leg_r: ids,
            })
        }
        1 => Ok(u.spans[spans[0]].clone()),
        n => {
            let limit = compute_limit(u, anchor, &spans);
            let mut apex = Vec::with_capacity(limit.len());
            let mut leg_l = Vec::with_capacity(limit.len());
            let mut leg_r = Vec::with_capacity(limit.len());
            for t in &limit.tuples {
                let names: Vec<&str> = (0..n)
                    .map(|k| u.spans[spans[k]].apex[t[2 * k + 1] as usize].as_str())
                    .collect();
                apex.push(format!("({})", names.join(",")));
                leg_l.push(t[0]);
                leg_r.push(t[2 * n]);
            }
            let name: Vec<&str> = spans
                .iter()
                .rev()
                .map(|&s| u.spans[s].name.as_str())
                .collect();
            Ok(Span {
                name: name.join("∘"),
                src: anchor,
                dst: u.spans[spans[n - 1]].dst,
                apex,
                leg_l,
                leg_r,
            })
        }
    }
}

#[derive(Clone, Debug)]
struct VertFn {
    name: String,
    dom: usize,
    cod: usize,
    table: Vec<u32>,
}

const MAX_VERTICALS: usize = 200_000;

/// The fc-multicategory `Span` over a universe. The functions of the universe
/// are closed under composition and identities; functions with equal tables
/// are the same vertical 1-cell.
#[derive(Debug)]
pub struct SpanOracle {
    universe: SpanUniverse,
    verts: Vec<VertFn>,
    vert_index: HashMap<(usize, usize, Vec<u32>), VertId>,
    verts_by_ends: HashMap<(usize, usize), Vec<VertId>>,
    composites: HashMap<(VertId, VertId), VertId>,
    hors_by_ends: HashMap<(usize, usize), Vec<HorId>>,
    limits: RwLock<HashMap<Path, Arc<Limit>>>,
}

pub fn span_fc(u: SpanUniverse) -> Result<SpanOracle> {
    SpanOracle::new(u)
}

impl SpanOracle {
    pub fn new(universe: SpanUniverse) -> Result<Self> {
        universe.validate()?;
        let mut verts: Vec<VertFn> = Vec::new();
        let mut vert_index: HashMap<(usize, usize, Vec<u32>), VertId> = HashMap::new();
        let mut intern = |verts: &mut Vec<VertFn>, f: VertFn| -> VertId {
            let key = (f.dom, f.cod, f.table.clone());
            *vert_index.entry(key).or_insert_with(|| {
                verts.push(f);
                VertId(verts.len() as u32 - 1)
            })
        };
        for (i, set) in universe.sets.iter().enumerate() {
            intern(
                &mut verts,
                VertFn {
                    name: format!("1_{}", set.name),
                    dom: i,
                    cod: i,
                    table: (0..set.len() as u32).collect(),
                },
            );
        }
        for f in &universe.functions {
            intern(
                &mut verts,
                VertFn {
                    name: f.name.clone(),
                    dom: f.dom,
                    cod: f.cod,
                    table: f.table.clone(),
                },
            );
        }
        let mut composites = HashMap::new();
        loop {
            let n = verts.len();
            let mut changed = false;
            for g in 0..n {
                for f in 0..n {
                    let key = (VertId(g as u32), VertId(f as u32));
                    if verts[f].cod != verts[g].dom || composites.contains_key(&key) {
                        continue;
                    }
                    let table = verts[f]
                        .table
                        .iter()
                        .map(|&x| verts[g].table[x as usize])
                        .collect();
                    let composite = VertFn {
                        name: format!("{}∘{}", verts[g].name, verts[f].name),
                        dom: verts[f].dom,
                        cod: verts[g].cod,
                        table,
                    };
                    let id = intern(&mut verts, composite);
                    composites.insert(key, id);
                    changed = true;
                }
            }
            if verts.len() > MAX_VERTICALS {
                return Err(Error::MalformedUniverse(format!(
                    "closing the functions under composition exceeds {MAX_VERTICALS} verticals"
                )));
            }
            if !changed {
                break;
            }
        }
        let mut verts_by_ends: HashMap<(usize, usize), Vec<VertId>> = HashMap::new();
        for (i, v) in verts.iter().enumerate() {
            verts_by_ends
                .entry((v.dom, v.cod))
                .or_default()
                .push(VertId(i as u32));
        }
        let mut hors_by_ends: HashMap<(usize, usize), Vec<HorId>> = HashMap::new();
        for (i, s) in universe.spans.iter().enumerate() {
            hors_by_ends
                .entry((s.src, s.dst))
                .or_default()
                .push(HorId(i as u32));
        }
        Ok(SpanOracle {
            universe,
            verts,
            vert_index,
            verts_by_ends,
            composites,
            hors_by_ends,
            limits: RwLock::new(HashMap::new()),
        })
    }

    pub fn universe(&self) -> &SpanUniverse {
        &self.universe
    }

    pub fn object(&self, set: &str) -> Option<ObjectId> {
        self.universe.set_index(set).map(|i| ObjectId(i as u32))
    }

    pub fn horizontal(&self, span: &str) -> Option<HorId> {
        self.universe.span_index(span).map(|i| HorId(i as u32))
    }

    /// A vertical 1-cell by name: a declared function, an identity `1_X`, or
    /// a composite produced by the closure.
    pub fn vertical(&self, name: &str) -> Option<VertId> {
        self.verts
            .iter()
            .position(|v| v.name == name)
            .map(|i| VertId(i as u32))
    }

    pub fn vertical_by_table(&self, dom: ObjectId, cod: ObjectId, table: &[u32]) -> Option<VertId> {
        self.vert_index
            .get(&(dom.index(), cod.index(), table.to_vec()))
            .copied()
    }

    pub fn vert_table(&self, f: VertId) -> Result<&[u32]> {
        self.verts
            .get(f.index())
            .map(|v| v.table.as_slice())
            .ok_or_else(|| Error::UnknownCell(format!("vertical {f}")))
    }

    pub fn span(&self, m: HorId) -> Result<&Span> {
        self.universe
            .spans
            .get(m.index())
            .ok_or_else(|| Error::UnknownCell(format!("horizontal {m}")))
    }

    pub fn vertical_count(&self) -> usize {
        self.verts.len()
    }

    pub(crate) fn limit(&self, path: &Path) -> Result<Arc<Limit>> {
        if let Some(l) = self.limits.read().unwrap().get(path) {
            return Ok(Arc::clone(l));
        }
        let (anchor, spans) = check_path(&self.universe, path)?;
        let limit = Arc::new(compute_limit(&self.universe, anchor, &spans));
        let mut cache = self.limits.write().unwrap();
        Ok(Arc::clone(cache.entry(path.clone()).or_insert(limit)))
    }

    /// Zigzag tuples of the limit of `path`, in table order.
    pub fn limit_tuples(&self, path: &Path) -> Result<Vec<Vec<u32>>> {
        Ok(self.limit(path)?.tuples.clone())
    }

    /// For each limit tuple, the apex elements of the target that a cell may
    /// send it to.
    fn choices(&self, frame: &Frame) -> Result<(Arc<Limit>, Vec<Vec<u32>>)> {
        validate_frame(self, frame)?;
        let limit = self.limit(&frame.source)?;
        let f = &self.verts[frame.left.index()].table;
        let g = &self.verts[frame.right.index()].table;
        let target = &self.universe.spans[frame.target.index()];
        let mut by_ends: HashMap<(u32, u32), Vec<u32>> = HashMap::new();
        for a in 0..target.apex.len() {
            by_ends
                .entry((target.leg_l[a], target.leg_r[a]))
                .or_default()
                .push(a as u32);
        }
        let choices = limit
            .tuples
            .iter()
            .map(|t| {
                let key = (f[t[0] as usize], g[*t.last().unwrap() as usize]);
                by_ends.get(&key).cloned().unwrap_or_default()
            })
            .collect();
        Ok((limit, choices))
    }

    /// Builds the cell of `frame` whose value on each zigzag tuple is given by
    /// `value`, checking that it commutes with the legs.
    pub fn cell_from_fn(
        &self,
        frame: Frame,
        mut value: impl FnMut(&[u32]) -> Option<u32>,
    ) -> Result<TwoCell> {
        let (limit, choices) = self.choices(&frame)?;
        let mut table = Vec::with_capacity(limit.len());
        for (t, allowed) in limit.tuples.iter().zip(&choices) {
            let v = value(t).ok_or_else(|| {
                Error::MalformedData(format!(
                    "no value given on {t:?} in {}",
                    describe_frame(self, &frame)
                ))
            })?;
            if !allowed.contains(&v) {
                return Err(Error::MalformedData(format!(
                    "value {v} on {t:?} does not commute with the legs in {}",
                    describe_frame(self, &frame)
                )));
            }
            table.push(v);
        }
        Ok(TwoCell::new(CellId::from_table(table), frame))
    }

    /// Value of a cell on a zigzag tuple of its source limit.
    pub fn cell_value(&self, cell: &TwoCell, zigzag: &[u32]) -> Result<u32> {
        let limit = self.limit(&cell.frame.source)?;
        let pos = limit.position(zigzag).ok_or_else(|| {
            Error::MalformedData(format!("{zigzag:?} is not in the limit of the source"))
        })?;
        cell.id
            .as_slice()
            .get(pos as usize)
            .copied()
            .ok_or_else(|| Error::UnknownCell(cell.id.to_string()))
    }
}

impl FcOracle for SpanOracle {
    fn objects(&self) -> Vec<ObjectId> {
        (0..self.universe.sets.len() as u32).map(ObjectId).collect()
    }

    fn verticals(&self, dom: ObjectId, cod: ObjectId) -> Vec<VertId> {
        self.verts_by_ends
            .get(&(dom.index(), cod.index()))
            .cloned()
            .unwrap_or_default()
    }

    fn horizontals(&self, src: ObjectId, dst: ObjectId) -> Vec<HorId> {
        self.hors_by_ends
            .get(&(src.index(), dst.index()))
            .cloned()
            .unwrap_or_default()
    }

    fn vert_ends(&self, f: VertId) -> Result<(ObjectId, ObjectId)> {
        let v = self
            .verts
            .get(f.index())
            .ok_or_else(|| Error::UnknownCell(format!("vertical {f}")))?;
        Ok((ObjectId(v.dom as u32), ObjectId(v.cod as u32)))
    }

    fn hor_ends(&self, m: HorId) -> Result<(ObjectId, ObjectId)> {
        let s = self.span(m)?;
        Ok((ObjectId(s.src as u32), ObjectId(s.dst as u32)))
    }

    fn compose_vert(&self, g: VertId, f: VertId) -> Result<VertId> {
        self.composites.get(&(g, f)).copied().ok_or_else(|| {
            Error::NotComposable(format!("{} ∘ {}", self.vert_label(g), self.vert_label(f)))
        })
    }

    fn id_vert(&self, x: ObjectId) -> Result<VertId> {
        if x.index() < self.universe.sets.len() {
            // identities are interned first, one per set
            Ok(VertId(x.0))
        } else {
            Err(Error::UnknownCell(format!("object {x}")))
        }
    }

    fn cells_within(&self, frame: &Frame, budget: usize) -> Result<Vec<CellId>> {
        let (_, choices) = self.choices(frame)?;
        let mut count: usize = 1;
        for c in &choices {
            count = count.saturating_mul(c.len());
        }
        if count > budget {
            return Err(Error::BudgetExceeded {
                frame: describe_frame(self, frame),
                limit: budget,
            });
        }
        let mut out = Vec::with_capacity(count);
        if count == 0 {
            return Ok(out);
        }
        // odometer, first tuple most significant
        let mut digits = vec![0usize; choices.len()];
        loop {
            out.push(CellId::from_table(
                digits.iter().zip(&choices).map(|(&d, c)| c[d]).collect(),
            ));
            let mut k = choices.len();
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                digits[k] += 1;
                if digits[k] < choices[k].len() {
                    break;
                }
                digits[k] = 0;
            }
        }
    }

    fn has_cell(&self, frame: &Frame, id: &CellId) -> Result<bool> {
        let (_, choices) = self.choices(frame)?;
        let table = id.as_slice();
        Ok(table.len() == choices.len() && table.iter().zip(&choices).all(|(v, c)| c.contains(v)))
    }

    fn compose_raw(
        &self,
        theta: &TwoCell,
        children: &[TwoCell],
        boundary: &[VertId],
        result: &Frame,
    ) -> Result<CellId> {
        let top = self.limit(&result.source)?;
        let mid = self.limit(&theta.frame.source)?;
        let child_limits = children
            .iter()
            .map(|c| self.limit(&c.frame.source))
            .collect::<Result<Vec<_>>>()?;
        let verts: Vec<&[u32]> = boundary
            .iter()
            .map(|&f| self.vert_table(f))
            .collect::<Result<_>>()?;
        let theta_table = theta.id.as_slice();
        let mut out = Vec::with_capacity(top.len());
        let mut middle = Vec::with_capacity(2 * children.len() + 1);
        for t in &top.tuples {
            middle.clear();
            middle.push(verts[0][t[0] as usize]);
            let mut node = 0;
            for (i, child) in children.iter().enumerate() {
                let r = child.arity();
                let segment = &t[2 * node..=2 * (node + r)];
                let pos = child_limits[i].position(segment).ok_or_else(|| {
                    Error::ClosureViolation(format!(
                        "segment {segment:?} missing from a child limit"
                    ))
                })?;
                middle.push(child.id.as_slice()[pos as usize]);
                node += r;
                middle.push(verts[i + 1][t[2 * node] as usize]);
            }
            let pos = mid.position(&middle).ok_or_else(|| {
                Error::ClosureViolation(format!(
                    "children send {t:?} to {middle:?}, outside the limit of the middle row"
                ))
            })?;
            out.push(theta_table[pos as usize]);
        }
        Ok(CellId::from_table(out))
    }

    fn id_cell_raw(&self, m: HorId) -> Result<CellId> {
        let s = self.span(m)?;
        Ok(CellId::from_table((0..s.apex.len() as u32).collect()))
    }

    fn object_label(&self, x: ObjectId) -> String {
        self.universe
            .sets
            .get(x.index())
            .map_or_else(|| x.to_string(), |s| s.name.clone())
    }

    fn vert_label(&self, f: VertId) -> String {
        self.verts
            .get(f.index())
            .map_or_else(|| f.to_string(), |v| v.name.clone())
    }

    fn hor_label(&self, m: HorId) -> String {
        self.universe
            .spans
            .get(m.index())
            .map_or_else(|| m.to_string(), |s| s.name.clone())
    }
}

/// Checks that every span of `u` is a partial bijection and returns the
/// resulting sub-fc-multicategory of `Span`.
pub fn parbjn_check_and_restrict(mut u: SpanUniverse) -> Result<SpanOracle> {
    for s in &u.spans {
        check_monic(s)?;
    }
    u.restrict_to_partial_bijections = true;
    SpanOracle::new(u)
}
