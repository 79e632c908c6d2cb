//! Multicategories, tabulated up to an arity bound, as fc-multicategories
//! with only identity vertical 1-cells.
//!
//! Sorts become horizontal 1-cells on a single object; an
//! operation `M_1, ..., M_n -> M` is a 2-cell `(M_1, ..., M_n) => M`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fc::{validate_frame, CellId, FcOracle, Frame, HorId, ObjectId, TwoCell, VertId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Operation {
    pub name: String,
    pub inputs: Vec<u32>,
    pub output: u32,
}

/// Raw tables of a [`MulticatPresentation`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MulticatTables {
    pub sorts: Vec<String>,
    pub arity_bound: usize,
    pub operations: Vec<Operation>,
    /// identity operation of each sort
    pub identities: Vec<u32>,
    /// `(θ, [θ_1, ..., θ_n], θ ∘ (θ_1, ..., θ_n))` for every composable
    /// configuration whose result stays within the bound
    pub composites: Vec<(u32, Vec<u32>, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MulticatPresentation {
    tables: MulticatTables,
    composites: HashMap<(u32, Vec<u32>), u32>,
    by_type: HashMap<(Vec<u32>, u32), Vec<u32>>,
}

impl MulticatPresentation {
    pub fn new(tables: MulticatTables) -> Result<Self> {
        let p = Self::new_unchecked(tables)?;
        p.validate()?;
        Ok(p)
    }

    /// Checks only that the tables are in range and unambiguous.
    pub fn new_unchecked(tables: MulticatTables) -> Result<Self> {
        let bad = |m: String| Err(Error::MalformedPresentation(m));
        let ns = tables.sorts.len() as u32;
        let nops = tables.operations.len() as u32;
        let mut by_type: HashMap<(Vec<u32>, u32), Vec<u32>> = HashMap::new();
        for (i, op) in tables.operations.iter().enumerate() {
            if op.output >= ns || op.inputs.iter().any(|&s| s >= ns) {
                return bad(format!("operation {} refers to a missing sort", op.name));
            }
            if op.inputs.len() > tables.arity_bound {
                return bad(format!("operation {} exceeds the arity bound", op.name));
            }
            by_type
                .entry((op.inputs.clone(), op.output))
                .or_default()
                .push(i as u32);
        }
        let mut composites = HashMap::new();
        for (theta, children, result) in &tables.composites {
            if *theta >= nops || *result >= nops || children.iter().any(|&c| c >= nops) {
                return bad(format!(
                    "composite entry for operation {theta} names a missing operation"
                ));
            }
            if composites
                .insert((*theta, children.clone()), *result)
                .is_some_and(|old| old != *result)
            {
                return bad(format!("composite of operation {theta} is given twice"));
            }
        }
        Ok(MulticatPresentation {
            tables,
            composites,
            by_type,
        })
    }

    pub fn tables(&self) -> &MulticatTables {
        &self.tables
    }

    pub fn arity_bound(&self) -> usize {
        self.tables.arity_bound
    }

    fn op(&self, i: u32) -> &Operation {
        &self.tables.operations[i as usize]
    }

    pub fn operations_of(&self, inputs: &[u32], output: u32) -> &[u32] {
        self.by_type
            .get(&(inputs.to_vec(), output))
            .map_or(&[], Vec::as_slice)
    }

    pub fn composite(&self, theta: u32, children: &[u32]) -> Option<u32> {
        self.composites.get(&(theta, children.to_vec())).copied()
    }

    /// Overwrites one composite without re-checking the laws.
    pub fn set_composite_unchecked(&mut self, theta: u32, children: Vec<u32>, result: u32) {
        self.composites.insert((theta, children), result);
    }

    /// Every child list that can be plugged into `theta` with total arity at
    /// most `budget`.
    fn child_lists(&self, theta: u32, budget: usize) -> Vec<Vec<u32>> {
        let mut out = vec![(Vec::new(), 0usize)];
        for &sort in &self.op(theta).inputs {
            let mut next = Vec::new();
            for (list, used) in &out {
                for (i, op) in self.tables.operations.iter().enumerate() {
                    if op.output == sort && used + op.inputs.len() <= budget {
                        let mut l: Vec<u32> = list.clone();
                        l.push(i as u32);
                        next.push((l, used + op.inputs.len()));
                    }
                }
            }
            out = next;
        }
        out.into_iter().map(|(l, _)| l).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::MalformedPresentation(m));
        let t = &self.tables;
        let nops = t.operations.len() as u32;
        if t.identities.len() != t.sorts.len() {
            return bad("every sort needs exactly one identity".into());
        }
        for (s, &i) in t.identities.iter().enumerate() {
            if i >= nops || self.op(i).inputs != [s as u32] || self.op(i).output != s as u32 {
                return bad(format!(
                    "identity of sort {} is missing or mistyped",
                    t.sorts[s]
                ));
            }
        }
        let bound = t.arity_bound;
        for theta in 0..nops {
            for children in self.child_lists(theta, bound) {
                let Some(r) = self.composite(theta, &children) else {
                    return bad(format!(
                        "composite of {} with {:?} is missing",
                        self.op(theta).name,
                        children
                    ));
                };
                let inputs: Vec<u32> = children
                    .iter()
                    .flat_map(|&c| self.op(c).inputs.clone())
                    .collect();
                if self.op(r).inputs != inputs || self.op(r).output != self.op(theta).output {
                    return bad(format!(
                        "composite of {} with {:?} has the wrong type",
                        self.op(theta).name,
                        children
                    ));
                }
            }
        }
        let expected: usize = (0..nops)
            .map(|theta| self.child_lists(theta, bound).len())
            .sum();
        if self.composites.len() != expected {
            return bad("composite table has entries outside the arity bound".into());
        }
        for theta in 0..nops {
            let op = self.op(theta);
            let ids: Vec<u32> = op
                .inputs
                .iter()
                .map(|&s| t.identities[s as usize])
                .collect();
            if self.composite(theta, &ids) != Some(theta) {
                return bad(format!("right unit law fails at {}", op.name));
            }
            if self.composite(t.identities[op.output as usize], &[theta]) != Some(theta) {
                return bad(format!("left unit law fails at {}", op.name));
            }
        }
        // (θ ∘ (θ_i)) ∘ (φ_j) = θ ∘ (θ_i ∘ (φ_j restricted to θ_i))
        for theta in 0..nops {
            for children in self.child_lists(theta, bound) {
                let mid = self.composite(theta, &children).unwrap();
                for grand in self.child_lists(mid, bound) {
                    let lhs = self.composite(mid, &grand);
                    let mut at = 0;
                    let mut inner = Vec::with_capacity(children.len());
                    for &c in &children {
                        let r = self.op(c).inputs.len();
                        inner.push(self.composite(c, &grand[at..at + r]));
                        at += r;
                    }
                    let rhs = inner
                        .into_iter()
                        .collect::<Option<Vec<u32>>>()
                        .and_then(|inner| self.composite(theta, &inner));
                    if lhs != rhs {
                        return bad(format!(
                            "associativity fails at {} with {:?} and {:?}",
                            self.op(theta).name,
                            children,
                            grand
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// One sort and exactly one operation of every arity up to `bound`.
    ///
    /// Panics if `bound` is 0, since identities are unary.
    pub fn terminal(bound: usize) -> Self {
        assert!(bound >= 1, "arity bound must be at least 1");
        Self::from_monoid(["*"], &[0], 0, bound)
            .expect("the terminal multicategory is a multicategory")
    }

    /// One sort; the operations of each arity are the monoid elements and
    /// `θ ∘ (θ_1, ..., θ_n) = θ·θ_1·...·θ_n`. `table[a * k + b] = a·b`.
    pub fn from_monoid<S: AsRef<str>>(
        elements: impl IntoIterator<Item = S>,
        table: &[u32],
        unit: u32,
        bound: usize,
    ) -> Result<Self> {
        let names: Vec<String> = elements
            .into_iter()
            .map(|s| s.as_ref().to_owned())
            .collect();
        let k = names.len();
        if table.len() != k * k || unit as usize >= k {
            return Err(Error::MalformedPresentation(
                "monoid table has the wrong size".into(),
            ));
        }
        if bound == 0 {
            return Err(Error::MalformedPresentation(
                "arity bound 0 leaves no room for identities".into(),
            ));
        }
        let mul = |a: u32, b: u32| table[a as usize * k + b as usize];
        let id = |arity: usize, element: u32| (arity * k) as u32 + element;
        let mut operations = Vec::new();
        for arity in 0..=bound {
            for name in &names {
                operations.push(Operation {
                    name: format!("{name}/{arity}"),
                    inputs: vec![0; arity],
                    output: 0,
                });
            }
        }
        let mut tables = MulticatTables {
            sorts: vec!["*".into()],
            arity_bound: bound,
            operations,
            identities: vec![id(1, unit)],
            composites: Vec::new(),
        };
        let pres = Self::new_unchecked(tables.clone())?;
        for theta in 0..tables.operations.len() as u32 {
            let element = theta % k as u32;
            for children in pres.child_lists(theta, bound) {
                let arity: usize = children.iter().map(|&c| c as usize / k).sum();
                let product = children
                    .iter()
                    .fold(element, |acc, &c| mul(acc, c % k as u32));
                tables
                    .composites
                    .push((theta, children, id(arity, product)));
            }
        }
        Self::new(tables)
    }
}

/// The fc-multicategory of a multicategory presentation.
#[derive(Clone, Debug)]
pub struct MulticatOracle {
    p: MulticatPresentation,
}

pub fn multicat_fc(p: MulticatPresentation) -> MulticatOracle {
    MulticatOracle { p }
}

const POINT: ObjectId = ObjectId(0);
const ONE: VertId = VertId(0);

impl MulticatOracle {
    pub fn presentation(&self) -> &MulticatPresentation {
        &self.p
    }

    fn check_arity(&self, n: usize) -> Result<()> {
        let bound = self.p.arity_bound();
        if n > bound {
            Err(Error::ArityBoundExceeded { arity: n, bound })
        } else {
            Ok(())
        }
    }

    fn sorts(frame: &Frame) -> Vec<u32> {
        frame.source.cells().iter().map(|h| h.0).collect()
    }

    /// The cell of an operation.
    pub fn cell(&self, op: u32) -> Result<TwoCell> {
        let o = self
            .p
            .tables
            .operations
            .get(op as usize)
            .ok_or_else(|| Error::UnknownCell(format!("operation {op}")))?;
        let source = crate::fc::Path::new(POINT, o.inputs.iter().map(|&s| HorId(s)).collect());
        Ok(TwoCell::new(
            CellId::atom(op),
            Frame::new(source, ONE, ONE, HorId(o.output)),
        ))
    }
}

impl FcOracle for MulticatOracle {
    fn objects(&self) -> Vec<ObjectId> {
        vec![POINT]
    }

    fn verticals(&self, dom: ObjectId, cod: ObjectId) -> Vec<VertId> {
        if dom == POINT && cod == POINT {
            vec![ONE]
        } else {
            Vec::new()
        }
    }

    fn horizontals(&self, src: ObjectId, dst: ObjectId) -> Vec<HorId> {
        if src == POINT && dst == POINT {
            (0..self.p.tables.sorts.len() as u32).map(HorId).collect()
        } else {
            Vec::new()
        }
    }

    fn vert_ends(&self, f: VertId) -> Result<(ObjectId, ObjectId)> {
        if f == ONE {
            Ok((POINT, POINT))
        } else {
            Err(Error::UnknownCell(format!("vertical {f}")))
        }
    }

    fn hor_ends(&self, m: HorId) -> Result<(ObjectId, ObjectId)> {
        if m.index() < self.p.tables.sorts.len() {
            Ok((POINT, POINT))
        } else {
            Err(Error::UnknownCell(format!("horizontal {m}")))
        }
    }

    fn compose_vert(&self, g: VertId, f: VertId) -> Result<VertId> {
        self.vert_ends(g)?;
        self.vert_ends(f)?;
        Ok(ONE)
    }

    fn id_vert(&self, x: ObjectId) -> Result<VertId> {
        if x == POINT {
            Ok(ONE)
        } else {
            Err(Error::UnknownCell(format!("object {x}")))
        }
    }

    fn cells_within(&self, frame: &Frame, budget: usize) -> Result<Vec<CellId>> {
        validate_frame(self, frame)?;
        self.check_arity(frame.arity())?;
        let ops = self.p.operations_of(&Self::sorts(frame), frame.target.0);
        if ops.len() > budget {
            return Err(Error::BudgetExceeded {
                frame: crate::fc::describe_frame(self, frame),
                limit: budget,
            });
        }
        Ok(ops.iter().map(|&o| CellId::atom(o)).collect())
    }

    fn has_cell(&self, frame: &Frame, id: &CellId) -> Result<bool> {
        validate_frame(self, frame)?;
        Ok(id.as_atom().is_some_and(|o| {
            self.p
                .operations_of(&Self::sorts(frame), frame.target.0)
                .contains(&o)
        }))
    }

    fn compose_raw(
        &self,
        theta: &TwoCell,
        children: &[TwoCell],
        _: &[VertId],
        result: &Frame,
    ) -> Result<CellId> {
        self.check_arity(result.arity())?;
        let t = theta
            .id
            .as_atom()
            .ok_or_else(|| Error::UnknownCell(theta.id.to_string()))?;
        let cs = children
            .iter()
            .map(|c| {
                c.id.as_atom()
                    .ok_or_else(|| Error::UnknownCell(c.id.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.p.composite(t, &cs).map(CellId::atom).ok_or_else(|| {
            Error::ClosureViolation(format!("no composite of operation {t} with {cs:?}"))
        })
    }

    fn id_cell_raw(&self, m: HorId) -> Result<CellId> {
        self.p
            .tables
            .identities
            .get(m.index())
            .map(|&i| CellId::atom(i))
            .ok_or_else(|| Error::UnknownCell(format!("horizontal {m}")))
    }

    fn object_label(&self, _: ObjectId) -> String {
        "•".into()
    }

    fn vert_label(&self, _: VertId) -> String {
        "1".into()
    }

    fn hor_label(&self, m: HorId) -> String {
        self.p
            .tables
            .sorts
            .get(m.index())
            .cloned()
            .unwrap_or_else(|| m.to_string())
    }

    fn cell_label(&self, cell: &TwoCell) -> String {
        cell.id
            .as_atom()
            .and_then(|o| self.p.tables.operations.get(o as usize))
            .map_or_else(|| cell.id.to_string(), |o| o.name.clone())
    }
}
