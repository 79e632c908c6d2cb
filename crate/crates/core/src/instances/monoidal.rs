//! Strict monoidal categories as one-object fc-multicategories.
//!
//! Horizontal 1-cells are the exposed objects of the monoidal category and a
//! 2-cell `(M_1, ..., M_n) => M` is a morphism `M_n ⊗ ... ⊗ M_1 -> M`, with the
//! tensor taken in reverse order. Pasting is
//! `θ ∘ ⟨θ_1, ..., θ_n⟩ = θ ∘ (θ_n ⊗ ... ⊗ θ_1)`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::category::advance;
use crate::error::{Error, Result};
use crate::fc::{
    describe_frame, validate_frame, CellId, FcOracle, Frame, HorId, ObjectId, TwoCell, VertId,
};

/// A morphism together with its ends.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mor {
    pub cell: CellId,
    pub dom: u32,
    pub cod: u32,
}

/// A strict monoidal category. Objects are `u32` codes; morphisms are
/// identified by [`CellId`] within their hom set.
pub trait MonoidalCategory: Send + Sync {
    /// Objects that become horizontal 1-cells.
    fn exposed(&self) -> Vec<u32>;

    fn unit(&self) -> u32;

    fn tensor_obj(&self, a: u32, b: u32) -> Result<u32>;

    /// `hom(a, b)`, failing with `BudgetExceeded` past `budget` morphisms.
    fn hom(&self, a: u32, b: u32, budget: usize) -> Result<Vec<CellId>>;

    fn is_mor(&self, a: u32, b: u32, f: &CellId) -> bool;

    fn identity(&self, a: u32) -> Result<CellId>;

    /// `g ∘ f`.
    fn compose(&self, g: &Mor, f: &Mor) -> Result<CellId>;

    fn tensor_mor(&self, f: &Mor, g: &Mor) -> Result<CellId>;

    fn object_label(&self, a: u32) -> String {
        a.to_string()
    }

    fn mor_label(&self, f: &Mor) -> String {
        f.cell.to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentedMorphism {
    pub name: String,
    pub dom: u32,
    pub cod: u32,
}

/// A strict monoidal category given by finite tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictMonoidalPresentation {
    objects: Vec<String>,
    unit: u32,
    tensor: Vec<u32>,
    morphisms: Vec<PresentedMorphism>,
    identities: Vec<u32>,
    compose: HashMap<(u32, u32), u32>,
    tensor_mor: HashMap<(u32, u32), u32>,
}

/// Raw tables of a [`StrictMonoidalPresentation`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidalTables {
    pub objects: Vec<String>,
    pub unit: u32,
    /// `tensor[a][b] = a ⊗ b`
    pub tensor: Vec<Vec<u32>>,
    pub morphisms: Vec<PresentedMorphism>,
    pub identities: Vec<u32>,
    /// `(g, f, g ∘ f)`
    pub compose: Vec<(u32, u32, u32)>,
    /// `(f, g, f ⊗ g)`
    pub tensor_mor: Vec<(u32, u32, u32)>,
}

impl StrictMonoidalPresentation {
    pub fn new(tables: MonoidalTables) -> Result<Self> {
        let p = Self::new_unchecked(tables)?;
        p.validate()?;
        Ok(p)
    }

    /// Checks only that the tables are in range and unambiguous.
    pub fn new_unchecked(t: MonoidalTables) -> Result<Self> {
        let bad = |m: String| Err(Error::MalformedPresentation(m));
        let n = t.objects.len();
        if t.unit as usize >= n {
            return bad("unit is not an object".into());
        }
        if t.tensor.len() != n || t.tensor.iter().any(|row| row.len() != n) {
            return bad("tensor table must be square over the objects".into());
        }
        if t.tensor.iter().flatten().any(|&c| c as usize >= n) {
            return bad("tensor table names a missing object".into());
        }
        let nm = t.morphisms.len() as u32;
        if t.morphisms
            .iter()
            .any(|m| m.dom as usize >= n || m.cod as usize >= n)
        {
            return bad("a morphism has an end outside the objects".into());
        }
        let mut compose = HashMap::new();
        for &(g, f, gf) in &t.compose {
            if g >= nm || f >= nm || gf >= nm {
                return bad(format!(
                    "composition entry ({g}, {f}, {gf}) names a missing morphism"
                ));
            }
            if compose.insert((g, f), gf).is_some_and(|old| old != gf) {
                return bad(format!("composite ({g}, {f}) is given twice"));
            }
        }
        let mut tensor_mor = HashMap::new();
        for &(f, g, fg) in &t.tensor_mor {
            if g >= nm || f >= nm || fg >= nm {
                return bad(format!(
                    "tensor entry ({f}, {g}, {fg}) names a missing morphism"
                ));
            }
            if tensor_mor.insert((f, g), fg).is_some_and(|old| old != fg) {
                return bad(format!("tensor ({f}, {g}) is given twice"));
            }
        }
        Ok(StrictMonoidalPresentation {
            objects: t.objects,
            unit: t.unit,
            tensor: t.tensor.into_iter().flatten().collect(),
            morphisms: t.morphisms,
            identities: t.identities,
            compose,
            tensor_mor,
        })
    }

    pub fn tables(&self) -> MonoidalTables {
        let n = self.objects.len();
        let mut compose: Vec<_> = self
            .compose
            .iter()
            .map(|(&(g, f), &gf)| (g, f, gf))
            .collect();
        compose.sort_unstable();
        let mut tensor_mor: Vec<_> = self
            .tensor_mor
            .iter()
            .map(|(&(f, g), &fg)| (f, g, fg))
            .collect();
        tensor_mor.sort_unstable();
        MonoidalTables {
            objects: self.objects.clone(),
            unit: self.unit,
            tensor: self
                .tensor
                .chunks(n.max(1))
                .map(<[u32]>::to_vec)
                .take(n)
                .collect(),
            morphisms: self.morphisms.clone(),
            identities: self.identities.clone(),
            compose,
            tensor_mor,
        }
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[PresentedMorphism] {
        &self.morphisms
    }

    pub fn object_index(&self, name: &str) -> Option<u32> {
        self.objects
            .iter()
            .position(|o| o == name)
            .map(|i| i as u32)
    }

    pub fn morphism_index(&self, name: &str) -> Option<u32> {
        self.morphisms
            .iter()
            .position(|m| m.name == name)
            .map(|i| i as u32)
    }

    fn t(&self, a: u32, b: u32) -> u32 {
        self.tensor[a as usize * self.objects.len() + b as usize]
    }

    fn mor_ends(&self, f: u32) -> (u32, u32) {
        let m = &self.morphisms[f as usize];
        (m.dom, m.cod)
    }

    /// Overwrites one composite without re-checking the laws.
    pub fn set_composite_unchecked(&mut self, g: u32, f: u32, gf: u32) {
        self.compose.insert((g, f), gf);
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::MalformedPresentation(m));
        let n = self.objects.len() as u32;
        let nm = self.morphisms.len() as u32;
        let name = |f: u32| self.morphisms[f as usize].name.as_str();
        for a in 0..n {
            if self.t(self.unit, a) != a || self.t(a, self.unit) != a {
                return bad(format!(
                    "unit law fails at object {}",
                    self.objects[a as usize]
                ));
            }
            for b in 0..n {
                for c in 0..n {
                    if self.t(self.t(a, b), c) != self.t(a, self.t(b, c)) {
                        return bad(format!(
                            "tensor is not associative at ({}, {}, {})",
                            self.objects[a as usize],
                            self.objects[b as usize],
                            self.objects[c as usize]
                        ));
                    }
                }
            }
        }
        if self.identities.len() != n as usize {
            return bad("every object needs exactly one identity".into());
        }
        for (a, &i) in self.identities.iter().enumerate() {
            if i >= nm || self.mor_ends(i) != (a as u32, a as u32) {
                return bad(format!(
                    "identity of {} is missing or mistyped",
                    self.objects[a]
                ));
            }
        }
        for g in 0..nm {
            for f in 0..nm {
                let (fd, fc) = self.mor_ends(f);
                let (gd, gc) = self.mor_ends(g);
                match (fc == gd, self.compose.get(&(g, f))) {
                    (false, None) => {}
                    (false, Some(_)) => {
                        return bad(format!(
                            "{} ∘ {} is given but they do not compose",
                            name(g),
                            name(f)
                        ))
                    }
                    (true, None) => return bad(format!("{} ∘ {} is missing", name(g), name(f))),
                    (true, Some(&gf)) => {
                        if self.mor_ends(gf) != (fd, gc) {
                            return bad(format!("{} ∘ {} has the wrong ends", name(g), name(f)));
                        }
                    }
                }
                let Some(&fg) = self.tensor_mor.get(&(f, g)) else {
                    return bad(format!("{} ⊗ {} is missing", name(f), name(g)));
                };
                if self.mor_ends(fg) != (self.t(fd, gd), self.t(fc, gc)) {
                    return bad(format!("{} ⊗ {} has the wrong ends", name(f), name(g)));
                }
            }
        }
        if self.tensor_mor.len() != (nm * nm) as usize {
            return bad("tensor of morphisms has extra entries".into());
        }
        let comp = |g: u32, f: u32| self.compose.get(&(g, f)).copied();
        let tens = |f: u32, g: u32| self.tensor_mor[&(f, g)];
        for f in 0..nm {
            let (d, c) = self.mor_ends(f);
            if comp(self.identities[c as usize], f) != Some(f)
                || comp(f, self.identities[d as usize]) != Some(f)
            {
                return bad(format!("identity law fails at {}", name(f)));
            }
            let iu = self.identities[self.unit as usize];
            if tens(iu, f) != f || tens(f, iu) != f {
                return bad(format!("tensor unit law fails at {}", name(f)));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let (ia, ib) = (self.identities[a as usize], self.identities[b as usize]);
                if tens(ia, ib) != self.identities[self.t(a, b) as usize] {
                    return bad("tensor of identities is not an identity".into());
                }
            }
        }
        for h in 0..nm {
            for g in 0..nm {
                for f in 0..nm {
                    if tens(tens(f, g), h) != tens(f, tens(g, h)) {
                        return bad(format!(
                            "tensor is not associative at ({}, {}, {})",
                            name(f),
                            name(g),
                            name(h)
                        ));
                    }
                    if let (Some(hg), Some(gf)) = (comp(h, g), comp(g, f)) {
                        if comp(hg, f) != comp(h, gf) {
                            return bad(format!(
                                "composition is not associative at ({}, {}, {})",
                                name(h),
                                name(g),
                                name(f)
                            ));
                        }
                    }
                }
            }
        }
        // interchange: (g ∘ f) ⊗ (g' ∘ f') = (g ⊗ g') ∘ (f ⊗ f')
        let pairs: Vec<(u32, u32, u32)> = self
            .compose
            .iter()
            .map(|(&(g, f), &gf)| (g, f, gf))
            .collect();
        for &(g, f, gf) in &pairs {
            for &(g2, f2, gf2) in &pairs {
                if comp(tens(g, g2), tens(f, f2)) != Some(tens(gf, gf2)) {
                    return bad(format!(
                        "tensor is not functorial at ({} ∘ {}) ⊗ ({} ∘ {})",
                        name(g),
                        name(f),
                        name(g2),
                        name(f2)
                    ));
                }
            }
        }
        Ok(())
    }

    /// The two-element poset `0 ≤ 1` with `⊗ = min` and unit `1`.
    pub fn v2() -> Self {
        Self::from_preorder(["0", "1"], |a, b| a <= b, |a, b| a.min(b), 1).expect("V2 is monoidal")
    }

    /// A thin monoidal category: a preorder with a monotone, associative,
    /// unital tensor on objects.
    pub fn from_preorder<S: Into<String>>(
        objects: impl IntoIterator<Item = S>,
        leq: impl Fn(u32, u32) -> bool,
        tensor: impl Fn(u32, u32) -> u32,
        unit: u32,
    ) -> Result<Self> {
        let objects: Vec<String> = objects.into_iter().map(Into::into).collect();
        let n = objects.len() as u32;
        let mut morphisms = Vec::new();
        let mut index = HashMap::new();
        for a in 0..n {
            for b in 0..n {
                if leq(a, b) {
                    index.insert((a, b), morphisms.len() as u32);
                    morphisms.push(PresentedMorphism {
                        name: format!("{}≤{}", objects[a as usize], objects[b as usize]),
                        dom: a,
                        cod: b,
                    });
                }
            }
        }
        let identities = (0..n)
            .map(|a| {
                index
                    .get(&(a, a))
                    .copied()
                    .ok_or_else(|| Error::MalformedPresentation("order is not reflexive".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let lookup = |a: u32, b: u32| {
            index
                .get(&(a, b))
                .copied()
                .ok_or_else(|| Error::MalformedPresentation(format!("no arrow {a} ≤ {b}")))
        };
        let mut compose = Vec::new();
        let mut tensor_mor = Vec::new();
        for (g, mg) in morphisms.iter().enumerate() {
            for (f, mf) in morphisms.iter().enumerate() {
                if mf.cod == mg.dom {
                    compose.push((g as u32, f as u32, lookup(mf.dom, mg.cod)?));
                }
                tensor_mor.push((
                    g as u32,
                    f as u32,
                    lookup(tensor(mg.dom, mf.dom), tensor(mg.cod, mf.cod))?,
                ));
            }
        }
        Self::new(MonoidalTables {
            tensor: (0..n)
                .map(|a| (0..n).map(|b| tensor(a, b)).collect())
                .collect(),
            objects,
            unit,
            morphisms,
            identities,
            compose,
            tensor_mor,
        })
    }

    /// A monoid viewed as a discrete strict monoidal category: objects are
    /// the elements, `a ⊗ b = a·b`, and only identity morphisms.
    /// `table[a * n + b] = a·b`.
    pub fn discrete_monoid<S: Into<String>>(
        elements: impl IntoIterator<Item = S>,
        table: &[u32],
        unit: u32,
    ) -> Result<Self> {
        let objects: Vec<String> = elements.into_iter().map(Into::into).collect();
        let n = objects.len();
        if table.len() != n * n {
            return Err(Error::MalformedPresentation(
                "monoid table has the wrong size".into(),
            ));
        }
        Self::from_preorder(
            objects,
            |a, b| a == b,
            |a, b| table[a as usize * n + b as usize],
            unit,
        )
    }
}

impl MonoidalCategory for StrictMonoidalPresentation {
    fn exposed(&self) -> Vec<u32> {
        (0..self.objects.len() as u32).collect()
    }

    fn unit(&self) -> u32 {
        self.unit
    }

    fn tensor_obj(&self, a: u32, b: u32) -> Result<u32> {
        let n = self.objects.len() as u32;
        if a >= n || b >= n {
            return Err(Error::UnknownCell(format!("object {a} or {b}")));
        }
        Ok(self.t(a, b))
    }

    fn hom(&self, a: u32, b: u32, budget: usize) -> Result<Vec<CellId>> {
        let out: Vec<CellId> = (0..self.morphisms.len() as u32)
            .filter(|&f| self.mor_ends(f) == (a, b))
            .map(CellId::atom)
            .collect();
        if out.len() > budget {
            return Err(Error::BudgetExceeded {
                frame: format!("hom({}, {})", self.object_label(a), self.object_label(b)),
                limit: budget,
            });
        }
        Ok(out)
    }

    fn is_mor(&self, a: u32, b: u32, f: &CellId) -> bool {
        f.as_atom()
            .is_some_and(|f| (f as usize) < self.morphisms.len() && self.mor_ends(f) == (a, b))
    }

    fn identity(&self, a: u32) -> Result<CellId> {
        self.identities
            .get(a as usize)
            .map(|&i| CellId::atom(i))
            .ok_or_else(|| Error::UnknownCell(format!("object {a}")))
    }

    fn compose(&self, g: &Mor, f: &Mor) -> Result<CellId> {
        let key = (atom(&g.cell)?, atom(&f.cell)?);
        self.compose
            .get(&key)
            .map(|&gf| CellId::atom(gf))
            .ok_or_else(|| {
                Error::NotComposable(format!("{} ∘ {}", self.mor_label(g), self.mor_label(f)))
            })
    }

    fn tensor_mor(&self, f: &Mor, g: &Mor) -> Result<CellId> {
        let key = (atom(&f.cell)?, atom(&g.cell)?);
        self.tensor_mor
            .get(&key)
            .map(|&fg| CellId::atom(fg))
            .ok_or_else(|| {
                Error::UnknownCell(format!("{} ⊗ {}", self.mor_label(f), self.mor_label(g)))
            })
    }

    fn object_label(&self, a: u32) -> String {
        self.objects
            .get(a as usize)
            .cloned()
            .unwrap_or_else(|| a.to_string())
    }

    fn mor_label(&self, f: &Mor) -> String {
        f.cell
            .as_atom()
            .and_then(|i| self.morphisms.get(i as usize))
            .map_or_else(|| f.cell.to_string(), |m| m.name.clone())
    }
}

fn atom(c: &CellId) -> Result<u32> {
    c.as_atom().ok_or_else(|| Error::UnknownCell(c.to_string()))
}

/// Finite cardinals with the cartesian product, skeletal and strict: the
/// object `n` is `{0, ..., n-1}`, `n ⊗ m = n·m` with `(i, j) ↦ i·m + j`, and
/// morphisms are functions given by their value tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinSetProduct {
    pub exposed: Vec<u32>,
}

impl FinSetProduct {
    pub fn new(exposed: Vec<u32>) -> Self {
        FinSetProduct { exposed }
    }
}

impl MonoidalCategory for FinSetProduct {
    fn exposed(&self) -> Vec<u32> {
        self.exposed.clone()
    }

    fn unit(&self) -> u32 {
        1
    }

    fn tensor_obj(&self, a: u32, b: u32) -> Result<u32> {
        a.checked_mul(b)
            .ok_or_else(|| Error::MalformedData(format!("{a} ⊗ {b} overflows")))
    }

    fn hom(&self, a: u32, b: u32, budget: usize) -> Result<Vec<CellId>> {
        let count = (b as usize).checked_pow(a);
        if count.is_none_or(|c| c > budget) {
            return Err(Error::BudgetExceeded {
                frame: format!("hom({a}, {b})"),
                limit: budget,
            });
        }
        let mut out = Vec::with_capacity(count.unwrap_or(0));
        if b == 0 && a > 0 {
            return Ok(out);
        }
        let mut table = vec![0u32; a as usize];
        loop {
            out.push(CellId::from_table(table.clone()));
            if !advance(&mut table, b) {
                return Ok(out);
            }
        }
    }

    fn is_mor(&self, a: u32, b: u32, f: &CellId) -> bool {
        f.as_slice().len() == a as usize && f.as_slice().iter().all(|&v| v < b)
    }

    fn identity(&self, a: u32) -> Result<CellId> {
        Ok(CellId::from_table((0..a).collect()))
    }

    fn compose(&self, g: &Mor, f: &Mor) -> Result<CellId> {
        if f.cod != g.dom {
            return Err(Error::NotComposable(format!(
                "{} -> {} after {} -> {}",
                g.dom, g.cod, f.dom, f.cod
            )));
        }
        let gt = g.cell.as_slice();
        Ok(CellId::from_table(
            f.cell.as_slice().iter().map(|&x| gt[x as usize]).collect(),
        ))
    }

    fn tensor_mor(&self, f: &Mor, g: &Mor) -> Result<CellId> {
        let (ft, gt) = (f.cell.as_slice(), g.cell.as_slice());
        let mut out = Vec::with_capacity(ft.len() * gt.len());
        for &x in ft {
            for &y in gt {
                out.push(x * g.cod + y);
            }
        }
        Ok(CellId::from_table(out))
    }
}

/// The fc-multicategory of a strict monoidal category: one object `•`, one
/// vertical 1-cell.
#[derive(Clone, Debug)]
pub struct MonoidalOracle<M> {
    m: M,
    exposed: Vec<u32>,
}

pub fn monoidal_fc<M: MonoidalCategory>(m: M) -> MonoidalOracle<M> {
    MonoidalOracle::new(m)
}

impl<M: MonoidalCategory> MonoidalOracle<M> {
    pub fn new(m: M) -> Self {
        let exposed = m.exposed();
        MonoidalOracle { m, exposed }
    }

    pub fn category(&self) -> &M {
        &self.m
    }

    /// The horizontal 1-cell for an exposed object.
    pub fn horizontal(&self, object: u32) -> Option<HorId> {
        self.exposed
            .iter()
            .position(|&o| o == object)
            .map(|i| HorId(i as u32))
    }

    pub fn object_of(&self, m: HorId) -> Result<u32> {
        self.exposed
            .get(m.index())
            .copied()
            .ok_or_else(|| Error::UnknownCell(format!("horizontal {m}")))
    }

    /// `M_n ⊗ ... ⊗ M_1` for a source row `M_1, ..., M_n`.
    pub fn source_object(&self, source: &[HorId]) -> Result<u32> {
        let mut acc = self.m.unit();
        for &h in source {
            acc = self.m.tensor_obj(self.object_of(h)?, acc)?;
        }
        Ok(acc)
    }

    /// The cell of `frame` given by a morphism of the monoidal category.
    pub fn cell(&self, frame: Frame, mor: CellId) -> Result<TwoCell> {
        validate_frame(self, &frame)?;
        let dom = self.source_object(frame.source.cells())?;
        let cod = self.object_of(frame.target)?;
        if !self.m.is_mor(dom, cod, &mor) {
            return Err(Error::UnknownCell(format!(
                "{mor} in {}",
                describe_frame(self, &frame)
            )));
        }
        Ok(TwoCell::new(mor, frame))
    }

    fn typed(&self, cell: &TwoCell) -> Result<Mor> {
        Ok(Mor {
            cell: cell.id.clone(),
            dom: self.source_object(cell.frame.source.cells())?,
            cod: self.object_of(cell.frame.target)?,
        })
    }
}

const POINT: ObjectId = ObjectId(0);
const ONE: VertId = VertId(0);

impl<M: MonoidalCategory> FcOracle for MonoidalOracle<M> {
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
            (0..self.exposed.len() as u32).map(HorId).collect()
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
        self.object_of(m)?;
        Ok((POINT, POINT))
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
        let dom = self.source_object(frame.source.cells())?;
        let cod = self.object_of(frame.target)?;
        self.m.hom(dom, cod, budget).map_err(|e| match e {
            Error::BudgetExceeded { limit, .. } => Error::BudgetExceeded {
                frame: describe_frame(self, frame),
                limit,
            },
            e => e,
        })
    }

    fn has_cell(&self, frame: &Frame, id: &CellId) -> Result<bool> {
        validate_frame(self, frame)?;
        let dom = self.source_object(frame.source.cells())?;
        let cod = self.object_of(frame.target)?;
        Ok(self.m.is_mor(dom, cod, id))
    }

    fn compose_raw(
        &self,
        theta: &TwoCell,
        children: &[TwoCell],
        _: &[VertId],
        _: &Frame,
    ) -> Result<CellId> {
        // θ_n ⊗ ... ⊗ θ_1
        let unit = self.m.unit();
        let mut acc = Mor {
            cell: self.m.identity(unit)?,
            dom: unit,
            cod: unit,
        };
        for child in children {
            let c = self.typed(child)?;
            acc = Mor {
                cell: self.m.tensor_mor(&c, &acc)?,
                dom: self.m.tensor_obj(c.dom, acc.dom)?,
                cod: self.m.tensor_obj(c.cod, acc.cod)?,
            };
        }
        self.m.compose(&self.typed(theta)?, &acc)
    }

    fn id_cell_raw(&self, m: HorId) -> Result<CellId> {
        self.m.identity(self.object_of(m)?)
    }

    fn object_label(&self, _: ObjectId) -> String {
        "•".into()
    }

    fn vert_label(&self, _: VertId) -> String {
        "1".into()
    }

    fn hor_label(&self, m: HorId) -> String {
        self.object_of(m)
            .map_or_else(|_| m.to_string(), |o| self.m.object_label(o))
    }

    fn cell_label(&self, cell: &TwoCell) -> String {
        match self.typed(cell) {
            Ok(m) => self.m.mor_label(&m),
            Err(_) => cell.id.to_string(),
        }
    }
}
