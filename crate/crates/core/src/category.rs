//! Finite categories, functors and profunctors given by tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Morphism {
    pub name: String,
    pub dom: u32,
    pub cod: u32,
}

impl Morphism {
    pub fn new(name: impl Into<String>, dom: u32, cod: u32) -> Self {
        Morphism {
            name: name.into(),
            dom,
            cod,
        }
    }
}

/// A finite category with a dense composition table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "CategoryTables", try_from = "CategoryTables")]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<u32>,
    // table[g * |mor| + f] = g ∘ f, or NONE when cod f != dom g
    table: Vec<u32>,
}

/// Serialized form of a [`FinCategory`]. Deserializing checks only that the
/// entries are in range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryTables {
    pub objects: Vec<String>,
    pub morphisms: Vec<Morphism>,
    pub identities: Vec<u32>,
    /// `(g, f, g ∘ f)`
    pub compose: Vec<(u32, u32, u32)>,
}

impl From<FinCategory> for CategoryTables {
    fn from(c: FinCategory) -> Self {
        CategoryTables {
            compose: c.entries(),
            objects: c.objects,
            morphisms: c.morphisms,
            identities: c.identities,
        }
    }
}

impl TryFrom<CategoryTables> for FinCategory {
    type Error = Error;

    fn try_from(t: CategoryTables) -> Result<Self> {
        FinCategory::from_entries_unchecked(t.objects, t.morphisms, t.identities, &t.compose)
    }
}

impl FinCategory {
    /// Builds a category from `(g, f, g∘f)` entries and checks the laws.
    pub fn from_entries(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<u32>,
        entries: &[(u32, u32, u32)],
    ) -> Result<Self> {
        let c = Self::from_entries_unchecked(objects, morphisms, identities, entries)?;
        c.validate()?;
        Ok(c)
    }

    /// Like [`FinCategory::from_entries`] but only checks that the entries
    /// are in range; the laws are left to [`FinCategory::validate`].
    pub fn from_entries_unchecked(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<u32>,
        entries: &[(u32, u32, u32)],
    ) -> Result<Self> {
        let n = morphisms.len();
        let k = objects.len() as u32;
        if let Some(m) = morphisms.iter().find(|m| m.dom >= k || m.cod >= k) {
            return Err(Error::MalformedData(format!(
                "morphism {} has an end outside the objects",
                m.name
            )));
        }
        if identities.len() != objects.len() || identities.iter().any(|&i| i as usize >= n) {
            return Err(Error::MalformedData(
                "identities must name one morphism per object".into(),
            ));
        }
        let mut table = vec![NONE; n * n];
        for &(g, f, gf) in entries {
            if g as usize >= n || f as usize >= n || gf as usize >= n {
                return Err(Error::MalformedData(format!(
                    "composition entry ({g}, {f}, {gf}) names a missing morphism"
                )));
            }
            let slot = &mut table[g as usize * n + f as usize];
            if *slot != NONE && *slot != gf {
                return Err(Error::NotACategory(format!(
                    "{} ∘ {} is given twice",
                    morphisms[g as usize].name, morphisms[f as usize].name
                )));
            }
            *slot = gf;
        }
        Ok(FinCategory {
            objects,
            morphisms,
            identities,
            table,
        })
    }

    /// Builds a category whose composition is `compose(g, f)`, called on
    /// every composable pair.
    pub fn from_fn(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<u32>,
        compose: impl Fn(u32, u32) -> u32,
    ) -> Result<Self> {
        let mut entries = Vec::new();
        for (g, mg) in morphisms.iter().enumerate() {
            for (f, mf) in morphisms.iter().enumerate() {
                if mf.cod == mg.dom {
                    entries.push((g as u32, f as u32, compose(g as u32, f as u32)));
                }
            }
        }
        Self::from_entries(objects, morphisms, identities, &entries)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::NotACategory(m));
        let nobj = self.objects.len() as u32;
        let n = self.morphisms.len();
        for m in &self.morphisms {
            if m.dom >= nobj || m.cod >= nobj {
                return bad(format!(
                    "morphism {} has an end outside the objects",
                    m.name
                ));
            }
        }
        if self.identities.len() != self.objects.len() {
            return bad("every object needs exactly one identity".into());
        }
        for (x, &i) in self.identities.iter().enumerate() {
            let Some(m) = self.morphisms.get(i as usize) else {
                return bad(format!("identity of {} is missing", self.objects[x]));
            };
            if m.dom != x as u32 || m.cod != x as u32 {
                return bad(format!(
                    "identity {} of {} is not an endomorphism of it",
                    m.name, self.objects[x]
                ));
            }
        }
        for g in 0..n {
            for f in 0..n {
                let (mg, mf) = (&self.morphisms[g], &self.morphisms[f]);
                let gf = self.table[g * n + f];
                if mf.cod != mg.dom {
                    if gf != NONE {
                        return bad(format!(
                            "{} ∘ {} is given but they do not compose",
                            mg.name, mf.name
                        ));
                    }
                    continue;
                }
                if gf == NONE {
                    return bad(format!("{} ∘ {} is missing", mg.name, mf.name));
                }
                let c = &self.morphisms[gf as usize];
                if c.dom != mf.dom || c.cod != mg.cod {
                    return bad(format!(
                        "{} ∘ {} = {} has the wrong ends",
                        mg.name, mf.name, c.name
                    ));
                }
            }
        }
        for (f, m) in self.morphisms.iter().enumerate() {
            let f = f as u32;
            if self.compose(self.identities[m.cod as usize], f) != Some(f) {
                return bad(format!("left unit fails at {}", m.name));
            }
            if self.compose(f, self.identities[m.dom as usize]) != Some(f) {
                return bad(format!("right unit fails at {}", m.name));
            }
        }
        for h in 0..n as u32 {
            for g in 0..n as u32 {
                let Some(hg) = self.compose(h, g) else {
                    continue;
                };
                for f in 0..n as u32 {
                    let Some(gf) = self.compose(g, f) else {
                        continue;
                    };
                    if self.compose(hg, f) != self.compose(h, gf) {
                        return bad(format!(
                            "associativity fails at ({}, {}, {})",
                            self.morphisms[h as usize].name,
                            self.morphisms[g as usize].name,
                            self.morphisms[f as usize].name
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn identities(&self) -> &[u32] {
        &self.identities
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn morphism(&self, f: u32) -> &Morphism {
        &self.morphisms[f as usize]
    }

    pub fn dom(&self, f: u32) -> u32 {
        self.morphisms[f as usize].dom
    }

    pub fn cod(&self, f: u32) -> u32 {
        self.morphisms[f as usize].cod
    }

    pub fn identity(&self, x: u32) -> u32 {
        self.identities[x as usize]
    }

    pub fn is_identity(&self, f: u32) -> bool {
        self.identities.get(self.dom(f) as usize) == Some(&f)
    }

    /// `g ∘ f`, if they compose.
    pub fn compose(&self, g: u32, f: u32) -> Option<u32> {
        let n = self.morphisms.len();
        match self.table.get(g as usize * n + f as usize) {
            Some(&gf) if gf != NONE => Some(gf),
            _ => None,
        }
    }

    pub fn hom(&self, a: u32, b: u32) -> Vec<u32> {
        (0..self.morphisms.len() as u32)
            .filter(|&f| self.dom(f) == a && self.cod(f) == b)
            .collect()
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

    /// `(g, f, g∘f)` for every composable pair, in table order.
    pub fn entries(&self) -> Vec<(u32, u32, u32)> {
        let n = self.morphisms.len();
        let mut out = Vec::new();
        for g in 0..n {
            for f in 0..n {
                let gf = self.table[g * n + f];
                if gf != NONE {
                    out.push((g as u32, f as u32, gf));
                }
            }
        }
        out
    }

    /// Overwrites one composite without checking the laws.
    pub fn set_composite_unchecked(&mut self, g: u32, f: u32, gf: u32) {
        let n = self.morphisms.len();
        self.table[g as usize * n + f as usize] = gf;
    }

    fn identities_on(objects: &[String]) -> (Vec<Morphism>, Vec<u32>) {
        let morphisms = objects
            .iter()
            .enumerate()
            .map(|(i, o)| Morphism::new(format!("1_{o}"), i as u32, i as u32))
            .collect();
        (morphisms, (0..objects.len() as u32).collect())
    }

    /// Only identity morphisms.
    pub fn discrete<S: Into<String>>(objects: impl IntoIterator<Item = S>) -> Self {
        let objects: Vec<String> = objects.into_iter().map(Into::into).collect();
        let (morphisms, identities) = Self::identities_on(&objects);
        Self::from_fn(objects, morphisms, identities, |g, _| g)
            .expect("discrete categories are categories")
    }

    pub fn terminal() -> Self {
        Self::discrete(["*"])
    }

    /// The preorder on `objects` with `a -> b` exactly when `leq(a, b)`.
    pub fn from_preorder<S: Into<String>>(
        objects: impl IntoIterator<Item = S>,
        leq: impl Fn(u32, u32) -> bool,
    ) -> Result<Self> {
        let objects: Vec<String> = objects.into_iter().map(Into::into).collect();
        let n = objects.len() as u32;
        let mut morphisms = Vec::new();
        let mut index = vec![NONE; (n * n) as usize];
        for a in 0..n {
            for b in 0..n {
                if leq(a, b) {
                    index[(a * n + b) as usize] = morphisms.len() as u32;
                    let name = if a == b {
                        format!("1_{}", objects[a as usize])
                    } else {
                        format!("{}<{}", objects[a as usize], objects[b as usize])
                    };
                    morphisms.push(Morphism::new(name, a, b));
                }
            }
        }
        let identities: Vec<u32> = (0..n).map(|a| index[(a * n + a) as usize]).collect();
        if identities.contains(&NONE) {
            return Err(Error::NotACategory("relation is not reflexive".into()));
        }
        let ends: Vec<(u32, u32)> = morphisms.iter().map(|m| (m.dom, m.cod)).collect();
        let mut entries = Vec::new();
        for (g, &(b, c)) in ends.iter().enumerate() {
            for (f, &(a, b2)) in ends.iter().enumerate() {
                if b2 != b {
                    continue;
                }
                let gf = index[(a * n + c) as usize];
                if gf == NONE {
                    return Err(Error::NotACategory("relation is not transitive".into()));
                }
                entries.push((g as u32, f as u32, gf));
            }
        }
        Self::from_entries(objects, morphisms, identities, &entries)
    }

    /// The arrow category `0 -> 1`.
    pub fn arrow() -> Self {
        Self::chain(2)
    }

    /// The total order `0 < 1 < ... < n-1`.
    pub fn chain(n: u32) -> Self {
        Self::from_preorder((0..n).map(|i| i.to_string()), |a, b| a <= b)
            .expect("chains are categories")
    }

    /// One object with morphisms the monoid elements; `table[a * n + b] = a·b`
    /// is composition `a ∘ b`.
    pub fn from_monoid<S: Into<String>>(
        elements: impl IntoIterator<Item = S>,
        table: &[u32],
        unit: u32,
    ) -> Result<Self> {
        let morphisms: Vec<Morphism> = elements
            .into_iter()
            .map(|e| Morphism::new(e, 0, 0))
            .collect();
        let n = morphisms.len();
        if table.len() != n * n {
            return Err(Error::NotACategory(
                "monoid table has the wrong size".into(),
            ));
        }
        Self::from_fn(vec!["*".into()], morphisms, vec![unit], |g, f| {
            table[g as usize * n + f as usize]
        })
    }

    /// Two objects and two parallel non-identity arrows.
    pub fn parallel_arrows() -> Self {
        let objects = vec!["0".to_owned(), "1".to_owned()];
        let morphisms = vec![
            Morphism::new("1_0", 0, 0),
            Morphism::new("1_1", 1, 1),
            Morphism::new("f", 0, 1),
            Morphism::new("g", 0, 1),
        ];
        Self::from_fn(objects, morphisms, vec![0, 1], |g, f| match (g, f) {
            (0 | 1, f) => f,
            (g, _) => g,
        })
        .expect("parallel arrows form a category")
    }
}

/// A functor given by its object and morphism maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinFunctor {
    pub objects: Vec<u32>,
    pub morphisms: Vec<u32>,
}

impl FinFunctor {
    pub fn identity(c: &FinCategory) -> Self {
        FinFunctor {
            objects: (0..c.object_count() as u32).collect(),
            morphisms: (0..c.morphism_count() as u32).collect(),
        }
    }

    pub fn check(&self, c: &FinCategory, d: &FinCategory) -> Result<()> {
        let bad = |m: String| Err(Error::NotAFunctor(m));
        if self.objects.len() != c.object_count() || self.morphisms.len() != c.morphism_count() {
            return bad("maps do not cover the source category".into());
        }
        if self.objects.iter().any(|&y| y as usize >= d.object_count())
            || self
                .morphisms
                .iter()
                .any(|&g| g as usize >= d.morphism_count())
        {
            return bad("a value lies outside the target category".into());
        }
        for (f, m) in c.morphisms().iter().enumerate() {
            let g = self.morphisms[f];
            if d.dom(g) != self.objects[m.dom as usize] || d.cod(g) != self.objects[m.cod as usize]
            {
                return bad(format!("image of {} has the wrong ends", m.name));
            }
        }
        for x in 0..c.object_count() as u32 {
            if self.morphisms[c.identity(x) as usize] != d.identity(self.objects[x as usize]) {
                return bad(format!(
                    "identity of {} is not preserved",
                    c.objects()[x as usize]
                ));
            }
        }
        for (g, f, gf) in c.entries() {
            let image = d.compose(self.morphisms[g as usize], self.morphisms[f as usize]);
            if image != Some(self.morphisms[gf as usize]) {
                return bad(format!(
                    "composite {} ∘ {} is not preserved",
                    c.morphism(g).name,
                    c.morphism(f).name
                ));
            }
        }
        Ok(())
    }

    /// Every functor `c -> d`, by enumerating object maps and then morphism
    /// maps with matching ends.
    pub fn all(c: &FinCategory, d: &FinCategory) -> Vec<FinFunctor> {
        let mut out = Vec::new();
        let nc = c.object_count();
        let nd = d.object_count() as u32;
        let mut objects = vec![0u32; nc];
        if nc > 0 && nd == 0 {
            return out;
        }
        loop {
            let choices: Vec<Vec<u32>> = c
                .morphisms()
                .iter()
                .map(|m| d.hom(objects[m.dom as usize], objects[m.cod as usize]))
                .collect();
            for_each_choice(&choices, |morphisms| {
                let f = FinFunctor {
                    objects: objects.clone(),
                    morphisms: morphisms.to_vec(),
                };
                if f.check(c, d).is_ok() {
                    out.push(f);
                }
            });
            if !advance(&mut objects, nd) {
                return out;
            }
        }
    }
}

/// Odometer over `digits` with base `base`, last digit fastest. Returns false
/// after the last value.
pub(crate) fn advance(digits: &mut [u32], base: u32) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Calls `f` on every element of the product of `choices`, last factor
/// fastest.
pub(crate) fn for_each_choice(choices: &[Vec<u32>], mut f: impl FnMut(&[u32])) {
    if choices.iter().any(Vec::is_empty) {
        return;
    }
    let mut digits = vec![0usize; choices.len()];
    let mut current: Vec<u32> = choices.iter().map(|c| c[0]).collect();
    loop {
        f(&current);
        let mut k = choices.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < choices[k].len() {
                current[k] = choices[k][digits[k]];
                break;
            }
            digits[k] = 0;
            current[k] = choices[k][0];
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProElement {
    pub name: String,
    /// object of the source category
    pub left: u32,
    /// object of the target category
    pub right: u32,
}

/// A profunctor `C ⇸ D`: sets `P(c, d)`, contravariant in `c` and covariant
/// in `d`. `act_left` sends `(u: c0 -> c, e ∈ P(c, d))` to `e·u ∈ P(c0, d)`;
/// `act_right` sends `(e ∈ P(c, d), v: d -> d1)` to `v·e ∈ P(c, d1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profunctor {
    elements: Vec<ProElement>,
    c_morphisms: usize,
    d_morphisms: usize,
    // [u * |E| + e]
    act_left: Vec<u32>,
    // [e * |mor D| + v]
    act_right: Vec<u32>,
}

impl Profunctor {
    /// Builds the actions from functions called on every compatible pair.
    pub fn from_fn(
        c: &FinCategory,
        d: &FinCategory,
        elements: Vec<ProElement>,
        left: impl Fn(u32, u32) -> u32,
        right: impl Fn(u32, u32) -> u32,
    ) -> Result<Self> {
        let p = Self::from_fn_unchecked(c, d, elements, left, right);
        p.check(c, d)?;
        Ok(p)
    }

    pub fn from_fn_unchecked(
        c: &FinCategory,
        d: &FinCategory,
        elements: Vec<ProElement>,
        left: impl Fn(u32, u32) -> u32,
        right: impl Fn(u32, u32) -> u32,
    ) -> Self {
        let ne = elements.len();
        let (nc, nd) = (c.morphism_count(), d.morphism_count());
        let mut act_left = vec![NONE; nc * ne];
        let mut act_right = vec![NONE; ne * nd];
        for (e, el) in elements.iter().enumerate() {
            for u in 0..nc as u32 {
                if c.cod(u) == el.left {
                    act_left[u as usize * ne + e] = left(u, e as u32);
                }
            }
            for v in 0..nd as u32 {
                if d.dom(v) == el.right {
                    act_right[e * nd + v as usize] = right(e as u32, v);
                }
            }
        }
        Profunctor {
            elements,
            c_morphisms: nc,
            d_morphisms: nd,
            act_left,
            act_right,
        }
    }

    /// `P(c, d) = C(c, d)` with composition as both actions.
    pub fn hom(c: &FinCategory) -> Self {
        let elements = c
            .morphisms()
            .iter()
            .map(|m| ProElement {
                name: m.name.clone(),
                left: m.dom,
                right: m.cod,
            })
            .collect();
        Self::from_fn(
            c,
            c,
            elements,
            |u, e| c.compose(e, u).unwrap(),
            |e, v| c.compose(v, e).unwrap(),
        )
        .expect("hom profunctors are profunctors")
    }

    pub fn elements(&self) -> &[ProElement] {
        &self.elements
    }

    /// `e·u`
    pub fn left(&self, u: u32, e: u32) -> Option<u32> {
        let v = *self
            .act_left
            .get(u as usize * self.elements.len() + e as usize)?;
        (v != NONE).then_some(v)
    }

    /// `v·e`
    pub fn right(&self, e: u32, v: u32) -> Option<u32> {
        let w = *self
            .act_right
            .get(e as usize * self.d_morphisms + v as usize)?;
        (w != NONE).then_some(w)
    }

    pub fn set_left_unchecked(&mut self, u: u32, e: u32, value: u32) {
        let ne = self.elements.len();
        self.act_left[u as usize * ne + e as usize] = value;
    }

    pub fn check(&self, c: &FinCategory, d: &FinCategory) -> Result<()> {
        let bad = |m: String| Err(Error::NotAProfunctor(m));
        if self.c_morphisms != c.morphism_count() || self.d_morphisms != d.morphism_count() {
            return bad("action tables do not match the categories".into());
        }
        let ne = self.elements.len() as u32;
        for el in &self.elements {
            if el.left as usize >= c.object_count() || el.right as usize >= d.object_count() {
                return bad(format!("element {} lies over a missing object", el.name));
            }
        }
        let name = |e: u32| &self.elements[e as usize].name;
        for e in 0..ne {
            let el = &self.elements[e as usize];
            for u in c.hom_into(el.left) {
                match self.left(u, e) {
                    Some(r)
                        if r < ne
                            && self.elements[r as usize].left == c.dom(u)
                            && self.elements[r as usize].right == el.right => {}
                    _ => {
                        return bad(format!(
                            "{}·{} is missing or has the wrong ends",
                            name(e),
                            c.morphism(u).name
                        ))
                    }
                }
            }
            for v in d.hom_from(el.right) {
                match self.right(e, v) {
                    Some(r)
                        if r < ne
                            && self.elements[r as usize].left == el.left
                            && self.elements[r as usize].right == d.cod(v) => {}
                    _ => {
                        return bad(format!(
                            "{}·{} is missing or has the wrong ends",
                            d.morphism(v).name,
                            name(e)
                        ))
                    }
                }
            }
            if self.left(c.identity(el.left), e) != Some(e) {
                return bad(format!("left unit fails at {}", name(e)));
            }
            if self.right(e, d.identity(el.right)) != Some(e) {
                return bad(format!("right unit fails at {}", name(e)));
            }
        }
        for e in 0..ne {
            let el = &self.elements[e as usize];
            for u in c.hom_into(el.left) {
                let eu = self.left(u, e).unwrap();
                for u0 in c.hom_into(c.dom(u)) {
                    let lhs = self.left(u0, eu);
                    let rhs = self.left(c.compose(u, u0).unwrap(), e);
                    if lhs != rhs {
                        return bad(format!("left action is not associative at {}", name(e)));
                    }
                }
                for v in d.hom_from(el.right) {
                    if self.right(eu, v) != self.left(u, self.right(e, v).unwrap()) {
                        return bad(format!("actions do not commute at {}", name(e)));
                    }
                }
            }
            for v in d.hom_from(el.right) {
                let ve = self.right(e, v).unwrap();
                for v1 in d.hom_from(d.cod(v)) {
                    if self.right(ve, v1) != self.right(e, d.compose(v1, v).unwrap()) {
                        return bad(format!("right action is not associative at {}", name(e)));
                    }
                }
            }
        }
        Ok(())
    }

    /// Every profunctor `c ⇸ d` on the given elements, by enumerating both
    /// action tables. Fails with `BudgetExceeded` when there are more than
    /// `budget` candidate tables.
    pub fn all(
        c: &FinCategory,
        d: &FinCategory,
        elements: &[ProElement],
        budget: usize,
    ) -> Result<Vec<Profunctor>> {
        let ne = elements.len();
        let over = |l: u32, r: u32| -> Vec<u32> {
            (0..ne as u32)
                .filter(|&e| elements[e as usize].left == l && elements[e as usize].right == r)
                .collect()
        };
        // slots in the order (u, e) then (e, v)
        let mut slots = Vec::new();
        let mut choices = Vec::new();
        for u in 0..c.morphism_count() as u32 {
            for (e, el) in elements.iter().enumerate() {
                if c.cod(u) == el.left {
                    slots.push((true, u, e as u32));
                    choices.push(over(c.dom(u), el.right));
                }
            }
        }
        for (e, el) in elements.iter().enumerate() {
            for v in 0..d.morphism_count() as u32 {
                if d.dom(v) == el.right {
                    slots.push((false, e as u32, v));
                    choices.push(over(el.left, d.cod(v)));
                }
            }
        }
        let mut total: usize = 1;
        for ch in &choices {
            total = total.saturating_mul(ch.len());
        }
        if total > budget {
            return Err(Error::BudgetExceeded {
                frame: "profunctor action tables".into(),
                limit: budget,
            });
        }
        let mut out = Vec::new();
        for_each_choice(&choices, |values| {
            let mut left = std::collections::HashMap::new();
            let mut right = std::collections::HashMap::new();
            for (&(is_left, a, b), &val) in slots.iter().zip(values) {
                if is_left {
                    left.insert((a, b), val);
                } else {
                    right.insert((a, b), val);
                }
            }
            let p = Profunctor::from_fn_unchecked(
                c,
                d,
                elements.to_vec(),
                |u, e| left[&(u, e)],
                |e, v| right[&(e, v)],
            );
            if p.check(c, d).is_ok() {
                out.push(p);
            }
        });
        Ok(out)
    }
}

impl FinCategory {
    /// Morphisms with codomain `x`.
    pub fn hom_into(&self, x: u32) -> Vec<u32> {
        (0..self.morphisms.len() as u32)
            .filter(|&f| self.cod(f) == x)
            .collect()
    }

    /// Morphisms with domain `x`.
    pub fn hom_from(&self, x: u32) -> Vec<u32> {
        (0..self.morphisms.len() as u32)
            .filter(|&f| self.dom(f) == x)
            .collect()
    }
}
