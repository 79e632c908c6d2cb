//! Categories, functors and profunctors as monads, monad maps and bimodules
//! in the span model.
//!
//! A category `C` is encoded as the span `ob ← mor → ob` with legs domain
//! and codomain; a profunctor `P: C ⇸ D` as `ob C ← elements → ob D`. On
//! zigzags the multiplication sends `(x0, u, x1, w, x2)` to `w ∘ u`, the
//! source action sends `(x0, u, x1, e, x2)` to `e·u` and the target action
//! sends `(x0, e, x1, v, x2)` to `v·e`.

use super::structure::{check_monad, Bimodule, Monad, MonadMap};
use crate::category::{FinCategory, FinFunctor, Morphism, Profunctor};
use crate::error::{Error, Result};
use crate::fc::{FcOracle, Frame, HorId, ObjectId, Path, TwoCell};
use crate::instances::{SpanOracle, SpanUniverse};

/// Name of the set holding the objects of the category encoded as `name`.
pub fn object_set_name(name: &str) -> String {
    format!("{name}.ob")
}

/// Adds the object set and the underlying span of `c`. Returns the span
/// index.
pub fn encode_category(u: &mut SpanUniverse, name: &str, c: &FinCategory) -> usize {
    let ob = u.add_set(object_set_name(name), c.objects().iter().cloned());
    u.add_span(
        name,
        ob,
        ob,
        c.morphisms().iter().map(|m| m.name.clone()).collect(),
        c.morphisms().iter().map(|m| m.dom).collect(),
        c.morphisms().iter().map(|m| m.cod).collect(),
    )
}

/// Adds the object map of `f` as a function between the object sets of two
/// encoded categories.
pub fn encode_functor(
    u: &mut SpanUniverse,
    name: &str,
    f: &FinFunctor,
    src: &str,
    tgt: &str,
) -> Result<usize> {
    let dom = object_set(u, src)?;
    let cod = object_set(u, tgt)?;
    if f.objects.len() != u.sets[dom].len()
        || f.objects.iter().any(|&y| y as usize >= u.sets[cod].len())
    {
        return Err(Error::NotAFunctor(format!(
            "object map of {name} does not fit {src} and {tgt}"
        )));
    }
    Ok(u.add_function(name, dom, cod, f.objects.clone()))
}

/// Adds the span of elements of `p` between the object sets of two encoded
/// categories.
pub fn encode_profunctor(
    u: &mut SpanUniverse,
    name: &str,
    p: &Profunctor,
    src: &str,
    tgt: &str,
) -> Result<usize> {
    let s = object_set(u, src)?;
    let d = object_set(u, tgt)?;
    if p.elements()
        .iter()
        .any(|e| e.left as usize >= u.sets[s].len() || e.right as usize >= u.sets[d].len())
    {
        return Err(Error::NotAProfunctor(format!(
            "an element of {name} lies over a missing object"
        )));
    }
    Ok(u.add_span(
        name,
        s,
        d,
        p.elements().iter().map(|e| e.name.clone()).collect(),
        p.elements().iter().map(|e| e.left).collect(),
        p.elements().iter().map(|e| e.right).collect(),
    ))
}

fn object_set(u: &SpanUniverse, name: &str) -> Result<usize> {
    u.set_index(&object_set_name(name))
        .ok_or_else(|| Error::MalformedData(format!("no encoded category named {name}")))
}

fn encoded_span(v: &SpanOracle, name: &str) -> Result<(ObjectId, HorId)> {
    let t = v
        .horizontal(name)
        .ok_or_else(|| Error::MalformedData(format!("no span named {name}")))?;
    let (x, y) = v.hor_ends(t)?;
    if x != y {
        return Err(Error::MalformedData(format!("{name} is not an endo-span")));
    }
    Ok((x, t))
}

/// The monad of `c` on its encoded span `name`.
pub fn cat_to_monad(v: &SpanOracle, name: &str, c: &FinCategory) -> Result<Monad> {
    c.validate()?;
    let (x, t) = encoded_span(v, name)?;
    let span = v.span(t)?;
    let matches = span.apex.len() == c.morphism_count()
        && v.universe().sets[x.index()].len() == c.object_count()
        && c.morphisms()
            .iter()
            .enumerate()
            .all(|(i, m)| span.leg_l[i] == m.dom && span.leg_r[i] == m.cod);
    if !matches {
        return Err(Error::NotACategory(format!(
            "span {name} does not carry the morphisms of the category"
        )));
    }
    let one = v.id_vert(x)?;
    let mult = v.cell_from_fn(Frame::new(Path::new(x, vec![t, t]), one, one, t), |z| {
        c.compose(z[3], z[1])
    })?;
    let unit = v.cell_from_fn(Frame::new(Path::empty(x), one, one, t), |z| {
        Some(c.identity(z[0]))
    })?;
    Ok(Monad {
        carrier: x,
        endo: t,
        mult,
        unit,
    })
}

/// The category of a monad in the span model: objects are the carrier's
/// elements, morphisms the apex elements.
pub fn monad_to_cat(v: &SpanOracle, m: &Monad) -> Result<FinCategory> {
    let report = check_monad(v, m)?;
    if !report.pass {
        let witness = report
            .violations
            .first()
            .map(|w| w.witness.clone())
            .unwrap_or_default();
        return Err(Error::NotAMonad(witness));
    }
    let span = v.span(m.endo)?;
    let objects = v.universe().sets[m.carrier.index()].elements.clone();
    let morphisms = span
        .apex
        .iter()
        .enumerate()
        .map(|(i, a)| Morphism::new(a.clone(), span.leg_l[i], span.leg_r[i]))
        .collect();
    let identities = (0..objects.len() as u32)
        .map(|x| v.cell_value(&m.unit, &[x]))
        .collect::<Result<Vec<_>>>()?;
    let mut entries = Vec::new();
    for z in v.limit_tuples(&m.mult.frame.source)? {
        entries.push((z[3], z[1], v.cell_value(&m.mult, &z)?));
    }
    FinCategory::from_entries(objects, morphisms, identities, &entries)
}

/// The monad map of `f`, whose object map must be a vertical of `v`. Only
/// typing is checked here; functoriality is what
/// [`check_monad_map`](super::check_monad_map) decides.
pub fn functor_to_monad_map(
    v: &SpanOracle,
    f: &FinFunctor,
    src: &Monad,
    tgt: &Monad,
) -> Result<MonadMap> {
    let vert = v
        .vertical_by_table(src.carrier, tgt.carrier, &f.objects)
        .ok_or_else(|| {
            Error::NotAFunctor(format!(
                "object map {:?} is not a declared function {} -> {}",
                f.objects,
                v.object_label(src.carrier),
                v.object_label(tgt.carrier)
            ))
        })?;
    let frame = Frame::new(Path::single(src.carrier, src.endo), vert, vert, tgt.endo);
    let phi = v
        .cell_from_fn(frame, |z| f.morphisms.get(z[1] as usize).copied())
        .map_err(|e| Error::NotAFunctor(e.to_string()))?;
    Ok(MonadMap { vert, phi })
}

/// The bimodule of `p` on its encoded span `name`. Only typing is checked
/// here; the action laws are what [`check_bimodule`](super::check_bimodule)
/// decides.
pub fn profunctor_to_bimodule(
    v: &SpanOracle,
    p: &Profunctor,
    name: &str,
    src: &Monad,
    tgt: &Monad,
) -> Result<Bimodule> {
    let m = v
        .horizontal(name)
        .ok_or_else(|| Error::MalformedData(format!("no span named {name}")))?;
    if v.hor_ends(m)? != (src.carrier, tgt.carrier) {
        return Err(Error::NotAProfunctor(format!(
            "{name} does not run between the carriers"
        )));
    }
    let (_, y) = v.hor_ends(m)?;
    let one_x = v.id_vert(src.carrier)?;
    let one_y = v.id_vert(y)?;
    let not_pro = |e: Error| Error::NotAProfunctor(e.to_string());
    let act_src = v
        .cell_from_fn(
            Frame::new(Path::new(src.carrier, vec![src.endo, m]), one_x, one_y, m),
            |z| p.left(z[1], z[3]),
        )
        .map_err(not_pro)?;
    let act_tgt = v
        .cell_from_fn(
            Frame::new(Path::new(src.carrier, vec![m, tgt.endo]), one_x, one_y, m),
            |z| p.right(z[1], z[3]),
        )
        .map_err(not_pro)?;
    Ok(Bimodule {
        carrier: m,
        source: src.clone(),
        target: tgt.clone(),
        act_src,
        act_tgt,
    })
}

/// Reads back the natural family of a Bim 2-cell: its value on each zigzag
/// of composable elements.
pub fn cell_family(v: &SpanOracle, cell: &TwoCell) -> Result<Vec<(Vec<u32>, u32)>> {
    v.limit_tuples(&cell.frame.source)?
        .into_iter()
        .map(|z| {
            let value = v.cell_value(cell, &z)?;
            Ok((z, value))
        })
        .collect()
}
