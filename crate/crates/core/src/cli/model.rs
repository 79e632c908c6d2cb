//! Turning file bodies into library structures.

use std::collections::HashMap;

use super::format::{BimoduleFile, EnrichedFile, MonadTables, MonoidalBase};
use crate::bim::{Bimodule, Monad};
use crate::enrich::{classical_enriched_adapter, EnrichedCategory};
use crate::error::{Error, Result};
use crate::fc::{FcOracle, Frame, Path};
use crate::instances::{monoidal_fc, FinSetProduct, SpanOracle, StrictMonoidalPresentation};

fn table(entries: &[(u32, u32, u32)], what: &str) -> Result<HashMap<(u32, u32), u32>> {
    let mut map = HashMap::new();
    for &(a, b, c) in entries {
        if map.insert((a, b), c).is_some_and(|old| old != c) {
            return Err(Error::MalformedData(format!(
                "{what} entry ({a}, {b}) is given twice"
            )));
        }
    }
    Ok(map)
}

fn missing(what: &str, z: &[u32]) -> Error {
    Error::MalformedData(format!("{what} has no entry for zigzag {z:?}"))
}

/// The monad in `v` given by category tables on a named endo-span.
pub fn monad(v: &SpanOracle, t: &MonadTables) -> Result<Monad> {
    let endo = v
        .horizontal(&t.span)
        .ok_or_else(|| Error::MalformedData(format!("no span named {}", t.span)))?;
    let (x, y) = v.hor_ends(endo)?;
    if x != y {
        return Err(Error::MalformedData(format!(
            "{} is not an endo-span",
            t.span
        )));
    }
    let one = v.id_vert(x)?;
    let compose = table(&t.compose, "compose")?;
    let mut gap = None;
    let mult = v.cell_from_fn(
        Frame::new(Path::new(x, vec![endo, endo]), one, one, endo),
        |z| {
            let out = compose.get(&(z[3], z[1])).copied();
            if out.is_none() {
                gap.get_or_insert_with(|| z.to_vec());
            }
            out
        },
    );
    if let Some(z) = gap {
        return Err(missing("compose", &z));
    }
    let unit = v.cell_from_fn(Frame::new(Path::empty(x), one, one, endo), |z| {
        t.identities.get(z[0] as usize).copied()
    })?;
    Ok(Monad {
        carrier: x,
        endo,
        mult: mult?,
        unit,
    })
}

pub fn bimodule(v: &SpanOracle, b: &BimoduleFile) -> Result<(Bimodule, Monad, Monad)> {
    let src = monad(v, &b.source)?;
    let tgt = monad(v, &b.target)?;
    let m = v
        .horizontal(&b.span)
        .ok_or_else(|| Error::MalformedData(format!("no span named {}", b.span)))?;
    if v.hor_ends(m)? != (src.carrier, tgt.carrier) {
        return Err(Error::MalformedData(format!(
            "{} does not run between the carriers",
            b.span
        )));
    }
    let one_x = v.id_vert(src.carrier)?;
    let one_y = v.id_vert(tgt.carrier)?;
    let left = table(&b.act_src, "act_src")?;
    let right = table(&b.act_tgt, "act_tgt")?;
    let act = |path: Vec<_>, map: &HashMap<(u32, u32), u32>, what: &str| {
        let mut gap = None;
        let cell = v.cell_from_fn(
            Frame::new(Path::new(src.carrier, path), one_x, one_y, m),
            |z| {
                let out = map.get(&(z[1], z[3])).copied();
                if out.is_none() {
                    gap.get_or_insert_with(|| z.to_vec());
                }
                out
            },
        );
        match gap {
            Some(z) => Err(missing(what, &z)),
            None => cell,
        }
    };
    let act_src = act(vec![src.endo, m], &left, "act_src")?;
    let act_tgt = act(vec![m, tgt.endo], &right, "act_tgt")?;
    let bm = Bimodule {
        carrier: m,
        source: src.clone(),
        target: tgt.clone(),
        act_src,
        act_tgt,
    };
    Ok((bm, src, tgt))
}

/// An enriched file made concrete. `base_law` holds the reason the base
/// presentation fails its laws, if it does.
pub struct EnrichedModel {
    pub oracle: Box<dyn FcOracle>,
    pub category: EnrichedCategory,
    pub base_law: Option<Error>,
}

pub fn enriched(e: &EnrichedFile) -> Result<EnrichedModel> {
    match &e.base {
        MonoidalBase::Presentation(t) => {
            let p = StrictMonoidalPresentation::new_unchecked(t.clone())?;
            let base_law = p.validate().err();
            let v = monoidal_fc(p);
            let category =
                classical_enriched_adapter(&v, e.objects.clone(), &e.homs, &e.comp, &e.ids)?;
            Ok(EnrichedModel {
                oracle: Box::new(v),
                category,
                base_law,
            })
        }
        MonoidalBase::FinsetProduct { exposed } => {
            let v = monoidal_fc(FinSetProduct::new(exposed.clone()));
            let category =
                classical_enriched_adapter(&v, e.objects.clone(), &e.homs, &e.comp, &e.ids)?;
            Ok(EnrichedModel {
                oracle: Box::new(v),
                category,
                base_law: None,
            })
        }
    }
}
