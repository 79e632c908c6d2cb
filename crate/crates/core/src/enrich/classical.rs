use super::EnrichedCategory;
use crate::error::{Error, Result};
use crate::fc::{CellId, ObjectId};
use crate::instances::{MonoidalCategory, MonoidalOracle};

/// An enriched category over a monoidal category given classically: hom
/// objects `homs[a * n + b]`, composition morphisms
/// `comp[(a * n + b) * n + c]: hom(b, c) ⊗ hom(a, b) -> hom(a, c)` and unit
/// morphisms `ids[a]: I -> hom(a, a)`. Every end is the single object.
pub fn classical_enriched_adapter<M: MonoidalCategory>(
    v: &MonoidalOracle<M>,
    objects: Vec<String>,
    homs: &[u32],
    comp: &[CellId],
    ids: &[CellId],
) -> Result<EnrichedCategory> {
    let n = objects.len();
    if homs.len() != n * n || comp.len() != n * n * n || ids.len() != n {
        return Err(Error::MalformedData(format!(
            "{n} objects need {} hom objects, {} composition and {n} unit morphisms",
            n * n,
            n * n * n
        )));
    }
    let homs = homs
        .iter()
        .map(|&o| {
            v.horizontal(o)
                .ok_or_else(|| Error::MalformedData(format!("hom object {o} is not exposed")))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut c = EnrichedCategory {
        objects,
        ends: vec![ObjectId(0); n],
        homs,
        comp: Vec::with_capacity(n * n * n),
        ids: Vec::with_capacity(n),
    };
    let wrap = |e: Error| Error::MalformedData(e.to_string());
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                let frame = c.comp_frame(v, a, b, d)?;
                let cell = v
                    .cell(frame, comp[(a * n + b) * n + d].clone())
                    .map_err(wrap)?;
                c.comp.push(cell);
            }
        }
    }
    for (a, id) in ids.iter().enumerate() {
        let frame = c.id_frame(v, a)?;
        c.ids.push(v.cell(frame, id.clone()).map_err(wrap)?);
    }
    Ok(c)
}
