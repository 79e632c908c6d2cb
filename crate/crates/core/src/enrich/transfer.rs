use super::{check_enriched, EnrichedCategory};
use crate::bim::{BimOracle, Bimodule, Monad};
use crate::error::{Error, Result};
use crate::fc::{Bounds, FcOracle, HorId, ObjectId, TwoCell};

/// An enriched category over `Bim(V)` together with the Bim oracle it lives
/// in.
#[derive(Debug)]
pub struct BimEnriched<V> {
    pub oracle: BimOracle<V>,
    pub category: EnrichedCategory,
}

/// [`enrich_to_bim_with`] at the default cell budget.
pub fn enrich_to_bim<V: FcOracle>(v: V, c: &EnrichedCategory) -> Result<BimEnriched<V>> {
    enrich_to_bim_with(v, c, Bounds::default().max_cells_per_frame)
}

/// Transfers `c` to `Bim(V)`: the end of `a` becomes the monad on
/// `hom(a, a)` with multiplication `comp(a, a, a)` and unit `id(a)`; the hom
/// `hom(a, b)` becomes a bimodule acted on by `comp(a, a, b)` and
/// `comp(a, b, b)`; composition and identity cells are kept.
///
/// The Bim oracle holds exactly these monads and bimodules, with repeated
/// ones merged.
pub fn enrich_to_bim_with<V: FcOracle>(
    v: V,
    c: &EnrichedCategory,
    budget: usize,
) -> Result<BimEnriched<V>> {
    let report = check_enriched(&v, c).map_err(|e| Error::SourceInvalid(e.to_string()))?;
    if !report.pass {
        let witness = report
            .violations
            .first()
            .map(|w| w.witness.clone())
            .unwrap_or_default();
        return Err(Error::SourceInvalid(witness));
    }
    let n = c.len();
    let monad_of = |a: usize| Monad {
        carrier: c.ends[a],
        endo: c.hom(a, a),
        mult: c.comp(a, a, a).clone(),
        unit: c.id(a).clone(),
    };
    let mut monads: Vec<Monad> = Vec::new();
    let mut ends = Vec::with_capacity(n);
    for a in 0..n {
        let m = monad_of(a);
        let x = match monads.iter().position(|o| o == &m) {
            Some(x) => x,
            None => {
                monads.push(m);
                monads.len() - 1
            }
        };
        ends.push(ObjectId(x as u32));
    }
    let mut bimodules: Vec<Bimodule> = Vec::new();
    let mut homs = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let bm = Bimodule {
                carrier: c.hom(a, b),
                source: monad_of(a),
                target: monad_of(b),
                act_src: c.comp(a, a, b).clone(),
                act_tgt: c.comp(a, b, b).clone(),
            };
            let h = match bimodules.iter().position(|o| o == &bm) {
                Some(h) => h,
                None => {
                    bimodules.push(bm);
                    bimodules.len() - 1
                }
            };
            homs.push(HorId(h as u32));
        }
    }
    let oracle = BimOracle::from_parts(v, budget, monads, bimodules)?;
    let mut out = EnrichedCategory {
        objects: c.objects.clone(),
        ends,
        homs,
        comp: Vec::with_capacity(n * n * n),
        ids: Vec::with_capacity(n),
    };
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                let frame = out.comp_frame(&oracle, a, b, d)?;
                out.comp
                    .push(TwoCell::new(c.comp(a, b, d).id.clone(), frame));
            }
        }
    }
    for a in 0..n {
        let frame = out.id_frame(&oracle, a)?;
        out.ids.push(TwoCell::new(c.id(a).id.clone(), frame));
    }
    Ok(BimEnriched {
        oracle,
        category: out,
    })
}
