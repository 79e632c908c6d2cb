//! Categories enriched in an fc-multicategory.
mod classical;
mod parbjn;
mod transfer;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fc::{
    compose_with_identities, describe_frame, id_cell, FcOracle, Frame, HorId, LawReport, ObjectId,
    Path, TwoCell,
};

pub use classical::classical_enriched_adapter;
pub use parbjn::{parbjn_from_subsets, Subset};
pub use transfer::{enrich_to_bim, enrich_to_bim_with, BimEnriched};

pub mod laws {
    pub const ASSOC: &str = "enriched-assoc";
    pub const LEFT_UNIT: &str = "enriched-left-unit";
    pub const RIGHT_UNIT: &str = "enriched-right-unit";
}

/// A category enriched in `V`: objects `a` with end-objects `ends[a]`,
/// hom 1-cells `hom(a, b): ends[a] ⇸ ends[b]`, composition cells
/// `(hom(a, b), hom(b, c)) ⇒ hom(a, c)` and identity cells
/// `() ⇒ hom(a, a)`, all with identity verticals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnrichedCategory {
    pub objects: Vec<String>,
    pub ends: Vec<ObjectId>,
    /// `homs[a * n + b]`
    pub homs: Vec<HorId>,
    /// `comp[(a * n + b) * n + c]`
    pub comp: Vec<TwoCell>,
    pub ids: Vec<TwoCell>,
}

impl EnrichedCategory {
    pub fn empty() -> Self {
        EnrichedCategory {
            objects: Vec::new(),
            ends: Vec::new(),
            homs: Vec::new(),
            comp: Vec::new(),
            ids: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn hom(&self, a: usize, b: usize) -> HorId {
        self.homs[a * self.len() + b]
    }

    pub fn comp(&self, a: usize, b: usize, c: usize) -> &TwoCell {
        let n = self.len();
        &self.comp[(a * n + b) * n + c]
    }

    pub fn comp_mut(&mut self, a: usize, b: usize, c: usize) -> &mut TwoCell {
        let n = self.len();
        &mut self.comp[(a * n + b) * n + c]
    }

    pub fn id(&self, a: usize) -> &TwoCell {
        &self.ids[a]
    }

    /// The frame `comp(a, b, c)` must have.
    pub fn comp_frame(
        &self,
        v: &(impl FcOracle + ?Sized),
        a: usize,
        b: usize,
        c: usize,
    ) -> Result<Frame> {
        Ok(Frame::new(
            Path::new(self.ends[a], vec![self.hom(a, b), self.hom(b, c)]),
            v.id_vert(self.ends[a])?,
            v.id_vert(self.ends[c])?,
            self.hom(a, c),
        ))
    }

    /// The frame `id(a)` must have.
    pub fn id_frame(&self, v: &(impl FcOracle + ?Sized), a: usize) -> Result<Frame> {
        let one = v.id_vert(self.ends[a])?;
        Ok(Frame::new(
            Path::empty(self.ends[a]),
            one,
            one,
            self.hom(a, a),
        ))
    }

    /// Every enriched structure on the given objects, ends and homs: all
    /// choices of composition and identity cells that pass the laws.
    /// `budget` bounds the number of combinations tried.
    pub fn search(
        v: &(impl FcOracle + ?Sized),
        objects: Vec<String>,
        ends: Vec<ObjectId>,
        homs: Vec<HorId>,
        budget: usize,
    ) -> Result<Vec<EnrichedCategory>> {
        let n = objects.len();
        let mut shell = EnrichedCategory {
            objects,
            ends,
            homs,
            comp: Vec::new(),
            ids: Vec::new(),
        };
        shape_check(&shell)?;
        let mut frames = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    frames.push(shell.comp_frame(v, a, b, c)?);
                }
            }
        }
        for a in 0..n {
            frames.push(shell.id_frame(v, a)?);
        }
        let mut choices = Vec::with_capacity(frames.len());
        let mut total: usize = 1;
        for frame in &frames {
            let ids = v.cells_within(frame, budget)?;
            total = total.saturating_mul(ids.len());
            choices.push(ids);
        }
        if total == 0 {
            return Ok(Vec::new());
        }
        if total > budget {
            return Err(Error::BudgetExceeded {
                frame: format!("{total} enriched structures on {n} objects"),
                limit: budget,
            });
        }
        let mut out = Vec::new();
        let mut digits = vec![0u32; frames.len()];
        loop {
            let cells: Vec<TwoCell> = frames
                .iter()
                .zip(&choices)
                .zip(&digits)
                .map(|((f, ids), &d)| TwoCell::new(ids[d as usize].clone(), f.clone()))
                .collect();
            shell.comp = cells[..n * n * n].to_vec();
            shell.ids = cells[n * n * n..].to_vec();
            if check_enriched(v, &shell)?.pass {
                out.push(shell.clone());
            }
            let mut k = digits.len();
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                digits[k] += 1;
                if (digits[k] as usize) < choices[k].len() {
                    break;
                }
                digits[k] = 0;
            }
        }
    }
}

fn shape_check(c: &EnrichedCategory) -> Result<()> {
    let n = c.len();
    if c.ends.len() != n || c.homs.len() != n * n {
        return Err(Error::MalformedData(format!(
            "{n} objects need {n} ends and {} homs, found {} and {}",
            n * n,
            c.ends.len(),
            c.homs.len()
        )));
    }
    Ok(())
}

fn conformance(v: &(impl FcOracle + ?Sized), c: &EnrichedCategory) -> Result<()> {
    shape_check(c)?;
    let n = c.len();
    if c.comp.len() != n * n * n || c.ids.len() != n {
        return Err(Error::MalformedData(format!(
            "{n} objects need {} composition and {n} identity cells",
            n * n * n
        )));
    }
    let name = |a: usize| c.objects[a].as_str();
    for a in 0..n {
        for b in 0..n {
            if v.hor_ends(c.hom(a, b))? != (c.ends[a], c.ends[b]) {
                return Err(Error::FrameError(format!(
                    "hom({}, {}) does not run between the ends",
                    name(a),
                    name(b)
                )));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                let expected = c.comp_frame(v, a, b, d)?;
                let cell = c.comp(a, b, d);
                if cell.frame != expected || !v.has_cell(&expected, &cell.id)? {
                    return Err(Error::FrameError(format!(
                        "comp({}, {}, {}) is not a cell of {}",
                        name(a),
                        name(b),
                        name(d),
                        describe_frame(v, &expected)
                    )));
                }
            }
        }
        let expected = c.id_frame(v, a)?;
        let cell = c.id(a);
        if cell.frame != expected || !v.has_cell(&expected, &cell.id)? {
            return Err(Error::FrameError(format!(
                "id({}) is not a cell of {}",
                name(a),
                describe_frame(v, &expected)
            )));
        }
    }
    Ok(())
}

/// Frame conformance, then associativity for every `(a, b, c, d)` and both
/// unit laws for every `(a, b)`.
pub fn check_enriched(v: &(impl FcOracle + ?Sized), c: &EnrichedCategory) -> Result<LawReport> {
    conformance(v, c)?;
    let n = c.len();
    let name = |a: usize| c.objects[a].as_str();
    let mut report = LawReport::new();
    for a in 0..n {
        for b in 0..n {
            let one = id_cell(v, c.hom(a, b))?;
            let left =
                compose_with_identities(v, c.comp(a, a, b), &[c.id(a).clone(), one.clone()])?;
            report.expect(laws::LEFT_UNIT, left == one, || {
                format!(
                    "comp({0}, {0}, {1}) ∘ (id({0}), 1) is not the identity",
                    name(a),
                    name(b)
                )
            });
            let right =
                compose_with_identities(v, c.comp(a, b, b), &[one.clone(), c.id(b).clone()])?;
            report.expect(laws::RIGHT_UNIT, right == one, || {
                format!(
                    "comp({0}, {1}, {1}) ∘ (1, id({1})) is not the identity",
                    name(a),
                    name(b)
                )
            });
            for d in 0..n {
                for e in 0..n {
                    let lhs = compose_with_identities(
                        v,
                        c.comp(a, d, e),
                        &[c.comp(a, b, d).clone(), id_cell(v, c.hom(d, e))?],
                    )?;
                    let rhs = compose_with_identities(
                        v,
                        c.comp(a, b, e),
                        &[one.clone(), c.comp(b, d, e).clone()],
                    )?;
                    report.expect(laws::ASSOC, lhs == rhs, || {
                        format!(
                            "associativity fails at ({}, {}, {}, {})",
                            name(a),
                            name(b),
                            name(d),
                            name(e)
                        )
                    });
                }
            }
        }
    }
    Ok(report)
}
