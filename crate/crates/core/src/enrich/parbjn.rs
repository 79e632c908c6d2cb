use serde::{Deserialize, Serialize};

use super::EnrichedCategory;
use crate::error::{Error, Result};
use crate::fc::{HorId, ObjectId};
use crate::instances::{parbjn_check_and_restrict, FinSet, SpanOracle, SpanUniverse};

/// A named subset, listed by element names of the ambient set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subset {
    pub name: String,
    pub elements: Vec<String>,
}

impl Subset {
    pub fn new<S: Into<String>>(
        name: impl Into<String>,
        elements: impl IntoIterator<Item = S>,
    ) -> Self {
        Subset {
            name: name.into(),
            elements: elements.into_iter().map(Into::into).collect(),
        }
    }
}

/// The category enriched in partial bijections given by a family of subsets
/// `C_i ⊆ S`: ends `C_i`, `hom(i, j) = C_i ↢ C_i ∩ C_j ↣ C_j`, composition
/// the inclusion `C_i ∩ C_j ∩ C_k ⊆ C_i ∩ C_k` and identities `C_i ⊆ C_i ∩ C_i`.
///
/// Sets are named after the subsets and `hom(i, j)` spans `i->j`; elements
/// keep their names from `S` and are listed in the order of `S`.
pub fn parbjn_from_subsets(
    s: &FinSet,
    family: &[Subset],
) -> Result<(SpanOracle, EnrichedCategory)> {
    let mut members = Vec::with_capacity(family.len());
    for c in family {
        let mut mask = vec![false; s.len()];
        for e in &c.elements {
            let p = s.position(e).ok_or_else(|| {
                Error::NotASubset(format!("{e} is in {} but not in {}", c.name, s.name))
            })?;
            if std::mem::replace(&mut mask[p as usize], true) {
                return Err(Error::NotASubset(format!(
                    "{e} is listed twice in {}",
                    c.name
                )));
            }
        }
        members.push(mask);
    }
    let n = family.len();
    // positions[i][x]: index of element x of S inside C_i
    let positions: Vec<Vec<Option<u32>>> = members
        .iter()
        .map(|mask| {
            let mut next = 0;
            mask.iter()
                .map(|&inside| {
                    inside.then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        })
        .collect();
    let mut u = SpanUniverse::new();
    for (c, mask) in family.iter().zip(&members) {
        let elements = (0..s.len())
            .filter(|&x| mask[x])
            .map(|x| s.elements[x].clone());
        u.add_set(c.name.clone(), elements);
    }
    // meets[i * n + j]: elements of S in C_i ∩ C_j, in S order
    let mut meets = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let common: Vec<usize> = (0..s.len())
                .filter(|&x| members[i][x] && members[j][x])
                .collect();
            u.add_span(
                format!("{}->{}", family[i].name, family[j].name),
                i,
                j,
                common.iter().map(|&x| s.elements[x].clone()).collect(),
                common.iter().map(|&x| positions[i][x].unwrap()).collect(),
                common.iter().map(|&x| positions[j][x].unwrap()).collect(),
            );
            meets.push(common);
        }
    }
    let v = parbjn_check_and_restrict(u)?;
    let mut c = EnrichedCategory {
        objects: family.iter().map(|c| c.name.clone()).collect(),
        ends: (0..n as u32).map(ObjectId).collect(),
        homs: (0..(n * n) as u32).map(HorId).collect(),
        comp: Vec::with_capacity(n * n * n),
        ids: Vec::with_capacity(n),
    };
    // element of S behind an element of C_i
    let ambient: Vec<Vec<usize>> = members
        .iter()
        .map(|mask| (0..s.len()).filter(|&x| mask[x]).collect())
        .collect();
    let index_in = |meet: &[usize], x: usize| meet.iter().position(|&y| y == x).map(|p| p as u32);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let frame = c.comp_frame(&v, i, j, k)?;
                let meet = &meets[i * n + k];
                let cell = v.cell_from_fn(frame, |z| index_in(meet, ambient[i][z[0] as usize]))?;
                c.comp.push(cell);
            }
        }
    }
    for i in 0..n {
        let frame = c.id_frame(&v, i)?;
        let meet = &meets[i * n + i];
        c.ids
            .push(v.cell_from_fn(frame, |z| index_in(meet, ambient[i][z[0] as usize]))?);
    }
    Ok((v, c))
}
