//! Example structure files.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::format::{
    BimoduleFile, EnrichedFile, MonadFile, MonadTables, MonoidalBase, Structure, SubsetFamilyFile,
};
use crate::bim::span_model::{encode_category, encode_profunctor};
use crate::category::{FinCategory, Profunctor};
use crate::enrich::Subset;
use crate::error::{Error, Result};
use crate::fc::CellId;
use crate::instances::{
    FinSet, MonoidalTables, SpanUniverse, StrictDoublePresentation, StrictMonoidalPresentation,
};

pub const DEMOS: &[&str] = &[
    "u1",
    "mutated-u1",
    "malformed",
    "v2",
    "terminal",
    "arrow",
    "hom-2",
    "bim-span",
    "subsets",
    "empty-subsets",
    "random-subsets",
    "v2-preorder",
    "z2-monoid",
    "corrupted-monoid",
];

pub fn u1() -> SpanUniverse {
    let mut u = SpanUniverse::new();
    u.add_set("X", ["x1", "x2"]);
    u.add_set("Y", ["y1", "y2"]);
    u.add_set("Z", ["z1"]);
    u.add_function("swap", 0, 0, vec![1, 0]);
    u.add_span(
        "A",
        0,
        1,
        vec!["a1".into(), "a2".into(), "a3".into()],
        vec![0, 0, 1],
        vec![0, 1, 1],
    );
    u.add_span(
        "B",
        1,
        2,
        vec!["b1".into(), "b2".into()],
        vec![1, 1],
        vec![0, 0],
    );
    u
}

/// Category tables of `c` on the span `span`.
pub fn monad_tables(span: &str, c: &FinCategory) -> MonadTables {
    MonadTables {
        span: span.into(),
        identities: c.identities().to_vec(),
        compose: c.entries(),
    }
}

/// `(u, e, e·u)` and `(e, v, v·e)` for every defined action.
pub fn action_tables(
    p: &Profunctor,
    c: &FinCategory,
    d: &FinCategory,
) -> (Vec<(u32, u32, u32)>, Vec<(u32, u32, u32)>) {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for e in 0..p.elements().len() as u32 {
        for u in 0..c.morphism_count() as u32 {
            if let Some(x) = p.left(u, e) {
                left.push((u, e, x));
            }
        }
        for v in 0..d.morphism_count() as u32 {
            if let Some(x) = p.right(e, v) {
                right.push((e, v, x));
            }
        }
    }
    (left, right)
}

fn preorder_file(rel: [[bool; 2]; 2]) -> EnrichedFile {
    let t = StrictMonoidalPresentation::v2().tables();
    let hom = |a: usize, b: usize| rel[a][b] as u32;
    let leq = |x: u32, y: u32| {
        t.morphisms
            .iter()
            .position(|m| m.dom == x && m.cod == y)
            .map(|i| CellId::atom(i as u32))
    };
    let mut comp = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                let src = t.tensor[hom(b, c) as usize][hom(a, b) as usize];
                comp.push(leq(src, hom(a, c)).expect("the relation is transitive"));
            }
        }
    }
    let ids = (0..2)
        .map(|a| leq(t.unit, hom(a, a)).expect("the relation is reflexive"))
        .collect();
    EnrichedFile {
        base: MonoidalBase::Presentation(t.clone()),
        objects: vec!["p".into(), "q".into()],
        homs: vec![hom(0, 0), hom(0, 1), hom(1, 0), hom(1, 1)],
        comp,
        ids,
    }
}

fn monoid_file(table: Vec<u32>, unit: u32) -> EnrichedFile {
    EnrichedFile {
        base: MonoidalBase::FinsetProduct { exposed: vec![2] },
        objects: vec!["*".into()],
        homs: vec![2],
        comp: vec![CellId::from_table(table)],
        ids: vec![CellId::from_table(vec![unit])],
    }
}

/// A random family of at most 4 subsets of a set with at most 6 elements.
pub fn random_subsets(seed: u64) -> SubsetFamilyFile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(0..=6);
    let set = FinSet::new("S", (1..=n).map(|i| i.to_string()));
    let k = rng.gen_range(0..=4);
    let subsets = (1..=k)
        .map(|i| {
            let elements: Vec<String> = set
                .elements
                .iter()
                .filter(|_| rng.gen_bool(0.5))
                .cloned()
                .collect();
            Subset::new(format!("C{i}"), elements)
        })
        .collect();
    SubsetFamilyFile { set, subsets }
}

fn v2() -> MonoidalTables {
    StrictMonoidalPresentation::v2().tables()
}

/// The demo structure called `name`. Only `random-subsets` uses `seed`.
pub fn demo(name: &str, seed: u64) -> Result<Structure> {
    Ok(match name {
        "u1" => Structure::SpanUniverse(u1()),
        "mutated-u1" => {
            // A's left leg sends a1 and a2 to x1, so U1 is not a universe of
            // partial bijections
            let mut u = u1();
            u.restrict_to_partial_bijections = true;
            Structure::SpanUniverse(u)
        }
        "malformed" => {
            let mut u = u1();
            u.spans[1].leg_r[0] = 5;
            Structure::SpanUniverse(u)
        }
        "v2" => Structure::Monoidal(v2()),
        "terminal" => Structure::Double(StrictDoublePresentation::terminal().tables().clone()),
        "arrow" => {
            let c = FinCategory::arrow();
            let mut u = SpanUniverse::new();
            encode_category(&mut u, "2", &c);
            Structure::Monad(MonadFile {
                universe: u,
                monad: monad_tables("2", &c),
            })
        }
        "hom-2" => {
            let c = FinCategory::arrow();
            let p = Profunctor::hom(&c);
            let mut u = SpanUniverse::new();
            encode_category(&mut u, "2", &c);
            encode_profunctor(&mut u, "hom", &p, "2", "2")?;
            let (act_src, act_tgt) = action_tables(&p, &c, &c);
            Structure::Bimodule(BimoduleFile {
                universe: u,
                source: monad_tables("2", &c),
                target: monad_tables("2", &c),
                span: "hom".into(),
                act_src,
                act_tgt,
            })
        }
        "bim-span" => {
            let mut u = SpanUniverse::new();
            encode_category(&mut u, "2", &FinCategory::arrow());
            let poset = FinCategory::from_preorder(["a", "b", "c"], |x, y| {
                x == y || (x == 0 && y == 2) || (x == 1 && y == 2)
            })?;
            encode_category(&mut u, "V", &poset);
            Structure::SpanUniverse(u)
        }
        "subsets" => Structure::SubsetFamily(SubsetFamilyFile {
            set: FinSet::new("S", ["1", "2", "3"]),
            subsets: vec![Subset::new("C1", ["1", "2"]), Subset::new("C2", ["2", "3"])],
        }),
        "empty-subsets" => Structure::SubsetFamily(SubsetFamilyFile {
            set: FinSet::new("S", ["1", "2", "3"]),
            subsets: Vec::new(),
        }),
        "random-subsets" => Structure::SubsetFamily(random_subsets(seed)),
        "v2-preorder" => Structure::Enriched(preorder_file([[true, true], [false, true]])),
        "z2-monoid" => Structure::Enriched(monoid_file(vec![0, 1, 1, 0], 0)),
        "corrupted-monoid" => Structure::Enriched(monoid_file(vec![0, 1, 0, 0], 0)),
        other => return Err(Error::UnknownDemo(other.into())),
    })
}
