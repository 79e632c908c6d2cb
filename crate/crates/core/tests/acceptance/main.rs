//! Acceptance suite. Prints one line per criterion and exits non-zero if any
//! criterion fails.

mod gen;
mod oracles;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use fcmt::bim::span_model::{
    cat_to_monad, cell_family, encode_category, functor_to_monad_map, profunctor_to_bimodule,
};
use fcmt::bim::{check_bimodule, check_monad, enumerate_monads, BimOracle, Bimodule, Monad};
use fcmt::category::{FinCategory, FinFunctor, ProElement, Profunctor};
use fcmt::cli::demo;
use fcmt::enrich::{
    check_enriched, classical_enriched_adapter, enrich_to_bim, parbjn_from_subsets,
    EnrichedCategory, Subset,
};
use fcmt::error::Error;
use fcmt::fc::{
    check_fc_laws_with, laws, Bounds, CellId, Execution, FcOracle, Frame, HorId, LawReport,
    ObjectId, Path, TwoCell, VertId,
};
use fcmt::instances::{
    monoidal_fc, path_limit, span_fc, FinSet, FinSetProduct, MonoidalOracle, SpanOracle,
    SpanUniverse, StrictMonoidalPresentation,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gen::GraphShape;
use oracles::Pro;

const SEED: u64 = 2024;

const C1_BOUNDS: (usize, usize, usize) = (3, 2, 10_000);
const C1_MIN_UNIVERSES: usize = 50;
const C1_MAX_SECONDS: f64 = 60.0;

const C2_MIN_MUTATIONS: usize = 20;

const C3_RANDOM_UNIVERSES: u64 = 20;
const C3_MAX_PATH: usize = 3;

const C4_MAX_OBJECTS: u32 = 3;
const C4_MAX_MORPHISMS: u32 = 6;
const C4_CELL_BUDGET: usize = 100_000;

const C5_MAX_SET: u32 = 4;
const C5_TERNARY_MAX_SET: u32 = 3;
const C5_RANDOM_FAMILIES: u64 = 200;

const C6_MONOID_BUDGET: usize = 100_000;
const C6_PREORDERS: [usize; 4] = [1, 1, 4, 29];
const C6_MONOIDS: [usize; 4] = [0, 1, 4, 33];

const DEMOS: [&str; 14] = [
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

static CLOSURE_EVENTS: AtomicUsize = AtomicUsize::new(0);

type Outcome = Result<String, String>;

/// Records closure failures before handing the result on.
fn note<T>(r: fcmt::Result<T>) -> fcmt::Result<T> {
    if let Err(Error::ClosureViolation(_)) = &r {
        CLOSURE_EVENTS.fetch_add(1, Ordering::SeqCst);
    }
    r
}

fn note_report(r: &LawReport) {
    let n = r
        .violations
        .iter()
        .filter(|v| v.law == laws::CLOSURE)
        .count();
    CLOSURE_EVENTS.fetch_add(n, Ordering::SeqCst);
}

fn ok<T>(r: fcmt::Result<T>, what: impl FnOnce() -> String) -> Result<T, String> {
    note(r).map_err(|e| format!("{}: {e}", what()))
}

fn first_violation(r: &LawReport) -> String {
    r.violations
        .first()
        .map(|v| format!("{} ({})", v.law, v.witness))
        .unwrap_or_default()
}

#[derive(Default)]
struct Suites {
    c1_reports: Vec<String>,
    parbjn: Vec<(String, SpanOracle, EnrichedCategory)>,
    v2: Vec<EnrichedCategory>,
    monoids: Vec<(u32, EnrichedCategory)>,
}

// ---------------------------------------------------------------- criterion 1

fn c1_bounds() -> Bounds {
    Bounds::new(C1_BOUNDS.0, C1_BOUNDS.1, C1_BOUNDS.2)
}

fn c1_reports(exec: Execution) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    for (name, u) in gen::soundness_universes() {
        let v = ok(span_fc(u), || name.clone())?;
        let r = ok(check_fc_laws_with(&v, &c1_bounds(), exec), || name.clone())?;
        note_report(&r);
        if !r.pass {
            return Err(format!("{name}: {}", first_violation(&r)));
        }
        out.push(serde_json::to_string(&r).unwrap());
    }
    Ok(out)
}

fn criterion_1(s: &mut Suites) -> Outcome {
    let t = Instant::now();
    let reports = c1_reports(Execution::Sequential)?;
    let secs = t.elapsed().as_secs_f64();
    let instances: u64 = reports
        .iter()
        .map(|r| {
            serde_json::from_str::<LawReport>(r)
                .unwrap()
                .checked_total()
        })
        .sum();
    let n = reports.len();
    s.c1_reports = reports;
    let detail = format!(
        "{n} universes (need >= {C1_MIN_UNIVERSES}), {instances} law instances, {secs:.1} s (limit {C1_MAX_SECONDS} s), bounds {C1_BOUNDS:?}"
    );
    if n < C1_MIN_UNIVERSES || secs >= C1_MAX_SECONDS {
        return Err(detail);
    }
    Ok(detail)
}

// ---------------------------------------------------------------- criterion 2

#[derive(Default)]
struct Kills {
    genuine: usize,
    killed: usize,
    neutral: usize,
    failures: Vec<String>,
}

impl Kills {
    fn record(&mut self, what: &str, broken: bool, report: &LawReport) {
        let witnessed = !report.pass && report.violations.iter().all(|v| !v.witness.is_empty());
        if broken {
            self.genuine += 1;
            if witnessed {
                self.killed += 1;
            } else {
                self.failures.push(format!("{what} survived"));
            }
        } else {
            self.neutral += 1;
            if !report.pass {
                self.failures.push(format!(
                    "{what} is harmless but was flagged: {}",
                    first_violation(report)
                ));
            }
        }
    }
}

fn category(name: &str) -> FinCategory {
    if name == "Z3" {
        return FinCategory::from_monoid(["0", "1", "2"], &[0, 1, 2, 1, 2, 0, 2, 0, 1], 0).unwrap();
    }
    gen::named_categories()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, c)| c)
        .unwrap_or_else(|| panic!("no category {name}"))
}

fn encoded(name: &str, c: &FinCategory) -> Result<(SpanOracle, Monad), String> {
    let mut u = SpanUniverse::new();
    encode_category(&mut u, name, c);
    let v = ok(span_fc(u), || name.to_string())?;
    let m = ok(cat_to_monad(&v, name, c), || name.to_string())?;
    Ok((v, m))
}

fn table_of(v: &SpanOracle, cell: &TwoCell) -> Result<(Vec<Vec<u32>>, Vec<u32>), String> {
    let tuples = ok(v.limit_tuples(&cell.frame.source), || "limit".into())?;
    let table = cell.id.as_slice().to_vec();
    for (z, &x) in tuples.iter().zip(&table) {
        if ok(v.cell_value(cell, z), || "cell value".into())? != x {
            return Err(format!(
                "cell table is not laid out in limit order at {z:?}"
            ));
        }
    }
    Ok((tuples, table))
}

fn mutate(cell: &TwoCell, k: usize, value: u32) -> TwoCell {
    let mut t = cell.id.as_slice().to_vec();
    t[k] = value;
    TwoCell::new(CellId::from_table(t), cell.frame.clone())
}

fn monad_mutations(kills: &mut Kills) -> Result<(), String> {
    for name in ["Z2", "L2", "Z3", "par", "iso"] {
        let c = category(name);
        let (v, m) = encoded(name, &c)?;
        let clean = ok(check_monad(&v, &m), || name.into())?;
        kills.record(&format!("{name} unmutated"), false, &clean);
        let (tuples, mult) = table_of(&v, &m.mult)?;
        let (_, unit) = table_of(&v, &m.unit)?;
        let entries = |t: &[u32]| -> Vec<(u32, u32, u32)> {
            tuples
                .iter()
                .zip(t)
                .map(|(z, &x)| (z[3], z[1], x))
                .collect()
        };
        for (k, z) in tuples.iter().enumerate() {
            for alt in c.hom(z[0], z[4]).into_iter().filter(|&a| a != mult[k]) {
                let mutated = Monad {
                    mult: mutate(&m.mult, k, alt),
                    ..m.clone()
                };
                let report = ok(check_monad(&v, &mutated), || name.into())?;
                let broken = !oracles::is_category(&c, &unit, &entries(mutated.mult.id.as_slice()));
                kills.record(&format!("{name} mult[{k}] = {alt}"), broken, &report);
            }
        }
        for x in 0..c.object_count() as u32 {
            for alt in c.hom(x, x).into_iter().filter(|&a| a != unit[x as usize]) {
                let mutated = Monad {
                    unit: mutate(&m.unit, x as usize, alt),
                    ..m.clone()
                };
                let report = ok(check_monad(&v, &mutated), || name.into())?;
                let broken = !oracles::is_category(&c, mutated.unit.id.as_slice(), &entries(&mult));
                kills.record(&format!("{name} unit[{x}] = {alt}"), broken, &report);
            }
        }
    }
    Ok(())
}

fn pro_from_actions(
    c: &FinCategory,
    tuples_l: &[Vec<u32>],
    l: &[u32],
    tuples_r: &[Vec<u32>],
    r: &[u32],
) -> Pro {
    Pro {
        elems: c.morphisms().iter().map(|m| (m.dom, m.cod)).collect(),
        left: tuples_l
            .iter()
            .zip(l)
            .map(|(z, &x)| ((z[1], z[3]), x))
            .collect(),
        right: tuples_r
            .iter()
            .zip(r)
            .map(|(z, &x)| ((z[1], z[3]), x))
            .collect(),
    }
}

fn action_mutations(kills: &mut Kills) -> Result<(), String> {
    for name in ["Z2", "L2", "par", "iso"] {
        let c = category(name);
        let (v, m) = encoded(name, &c)?;
        let b = ok(
            profunctor_to_bimodule(&v, &Profunctor::hom(&c), name, &m, &m),
            || name.into(),
        )?;
        let clean = ok(check_bimodule(&v, &b), || name.into())?;
        kills.record(&format!("hom {name} unmutated"), false, &clean);
        let (ts, src) = table_of(&v, &b.act_src)?;
        let (tt, tgt) = table_of(&v, &b.act_tgt)?;
        for (k, z) in ts.iter().enumerate() {
            for alt in c.hom(z[0], z[4]).into_iter().filter(|&a| a != src[k]) {
                let mutated = Bimodule {
                    act_src: mutate(&b.act_src, k, alt),
                    ..b.clone()
                };
                let report = ok(check_bimodule(&v, &mutated), || name.into())?;
                let pro = pro_from_actions(&c, &ts, mutated.act_src.id.as_slice(), &tt, &tgt);
                kills.record(
                    &format!("hom {name} act_src[{k}] = {alt}"),
                    !oracles::is_profunctor(&c, &c, &pro),
                    &report,
                );
            }
        }
        for (k, z) in tt.iter().enumerate() {
            for alt in c.hom(z[0], z[4]).into_iter().filter(|&a| a != tgt[k]) {
                let mutated = Bimodule {
                    act_tgt: mutate(&b.act_tgt, k, alt),
                    ..b.clone()
                };
                let report = ok(check_bimodule(&v, &mutated), || name.into())?;
                let pro = pro_from_actions(&c, &ts, &src, &tt, mutated.act_tgt.id.as_slice());
                kills.record(
                    &format!("hom {name} act_tgt[{k}] = {alt}"),
                    !oracles::is_profunctor(&c, &c, &pro),
                    &report,
                );
            }
        }
    }
    Ok(())
}

fn one_object(
    v: &MonoidalOracle<FinSetProduct>,
    n: u32,
    table: &[u32],
    unit: u32,
) -> fcmt::Result<EnrichedCategory> {
    classical_enriched_adapter(
        v,
        vec!["*".into()],
        &[n],
        &[CellId::from_table(table.to_vec())],
        &[CellId::from_table(vec![unit])],
    )
}

fn comp_mutations(kills: &mut Kills) -> Result<(), String> {
    let monoids: [(&str, u32, Vec<u32>, u32); 3] = [
        ("Z2", 2, vec![0, 1, 1, 0], 0),
        ("Z3", 3, vec![0, 1, 2, 1, 2, 0, 2, 0, 1], 0),
        ("L2", 2, vec![0, 1, 1, 1], 0),
    ];
    for (name, n, table, unit) in monoids {
        let v = monoidal_fc(FinSetProduct::new(vec![n]));
        let c = ok(one_object(&v, n, &table, unit), || name.into())?;
        kills.record(
            &format!("{name} comp unmutated"),
            false,
            &ok(check_enriched(&v, &c), || name.into())?,
        );
        for k in 0..table.len() {
            for alt in (0..n).filter(|&a| a != table[k]) {
                let mut t = table.clone();
                t[k] = alt;
                let e = ok(one_object(&v, n, &t, unit), || name.into())?;
                let report = ok(check_enriched(&v, &e), || name.into())?;
                kills.record(
                    &format!("{name} comp[{k}] = {alt}"),
                    !oracles::is_monoid(n as usize, &t, unit),
                    &report,
                );
            }
        }
        for alt in (0..n).filter(|&a| a != unit) {
            let e = ok(one_object(&v, n, &table, alt), || name.into())?;
            let report = ok(check_enriched(&v, &e), || name.into())?;
            kills.record(
                &format!("{name} id = {alt}"),
                !oracles::is_monoid(n as usize, &table, alt),
                &report,
            );
        }
    }
    Ok(())
}

fn criterion_2(_: &mut Suites) -> Outcome {
    let mut kills = Kills::default();
    monad_mutations(&mut kills)?;
    let after_monads = kills.genuine;
    action_mutations(&mut kills)?;
    let after_actions = kills.genuine;
    comp_mutations(&mut kills)?;
    let detail = format!(
        "{}/{} genuine mutations killed with witnesses ({} composition or unit, {} action, {} comp or id), {} harmless untouched, need >= {C2_MIN_MUTATIONS}",
        kills.killed,
        kills.genuine,
        after_monads,
        after_actions - after_monads,
        kills.genuine - after_actions,
        kills.neutral
    );
    if !kills.failures.is_empty() {
        return Err(format!(
            "{detail}; {}",
            kills.failures[..kills.failures.len().min(3)].join("; ")
        ));
    }
    if kills.genuine < C2_MIN_MUTATIONS || kills.killed != kills.genuine {
        return Err(detail);
    }
    Ok(detail)
}

// ---------------------------------------------------------------- criterion 3

fn paths(u: &SpanUniverse, max: usize) -> Vec<(usize, Vec<usize>)> {
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<usize>)> = (0..u.sets.len()).map(|a| (a, vec![])).collect();
    while let Some((anchor, spans)) = stack.pop() {
        let end = spans.last().map_or(anchor, |&s| u.spans[s].dst);
        if spans.len() < max {
            for (s, span) in u.spans.iter().enumerate() {
                if span.src == end {
                    let mut next = spans.clone();
                    next.push(s);
                    stack.push((anchor, next));
                }
            }
        }
        out.push((anchor, spans));
    }
    out.sort();
    out
}

fn compare_limits(label: &str, u: &SpanUniverse) -> Result<usize, String> {
    let v = ok(span_fc(u.clone()), || label.into())?;
    let all = paths(u, C3_MAX_PATH);
    for (anchor, spans) in &all {
        let path = Path::new(
            ObjectId(*anchor as u32),
            spans.iter().map(|&s| HorId(s as u32)).collect(),
        );
        let mut expected = oracles::limit_by_filter(u, *anchor, spans);
        let name = |t: &[u32]| -> String {
            match spans.len() {
                0 => u.sets[*anchor].elements[t[0] as usize].clone(),
                1 => u.spans[spans[0]].apex[t[1] as usize].clone(),
                n => {
                    let parts: Vec<&str> = (0..n)
                        .map(|k| u.spans[spans[k]].apex[t[2 * k + 1] as usize].as_str())
                        .collect();
                    format!("({})", parts.join(","))
                }
            }
        };
        let mut want: Vec<(String, u32, u32)> = expected
            .iter()
            .map(|t| (name(t), t[0], t[t.len() - 1]))
            .collect();
        let span = ok(path_limit(u, &path), || format!("{label} {spans:?}"))?;
        let mut got: Vec<(String, u32, u32)> = (0..span.apex.len())
            .map(|i| (span.apex[i].clone(), span.leg_l[i], span.leg_r[i]))
            .collect();
        want.sort();
        got.sort();
        let end = spans.last().map_or(*anchor, |&s| u.spans[s].dst);
        if want != got || span.src != *anchor || span.dst != end {
            return Err(format!(
                "{label}: path {spans:?} from set {anchor}: expected {want:?}, got {got:?}"
            ));
        }
        let mut tuples = ok(v.limit_tuples(&path), || label.into())?;
        tuples.sort();
        expected.sort();
        if tuples != expected {
            return Err(format!("{label}: limit tuples of {spans:?} differ"));
        }
    }
    Ok(all.len())
}

fn criterion_3(_: &mut Suites) -> Outcome {
    let mut checked = compare_limits("U1", &demo::u1())?;
    for i in 0..C3_RANDOM_UNIVERSES {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + i);
        checked += compare_limits(
            &format!("random universe {i}"),
            &gen::random_universe(&mut rng),
        )?;
    }
    Ok(format!(
        "{checked} paths of length <= {C3_MAX_PATH} over U1 and {C3_RANDOM_UNIVERSES} random universes agree with enumerate-and-filter"
    ))
}

// ---------------------------------------------------------------- criterion 4

#[derive(Default)]
struct Tally {
    categories: usize,
    identity_maps: usize,
    functors: usize,
    profunctors: usize,
    transformations: usize,
    profunctor_maps: usize,
    balanced: usize,
    graphs: usize,
    skipped: usize,
}

fn graph_universe(g: &GraphShape) -> SpanUniverse {
    let mut u = SpanUniverse::new();
    u.add_set("G.ob", g.objects());
    let edges = g.edges();
    u.add_span(
        "G",
        0,
        0,
        g.morphisms().into_iter().map(|m| m.name).collect(),
        edges.iter().map(|e| e.0).collect(),
        edges.iter().map(|e| e.1).collect(),
    );
    u
}

fn functor(f: &(Vec<u32>, Vec<u32>)) -> FinFunctor {
    FinFunctor {
        objects: f.0.clone(),
        morphisms: f.1.clone(),
    }
}

/// Monads on every small graph against categories found by backtracking;
/// monad maps along the identity against identity-on-objects functors.
fn c4_monads(t: &mut Tally) -> Result<(), String> {
    for g in gen::graph_classes(C4_MAX_OBJECTS, C4_MAX_MORPHISMS) {
        if g.mult_candidates() > C4_CELL_BUDGET as u128 {
            t.skipped += 1;
            continue;
        }
        t.graphs += 1;
        let label = format!("graph {:?} on {} objects", g.counts, g.n);
        let cats = oracles::categories_on(&g);
        let v = ok(span_fc(graph_universe(&g)), || label.clone())?;
        let carrier = v.horizontal("G").unwrap();
        let monads = ok(enumerate_monads(&v, C4_CELL_BUDGET, &[carrier]), || {
            label.clone()
        })?;
        if monads.len() != cats.len() {
            return Err(format!(
                "{label}: {} monads but {} categories",
                monads.len(),
                cats.len()
            ));
        }
        let bim = ok(
            BimOracle::from_parts(&v, C4_CELL_BUDGET, monads, Vec::new()),
            || label.clone(),
        )?;
        let mut index = Vec::new();
        for c in &cats {
            let m = ok(cat_to_monad(&v, "G", c), || label.clone())?;
            index.push(
                bim.find_monad(&m)
                    .ok_or_else(|| format!("{label}: a category has no monad"))?,
            );
        }
        if index.iter().collect::<BTreeSet<_>>().len() != cats.len() {
            return Err(format!("{label}: two categories give the same monad"));
        }
        t.categories += cats.len();
        let one: Vec<u32> = (0..g.n).collect();
        for (i, ci) in cats.iter().enumerate() {
            for (j, cj) in cats.iter().enumerate() {
                let expected: Vec<_> = oracles::functors(ci, cj)
                    .into_iter()
                    .filter(|f| f.0 == one)
                    .collect();
                let found = bim
                    .monad_maps()
                    .iter()
                    .filter(|e| e.src == index[i] && e.tgt == index[j])
                    .count();
                if found != expected.len() {
                    return Err(format!(
                        "{label}: {found} monad maps but {} functors",
                        expected.len()
                    ));
                }
                for f in &expected {
                    let map = ok(
                        functor_to_monad_map(
                            &v,
                            &functor(f),
                            bim.monad(index[i]).unwrap(),
                            bim.monad(index[j]).unwrap(),
                        ),
                        || label.clone(),
                    )?;
                    if !bim.monad_maps().iter().any(|e| e.map == map) {
                        return Err(format!("{label}: functor {f:?} has no monad map"));
                    }
                }
                t.identity_maps += found;
            }
        }
    }
    Ok(())
}

fn set_of_size(n: usize) -> String {
    format!("ob{n}")
}

/// Named categories over shared object sets with every function between
/// them: monad maps against functors, nullary Bim cells against natural
/// transformations.
fn c4_functors(t: &mut Tally) -> Result<(), String> {
    let cats = gen::named_categories();
    let mut u = SpanUniverse::new();
    let sizes: BTreeSet<usize> = cats.iter().map(|(_, c)| c.object_count()).collect();
    for &n in &sizes {
        u.add_set(set_of_size(n), (0..n).map(|i| format!("x{i}")));
    }
    for (name, c) in &cats {
        let set = u.set_index(&set_of_size(c.object_count())).unwrap();
        u.add_span(
            *name,
            set,
            set,
            c.morphisms().iter().map(|m| m.name.clone()).collect(),
            c.morphisms().iter().map(|m| m.dom).collect(),
            c.morphisms().iter().map(|m| m.cod).collect(),
        );
    }
    for &a in &sizes {
        for &b in &sizes {
            let (sa, sb) = (
                u.set_index(&set_of_size(a)).unwrap(),
                u.set_index(&set_of_size(b)).unwrap(),
            );
            oracles::odometer(&vec![b as u32; a], |table| {
                u.add_function(format!("f{a}{b}{table:?}"), sa, sb, table.to_vec());
            });
        }
    }
    let v = ok(span_fc(u), || "named categories".into())?;
    let mut monads = Vec::new();
    let mut homs = Vec::new();
    for (name, c) in &cats {
        let m = ok(cat_to_monad(&v, name, c), || name.to_string())?;
        homs.push(ok(
            profunctor_to_bimodule(&v, &Profunctor::hom(c), name, &m, &m),
            || name.to_string(),
        )?);
        monads.push(m);
    }
    let bim = ok(
        BimOracle::from_parts(&v, C4_CELL_BUDGET, monads.clone(), homs.clone()),
        || "Bim".into(),
    )?;
    for (i, (ni, ci)) in cats.iter().enumerate() {
        for (j, (nj, cj)) in cats.iter().enumerate() {
            let label = format!("{ni} -> {nj}");
            let (mi, mj) = (ObjectId(i as u32), ObjectId(j as u32));
            let expected = oracles::functors(ci, cj);
            let mut verts = Vec::new();
            for f in &expected {
                let map = ok(
                    functor_to_monad_map(&v, &functor(f), &monads[i], &monads[j]),
                    || label.clone(),
                )?;
                let k = bim
                    .monad_maps()
                    .iter()
                    .position(|e| e.src == mi && e.tgt == mj && e.map == map)
                    .ok_or_else(|| format!("{label}: functor {f:?} has no monad map"))?;
                verts.push(VertId(k as u32));
            }
            let found = bim
                .monad_maps()
                .iter()
                .filter(|e| e.src == mi && e.tgt == mj)
                .count();
            if found != expected.len() || verts.iter().collect::<BTreeSet<_>>().len() != found {
                return Err(format!(
                    "{label}: {found} monad maps but {} functors",
                    expected.len()
                ));
            }
            t.functors += found;
            let hom = HorId(j as u32);
            for (a, fa) in expected.iter().enumerate() {
                for (b, fb) in expected.iter().enumerate() {
                    let want: BTreeSet<Vec<u32>> =
                        oracles::natural_transformations(ci, cj, &functor(fa), &functor(fb))
                            .into_iter()
                            .collect();
                    let frame = Frame::new(Path::empty(mi), verts[a], verts[b], hom);
                    let cells = ok(bim.cells_within(&frame, C4_CELL_BUDGET), || label.clone())?;
                    let mut got = BTreeSet::new();
                    for id in cells {
                        let under = ok(
                            bim.underlying_cell(&TwoCell::new(id, frame.clone())),
                            || label.clone(),
                        )?;
                        let family = ok(cell_family(&v, &under), || label.clone())?;
                        got.insert(family.into_iter().map(|(_, x)| x).collect::<Vec<u32>>());
                    }
                    if got != want {
                        return Err(format!("{label}: Bim cells {fa:?} => {fb:?} are {got:?}, transformations {want:?}"));
                    }
                    t.transformations += want.len();
                }
            }
        }
    }
    Ok(())
}

fn elements_of(elems: &[(u32, u32)], prefix: &str) -> Vec<ProElement> {
    elems
        .iter()
        .enumerate()
        .map(|(i, &(l, r))| ProElement {
            name: format!("{prefix}{i}"),
            left: l,
            right: r,
        })
        .collect()
}

fn library_pro(c: &FinCategory, d: &FinCategory, p: &Pro) -> Profunctor {
    Profunctor::from_fn_unchecked(
        c,
        d,
        elements_of(&p.elems, "e"),
        |u, e| p.left(u, e).unwrap(),
        |e, v| p.right(e, v).unwrap(),
    )
}

fn element_multisets(c: &FinCategory, d: &FinCategory, k: usize) -> Vec<Vec<(u32, u32)>> {
    let pairs: Vec<(u32, u32)> = (0..c.object_count() as u32)
        .flat_map(|x| (0..d.object_count() as u32).map(move |y| (x, y)))
        .collect();
    gen::multisets(pairs.len(), k)
        .into_iter()
        .map(|m| m.into_iter().map(|i| pairs[i]).collect())
        .collect()
}

/// A universe with the given categories on their own object sets and one
/// element span per entry of `spans` (`name`, source category, target
/// category, elements).
fn profunctor_universe(
    cats: &[(&str, &FinCategory)],
    spans: &[(String, usize, usize, Vec<(u32, u32)>)],
) -> SpanUniverse {
    let mut u = SpanUniverse::new();
    for (name, c) in cats {
        encode_category(&mut u, name, c);
    }
    for (name, s, d, elems) in spans {
        let src = u.set_index(&format!("{}.ob", cats[*s].0)).unwrap();
        let dst = u.set_index(&format!("{}.ob", cats[*d].0)).unwrap();
        u.add_span(
            name.clone(),
            src,
            dst,
            (0..elems.len()).map(|i| format!("{name}.{i}")).collect(),
            elems.iter().map(|e| e.0).collect(),
            elems.iter().map(|e| e.1).collect(),
        );
    }
    u
}

/// The bimodule of every oracle profunctor on an element span, checked to be
/// a bijection onto the enumerated bimodules on that span.
fn match_bimodules<V: FcOracle>(
    label: &str,
    v: &SpanOracle,
    bim: &BimOracle<V>,
    span: &str,
    pros: &[Pro],
    (c, d): (&FinCategory, &FinCategory),
    (src, tgt): (ObjectId, ObjectId),
) -> Result<Vec<HorId>, String> {
    let carrier = v.horizontal(span).unwrap();
    let found = bim
        .bimodules()
        .iter()
        .filter(|e| e.src == src && e.tgt == tgt && e.bimodule.carrier == carrier)
        .count();
    let mut ids = Vec::new();
    for p in pros {
        let b = ok(
            profunctor_to_bimodule(
                v,
                &library_pro(c, d, p),
                span,
                bim.monad(src).unwrap(),
                bim.monad(tgt).unwrap(),
            ),
            || label.to_string(),
        )?;
        ids.push(
            bim.find_bimodule(&b)
                .ok_or_else(|| format!("{label}: a profunctor on {span} has no bimodule"))?,
        );
    }
    if found != pros.len() || ids.iter().collect::<BTreeSet<_>>().len() != found {
        return Err(format!(
            "{label}: {found} bimodules on {span} but {} profunctors",
            pros.len()
        ));
    }
    Ok(ids)
}

/// Bimodules against profunctors and identity-sided unary Bim cells against
/// maps of profunctors.
fn c4_profunctors(t: &mut Tally) -> Result<(), String> {
    let cats: Vec<_> = gen::named_categories()
        .into_iter()
        .filter(|(_, c)| c.object_count() <= 2)
        .collect();
    for (nc, c) in &cats {
        for (nd, d) in &cats {
            let label = format!("{nc} -/-> {nd}");
            let multisets = element_multisets(c, d, 2);
            let spans: Vec<_> = multisets
                .iter()
                .enumerate()
                .map(|(k, m)| (format!("E{k}"), 0, 1, m.clone()))
                .collect();
            let u = profunctor_universe(&[("L", c), ("R", d)], &spans);
            let v = ok(span_fc(u), || label.clone())?;
            let ml = ok(cat_to_monad(&v, "L", c), || label.clone())?;
            let mr = ok(cat_to_monad(&v, "R", d), || label.clone())?;
            let bim = ok(
                BimOracle::with_monads(&v, C4_CELL_BUDGET, vec![ml, mr]),
                || label.clone(),
            )?;
            let (l, r) = (ObjectId(0), ObjectId(1));
            let mut all: Vec<(Pro, HorId)> = Vec::new();
            for (k, m) in multisets.iter().enumerate() {
                let pros = oracles::profunctors(c, d, m);
                let ids =
                    match_bimodules(&label, &v, &bim, &format!("E{k}"), &pros, (c, d), (l, r))?;
                t.profunctors += pros.len();
                all.extend(pros.into_iter().zip(ids));
            }
            let (one_l, one_r) = (bim.id_vert(l).unwrap(), bim.id_vert(r).unwrap());
            for (p, hp) in &all {
                for (q, hq) in &all {
                    let want: BTreeSet<Vec<u32>> =
                        oracles::profunctor_maps(c, d, p, q).into_iter().collect();
                    let frame = Frame::new(Path::single(l, *hp), one_l, one_r, *hq);
                    let mut got = BTreeSet::new();
                    for id in ok(bim.cells_within(&frame, C4_CELL_BUDGET), || label.clone())? {
                        let under = ok(
                            bim.underlying_cell(&TwoCell::new(id, frame.clone())),
                            || label.clone(),
                        )?;
                        let family = ok(cell_family(&v, &under), || label.clone())?;
                        let mut phi = vec![u32::MAX; p.elems.len()];
                        for (z, x) in family {
                            phi[z[1] as usize] = x;
                        }
                        got.insert(phi);
                    }
                    if got != want {
                        return Err(format!(
                            "{label}: unary Bim cells differ from profunctor maps"
                        ));
                    }
                    t.profunctor_maps += want.len();
                }
            }
        }
    }
    Ok(())
}

/// Binary Bim cells with identity sides against balanced families.
fn c4_balanced(t: &mut Tally) -> Result<(), String> {
    let names = ["1", "2", "Z2"];
    for a in names {
        for b in names {
            for e in names {
                let (ca, cb, ce) = (category(a), category(b), category(e));
                let label = format!("{a} -/-> {b} -/-> {e}");
                let groups = [
                    (0, 1, &ca, &cb, "P"),
                    (1, 2, &cb, &ce, "Q"),
                    (0, 2, &ca, &ce, "R"),
                ];
                let mut spans = Vec::new();
                for (s, d, cs, cd, prefix) in groups {
                    for (k, m) in element_multisets(cs, cd, 2).into_iter().enumerate() {
                        spans.push((format!("{prefix}{k}"), s, d, m));
                    }
                }
                let u = profunctor_universe(&[("A", &ca), ("B", &cb), ("C", &ce)], &spans);
                let v = ok(span_fc(u), || label.clone())?;
                let monads = [("A", &ca), ("B", &cb), ("C", &ce)]
                    .iter()
                    .map(|(n, c)| ok(cat_to_monad(&v, n, c), || label.clone()))
                    .collect::<Result<Vec<_>, _>>()?;
                let bim = ok(BimOracle::with_monads(&v, C4_CELL_BUDGET, monads), || {
                    label.clone()
                })?;
                let mut by_group: BTreeMap<&str, Vec<(Pro, HorId)>> = BTreeMap::new();
                for (name, s, d, elems) in &spans {
                    let prefix = &name[..1];
                    let (cs, cd) = match prefix {
                        "P" => (&ca, &cb),
                        "Q" => (&cb, &ce),
                        _ => (&ca, &ce),
                    };
                    let pros = oracles::profunctors(cs, cd, elems);
                    let ids = match_bimodules(
                        &label,
                        &v,
                        &bim,
                        name,
                        &pros,
                        (cs, cd),
                        (ObjectId(*s as u32), ObjectId(*d as u32)),
                    )?;
                    by_group
                        .entry(prefix)
                        .or_default()
                        .extend(pros.into_iter().zip(ids));
                }
                let (one_a, one_c) = (
                    bim.id_vert(ObjectId(0)).unwrap(),
                    bim.id_vert(ObjectId(2)).unwrap(),
                );
                for (p, hp) in &by_group["P"] {
                    for (q, hq) in &by_group["Q"] {
                        for (r, hr) in &by_group["R"] {
                            let want: BTreeSet<Vec<u32>> =
                                oracles::balanced_families(&ca, &cb, &ce, p, q, r)
                                    .into_iter()
                                    .collect();
                            let frame = Frame::new(
                                Path::new(ObjectId(0), vec![*hp, *hq]),
                                one_a,
                                one_c,
                                *hr,
                            );
                            let mut got = BTreeSet::new();
                            for id in
                                ok(bim.cells_within(&frame, C4_CELL_BUDGET), || label.clone())?
                            {
                                let under = ok(
                                    bim.underlying_cell(&TwoCell::new(id, frame.clone())),
                                    || label.clone(),
                                )?;
                                let family: BTreeMap<(u32, u32), u32> =
                                    ok(cell_family(&v, &under), || label.clone())?
                                        .into_iter()
                                        .map(|(z, x)| ((z[1], z[3]), x))
                                        .collect();
                                let mut phi = Vec::new();
                                for i in 0..p.elems.len() as u32 {
                                    for j in 0..q.elems.len() as u32 {
                                        if p.elems[i as usize].1 == q.elems[j as usize].0 {
                                            phi.push(family[&(i, j)]);
                                        }
                                    }
                                }
                                got.insert(phi);
                            }
                            if got != want {
                                return Err(format!(
                                    "{label}: binary Bim cells differ from balanced families"
                                ));
                            }
                            t.balanced += want.len();
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn criterion_4(_: &mut Suites) -> Outcome {
    let mut t = Tally::default();
    let mut stamp = Instant::now();
    let mut times = Vec::new();
    let mut lap = |times: &mut Vec<String>, what: &str| {
        times.push(format!("{what} {:.1} s", stamp.elapsed().as_secs_f64()));
        stamp = Instant::now();
    };
    c4_monads(&mut t)?;
    lap(&mut times, "monads");
    c4_functors(&mut t)?;
    lap(&mut times, "functors");
    c4_profunctors(&mut t)?;
    lap(&mut times, "profunctors");
    c4_balanced(&mut t)?;
    lap(&mut times, "balanced");
    Ok(format!(
        "{} categories on {} of {} graph classes with <= {C4_MAX_OBJECTS} objects and <= {C4_MAX_MORPHISMS} morphisms ({} exceed the cell budget {C4_CELL_BUDGET}), {} identity-on-objects maps, {} functors, {} profunctors, {} natural transformations, {} profunctor maps, {} balanced families [{}]",
        t.categories,
        t.graphs,
        t.graphs + t.skipped,
        t.skipped,
        t.identity_maps,
        t.functors,
        t.profunctors,
        t.transformations,
        t.profunctor_maps,
        t.balanced,
        times.join(", ")
    ))
}

// ---------------------------------------------------------------- criterion 5

fn injective(xs: &[u32]) -> bool {
    xs.iter().collect::<BTreeSet<_>>().len() == xs.len()
}

fn composites_of_partial_bijections() -> Result<(usize, usize), String> {
    let mut binary = 0;
    let mut ternary = 0;
    for a in 0..=C5_MAX_SET {
        for b in 0..=C5_MAX_SET {
            for c in 0..=C5_MAX_SET {
                let mut u = SpanUniverse::new();
                u.add_set("X", (0..a).map(|i| format!("x{i}")));
                u.add_set("Y", (0..b).map(|i| format!("y{i}")));
                u.add_set("Z", (0..c).map(|i| format!("z{i}")));
                let ps: Vec<usize> = gen::partial_bijections(a, b)
                    .iter()
                    .enumerate()
                    .map(|(k, r)| gen::add_relation(&mut u, &format!("P{k}_"), 0, 1, r))
                    .collect();
                let qs: Vec<usize> = gen::partial_bijections(b, c)
                    .iter()
                    .enumerate()
                    .map(|(k, r)| gen::add_relation(&mut u, &format!("Q{k}_"), 1, 2, r))
                    .collect();
                let rs: Vec<usize> = if a.max(b).max(c) <= C5_TERNARY_MAX_SET {
                    gen::partial_bijections(c, a)
                        .iter()
                        .enumerate()
                        .map(|(k, r)| gen::add_relation(&mut u, &format!("R{k}_"), 2, 0, r))
                        .collect()
                } else {
                    Vec::new()
                };
                let check = |spans: Vec<usize>| -> Result<(), String> {
                    let path = Path::new(
                        ObjectId(0),
                        spans.iter().map(|&s| HorId(s as u32)).collect(),
                    );
                    let s = ok(path_limit(&u, &path), || "partial bijections".into())?;
                    if injective(&s.leg_l) && injective(&s.leg_r) {
                        Ok(())
                    } else {
                        Err(format!("composite {} is not a partial bijection", s.name))
                    }
                };
                for &p in &ps {
                    for &q in &qs {
                        check(vec![p, q])?;
                        binary += 1;
                        for &r in &rs {
                            check(vec![p, q, r])?;
                            ternary += 1;
                        }
                    }
                }
            }
        }
    }
    Ok((binary, ternary))
}

fn subset_families() -> Vec<(String, FinSet, Vec<Subset>)> {
    let mut out = vec![
        (
            "{1,2,3} with {1,2}, {2,3}".to_string(),
            FinSet::new("S", ["1", "2", "3"]),
            vec![Subset::new("C1", ["1", "2"]), Subset::new("C2", ["2", "3"])],
        ),
        (
            "empty family".to_string(),
            FinSet::new("S", ["1", "2"]),
            Vec::new(),
        ),
    ];
    for i in 0..C5_RANDOM_FAMILIES {
        let f = demo::random_subsets(SEED + i);
        out.push((format!("random family {i}"), f.set, f.subsets));
    }
    out
}

fn criterion_5(s: &mut Suites) -> Outcome {
    let (binary, ternary) = composites_of_partial_bijections()?;
    let mut max_set = 0;
    let mut max_subsets = 0;
    for (label, set, family) in subset_families() {
        max_set = max_set.max(set.len());
        max_subsets = max_subsets.max(family.len());
        let (v, c) = ok(parbjn_from_subsets(&set, &family), || label.clone())?;
        let r = ok(check_enriched(&v, &c), || label.clone())?;
        note_report(&r);
        if !r.pass {
            return Err(format!("{label}: {}", first_violation(&r)));
        }
        s.parbjn.push((label, v, c));
    }
    Ok(format!(
        "{binary} binary composites over sets of size <= {C5_MAX_SET} and {ternary} ternary ones over size <= {C5_TERNARY_MAX_SET} are partial bijections; {} subset families ({C5_RANDOM_FAMILIES} random, seed {SEED}, |S| <= {max_set}, <= {max_subsets} subsets) pass",
        s.parbjn.len()
    ))
}

// ---------------------------------------------------------------- criterion 6

fn criterion_6(s: &mut Suites) -> Outcome {
    let v2 = StrictMonoidalPresentation::v2();
    let (zero, one) = (v2.object_index("0").unwrap(), v2.object_index("1").unwrap());
    let v = monoidal_fc(v2);
    let (h0, h1) = (v.horizontal(zero).unwrap(), v.horizontal(one).unwrap());
    let mut preorders = Vec::new();
    let mut relations = 0;
    for n in 0..C6_PREORDERS.len() {
        let mut count = 0;
        for bits in 0u32..(1 << (n * n)) {
            relations += 1;
            let rel: Vec<bool> = (0..n * n).map(|k| bits >> k & 1 == 1).collect();
            let homs = rel.iter().map(|&r| if r { h1 } else { h0 }).collect();
            let objects = (0..n).map(|i| format!("a{i}")).collect();
            let found = ok(
                EnrichedCategory::search(&v, objects, vec![ObjectId(0); n], homs, C6_MONOID_BUDGET),
                || format!("relation {bits:b} on {n}"),
            )?;
            let expected = usize::from(oracles::is_preorder(n, &rel));
            if found.len() != expected {
                return Err(format!(
                    "relation {bits:b} on {n} elements: {} enriched structures, preorder: {}",
                    found.len(),
                    expected == 1
                ));
            }
            count += found.len();
            s.v2.extend(found);
        }
        preorders.push(count);
    }
    if preorders != C6_PREORDERS {
        return Err(format!(
            "preorder counts {preorders:?}, pinned {C6_PREORDERS:?}"
        ));
    }
    let mut monoids = Vec::new();
    for n in 0..C6_MONOIDS.len() as u32 {
        let v = monoidal_fc(FinSetProduct::new(vec![n]));
        let h = v.horizontal(n).unwrap();
        let found = ok(
            EnrichedCategory::search(
                &v,
                vec!["*".into()],
                vec![ObjectId(0)],
                vec![h],
                C6_MONOID_BUDGET,
            ),
            || format!("monoids on {n}"),
        )?;
        let got: BTreeSet<(Vec<u32>, u32)> = found
            .iter()
            .map(|c| {
                (
                    c.comp(0, 0, 0).id.as_slice().to_vec(),
                    c.id(0).id.as_slice()[0],
                )
            })
            .collect();
        let want: BTreeSet<(Vec<u32>, u32)> = oracles::monoids(n as usize).into_iter().collect();
        if got != want || got.len() != found.len() {
            return Err(format!(
                "carrier {n}: {} enriched categories, {} monoids",
                found.len(),
                want.len()
            ));
        }
        monoids.push(found.len());
        s.monoids.extend(found.into_iter().map(|c| (n, c)));
    }
    if monoids != C6_MONOIDS {
        return Err(format!("monoid counts {monoids:?}, pinned {C6_MONOIDS:?}"));
    }
    Ok(format!(
        "{relations} relations on <= 3 elements: enriched over V2 exactly when a preorder ({preorders:?}); one-object categories over finite sets are the monoids ({monoids:?} on carriers 0..=3)"
    ))
}

// ---------------------------------------------------------------- criterion 7

fn transfer<V: FcOracle>(
    label: &str,
    v: V,
    c: &EnrichedCategory,
) -> Result<(usize, usize), String> {
    let b = ok(enrich_to_bim(v, c), || label.to_string())?;
    let r = ok(check_enriched(&b.oracle, &b.category), || label.to_string())?;
    note_report(&r);
    if !r.pass {
        return Err(format!(
            "{label}: transferred category fails: {}",
            first_violation(&r)
        ));
    }
    let under = b.oracle.underlying();
    for m in b.oracle.monads() {
        let r = ok(check_monad(under, m), || label.to_string())?;
        if !r.pass {
            return Err(format!(
                "{label}: produced monad fails: {}",
                first_violation(&r)
            ));
        }
    }
    for e in b.oracle.bimodules() {
        let r = ok(check_bimodule(under, &e.bimodule), || label.to_string())?;
        if !r.pass {
            return Err(format!(
                "{label}: produced bimodule fails: {}",
                first_violation(&r)
            ));
        }
    }
    Ok((b.oracle.monads().len(), b.oracle.bimodules().len()))
}

fn criterion_7(s: &mut Suites) -> Outcome {
    let mut categories = 0;
    let (mut monads, mut bimodules) = (0, 0);
    let mut add = |(m, b): (usize, usize)| {
        categories += 1;
        monads += m;
        bimodules += b;
    };
    for (label, v, c) in &s.parbjn {
        add(transfer(label, v, c)?);
    }
    let v2 = monoidal_fc(StrictMonoidalPresentation::v2());
    for (i, c) in s.v2.iter().enumerate() {
        add(transfer(&format!("V2 preorder {i}"), &v2, c)?);
    }
    for (i, (n, c)) in s.monoids.iter().enumerate() {
        add(transfer(
            &format!("monoid {i}"),
            monoidal_fc(FinSetProduct::new(vec![*n])),
            c,
        )?);
    }
    let events = CLOSURE_EVENTS.load(Ordering::SeqCst);
    let detail = format!(
        "{categories} enriched categories transferred ({monads} monads, {bimodules} bimodules, all pass); {events} closure violations across all suites"
    );
    if events > 0 || categories == 0 {
        return Err(detail);
    }
    Ok(detail)
}

// ---------------------------------------------------------------- criterion 8

fn fcmt_bin(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_fcmt"))
        .args(args)
        .env_remove("FCMT_DEMO_DIR")
        .output()
        .map_err(|e| format!("fcmt {args:?}: {e}"))?;
    let mut bytes = format!("exit {:?}\n", out.status.code()).into_bytes();
    bytes.extend(out.stdout);
    Ok(bytes)
}

fn cli_run(dir: &std::path::Path, parallel: bool) -> Result<Vec<Vec<u8>>, String> {
    let seed = SEED.to_string();
    let mut out = Vec::new();
    for name in DEMOS {
        let file = dir.join(format!("{name}.json"));
        let file = file.to_str().unwrap();
        for cmd in ["check", "bim", "derive-bim"] {
            let mut args = vec![cmd, file, "--format", "machine", "--seed", &seed];
            if parallel {
                args.push("--parallel");
            }
            out.push(fcmt_bin(&args)?);
        }
    }
    Ok(out)
}

fn criterion_8(s: &mut Suites) -> Outcome {
    for exec in [Execution::Sequential, Execution::Parallel] {
        let again = c1_reports(exec)?;
        if again != s.c1_reports {
            let k = again
                .iter()
                .zip(&s.c1_reports)
                .position(|(a, b)| a != b)
                .unwrap_or(0);
            return Err(format!(
                "{exec:?} rerun of criterion 1 differs at universe {k}"
            ));
        }
    }
    let dir = std::env::temp_dir().join(format!("fcmt-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let seed = SEED.to_string();
    for name in DEMOS {
        let first = fcmt_bin(&["demo", name, "--seed", &seed])?;
        let second = fcmt_bin(&["demo", name, "--seed", &seed])?;
        if first != second {
            return Err(format!("demo {name} differs between runs"));
        }
        let body = first
            .splitn(2, |&b| b == b'\n')
            .nth(1)
            .unwrap_or_default()
            .to_vec();
        std::fs::write(dir.join(format!("{name}.json")), body).map_err(|e| e.to_string())?;
    }
    let runs = [
        cli_run(&dir, false)?,
        cli_run(&dir, false)?,
        cli_run(&dir, true)?,
        cli_run(&dir, true)?,
    ];
    let _ = std::fs::remove_dir_all(&dir);
    for (k, run) in runs.iter().enumerate().skip(1) {
        if run != &runs[0] {
            let i = run
                .iter()
                .zip(&runs[0])
                .position(|(a, b)| a != b)
                .unwrap_or(0);
            return Err(format!(
                "CLI run {k} differs from run 0 on {} {}",
                DEMOS[i / 3],
                ["check", "bim", "derive-bim"][i % 3]
            ));
        }
    }
    let bytes: usize = runs[0].iter().map(Vec::len).sum();
    Ok(format!(
        "{} criterion-1 reports identical across sequential, parallel and repeated runs; {} CLI reports ({bytes} bytes) identical across 2 sequential and 2 parallel runs",
        s.c1_reports.len(),
        runs[0].len()
    ))
}

// ---------------------------------------------------------------- harness

type Criterion = fn(&mut Suites) -> Outcome;

fn main() {
    let criteria: [(&str, Criterion); 8] = [
        ("law-checker soundness", criterion_1),
        ("mutation kill rate", criterion_2),
        ("span composite oracle equivalence", criterion_3),
        ("Bim(Span) correspondence", criterion_4),
        ("ParBjn closure and subset totality", criterion_5),
        ("enrichment characterizations", criterion_6),
        ("transfer soundness", criterion_7),
        ("determinism", criterion_8),
    ];
    // `acceptance N` runs criterion N and whatever it depends on
    let only: Option<usize> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let needed = |n: usize| match only {
        None => true,
        Some(7) => (5..=7).contains(&n),
        Some(8) => n == 1 || n == 8,
        Some(k) => k == n,
    };
    let mut suites = Suites::default();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let n = i + 1;
        if !needed(n) {
            continue;
        }
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| run(&mut suites)))
            .unwrap_or_else(|p| Err(format!("panicked: {}", panic_text(&p))));
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] criterion {n} {name}: {detail} ({secs:.1} s)"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {n} {name}: {detail} ({secs:.1} s)");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

fn panic_text(p: &Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<String>()
        .cloned()
        .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_default()
}
