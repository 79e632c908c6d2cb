//! Generators for the acceptance families.

use std::collections::BTreeSet;

use fcmt::category::{FinCategory, Morphism};
use fcmt::instances::SpanUniverse;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Every multiset of at most `k` items from `0..n`, as sorted vectors.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for m in &frontier {
            for i in m.last().copied().unwrap_or(0)..n {
                let mut grown = m.clone();
                grown.push(i);
                next.push(grown);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Subsets of `X × Y` with at most `k` pairs.
pub fn relations(x: u32, y: u32, k: usize) -> Vec<Vec<(u32, u32)>> {
    let pairs: Vec<(u32, u32)> = (0..x).flat_map(|a| (0..y).map(move |b| (a, b))).collect();
    multisets(pairs.len(), k)
        .into_iter()
        .filter(|m| m.windows(2).all(|w| w[0] != w[1]))
        .map(|m| m.into_iter().map(|i| pairs[i]).collect())
        .collect()
}

pub fn add_relation(
    u: &mut SpanUniverse,
    name: &str,
    src: usize,
    dst: usize,
    pairs: &[(u32, u32)],
) -> usize {
    u.add_span(
        name,
        src,
        dst,
        (0..pairs.len()).map(|i| format!("{name}{i}")).collect(),
        pairs.iter().map(|p| p.0).collect(),
        pairs.iter().map(|p| p.1).collect(),
    )
}

fn elements(prefix: &str, n: u32) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// The soundness family: a set of size at most 2 with at most two
/// endo-relations, and two 2-element sets with one relation each way.
/// Relations have at most two pairs; the only verticals are identities.
pub fn soundness_universes() -> Vec<(String, SpanUniverse)> {
    let mut out = Vec::new();
    for size in 0..=2u32 {
        let rels = relations(size, size, 2);
        for family in multisets(rels.len(), 2) {
            let mut u = SpanUniverse::new();
            u.add_set("X", elements("x", size));
            for (k, &r) in family.iter().enumerate() {
                add_relation(&mut u, &format!("M{k}_"), 0, 0, &rels[r]);
            }
            out.push((format!("X{size} endo {family:?}"), u));
        }
    }
    let rels = relations(2, 2, 2);
    for a in 0..rels.len() {
        for b in 0..rels.len() {
            let mut u = SpanUniverse::new();
            u.add_set("X", elements("x", 2));
            u.add_set("Y", elements("y", 2));
            add_relation(&mut u, "P", 0, 1, &rels[a]);
            add_relation(&mut u, "Q", 1, 0, &rels[b]);
            out.push((format!("X2 Y2 [{a}, {b}]"), u));
        }
    }
    out
}

/// A random universe: 1 to 3 sets of size at most 3 and 1 to 4 spans with
/// apex at most 4.
pub fn random_universe(rng: &mut ChaCha8Rng) -> SpanUniverse {
    let mut u = SpanUniverse::new();
    let nsets = rng.gen_range(1..=3);
    let sizes: Vec<u32> = (0..nsets).map(|_| rng.gen_range(0..=3)).collect();
    for (i, &n) in sizes.iter().enumerate() {
        u.add_set(format!("S{i}"), elements(&format!("s{i}."), n));
    }
    for k in 0..rng.gen_range(1..=4) {
        let src = rng.gen_range(0..nsets);
        let dst = rng.gen_range(0..nsets);
        let apex = if sizes[src] == 0 || sizes[dst] == 0 {
            0
        } else {
            rng.gen_range(0..=4)
        };
        let leg_l = (0..apex).map(|_| rng.gen_range(0..sizes[src])).collect();
        let leg_r = (0..apex).map(|_| rng.gen_range(0..sizes[dst])).collect();
        u.add_span(
            format!("R{k}"),
            src,
            dst,
            elements(&format!("a{k}."), apex),
            leg_l,
            leg_r,
        );
    }
    u
}

/// Every partial bijection between `0..a` and `0..b`, as sorted pair lists.
pub fn partial_bijections(a: u32, b: u32) -> Vec<Vec<(u32, u32)>> {
    fn go(
        x: u32,
        a: u32,
        b: u32,
        used: &mut Vec<bool>,
        cur: &mut Vec<(u32, u32)>,
        out: &mut Vec<Vec<(u32, u32)>>,
    ) {
        if x == a {
            out.push(cur.clone());
            return;
        }
        go(x + 1, a, b, used, cur, out);
        for y in 0..b {
            if !used[y as usize] {
                used[y as usize] = true;
                cur.push((x, y));
                go(x + 1, a, b, used, cur, out);
                cur.pop();
                used[y as usize] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(
        0,
        a,
        b,
        &mut vec![false; b as usize],
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// A directed multigraph on `n` objects: `counts[a * n + b]` edges `a -> b`.
#[derive(Clone, Debug)]
pub struct GraphShape {
    pub n: u32,
    pub counts: Vec<u32>,
}

impl GraphShape {
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                for _ in 0..self.counts[(a * self.n + b) as usize] {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn hom(&self, a: u32, b: u32) -> u64 {
        self.counts[(a * self.n + b) as usize] as u64
    }

    /// Number of candidate multiplication cells in the span model.
    pub fn mult_candidates(&self) -> u128 {
        let mut total: u128 = 1;
        for a in 0..self.n {
            for b in 0..self.n {
                for c in 0..self.n {
                    let pairs = self.hom(a, b) * self.hom(b, c);
                    total =
                        total.saturating_mul((self.hom(a, c) as u128).saturating_pow(pairs as u32));
                }
            }
        }
        total
    }

    pub fn objects(&self) -> Vec<String> {
        elements("o", self.n)
    }

    pub fn morphisms(&self) -> Vec<Morphism> {
        self.edges()
            .into_iter()
            .enumerate()
            .map(|(i, (a, b))| Morphism::new(format!("e{i}"), a, b))
            .collect()
    }
}

/// Graphs with at most `max_objects` objects and `max_edges` edges and a loop
/// at every object, one per isomorphism class.
pub fn graph_classes(max_objects: u32, max_edges: u32) -> Vec<GraphShape> {
    fn perms(n: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    fn fill(i: usize, rem: u32, cur: &mut Vec<u32>, n: u32, out: &mut Vec<Vec<u32>>) {
        if i == (n * n) as usize {
            out.push(cur.clone());
            return;
        }
        for k in 0..=rem {
            cur.push(k);
            fill(i + 1, rem - k, cur, n, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for n in 1..=max_objects {
        let ps = perms(n);
        let mut seen = BTreeSet::new();
        let mut all = Vec::new();
        fill(0, max_edges, &mut Vec::new(), n, &mut all);
        for counts in all {
            if (0..n).any(|a| counts[(a * n + a) as usize] == 0) {
                continue;
            }
            let canon = ps
                .iter()
                .map(|p| {
                    (0..n)
                        .flat_map(|a| (0..n).map(move |b| (a, b)))
                        .map(|(a, b)| counts[(p[a as usize] * n + p[b as usize]) as usize])
                        .collect::<Vec<u32>>()
                })
                .min()
                .unwrap();
            if seen.insert(canon.clone()) {
                out.push(GraphShape { n, counts: canon });
            }
        }
    }
    out
}

/// Small named categories used across the Bim checks.
pub fn named_categories() -> Vec<(&'static str, FinCategory)> {
    let iso = FinCategory::from_fn(
        vec!["a".into(), "b".into()],
        vec![
            Morphism::new("1_a", 0, 0),
            Morphism::new("1_b", 1, 1),
            Morphism::new("f", 0, 1),
            Morphism::new("g", 1, 0),
        ],
        vec![0, 1],
        |g, f| match (g, f) {
            (0 | 1, f) => f,
            (g, 0 | 1) => g,
            (3, 2) => 0,
            _ => 1,
        },
    )
    .expect("the walking isomorphism is a category");
    vec![
        ("1", FinCategory::terminal()),
        ("disc2", FinCategory::discrete(["p", "q"])),
        ("2", FinCategory::arrow()),
        ("par", FinCategory::parallel_arrows()),
        ("iso", iso),
        (
            "Z2",
            FinCategory::from_monoid(["e", "g"], &[0, 1, 1, 0], 0).unwrap(),
        ),
        (
            "L2",
            FinCategory::from_monoid(["e", "a"], &[0, 1, 1, 1], 0).unwrap(),
        ),
        ("3", FinCategory::chain(3)),
        (
            "V",
            FinCategory::from_preorder(["a", "b", "c"], |x, y| x == y || y == 2).unwrap(),
        ),
    ]
}
