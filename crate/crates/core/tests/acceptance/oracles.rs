//! Independent brute-force oracles. Nothing here calls the checkers or the
//! Bim construction.

use std::collections::BTreeMap;

use fcmt::category::{FinCategory, FinFunctor};
use fcmt::instances::SpanUniverse;

use super::gen::GraphShape;

/// Calls `visit` on every vector `t` with `t[i] < dims[i]`, in
/// lexicographic order.
pub fn odometer(dims: &[u32], mut visit: impl FnMut(&[u32])) {
    if dims.contains(&0) {
        return;
    }
    let mut t = vec![0u32; dims.len()];
    loop {
        visit(&t);
        let mut i = dims.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < dims[i] {
                break;
            }
            t[i] = 0;
        }
    }
}

/// The limit of a row of spans by enumerating the whole product
/// `X0 × A1 × X1 × ... × An × Xn` and keeping the matching tuples.
pub fn limit_by_filter(u: &SpanUniverse, anchor: usize, spans: &[usize]) -> Vec<Vec<u32>> {
    let mut dims = vec![u.sets[anchor].len() as u32];
    for &s in spans {
        dims.push(u.spans[s].apex.len() as u32);
        dims.push(u.sets[u.spans[s].dst].len() as u32);
    }
    let mut out = Vec::new();
    odometer(&dims, |t| {
        let ok = spans.iter().enumerate().all(|(k, &s)| {
            let a = t[2 * k + 1] as usize;
            u.spans[s].leg_l[a] == t[2 * k] && u.spans[s].leg_r[a] == t[2 * k + 2]
        });
        if ok {
            out.push(t.to_vec());
        }
    });
    out
}

/// Every category on the graph, found by choosing identities and then
/// filling the free part of the composition table with associativity
/// pruning.
pub fn categories_on(g: &GraphShape) -> Vec<FinCategory> {
    let edges = g.edges();
    let m = edges.len();
    let loops: Vec<u32> = (0..g.n)
        .map(|a| edges.iter().filter(|e| **e == (a, a)).count() as u32)
        .collect();
    let loop_ids = |a: u32| -> Vec<u32> {
        (0..m as u32)
            .filter(|&i| edges[i as usize] == (a, a))
            .collect()
    };
    let mut out = Vec::new();
    odometer(&loops, |pick| {
        let ids: Vec<u32> = (0..g.n)
            .map(|a| loop_ids(a)[pick[a as usize] as usize])
            .collect();
        let is_id = |f: u32| ids.contains(&f);
        let mut table: Vec<Option<u32>> = vec![None; m * m];
        let mut free = Vec::new();
        for gi in 0..m as u32 {
            for fi in 0..m as u32 {
                let (f, gg) = (edges[fi as usize], edges[gi as usize]);
                if f.1 != gg.0 {
                    continue;
                }
                if is_id(fi) {
                    table[(gi as usize) * m + fi as usize] = Some(gi);
                } else if is_id(gi) {
                    table[(gi as usize) * m + fi as usize] = Some(fi);
                } else {
                    free.push((gi, fi));
                }
            }
        }
        fill(&edges, &mut table, &free, 0, &mut |t| {
            let entries: Vec<(u32, u32, u32)> = (0..m)
                .flat_map(|gi| (0..m).map(move |fi| (gi, fi)))
                .filter_map(|(gi, fi)| t[gi * m + fi].map(|v| (gi as u32, fi as u32, v)))
                .collect();
            out.push(
                FinCategory::from_entries(g.objects(), g.morphisms(), ids.clone(), &entries)
                    .expect("associative unital tables are categories"),
            );
        });
    });
    out
}

fn associative_so_far(edges: &[(u32, u32)], t: &[Option<u32>]) -> bool {
    let m = edges.len();
    let at = |g: u32, f: u32| t[g as usize * m + f as usize];
    for f in 0..m as u32 {
        for g in 0..m as u32 {
            if edges[f as usize].1 != edges[g as usize].0 {
                continue;
            }
            let Some(gf) = at(g, f) else { continue };
            for h in 0..m as u32 {
                if edges[g as usize].1 != edges[h as usize].0 {
                    continue;
                }
                let Some(hg) = at(h, g) else { continue };
                if let (Some(l), Some(r)) = (at(hg, f), at(h, gf)) {
                    if l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn fill(
    edges: &[(u32, u32)],
    table: &mut Vec<Option<u32>>,
    free: &[(u32, u32)],
    k: usize,
    leaf: &mut dyn FnMut(&[Option<u32>]),
) {
    if !associative_so_far(edges, table) {
        return;
    }
    if k == free.len() {
        leaf(table);
        return;
    }
    let m = edges.len();
    let (g, f) = free[k];
    let (a, c) = (edges[f as usize].0, edges[g as usize].1);
    for x in 0..m as u32 {
        if edges[x as usize] == (a, c) {
            table[g as usize * m + f as usize] = Some(x);
            fill(edges, table, free, k + 1, leaf);
        }
    }
    table[g as usize * m + f as usize] = None;
}

pub fn is_preorder(n: usize, rel: &[bool]) -> bool {
    (0..n).all(|a| rel[a * n + a])
        && (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| !(rel[a * n + b] && rel[b * n + c]) || rel[a * n + c]))
        })
}

pub fn is_monoid(n: usize, table: &[u32], unit: u32) -> bool {
    let op = |a: u32, b: u32| table[a as usize * n + b as usize];
    let n = n as u32;
    (0..n).all(|a| op(unit, a) == a && op(a, unit) == a)
        && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| op(op(a, b), c) == op(a, op(b, c)))))
}

/// Every monoid structure on `0..n`: multiplication table and unit.
pub fn monoids(n: usize) -> Vec<(Vec<u32>, u32)> {
    let mut out = Vec::new();
    odometer(&vec![n as u32; n * n], |t| {
        for e in 0..n as u32 {
            if is_monoid(n, t, e) {
                out.push((t.to_vec(), e));
            }
        }
    });
    out
}

/// Natural transformations `F ⇒ G`, as their components.
pub fn natural_transformations(
    c: &FinCategory,
    d: &FinCategory,
    f: &FinFunctor,
    g: &FinFunctor,
) -> Vec<Vec<u32>> {
    let choices: Vec<Vec<u32>> = (0..c.object_count())
        .map(|x| {
            (0..d.morphism_count() as u32)
                .filter(|&a| d.dom(a) == f.objects[x] && d.cod(a) == g.objects[x])
                .collect()
        })
        .collect();
    let dims: Vec<u32> = choices.iter().map(|c| c.len() as u32).collect();
    let mut out = Vec::new();
    if c.object_count() == 0 {
        return vec![vec![]];
    }
    odometer(&dims, |t| {
        let alpha: Vec<u32> = t
            .iter()
            .enumerate()
            .map(|(x, &i)| choices[x][i as usize])
            .collect();
        let natural = c.morphisms().iter().enumerate().all(|(u, m)| {
            let u = u as u32;
            d.compose(g.morphisms[u as usize], alpha[m.dom as usize])
                == d.compose(alpha[m.cod as usize], f.morphisms[u as usize])
        });
        if natural {
            out.push(alpha);
        }
    });
    out
}

/// Functors `C -> D` as (object map, morphism map), by brute force.
pub fn functors(c: &FinCategory, d: &FinCategory) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out = Vec::new();
    odometer(&vec![d.object_count() as u32; c.object_count()], |obj| {
        let choices: Vec<Vec<u32>> = c
            .morphisms()
            .iter()
            .map(|m| {
                (0..d.morphism_count() as u32)
                    .filter(|&a| d.dom(a) == obj[m.dom as usize] && d.cod(a) == obj[m.cod as usize])
                    .collect()
            })
            .collect();
        let dims: Vec<u32> = choices.iter().map(|c| c.len() as u32).collect();
        odometer(&dims, |t| {
            let mor: Vec<u32> = t
                .iter()
                .enumerate()
                .map(|(i, &k)| choices[i][k as usize])
                .collect();
            let units = (0..c.object_count() as u32)
                .all(|x| mor[c.identity(x) as usize] == d.identity(obj[x as usize]));
            let composites = c.entries().iter().all(|&(g, f, gf)| {
                d.compose(mor[g as usize], mor[f as usize]) == Some(mor[gf as usize])
            });
            if units && composites {
                out.push((obj.to_vec(), mor));
            }
        });
    });
    out
}

/// Profunctor data over explicit elements `(left object, right object)`:
/// `left[(u, e)] = e·u` and `right[(e, v)] = v·e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pro {
    pub elems: Vec<(u32, u32)>,
    pub left: BTreeMap<(u32, u32), u32>,
    pub right: BTreeMap<(u32, u32), u32>,
}

impl Pro {
    pub fn left(&self, u: u32, e: u32) -> Option<u32> {
        self.left.get(&(u, e)).copied()
    }

    pub fn right(&self, e: u32, v: u32) -> Option<u32> {
        self.right.get(&(e, v)).copied()
    }

    fn over(&self, l: u32, r: u32) -> Vec<u32> {
        (0..self.elems.len() as u32)
            .filter(|&e| self.elems[e as usize] == (l, r))
            .collect()
    }
}

/// Every profunctor structure `C ⇸ D` on the given elements.
pub fn profunctors(c: &FinCategory, d: &FinCategory, elems: &[(u32, u32)]) -> Vec<Pro> {
    let shell = Pro {
        elems: elems.to_vec(),
        left: BTreeMap::new(),
        right: BTreeMap::new(),
    };
    let ne = elems.len() as u32;
    let mut lkeys = Vec::new();
    let mut lchoices = Vec::new();
    for u in 0..c.morphism_count() as u32 {
        for e in 0..ne {
            if c.cod(u) == elems[e as usize].0 {
                lkeys.push((u, e));
                lchoices.push(shell.over(c.dom(u), elems[e as usize].1));
            }
        }
    }
    let mut rkeys = Vec::new();
    let mut rchoices = Vec::new();
    for e in 0..ne {
        for v in 0..d.morphism_count() as u32 {
            if d.dom(v) == elems[e as usize].1 {
                rkeys.push((e, v));
                rchoices.push(shell.over(elems[e as usize].0, d.cod(v)));
            }
        }
    }
    let tables = |keys: &[(u32, u32)],
                  choices: &[Vec<u32>],
                  ok: &dyn Fn(&BTreeMap<(u32, u32), u32>) -> bool| {
        let dims: Vec<u32> = choices.iter().map(|c| c.len() as u32).collect();
        let mut out = Vec::new();
        odometer(&dims, |t| {
            let m: BTreeMap<(u32, u32), u32> = keys
                .iter()
                .zip(t)
                .enumerate()
                .map(|(i, (&k, &j))| (k, choices[i][j as usize]))
                .collect();
            if ok(&m) {
                out.push(m);
            }
        });
        out
    };
    let lefts = tables(&lkeys, &lchoices, &|m| left_laws(c, elems, m));
    let rights = tables(&rkeys, &rchoices, &|m| right_laws(d, elems, m));
    let mut out = Vec::new();
    for l in &lefts {
        for r in &rights {
            if commute(d, l, r) {
                out.push(Pro {
                    elems: elems.to_vec(),
                    left: l.clone(),
                    right: r.clone(),
                });
            }
        }
    }
    out
}

type Table = BTreeMap<(u32, u32), u32>;

fn left_laws(c: &FinCategory, elems: &[(u32, u32)], m: &Table) -> bool {
    let ne = elems.len() as u32;
    (0..ne).all(|e| m.get(&(c.identity(elems[e as usize].0), e)) == Some(&e))
        && c.entries().iter().all(|&(g, f, gf)| {
            // (e·g)·f = e·(g∘f)
            (0..ne).all(|e| match m.get(&(g, e)) {
                Some(&eg) => m.get(&(f, eg)) == m.get(&(gf, e)),
                None => true,
            })
        })
}

fn right_laws(d: &FinCategory, elems: &[(u32, u32)], m: &Table) -> bool {
    let ne = elems.len() as u32;
    (0..ne).all(|e| m.get(&(e, d.identity(elems[e as usize].1))) == Some(&e))
        && d.entries().iter().all(|&(g, f, gf)| {
            // g·(f·e) = (g∘f)·e
            (0..ne).all(|e| match m.get(&(e, f)) {
                Some(&fe) => m.get(&(fe, g)) == m.get(&(e, gf)),
                None => true,
            })
        })
}

fn commute(d: &FinCategory, l: &Table, r: &Table) -> bool {
    l.iter().all(|(&(u, e), &eu)| {
        (0..d.morphism_count() as u32).all(|v| match r.get(&(e, v)) {
            Some(&ve) => r.get(&(eu, v)) == l.get(&(u, ve)),
            None => true,
        })
    })
}

/// Whether `p` satisfies the profunctor laws. Its tables are assumed total
/// and well typed.
pub fn is_profunctor(c: &FinCategory, d: &FinCategory, p: &Pro) -> bool {
    left_laws(c, &p.elems, &p.left)
        && right_laws(d, &p.elems, &p.right)
        && commute(d, &p.left, &p.right)
}

/// Whether a total, well typed composition table is associative and unital.
pub fn is_category(c: &FinCategory, identities: &[u32], entries: &[(u32, u32, u32)]) -> bool {
    let table: BTreeMap<(u32, u32), u32> = entries.iter().map(|&(g, f, gf)| ((g, f), gf)).collect();
    let at = |g: u32, f: u32| table.get(&(g, f)).copied();
    let units = c.morphisms().iter().enumerate().all(|(f, m)| {
        let f = f as u32;
        at(f, identities[m.dom as usize]) == Some(f) && at(identities[m.cod as usize], f) == Some(f)
    });
    units
        && entries.iter().all(|&(g, f, gf)| {
            (0..c.morphism_count() as u32)
                .filter(|&h| c.dom(h) == c.cod(g))
                .all(|h| at(h, gf) == at(h, g).and_then(|hg| at(hg, f)))
        })
}

/// Maps of profunctors `P ⇒ Q` over the identity functors, as element maps.
pub fn profunctor_maps(c: &FinCategory, d: &FinCategory, p: &Pro, q: &Pro) -> Vec<Vec<u32>> {
    let choices: Vec<Vec<u32>> = p.elems.iter().map(|&(l, r)| q.over(l, r)).collect();
    let dims: Vec<u32> = choices.iter().map(|c| c.len() as u32).collect();
    let mut out = Vec::new();
    odometer(&dims, |t| {
        let phi: Vec<u32> = t
            .iter()
            .enumerate()
            .map(|(e, &i)| choices[e][i as usize])
            .collect();
        let ok = (0..p.elems.len() as u32).all(|e| {
            (0..c.morphism_count() as u32).all(|u| match p.left(u, e) {
                Some(eu) => q.left(u, phi[e as usize]) == Some(phi[eu as usize]),
                None => true,
            }) && (0..d.morphism_count() as u32).all(|v| match p.right(e, v) {
                Some(ve) => q.right(phi[e as usize], v) == Some(phi[ve as usize]),
                None => true,
            })
        });
        if ok {
            out.push(phi);
        }
    });
    out
}

/// Balanced families `P ⊗ Q ⇒ R` for `P: C ⇸ D`, `Q: D ⇸ E`, `R: C ⇸ E`:
/// one value per composable pair, equivariant on the outside and balanced
/// over `D`. Returned as value vectors over the pairs in `(p, q)` order.
pub fn balanced_families(
    c: &FinCategory,
    d: &FinCategory,
    e: &FinCategory,
    p: &Pro,
    q: &Pro,
    r: &Pro,
) -> Vec<Vec<u32>> {
    let mut pairs = Vec::new();
    for i in 0..p.elems.len() as u32 {
        for j in 0..q.elems.len() as u32 {
            if p.elems[i as usize].1 == q.elems[j as usize].0 {
                pairs.push((i, j));
            }
        }
    }
    let index = |i: u32, j: u32| pairs.iter().position(|&x| x == (i, j));
    let choices: Vec<Vec<u32>> = pairs
        .iter()
        .map(|&(i, j)| r.over(p.elems[i as usize].0, q.elems[j as usize].1))
        .collect();
    let dims: Vec<u32> = choices.iter().map(|c| c.len() as u32).collect();
    let mut out = Vec::new();
    odometer(&dims, |t| {
        let phi: Vec<u32> = t
            .iter()
            .enumerate()
            .map(|(k, &i)| choices[k][i as usize])
            .collect();
        let val = |i: u32, j: u32| index(i, j).map(|k| phi[k]);
        let ok = pairs.iter().enumerate().all(|(k, &(i, j))| {
            let left_ok = (0..c.morphism_count() as u32).all(|u| match p.left(u, i) {
                Some(iu) => val(iu, j) == r.left(u, phi[k]),
                None => true,
            });
            let right_ok = (0..e.morphism_count() as u32).all(|v| match q.right(j, v) {
                Some(vj) => val(i, vj) == r.right(phi[k], v),
                None => true,
            });
            // w: d -> d' moves i forward and pulls j2 back
            let balanced = (0..d.morphism_count() as u32).all(|w| match p.right(i, w) {
                Some(wi) => (0..q.elems.len() as u32).all(|j2| match q.left(w, j2) {
                    Some(j2w) => val(wi, j2) == val(i, j2w),
                    None => true,
                }),
                None => true,
            });
            left_ok && right_ok && balanced
        });
        if ok {
            out.push(phi);
        }
    });
    out
}
