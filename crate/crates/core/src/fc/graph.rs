//! Directed graphs and their free-category paths, which index the sources of
//! 2-cells.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    pub nodes: usize,
    /// `(source, target)` node pairs.
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(nodes: usize, edges: Vec<(usize, usize)>) -> Self {
        Graph { nodes, edges }
    }
}

/// A node-anchored edge sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FreePath {
    pub start: usize,
    pub edges: Vec<usize>,
}

impl FreePath {
    pub fn end(&self, g: &Graph) -> usize {
        self.edges.last().map_or(self.start, |&e| g.edges[e].1)
    }
}

/// Every path of length `0..=max_len`, shortest first; within a length,
/// ordered by start node and then edge indices.
pub fn free_paths(g: &Graph, max_len: usize) -> Vec<FreePath> {
    let mut out_edges = vec![Vec::new(); g.nodes];
    for (i, &(s, _)) in g.edges.iter().enumerate() {
        out_edges[s].push(i);
    }
    let mut layer: Vec<FreePath> = (0..g.nodes)
        .map(|start| FreePath {
            start,
            edges: Vec::new(),
        })
        .collect();
    let mut all = layer.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &layer {
            for &e in &out_edges[p.end(g)] {
                let mut edges = p.edges.clone();
                edges.push(e);
                next.push(FreePath {
                    start: p.start,
                    edges,
                });
            }
        }
        if next.is_empty() {
            break;
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}
