//! Dead-end removal and chain compression.
//!
//! Pendant edges never lie on a cycle, so they are peeled off and doubled
//! back in at expansion time. Maximal paths through degree-2 nodes collapse
//! into single chain edges of the multigraph.

use std::collections::VecDeque;

use crate::graph::UndirectedGraph;
use crate::meter::Meter;
use crate::multigraph::{ChainRecord, EdgeKind, LabeledMultigraph, MultiEdge};

/// Edges removed as pendant edges, in removal order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DeadEndRecord {
    pub removed_edges: Vec<usize>,
}

/// Edge-induced subgraph of the input graph left after dead-end removal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrunedGraph {
    /// Surviving input-graph edge indices, ascending.
    pub edges: Vec<usize>,
    /// Degree of every input-graph node in the pruned graph.
    pub degree: Vec<usize>,
}

impl PrunedGraph {
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn min_positive_degree(&self) -> Option<usize> {
        self.degree.iter().copied().filter(|&d| d > 0).min()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// No edges survive: the input is a forest and has no cyclic orientation.
    Empty,
    /// Every surviving node has degree 2.
    PureCycle,
    General,
}

/// Repeatedly deletes degree-1 nodes together with their edge.
pub fn remove_dead_ends(g: &UndirectedGraph) -> (PrunedGraph, DeadEndRecord) {
    let n = g.node_count();
    let mut alive = vec![true; g.edge_count()];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut removed = Vec::new();
    while let Some(v) = queue.pop_front() {
        if degree[v] != 1 {
            continue;
        }
        let e = *g
            .incident(v)
            .iter()
            .find(|&&e| alive[e])
            .expect("degree-1 node has a live edge");
        alive[e] = false;
        removed.push(e);
        degree[v] = 0;
        let w = g.other(e, v);
        degree[w] -= 1;
        if degree[w] == 1 {
            queue.push_back(w);
        }
    }
    let edges = (0..g.edge_count()).filter(|&e| alive[e]).collect();
    (
        PrunedGraph { edges, degree },
        DeadEndRecord {
            removed_edges: removed,
        },
    )
}

pub fn classify_shape(pruned: &PrunedGraph) -> Shape {
    if pruned.is_empty() {
        Shape::Empty
    } else if pruned.degree.iter().all(|&d| d == 0 || d == 2) {
        Shape::PureCycle
    } else {
        Shape::General
    }
}

/// Replaces every maximal path through degree-2 nodes by one chain edge.
///
/// Multigraph nodes are the pruned nodes of degree at least 3. A component
/// made only of degree-2 nodes (the whole graph, in the pure-cycle shape)
/// keeps its smallest node and becomes a chain self-loop on it.
///
/// Edges come out sorted by `(a, b, first input edge)`; chain paths start at
/// the lower endpoint, and a chain self-loop is traversed towards its smaller
/// neighbour first.
pub fn compress_chains(g: &UndirectedGraph, pruned: &PrunedGraph) -> LabeledMultigraph {
    let n = g.node_count();
    let mut alive = vec![false; g.edge_count()];
    for &e in &pruned.edges {
        alive[e] = true;
    }
    let mut is_node: Vec<bool> = pruned.degree.iter().map(|&d| d >= 3).collect();

    // anchors for components with no branching node
    let mut seen = vec![false; n];
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] || pruned.degree[s] == 0 {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut smallest = s;
        let mut branching = false;
        while let Some(v) = stack.pop() {
            branching |= is_node[v];
            smallest = smallest.min(v);
            for &e in g.incident(v) {
                let w = g.other(e, v);
                if alive[e] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if !branching {
            is_node[smallest] = true;
        }
    }

    let nodes: Vec<usize> = (0..n).filter(|&v| is_node[v]).collect();
    let mut local = vec![usize::MAX; n];
    for (i, &v) in nodes.iter().enumerate() {
        local[v] = i;
    }

    let mut used = vec![false; g.edge_count()];
    let mut edges: Vec<(usize, MultiEdge)> = Vec::new();
    for &start in &nodes {
        for &first in g.incident(start) {
            if !alive[first] || used[first] {
                continue;
            }
            let mut path_nodes = vec![start];
            let mut path_edges = Vec::new();
            let mut cur = start;
            let mut e = first;
            loop {
                used[e] = true;
                path_edges.push(e);
                let next = g.other(e, cur);
                path_nodes.push(next);
                if is_node[next] {
                    break;
                }
                e = *g
                    .incident(next)
                    .iter()
                    .find(|&&f| alive[f] && f != e)
                    .expect("degree-2 node continues the chain");
                cur = next;
            }
            let (first_node, last_node) = (path_nodes[0], *path_nodes.last().unwrap());
            let k = path_nodes.len();
            let reverse = if first_node == last_node {
                path_nodes[1] > path_nodes[k - 2]
            } else {
                first_node > last_node
            };
            if reverse {
                path_nodes.reverse();
                path_edges.reverse();
            }
            let a = local[path_nodes[0]];
            let b = local[*path_nodes.last().unwrap()];
            let key = *path_edges.iter().min().unwrap();
            let kind = if path_edges.len() == 1 {
                EdgeKind::Simple {
                    g_edge: path_edges[0],
                }
            } else {
                EdgeKind::Chain(ChainRecord {
                    path_nodes,
                    path_edges,
                })
            };
            edges.push((key, MultiEdge { a, b, kind }));
        }
    }
    edges.sort_by_key(|(key, e)| (e.a, e.b, *key));
    LabeledMultigraph::new(nodes, edges.into_iter().map(|(_, e)| e).collect())
}

/// Everything preprocessing learns about an input graph.
#[derive(Debug, Clone)]
pub struct Prepared {
    pub graph: UndirectedGraph,
    pub dead_ends: DeadEndRecord,
    pub pruned: PrunedGraph,
    pub shape: Shape,
    pub multigraph: LabeledMultigraph,
}

pub fn prepare(g: &UndirectedGraph) -> Prepared {
    prepare_metered(g, &Meter::new())
}

pub fn prepare_metered(g: &UndirectedGraph, meter: &Meter) -> Prepared {
    let (pruned, dead_ends) = remove_dead_ends(g);
    let shape = classify_shape(&pruned);
    let multigraph = if shape == Shape::Empty {
        LabeledMultigraph::default()
    } else {
        compress_chains(g, &pruned)
    };
    // both passes touch every edge a bounded number of times
    meter.tick(4 * g.edge_count() as u64 + 2 * g.node_count() as u64);
    Prepared {
        graph: g.clone(),
        dead_ends,
        pruned,
        shape,
        multigraph,
    }
}
