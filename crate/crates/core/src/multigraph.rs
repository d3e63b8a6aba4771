//! The labelled multigraph produced by chain compression, and extended
//! orientations over it.

use crate::graph::CycleScratch;
use crate::meter::Meter;

/// The input-graph path behind a chain edge.
///
/// `path_nodes` holds input-graph node ids `v_1..v_k` and `path_edges` the
/// input-graph edge indices `e_1..e_h` with `e_i = {v_i, v_{i+1}}`. A
/// `Forward` chain edge is the directed path `v_1 -> v_2 -> .. -> v_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainRecord {
    pub path_nodes: Vec<usize>,
    pub path_edges: Vec<usize>,
}

impl ChainRecord {
    /// Number of input-graph edges on the chain.
    pub fn len(&self) -> usize {
        self.path_edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path_edges.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeKind {
    Simple { g_edge: usize },
    Chain(ChainRecord),
}

/// A multigraph edge between local nodes `a <= b`. `Forward` means `a -> b`;
/// for a chain self-loop it means the chain's recorded traversal sense.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiEdge {
    pub a: usize,
    pub b: usize,
    pub kind: EdgeKind,
}

impl MultiEdge {
    pub fn is_chain(&self) -> bool {
        matches!(self.kind, EdgeKind::Chain(_))
    }

    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }

    pub fn other(&self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }

    /// Input-graph edges represented by this edge.
    pub fn weight(&self) -> usize {
        match &self.kind {
            EdgeKind::Simple { .. } => 1,
            EdgeKind::Chain(c) => c.len(),
        }
    }

    /// `(tail, head)` of the arc this edge becomes in state `s`, or `None`
    /// when broken.
    #[inline]
    pub fn arc(&self, s: EdgeState) -> Option<(usize, usize)> {
        match s {
            EdgeState::Forward => Some((self.a, self.b)),
            EdgeState::Backward => Some((self.b, self.a)),
            EdgeState::Broken => None,
        }
    }
}

/// Labelled multigraph over local node ids `0..node_count`. Local ids follow
/// the increasing order of the input-graph ids they stand for. Self-loops and
/// parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LabeledMultigraph {
    nodes: Vec<usize>,
    edges: Vec<MultiEdge>,
    incidence: Vec<Vec<usize>>,
}

impl LabeledMultigraph {
    /// `nodes` are input-graph ids (ascending); edges refer to positions in
    /// `nodes`. A self-loop appears once in its node's incidence list.
    pub fn new(nodes: Vec<usize>, edges: Vec<MultiEdge>) -> Self {
        debug_assert!(nodes.windows(2).all(|w| w[0] < w[1]));
        let mut incidence = vec![Vec::new(); nodes.len()];
        for (i, e) in edges.iter().enumerate() {
            debug_assert!(e.a <= e.b && e.b < nodes.len());
            incidence[e.a].push(i);
            if !e.is_loop() {
                incidence[e.b].push(i);
            }
        }
        Self {
            nodes,
            edges,
            incidence,
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &MultiEdge {
        &self.edges[e]
    }

    /// Input-graph id of local node `v`.
    pub fn g_node(&self, v: usize) -> usize {
        self.nodes[v]
    }

    pub fn g_nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// Degree counting a self-loop twice.
    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v]
            .iter()
            .map(|&e| if self.edges[e].is_loop() { 2 } else { 1 })
            .sum()
    }

    pub fn chain_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_chain()).count()
    }

    /// Sum of [`MultiEdge::weight`] over all edges.
    pub fn g_edge_count(&self) -> usize {
        self.edges.iter().map(MultiEdge::weight).sum()
    }

    /// Same node set, only the listed edges (kept in the given order).
    pub fn edge_subgraph(&self, keep: &[usize]) -> Self {
        Self::new(
            self.nodes.clone(),
            keep.iter().map(|&e| self.edges[e].clone()).collect(),
        )
    }

    /// Serialises one edge per line as `a b label h`, using input-graph
    /// labels produced by `label`.
    pub fn dump(&self, label: impl Fn(usize) -> u64) -> String {
        let mut out = String::new();
        for e in &self.edges {
            let (kind, h) = match &e.kind {
                EdgeKind::Simple { .. } => ("simple", 1),
                EdgeKind::Chain(c) => ("chain", c.len()),
            };
            out.push_str(&format!(
                "{} {} {kind} {h}\n",
                label(self.nodes[e.a]),
                label(self.nodes[e.b])
            ));
        }
        out
    }
}

/// Per-edge state of an extended orientation. Broken is only valid on chain
/// edges; a directed cycle never traverses a broken edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeState {
    Forward,
    Backward,
    Broken,
}

impl EdgeState {
    pub fn reversed(self) -> Self {
        match self {
            EdgeState::Forward => EdgeState::Backward,
            EdgeState::Backward => EdgeState::Forward,
            EdgeState::Broken => EdgeState::Broken,
        }
    }
}

/// One state per multigraph edge, indexed like the multigraph's edge list.
pub type ExtendedOrientation = Vec<EdgeState>;

/// Arcs of an extended orientation (broken edges dropped).
pub fn oriented_arcs(m: &LabeledMultigraph, states: &[EdgeState]) -> Vec<(usize, usize)> {
    debug_assert_eq!(states.len(), m.edge_count());
    m.edges()
        .iter()
        .zip(states)
        .filter_map(|(e, &s)| e.arc(s))
        .collect()
}

/// True iff the extended orientation has a directed cycle over its
/// non-broken edges. Self-loop arcs are cycles; opposite parallel arcs form
/// a 2-cycle.
pub fn extended_is_cyclic(m: &LabeledMultigraph, states: &[EdgeState]) -> bool {
    extended_is_cyclic_metered(m, states, &Meter::new())
}

pub fn extended_is_cyclic_metered(
    m: &LabeledMultigraph,
    states: &[EdgeState],
    meter: &Meter,
) -> bool {
    let arcs = oriented_arcs(m, states);
    let (cyclic, work) = CycleScratch::default().has_cycle(m.node_count(), &arcs);
    meter.tick(work + states.len() as u64);
    cyclic
}
