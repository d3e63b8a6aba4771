//! Finding a short chordless cycle (the hole) in the compressed multigraph.
//!
//! Cycle length counts multigraph edges: a self-loop has length 1, a pair of
//! parallel edges length 2. When the multigraph has minimum degree 3 its
//! girth is at most `2 * ceil(log2 |V|)`, so the hole stays logarithmic.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::meter::Meter;
use crate::multigraph::LabeledMultigraph;

/// A cycle `c_1 .. c_h` of the multigraph; `edges[j]` joins `nodes[j]` and
/// `nodes[(j + 1) % h]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hole {
    pub nodes: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Hole {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks that this is a cycle of `m` with distinct nodes and edges.
    pub fn is_cycle_of(&self, m: &LabeledMultigraph) -> bool {
        let h = self.len();
        if h == 0 || self.nodes.len() != h {
            return false;
        }
        let mut nodes = self.nodes.clone();
        nodes.sort_unstable();
        nodes.dedup();
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        edges.dedup();
        if nodes.len() != h || edges.len() != h {
            return false;
        }
        (0..h).all(|j| {
            let (u, v) = (self.nodes[j], self.nodes[(j + 1) % h]);
            let e = m.edge(self.edges[j]);
            (e.a == u && e.b == v) || (e.a == v && e.b == u)
        })
    }

    /// True when no edge outside the hole joins two hole nodes. Holes of
    /// length 1 and 2 are chordless by convention.
    pub fn is_chordless(&self, m: &LabeledMultigraph) -> bool {
        self.len() <= 2 || find_chord(m, self, &Meter::new()).is_none()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HoleStrategy {
    /// Full breadth-first search from every node; returns a girth cycle.
    Exact,
    /// Truncated searches returning girth or girth + 1, then chord removal.
    #[default]
    Fast,
    /// One search from a node `u` on a cycle, then searches only from nodes
    /// off the shortest cycle through `u`.
    Amortized,
}

impl fmt::Display for HoleStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HoleStrategy::Exact => "exact",
            HoleStrategy::Fast => "fast",
            HoleStrategy::Amortized => "amortized",
        })
    }
}

impl FromStr for HoleStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exact" => Ok(HoleStrategy::Exact),
            "fast" => Ok(HoleStrategy::Fast),
            "amortized" => Ok(HoleStrategy::Amortized),
            other => Err(format!("unknown hole strategy {other:?}")),
        }
    }
}

pub fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

/// Largest hole length allowed on a minimum-degree-3 multigraph with
/// `nodes` nodes.
pub fn hole_length_bound(nodes: usize) -> usize {
    2 * ceil_log2(nodes) + 1
}

const NONE: usize = usize::MAX;

/// Breadth-first search state reused across roots.
#[derive(Debug, Default)]
struct Bfs {
    dist: Vec<usize>,
    parent_edge: Vec<usize>,
    branch: Vec<usize>,
    queue: Vec<usize>,
}

impl Bfs {
    fn reset(&mut self, n: usize) {
        self.dist.clear();
        self.dist.resize(n, NONE);
        self.parent_edge.clear();
        self.parent_edge.resize(n, NONE);
        self.branch.clear();
        self.branch.resize(n, NONE);
        self.queue.clear();
    }

    /// Walks `x` and `y` up the search tree to their common ancestor and
    /// returns the cycle closed by edge `e = {x, y}`.
    fn cycle_through(&self, m: &LabeledMultigraph, x: usize, y: usize, e: usize) -> Hole {
        let parent = |v: usize| m.edge(self.parent_edge[v]).other(v);
        let (mut xs, mut xe) = (vec![x], Vec::new());
        let (mut ys, mut ye) = (vec![y], Vec::new());
        let (mut a, mut b) = (x, y);
        while self.dist[a] > self.dist[b] {
            xe.push(self.parent_edge[a]);
            a = parent(a);
            xs.push(a);
        }
        while self.dist[b] > self.dist[a] {
            ye.push(self.parent_edge[b]);
            b = parent(b);
            ys.push(b);
        }
        while a != b {
            xe.push(self.parent_edge[a]);
            a = parent(a);
            xs.push(a);
            ye.push(self.parent_edge[b]);
            b = parent(b);
            ys.push(b);
        }
        ys.pop();
        xs.reverse();
        xe.reverse();
        let mut nodes = xs;
        nodes.extend(ys);
        let mut edges = xe;
        edges.push(e);
        edges.extend(ye);
        Hole { nodes, edges }
    }

    /// Shortest cycle through `root`, scanning the whole component.
    fn shortest_through(
        &mut self,
        m: &LabeledMultigraph,
        root: usize,
        meter: &Meter,
    ) -> Option<Hole> {
        self.reset(m.node_count());
        self.dist[root] = 0;
        self.queue.push(root);
        let mut best: Option<(usize, usize, usize, usize)> = None;
        let mut head = 0;
        let mut work = 0u64;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            work += 1;
            for &e in m.incident(x) {
                work += 1;
                let edge = m.edge(e);
                if edge.is_loop() {
                    if x == root && best.is_none_or(|b| b.0 > 1) {
                        best = Some((1, x, x, e));
                    }
                    continue;
                }
                if e == self.parent_edge[x] {
                    continue;
                }
                let y = edge.other(x);
                if self.dist[y] == NONE {
                    self.dist[y] = self.dist[x] + 1;
                    self.parent_edge[y] = e;
                    self.branch[y] = if x == root { y } else { self.branch[x] };
                    self.queue.push(y);
                } else if self.branch[x] != self.branch[y] {
                    let len = self.dist[x] + self.dist[y] + 1;
                    if best.is_none_or(|b| b.0 > len) {
                        best = Some((len, x, y, e));
                    }
                }
            }
        }
        meter.add_hole_search(work);
        best.map(|(len, x, y, e)| {
            if len == 1 {
                Hole {
                    nodes: vec![x],
                    edges: vec![e],
                }
            } else {
                self.cycle_through(m, x, y, e)
            }
        })
    }

    /// Breadth-first search from `root` that stops at the first non-tree
    /// edge and returns the cycle it closes.
    fn first_cycle(&mut self, m: &LabeledMultigraph, root: usize, meter: &Meter) -> Option<Hole> {
        self.reset(m.node_count());
        self.dist[root] = 0;
        self.queue.push(root);
        let mut head = 0;
        let mut work = 0u64;
        let mut found = None;
        'search: while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            work += 1;
            for &e in m.incident(x) {
                work += 1;
                let edge = m.edge(e);
                if edge.is_loop() {
                    found = Some(Hole {
                        nodes: vec![x],
                        edges: vec![e],
                    });
                    break 'search;
                }
                if e == self.parent_edge[x] {
                    continue;
                }
                let y = edge.other(x);
                if self.dist[y] == NONE {
                    self.dist[y] = self.dist[x] + 1;
                    self.parent_edge[y] = e;
                    self.queue.push(y);
                } else {
                    found = Some(self.cycle_through(m, x, y, e));
                    break 'search;
                }
            }
        }
        meter.add_hole_search(work);
        found
    }
}

/// Shortest cycle of `m` through `root`, if any.
pub fn shortest_cycle_through(m: &LabeledMultigraph, root: usize, meter: &Meter) -> Option<Hole> {
    Bfs::default().shortest_through(m, root, meter)
}

/// Some node lying on a cycle: node 0 if it does, else an endpoint of the
/// first non-tree edge met by a depth-first search.
pub fn node_on_cycle(m: &LabeledMultigraph, meter: &Meter) -> Option<usize> {
    let n = m.node_count();
    let mut parent_edge = vec![NONE; n];
    let mut seen = vec![false; n];
    let mut stack = Vec::new();
    let mut work = 0u64;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        while let Some(x) = stack.pop() {
            work += 1;
            for &e in m.incident(x) {
                work += 1;
                if e == parent_edge[x] {
                    continue;
                }
                let y = m.edge(e).other(x);
                if seen[y] {
                    meter.add_hole_search(work);
                    return Some(x);
                }
                seen[y] = true;
                parent_edge[y] = e;
                stack.push(y);
            }
        }
    }
    meter.add_hole_search(work);
    None
}

/// A self-loop, else a parallel pair: the shortest possible cycles.
fn degenerate_cycle(m: &LabeledMultigraph, meter: &Meter) -> Option<Hole> {
    meter.add_hole_search(m.edge_count() as u64);
    if let Some(e) = m.edges().iter().position(|e| e.is_loop()) {
        return Some(Hole {
            nodes: vec![m.edge(e).a],
            edges: vec![e],
        });
    }
    let mut first: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, e) in m.edges().iter().enumerate() {
        if let Some(&j) = first.get(&(e.a, e.b)) {
            return Some(Hole {
                nodes: vec![e.a, e.b],
                edges: vec![j, i],
            });
        }
        first.insert((e.a, e.b), i);
    }
    None
}

/// Some chord `(i, k, edge)` with `i < k` hole positions.
fn find_chord(m: &LabeledMultigraph, hole: &Hole, meter: &Meter) -> Option<(usize, usize, usize)> {
    let mut pos: HashMap<usize, usize> = HashMap::with_capacity(hole.len());
    for (i, &v) in hole.nodes.iter().enumerate() {
        pos.insert(v, i);
    }
    let mut work = 0u64;
    let mut chord = None;
    'scan: for (i, &v) in hole.nodes.iter().enumerate() {
        for &e in m.incident(v) {
            work += 1;
            if hole.edges.contains(&e) {
                continue;
            }
            if let Some(&k) = pos.get(&m.edge(e).other(v)) {
                chord = Some((i.min(k), i.max(k), e));
                break 'scan;
            }
        }
    }
    meter.add_hole_search(work);
    chord
}

/// Replaces the hole by the shorter side of a chord until none is left.
fn remove_chords(m: &LabeledMultigraph, mut hole: Hole, meter: &Meter) -> Hole {
    while hole.len() > 2 {
        let Some((i, k, chord)) = find_chord(m, &hole, meter) else {
            break;
        };
        let h = hole.len();
        hole = if k - i < h - (k - i) {
            let mut edges = hole.edges[i..k].to_vec();
            edges.push(chord);
            Hole {
                nodes: hole.nodes[i..=k].to_vec(),
                edges,
            }
        } else {
            let mut nodes = hole.nodes[k..].to_vec();
            nodes.extend_from_slice(&hole.nodes[..=i]);
            let mut edges = hole.edges[k..].to_vec();
            edges.extend_from_slice(&hole.edges[..i]);
            edges.push(chord);
            Hole { nodes, edges }
        };
    }
    hole
}

#[derive(Debug)]
enum Phase {
    Start,
    Roots,
    Finish,
    Done,
}

/// Resumable hole search. Each [`HoleSearch::step`] does a bounded amount of
/// work: at most one breadth-first search.
#[derive(Debug)]
pub struct HoleSearch {
    strategy: HoleStrategy,
    phase: Phase,
    bfs: Bfs,
    next_root: usize,
    skip: Vec<bool>,
    best: Option<Hole>,
}

impl HoleSearch {
    pub fn new(strategy: HoleStrategy) -> Self {
        Self {
            strategy,
            phase: Phase::Start,
            bfs: Bfs::default(),
            next_root: 0,
            skip: Vec::new(),
            best: None,
        }
    }

    fn offer(&mut self, candidate: Option<Hole>) {
        if let Some(c) = candidate {
            if self.best.as_ref().is_none_or(|b| c.len() < b.len()) {
                self.best = Some(c);
            }
        }
    }

    /// Advances the search; `Some` once it has finished.
    pub fn step(&mut self, m: &LabeledMultigraph, meter: &Meter) -> Option<Result<Hole>> {
        match self.phase {
            Phase::Start => {
                if let Some(h) = degenerate_cycle(m, meter) {
                    self.phase = Phase::Done;
                    return Some(Ok(h));
                }
                self.skip = vec![false; m.node_count()];
                if self.strategy == HoleStrategy::Amortized {
                    let through_first = (m.node_count() > 0)
                        .then(|| self.bfs.shortest_through(m, 0, meter))
                        .flatten();
                    let c_u = through_first.or_else(|| {
                        node_on_cycle(m, meter).and_then(|u| self.bfs.shortest_through(m, u, meter))
                    });
                    if let Some(c) = &c_u {
                        for &v in &c.nodes {
                            self.skip[v] = true;
                        }
                    }
                    self.offer(c_u);
                }
                self.phase = Phase::Roots;
                None
            }
            Phase::Roots => {
                while self.next_root < m.node_count() && self.skip[self.next_root] {
                    self.next_root += 1;
                }
                if self.next_root == m.node_count() {
                    self.phase = Phase::Finish;
                    return None;
                }
                let root = self.next_root;
                self.next_root += 1;
                let candidate = match self.strategy {
                    HoleStrategy::Fast => self.bfs.first_cycle(m, root, meter),
                    HoleStrategy::Exact | HoleStrategy::Amortized => {
                        self.bfs.shortest_through(m, root, meter)
                    }
                };
                self.offer(candidate);
                None
            }
            Phase::Finish => {
                self.phase = Phase::Done;
                Some(match self.best.take() {
                    None => Err(Error::AcyclicMultigraph),
                    Some(h) if self.strategy == HoleStrategy::Fast => {
                        Ok(remove_chords(m, h, meter))
                    }
                    Some(h) => Ok(h),
                })
            }
            Phase::Done => Some(Err(Error::AcyclicMultigraph)),
        }
    }
}

pub fn find_log_hole(m: &LabeledMultigraph, strategy: HoleStrategy) -> Result<Hole> {
    find_log_hole_metered(m, strategy, &Meter::new())
}

pub fn find_log_hole_metered(
    m: &LabeledMultigraph,
    strategy: HoleStrategy,
    meter: &Meter,
) -> Result<Hole> {
    let mut search = HoleSearch::new(strategy);
    loop {
        if let Some(result) = search.step(m, meter) {
            return result;
        }
    }
}

/// The multigraph with the hole's edges deleted, and for each remaining edge
/// its index in the original multigraph.
#[derive(Debug, Clone)]
pub struct Residual {
    pub graph: LabeledMultigraph,
    pub origin: Vec<usize>,
}

pub fn remove_hole(m: &LabeledMultigraph, hole: &Hole) -> Residual {
    let mut in_hole = vec![false; m.edge_count()];
    for &e in &hole.edges {
        in_hole[e] = true;
    }
    let origin: Vec<usize> = (0..m.edge_count()).filter(|&e| !in_hole[e]).collect();
    Residual {
        graph: m.edge_subgraph(&origin),
        origin,
    }
}
