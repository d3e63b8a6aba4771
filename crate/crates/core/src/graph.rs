//! Input graphs: representation, edge-list parsing, canonical bit encoding of
//! orientations, and directed-cycle detection.

use std::collections::HashMap;

use crate::bits::OrientationBits;
use crate::error::{Error, Result};

/// A simple undirected graph with dense node ids `0..n`.
///
/// Edges are stored as `(min, max)` pairs sorted lexicographically; an
/// edge's position in that order is its canonical index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    labels: Vec<u64>,
}

impl UndirectedGraph {
    /// Builds a graph over nodes `0..node_count`. Edge order in `edges` is
    /// irrelevant; the canonical order is applied here.
    pub fn from_edges(node_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let labels = (0..node_count as u64).collect();
        Self::with_labels(labels, edges)
    }

    fn with_labels(labels: Vec<u64>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut sorted: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge {u}-{v} out of range for {n} nodes");
            if u == v {
                return Err(Error::SelfLoopInInput { node: labels[u] });
            }
            sorted.push((u.min(v), u.max(v)));
        }
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge {
                u: labels[w[0].0],
                v: labels[w[0].1],
            });
        }
        let mut adjacency = vec![Vec::new(); n];
        for (i, &(u, v)) in sorted.iter().enumerate() {
            adjacency[u].push(i);
            adjacency[v].push(i);
        }
        Ok(Self {
            edges: sorted,
            adjacency,
            labels,
        })
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Incident edge indices of `v`, ascending.
    #[inline]
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn other(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Original label of a dense node id.
    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn component_count(&self) -> usize {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut stack = Vec::new();
        let mut components = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            components += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &e in &self.adjacency[v] {
                    let w = self.other(e, v);
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Arcs of the orientation encoded by `bits`, in canonical edge order.
    pub fn arcs(&self, bits: &OrientationBits) -> Vec<(usize, usize)> {
        assert_eq!(bits.len(), self.edge_count());
        self.edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| if bits.get(i) { (a, b) } else { (b, a) })
            .collect()
    }
}

/// Parses the edge-list format: one `u v` pair per line, with optional
/// `e u v` prefix and an optional `p edge n m` header. Lines starting with
/// `#` or `c` are comments. Node labels are arbitrary non-negative integers
/// and are renumbered densely in increasing order.
pub fn parse_edge_list(text: &str, strict_connected: bool) -> Result<UndirectedGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut raw: Vec<(u64, u64)> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let malformed = |reason: &str| Error::MalformedLine {
            line: line_no,
            reason: reason.to_string(),
        };
        let number = |tok: &str| -> Result<u64> {
            tok.parse::<u64>()
                .map_err(|_| malformed(&format!("expected a non-negative integer, got {tok:?}")))
        };
        match tokens.as_slice() {
            ["p", kind, n, m] => {
                if *kind != "edge" {
                    return Err(malformed(&format!("unsupported problem type {kind:?}")));
                }
                if header.is_some() || !raw.is_empty() {
                    return Err(malformed("header must precede all edges and appear once"));
                }
                header = Some((number(n)? as usize, number(m)? as usize));
            }
            ["p", ..] => return Err(malformed("header must read `p edge <n> <m>`")),
            ["e", u, v] | [u, v] => raw.push((number(u)?, number(v)?)),
            _ => return Err(malformed("expected two node ids")),
        }
    }

    let mut labels: Vec<u64> = raw.iter().flat_map(|&(u, v)| [u, v]).collect();
    labels.sort_unstable();
    labels.dedup();
    if let Some((n, m)) = header {
        if n != labels.len() {
            return Err(Error::HeaderMismatch {
                what: "nodes",
                declared: n,
                found: labels.len(),
            });
        }
        if m != raw.len() {
            return Err(Error::HeaderMismatch {
                what: "edges",
                declared: m,
                found: raw.len(),
            });
        }
    }
    let index: HashMap<u64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let edges: Vec<(usize, usize)> = raw.iter().map(|(u, v)| (index[u], index[v])).collect();
    let graph = UndirectedGraph::with_labels(labels, &edges)?;
    if strict_connected {
        let components = graph.component_count();
        if components > 1 {
            return Err(Error::Disconnected { components });
        }
    }
    Ok(graph)
}

/// Reusable buffers for iterative three-colour depth-first search.
#[derive(Debug, Default)]
pub struct CycleScratch {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    color: Vec<u8>,
    stack: Vec<(usize, usize)>,
}

const WHITE: u8 = 0;
const GREY: u8 = 1;
const BLACK: u8 = 2;

impl CycleScratch {
    /// Same contract as [`digraph_has_cycle`]; returns the verdict and the
    /// number of arcs plus nodes examined.
    pub fn has_cycle(&mut self, n: usize, arcs: &[(usize, usize)]) -> (bool, u64) {
        self.offsets.clear();
        self.offsets.resize(n + 1, 0);
        for &(u, v) in arcs {
            assert!(u < n && v < n, "arc {u}->{v} out of range for {n} nodes");
            self.offsets[u + 1] += 1;
        }
        for i in 0..n {
            self.offsets[i + 1] += self.offsets[i];
        }
        self.targets.clear();
        self.targets.resize(arcs.len(), 0);
        let mut fill = self.offsets.clone();
        for &(u, v) in arcs {
            self.targets[fill[u]] = v;
            fill[u] += 1;
        }

        self.color.clear();
        self.color.resize(n, WHITE);
        let mut work = n as u64;
        for s in 0..n {
            if self.color[s] != WHITE {
                continue;
            }
            self.color[s] = GREY;
            self.stack.clear();
            self.stack.push((s, self.offsets[s]));
            while let Some(&mut (v, ref mut next)) = self.stack.last_mut() {
                if *next == self.offsets[v + 1] {
                    self.color[v] = BLACK;
                    self.stack.pop();
                    continue;
                }
                let w = self.targets[*next];
                *next += 1;
                work += 1;
                match self.color[w] {
                    GREY => return (true, work),
                    WHITE => {
                        self.color[w] = GREY;
                        let start = self.offsets[w];
                        self.stack.push((w, start));
                    }
                    _ => {}
                }
            }
        }
        (false, work)
    }
}

/// True iff the directed graph on `n` nodes with the given arcs has a
/// directed cycle. A self-loop arc is a cycle.
pub fn digraph_has_cycle(n: usize, arcs: &[(usize, usize)]) -> bool {
    CycleScratch::default().has_cycle(n, arcs).0
}

/// Encodes a direction assignment (one arc per edge, any order) as
/// [`OrientationBits`].
pub fn canonical_bits(g: &UndirectedGraph, arcs: &[(usize, usize)]) -> Result<OrientationBits> {
    let m = g.edge_count();
    let mut bits = OrientationBits::zeros(m);
    let mut covered = vec![false; m];
    for &(u, v) in arcs {
        let e = match (u < g.node_count() && v < g.node_count())
            .then(|| g.edge_index(u, v))
            .flatten()
        {
            Some(e) if !covered[e] => e,
            _ => return Err(Error::UnknownArc { u, v }),
        };
        covered[e] = true;
        bits.set(e, u < v);
    }
    if let Some(edge) = covered.iter().position(|c| !c) {
        return Err(Error::IncompleteAssignment { edge });
    }
    Ok(bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> UndirectedGraph {
        parse_edge_list("0 1\n1 2\n0 2", true).unwrap()
    }

    #[test]
    fn parses_triangle_in_canonical_order() {
        let g = triangle();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(
            parse_edge_list("0 0", false),
            Err(Error::SelfLoopInInput { node: 0 })
        );
    }

    #[test]
    fn rejects_duplicates_either_direction() {
        assert_eq!(
            parse_edge_list("0 1\n1 0", false),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        );
    }

    #[test]
    fn disconnected_only_under_strict() {
        assert_eq!(
            parse_edge_list("0 1\n2 3", true),
            Err(Error::Disconnected { components: 2 })
        );
        assert!(parse_edge_list("0 1\n2 3", false).is_ok());
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(
            parse_edge_list("0 1\n1", false),
            Err(Error::MalformedLine { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 -1", false),
            Err(Error::MalformedLine { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1 2", false),
            Err(Error::MalformedLine { .. })
        ));
    }

    #[test]
    fn comments_blank_lines_and_header() {
        let text = "c dimacs style\n# hash comment\n\np edge 3 3\ne 1 2\n2 3\ne 1 3\n";
        let g = parse_edge_list(text, true).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.labels(), &[1, 2, 3]);
        assert_eq!(
            parse_edge_list("p edge 3 2\n0 1\n1 2\n0 2", false),
            Err(Error::HeaderMismatch {
                what: "edges",
                declared: 2,
                found: 3
            })
        );
        assert!(matches!(
            parse_edge_list("0 1\np edge 2 1", false),
            Err(Error::MalformedLine { line: 2, .. })
        ));
    }

    #[test]
    fn sparse_labels_are_renumbered() {
        let g = parse_edge_list("10 30\n30 20\n20 10", true).unwrap();
        assert_eq!(g.labels(), &[10, 20, 30]);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn cycle_detection_examples() {
        assert!(digraph_has_cycle(3, &[(0, 1), (1, 2), (2, 0)]));
        assert!(!digraph_has_cycle(3, &[(0, 1), (0, 2), (1, 2)]));
        assert!(!digraph_has_cycle(3, &[]));
        assert!(digraph_has_cycle(1, &[(0, 0)]));
        assert!(digraph_has_cycle(2, &[(0, 1), (1, 0)]));
    }

    /// Kahn's algorithm: a topological order exists iff there is no cycle.
    fn has_topological_order(n: usize, arcs: &[(usize, usize)]) -> bool {
        let mut indeg = vec![0; n];
        for &(_, v) in arcs {
            indeg[v] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut placed = 0;
        while let Some(v) = ready.pop() {
            placed += 1;
            for &(a, b) in arcs {
                if a == v {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        ready.push(b);
                    }
                }
            }
        }
        placed == n
    }

    #[test]
    fn cycle_detection_agrees_with_topological_sort_up_to_four_nodes() {
        // every digraph on <= 4 labelled nodes, loops included
        for n in 0..=4usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let arcs: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                assert_eq!(
                    digraph_has_cycle(n, &arcs),
                    !has_topological_order(n, &arcs),
                    "n={n} arcs={arcs:?}"
                );
            }
        }
    }

    #[test]
    fn cycle_detection_agrees_with_topological_sort_on_five_node_loopless_digraphs() {
        let n = 5;
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|(u, v)| u != v)
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let arcs: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            assert_eq!(
                digraph_has_cycle(n, &arcs),
                !has_topological_order(n, &arcs)
            );
        }
    }

    #[test]
    fn canonical_bits_examples() {
        let g = triangle();
        let b = canonical_bits(&g, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(b.to_string(), "111");
        let b = canonical_bits(&g, &[(1, 0), (2, 0), (2, 1)]).unwrap();
        assert_eq!(b.to_string(), "000");
        assert_eq!(
            canonical_bits(&g, &[(1, 0), (2, 0)]),
            Err(Error::IncompleteAssignment { edge: 2 })
        );
        assert_eq!(
            canonical_bits(&g, &[(1, 0), (0, 1), (2, 1)]),
            Err(Error::UnknownArc { u: 0, v: 1 })
        );
    }

    #[test]
    fn canonical_bits_is_a_bijection_on_the_triangle() {
        let g = triangle();
        let mut seen = std::collections::HashSet::new();
        for mask in 0..8u32 {
            let x = OrientationBits::from_bools((0..3).map(|i| mask >> i & 1 == 1));
            let arcs = g.arcs(&x);
            assert_eq!(canonical_bits(&g, &arcs).unwrap(), x);
            seen.insert(arcs);
        }
        assert_eq!(seen.len(), 8);
    }
}
