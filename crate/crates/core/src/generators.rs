//! Graph families used by tests, benchmarks and the CLI examples.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::UndirectedGraph;

fn build(n: usize, edges: &[(usize, usize)]) -> UndirectedGraph {
    UndirectedGraph::from_edges(n, edges).expect("generator produced a simple graph")
}

pub fn path(n: usize) -> UndirectedGraph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    build(n, &edges)
}

pub fn cycle(n: usize) -> UndirectedGraph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    build(n, &edges)
}

pub fn complete(n: usize) -> UndirectedGraph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    build(n, &edges)
}

/// Cycle on `k` nodes with one pendant node attached to every cycle node.
pub fn necklace(k: usize) -> UndirectedGraph {
    let mut edges: Vec<_> = (0..k).map(|v| (v, (v + 1) % k)).collect();
    edges.extend((0..k).map(|v| (v, k + v)));
    build(2 * k, &edges)
}

pub fn petersen() -> UndirectedGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &edges)
}

/// Nodes 0 and 1 joined by `paths` internally disjoint paths of `len` edges.
pub fn theta(paths: usize, len: usize) -> UndirectedGraph {
    assert!(len >= 2 || paths == 1);
    let mut edges = Vec::new();
    let mut next = 2;
    for _ in 0..paths {
        let mut prev = 0;
        for _ in 0..len - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    build(next, &edges)
}

/// A triangle on nodes 0, 1, 2 with a path of `tail` edges hanging off node
/// 2: a tree plus one edge.
pub fn triangle_with_tail(tail: usize) -> UndirectedGraph {
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    edges.extend((0..tail).map(|i| (if i == 0 { 2 } else { 2 + i }, 3 + i)));
    build(3 + tail, &edges)
}

/// Uniform-ish random tree on `n` nodes (random attachment).
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> UndirectedGraph {
    let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    build(n, &edges)
}

/// Random connected graph: a random tree plus each remaining pair with
/// probability `p`.
pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> UndirectedGraph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let tree: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    build(n, &edges)
}

/// Random connected simple cubic graph on `n` nodes (`n` even, at least 4),
/// by the pairing model with rejection.
pub fn random_cubic<R: Rng>(n: usize, rng: &mut R) -> UndirectedGraph {
    assert!(
        n >= 4 && n.is_multiple_of(2),
        "cubic graphs need an even node count >= 4"
    );
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    'retry: loop {
        points.shuffle(rng);
        let mut edges = Vec::with_capacity(3 * n / 2);
        for pair in points.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v {
                continue 'retry;
            }
            edges.push((u.min(v), u.max(v)));
        }
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let g = build(n, &edges);
        if g.is_connected() {
            return g;
        }
    }
}

/// Every labelled graph on `n` nodes, as edge subsets of `K_n` in mask order.
pub fn all_labeled(n: usize) -> impl Iterator<Item = UndirectedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 32);
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        build(n, &edges)
    })
}
