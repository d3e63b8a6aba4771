//! Fixture graphs shared by the benchmarks.

use cyclori::{generators, UndirectedGraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn complete(n: usize) -> UndirectedGraph {
    generators::complete(n)
}

/// Random connected cubic graph, fixed per `(n, seed)`.
pub fn cubic(n: usize, seed: u64) -> UndirectedGraph {
    generators::random_cubic(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// A tree plus one edge closing a triangle: few solutions, many candidates.
pub fn tree_plus_edge(tail: usize) -> UndirectedGraph {
    generators::triangle_with_tail(tail)
}
