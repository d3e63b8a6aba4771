//! From extended cyclic orientations of the multigraph back to cyclic
//! orientations of the input graph.

use std::rc::Rc;

use crate::bits::OrientationBits;
use crate::error::{Error, Result};
use crate::meter::Meter;
use crate::multigraph::{EdgeKind, EdgeState};
use crate::preprocess::Prepared;

/// Binary counter over `h` path edges (`true` = along the path, edge 0 the
/// least significant) that skips the two directed paths.
#[derive(Debug, Clone)]
struct BrokenCounter {
    bits: Vec<bool>,
}

impl BrokenCounter {
    fn first(h: usize) -> Self {
        let mut bits = vec![false; h];
        bits[0] = true;
        Self { bits }
    }

    fn reset(&mut self) {
        self.bits.fill(false);
        self.bits[0] = true;
    }

    /// `false` when the counter wrapped back to its first pattern.
    fn increment(&mut self) -> bool {
        for b in self.bits.iter_mut() {
            *b = !*b;
            if *b {
                break;
            }
        }
        if self.bits.iter().all(|&b| b) {
            self.reset();
            return false;
        }
        true
    }
}

/// The `2^h - 2` ways of orienting a path of `h` edges as neither directed
/// path, in binary counter order. `true` means along the path.
pub fn broken_chain_patterns(h: usize) -> Result<impl Iterator<Item = Vec<bool>>> {
    if h < 2 {
        return Err(Error::InvalidChainLength(h));
    }
    let mut counter = BrokenCounter::first(h);
    let mut done = false;
    Ok(std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = counter.bits.clone();
        done = !counter.increment();
        Some(out)
    }))
}

/// For each multigraph edge, its input-graph edges and the bit each takes
/// when the edge is oriented forward; plus the dead-end edges.
#[derive(Debug, Clone)]
pub struct ExpansionPlan {
    edge_count: usize,
    per_edge: Vec<Vec<(usize, bool)>>,
    dead_ends: Vec<usize>,
}

impl ExpansionPlan {
    pub fn new(p: &Prepared) -> Self {
        let g = &p.graph;
        let m = &p.multigraph;
        let per_edge = m
            .edges()
            .iter()
            .map(|e| match &e.kind {
                EdgeKind::Simple { g_edge } => {
                    let tail = m.g_node(e.a);
                    vec![(*g_edge, g.edge(*g_edge).0 == tail)]
                }
                EdgeKind::Chain(c) => c
                    .path_edges
                    .iter()
                    .enumerate()
                    .map(|(i, &ge)| (ge, c.path_nodes[i] < c.path_nodes[i + 1]))
                    .collect(),
            })
            .collect();
        Self {
            edge_count: g.edge_count(),
            per_edge,
            dead_ends: p.dead_ends.removed_edges.clone(),
        }
    }

    /// Input-graph edges of multigraph edge `e` with their bits when `e` is
    /// directed forward (or backward).
    pub(crate) fn directed_bits(
        &self,
        e: usize,
        forward: bool,
    ) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.per_edge[e]
            .iter()
            .map(move |&(ge, b)| (ge, b == forward))
    }

    /// Number of input-graph orientations one extended orientation expands
    /// to, saturating.
    pub fn multiplicity(&self, x: &[EdgeState]) -> u128 {
        let mut k: u128 = 1;
        for (edges, &s) in self.per_edge.iter().zip(x) {
            if s == EdgeState::Broken {
                let h = edges.len() as u32;
                k = k.saturating_mul(2u128.saturating_pow(h).saturating_sub(2));
            }
        }
        k.saturating_mul(2u128.saturating_pow(self.dead_ends.len() as u32))
    }
}

#[derive(Debug)]
enum Digit {
    Broken { edge: usize, counter: BrokenCounter },
    DeadEnd { g_edge: usize, up: bool },
}

/// Cross product of the broken-chain patterns and dead-end directions for
/// one extended orientation. Broken chains come first in multigraph order,
/// then dead-end edges; the first digit moves fastest.
#[derive(Debug)]
pub struct Expansion {
    plan: Rc<ExpansionPlan>,
    bits: OrientationBits,
    digits: Vec<Digit>,
    started: bool,
    meter: Meter,
}

impl Expansion {
    pub fn new(plan: Rc<ExpansionPlan>, x: &[EdgeState], meter: &Meter) -> Self {
        let mut bits = OrientationBits::zeros(plan.edge_count);
        let mut digits = Vec::new();
        for (i, (edges, &s)) in plan.per_edge.iter().zip(x).enumerate() {
            match s {
                EdgeState::Forward | EdgeState::Backward => {
                    let forward = s == EdgeState::Forward;
                    for &(ge, fwd_bit) in edges {
                        bits.set(ge, fwd_bit == forward);
                    }
                }
                EdgeState::Broken => digits.push(Digit::Broken {
                    edge: i,
                    counter: BrokenCounter::first(edges.len()),
                }),
            }
        }
        for &ge in &plan.dead_ends {
            digits.push(Digit::DeadEnd {
                g_edge: ge,
                up: false,
            });
        }
        meter.tick(plan.edge_count as u64);
        Self {
            plan,
            bits,
            digits,
            started: false,
            meter: meter.clone(),
        }
    }

    fn advance(&mut self) -> bool {
        for d in self.digits.iter_mut() {
            let carried = match d {
                Digit::Broken { counter, .. } => !counter.increment(),
                Digit::DeadEnd { up, .. } => {
                    *up = !*up;
                    !*up
                }
            };
            if !carried {
                return true;
            }
        }
        false
    }

    fn write_digits(&mut self) {
        for d in &self.digits {
            match d {
                Digit::Broken { edge, counter } => {
                    for (&(ge, fwd_bit), &along) in
                        self.plan.per_edge[*edge].iter().zip(&counter.bits)
                    {
                        self.bits.set(ge, fwd_bit == along);
                    }
                }
                Digit::DeadEnd { g_edge, up } => self.bits.set(*g_edge, *up),
            }
        }
    }
}

impl Iterator for Expansion {
    type Item = OrientationBits;

    fn next(&mut self) -> Option<OrientationBits> {
        if std::mem::replace(&mut self.started, true) && !self.advance() {
            self.digits.clear();
            return None;
        }
        self.write_digits();
        self.meter.tick(self.plan.edge_count as u64);
        Some(self.bits.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerator::extended_orientations;
    use crate::generators;
    use crate::graph::digraph_has_cycle;
    use crate::multigraph::extended_is_cyclic;
    use crate::preprocess::prepare;
    use std::collections::BTreeSet;

    #[test]
    fn pattern_counts_and_order() {
        let two: Vec<_> = broken_chain_patterns(2).unwrap().collect();
        assert_eq!(two, vec![vec![true, false], vec![false, true]]);
        assert_eq!(broken_chain_patterns(3).unwrap().count(), 6);
        assert_eq!(broken_chain_patterns(7).unwrap().count(), 126);
        assert!(matches!(
            broken_chain_patterns(1),
            Err(Error::InvalidChainLength(1))
        ));
        let all: BTreeSet<_> = broken_chain_patterns(5).unwrap().collect();
        assert_eq!(all.len(), 30);
        assert!(!all.contains(&vec![true; 5]) && !all.contains(&vec![false; 5]));
    }

    fn expand_all(p: &Prepared) -> Vec<OrientationBits> {
        let plan = Rc::new(ExpansionPlan::new(p));
        let m = &p.multigraph;
        let meter = Meter::new();
        let mut out = Vec::new();
        for x in extended_orientations(m).filter(|x| extended_is_cyclic(m, x)) {
            let before = out.len();
            out.extend(Expansion::new(plan.clone(), &x, &meter));
            assert_eq!((out.len() - before) as u128, plan.multiplicity(&x));
        }
        out
    }

    #[test]
    fn k4_is_identity() {
        let p = prepare(&generators::complete(4));
        let plan = Rc::new(ExpansionPlan::new(&p));
        let x = vec![EdgeState::Forward; 6];
        assert_eq!(Expansion::new(plan, &x, &Meter::new()).count(), 1);
        assert_eq!(expand_all(&p).len(), 40);
    }

    #[test]
    fn triangle_with_pendant_gives_four() {
        let p = prepare(&generators::triangle_with_tail(1));
        let out = expand_all(&p);
        assert_eq!(out.len(), 4);
        let g = &p.graph;
        assert!(out
            .iter()
            .all(|b| digraph_has_cycle(g.node_count(), &g.arcs(b))));
    }

    #[test]
    fn theta_with_one_broken_chain() {
        let p = prepare(&generators::theta(3, 2));
        let plan = Rc::new(ExpansionPlan::new(&p));
        let x = vec![EdgeState::Forward, EdgeState::Backward, EdgeState::Broken];
        let out: Vec<_> = Expansion::new(plan, &x, &Meter::new()).collect();
        assert_eq!(out.len(), 2);
        assert_ne!(out[0], out[1]);
    }

    #[test]
    fn expansion_is_exact_on_small_graphs() {
        for g in [
            generators::theta(3, 2),
            generators::necklace(4),
            generators::triangle_with_tail(3),
            generators::cycle(5),
            generators::petersen(),
        ] {
            let p = prepare(&g);
            let out = expand_all(&p);
            let set: BTreeSet<_> = out.iter().cloned().collect();
            assert_eq!(set.len(), out.len());
            let brute: BTreeSet<_> = (0u64..1 << g.edge_count())
                .map(|v| OrientationBits::from_bools((0..g.edge_count()).map(|i| v >> i & 1 == 1)))
                .filter(|b| digraph_has_cycle(g.node_count(), &g.arcs(b)))
                .collect();
            assert_eq!(set, brute);
        }
    }
}
