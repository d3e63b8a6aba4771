//! Extended cyclic orientations of the multigraph: every orientation of the
//! residual `M'` combined with the matching orientations of the hole.

use crate::graph::CycleScratch;
use crate::hole::{remove_hole, Hole, Residual};
use crate::legal::{
    all_orientations_of_hole, digit_state, legal_orientations, AllOrientations, LegalOrientation,
    LegalOrientations,
};
use crate::meter::Meter;
use crate::multigraph::{oriented_arcs, EdgeState, ExtendedOrientation, LabeledMultigraph};
use crate::reach::build_reach_matrix;

/// Odometer over digits `0..radix[i]`; digit 0 moves fastest.
#[derive(Debug, Clone)]
pub struct MixedRadix {
    radix: Vec<u8>,
    digits: Vec<u8>,
}

impl MixedRadix {
    pub fn new(radix: Vec<u8>) -> Self {
        debug_assert!(radix.iter().all(|&r| r >= 1));
        let digits = vec![0; radix.len()];
        Self { radix, digits }
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Moves to the next value; `false` once every value has been visited
    /// (the digits are then back at zero).
    pub fn increment(&mut self) -> bool {
        for (d, &r) in self.digits.iter_mut().zip(&self.radix) {
            *d += 1;
            if *d < r {
                return true;
            }
            *d = 0;
        }
        false
    }
}

fn radix_of(m: &LabeledMultigraph) -> Vec<u8> {
    m.edges()
        .iter()
        .map(|e| if e.is_chain() { 3 } else { 2 })
        .collect()
}

/// All `2^s 3^b` extended orientations of a multigraph with `s` simple and
/// `b` chain edges, in mixed-radix order.
#[derive(Debug)]
pub struct ExtendedOrientations {
    counter: MixedRadix,
    started: bool,
}

pub fn extended_orientations(m: &LabeledMultigraph) -> ExtendedOrientations {
    ExtendedOrientations {
        counter: MixedRadix::new(radix_of(m)),
        started: false,
    }
}

impl Iterator for ExtendedOrientations {
    type Item = ExtendedOrientation;

    fn next(&mut self) -> Option<ExtendedOrientation> {
        if std::mem::replace(&mut self.started, true) && !self.counter.increment() {
            return None;
        }
        Some(
            self.counter
                .digits()
                .iter()
                .map(|&d| digit_state(d))
                .collect(),
        )
    }
}

#[derive(Debug)]
enum HoleStream {
    Idle,
    All(AllOrientations),
    Legal(LegalOrientations),
}

/// Streams every extended cyclic orientation of `M` exactly once, as one
/// state per multigraph edge.
#[derive(Debug)]
pub struct ExtendedCyclic {
    edge_count: usize,
    node_count: usize,
    hole: Hole,
    residual: Residual,
    /// Whether hole edge `j` traversed `c_j -> c_{j+1}` is the multigraph
    /// edge's own forward direction.
    same_direction: Vec<bool>,
    hole_is_chain: Vec<bool>,
    outer: ExtendedOrientations,
    current: ExtendedOrientation,
    inner: HoleStream,
    scratch: CycleScratch,
    /// Residual orientations that were already cyclic.
    cyclic_residuals: u64,
    meter: Meter,
}

pub fn enumerate_extended_cyclic(
    m: &LabeledMultigraph,
    hole: &Hole,
    meter: &Meter,
) -> ExtendedCyclic {
    let residual = remove_hole(m, hole);
    let h = hole.len();
    let same_direction = (0..h)
        .map(|j| m.edge(hole.edges[j]).a == hole.nodes[j])
        .collect();
    let hole_is_chain = hole.edges.iter().map(|&e| m.edge(e).is_chain()).collect();
    meter.tick((m.edge_count() + m.node_count()) as u64);
    ExtendedCyclic {
        edge_count: m.edge_count(),
        node_count: m.node_count(),
        hole: hole.clone(),
        outer: extended_orientations(&residual.graph),
        residual,
        same_direction,
        hole_is_chain,
        current: Vec::new(),
        inner: HoleStream::Idle,
        scratch: CycleScratch::default(),
        cyclic_residuals: 0,
        meter: meter.clone(),
    }
}

impl ExtendedCyclic {
    pub fn hole(&self) -> &Hole {
        &self.hole
    }

    pub fn cyclic_residuals(&self) -> u64 {
        self.cyclic_residuals
    }

    fn combine(&self, legal: &LegalOrientation) -> ExtendedOrientation {
        let mut out = vec![EdgeState::Broken; self.edge_count];
        for (&e, &s) in self.residual.origin.iter().zip(&self.current) {
            out[e] = s;
        }
        for (j, &s) in legal.states.iter().enumerate() {
            out[self.hole.edges[j]] = if self.same_direction[j] {
                s
            } else {
                s.reversed()
            };
        }
        self.meter.tick(self.edge_count as u64);
        out
    }

    /// Loads the next residual orientation; `false` when none is left.
    fn load_next_residual(&mut self) -> bool {
        let Some(states) = self.outer.next() else {
            return false;
        };
        let arcs = oriented_arcs(&self.residual.graph, &states);
        let (cyclic, work) = self.scratch.has_cycle(self.node_count, &arcs);
        self.meter.tick(work + states.len() as u64);
        self.inner = if cyclic {
            self.cyclic_residuals += 1;
            HoleStream::All(all_orientations_of_hole(&self.hole_is_chain, &self.meter))
        } else {
            let r = build_reach_matrix(self.node_count, &arcs, &self.hole.nodes, &self.meter);
            self.meter
                .tick((self.hole.len() * (arcs.len() + self.node_count)) as u64);
            HoleStream::Legal(legal_orientations(&self.hole_is_chain, r, &self.meter))
        };
        self.current = states;
        true
    }
}

impl Iterator for ExtendedCyclic {
    type Item = ExtendedOrientation;

    fn next(&mut self) -> Option<ExtendedOrientation> {
        loop {
            let legal = match &mut self.inner {
                HoleStream::Idle => None,
                HoleStream::All(it) => it.next(),
                HoleStream::Legal(it) => it.next(),
            };
            if let Some(l) = legal {
                return Some(self.combine(&l));
            }
            if !self.load_next_residual() {
                self.inner = HoleStream::Idle;
                return None;
            }
        }
    }
}
