//! Brute-force ground truth: try all `2^m` orientations.

use std::collections::BTreeMap;

use crate::bits::OrientationBits;
use crate::error::{Error, Result};
use crate::graph::{CycleScratch, UndirectedGraph};
use crate::hole::HoleStrategy;
use crate::meter::Meter;
use crate::{solutions, Algorithm, Options};

/// Largest edge count the exhaustive methods accept.
pub const BRUTE_FORCE_LIMIT: usize = 24;

fn check_size(g: &UndirectedGraph) -> Result<()> {
    if g.edge_count() > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            m: g.edge_count(),
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    Ok(())
}

/// Candidate `v` with bit 0 of the orientation as the most significant bit,
/// so that increasing `v` is increasing orientation order.
fn candidate(v: u64, m: usize) -> OrientationBits {
    OrientationBits::from_bools((0..m).map(|i| v >> (m - 1 - i) & 1 == 1))
}

/// Scans every orientation in increasing order and keeps the cyclic ones.
#[derive(Debug)]
pub struct NaiveEnumerator {
    graph: UndirectedGraph,
    next: u64,
    end: u64,
    scratch: CycleScratch,
    meter: Meter,
}

impl NaiveEnumerator {
    pub fn new(g: &UndirectedGraph, meter: &Meter) -> Result<Self> {
        check_size(g)?;
        meter.mark_setup_done();
        Ok(Self {
            graph: g.clone(),
            next: 0,
            end: 1 << g.edge_count(),
            scratch: CycleScratch::default(),
            meter: meter.clone(),
        })
    }
}

impl Iterator for NaiveEnumerator {
    type Item = OrientationBits;

    fn next(&mut self) -> Option<OrientationBits> {
        let m = self.graph.edge_count();
        while self.next < self.end {
            let bits = candidate(self.next, m);
            self.next += 1;
            let arcs = self.graph.arcs(&bits);
            let (cyclic, work) = self.scratch.has_cycle(self.graph.node_count(), &arcs);
            self.meter.tick(work + m as u64);
            if cyclic {
                return Some(bits);
            }
        }
        None
    }
}

pub fn brute_force_enumerate(g: &UndirectedGraph) -> Result<NaiveEnumerator> {
    NaiveEnumerator::new(g, &Meter::new())
}

/// Orientation counts: every orientation, acyclic ones, cyclic ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counts {
    pub total: u64,
    pub acyclic: u64,
    pub cyclic: u64,
}

pub fn brute_force_counts(g: &UndirectedGraph) -> Result<Counts> {
    let cyclic = brute_force_enumerate(g)?.count() as u64;
    let total = 1u64 << g.edge_count();
    Ok(Counts {
        total,
        acyclic: total - cyclic,
        cyclic,
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub equal: bool,
    pub expected: usize,
    pub produced: usize,
    pub missing: Vec<OrientationBits>,
    pub extra: Vec<OrientationBits>,
    pub duplicate: Vec<OrientationBits>,
}

/// Runs an enumerator and the oracle and compares the outputs as sets.
pub fn verify(
    g: &UndirectedGraph,
    algorithm: Algorithm,
    strategy: HoleStrategy,
) -> Result<VerifyReport> {
    let expected: Vec<OrientationBits> = brute_force_enumerate(g)?.collect();
    let mut seen: BTreeMap<OrientationBits, usize> = BTreeMap::new();
    let mut produced = 0;
    for s in solutions(
        g,
        &Options {
            algorithm,
            hole_strategy: strategy,
        },
    )? {
        produced += 1;
        *seen.entry(s).or_default() += 1;
    }
    let duplicate = seen
        .iter()
        .filter(|(_, &c)| c > 1)
        .map(|(k, _)| k.clone())
        .collect();
    let missing = expected
        .iter()
        .filter(|k| !seen.contains_key(k))
        .cloned()
        .collect();
    // `expected` is sorted by construction
    let extra = seen
        .keys()
        .filter(|k| expected.binary_search(k).is_err())
        .cloned()
        .collect();
    let mut report = VerifyReport {
        equal: false,
        expected: expected.len(),
        produced,
        missing,
        extra,
        duplicate,
    };
    report.equal =
        report.missing.is_empty() && report.extra.is_empty() && report.duplicate.is_empty();
    Ok(report)
}
