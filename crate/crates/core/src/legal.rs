//! Putting the hole back: the orientations of the hole edges that make the
//! whole multigraph cyclic.
//!
//! Hole edge `j` joins positions `j` and `j + 1 (mod h)`. Its state is
//! relative to that traversal: `Forward` is the arc `c_j -> c_{j+1}`.

use crate::enumerator::MixedRadix;
use crate::meter::Meter;
use crate::multigraph::EdgeState;
use crate::reach::ReachMatrix;

/// An extended orientation of the hole whose union with the residual
/// orientation has a directed cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LegalOrientation {
    pub states: Vec<EdgeState>,
    /// Positions of the broken hole edges.
    pub broken: Vec<usize>,
}

impl LegalOrientation {
    fn new(states: Vec<EdgeState>) -> Self {
        let broken = states
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == EdgeState::Broken)
            .map(|(j, _)| j)
            .collect();
        Self { states, broken }
    }
}

fn state_radix(is_chain: &[bool]) -> Vec<u8> {
    is_chain.iter().map(|&c| if c { 3 } else { 2 }).collect()
}

pub(crate) fn digit_state(d: u8) -> EdgeState {
    match d {
        0 => EdgeState::Forward,
        1 => EdgeState::Backward,
        _ => EdgeState::Broken,
    }
}

/// Every extended orientation of the hole, for a residual orientation that
/// is already cyclic. Mixed-radix order, first hole edge fastest.
#[derive(Debug)]
pub struct AllOrientations {
    counter: MixedRadix,
    started: bool,
    meter: Meter,
}

pub fn all_orientations_of_hole(is_chain: &[bool], meter: &Meter) -> AllOrientations {
    AllOrientations {
        counter: MixedRadix::new(state_radix(is_chain)),
        started: false,
        meter: meter.clone(),
    }
}

impl Iterator for AllOrientations {
    type Item = LegalOrientation;

    fn next(&mut self) -> Option<LegalOrientation> {
        if self.started {
            if !self.counter.increment() {
                return None;
            }
        } else {
            self.started = true;
        }
        let digits = self.counter.digits();
        self.meter.tick(digits.len() as u64);
        Some(LegalOrientation::new(
            digits.iter().map(|&d| digit_state(d)).collect(),
        ))
    }
}

#[derive(Debug)]
struct Frame {
    depth: usize,
    reach: ReachMatrix,
    branch: u8,
    emitted_at_entry: u64,
}

/// The ternary recursion over hole edges, run with an explicit stack so
/// that it can be suspended between outputs.
///
/// A child call is made only when the matrix after the tentative choice is
/// already cyclic or its undecided suffix can still close a cycle, so every
/// call leads to at least one output.
#[derive(Debug)]
pub struct LegalOrientations {
    is_chain: Vec<bool>,
    stack: Vec<Frame>,
    assignment: Vec<EdgeState>,
    emitted: u64,
    meter: Meter,
}

/// Streams the legal orientations of a hole with the given chain labels,
/// starting from the reachability matrix of an acyclic residual
/// orientation. Branch order is Forward, Backward, Broken.
pub fn legal_orientations(
    is_chain: &[bool],
    reach: ReachMatrix,
    meter: &Meter,
) -> LegalOrientations {
    assert_eq!(is_chain.len(), reach.size());
    meter.record_call();
    LegalOrientations {
        is_chain: is_chain.to_vec(),
        stack: vec![Frame {
            depth: 0,
            reach,
            branch: 0,
            emitted_at_entry: 0,
        }],
        assignment: vec![EdgeState::Forward; is_chain.len()],
        emitted: 0,
        meter: meter.clone(),
    }
}

impl LegalOrientations {
    fn promising(reach: &ReachMatrix, decided: usize, meter: &Meter) -> bool {
        reach.is_cyclic(meter) || reach.suffix_closable(decided, meter)
    }
}

impl Iterator for LegalOrientations {
    type Item = LegalOrientation;

    fn next(&mut self) -> Option<LegalOrientation> {
        let h = self.is_chain.len();
        loop {
            let top = self.stack.last_mut()?;
            let j = top.depth;
            if j == h {
                self.stack.pop();
                self.emitted += 1;
                self.meter.tick(h as u64);
                return Some(LegalOrientation::new(self.assignment.clone()));
            }
            let branch = top.branch;
            top.branch += 1;
            let (u, v) = (j, (j + 1) % h);
            let child = match branch {
                0 | 1 => {
                    let (tail, head, state) = if branch == 0 {
                        (u, v, EdgeState::Forward)
                    } else {
                        (v, u, EdgeState::Backward)
                    };
                    let r = top.reach.with_arc(tail, head, &self.meter);
                    Self::promising(&r, j + 1, &self.meter).then_some((r, state))
                }
                2 if self.is_chain[j] => Self::promising(&top.reach, j + 1, &self.meter)
                    .then(|| (top.reach.clone(), EdgeState::Broken)),
                2 => None,
                _ => {
                    let done = self.stack.pop().expect("frame present");
                    if self.emitted == done.emitted_at_entry {
                        self.meter.record_dead_call();
                    }
                    continue;
                }
            };
            if let Some((reach, state)) = child {
                self.assignment[j] = state;
                self.meter.record_call();
                self.stack.push(Frame {
                    depth: j + 1,
                    reach,
                    branch: 0,
                    emitted_at_entry: self.emitted,
                });
            }
        }
    }
}
