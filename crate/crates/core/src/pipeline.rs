//! The standard pipeline: hole search, extended cyclic orientations of the
//! multigraph, then expansion to the input graph. Resumable one bounded
//! step at a time so that it can be interleaved with other work.

use std::rc::Rc;

use crate::bits::OrientationBits;
use crate::enumerator::{enumerate_extended_cyclic, ExtendedCyclic};
use crate::expand::{Expansion, ExpansionPlan};
use crate::hole::{Hole, HoleSearch, HoleStrategy};
use crate::meter::Meter;
use crate::preprocess::{Prepared, Shape};

/// Outcome of one [`Enumerator::advance`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Progress {
    Solution(OrientationBits),
    Working,
    Finished,
}

#[derive(Debug)]
enum Stage {
    Search(HoleSearch),
    Stream {
        extended: Box<ExtendedCyclic>,
        expansion: Option<Expansion>,
    },
    Done,
}

#[derive(Debug)]
pub struct Enumerator {
    prepared: Rc<Prepared>,
    plan: Rc<ExpansionPlan>,
    stage: Stage,
    meter: Meter,
}

impl Enumerator {
    pub fn new(prepared: Rc<Prepared>, strategy: HoleStrategy, meter: &Meter) -> Self {
        match prepared.shape {
            Shape::Empty => {
                meter.mark_setup_done();
                Self::with_stage(prepared, Stage::Done, meter)
            }
            // the multigraph is a single chain self-loop
            Shape::PureCycle => {
                let hole = Hole {
                    nodes: vec![0],
                    edges: vec![0],
                };
                Self::with_hole(prepared, &hole, meter)
            }
            Shape::General => {
                Self::with_stage(prepared, Stage::Search(HoleSearch::new(strategy)), meter)
            }
        }
    }

    /// Skips the hole search and uses `hole`, a cycle of the multigraph.
    pub fn with_hole(prepared: Rc<Prepared>, hole: &Hole, meter: &Meter) -> Self {
        debug_assert!(hole.is_cycle_of(&prepared.multigraph));
        let stage = Self::stream_stage(&prepared, hole, meter);
        Self::with_stage(prepared, stage, meter)
    }

    fn with_stage(prepared: Rc<Prepared>, stage: Stage, meter: &Meter) -> Self {
        let plan = Rc::new(ExpansionPlan::new(&prepared));
        Self {
            prepared,
            plan,
            stage,
            meter: meter.clone(),
        }
    }

    fn stream_stage(prepared: &Prepared, hole: &Hole, meter: &Meter) -> Stage {
        meter.mark_setup_done();
        Stage::Stream {
            extended: Box::new(enumerate_extended_cyclic(&prepared.multigraph, hole, meter)),
            expansion: None,
        }
    }

    pub fn meter(&self) -> &Meter {
        &self.meter
    }

    /// The hole in use, once the search is over.
    pub fn hole(&self) -> Option<&Hole> {
        match &self.stage {
            Stage::Stream { extended, .. } => Some(extended.hole()),
            _ => None,
        }
    }

    /// Does one bounded unit of work: one breadth-first search of the hole
    /// search, or the production of one solution.
    pub fn advance(&mut self) -> Progress {
        match &mut self.stage {
            Stage::Done => Progress::Finished,
            Stage::Search(search) => {
                let found = search.step(&self.prepared.multigraph, &self.meter);
                match found {
                    None => Progress::Working,
                    Some(Ok(hole)) => {
                        self.stage = Self::stream_stage(&self.prepared, &hole, &self.meter);
                        Progress::Working
                    }
                    // a non-empty multigraph of minimum degree two has a cycle
                    Some(Err(_)) => {
                        self.stage = Stage::Done;
                        Progress::Finished
                    }
                }
            }
            Stage::Stream {
                extended,
                expansion,
            } => loop {
                if let Some(s) = expansion.as_mut().and_then(Iterator::next) {
                    return Progress::Solution(s);
                }
                match extended.next() {
                    Some(x) => {
                        *expansion = Some(Expansion::new(self.plan.clone(), &x, &self.meter))
                    }
                    None => {
                        self.stage = Stage::Done;
                        return Progress::Finished;
                    }
                }
            },
        }
    }
}

impl Iterator for Enumerator {
    type Item = OrientationBits;

    fn next(&mut self) -> Option<OrientationBits> {
        loop {
            match self.advance() {
                Progress::Solution(s) => return Some(s),
                Progress::Working => {}
                Progress::Finished => return None,
            }
        }
    }
}
