//! Deterministic operation counting.
//!
//! Time is measured in elementary steps rather than wall-clock so that delay
//! and setup bounds are reproducible. A [`Meter`] is a cheap shared handle:
//! every stage of one run ticks the same counters.

use std::cell::Cell;
use std::rc::Rc;

#[derive(Debug, Default)]
struct Counters {
    steps: Cell<u64>,
    hole_search_steps: Cell<u64>,
    setup_steps: Cell<Option<u64>>,
    recursive_calls: Cell<u64>,
    dead_calls: Cell<u64>,
    peak_dictionary_bits: Cell<u64>,
    buffer_at_exhaustion: Cell<Option<u64>>,
    buffer_at_end: Cell<Option<u64>>,
    took_producer_branch: Cell<bool>,
}

#[derive(Clone, Debug, Default)]
pub struct Meter(Rc<Counters>);

/// Snapshot of a [`Meter`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MeterReading {
    pub steps: u64,
    pub hole_search_steps: u64,
    pub setup_steps: Option<u64>,
    pub recursive_calls: u64,
    /// Calls of the legal-orientation recursion that produced no output.
    pub dead_calls: u64,
    pub peak_dictionary_bits: u64,
    /// Buffer size at the moment the full enumerator ran dry inside the
    /// absorbed scheduler's second phase.
    pub buffer_at_exhaustion: Option<u64>,
    pub buffer_at_end: Option<u64>,
    pub took_producer_branch: bool,
}

impl Meter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn tick(&self, n: u64) {
        self.0.steps.set(self.0.steps.get() + n);
    }

    #[inline]
    pub fn steps(&self) -> u64 {
        self.0.steps.get()
    }

    pub(crate) fn add_hole_search(&self, n: u64) {
        self.tick(n);
        let c = &self.0.hole_search_steps;
        c.set(c.get() + n);
    }

    pub(crate) fn mark_setup_done(&self) {
        if self.0.setup_steps.get().is_none() {
            self.0.setup_steps.set(Some(self.steps()));
        }
    }

    pub(crate) fn record_call(&self) {
        let c = &self.0.recursive_calls;
        c.set(c.get() + 1);
    }

    pub(crate) fn record_dead_call(&self) {
        let c = &self.0.dead_calls;
        c.set(c.get() + 1);
    }

    pub(crate) fn observe_dictionary_bits(&self, bits: u64) {
        let c = &self.0.peak_dictionary_bits;
        c.set(c.get().max(bits));
    }

    pub(crate) fn set_buffer_at_exhaustion(&self, len: u64) {
        self.0.buffer_at_exhaustion.set(Some(len));
    }

    pub(crate) fn set_buffer_at_end(&self, len: u64) {
        self.0.buffer_at_end.set(Some(len));
    }

    pub(crate) fn set_producer_branch(&self) {
        self.0.took_producer_branch.set(true);
    }

    pub fn reading(&self) -> MeterReading {
        let c = &self.0;
        MeterReading {
            steps: c.steps.get(),
            hole_search_steps: c.hole_search_steps.get(),
            setup_steps: c.setup_steps.get(),
            recursive_calls: c.recursive_calls.get(),
            dead_calls: c.dead_calls.get(),
            peak_dictionary_bits: c.peak_dictionary_bits.get(),
            buffer_at_exhaustion: c.buffer_at_exhaustion.get(),
            buffer_at_end: c.buffer_at_end.get(),
            took_producer_branch: c.took_producer_branch.get(),
        }
    }
}

/// Inter-solution gap statistics gathered while draining a solution stream.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DelayStats {
    pub solutions: u64,
    pub first_solution_steps: Option<u64>,
    pub total_steps: u64,
    pub max_gap: u64,
    pub median_gap: u64,
}

/// Records the meter's step count at every emission.
#[derive(Debug)]
pub struct DelayRecorder {
    meter: Meter,
    last: Option<u64>,
    first: Option<u64>,
    gaps: Vec<u64>,
    solutions: u64,
}

impl DelayRecorder {
    pub fn new(meter: Meter) -> Self {
        Self {
            meter,
            last: None,
            first: None,
            gaps: Vec::new(),
            solutions: 0,
        }
    }

    pub fn on_solution(&mut self) {
        let now = self.meter.steps();
        match self.last {
            None => self.first = Some(now),
            Some(prev) => self.gaps.push(now - prev),
        }
        self.last = Some(now);
        self.solutions += 1;
    }

    pub fn finish(mut self) -> DelayStats {
        let max_gap = self.gaps.iter().copied().max().unwrap_or(0);
        let median_gap = if self.gaps.is_empty() {
            0
        } else {
            let mid = self.gaps.len() / 2;
            *self.gaps.select_nth_unstable(mid).1
        };
        DelayStats {
            solutions: self.solutions,
            first_solution_steps: self.first,
            total_steps: self.meter.steps(),
            max_gap,
            median_gap,
        }
    }
}
