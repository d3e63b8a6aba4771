//! Absorbing the setup cost: while the full pipeline is still searching for
//! its hole, a cheap producer emits solutions built around one short cycle.
//! A dictionary of those solutions and a buffer of withheld ones keep the
//! merged stream free of duplicates.

use std::rc::Rc;

use crate::bits::OrientationBits;
use crate::expand::ExpansionPlan;
use crate::hole::{ceil_log2, node_on_cycle, shortest_cycle_through, Hole, HoleStrategy};
use crate::meter::Meter;
use crate::pipeline::{Enumerator, Progress};
use crate::preprocess::{Prepared, Shape};
use crate::trie::BitstringTrie;

pub const DEFAULT_SLOWDOWN: u64 = 2;

/// Emits up to `n` solutions: the cycle `C_u` directed along its traversal,
/// combined with the first assignments of the remaining input-graph edges
/// in binary counter order (first edge fastest).
#[derive(Debug)]
pub struct CycleProducer {
    template: OrientationBits,
    outside: Vec<usize>,
    counter: Vec<bool>,
    produced: u64,
    total: u64,
    hole: Hole,
    meter: Meter,
}

impl CycleProducer {
    fn new(p: &Prepared, plan: &ExpansionPlan, hole: Hole, meter: &Meter) -> Self {
        let m = &p.multigraph;
        let g = &p.graph;
        let mut template = OrientationBits::zeros(g.edge_count());
        let mut on_hole = vec![false; g.edge_count()];
        for (j, &e) in hole.edges.iter().enumerate() {
            let forward = m.edge(e).a == hole.nodes[j];
            for (ge, bit) in plan.directed_bits(e, forward) {
                template.set(ge, bit);
                on_hole[ge] = true;
            }
        }
        let outside: Vec<usize> = (0..g.edge_count()).filter(|&e| !on_hole[e]).collect();
        let n = g.node_count() as u64;
        let total = if outside.len() >= 64 {
            n
        } else {
            n.min(1u64 << outside.len())
        };
        meter.tick(2 * g.edge_count() as u64);
        Self {
            template,
            counter: vec![false; outside.len()],
            outside,
            produced: 0,
            total,
            hole,
            meter: meter.clone(),
        }
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn hole(&self) -> &Hole {
        &self.hole
    }
}

impl Iterator for CycleProducer {
    type Item = OrientationBits;

    fn next(&mut self) -> Option<OrientationBits> {
        if self.produced == self.total {
            return None;
        }
        let mut z = self.template.clone();
        for (&ge, &b) in self.outside.iter().zip(&self.counter) {
            z.set(ge, b);
        }
        for b in self.counter.iter_mut() {
            *b = !*b;
            if *b {
                break;
            }
        }
        self.produced += 1;
        self.meter.tick(z.len() as u64);
        Some(z)
    }
}

#[derive(Debug)]
pub enum Shortcut {
    Empty,
    SmallHole(Hole),
    Producer(CycleProducer),
}

/// One breadth-first search for the shortest multigraph cycle `C_u` through
/// a node `u`. A cycle shorter than `ceil(log2 n)` is good enough as the
/// hole; otherwise it seeds the producer.
pub fn shortcut_phase(p: &Prepared, meter: &Meter) -> Shortcut {
    if p.shape == Shape::Empty {
        return Shortcut::Empty;
    }
    let m = &p.multigraph;
    let c_u = shortest_cycle_through(m, 0, meter)
        .or_else(|| node_on_cycle(m, meter).and_then(|u| shortest_cycle_through(m, u, meter)))
        .expect("a pruned non-empty graph has a cycle");
    if c_u.len() < ceil_log2(p.graph.node_count()) {
        return Shortcut::SmallHole(c_u);
    }
    let plan = ExpansionPlan::new(p);
    Shortcut::Producer(CycleProducer::new(p, &plan, c_u, meter))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Phase {
    /// Emitting the producer's solutions while the full pipeline catches up.
    Producing,
    /// Full pipeline alone; duplicates are replaced from the buffer.
    Replacing,
    Draining,
    Done,
}

#[derive(Debug)]
struct Scheduler {
    producer: CycleProducer,
    full: Enumerator,
    full_done: bool,
    full_outputs: u64,
    target: u64,
    emitted: BitstringTrie,
    buffer: BitstringTrie,
    quantum: u64,
    pending_quantum: bool,
    phase: Phase,
    meter: Meter,
}

impl Scheduler {
    fn observe_memory(&self) {
        self.meter
            .observe_dictionary_bits(self.emitted.memory_bits() + self.buffer.memory_bits());
    }

    /// One bounded step of the full pipeline during the first phase.
    fn step_full(&mut self) {
        match self.full.advance() {
            Progress::Solution(s) => {
                self.full_outputs += 1;
                if !self.emitted.contains(&s) {
                    self.buffer.insert(s);
                    self.observe_memory();
                }
            }
            Progress::Working => {}
            Progress::Finished => self.full_done = true,
        }
    }

    fn caught_up(&self) -> bool {
        self.full_done || self.full_outputs >= self.target
    }

    fn run_full(&mut self, budget: u64) {
        let start = self.meter.steps();
        while !self.caught_up() && self.meter.steps() - start < budget {
            self.step_full();
        }
    }

    fn next(&mut self) -> Option<OrientationBits> {
        loop {
            match self.phase {
                Phase::Producing => {
                    if std::mem::take(&mut self.pending_quantum) {
                        self.run_full(self.quantum);
                    }
                    if let Some(z) = self.producer.next() {
                        self.buffer.remove(&z);
                        self.emitted.insert(z.clone());
                        self.observe_memory();
                        self.pending_quantum = true;
                        return Some(z);
                    }
                    while !self.caught_up() {
                        self.step_full();
                    }
                    self.phase = if self.full_done {
                        self.meter
                            .set_buffer_at_exhaustion(self.buffer.len() as u64);
                        Phase::Draining
                    } else {
                        Phase::Replacing
                    };
                }
                Phase::Replacing => match self.full.advance() {
                    Progress::Solution(s) => {
                        if !self.emitted.contains(&s) {
                            return Some(s);
                        }
                        if let Some(r) = self.buffer.pop_first() {
                            return Some(r);
                        }
                        debug_assert!(false, "buffer ran dry before the last duplicate");
                    }
                    Progress::Working => {}
                    Progress::Finished => {
                        self.meter
                            .set_buffer_at_exhaustion(self.buffer.len() as u64);
                        self.phase = Phase::Draining;
                    }
                },
                Phase::Draining => {
                    if let Some(r) = self.buffer.pop_first() {
                        return Some(r);
                    }
                    self.meter.set_buffer_at_end(0);
                    self.phase = Phase::Done;
                }
                Phase::Done => return None,
            }
        }
    }
}

#[derive(Debug)]
enum Mode {
    Direct(Enumerator),
    Absorbed(Box<Scheduler>),
}

/// Same solution set as [`Enumerator`], with the setup cost spread over
/// the first `n` outputs.
#[derive(Debug)]
pub struct AbsorbedEnumerator {
    mode: Mode,
}

impl AbsorbedEnumerator {
    pub fn new(prepared: Rc<Prepared>, strategy: HoleStrategy, meter: &Meter) -> Self {
        Self::with_slowdown(prepared, strategy, DEFAULT_SLOWDOWN, meter)
    }

    /// `slowdown` scales the step budget the full pipeline gets per emitted
    /// producer solution.
    pub fn with_slowdown(
        prepared: Rc<Prepared>,
        strategy: HoleStrategy,
        slowdown: u64,
        meter: &Meter,
    ) -> Self {
        let mode = match shortcut_phase(&prepared, meter) {
            Shortcut::Empty => Mode::Direct(Enumerator::new(prepared, strategy, meter)),
            Shortcut::SmallHole(hole) => {
                Mode::Direct(Enumerator::with_hole(prepared, &hole, meter))
            }
            Shortcut::Producer(producer) => {
                meter.set_producer_branch();
                meter.mark_setup_done();
                let quantum = Self::quantum(&prepared, producer.total(), slowdown);
                let target = producer.total();
                Mode::Absorbed(Box::new(Scheduler {
                    producer,
                    full: Enumerator::new(prepared, strategy, meter),
                    full_done: false,
                    full_outputs: 0,
                    target,
                    emitted: BitstringTrie::new(),
                    buffer: BitstringTrie::new(),
                    quantum,
                    pending_quantum: false,
                    phase: Phase::Producing,
                    meter: meter.clone(),
                }))
            }
        };
        Self { mode }
    }

    /// `c (T1 + T2) / n` with step estimates for producing the first `n`
    /// solutions by each side; the full side is dominated by the hole
    /// search, one breadth-first search per multigraph node.
    fn quantum(p: &Prepared, n: u64, slowdown: u64) -> u64 {
        let m = p.graph.edge_count() as u64;
        let mv = p.multigraph.node_count() as u64;
        let me = p.multigraph.edge_count() as u64;
        let t1 = n * 2 * m;
        let t2 = mv * (4 * me + 4 * mv) + n * 4 * m;
        (slowdown * (t1 + t2) / n.max(1)).max(m)
    }

    pub fn took_producer_branch(&self) -> bool {
        matches!(self.mode, Mode::Absorbed(_))
    }

    /// Withheld solutions currently buffered.
    pub fn buffered(&self) -> usize {
        match &self.mode {
            Mode::Direct(_) => 0,
            Mode::Absorbed(s) => s.buffer.len(),
        }
    }
}

impl Iterator for AbsorbedEnumerator {
    type Item = OrientationBits;

    fn next(&mut self) -> Option<OrientationBits> {
        match &mut self.mode {
            Mode::Direct(e) => e.next(),
            Mode::Absorbed(s) => s.next(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::{digraph_has_cycle, UndirectedGraph};
    use crate::preprocess::prepare_metered;
    use std::collections::BTreeSet;

    fn run(g: &UndirectedGraph) -> (Vec<OrientationBits>, Meter) {
        let meter = Meter::new();
        let p = Rc::new(prepare_metered(g, &meter));
        let out = AbsorbedEnumerator::new(p, HoleStrategy::Fast, &meter).collect();
        (out, meter)
    }

    fn standard(g: &UndirectedGraph) -> BTreeSet<OrientationBits> {
        let meter = Meter::new();
        let p = Rc::new(prepare_metered(g, &meter));
        Enumerator::new(p, HoleStrategy::Fast, &meter).collect()
    }

    #[test]
    fn k4_producer_emits_four_around_a_triangle() {
        let g = generators::complete(4);
        let meter = Meter::new();
        let p = prepare_metered(&g, &meter);
        let Shortcut::Producer(z1) = shortcut_phase(&p, &meter) else {
            panic!("expected the producer branch");
        };
        assert_eq!(z1.hole().len(), 3);
        let all: Vec<_> = z1.collect();
        assert_eq!(all.len(), 4);
        assert_eq!(all.iter().collect::<BTreeSet<_>>().len(), 4);
        assert!(all.iter().all(|b| digraph_has_cycle(4, &g.arcs(b))));
    }

    #[test]
    fn k4_absorbed_equals_standard() {
        let g = generators::complete(4);
        let (out, meter) = run(&g);
        let set: BTreeSet<_> = out.iter().cloned().collect();
        assert_eq!(out.len(), 40);
        assert_eq!(set, standard(&g));
        let r = meter.reading();
        assert!(r.took_producer_branch);
        assert_eq!(r.buffer_at_exhaustion, Some(0));
        assert_eq!(r.buffer_at_end, Some(0));
    }

    #[test]
    fn small_hole_branch_delegates() {
        // a triangle hanging off a long cycle: C_u through node 0 is short
        let g = generators::triangle_with_tail(40);
        let meter = Meter::new();
        let p = Rc::new(prepare_metered(&g, &meter));
        let e = AbsorbedEnumerator::new(p, HoleStrategy::Fast, &meter);
        assert!(!e.took_producer_branch());
        assert_eq!(e.take(100).count(), 100);
        assert!(!meter.reading().took_producer_branch);
    }

    #[test]
    fn matches_standard_on_assorted_graphs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut graphs = vec![
            generators::theta(3, 2),
            generators::petersen(),
            generators::complete(5),
            generators::necklace(4),
        ];
        for n in [8, 10, 12] {
            graphs.push(generators::random_cubic(n, &mut rng));
        }
        for g in graphs {
            let (out, meter) = run(&g);
            let set: BTreeSet<_> = out.iter().cloned().collect();
            assert_eq!(set.len(), out.len(), "duplicates");
            assert_eq!(set, standard(&g));
            if meter.reading().took_producer_branch {
                assert_eq!(meter.reading().buffer_at_end, Some(0));
            }
        }
    }
}
