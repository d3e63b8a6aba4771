//! Enumeration of the cyclic orientations of an undirected graph with
//! bounded delay between consecutive solutions.
//!
//! The input graph is pruned of dead ends and its chains of degree-two
//! nodes are compressed into a multigraph. A short chordless cycle of that
//! multigraph (the hole) splits the work: every orientation of the rest is
//! completed by exactly the hole orientations that leave a directed cycle.
//!
//! ```
//! use cyclori::{generators, solutions, Options};
//!
//! let k4 = generators::complete(4);
//! assert_eq!(solutions(&k4, &Options::default()).unwrap().count(), 40);
//! ```

pub mod absorb;
pub mod bits;
pub mod enumerator;
pub mod error;
pub mod expand;
pub mod generators;
pub mod graph;
pub mod hole;
pub mod legal;
pub mod meter;
pub mod multigraph;
pub mod oracle;
pub mod pipeline;
pub mod preprocess;
pub mod reach;
pub mod trie;

use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

pub use absorb::AbsorbedEnumerator;
pub use bits::OrientationBits;
pub use error::{Error, Result};
pub use graph::{parse_edge_list, UndirectedGraph};
pub use hole::{Hole, HoleStrategy};
pub use meter::{DelayRecorder, DelayStats, Meter, MeterReading};
pub use multigraph::{EdgeState, LabeledMultigraph};
pub use oracle::{verify, NaiveEnumerator, VerifyReport};
pub use pipeline::Enumerator;
pub use preprocess::{prepare, Prepared};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Algorithm {
    /// Hole decomposition, solutions as soon as the hole is known.
    #[default]
    Fast,
    /// Hole decomposition with the setup spread over the first outputs.
    Absorbed,
    /// Filter of all `2^m` orientations.
    Naive,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Fast => "fast",
            Algorithm::Absorbed => "absorbed",
            Algorithm::Naive => "naive",
        })
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "fast" => Ok(Algorithm::Fast),
            "absorbed" => Ok(Algorithm::Absorbed),
            "naive" => Ok(Algorithm::Naive),
            _ => Err(format!(
                "unknown algorithm `{s}` (expected fast, absorbed or naive)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Options {
    pub algorithm: Algorithm,
    pub hole_strategy: HoleStrategy,
}

#[derive(Debug)]
enum Inner {
    Fast(Enumerator),
    Absorbed(AbsorbedEnumerator),
    Naive(NaiveEnumerator),
}

/// Stream of cyclic orientations of one graph. Every step is counted on
/// [`Solutions::meter`].
#[derive(Debug)]
pub struct Solutions {
    inner: Inner,
    meter: Meter,
}

impl Solutions {
    pub fn meter(&self) -> &Meter {
        &self.meter
    }
}

impl Iterator for Solutions {
    type Item = OrientationBits;

    fn next(&mut self) -> Option<OrientationBits> {
        match &mut self.inner {
            Inner::Fast(e) => e.next(),
            Inner::Absorbed(e) => e.next(),
            Inner::Naive(e) => e.next(),
        }
    }
}

/// Streams the cyclic orientations of `g` with the chosen algorithm.
pub fn solutions(g: &UndirectedGraph, opts: &Options) -> Result<Solutions> {
    let meter = Meter::new();
    let inner = match opts.algorithm {
        Algorithm::Naive => Inner::Naive(NaiveEnumerator::new(g, &meter)?),
        Algorithm::Fast => {
            let p = Rc::new(preprocess::prepare_metered(g, &meter));
            Inner::Fast(Enumerator::new(p, opts.hole_strategy, &meter))
        }
        Algorithm::Absorbed => {
            let p = Rc::new(preprocess::prepare_metered(g, &meter));
            Inner::Absorbed(AbsorbedEnumerator::new(p, opts.hole_strategy, &meter))
        }
    };
    Ok(Solutions { inner, meter })
}
