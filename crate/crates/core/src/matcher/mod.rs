//! Instrumented exact matchers.
//!
//! All four matchers share [`SearchQuery`] and [`SearchOutcome`]. A
//! comparison is one equality test between a text byte and a pattern byte
//! during the search phase; preprocessing and shift lookups are free.

mod estimate;
mod fbas;
mod horspool;
mod kmp;
mod naive;
mod shift;

use std::fmt;
use std::str::FromStr;

pub use estimate::{char_probability, expected_comparisons, ComparisonEstimate};
pub use fbas::{fbas_search, Fbas};
pub use horspool::{bmh_search, Horspool};
pub use kmp::{kmp_search, Kmp};
pub use naive::{naive_search, Naive};
pub use shift::{build_shift_table, shift_step, ShiftTable};

use crate::error::{Error, Result};
use crate::freq::FrequencyTable;
use crate::metrics::{ComparisonCounter, WindowCost};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SearchMode {
    FirstMatch,
    #[default]
    AllMatches,
}

impl SearchMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchMode::FirstMatch => "first_match",
            SearchMode::AllMatches => "all_matches",
        }
    }
}

/// A text, a non-empty pattern, and how many matches to report.
#[derive(Debug, Clone, Copy)]
pub struct SearchQuery<'a> {
    pub text: &'a [u8],
    pub pattern: &'a [u8],
    pub mode: SearchMode,
    /// Record each examined window and its cost in the outcome.
    pub trace: bool,
}

impl<'a> SearchQuery<'a> {
    pub fn new(text: &'a [u8], pattern: &'a [u8], mode: SearchMode) -> Result<Self> {
        if pattern.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(SearchQuery {
            text,
            pattern,
            mode,
            trace: false,
        })
    }

    pub fn traced(mut self) -> Self {
        self.trace = true;
        self
    }
}

/// Match positions plus the instrumentation gathered while finding them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchOutcome {
    /// 0-based byte offsets, strictly increasing.
    pub positions: Vec<usize>,
    pub comparisons: u64,
    /// Number of windows examined.
    pub alignments: u64,
    /// Windows whose anchor test succeeded. Always 0 outside FBAS.
    pub anchor_hits: u64,
    /// Per-window costs, present only for traced queries.
    pub windows: Option<Vec<WindowCost>>,
}

impl SearchOutcome {
    /// Window positions in the order they were examined, for traced runs.
    pub fn alignment_trace(&self) -> Option<Vec<usize>> {
        self.windows
            .as_ref()
            .map(|w| w.iter().map(|c| c.position).collect())
    }
}

/// Shared bookkeeping for a single search call.
pub(crate) struct Recorder {
    counter: ComparisonCounter,
    positions: Vec<usize>,
    alignments: u64,
    anchor_hits: u64,
}

impl Recorder {
    pub(crate) fn new(trace: bool) -> Self {
        Recorder {
            counter: ComparisonCounter::new(trace),
            positions: Vec::new(),
            alignments: 0,
            anchor_hits: 0,
        }
    }

    #[inline]
    pub(crate) fn window(&mut self, position: usize) {
        self.alignments += 1;
        self.counter.begin_window(position);
    }

    #[inline]
    pub(crate) fn eq(&mut self, a: u8, b: u8) -> bool {
        self.counter.compare(a, b)
    }

    pub(crate) fn anchor_hit(&mut self) {
        self.anchor_hits += 1;
    }

    pub(crate) fn matched(&mut self, position: usize) {
        self.positions.push(position);
    }

    pub(crate) fn finish(self) -> SearchOutcome {
        let (comparisons, windows) = self.counter.into_parts();
        SearchOutcome {
            positions: self.positions,
            comparisons,
            alignments: self.alignments,
            anchor_hits: self.anchor_hits,
            windows,
        }
    }
}

/// A pattern prepared for repeated searches.
pub trait Matcher {
    fn algorithm(&self) -> Algorithm;

    fn pattern(&self) -> &[u8];

    fn find(&self, text: &[u8], mode: SearchMode, trace: bool) -> SearchOutcome;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Naive,
    Kmp,
    Bmh,
    Fbas,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Naive,
        Algorithm::Kmp,
        Algorithm::Bmh,
        Algorithm::Fbas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::Kmp => "kmp",
            Algorithm::Bmh => "bmh",
            Algorithm::Fbas => "fbas",
        }
    }

    /// Prepares `pattern` for this algorithm. `table` is only consulted by FBAS.
    pub fn prepare<'p>(
        self,
        pattern: &'p [u8],
        table: &FrequencyTable,
    ) -> Result<Box<dyn Matcher + Send + Sync + 'p>> {
        Ok(match self {
            Algorithm::Naive => Box::new(Naive::new(pattern)?),
            Algorithm::Kmp => Box::new(Kmp::new(pattern)?),
            Algorithm::Bmh => Box::new(Horspool::new(pattern)?),
            Algorithm::Fbas => Box::new(Fbas::new(pattern, table)?),
        })
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "naive" => Ok(Algorithm::Naive),
            "kmp" => Ok(Algorithm::Kmp),
            "bmh" | "horspool" => Ok(Algorithm::Bmh),
            "fbas" => Ok(Algorithm::Fbas),
            other => Err(format!("unknown algorithm {other:?}")),
        }
    }
}

/// Runs `algorithm` over `query`.
pub fn search(
    algorithm: Algorithm,
    query: &SearchQuery<'_>,
    table: &FrequencyTable,
) -> Result<SearchOutcome> {
    let matcher = algorithm.prepare(query.pattern, table)?;
    Ok(matcher.find(query.text, query.mode, query.trace))
}

#[cfg(test)]
mod tests;
