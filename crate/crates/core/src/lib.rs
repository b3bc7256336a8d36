//! Exact string matching with frequency-based anchor selection (FBAS).
//!
//! FBAS keeps Boyer-Moore-Horspool's bad-character shifts but verifies each
//! window starting from the pattern's rarest character, so most windows are
//! rejected after a single comparison. Naive, KMP and BMH baselines share the
//! same instrumentation so their character-comparison counts can be compared
//! directly.
//!
//! ```
//! use fbas_core::{fbas_search, FrequencyTable, SearchMode, SearchQuery};
//!
//! let table = FrequencyTable::default_table();
//! let query = SearchQuery::new(b"nel mezzo del cammin", b"mezzo", SearchMode::AllMatches).unwrap();
//! let outcome = fbas_search(&query, &table).unwrap();
//! assert_eq!(outcome.positions, vec![4]);
//! ```

pub mod bench;
pub mod error;
pub mod freq;
pub mod matcher;
pub mod metrics;

pub use bench::{
    render_report, run_benchmark, BenchReport, BenchRow, Corpus, CorpusMeta, Pattern, PatternSet,
    ReportFormat,
};
pub use error::{Error, Result};
pub use freq::{select_anchor, AnchorSelection, FrequencyTable, RarityScore};
pub use matcher::{
    bmh_search, build_shift_table, char_probability, expected_comparisons, fbas_search, kmp_search,
    naive_search, search, shift_step, Algorithm, ComparisonEstimate, Fbas, Horspool, Kmp, Matcher,
    Naive, SearchMode, SearchOutcome, SearchQuery, ShiftTable,
};
pub use metrics::{
    aggregate_stats, derive_stats, AggregateStats, ComparisonCounter, Counts, DerivedStats,
    WindowCost,
};
