use std::io;

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("pattern must not be empty")]
    EmptyPattern,

    #[error("corpus must not be empty")]
    EmptyCorpus,

    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("rarity score {0} is outside 1..=50")]
    InvalidScore(u32),

    #[error("frequency table line {line}: {reason}")]
    TableParse { line: usize, reason: String },

    #[error("{source_name}: {source}")]
    Io {
        source_name: String,
        #[source]
        source: io::Error,
    },

    #[error(
        "matcher disagreement on pattern {pattern:?}: {matcher} differs from naive at index {index} \
         (naive {expected:?}, {matcher} {actual:?})"
    )]
    MatcherDisagreement {
        pattern: String,
        matcher: &'static str,
        index: usize,
        expected: Option<usize>,
        actual: Option<usize>,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
