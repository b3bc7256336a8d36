use crate::error::{Error, Result};

/// Expected comparisons per window for a matcher whose first test succeeds
/// with probability `match_probability` and that then verifies the other
/// `pattern_length - 1` bytes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonEstimate {
    pub match_probability: f64,
    pub pattern_length: usize,
    pub expected_comparisons: f64,
}

/// `1 + p * (m - 1)`.
pub fn expected_comparisons(
    match_probability: f64,
    pattern_length: usize,
) -> Result<ComparisonEstimate> {
    if !(0.0..=1.0).contains(&match_probability) {
        return Err(Error::InvalidProbability(match_probability));
    }
    if pattern_length == 0 {
        return Err(Error::EmptyPattern);
    }
    Ok(ComparisonEstimate {
        match_probability,
        pattern_length,
        expected_comparisons: 1.0 + match_probability * (pattern_length - 1) as f64,
    })
}

/// Fraction of `text` equal to `c`, byte-exact.
pub fn char_probability(text: &[u8], c: u8) -> Result<f64> {
    if text.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let count = text.iter().filter(|&&b| b == c).count();
    Ok(count as f64 / text.len() as f64)
}
