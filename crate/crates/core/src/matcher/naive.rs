use super::{Algorithm, Matcher, Recorder, SearchMode, SearchOutcome, SearchQuery};
use crate::error::{Error, Result};

/// Brute force: every window, left to right, until the first mismatch.
/// Serves as the reference for the other matchers.
#[derive(Debug, Clone)]
pub struct Naive<'p> {
    pattern: &'p [u8],
}

impl<'p> Naive<'p> {
    pub fn new(pattern: &'p [u8]) -> Result<Self> {
        if pattern.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(Naive { pattern })
    }
}

impl Matcher for Naive<'_> {
    fn algorithm(&self) -> Algorithm {
        Algorithm::Naive
    }

    fn pattern(&self) -> &[u8] {
        self.pattern
    }

    fn find(&self, text: &[u8], mode: SearchMode, trace: bool) -> SearchOutcome {
        let pattern = self.pattern;
        let m = pattern.len();
        let mut rec = Recorder::new(trace);
        if text.len() < m {
            return rec.finish();
        }
        for pos in 0..=text.len() - m {
            rec.window(pos);
            let window = &text[pos..pos + m];
            let full = window.iter().zip(pattern).all(|(&t, &p)| rec.eq(t, p));
            if full {
                rec.matched(pos);
                if mode == SearchMode::FirstMatch {
                    break;
                }
            }
        }
        rec.finish()
    }
}

pub fn naive_search(query: &SearchQuery<'_>) -> Result<SearchOutcome> {
    Ok(Naive::new(query.pattern)?.find(query.text, query.mode, query.trace))
}
