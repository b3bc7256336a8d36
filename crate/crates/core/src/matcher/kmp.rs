use super::{Algorithm, Matcher, Recorder, SearchMode, SearchOutcome, SearchQuery};
use crate::error::{Error, Result};

/// Knuth-Morris-Pratt. Building the failure function is not counted.
#[derive(Debug, Clone)]
pub struct Kmp<'p> {
    pattern: &'p [u8],
    /// `fail[q]`: length of the longest proper border of `pattern[..=q]`.
    fail: Vec<usize>,
}

impl<'p> Kmp<'p> {
    pub fn new(pattern: &'p [u8]) -> Result<Self> {
        if pattern.is_empty() {
            return Err(Error::EmptyPattern);
        }
        let m = pattern.len();
        let mut fail = vec![0; m];
        let mut k = 0;
        for q in 1..m {
            while k > 0 && pattern[k] != pattern[q] {
                k = fail[k - 1];
            }
            if pattern[k] == pattern[q] {
                k += 1;
            }
            fail[q] = k;
        }
        Ok(Kmp { pattern, fail })
    }

    pub fn failure_function(&self) -> &[usize] {
        &self.fail
    }
}

impl Matcher for Kmp<'_> {
    fn algorithm(&self) -> Algorithm {
        Algorithm::Kmp
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
        // A window is the alignment start `i - q`; it only moves forward.
        let mut window = None;
        let mut q = 0;
        for (i, &c) in text.iter().enumerate() {
            loop {
                let start = i - q;
                if window != Some(start) {
                    window = Some(start);
                    rec.window(start);
                }
                if rec.eq(c, pattern[q]) {
                    q += 1;
                    break;
                }
                if q == 0 {
                    break;
                }
                q = self.fail[q - 1];
            }
            if q == m {
                rec.matched(i + 1 - m);
                if mode == SearchMode::FirstMatch {
                    break;
                }
                q = self.fail[m - 1];
            }
        }
        rec.finish()
    }
}

pub fn kmp_search(query: &SearchQuery<'_>) -> Result<SearchOutcome> {
    Ok(Kmp::new(query.pattern)?.find(query.text, query.mode, query.trace))
}
