use super::{Algorithm, Matcher, Recorder, SearchMode, SearchOutcome, SearchQuery, ShiftTable};
use crate::error::Result;

/// Boyer-Moore-Horspool: verify each window right to left, then shift on
/// the window's last byte.
#[derive(Debug, Clone)]
pub struct Horspool<'p> {
    pattern: &'p [u8],
    shift: ShiftTable,
}

impl<'p> Horspool<'p> {
    pub fn new(pattern: &'p [u8]) -> Result<Self> {
        Ok(Horspool {
            shift: ShiftTable::new(pattern)?,
            pattern,
        })
    }

    pub fn shift_table(&self) -> &ShiftTable {
        &self.shift
    }
}

impl Matcher for Horspool<'_> {
    fn algorithm(&self) -> Algorithm {
        Algorithm::Bmh
    }

    fn pattern(&self) -> &[u8] {
        self.pattern
    }

    fn find(&self, text: &[u8], mode: SearchMode, trace: bool) -> SearchOutcome {
        let pattern = self.pattern;
        let m = pattern.len();
        let n = text.len();
        let mut rec = Recorder::new(trace);
        let mut pos = 0;
        while pos + m <= n {
            rec.window(pos);
            let window = &text[pos..pos + m];
            let full = window
                .iter()
                .zip(pattern)
                .rev()
                .all(|(&t, &p)| rec.eq(t, p));
            if full {
                rec.matched(pos);
                if mode == SearchMode::FirstMatch {
                    break;
                }
            }
            pos += self.shift.step(text[pos + m - 1]);
        }
        rec.finish()
    }
}

pub fn bmh_search(query: &SearchQuery<'_>) -> Result<SearchOutcome> {
    Ok(Horspool::new(query.pattern)?.find(query.text, query.mode, query.trace))
}
