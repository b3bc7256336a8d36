//! Frequency-based anchor selection.
//!
//! Horspool's window movement with a different verification order: each
//! window first tests the pattern's rarest byte (the anchor). A miss costs
//! exactly one comparison. On a hit the remaining positions are checked
//! left to right, skipping the anchor, until the first mismatch. The shift
//! always comes from the window's last byte, so FBAS visits exactly the
//! same windows as [`Horspool`](super::Horspool).

use super::{Algorithm, Matcher, Recorder, SearchMode, SearchOutcome, SearchQuery, ShiftTable};
use crate::error::Result;
use crate::freq::{AnchorSelection, FrequencyTable};

#[derive(Debug, Clone)]
pub struct Fbas<'p> {
    pattern: &'p [u8],
    anchor: AnchorSelection,
    shift: ShiftTable,
}

impl<'p> Fbas<'p> {
    pub fn new(pattern: &'p [u8], table: &FrequencyTable) -> Result<Self> {
        Ok(Fbas {
            anchor: table.select_anchor(pattern)?,
            shift: ShiftTable::new(pattern)?,
            pattern,
        })
    }

    pub fn anchor(&self) -> AnchorSelection {
        self.anchor
    }

    pub fn shift_table(&self) -> &ShiftTable {
        &self.shift
    }
}

impl Matcher for Fbas<'_> {
    fn algorithm(&self) -> Algorithm {
        Algorithm::Fbas
    }

    fn pattern(&self) -> &[u8] {
        self.pattern
    }

    fn find(&self, text: &[u8], mode: SearchMode, trace: bool) -> SearchOutcome {
        let pattern = self.pattern;
        let m = pattern.len();
        let n = text.len();
        let a = self.anchor.index;
        let anchor_char = self.anchor.character;
        let mut rec = Recorder::new(trace);
        let mut pos = 0;
        while pos + m <= n {
            rec.window(pos);
            if rec.eq(text[pos + a], anchor_char) {
                rec.anchor_hit();
                let window = &text[pos..pos + m];
                let full = window
                    .iter()
                    .zip(pattern)
                    .enumerate()
                    .filter(|&(i, _)| i != a)
                    .all(|(_, (&t, &p))| rec.eq(t, p));
                if full {
                    rec.matched(pos);
                    if mode == SearchMode::FirstMatch {
                        break;
                    }
                }
            }
            pos += self.shift.step(text[pos + m - 1]);
        }
        rec.finish()
    }
}

pub fn fbas_search(query: &SearchQuery<'_>, table: &FrequencyTable) -> Result<SearchOutcome> {
    Ok(Fbas::new(query.pattern, table)?.find(query.text, query.mode, query.trace))
}
