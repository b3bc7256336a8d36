use crate::error::{Error, Result};

/// Horspool bad-character shifts for one pattern.
///
/// Only bytes occurring in `P[0..m-1]` (the pattern without its last byte)
/// have an entry: `m - 1 - (last index of the byte there)`. Every other
/// byte shifts by `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftTable {
    entries: [Option<usize>; 256],
    pattern_length: usize,
}

impl ShiftTable {
    pub fn new(pattern: &[u8]) -> Result<Self> {
        let m = pattern.len();
        if m == 0 {
            return Err(Error::EmptyPattern);
        }
        let mut entries = [None; 256];
        for (i, &c) in pattern[..m - 1].iter().enumerate() {
            entries[c as usize] = Some(m - 1 - i);
        }
        Ok(ShiftTable {
            entries,
            pattern_length: m,
        })
    }

    pub fn pattern_length(&self) -> usize {
        self.pattern_length
    }

    pub fn entry(&self, c: u8) -> Option<usize> {
        self.entries[c as usize]
    }

    /// Shift for a window ending in `last_window_byte`; always in `1..=m`.
    #[inline]
    pub fn step(&self, last_window_byte: u8) -> usize {
        self.entries[last_window_byte as usize].unwrap_or(self.pattern_length)
    }

    /// Explicit entries in byte order.
    pub fn entries(&self) -> impl Iterator<Item = (u8, usize)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter_map(|(b, s)| s.map(|s| (b as u8, s)))
    }
}

pub fn build_shift_table(pattern: &[u8]) -> Result<ShiftTable> {
    ShiftTable::new(pattern)
}

pub fn shift_step(table: &ShiftTable, last_window_byte: u8) -> usize {
    table.step(last_window_byte)
}
