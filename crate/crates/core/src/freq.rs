//! Character rarity scoring and anchor selection.
//!
//! A [`FrequencyTable`] maps every byte to a [`RarityScore`] in `1..=50`,
//! where lower means rarer in natural-language text. Bytes without an
//! explicit entry score [`RarityScore::DEFAULT`]. Lookups fold ASCII
//! uppercase to lowercase; matching itself stays case-sensitive.

use std::fmt;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

/// Rank of a character's frequency. Lower is rarer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RarityScore(u8);

impl RarityScore {
    pub const MIN: RarityScore = RarityScore(1);
    pub const MAX: RarityScore = RarityScore(50);
    /// Score of any byte without an explicit table entry.
    pub const DEFAULT: RarityScore = RarityScore(50);

    pub fn new(value: u32) -> Result<Self> {
        if (1..=50).contains(&value) {
            Ok(RarityScore(value as u8))
        } else {
            Err(Error::InvalidScore(value))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }
}

impl fmt::Display for RarityScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Built-in English/Italian ordering, rarest first, with its scores.
/// Ranks 8, 26 and 27 are unassigned; `v` must stay above `u`.
const DEFAULT_SCORES: [(u8, u8); 26] = [
    (b'z', 1),
    (b'j', 2),
    (b'x', 3),
    (b'q', 4),
    (b'k', 5),
    (b'w', 6),
    (b'y', 7),
    (b'f', 9),
    (b'b', 10),
    (b'g', 11),
    (b'h', 12),
    (b'p', 13),
    (b'm', 14),
    (b'd', 15),
    (b'u', 16),
    (b'v', 17),
    (b'c', 18),
    (b'l', 19),
    (b's', 20),
    (b'n', 21),
    (b'r', 22),
    (b't', 23),
    (b'i', 24),
    (b'o', 25),
    (b'a', 28),
    (b'e', 29),
];

/// Total mapping from bytes to rarity scores. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct FrequencyTable {
    name: String,
    entries: [Option<RarityScore>; 256],
}

impl fmt::Debug for FrequencyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FrequencyTable")
            .field("name", &self.name)
            .field("entries", &self.explicit_entries().collect::<Vec<_>>())
            .finish()
    }
}

impl Default for FrequencyTable {
    fn default() -> Self {
        Self::default_table()
    }
}

impl FrequencyTable {
    /// A table with no explicit entries; every byte scores 50.
    pub fn empty(name: impl Into<String>) -> Self {
        FrequencyTable {
            name: name.into(),
            entries: [None; 256],
        }
    }

    /// The built-in English/Italian letter table.
    pub fn default_table() -> Self {
        let mut table = Self::empty("default");
        for &(byte, score) in &DEFAULT_SCORES {
            table.entries[byte as usize] = Some(RarityScore(score));
        }
        table
    }

    /// Ranks the ASCII letters of `text` by ascending occurrence count
    /// (case-folded). The rarest letter present gets 1; ties go to the
    /// lower byte value. Letters that never occur keep the default.
    pub fn from_corpus(text: &[u8]) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::EmptyCorpus);
        }
        let mut counts = [0u64; 26];
        for &b in text {
            let b = b.to_ascii_lowercase();
            if b.is_ascii_lowercase() {
                counts[(b - b'a') as usize] += 1;
            }
        }
        let mut present: Vec<(u64, u8)> = counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (c, b'a' + i as u8))
            .collect();
        present.sort_unstable();

        let mut table = Self::empty("corpus");
        for (rank, &(_, letter)) in present.iter().enumerate() {
            table.entries[letter as usize] = Some(RarityScore(rank as u8 + 1));
        }
        Ok(table)
    }

    /// Parses the tab-separated table format: `<character>\t<score>` per
    /// line, `#` comments and blank lines ignored. The character must be a
    /// single byte; ASCII uppercase keys are stored lowercased since
    /// lookups fold case.
    pub fn parse(name: impl Into<String>, input: &str) -> Result<Self> {
        let mut table = Self::empty(name);
        for (idx, raw) in input.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |reason: String| Error::TableParse {
                line: line_no,
                reason,
            };
            let (key, value) = line
                .rsplit_once('\t')
                .ok_or_else(|| parse_err("expected <character>\\t<score>".into()))?;
            let key = key.as_bytes();
            if key.len() != 1 {
                return Err(parse_err(format!(
                    "character must be a single byte, got {} bytes",
                    key.len()
                )));
            }
            let value: u32 = value
                .trim()
                .parse()
                .map_err(|e| parse_err(format!("bad score {value:?}: {e}")))?;
            let score = RarityScore::new(value).map_err(|e| parse_err(e.to_string()))?;
            table.entries[key[0].to_ascii_lowercase() as usize] = Some(score);
        }
        Ok(table)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            source_name: path.display().to_string(),
            source,
        })?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "custom".to_string());
        Self::parse(name, &text)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Score of `c`, folding ASCII uppercase first.
    pub fn score(&self, c: u8) -> RarityScore {
        self.entries[c.to_ascii_lowercase() as usize].unwrap_or(RarityScore::DEFAULT)
    }

    /// Bytes with an explicit entry, in byte order.
    pub fn explicit_entries(&self) -> impl Iterator<Item = (u8, RarityScore)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter_map(|(b, s)| s.map(|s| (b as u8, s)))
    }

    /// The 26 lowercase letters in the table file format, ordered by score
    /// and then by letter. Feeding the output back through [`parse`]
    /// reproduces every letter's score.
    ///
    /// [`parse`]: FrequencyTable::parse
    pub fn render_letters(&self) -> String {
        let mut letters: Vec<(RarityScore, u8)> =
            (b'a'..=b'z').map(|b| (self.score(b), b)).collect();
        letters.sort_unstable();
        let mut out = format!("# frequency table: {}\n", self.name);
        for (score, letter) in letters {
            out.push(letter as char);
            out.push('\t');
            out.push_str(&score.to_string());
            out.push('\n');
        }
        out
    }

    /// Picks the first pattern position with the minimal score.
    pub fn select_anchor(&self, pattern: &[u8]) -> Result<AnchorSelection> {
        select_anchor(pattern, self)
    }
}

/// The anchor chosen for a pattern: its offset, byte, and score.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnchorSelection {
    pub index: usize,
    pub character: u8,
    pub score: RarityScore,
}

impl fmt::Display for AnchorSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "index={} char={} score={}",
            self.index,
            display_byte(self.character),
            self.score
        )
    }
}

/// First index attaining the minimum score; a later position only wins
/// with a strictly smaller score.
pub fn select_anchor(pattern: &[u8], table: &FrequencyTable) -> Result<AnchorSelection> {
    let (&first, rest) = pattern.split_first().ok_or(Error::EmptyPattern)?;
    let mut best = AnchorSelection {
        index: 0,
        character: first,
        score: table.score(first),
    };
    for (offset, &c) in rest.iter().enumerate() {
        let score = table.score(c);
        if score < best.score {
            best = AnchorSelection {
                index: offset + 1,
                character: c,
                score,
            };
        }
    }
    Ok(best)
}

/// Printable ASCII as itself, everything else as `\xNN`.
pub fn display_byte(b: u8) -> String {
    if b.is_ascii_graphic() || b == b' ' {
        (b as char).to_string()
    } else {
        format!("\\x{b:02x}")
    }
}
