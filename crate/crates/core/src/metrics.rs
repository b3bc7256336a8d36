//! Comparison counting and the statistics derived from comparison counts.

use serde::Serialize;

/// Cost of one examined window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WindowCost {
    pub position: usize,
    pub comparisons: u64,
}

/// Counts character-equality tests during a search. When tracing is
/// enabled, each window's cost is also recorded; the recorded costs always
/// sum to `total`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ComparisonCounter {
    total: u64,
    per_alignment: Option<Vec<WindowCost>>,
}

impl ComparisonCounter {
    pub fn new(trace: bool) -> Self {
        ComparisonCounter {
            total: 0,
            per_alignment: trace.then(Vec::new),
        }
    }

    /// Opens a new window at `position`. Later comparisons are charged to it.
    #[inline]
    pub fn begin_window(&mut self, position: usize) {
        if let Some(windows) = &mut self.per_alignment {
            windows.push(WindowCost {
                position,
                comparisons: 0,
            });
        }
    }

    /// Records one equality test and returns its outcome.
    #[inline]
    pub fn compare(&mut self, a: u8, b: u8) -> bool {
        self.total += 1;
        if let Some(last) = self.per_alignment.as_mut().and_then(|w| w.last_mut()) {
            last.comparisons += 1;
        }
        a == b
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn per_alignment(&self) -> Option<&[WindowCost]> {
        self.per_alignment.as_deref()
    }

    pub fn into_parts(self) -> (u64, Option<Vec<WindowCost>>) {
        (self.total, self.per_alignment)
    }
}

/// Ratios of one pattern's counts. `None` marks a zero denominator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DerivedStats {
    /// `100 * (bmh - fbas) / bmh`
    pub improvement_pct: Option<f64>,
    /// `naive / fbas`
    pub speedup_vs_naive: Option<f64>,
    /// `100 * (naive - fbas) / naive`
    pub reduction_vs_naive_pct: Option<f64>,
}

fn ratio(num: f64, den: u64) -> Option<f64> {
    (den > 0).then(|| num / den as f64)
}

/// Derives improvement, speedup and reduction from the four counts.
/// `kmp` does not enter any formula; it is accepted so callers can pass a
/// whole row.
pub fn derive_stats(naive: u64, _kmp: u64, bmh: u64, fbas: u64) -> DerivedStats {
    DerivedStats {
        improvement_pct: ratio(100.0 * (bmh as f64 - fbas as f64), bmh),
        speedup_vs_naive: ratio(naive as f64, fbas),
        reduction_vs_naive_pct: ratio(100.0 * (naive as f64 - fbas as f64), naive),
    }
}

/// Comparison totals for one pattern across the four matchers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub naive: u64,
    pub kmp: u64,
    pub bmh: u64,
    pub fbas: u64,
}

impl Counts {
    pub fn stats(&self) -> DerivedStats {
        derive_stats(self.naive, self.kmp, self.bmh, self.fbas)
    }
}

impl std::ops::Add for Counts {
    type Output = Counts;

    fn add(self, rhs: Counts) -> Counts {
        Counts {
            naive: self.naive + rhs.naive,
            kmp: self.kmp + rhs.kmp,
            bmh: self.bmh + rhs.bmh,
            fbas: self.fbas + rhs.fbas,
        }
    }
}

impl std::iter::Sum for Counts {
    fn sum<I: Iterator<Item = Counts>>(iter: I) -> Counts {
        iter.fold(Counts::default(), |a, b| a + b)
    }
}

/// Statistics over a set of pattern rows.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AggregateStats {
    pub totals: Counts,
    /// Ratios of the summed counts.
    pub pooled: DerivedStats,
    /// Arithmetic mean of the per-row reductions vs naive (rows with a zero
    /// naive count are skipped). This is the "average reduction" figure,
    /// which differs from the pooled reduction whenever rows differ in size.
    pub mean_reduction_vs_naive_pct: Option<f64>,
}

pub fn aggregate_stats(rows: &[Counts]) -> AggregateStats {
    let totals: Counts = rows.iter().copied().sum();
    let reductions: Vec<f64> = rows
        .iter()
        .filter_map(|c| c.stats().reduction_vs_naive_pct)
        .collect();
    let mean =
        (!reductions.is_empty()).then(|| reductions.iter().sum::<f64>() / reductions.len() as f64);
    AggregateStats {
        totals,
        pooled: totals.stats(),
        mean_reduction_vs_naive_pct: mean,
    }
}

/// Rounds half away from zero to two decimals.
pub fn round2(x: f64) -> f64 {
    (x * 100.0).round() / 100.0
}

/// Two-decimal presentation, or `-` for an undefined value.
pub fn format2(x: Option<f64>) -> String {
    match x {
        Some(v) => format!("{:.2}", round2(v)),
        None => "-".to_string(),
    }
}
