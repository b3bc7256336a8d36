//! Benchmark harness: run every pattern of a set through all four matchers
//! over one corpus, check that they agree, and tabulate comparison counts.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::freq::{display_byte, AnchorSelection, FrequencyTable};
use crate::matcher::{Algorithm, SearchMode, SearchOutcome};
use crate::metrics::{aggregate_stats, format2, AggregateStats, Counts, DerivedStats};

/// Text being searched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    bytes: Vec<u8>,
    source_name: String,
}

impl Corpus {
    /// Wraps raw bytes. With `lowercase`, ASCII letters are folded; nothing
    /// else is touched.
    pub fn from_bytes(
        source_name: impl Into<String>,
        mut bytes: Vec<u8>,
        lowercase: bool,
    ) -> Result<Self> {
        if bytes.is_empty() {
            return Err(Error::EmptyCorpus);
        }
        if lowercase {
            bytes.make_ascii_lowercase();
        }
        Ok(Corpus {
            bytes,
            source_name: source_name.into(),
        })
    }

    pub fn from_reader<R: Read>(
        source_name: impl Into<String>,
        mut reader: R,
        lowercase: bool,
    ) -> Result<Self> {
        let source_name = source_name.into();
        let mut bytes = Vec::new();
        reader.read_to_end(&mut bytes).map_err(|source| Error::Io {
            source_name: source_name.clone(),
            source,
        })?;
        Self::from_bytes(source_name, bytes, lowercase)
    }

    pub fn load(path: &Path, lowercase: bool) -> Result<Self> {
        let name = path.display().to_string();
        let bytes = fs::read(path).map_err(|source| Error::Io {
            source_name: name.clone(),
            source,
        })?;
        Self::from_bytes(name, bytes, lowercase)
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn source_name(&self) -> &str {
        &self.source_name
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    pub bytes: Vec<u8>,
    pub label: Option<String>,
}

impl Pattern {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self> {
        let bytes = bytes.into();
        if bytes.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(Pattern { bytes, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }
}

/// Ordered list of non-empty patterns. Duplicates are kept.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PatternSet {
    patterns: Vec<Pattern>,
}

impl PatternSet {
    pub fn new(patterns: Vec<Pattern>) -> Self {
        PatternSet { patterns }
    }

    pub fn from_strs<S: AsRef<str>>(patterns: &[S]) -> Result<Self> {
        patterns
            .iter()
            .map(|p| Pattern::new(p.as_ref().as_bytes()))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    /// One pattern per line, verbatim up to the line break. Lines starting
    /// with `#` and empty lines are skipped.
    pub fn parse(input: &str) -> Self {
        let patterns = input
            .lines()
            .map(|l| l.strip_suffix('\r').unwrap_or(l))
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| Pattern {
                bytes: l.as_bytes().to_vec(),
                label: None,
            })
            .collect();
        PatternSet { patterns }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            source_name: path.display().to_string(),
            source,
        })?;
        Ok(Self::parse(&text))
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusMeta {
    pub source_name: String,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub pattern: Vec<u8>,
    pub label: Option<String>,
    pub counts: Counts,
    pub anchor: AnchorSelection,
    pub stats: DerivedStats,
    /// Number of occurrences every matcher agreed on.
    pub matches: usize,
    /// Set when an earlier row has the same pattern bytes.
    pub duplicate: bool,
}

impl BenchRow {
    pub fn length(&self) -> usize {
        self.pattern.len()
    }

    pub fn pattern_str(&self) -> String {
        String::from_utf8_lossy(&self.pattern).into_owned()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub totals: AggregateStats,
    pub corpus_meta: CorpusMeta,
    pub mode: SearchMode,
    pub table_name: String,
}

impl BenchReport {
    /// Builds a report from finished rows, computing the totals.
    pub fn from_rows(
        rows: Vec<BenchRow>,
        corpus_meta: CorpusMeta,
        mode: SearchMode,
        table_name: impl Into<String>,
    ) -> Self {
        let counts: Vec<Counts> = rows.iter().map(|r| r.counts).collect();
        BenchReport {
            totals: aggregate_stats(&counts),
            rows,
            corpus_meta,
            mode,
            table_name: table_name.into(),
        }
    }
}

fn check_agreement(
    pattern: &[u8],
    algo: Algorithm,
    expected: &[usize],
    actual: &[usize],
) -> Result<()> {
    if expected == actual {
        return Ok(());
    }
    let index = expected
        .iter()
        .zip(actual)
        .position(|(e, a)| e != a)
        .unwrap_or_else(|| expected.len().min(actual.len()));
    Err(Error::MatcherDisagreement {
        pattern: String::from_utf8_lossy(pattern).into_owned(),
        matcher: algo.name(),
        index,
        expected: expected.get(index).copied(),
        actual: actual.get(index).copied(),
    })
}

fn run_row(
    corpus: &Corpus,
    pattern: &Pattern,
    table: &FrequencyTable,
    mode: SearchMode,
) -> Result<BenchRow> {
    let mut outcomes: Vec<SearchOutcome> = Vec::with_capacity(4);
    for algo in Algorithm::ALL {
        let matcher = algo.prepare(&pattern.bytes, table)?;
        outcomes.push(matcher.find(corpus.bytes(), mode, false));
    }
    let reference = &outcomes[0].positions;
    for (algo, outcome) in Algorithm::ALL.iter().zip(&outcomes).skip(1) {
        check_agreement(&pattern.bytes, *algo, reference, &outcome.positions)?;
    }
    let counts = Counts {
        naive: outcomes[0].comparisons,
        kmp: outcomes[1].comparisons,
        bmh: outcomes[2].comparisons,
        fbas: outcomes[3].comparisons,
    };
    Ok(BenchRow {
        pattern: pattern.bytes.clone(),
        label: pattern.label.clone(),
        counts,
        anchor: table.select_anchor(&pattern.bytes)?,
        stats: counts.stats(),
        matches: reference.len(),
        duplicate: false,
    })
}

/// Runs naive, KMP, BMH and FBAS for each pattern over the same corpus
/// bytes. Rows are computed in parallel and returned in input order. Any
/// disagreement between a matcher and naive is fatal.
pub fn run_benchmark(
    corpus: &Corpus,
    patterns: &PatternSet,
    table: &FrequencyTable,
    mode: SearchMode,
) -> Result<BenchReport> {
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut rows = patterns
        .patterns()
        .par_iter()
        .map(|p| run_row(corpus, p, table, mode))
        .collect::<Result<Vec<_>>>()?;

    let mut seen = HashSet::new();
    for row in &mut rows {
        row.duplicate = !seen.insert(row.pattern.clone());
    }

    let meta = CorpusMeta {
        source_name: corpus.source_name().to_string(),
        length: corpus.len(),
    };
    Ok(BenchReport::from_rows(rows, meta, mode, table.name()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Text,
    Csv,
    Json,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "text" | "txt" => Ok(ReportFormat::Text),
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            other => Err(format!("unknown report format {other:?}")),
        }
    }
}

pub const CSV_HEADER: [&str; 11] = [
    "pattern",
    "length",
    "naive",
    "kmp",
    "bmh",
    "fbas",
    "improvement_pct",
    "speedup_vs_naive",
    "anchor_index",
    "anchor_char",
    "anchor_score",
];

pub fn render_report(report: &BenchReport, format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Text => render_text(report).into_bytes(),
        ReportFormat::Markdown => render_markdown(report).into_bytes(),
        ReportFormat::Csv => render_csv(report),
        ReportFormat::Json => render_json(report),
    }
}

/// `1234567` -> `1,234,567`.
fn thousands(n: u64) -> String {
    let digits = n.to_string();
    let mut out = String::with_capacity(digits.len() + digits.len() / 3);
    for (i, c) in digits.chars().enumerate() {
        if i > 0 && (digits.len() - i).is_multiple_of(3) {
            out.push(',');
        }
        out.push(c);
    }
    out
}

fn pct(x: Option<f64>) -> String {
    match x {
        Some(_) => format!("{}%", format2(x)),
        None => "-".to_string(),
    }
}

fn anchor_cell(a: &AnchorSelection) -> String {
    format!(
        "'{}' @ {} ({})",
        display_byte(a.character),
        a.index,
        a.score
    )
}

fn row_name(row: &BenchRow) -> String {
    let mut name = row.label.clone().unwrap_or_else(|| row.pattern_str());
    if row.duplicate {
        name.push_str(" (dup)");
    }
    name
}

fn render_text(report: &BenchReport) -> String {
    let header = [
        "Pattern",
        "Length",
        "Naive",
        "KMP",
        "BMH",
        "FBAS",
        "Improvement",
        "Anchor",
    ];
    let mut cells: Vec<[String; 8]> = report
        .rows
        .iter()
        .map(|r| {
            [
                row_name(r),
                r.length().to_string(),
                thousands(r.counts.naive),
                thousands(r.counts.kmp),
                thousands(r.counts.bmh),
                thousands(r.counts.fbas),
                pct(r.stats.improvement_pct),
                anchor_cell(&r.anchor),
            ]
        })
        .collect();
    let t = &report.totals;
    cells.push([
        "Total".into(),
        "-".into(),
        thousands(t.totals.naive),
        thousands(t.totals.kmp),
        thousands(t.totals.bmh),
        thousands(t.totals.fbas),
        pct(t.pooled.improvement_pct),
        String::new(),
    ]);

    let mut widths = header.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }

    let mut out = String::new();
    let _ = writeln!(
        out,
        "corpus: {} ({} bytes), mode: {}, table: {}",
        report.corpus_meta.source_name,
        report.corpus_meta.length,
        report.mode.as_str(),
        report.table_name
    );
    let line = |out: &mut String, row: &[String]| {
        let mut s = String::new();
        for (i, (c, w)) in row.iter().zip(widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            // Text columns left-aligned, numbers right-aligned.
            if i == 0 || i == 7 {
                let _ = write!(s, "{c:<w$}");
            } else {
                let _ = write!(s, "{c:>w$}");
            }
        }
        let _ = writeln!(out, "{}", s.trim_end());
    };
    line(&mut out, &header.map(String::from));
    let rule: usize = widths.iter().sum::<usize>() + 2 * (widths.len() - 1);
    let _ = writeln!(out, "{}", "-".repeat(rule));
    let (body, total) = cells.split_at(cells.len() - 1);
    for row in body {
        line(&mut out, row);
    }
    let _ = writeln!(out, "{}", "-".repeat(rule));
    line(&mut out, &total[0]);
    let _ = writeln!(
        out,
        "speedup vs naive: {}x, reduction vs naive: {} pooled, {} mean per pattern",
        format2(t.pooled.speedup_vs_naive),
        pct(t.pooled.reduction_vs_naive_pct),
        pct(t.mean_reduction_vs_naive_pct)
    );
    out
}

fn render_markdown(report: &BenchReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Corpus `{}` ({} bytes), mode `{}`, table `{}`\n",
        report.corpus_meta.source_name,
        report.corpus_meta.length,
        report.mode.as_str(),
        report.table_name
    );
    out.push_str("| Pattern | Length | Naive | KMP | BMH | FBAS | Improvement | Anchor |\n");
    out.push_str("|:--|--:|--:|--:|--:|--:|--:|:--|\n");
    for r in &report.rows {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} |",
            row_name(r).replace('|', "\\|"),
            r.length(),
            thousands(r.counts.naive),
            thousands(r.counts.kmp),
            thousands(r.counts.bmh),
            thousands(r.counts.fbas),
            pct(r.stats.improvement_pct),
            anchor_cell(&r.anchor).replace('|', "\\|"),
        );
    }
    let t = &report.totals;
    let _ = writeln!(
        out,
        "| **Total** | - | {} | {} | {} | {} | {} | |",
        thousands(t.totals.naive),
        thousands(t.totals.kmp),
        thousands(t.totals.bmh),
        thousands(t.totals.fbas),
        pct(t.pooled.improvement_pct),
    );
    let _ = writeln!(
        out,
        "\nSpeedup vs naive: {}x. Reduction vs naive: {} pooled, {} mean per pattern.",
        format2(t.pooled.speedup_vs_naive),
        pct(t.pooled.reduction_vs_naive_pct),
        pct(t.mean_reduction_vs_naive_pct)
    );
    out
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn render_csv(report: &BenchReport) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    // Writing to a Vec cannot fail.
    w.write_record(CSV_HEADER).expect("in-memory csv");
    for r in &report.rows {
        w.write_record([
            r.pattern_str(),
            r.length().to_string(),
            r.counts.naive.to_string(),
            r.counts.kmp.to_string(),
            r.counts.bmh.to_string(),
            r.counts.fbas.to_string(),
            opt(r.stats.improvement_pct),
            opt(r.stats.speedup_vs_naive),
            r.anchor.index.to_string(),
            display_byte(r.anchor.character),
            r.anchor.score.to_string(),
        ])
        .expect("in-memory csv");
    }
    let t = &report.totals;
    w.write_record([
        "TOTAL".to_string(),
        String::new(),
        t.totals.naive.to_string(),
        t.totals.kmp.to_string(),
        t.totals.bmh.to_string(),
        t.totals.fbas.to_string(),
        opt(t.pooled.improvement_pct),
        opt(t.pooled.speedup_vs_naive),
        String::new(),
        String::new(),
        String::new(),
    ])
    .expect("in-memory csv");
    w.into_inner().expect("in-memory csv")
}

#[derive(Serialize)]
struct JsonAnchor {
    index: usize,
    char: String,
    score: u8,
}

#[derive(Serialize)]
struct JsonRow<'a> {
    pattern: String,
    label: Option<&'a str>,
    length: usize,
    naive: u64,
    kmp: u64,
    bmh: u64,
    fbas: u64,
    matches: usize,
    improvement_pct: Option<f64>,
    speedup_vs_naive: Option<f64>,
    reduction_vs_naive_pct: Option<f64>,
    anchor: JsonAnchor,
    duplicate: bool,
}

#[derive(Serialize)]
struct JsonTotals {
    naive: u64,
    kmp: u64,
    bmh: u64,
    fbas: u64,
    improvement_pct: Option<f64>,
    speedup_vs_naive: Option<f64>,
    reduction_vs_naive_pct: Option<f64>,
    mean_reduction_vs_naive_pct: Option<f64>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    corpus_meta: &'a CorpusMeta,
    mode: &'static str,
    rows: Vec<JsonRow<'a>>,
    totals: JsonTotals,
}

fn render_json(report: &BenchReport) -> Vec<u8> {
    let t = &report.totals;
    let doc = JsonReport {
        corpus_meta: &report.corpus_meta,
        mode: report.mode.as_str(),
        rows: report
            .rows
            .iter()
            .map(|r| JsonRow {
                pattern: r.pattern_str(),
                label: r.label.as_deref(),
                length: r.length(),
                naive: r.counts.naive,
                kmp: r.counts.kmp,
                bmh: r.counts.bmh,
                fbas: r.counts.fbas,
                matches: r.matches,
                improvement_pct: r.stats.improvement_pct,
                speedup_vs_naive: r.stats.speedup_vs_naive,
                reduction_vs_naive_pct: r.stats.reduction_vs_naive_pct,
                anchor: JsonAnchor {
                    index: r.anchor.index,
                    char: display_byte(r.anchor.character),
                    score: r.anchor.score.get(),
                },
                duplicate: r.duplicate,
            })
            .collect(),
        totals: JsonTotals {
            naive: t.totals.naive,
            kmp: t.totals.kmp,
            bmh: t.totals.bmh,
            fbas: t.totals.fbas,
            improvement_pct: t.pooled.improvement_pct,
            speedup_vs_naive: t.pooled.speedup_vs_naive,
            reduction_vs_naive_pct: t.pooled.reduction_vs_naive_pct,
            mean_reduction_vs_naive_pct: t.mean_reduction_vs_naive_pct,
        },
    };
    let mut out = serde_json::to_vec_pretty(&doc).expect("report serializes");
    out.push(b'\n');
    out
}
