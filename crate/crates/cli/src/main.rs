use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use fbas_core::freq::display_byte;
use fbas_core::{
    render_report, run_benchmark, Algorithm, Corpus, Fbas, FrequencyTable, PatternSet,
    ReportFormat, SearchMode,
};

/// Exact string search with frequency-based anchor selection.
#[derive(Debug, Parser)]
#[command(name = "fbas", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print 0-based byte offsets of pattern matches.
    Search(SearchArgs),
    /// Show the anchor FBAS would pick for a pattern.
    Anchor(AnchorArgs),
    /// Print the letter rarity table in the table file format.
    Table(TableArgs),
    /// Count comparisons of all four matchers over a corpus.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct SearchArgs {
    pattern: String,
    /// Input file, or `-` for stdin.
    #[arg(default_value = "-")]
    input: PathBuf,
    #[arg(long, default_value = "fbas")]
    algo: Algorithm,
    /// Report every match instead of only the first.
    #[arg(long)]
    all: bool,
    /// Append comparison counts after the offsets.
    #[arg(long)]
    stats: bool,
    #[arg(long, value_name = "PATH")]
    freq_table: Option<PathBuf>,
    /// Lowercase ASCII letters of the input before searching.
    #[arg(long)]
    lowercase: bool,
}

#[derive(Debug, Args)]
struct AnchorArgs {
    pattern: String,
    #[arg(long, value_name = "PATH")]
    freq_table: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TableArgs {
    /// Rank letters by their counts in this file instead.
    #[arg(long, value_name = "PATH")]
    from_corpus: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    corpus: PathBuf,
    patterns: PathBuf,
    #[arg(long, default_value = "text")]
    format: ReportFormat,
    #[arg(long)]
    lowercase: bool,
    #[arg(long, value_name = "PATH")]
    freq_table: Option<PathBuf>,
    /// Stop each search at its first match.
    #[arg(long)]
    first_match: bool,
}

fn read_input(path: &Path) -> Result<Vec<u8>> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf).context("reading stdin")?;
        Ok(buf)
    } else {
        fs::read(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load_table(path: Option<&Path>) -> Result<FrequencyTable> {
    match path {
        Some(p) => Ok(FrequencyTable::load(p)?),
        None => Ok(FrequencyTable::default_table()),
    }
}

fn cmd_search(out: &mut impl Write, args: &SearchArgs) -> Result<ExitCode> {
    let table = load_table(args.freq_table.as_deref())?;
    let pattern = args.pattern.as_bytes();
    let matcher = args.algo.prepare(pattern, &table)?;
    let mut text = read_input(&args.input)?;
    if args.lowercase {
        text.make_ascii_lowercase();
    }
    let mode = if args.all {
        SearchMode::AllMatches
    } else {
        SearchMode::FirstMatch
    };
    let outcome = matcher.find(&text, mode, false);
    for pos in &outcome.positions {
        writeln!(out, "{pos}")?;
    }
    if args.stats {
        writeln!(out, "algorithm: {}", args.algo)?;
        writeln!(out, "comparisons: {}", outcome.comparisons)?;
        writeln!(out, "alignments: {}", outcome.alignments)?;
        if args.algo == Algorithm::Fbas {
            let anchor = Fbas::new(pattern, &table)?.anchor();
            writeln!(
                out,
                "anchor: '{}' @ {} (score {})",
                display_byte(anchor.character),
                anchor.index,
                anchor.score
            )?;
            writeln!(out, "anchor_hits: {}", outcome.anchor_hits)?;
        }
    }
    Ok(if outcome.positions.is_empty() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_anchor(out: &mut impl Write, args: &AnchorArgs) -> Result<ExitCode> {
    let table = load_table(args.freq_table.as_deref())?;
    let anchor = table.select_anchor(args.pattern.as_bytes())?;
    writeln!(out, "{anchor}")?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(out: &mut impl Write, args: &TableArgs) -> Result<ExitCode> {
    let table = match &args.from_corpus {
        Some(path) => FrequencyTable::from_corpus(&read_input(path)?)?,
        None => FrequencyTable::default_table(),
    };
    out.write_all(table.render_letters().as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(out: &mut impl Write, args: &BenchArgs) -> Result<ExitCode> {
    let table = load_table(args.freq_table.as_deref())?;
    let corpus = Corpus::from_bytes(
        args.corpus.display().to_string(),
        read_input(&args.corpus)?,
        args.lowercase,
    )?;
    let patterns =
        String::from_utf8(read_input(&args.patterns)?).context("pattern file is not UTF-8")?;
    let patterns = PatternSet::parse(&patterns);
    let mode = if args.first_match {
        SearchMode::FirstMatch
    } else {
        SearchMode::AllMatches
    };
    let report = run_benchmark(&corpus, &patterns, &table, mode)?;
    out.write_all(&render_report(&report, args.format))?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match &cli.command {
        Command::Search(args) => cmd_search(&mut out, args)?,
        Command::Anchor(args) => cmd_anchor(&mut out, args)?,
        Command::Table(args) => cmd_table(&mut out, args)?,
        Command::Bench(args) => cmd_bench(&mut out, args)?,
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("fbas: {err:#}");
            ExitCode::from(2)
        }
    }
}
