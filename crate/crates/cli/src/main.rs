//! `taplab`: corpus statistics, keypad layout construction, and multitap
//! cost comparison from the command line.
//!
//! Data goes to stdout (or files under `--out-dir`); progress notes and
//! errors go to stderr. Every subcommand is deterministic for identical
//! inputs and flags.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use taplab_core::bundled;
use taplab_core::corpus::{
    self, normalize, FrequencyTable, NonAlphabetAction, NormalizationPolicy,
};
use taplab_core::keymodel::{default_keypad, KeypadModel};
use taplab_core::layout::{self, build_boustrophedon, Layout};
use taplab_core::report::{
    self, entries_to_csv, render, report_to_json, ComparisonReport, RenderFormat,
};
use taplab_core::simulate::{evaluate_text, CostParams, CostReport};

#[derive(Parser)]
#[command(
    name = "taplab",
    version,
    about = "Analyze and compare multitap phone-keypad layouts over text corpora"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    options: GlobalOptions,
}

#[derive(Args)]
struct GlobalOptions {
    /// Output format: table, csv, json, or svg (svg applies to compare)
    #[arg(long, global = true, default_value = "table")]
    format: String,

    /// Write output files into this directory instead of stdout
    #[arg(long, global = true, value_name = "DIR")]
    out_dir: Option<PathBuf>,

    /// Treatment of digits, punctuation, and other non-letters
    #[arg(long, global = true, value_enum, default_value_t = PolicyArg::Space)]
    policy: PolicyArg,

    /// Seconds per key press in the time model
    #[arg(long, global = true, default_value_t = 0.2, value_name = "SECONDS")]
    tap_time: f64,

    /// Seconds lost whenever consecutive letters share a key
    #[arg(long, global = true, default_value_t = 1.0, value_name = "SECONDS")]
    jam_timeout: f64,

    /// Exclude spaces from tap totals and key usage
    #[arg(long, global = true)]
    letters_only: bool,

    /// JSON file with an alternative keypad ergonomics table
    #[arg(long, global = true, value_name = "FILE")]
    keypad: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolicyArg {
    /// Remove non-letters entirely
    Drop,
    /// Replace non-letters with a space
    Space,
}

#[derive(Subcommand)]
enum Command {
    /// Compute unigram and bigram frequency tables over text files
    Stats {
        /// Corpus files; the name `bundled` selects the built-in corpus
        #[arg(required = true, value_name = "FILE")]
        corpus: Vec<String>,
    },
    /// Construct a layout from a letter ranking
    BuildLayout {
        /// `reference`, `strict`, `from-corpus`, or a ranking file
        #[arg(long, value_name = "SOURCE")]
        ranking: String,
        /// Corpus files for `--ranking from-corpus`
        #[arg(value_name = "FILE")]
        corpus: Vec<String>,
        /// Name recorded in the layout document
        #[arg(long)]
        name: Option<String>,
    },
    /// Evaluate a layout's typing cost over a corpus
    Eval {
        /// Built-in layout name (`proposed`, `traditional`) or a layout file
        #[arg(long, value_name = "NAME|FILE")]
        layout: String,
        /// Corpus files; the name `bundled` selects the built-in corpus
        #[arg(long, value_name = "FILE")]
        corpus: Vec<String>,
        /// Literal text to evaluate instead of corpus files
        #[arg(long, conflicts_with = "corpus")]
        text: Option<String>,
    },
    /// Compare two or more layouts over the same corpus
    Compare {
        /// Layout to include (repeat the flag; name or file)
        #[arg(long = "layout", value_name = "NAME|FILE")]
        layouts: Vec<String>,
        /// Corpus files; the name `bundled` selects the built-in corpus
        #[arg(long, value_name = "FILE")]
        corpus: Vec<String>,
        /// Literal text to compare over instead of corpus files
        #[arg(long, conflicts_with = "corpus")]
        text: Option<String>,
    },
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let options = &cli.options;
    match &cli.command {
        Command::Stats { corpus } => cmd_stats(options, corpus),
        Command::BuildLayout {
            ranking,
            corpus,
            name,
        } => cmd_build_layout(options, ranking, corpus, name.as_deref()),
        Command::Eval {
            layout,
            corpus,
            text,
        } => cmd_eval(options, layout, corpus, text.as_deref()),
        Command::Compare {
            layouts,
            corpus,
            text,
        } => cmd_compare(options, layouts, corpus, text.as_deref()),
    }
}

fn usage_error(message: &str) -> ! {
    Cli::command()
        .error(ErrorKind::InvalidValue, message)
        .exit()
}

impl GlobalOptions {
    fn policy(&self) -> NormalizationPolicy {
        NormalizationPolicy::with_action(match self.policy {
            PolicyArg::Drop => NonAlphabetAction::Drop,
            PolicyArg::Space => NonAlphabetAction::MapToSpace,
        })
    }

    fn params(&self) -> Result<CostParams> {
        Ok(CostParams::new(self.tap_time, self.jam_timeout)?)
    }

    fn format(&self) -> Result<RenderFormat> {
        Ok(self.format.parse::<RenderFormat>()?)
    }

    fn keypad(&self) -> Result<KeypadModel> {
        match &self.keypad {
            None => Ok(default_keypad()),
            Some(path) => {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("cannot read keypad file `{}`", path.display()))?;
                KeypadModel::from_json(&text)
                    .with_context(|| format!("invalid keypad file `{}`", path.display()))
            }
        }
    }

    /// Writes to `<out-dir>/<file_name>` when an output directory is set,
    /// otherwise to stdout.
    fn emit(&self, file_name: &str, contents: &str) -> Result<()> {
        match &self.out_dir {
            Some(dir) => {
                fs::create_dir_all(dir)
                    .with_context(|| format!("cannot create `{}`", dir.display()))?;
                let path = dir.join(file_name);
                fs::write(&path, contents)
                    .with_context(|| format!("cannot write `{}`", path.display()))?;
                eprintln!("wrote {}", path.display());
            }
            None => print!("{contents}"),
        }
        Ok(())
    }
}

/// One corpus source: a file path or the built-in corpus name.
struct CorpusFile {
    label: String,
    raw: String,
}

fn read_corpus_files(sources: &[String]) -> Result<Vec<CorpusFile>> {
    let mut files = Vec::new();
    for source in sources {
        if source == bundled::DESCRIPTOR {
            for (name, contents) in bundled::files() {
                files.push(CorpusFile {
                    label: format!("bundled/{name}"),
                    raw: contents.to_string(),
                });
            }
        } else {
            let raw = fs::read_to_string(source)
                .with_context(|| format!("cannot read corpus file `{source}`"))?;
            files.push(CorpusFile {
                label: source.clone(),
                raw,
            });
        }
    }
    Ok(files)
}

struct CorpusText {
    descriptor: String,
    normalized: String,
}

/// Loads corpus files (or literal text) and normalizes them. File contents
/// are joined with a newline, so counts match the per-file merge exactly.
fn load_corpus(
    options: &GlobalOptions,
    corpus: &[String],
    text: Option<&str>,
    command: &str,
) -> Result<CorpusText> {
    if let Some(text) = text {
        return Ok(CorpusText {
            descriptor: "text".to_string(),
            normalized: normalize(text, &options.policy()),
        });
    }
    if corpus.is_empty() {
        usage_error(&format!(
            "`{command}` needs at least one `--corpus` file or `--text`"
        ));
    }
    let files = read_corpus_files(corpus)?;
    let descriptor = files
        .iter()
        .map(|f| f.label.as_str())
        .collect::<Vec<_>>()
        .join(", ");
    let raw = files
        .iter()
        .map(|f| f.raw.as_str())
        .collect::<Vec<_>>()
        .join("\n");
    Ok(CorpusText {
        descriptor,
        normalized: normalize(&raw, &options.policy()),
    })
}

fn resolve_layout(source: &str) -> Result<Layout> {
    if let Some(builtin) = layout::builtin(source) {
        return Ok(builtin);
    }
    let text = fs::read_to_string(source)
        .with_context(|| format!("cannot read layout file `{source}`"))?;
    let layout =
        Layout::from_json(&text).with_context(|| format!("invalid layout file `{source}`"))?;
    let violations = layout.validate();
    if !violations.is_empty() {
        let mut message = format!("layout file `{source}` is invalid:");
        for v in violations {
            let _ = write!(message, "\n  - {v}");
        }
        bail!(message);
    }
    Ok(layout)
}

// ---------------------------------------------------------------------------
// stats
// ---------------------------------------------------------------------------

fn cmd_stats(options: &GlobalOptions, corpus: &[String]) -> Result<()> {
    let policy = options.policy();
    let files = read_corpus_files(corpus)?;
    let tables: Vec<FrequencyTable> = files
        .iter()
        .map(|f| FrequencyTable::from_normalized(&normalize(&f.raw, &policy), policy, &f.label))
        .collect();
    let table = FrequencyTable::merge(&tables)?;

    match options.format()? {
        RenderFormat::Table => options.emit("stats.txt", &stats_table(&table)),
        RenderFormat::Csv => {
            if options.out_dir.is_some() {
                options.emit("unigrams.csv", &table.unigram_csv())?;
                options.emit("bigrams.csv", &table.bigram_csv())
            } else {
                options.emit(
                    "",
                    &format!("{}\n{}", table.unigram_csv(), table.bigram_csv()),
                )
            }
        }
        RenderFormat::Json => options.emit("stats.json", &table.to_json()),
        RenderFormat::SvgBarChart => bail!("`stats` has no svg output; use table, csv, or json"),
    }
}

fn stats_table(table: &FrequencyTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "corpus: {}", table.source_descriptor());
    let _ = writeln!(
        out,
        "letters: {}   letter pairs: {}",
        table.total_letters(),
        table.total_bigrams()
    );
    out.push('\n');
    let _ = writeln!(out, "{:<8} {:>10} {:>9}", "letter", "count", "share");
    let mut unigrams: Vec<(char, u64)> = table.unigrams().collect();
    unigrams.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    for (letter, count) in unigrams {
        let _ = writeln!(
            out,
            "{:<8} {:>10} {:>8.2}%",
            letter,
            count,
            100.0 * table.unigram_fraction(letter)
        );
    }
    let mut bigrams: Vec<((char, char), u64)> = table.bigrams().collect();
    bigrams.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let shown = bigrams.len().min(30);
    out.push('\n');
    let _ = writeln!(out, "top {shown} of {} letter pairs:", bigrams.len());
    let _ = writeln!(out, "{:<8} {:>10} {:>9}", "pair", "count", "share");
    for ((a, b), count) in bigrams.into_iter().take(shown) {
        let _ = writeln!(
            out,
            "{:<8} {:>10} {:>8.2}%",
            format!("{a}{b}"),
            count,
            100.0 * table.bigram_fraction((a, b))
        );
    }
    out
}

// ---------------------------------------------------------------------------
// build-layout
// ---------------------------------------------------------------------------

fn cmd_build_layout(
    options: &GlobalOptions,
    ranking: &str,
    corpus: &[String],
    name: Option<&str>,
) -> Result<()> {
    let (letters, default_name): (Vec<char>, &str) = match ranking {
        "reference" => (corpus::reference_ranking().to_vec(), "proposed"),
        "strict" => (corpus::reference_ranking_strict().to_vec(), "strict"),
        "from-corpus" => {
            if corpus.is_empty() {
                usage_error("`--ranking from-corpus` needs at least one corpus file");
            }
            let text = load_corpus(options, corpus, None, "build-layout")?;
            let table = FrequencyTable::from_normalized(
                &text.normalized,
                options.policy(),
                text.descriptor,
            );
            if table.total_letters() == 0 {
                bail!("corpus contains no letters");
            }
            (table.letter_ranking().letters.to_vec(), "from-corpus")
        }
        path => (read_ranking_file(path)?, "custom"),
    };

    let keypad = options.keypad()?;
    let layout = build_boustrophedon(
        &letters,
        &keypad.rank_keys(),
        keypad.space_key(),
        keypad.symbol_key(),
    )?
    .with_name(name.unwrap_or(default_name));

    let violations = layout.validate();
    if !violations.is_empty() {
        let mut message = "constructed layout is incomplete:".to_string();
        for v in violations {
            let _ = write!(message, "\n  - {v}");
        }
        bail!(message);
    }
    options.emit("layout.json", &layout.to_json())
}

/// A ranking file lists the 26 letters most-frequent-first, as a single
/// block or separated by whitespace/commas.
fn read_ranking_file(path: &str) -> Result<Vec<char>> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read ranking file `{path}`"))?;
    let letters: Vec<char> = text
        .chars()
        .filter(|c| !c.is_whitespace() && *c != ',')
        .map(|c| c.to_ascii_lowercase())
        .collect();
    if letters.is_empty() {
        bail!("ranking file `{path}` contains no letters");
    }
    Ok(letters)
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

fn cmd_eval(
    options: &GlobalOptions,
    layout_source: &str,
    corpus: &[String],
    text: Option<&str>,
) -> Result<()> {
    let layout = resolve_layout(layout_source)?;
    let keypad = options.keypad()?;
    let input = load_corpus(options, corpus, text, "eval")?;
    let report = evaluate_text(
        &layout,
        &keypad,
        &input.normalized,
        options.params()?,
        options.letters_only,
    )?;

    match options.format()? {
        RenderFormat::Table => {
            options.emit("report.txt", &cost_report_table(&report, &input.descriptor))
        }
        RenderFormat::Csv => options.emit("report.csv", &entries_to_csv(&[report])),
        RenderFormat::Json => {
            let mut json = serde_json::to_string_pretty(&report).context("serializing report")?;
            json.push('\n');
            options.emit("report.json", &json)
        }
        RenderFormat::SvgBarChart => {
            bail!("`eval` has no svg output; use `compare` for charts")
        }
    }
}

fn cost_report_table(report: &CostReport, corpus: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "layout: {}    corpus: {}", report.layout_name, corpus);
    let _ = writeln!(
        out,
        "characters: {} (letters only: {})",
        report.total_chars, report.letters_only
    );
    let _ = writeln!(
        out,
        "taps: {} ({:.4} per character)",
        report.total_taps,
        report.taps_per_char()
    );
    let _ = writeln!(
        out,
        "jams: {} of {} adjacent pairs (rate {:.5}, double letters {})",
        report.jam_events, report.adjacent_pairs, report.jam_rate, report.double_letter_jams
    );
    let _ = writeln!(
        out,
        "key usage: flexible {} / inflexible {}",
        report.flexible_usage, report.inflexible_usage
    );
    for (key, count) in &report.key_usage {
        let _ = writeln!(out, "  key {key}: {count}");
    }
    let _ = writeln!(out, "modeled time: {:.1} s", report.modeled_time_seconds);
    out
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

fn cmd_compare(
    options: &GlobalOptions,
    layout_sources: &[String],
    corpus: &[String],
    text: Option<&str>,
) -> Result<()> {
    if layout_sources.len() < 2 {
        usage_error("`compare` needs at least two `--layout` flags");
    }
    let layouts = layout_sources
        .iter()
        .map(|source| resolve_layout(source))
        .collect::<Result<Vec<_>>>()?;
    let keypad = options.keypad()?;
    let input = load_corpus(options, corpus, text, "compare")?;
    let comparison = report::compare(
        &layouts,
        &keypad,
        &input.normalized,
        input.descriptor,
        options.params()?,
        options.letters_only,
    )?;

    if options.out_dir.is_some() {
        write_comparison_files(options, &comparison)
    } else {
        print!("{}", render(&comparison, options.format()?));
        Ok(())
    }
}

/// The canonical comparison artifacts: report.csv, report.json, chart.svg.
fn write_comparison_files(options: &GlobalOptions, comparison: &ComparisonReport) -> Result<()> {
    options.emit("report.csv", &entries_to_csv(&comparison.entries))?;
    options.emit("report.json", &report_to_json(comparison))?;
    options.emit("chart.svg", &report::svg_bar_chart(&[comparison]))?;
    Ok(())
}
