//! Side-by-side layout comparisons and their rendered forms: text table,
//! CSV, JSON, and a deterministic SVG bar chart.
//!
//! Counts never pass through floating point in any format, and floats are
//! written with Rust's shortest round-trip formatting, so CSV and JSON
//! round-trip every field exactly. Identical reports render to byte-identical
//! documents.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corpus::normalize;
use crate::error::{Error, Result};
use crate::keymodel::{KeyId, KeypadModel};
use crate::layout::Layout;
use crate::simulate::{evaluate_text, CostParams, CostReport};

/// Derived comparison figures for one ordered pair of entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairwiseDelta {
    pub numerator: String,
    pub denominator: String,
    /// `numerator.total_taps / denominator.total_taps`, from exact counts.
    pub tap_ratio: f64,
    /// `numerator.jam_rate - denominator.jam_rate`.
    pub jam_rate_delta: f64,
    /// `numerator.flexible_usage - denominator.flexible_usage`.
    pub flexible_usage_delta: i64,
}

/// Evaluations of two or more layouts over the identical corpus and
/// parameters, plus pairwise deltas.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub corpus_descriptor: String,
    pub params: CostParams,
    pub letters_only: bool,
    pub entries: Vec<CostReport>,
    pub deltas: Vec<PairwiseDelta>,
}

/// Evaluates every layout over the same normalized text and derives the
/// pairwise deltas. Requires at least two layouts and a corpus with at
/// least one letter.
pub fn compare(
    layouts: &[Layout],
    keypad: &KeypadModel,
    normalized_text: &str,
    corpus_descriptor: impl Into<String>,
    params: CostParams,
    letters_only: bool,
) -> Result<ComparisonReport> {
    if layouts.len() < 2 {
        return Err(Error::NotEnoughLayouts);
    }
    if !normalized_text.chars().any(|c| c.is_ascii_lowercase()) {
        return Err(Error::EmptyCorpus);
    }
    let entries = layouts
        .iter()
        .map(|layout| evaluate_text(layout, keypad, normalized_text, params, letters_only))
        .collect::<Result<Vec<_>>>()?;
    let deltas = derive_deltas(&entries);
    Ok(ComparisonReport {
        corpus_descriptor: corpus_descriptor.into(),
        params,
        letters_only,
        entries,
        deltas,
    })
}

/// Recomputes the pairwise deltas for a list of entries (all ordered pairs
/// i < j).
pub fn derive_deltas(entries: &[CostReport]) -> Vec<PairwiseDelta> {
    let mut deltas = Vec::new();
    for i in 0..entries.len() {
        for j in (i + 1)..entries.len() {
            let (a, b) = (&entries[i], &entries[j]);
            deltas.push(PairwiseDelta {
                numerator: a.layout_name.clone(),
                denominator: b.layout_name.clone(),
                tap_ratio: a.total_taps as f64 / b.total_taps as f64,
                jam_rate_delta: a.jam_rate - b.jam_rate,
                flexible_usage_delta: a.flexible_usage as i64 - b.flexible_usage as i64,
            });
        }
    }
    deltas
}

/// Output document formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Table,
    Csv,
    Json,
    SvgBarChart,
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(RenderFormat::Table),
            "csv" => Ok(RenderFormat::Csv),
            "json" => Ok(RenderFormat::Json),
            "svg" | "svg-bar-chart" => Ok(RenderFormat::SvgBarChart),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Renders a report in the requested format.
pub fn render(report: &ComparisonReport, format: RenderFormat) -> String {
    match format {
        RenderFormat::Table => render_table(report),
        RenderFormat::Csv => entries_to_csv(&report.entries),
        RenderFormat::Json => report_to_json(report),
        RenderFormat::SvgBarChart => svg_bar_chart(&[report]),
    }
}

pub fn report_to_json(report: &ComparisonReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serialization cannot fail");
    s.push('\n');
    s
}

pub fn report_from_json(text: &str) -> Result<ComparisonReport> {
    Ok(serde_json::from_str(text)?)
}

const CSV_COLUMNS: [&str; 13] = [
    "layout",
    "letters_only",
    "total_chars",
    "total_taps",
    "jam_events",
    "double_letter_jams",
    "adjacent_pairs",
    "jam_rate",
    "jam_rate_distinct",
    "flexible_usage",
    "inflexible_usage",
    "modeled_time_seconds",
    "key_usage",
];

/// One CSV row per entry; the `key_usage` column packs the ten per-key
/// counts as `digit:count` pairs separated by spaces.
pub fn entries_to_csv(entries: &[CostReport]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(CSV_COLUMNS).expect("in-memory write");
    for e in entries {
        let key_usage = e
            .key_usage
            .iter()
            .map(|(k, n)| format!("{k}:{n}"))
            .collect::<Vec<_>>()
            .join(" ");
        writer
            .write_record([
                e.layout_name.clone(),
                e.letters_only.to_string(),
                e.total_chars.to_string(),
                e.total_taps.to_string(),
                e.jam_events.to_string(),
                e.double_letter_jams.to_string(),
                e.adjacent_pairs.to_string(),
                e.jam_rate.to_string(),
                e.jam_rate_distinct.to_string(),
                e.flexible_usage.to_string(),
                e.inflexible_usage.to_string(),
                e.modeled_time_seconds.to_string(),
                key_usage,
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

/// Parses the CSV produced by [`entries_to_csv`], recovering every field
/// exactly.
pub fn entries_from_csv(text: &str) -> Result<Vec<CostReport>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers()?.clone();
    if headers.iter().ne(CSV_COLUMNS) {
        return Err(Error::Malformed(format!(
            "unexpected CSV header: {}",
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut entries = Vec::new();
    for record in reader.records() {
        let record = record?;
        let field = |i: usize| -> Result<&str> {
            record
                .get(i)
                .ok_or_else(|| Error::Malformed(format!("missing CSV column {i}")))
        };
        let parse_u64 = |i: usize| -> Result<u64> {
            field(i)?
                .parse()
                .map_err(|_| Error::Malformed(format!("bad count in column {}", CSV_COLUMNS[i])))
        };
        let parse_f64 = |i: usize| -> Result<f64> {
            field(i)?
                .parse()
                .map_err(|_| Error::Malformed(format!("bad number in column {}", CSV_COLUMNS[i])))
        };
        let mut key_usage = std::collections::BTreeMap::new();
        for part in field(12)?.split(' ').filter(|p| !p.is_empty()) {
            let (key, count) = part
                .split_once(':')
                .ok_or_else(|| Error::Malformed(format!("bad key_usage entry `{part}`")))?;
            let key: KeyId = key.parse()?;
            let count = count
                .parse()
                .map_err(|_| Error::Malformed(format!("bad key_usage count `{part}`")))?;
            key_usage.insert(key, count);
        }
        entries.push(CostReport {
            layout_name: field(0)?.to_string(),
            letters_only: match field(1)? {
                "true" => true,
                "false" => false,
                other => {
                    return Err(Error::Malformed(format!(
                        "bad letters_only value `{other}`"
                    )))
                }
            },
            total_chars: parse_u64(2)?,
            total_taps: parse_u64(3)?,
            jam_events: parse_u64(4)?,
            double_letter_jams: parse_u64(5)?,
            adjacent_pairs: parse_u64(6)?,
            jam_rate: parse_f64(7)?,
            jam_rate_distinct: parse_f64(8)?,
            flexible_usage: parse_u64(9)?,
            inflexible_usage: parse_u64(10)?,
            modeled_time_seconds: parse_f64(11)?,
            key_usage,
        });
    }
    Ok(entries)
}

fn render_table(report: &ComparisonReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "corpus: {}", report.corpus_descriptor);
    let _ = writeln!(
        out,
        "params: tap_time {} s, jam_timeout {} s, letters_only {}",
        report.params.tap_time, report.params.jam_timeout, report.letters_only
    );
    out.push('\n');
    let _ = writeln!(
        out,
        "{:<14} {:>12} {:>12} {:>10} {:>10} {:>10} {:>10} {:>12}",
        "layout", "chars", "taps", "taps/char", "jams", "jam rate", "flexible", "time (s)"
    );
    for e in &report.entries {
        let _ = writeln!(
            out,
            "{:<14} {:>12} {:>12} {:>10.4} {:>10} {:>10.5} {:>10} {:>12.1}",
            e.layout_name,
            e.total_chars,
            e.total_taps,
            e.taps_per_char(),
            e.jam_events,
            e.jam_rate,
            e.flexible_usage,
            e.modeled_time_seconds
        );
    }
    if !report.deltas.is_empty() {
        out.push('\n');
        for d in &report.deltas {
            let _ = writeln!(
                out,
                "{} / {}: tap ratio {:.4}, jam rate delta {:+.5}, flexible usage delta {:+}",
                d.numerator, d.denominator, d.tap_ratio, d.jam_rate_delta, d.flexible_usage_delta
            );
        }
    }
    out
}

// Fixed chart geometry. Every coordinate below is derived from these and the
// input counts only, so rendering is deterministic.
const BAR_WIDTH: f64 = 56.0;
const BAR_GAP: f64 = 10.0;
const GROUP_GAP: f64 = 46.0;
const PLOT_HEIGHT: f64 = 300.0;
const MARGIN_LEFT: f64 = 86.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 58.0;
const MARGIN_BOTTOM: f64 = 62.0;
const PALETTE: [&str; 6] = [
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#b07aa1",
];

/// Grouped bar chart of total taps: one group per report (labeled with its
/// corpus descriptor), one bar per layout within the group. Output is pure
/// SVG with no external references, byte-identical for identical input.
pub fn svg_bar_chart(groups: &[&ComparisonReport]) -> String {
    let max_taps = groups
        .iter()
        .flat_map(|r| r.entries.iter())
        .map(|e| e.total_taps)
        .max()
        .unwrap_or(0)
        .max(1);
    let y_top = nice_axis_top(max_taps);

    let bars_per_group = groups.iter().map(|r| r.entries.len()).max().unwrap_or(1);
    let group_width = bars_per_group as f64 * BAR_WIDTH + (bars_per_group as f64 - 1.0) * BAR_GAP;
    let plot_width = groups.len() as f64 * group_width + (groups.len() as f64 - 1.0) * GROUP_GAP;
    let width = MARGIN_LEFT + plot_width + MARGIN_RIGHT;
    let height = MARGIN_TOP + PLOT_HEIGHT + MARGIN_BOTTOM;
    let base_y = MARGIN_TOP + PLOT_HEIGHT;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(
        svg,
        r#"  <style>text {{ font-family: sans-serif; font-size: 12px; fill: #333; }} .title {{ font-size: 15px; font-weight: bold; }} .axis {{ stroke: #333; stroke-width: 1; }} .grid {{ stroke: #ddd; stroke-width: 1; }}</style>"#
    );
    let _ = writeln!(svg, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"  <text class="title" x="{:.1}" y="24">Key presses by layout</text>"#,
        MARGIN_LEFT
    );

    // y axis: gridlines and tick labels at quarters of the axis top.
    for step in 0..=4u32 {
        let value = y_top * u64::from(step) / 4;
        let y = base_y - PLOT_HEIGHT * f64::from(step) / 4.0;
        if step > 0 {
            let _ = writeln!(
                svg,
                r#"  <line class="grid" x1="{MARGIN_LEFT:.1}" y1="{y:.1}" x2="{:.1}" y2="{y:.1}"/>"#,
                MARGIN_LEFT + plot_width
            );
        }
        let _ = writeln!(
            svg,
            r#"  <text x="{:.1}" y="{:.1}" text-anchor="end">{value}</text>"#,
            MARGIN_LEFT - 8.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        svg,
        r#"  <text transform="translate(16 {:.1}) rotate(-90)" text-anchor="middle">total key presses</text>"#,
        MARGIN_TOP + PLOT_HEIGHT / 2.0
    );

    // Bars, value labels, and group labels.
    for (g, report) in groups.iter().enumerate() {
        let group_x = MARGIN_LEFT + g as f64 * (group_width + GROUP_GAP);
        for (i, entry) in report.entries.iter().enumerate() {
            let x = group_x + i as f64 * (BAR_WIDTH + BAR_GAP);
            let bar_height = PLOT_HEIGHT * entry.total_taps as f64 / y_top as f64;
            let y = base_y - bar_height;
            let color = PALETTE[i % PALETTE.len()];
            let _ = writeln!(
                svg,
                r#"  <rect x="{x:.1}" y="{y:.1}" width="{BAR_WIDTH:.1}" height="{bar_height:.1}" fill="{color}"><title>{}: {}</title></rect>"#,
                xml_escape(&entry.layout_name),
                entry.total_taps
            );
            let _ = writeln!(
                svg,
                r#"  <text x="{:.1}" y="{:.1}" text-anchor="middle">{}</text>"#,
                x + BAR_WIDTH / 2.0,
                y - 5.0,
                entry.total_taps
            );
        }
        let _ = writeln!(
            svg,
            r#"  <text x="{:.1}" y="{:.1}" text-anchor="middle">{}</text>"#,
            group_x + group_width / 2.0,
            base_y + 20.0,
            xml_escape(&report.corpus_descriptor)
        );
    }
    let _ = writeln!(
        svg,
        r#"  <line class="axis" x1="{MARGIN_LEFT:.1}" y1="{base_y:.1}" x2="{:.1}" y2="{base_y:.1}"/>"#,
        MARGIN_LEFT + plot_width
    );
    let _ = writeln!(
        svg,
        r#"  <line class="axis" x1="{MARGIN_LEFT:.1}" y1="{MARGIN_TOP:.1}" x2="{MARGIN_LEFT:.1}" y2="{base_y:.1}"/>"#
    );

    // Legend, from the first group's layout names.
    if let Some(first) = groups.first() {
        for (i, entry) in first.entries.iter().enumerate() {
            let x = MARGIN_LEFT + i as f64 * 130.0;
            let color = PALETTE[i % PALETTE.len()];
            let _ = writeln!(
                svg,
                r#"  <rect x="{x:.1}" y="34" width="12" height="12" fill="{color}"/>"#
            );
            let _ = writeln!(
                svg,
                r#"  <text x="{:.1}" y="44">{}</text>"#,
                x + 17.0,
                xml_escape(&entry.layout_name)
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}

/// Smallest "round" count at or above `max`: 1, 2, 4, 5, 8, or 10 times a
/// power of ten, so quarter ticks stay whole for most inputs.
fn nice_axis_top(max: u64) -> u64 {
    if max <= 4 {
        return 4;
    }
    let mut magnitude: u64 = 1;
    while magnitude <= max / 10 {
        magnitude *= 10;
    }
    for multiple in [1, 2, 4, 5, 8, 10] {
        let candidate = magnitude * multiple;
        if candidate >= max {
            return candidate;
        }
    }
    magnitude * 10
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Convenience wrapper: normalizes raw corpus text with the given policy and
/// compares layouts over it.
pub fn compare_raw(
    layouts: &[Layout],
    keypad: &KeypadModel,
    raw_text: &str,
    policy: &crate::corpus::NormalizationPolicy,
    corpus_descriptor: impl Into<String>,
    params: CostParams,
    letters_only: bool,
) -> Result<ComparisonReport> {
    let normalized = normalize(raw_text, policy);
    compare(
        layouts,
        keypad,
        &normalized,
        corpus_descriptor,
        params,
        letters_only,
    )
}
