//! Layout evaluation: tap counts, key-jam statistics, key-usage by
//! flexibility class, and the modeled typing time.
//!
//! A jam is the multitap wait forced when two consecutive letters sit on the
//! same key. Jamming is a letter-cursor phenomenon: spaces have a dedicated
//! key, cost one tap each, and break pair adjacency. Double letters ("oo")
//! jam too; they are tallied separately because published same-key pair
//! lists typically omit them.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::corpus::FrequencyTable;
use crate::error::{Error, Result};
use crate::keymodel::{KeyId, KeypadModel};
use crate::layout::Layout;

/// Time model parameters, in seconds. They scale the modeled time only;
/// every counted quantity is independent of them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CostParams {
    /// Time per key press.
    pub tap_time: f64,
    /// Added wait when two consecutive letters share a key.
    pub jam_timeout: f64,
}

impl CostParams {
    pub fn new(tap_time: f64, jam_timeout: f64) -> Result<Self> {
        let params = CostParams {
            tap_time,
            jam_timeout,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tap_time > 0.0 && self.tap_time.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "tap_time must be positive, got {}",
                self.tap_time
            )));
        }
        if !(self.jam_timeout >= 0.0 && self.jam_timeout.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "jam_timeout must be non-negative, got {}",
                self.jam_timeout
            )));
        }
        Ok(())
    }
}

impl Default for CostParams {
    /// 0.2 s per tap, 1.0 s jam timeout: typical multitap firmware settings.
    fn default() -> Self {
        CostParams {
            tap_time: 0.2,
            jam_timeout: 1.0,
        }
    }
}

/// Tap and character counts of a text scan, split by letters vs spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TapTally {
    pub letter_taps: u64,
    pub space_taps: u64,
    pub letters: u64,
    pub spaces: u64,
}

impl TapTally {
    pub fn total_taps(&self) -> u64 {
        self.letter_taps + self.space_taps
    }

    pub fn total_chars(&self) -> u64 {
        self.letters + self.spaces
    }
}

/// Sums tap positions over normalized text.
pub fn tap_tally(layout: &Layout, text: &str) -> Result<TapTally> {
    let mut tally = TapTally::default();
    for c in text.chars() {
        let pos = layout.tap_position(c)?;
        if c == ' ' {
            tally.spaces += 1;
            tally.space_taps += u64::from(pos.taps);
        } else {
            tally.letters += 1;
            tally.letter_taps += u64::from(pos.taps);
        }
    }
    Ok(tally)
}

/// Total key presses for normalized text, spaces included.
pub fn total_taps(layout: &Layout, text: &str) -> Result<u64> {
    Ok(tap_tally(layout, text)?.total_taps())
}

/// Mean taps per letter under a frequency table: the unigram-fraction dot
/// product with tap positions, accumulated over exact counts.
pub fn expected_taps_per_letter(layout: &Layout, table: &FrequencyTable) -> Result<f64> {
    if table.total_letters() == 0 {
        return Err(Error::EmptyTable);
    }
    let mut weighted: u128 = 0;
    for (letter, count) in table.unigrams() {
        let pos = layout.tap_position(letter)?;
        weighted += u128::from(count) * u128::from(pos.taps);
    }
    Ok(weighted as f64 / table.total_letters() as f64)
}

/// All ordered pairs of distinct letters sharing a key. Typing any of them
/// consecutively triggers a jam.
pub fn jam_pairs(layout: &Layout) -> BTreeSet<(char, char)> {
    let mut pairs = BTreeSet::new();
    for letters in layout.assignment().values() {
        for &a in letters {
            for &b in letters {
                if a != b {
                    pairs.insert((a, b));
                }
            }
        }
    }
    pairs
}

/// The identity pairs (a, a) for every assigned letter: double letters
/// always share a key and jam.
pub fn double_letter_pairs(layout: &Layout) -> BTreeSet<(char, char)> {
    layout
        .assignment()
        .values()
        .flatten()
        .map(|&c| (c, c))
        .collect()
}

/// Counts from scanning adjacent letter pairs in a text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct JamScan {
    /// Adjacent same-key pairs, double letters included.
    pub events: u64,
    /// The double-letter subset of `events`.
    pub double_letter_events: u64,
    /// All adjacent letter pairs scanned (spaces break adjacency).
    pub adjacent_pairs: u64,
}

/// Scans normalized text for same-key adjacencies. Letters the layout does
/// not carry cannot jam but still count as adjacent pairs.
pub fn jam_scan(layout: &Layout, text: &str) -> JamScan {
    let mut scan = JamScan::default();
    let mut prev: Option<(char, Option<KeyId>)> = None;
    for c in text.chars() {
        if !c.is_ascii_lowercase() {
            prev = None;
            continue;
        }
        let key = layout.key_of(c);
        if let Some((pc, pk)) = prev {
            scan.adjacent_pairs += 1;
            if pk.is_some() && pk == key {
                scan.events += 1;
                if pc == c {
                    scan.double_letter_events += 1;
                }
            }
        }
        prev = Some((c, key));
    }
    scan
}

/// Number of adjacent positions where both letters sit on the same key.
pub fn jam_events(layout: &Layout, text: &str) -> u64 {
    jam_scan(layout, text).events
}

/// Fraction of the table's letter-pair mass that jams on this layout,
/// double letters included.
pub fn jam_rate(layout: &Layout, table: &FrequencyTable) -> f64 {
    jam_mass(layout, table, true)
}

/// As [`jam_rate`], but with double letters excluded, matching pair lists
/// that only name distinct letters.
pub fn jam_rate_excluding_doubles(layout: &Layout, table: &FrequencyTable) -> f64 {
    jam_mass(layout, table, false)
}

fn jam_mass(layout: &Layout, table: &FrequencyTable, include_doubles: bool) -> f64 {
    if table.total_bigrams() == 0 {
        return 0.0;
    }
    let mut jammed: u64 = 0;
    for ((a, b), count) in table.bigrams() {
        if a == b && !include_doubles {
            continue;
        }
        match (layout.key_of(a), layout.key_of(b)) {
            (Some(ka), Some(kb)) if ka == kb => jammed += count,
            _ => {}
        }
    }
    jammed as f64 / table.total_bigrams() as f64
}

/// Per-key character counts aggregated by the keypad's flexibility
/// partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyUsage {
    /// Histogram over all ten keys (unused keys report zero).
    pub per_key: BTreeMap<KeyId, u64>,
    pub flexible: u64,
    pub inflexible: u64,
}

impl KeyUsage {
    fn zeroed() -> Self {
        KeyUsage {
            per_key: KeyId::ALL.into_iter().map(|k| (k, 0)).collect(),
            flexible: 0,
            inflexible: 0,
        }
    }

    fn record(&mut self, keypad: &KeypadModel, key: KeyId, count: u64) {
        *self.per_key.get_mut(&key).unwrap() += count;
        if keypad.is_flexible(key) {
            self.flexible += count;
        } else {
            self.inflexible += count;
        }
    }
}

/// Counts characters per key over normalized text. Spaces land on the space
/// key when included; letters the layout does not carry are an error.
pub fn key_usage(
    layout: &Layout,
    keypad: &KeypadModel,
    text: &str,
    include_spaces: bool,
) -> Result<KeyUsage> {
    let mut usage = KeyUsage::zeroed();
    for c in text.chars() {
        if c == ' ' && !include_spaces {
            continue;
        }
        let pos = layout.tap_position(c)?;
        usage.record(keypad, pos.key, 1);
    }
    Ok(usage)
}

/// The full evaluation result for one layout over one corpus.
///
/// `modeled_time_seconds` is exactly
/// `total_taps * tap_time + jam_events * jam_timeout`. When `letters_only`
/// is set, spaces are excluded from the character, tap, and key-usage
/// figures; jam statistics never involve spaces either way.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CostReport {
    pub layout_name: String,
    pub letters_only: bool,
    pub total_chars: u64,
    pub total_taps: u64,
    pub jam_events: u64,
    pub double_letter_jams: u64,
    pub adjacent_pairs: u64,
    pub jam_rate: f64,
    pub jam_rate_distinct: f64,
    pub key_usage: BTreeMap<KeyId, u64>,
    pub flexible_usage: u64,
    pub inflexible_usage: u64,
    pub modeled_time_seconds: f64,
}

impl CostReport {
    pub fn taps_per_char(&self) -> f64 {
        if self.total_chars == 0 {
            0.0
        } else {
            self.total_taps as f64 / self.total_chars as f64
        }
    }
}

/// Evaluates a layout over normalized text.
pub fn evaluate_text(
    layout: &Layout,
    keypad: &KeypadModel,
    text: &str,
    params: CostParams,
    letters_only: bool,
) -> Result<CostReport> {
    params.validate()?;
    let tally = tap_tally(layout, text)?;
    let scan = jam_scan(layout, text);
    let usage = key_usage(layout, keypad, text, !letters_only)?;
    let (total_chars, total_taps) = if letters_only {
        (tally.letters, tally.letter_taps)
    } else {
        (tally.total_chars(), tally.total_taps())
    };
    Ok(assemble(
        layout.name(),
        letters_only,
        total_chars,
        total_taps,
        scan,
        usage,
        params,
    ))
}

/// Evaluates a layout over a frequency table. Tables carry no spaces, so
/// the result is always letters-only; counted fields agree exactly with a
/// letters-only text evaluation over the table's source corpus.
pub fn evaluate_table(
    layout: &Layout,
    keypad: &KeypadModel,
    table: &FrequencyTable,
    params: CostParams,
) -> Result<CostReport> {
    params.validate()?;
    let mut usage = KeyUsage::zeroed();
    let mut total_taps: u64 = 0;
    for (letter, count) in table.unigrams() {
        let pos = layout.tap_position(letter)?;
        total_taps += count * u64::from(pos.taps);
        usage.record(keypad, pos.key, count);
    }
    let mut scan = JamScan {
        adjacent_pairs: table.total_bigrams(),
        ..JamScan::default()
    };
    for ((a, b), count) in table.bigrams() {
        match (layout.key_of(a), layout.key_of(b)) {
            (Some(ka), Some(kb)) if ka == kb => {
                scan.events += count;
                if a == b {
                    scan.double_letter_events += count;
                }
            }
            _ => {}
        }
    }
    Ok(assemble(
        layout.name(),
        true,
        table.total_letters(),
        total_taps,
        scan,
        usage,
        params,
    ))
}

fn assemble(
    layout_name: &str,
    letters_only: bool,
    total_chars: u64,
    total_taps: u64,
    scan: JamScan,
    usage: KeyUsage,
    params: CostParams,
) -> CostReport {
    let (jam_rate, jam_rate_distinct) = if scan.adjacent_pairs == 0 {
        (0.0, 0.0)
    } else {
        (
            scan.events as f64 / scan.adjacent_pairs as f64,
            (scan.events - scan.double_letter_events) as f64 / scan.adjacent_pairs as f64,
        )
    };
    CostReport {
        layout_name: layout_name.to_string(),
        letters_only,
        total_chars,
        total_taps,
        jam_events: scan.events,
        double_letter_jams: scan.double_letter_events,
        adjacent_pairs: scan.adjacent_pairs,
        jam_rate,
        jam_rate_distinct,
        key_usage: usage.per_key,
        flexible_usage: usage.flexible,
        inflexible_usage: usage.inflexible,
        modeled_time_seconds: total_taps as f64 * params.tap_time
            + scan.events as f64 * params.jam_timeout,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{reference_table, FrequencyTable, NormalizationPolicy};
    use crate::keymodel::default_keypad;
    use crate::layout::{proposed, traditional_multitap, Layout};

    const PANGRAM: &str = "the quick brown fox jumps over the lazy dog";

    fn table(text: &str) -> FrequencyTable {
        FrequencyTable::from_normalized(text, NormalizationPolicy::default(), "test")
    }

    #[test]
    fn pangram_tap_totals() {
        let tally = tap_tally(&traditional_multitap(), PANGRAM).unwrap();
        assert_eq!(tally.letter_taps, 77);
        assert_eq!(tally.space_taps, 8);
        assert_eq!(tally.total_taps(), 85);

        let tally = tap_tally(&proposed(), PANGRAM).unwrap();
        assert_eq!(tally.letter_taps, 67);
        assert_eq!(tally.space_taps, 8);
        assert_eq!(tally.total_taps(), 75);
    }

    #[test]
    fn empty_text_has_no_taps() {
        assert_eq!(total_taps(&proposed(), "").unwrap(), 0);
    }

    #[test]
    fn taps_equal_characters_only_for_single_tap_text() {
        // e, t, o, a, i, s, n, r and space all sit at tap position 1.
        let single_tap = "notes on a siren";
        assert_eq!(
            total_taps(&proposed(), single_tap).unwrap(),
            single_tap.chars().count() as u64
        );
        // w is the second letter of key 1, so one character costs two taps.
        assert_eq!(total_taps(&proposed(), "now").unwrap(), 4);
    }

    #[test]
    fn expected_taps_against_reference_distribution() {
        let reference = reference_table();
        let prop = expected_taps_per_letter(&proposed(), &reference).unwrap();
        let trad = expected_taps_per_letter(&traditional_multitap(), &reference).unwrap();
        assert!((prop - 1.467347).abs() < 1e-6, "proposed {prop}");
        assert!((trad - 2.172017).abs() < 1e-6, "traditional {trad}");
        assert!((prop / trad - 0.6756).abs() < 0.005);
    }

    #[test]
    fn expected_taps_degenerate_table() {
        let only_e = table("e");
        assert_eq!(expected_taps_per_letter(&proposed(), &only_e).unwrap(), 1.0);
        assert!(matches!(
            expected_taps_per_letter(&proposed(), &table("")),
            Err(Error::EmptyTable)
        ));
    }

    #[test]
    fn jam_pairs_of_the_proposed_layout() {
        let pairs = jam_pairs(&proposed());
        for pair in [
            ('e', 'w'),
            ('e', 'f'),
            ('w', 'f'),
            ('w', 'e'),
            ('f', 'e'),
            ('f', 'w'),
        ] {
            assert!(pairs.contains(&pair), "{pair:?}");
        }
        for pair in [('a', 'm'), ('o', 'p'), ('i', 'v')] {
            assert!(pairs.contains(&pair), "{pair:?}");
        }
        // Top-tier letters all sit on distinct keys.
        assert!(!pairs.contains(&('e', 't')));
        assert!(!pairs.iter().any(|&(a, b)| a == b));
    }

    #[test]
    fn single_letter_per_key_layout_has_only_identity_pairs() {
        let assignment = [(1u8, "a"), (2, "b"), (3, "c")]
            .into_iter()
            .map(|(d, s)| (KeyId::new(d).unwrap(), s.chars().collect()))
            .collect();
        let layout = Layout::new(
            "sparse",
            assignment,
            KeyId::new(0).unwrap(),
            KeyId::new(9).unwrap(),
        );
        assert!(jam_pairs(&layout).is_empty());
        assert_eq!(double_letter_pairs(&layout).len(), 3);

        // Only the double-letter mass can jam: aa and bb here, not ab/ba/ca.
        let t = table("aab bba ca");
        let identity_mass = (t.bigram_count(('a', 'a')) + t.bigram_count(('b', 'b'))) as f64
            / t.total_bigrams() as f64;
        assert_eq!(jam_rate(&layout, &t), identity_mass);
        assert_eq!(jam_rate_excluding_doubles(&layout, &t), 0.0);
    }

    #[test]
    fn top_tier_letters_never_jam_with_each_other() {
        let pairs = jam_pairs(&proposed());
        let top8 = &crate::corpus::reference_ranking()[..8];
        for &a in top8 {
            for &b in top8 {
                if a != b {
                    assert!(!pairs.contains(&(a, b)), "({a},{b}) shares a key");
                }
            }
        }
    }

    #[test]
    fn jam_event_scanning() {
        let prop = proposed();
        assert_eq!(jam_events(&prop, "ew"), 1);
        assert_eq!(jam_events(&prop, "et"), 0);
        // n-o, o-o, o-n all share key 6 on the traditional pad.
        assert_eq!(jam_events(&traditional_multitap(), "noon"), 3);
        let scan = jam_scan(&traditional_multitap(), "noon");
        assert_eq!(scan.double_letter_events, 1);
        assert_eq!(scan.adjacent_pairs, 3);
    }

    #[test]
    fn jam_rates_from_a_table() {
        // "noon": bigrams no, oo, on, all on key 6 of the traditional pad.
        let t = table("noon");
        let trad = traditional_multitap();
        assert_eq!(jam_rate(&trad, &t), 1.0);
        assert!((jam_rate_excluding_doubles(&trad, &t) - 2.0 / 3.0).abs() < 1e-12);
        // On the proposed pad, n and o sit on different keys.
        assert!((jam_rate(&proposed(), &t) - 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(jam_rate(&proposed(), &table("")), 0.0);
    }

    #[test]
    fn key_usage_on_the_pangram() {
        let keypad = default_keypad();
        let usage = key_usage(&proposed(), &keypad, PANGRAM, false).unwrap();
        assert_eq!((usage.flexible, usage.inflexible), (22, 13));
        let usage = key_usage(&traditional_multitap(), &keypad, PANGRAM, false).unwrap();
        assert_eq!((usage.flexible, usage.inflexible), (15, 20));
    }

    #[test]
    fn key_usage_with_spaces_lands_on_the_space_key() {
        let keypad = default_keypad();
        let usage = key_usage(&proposed(), &keypad, PANGRAM, true).unwrap();
        assert_eq!(usage.per_key[&KeyId::new(0).unwrap()], 8);
        assert_eq!(usage.flexible + usage.inflexible, 43);
    }

    #[test]
    fn key_usage_of_empty_text_is_all_zeros() {
        let usage = key_usage(&proposed(), &default_keypad(), "", true).unwrap();
        assert_eq!(usage.per_key.len(), 10);
        assert!(usage.per_key.values().all(|&n| n == 0));
        assert_eq!((usage.flexible, usage.inflexible), (0, 0));
    }

    #[test]
    fn evaluate_text_and_table_agree_on_counted_fields() {
        let text = "the quick brown fox jumps over the lazy dog and some more text";
        let keypad = default_keypad();
        let params = CostParams::default();
        let from_text = evaluate_text(&proposed(), &keypad, text, params, true).unwrap();
        let from_table = evaluate_table(&proposed(), &keypad, &table(text), params).unwrap();
        assert_eq!(from_text, from_table);
    }

    #[test]
    fn modeled_time_formula_is_exact() {
        let keypad = default_keypad();
        let params = CostParams::new(0.25, 0.0).unwrap();
        let report = evaluate_text(&proposed(), &keypad, PANGRAM, params, false).unwrap();
        assert_eq!(report.modeled_time_seconds, report.total_taps as f64 * 0.25);

        let params = CostParams::new(0.2, 1.5).unwrap();
        let report =
            evaluate_text(&traditional_multitap(), &keypad, "noon", params, false).unwrap();
        assert_eq!(
            report.modeled_time_seconds,
            report.total_taps as f64 * 0.2 + 3.0 * 1.5
        );
    }

    #[test]
    fn invalid_params_are_rejected() {
        assert!(CostParams::new(0.0, 1.0).is_err());
        assert!(CostParams::new(0.2, -1.0).is_err());
        assert!(CostParams::new(f64::NAN, 1.0).is_err());
        assert!(CostParams::new(0.2, 0.0).is_ok());
    }

    #[test]
    fn letters_only_excludes_spaces_everywhere_it_should() {
        let keypad = default_keypad();
        let params = CostParams::default();
        let full = evaluate_text(&proposed(), &keypad, PANGRAM, params, false).unwrap();
        let letters = evaluate_text(&proposed(), &keypad, PANGRAM, params, true).unwrap();
        assert_eq!(full.total_chars, 43);
        assert_eq!(letters.total_chars, 35);
        assert_eq!(full.total_taps, 75);
        assert_eq!(letters.total_taps, 67);
        // Jam statistics are identical: spaces never participate.
        assert_eq!(full.jam_events, letters.jam_events);
        assert_eq!(full.adjacent_pairs, letters.adjacent_pairs);
    }
}
