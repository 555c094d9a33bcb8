//! Frozen statistics of the bundled corpus, checked with brute-force
//! tallies so the shipped files cannot drift silently.

use std::collections::BTreeMap;

use taplab_core::bundled;
use taplab_core::corpus::{normalize, FrequencyTable, NormalizationPolicy};

fn normalized() -> String {
    normalize(&bundled::raw_text(), &NormalizationPolicy::default())
}

#[test]
fn e_is_the_unique_top_letter() {
    // Brute-force character tally, no FrequencyTable involved.
    let mut tally: BTreeMap<char, u64> = BTreeMap::new();
    for c in normalized().chars().filter(|c| c.is_ascii_lowercase()) {
        *tally.entry(c).or_insert(0) += 1;
    }
    let mut sorted: Vec<(char, u64)> = tally.into_iter().collect();
    sorted.sort_by_key(|&(_, n)| std::cmp::Reverse(n));
    assert_eq!(sorted[0].0, 'e');
    assert!(sorted[0].1 > sorted[1].1, "rank-1 letter must be unique");
}

#[test]
fn frozen_counts() {
    let text = normalized();
    let table =
        FrequencyTable::from_normalized(&text, NormalizationPolicy::default(), bundled::DESCRIPTOR);
    assert_eq!(text.chars().count(), 213_115);
    assert_eq!(table.total_letters(), 167_032);
    assert_eq!(table.unigram_count('e'), 21_266);
    // Count conservation: letters = characters minus spaces.
    let spaces = text.chars().filter(|&c| c == ' ').count() as u64;
    assert_eq!(table.total_letters() + spaces, text.chars().count() as u64);
}

#[test]
fn per_file_shards_merge_to_the_single_pass_table() {
    let policy = NormalizationPolicy::default();
    let shards: Vec<FrequencyTable> = bundled::files()
        .into_iter()
        .map(|(_, contents)| {
            FrequencyTable::from_normalized(&normalize(contents, &policy), policy, "bundled")
        })
        .collect();
    let merged = FrequencyTable::merge(&shards).unwrap();
    let single = FrequencyTable::from_normalized(&normalized(), policy, "bundled");
    assert_eq!(merged, single);
}
