//! Keypad layouts: letter-to-key assignments and the boustrophedon builder.
//!
//! A layout maps each letter-bearing key to an ordered letter sequence; the
//! n-th letter of a key costs n taps. Two keys are reserved: one for the
//! space character and one for symbols. The builder walks the letter keys in
//! flexibility order, alternating direction per pass, so consecutive ranks
//! land on different keys and the most frequent letters sit at one tap.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::keymodel::{default_keypad, KeyId};

const MAX_LETTERS_PER_KEY: usize = 4;

/// Where a character sits: its key and its 1-based tap count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TapPosition {
    pub key: KeyId,
    pub taps: u8,
}

/// A named letter-to-key assignment plus the two reserved keys.
///
/// Layouts are immutable once constructed. Construction itself accepts any
/// assignment; [`Layout::validate`] reports how far it is from a well-formed
/// full-alphabet layout, which is how user-supplied layout files are
/// checked.
#[derive(Debug, Clone, PartialEq)]
pub struct Layout {
    name: String,
    assignment: BTreeMap<KeyId, Vec<char>>,
    space_key: KeyId,
    symbol_key: KeyId,
    // First-occurrence tap index for a-z.
    index: [Option<TapPosition>; 26],
}

impl Layout {
    pub fn new(
        name: impl Into<String>,
        assignment: BTreeMap<KeyId, Vec<char>>,
        space_key: KeyId,
        symbol_key: KeyId,
    ) -> Self {
        let mut index = [None; 26];
        for (&key, letters) in &assignment {
            for (i, &c) in letters.iter().enumerate() {
                if c.is_ascii_lowercase() {
                    let slot = &mut index[(c as u8 - b'a') as usize];
                    if slot.is_none() {
                        *slot = Some(TapPosition {
                            key,
                            taps: (i + 1) as u8,
                        });
                    }
                }
            }
        }
        Layout {
            name: name.into(),
            assignment,
            space_key,
            symbol_key,
            index,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn assignment(&self) -> &BTreeMap<KeyId, Vec<char>> {
        &self.assignment
    }

    /// The letter sequence on a key (empty for reserved or unused keys).
    pub fn letters_on(&self, key: KeyId) -> &[char] {
        self.assignment.get(&key).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn space_key(&self) -> KeyId {
        self.space_key
    }

    pub fn symbol_key(&self) -> KeyId {
        self.symbol_key
    }

    /// The key holding a letter, if any.
    pub fn key_of(&self, letter: char) -> Option<KeyId> {
        if letter.is_ascii_lowercase() {
            self.index[(letter as u8 - b'a') as usize].map(|p| p.key)
        } else {
            None
        }
    }

    /// Key and 1-based tap count for a letter or the space character.
    /// Characters outside the model alphabet are rejected.
    pub fn tap_position(&self, c: char) -> Result<TapPosition> {
        if c == ' ' {
            return Ok(TapPosition {
                key: self.space_key,
                taps: 1,
            });
        }
        if !c.is_ascii_lowercase() {
            return Err(Error::UnsupportedCharacter(c));
        }
        self.index[(c as u8 - b'a') as usize].ok_or(Error::UnassignedLetter(c))
    }

    /// Checks every layout invariant and returns the violations found (empty
    /// means the layout is well formed).
    pub fn validate(&self) -> Vec<Violation> {
        let mut violations = Vec::new();
        if self.space_key == self.symbol_key {
            violations.push(Violation::ReservedKeysCollide);
        }
        let mut seen_counts = [0u32; 26];
        for (&key, letters) in &self.assignment {
            if (key == self.space_key || key == self.symbol_key) && !letters.is_empty() {
                violations.push(Violation::ReservedKeyBearsLetters(key));
            }
            if letters.len() > MAX_LETTERS_PER_KEY {
                violations.push(Violation::TooManyLetters {
                    key,
                    count: letters.len(),
                });
            }
            for &c in letters {
                if c.is_ascii_lowercase() {
                    seen_counts[(c as u8 - b'a') as usize] += 1;
                } else {
                    violations.push(Violation::NonLetter(c));
                }
            }
        }
        for (i, &count) in seen_counts.iter().enumerate() {
            let c = (b'a' + i as u8) as char;
            if count == 0 {
                violations.push(Violation::MissingLetter(c));
            } else if count > 1 {
                violations.push(Violation::DuplicateLetter(c));
            }
        }
        violations
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Canonical JSON document: keys as the string digits in numeric order,
    /// letter sequences as plain strings.
    pub fn to_json(&self) -> String {
        let doc = LayoutDoc {
            name: self.name.clone(),
            assignment: self
                .assignment
                .iter()
                .filter(|(_, letters)| !letters.is_empty())
                .map(|(k, letters)| (k.to_string(), letters.iter().collect()))
                .collect(),
            space_key: self.space_key,
            symbol_key: self.symbol_key,
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("layout serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: LayoutDoc = serde_json::from_str(text)?;
        let mut assignment = BTreeMap::new();
        for (key, letters) in doc.assignment {
            let key: KeyId = key.parse()?;
            assignment.insert(key, letters.chars().collect());
        }
        Ok(Layout::new(
            doc.name,
            assignment,
            doc.space_key,
            doc.symbol_key,
        ))
    }
}

#[derive(Serialize, Deserialize)]
struct LayoutDoc {
    name: String,
    assignment: BTreeMap<String, String>,
    space_key: KeyId,
    symbol_key: KeyId,
}

/// A single broken layout invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    MissingLetter(char),
    DuplicateLetter(char),
    NonLetter(char),
    ReservedKeyBearsLetters(KeyId),
    TooManyLetters { key: KeyId, count: usize },
    ReservedKeysCollide,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingLetter(c) => write!(f, "letter {c} unassigned"),
            Violation::DuplicateLetter(c) => write!(f, "duplicate letter {c}"),
            Violation::NonLetter(c) => write!(f, "character `{c}` is not a lowercase letter"),
            Violation::ReservedKeyBearsLetters(k) => {
                write!(f, "reserved key {k} carries letters")
            }
            Violation::TooManyLetters { key, count } => {
                write!(
                    f,
                    "key {key} holds {count} letters (max {MAX_LETTERS_PER_KEY})"
                )
            }
            Violation::ReservedKeysCollide => write!(f, "space and symbol keys coincide"),
        }
    }
}

/// Builds a layout by walking the letter keys in flexibility order and
/// placing ranked letters in alternating passes: ranks 1..K forward, the
/// next K backward, and so on. On the final pass, when R letters remain for
/// K keys with R > K, every key first takes one letter and the leftover
/// R − K letters then wrap onto the last R − K keys of the pass, which is
/// what produces the four-letter keys.
///
/// `letter_ranking` must hold distinct lowercase letters (most frequent
/// first) and `key_ranking` all ten keys (most flexible first). The reserved
/// keys carry no letters; the remaining eight keys carry them all.
pub fn build_boustrophedon(
    letter_ranking: &[char],
    key_ranking: &[KeyId],
    space_key: KeyId,
    symbol_key: KeyId,
) -> Result<Layout> {
    if letter_ranking.is_empty() {
        return Err(Error::EmptyRanking);
    }
    let mut seen = [false; 26];
    for &c in letter_ranking {
        if !c.is_ascii_lowercase() {
            return Err(Error::InvalidRankingLetter(c));
        }
        let slot = &mut seen[(c as u8 - b'a') as usize];
        if *slot {
            return Err(Error::DuplicateRankingLetter(c));
        }
        *slot = true;
    }

    let mut key_seen = [false; 10];
    for &k in key_ranking {
        key_seen[k.digit() as usize] = true;
    }
    if key_ranking.len() != 10 || key_seen.iter().any(|&s| !s) {
        return Err(Error::InvalidKeyRanking);
    }
    if space_key == symbol_key {
        return Err(Error::ReservedKeysCollide);
    }

    let letter_keys: Vec<KeyId> = key_ranking
        .iter()
        .copied()
        .filter(|&k| k != space_key && k != symbol_key)
        .collect();
    let key_count = letter_keys.len();
    if letter_ranking.len() > key_count * MAX_LETTERS_PER_KEY {
        return Err(Error::RankingOverflow {
            letters: letter_ranking.len(),
            keys: key_count,
        });
    }

    let mut assignment: BTreeMap<KeyId, Vec<char>> =
        letter_keys.iter().map(|&k| (k, Vec::new())).collect();
    let mut next = 0;
    let mut forward = true;
    while next < letter_ranking.len() {
        let remaining = letter_ranking.len() - next;
        let pass: Vec<KeyId> = if forward {
            letter_keys.clone()
        } else {
            letter_keys.iter().rev().copied().collect()
        };
        // One letter per key, in pass order.
        for &key in pass.iter().take(remaining) {
            assignment.get_mut(&key).unwrap().push(letter_ranking[next]);
            next += 1;
        }
        // Final pass overflow: when R letters remained for K keys with
        // K < R <= 2K, the leftover R - K letters wrap onto the last R - K
        // keys of the same pass, one each, again in pass order.
        if remaining > key_count && remaining <= 2 * key_count {
            for &key in &pass[2 * key_count - remaining..] {
                assignment.get_mut(&key).unwrap().push(letter_ranking[next]);
                next += 1;
            }
        }
        forward = !forward;
    }

    assignment.retain(|_, letters| !letters.is_empty());
    Ok(Layout::new(
        "boustrophedon",
        assignment,
        space_key,
        symbol_key,
    ))
}

/// The built-in frequency-based layout: the reference letter ranking laid
/// out boustrophedon over the default key ranking, space on key 0 and
/// symbols on key 9.
pub fn proposed() -> Layout {
    build_boustrophedon(
        &crate::corpus::reference_ranking(),
        &default_keypad().rank_keys(),
        KeyId::new(0).unwrap(),
        KeyId::new(9).unwrap(),
    )
    .expect("built-in ranking is valid")
    .with_name("proposed")
}

/// The traditional alphabetic multitap pad: abc on key 2 through wxyz on
/// key 9, space on key 0 and symbols on key 1.
pub fn traditional_multitap() -> Layout {
    let assignment: BTreeMap<KeyId, Vec<char>> = [
        (2, "abc"),
        (3, "def"),
        (4, "ghi"),
        (5, "jkl"),
        (6, "mno"),
        (7, "pqrs"),
        (8, "tuv"),
        (9, "wxyz"),
    ]
    .into_iter()
    .map(|(d, letters)| (KeyId::new(d).unwrap(), letters.chars().collect()))
    .collect();
    Layout::new(
        "traditional",
        assignment,
        KeyId::new(0).unwrap(),
        KeyId::new(1).unwrap(),
    )
}

/// Looks up a built-in layout by name (`proposed` or `traditional`).
pub fn builtin(name: &str) -> Option<Layout> {
    match name {
        "proposed" => Some(proposed()),
        "traditional" => Some(traditional_multitap()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{reference_ranking, reference_ranking_strict};

    fn key(d: u8) -> KeyId {
        KeyId::new(d).unwrap()
    }

    fn seq(layout: &Layout, d: u8) -> String {
        layout.letters_on(key(d)).iter().collect()
    }

    #[test]
    fn golden_construction() {
        let layout = proposed();
        assert_eq!(seq(&layout, 1), "ewf");
        assert_eq!(seq(&layout, 2), "tcg");
        assert_eq!(seq(&layout, 4), "oyp");
        assert_eq!(seq(&layout, 5), "amb");
        assert_eq!(seq(&layout, 7), "iuv");
        assert_eq!(seq(&layout, 3), "sdk");
        assert_eq!(seq(&layout, 6), "nljq");
        assert_eq!(seq(&layout, 8), "rhxz");
        assert_eq!(layout.space_key(), key(0));
        assert_eq!(layout.symbol_key(), key(9));
        assert!(layout.letters_on(key(0)).is_empty());
        assert!(layout.letters_on(key(9)).is_empty());
        assert!(layout.is_valid());
    }

    #[test]
    fn strict_ranking_swaps_keys_3_and_6_first_letters() {
        let layout = build_boustrophedon(
            &reference_ranking_strict(),
            &default_keypad().rank_keys(),
            key(0),
            key(9),
        )
        .unwrap();
        assert_eq!(seq(&layout, 3), "ndk");
        assert_eq!(seq(&layout, 6), "sljq");
        // Everything else matches the published construction.
        for d in [1, 2, 4, 5, 7, 8] {
            assert_eq!(seq(&layout, d), seq(&proposed(), d), "key {d}");
        }
        assert!(layout.is_valid());
    }

    #[test]
    fn eight_letters_fit_in_one_forward_pass() {
        let layout = build_boustrophedon(
            &['e', 't', 'o', 'a', 'i', 's', 'n', 'r'],
            &default_keypad().rank_keys(),
            key(0),
            key(9),
        )
        .unwrap();
        for (d, expected) in [
            (1, "e"),
            (2, "t"),
            (4, "o"),
            (5, "a"),
            (7, "i"),
            (3, "s"),
            (6, "n"),
            (8, "r"),
        ] {
            assert_eq!(seq(&layout, d), expected);
        }
    }

    #[test]
    fn builder_rejects_bad_rankings() {
        let keys = default_keypad().rank_keys();
        assert!(matches!(
            build_boustrophedon(&[], &keys, key(0), key(9)),
            Err(Error::EmptyRanking)
        ));
        assert!(matches!(
            build_boustrophedon(&['a', 'a'], &keys, key(0), key(9)),
            Err(Error::DuplicateRankingLetter('a'))
        ));
        assert!(matches!(
            build_boustrophedon(&['A'], &keys, key(0), key(9)),
            Err(Error::InvalidRankingLetter('A'))
        ));
        assert!(matches!(
            build_boustrophedon(&reference_ranking(), &keys[..9], key(0), key(9)),
            Err(Error::InvalidKeyRanking)
        ));
        assert!(matches!(
            build_boustrophedon(&reference_ranking(), &keys, key(9), key(9)),
            Err(Error::ReservedKeysCollide)
        ));
    }

    #[test]
    fn traditional_positions() {
        let layout = traditional_multitap();
        assert_eq!(
            layout.tap_position('s').unwrap(),
            TapPosition {
                key: key(7),
                taps: 4
            }
        );
        assert_eq!(
            layout.tap_position('a').unwrap(),
            TapPosition {
                key: key(2),
                taps: 1
            }
        );
        assert!(layout.is_valid());
    }

    #[test]
    fn tap_positions_on_the_proposed_layout() {
        let layout = proposed();
        assert_eq!(
            layout.tap_position('e').unwrap(),
            TapPosition {
                key: key(1),
                taps: 1
            }
        );
        assert_eq!(
            layout.tap_position('q').unwrap(),
            TapPosition {
                key: key(6),
                taps: 4
            }
        );
        assert_eq!(
            layout.tap_position(' ').unwrap(),
            TapPosition {
                key: key(0),
                taps: 1
            }
        );
        assert!(matches!(
            layout.tap_position('?'),
            Err(Error::UnsupportedCharacter('?'))
        ));
        assert!(matches!(
            layout.tap_position('3'),
            Err(Error::UnsupportedCharacter('3'))
        ));
    }

    #[test]
    fn validate_reports_missing_and_duplicate_letters() {
        let mut assignment = proposed().assignment().clone();
        assignment.get_mut(&key(8)).unwrap().retain(|&c| c != 'z');
        let missing = Layout::new("broken", assignment, key(0), key(9));
        assert!(missing.validate().contains(&Violation::MissingLetter('z')));
        assert_eq!(missing.validate().len(), 1);

        let mut assignment = proposed().assignment().clone();
        assignment.get_mut(&key(2)).unwrap()[1] = 'e';
        let doubled = Layout::new("broken", assignment, key(0), key(9));
        let violations = doubled.validate();
        assert!(violations.contains(&Violation::DuplicateLetter('e')));
        assert!(violations.contains(&Violation::MissingLetter('c')));
    }

    #[test]
    fn validate_reports_structural_problems() {
        let mut assignment = proposed().assignment().clone();
        assignment.insert(key(0), vec!['q']);
        assignment.get_mut(&key(6)).unwrap().retain(|&c| c != 'q');
        let layout = Layout::new("broken", assignment, key(0), key(9));
        assert!(layout
            .validate()
            .contains(&Violation::ReservedKeyBearsLetters(key(0))));

        let mut assignment = proposed().assignment().clone();
        assignment.get_mut(&key(1)).unwrap().push('z');
        assignment.get_mut(&key(1)).unwrap().push('q');
        let layout = Layout::new("broken", assignment, key(0), key(9));
        assert!(layout
            .validate()
            .iter()
            .any(|v| matches!(v, Violation::TooManyLetters { count: 5, .. })));
    }

    #[test]
    fn json_round_trip_is_canonical() {
        let layout = proposed();
        let json = layout.to_json();
        let back = Layout::from_json(&json).unwrap();
        assert_eq!(back, layout);
        assert_eq!(back.to_json(), json);
        // Keys appear in numeric order in the document.
        let order: Vec<usize> = ["\"1\"", "\"2\"", "\"3\"", "\"4\""]
            .iter()
            .map(|k| json.find(*k).unwrap())
            .collect();
        assert!(order.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn builtin_lookup() {
        assert_eq!(builtin("proposed").unwrap().name(), "proposed");
        assert_eq!(builtin("traditional").unwrap().name(), "traditional");
        assert!(builtin("qwerty").is_none());
    }
}
