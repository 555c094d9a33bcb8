//! The ten-key phone pad and its per-key thumb-ergonomics attributes.
//!
//! Each key is characterized by the interphalangeal joint angle the thumb
//! adopts when pressing it and by the direction the metacarpophalangeal
//! joint moves (forward = flexion, lateral = extension). Extension is the
//! more effortful movement, so flexion keys always outrank extension keys;
//! within a group a wider joint angle means an easier press.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// One of the ten modeled keys (`1`-`9` and `0`). The `*` and `#` keys carry
/// no content and are outside the model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KeyId(u8);

impl KeyId {
    /// All ten keys in numeric order.
    pub const ALL: [KeyId; 10] = [
        KeyId(0),
        KeyId(1),
        KeyId(2),
        KeyId(3),
        KeyId(4),
        KeyId(5),
        KeyId(6),
        KeyId(7),
        KeyId(8),
        KeyId(9),
    ];

    pub fn new(digit: u8) -> Result<Self> {
        if digit <= 9 {
            Ok(KeyId(digit))
        } else {
            Err(Error::InvalidKey(digit.to_string()))
        }
    }

    pub const fn digit(self) -> u8 {
        self.0
    }
}

impl fmt::Display for KeyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for KeyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.as_bytes() {
            [d @ b'0'..=b'9'] => Ok(KeyId(d - b'0')),
            _ => Err(Error::InvalidKey(s.to_string())),
        }
    }
}

// Keys serialize as the string digits "0".."9" everywhere (JSON object keys
// have to be strings, and mixing string and numeric forms would be worse).
impl Serialize for KeyId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for KeyId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Direction the metacarpophalangeal joint moves when the thumb presses a key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum McjDirection {
    /// Forward movement: flexion, the comfortable press.
    Forward,
    /// Lateral movement: extension, the effortful press.
    Lateral,
}

/// Thumb-movement attributes of a single key.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KeyErgonomics {
    pub key: KeyId,
    /// Interphalangeal joint angle in degrees, exclusive range (0, 180).
    pub ipj_angle: f64,
    pub mcj_direction: McjDirection,
}

impl KeyErgonomics {
    pub fn is_flexion(&self) -> bool {
        self.mcj_direction == McjDirection::Forward
    }

    pub fn is_extension(&self) -> bool {
        self.mcj_direction == McjDirection::Lateral
    }
}

/// The ten keys with their ergonomics plus the two reserved roles
/// (space and symbols).
#[derive(Debug, Clone, PartialEq)]
pub struct KeypadModel {
    ergonomics: [KeyErgonomics; 10], // indexed by digit
    space_key: KeyId,
    symbol_key: KeyId,
}

impl KeypadModel {
    pub fn new(
        ergonomics: Vec<KeyErgonomics>,
        space_key: KeyId,
        symbol_key: KeyId,
    ) -> Result<Self> {
        if space_key == symbol_key {
            return Err(Error::ReservedKeysCollide);
        }
        let mut slots: [Option<KeyErgonomics>; 10] = [None; 10];
        for e in ergonomics {
            if !(e.ipj_angle > 0.0 && e.ipj_angle < 180.0) {
                return Err(Error::InvalidKeypad(format!(
                    "key {} has angle {}°, outside (0°, 180°)",
                    e.key, e.ipj_angle
                )));
            }
            let slot = &mut slots[e.key.digit() as usize];
            if slot.is_some() {
                return Err(Error::InvalidKeypad(format!("key {} appears twice", e.key)));
            }
            *slot = Some(e);
        }
        if let Some(missing) = slots.iter().position(|s| s.is_none()) {
            return Err(Error::InvalidKeypad(format!("key {missing} is missing")));
        }
        Ok(KeypadModel {
            ergonomics: slots.map(|s| s.unwrap()),
            space_key,
            symbol_key,
        })
    }

    pub fn ergonomics(&self, key: KeyId) -> &KeyErgonomics {
        &self.ergonomics[key.digit() as usize]
    }

    pub fn space_key(&self) -> KeyId {
        self.space_key
    }

    pub fn symbol_key(&self) -> KeyId {
        self.symbol_key
    }

    /// Keys ordered from most to least flexible: flexion keys before
    /// extension keys, descending joint angle within a group, ascending key
    /// number on equal angles.
    pub fn rank_keys(&self) -> [KeyId; 10] {
        let mut keys = KeyId::ALL;
        keys.sort_by(|&a, &b| {
            let ea = self.ergonomics(a);
            let eb = self.ergonomics(b);
            ea.is_extension()
                .cmp(&eb.is_extension())
                .then(eb.ipj_angle.total_cmp(&ea.ipj_angle))
                .then(a.digit().cmp(&b.digit()))
        });
        keys
    }

    /// Keys reachable by flexion (forward movement).
    pub fn flexible_keys(&self) -> BTreeSet<KeyId> {
        KeyId::ALL
            .into_iter()
            .filter(|&k| self.ergonomics(k).is_flexion())
            .collect()
    }

    /// Keys requiring extension (lateral movement).
    pub fn inflexible_keys(&self) -> BTreeSet<KeyId> {
        KeyId::ALL
            .into_iter()
            .filter(|&k| self.ergonomics(k).is_extension())
            .collect()
    }

    pub fn is_flexible(&self, key: KeyId) -> bool {
        self.ergonomics(key).is_flexion()
    }

    pub fn to_json(&self) -> String {
        let doc = KeypadDoc {
            keys: KeyId::ALL
                .into_iter()
                .map(|k| {
                    let e = self.ergonomics(k);
                    KeyDoc {
                        key: k,
                        ipj_angle_degrees: e.ipj_angle,
                        mcj_direction: e.mcj_direction,
                    }
                })
                .collect(),
            space_key: self.space_key,
            symbol_key: self.symbol_key,
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("keypad serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: KeypadDoc = serde_json::from_str(text)?;
        let ergonomics = doc
            .keys
            .into_iter()
            .map(|k| KeyErgonomics {
                key: k.key,
                ipj_angle: k.ipj_angle_degrees,
                mcj_direction: k.mcj_direction,
            })
            .collect();
        KeypadModel::new(ergonomics, doc.space_key, doc.symbol_key)
    }
}

impl Default for KeypadModel {
    fn default() -> Self {
        default_keypad()
    }
}

#[derive(Serialize, Deserialize)]
struct KeypadDoc {
    keys: Vec<KeyDoc>,
    space_key: KeyId,
    symbol_key: KeyId,
}

#[derive(Serialize, Deserialize)]
struct KeyDoc {
    key: KeyId,
    ipj_angle_degrees: f64,
    mcj_direction: McjDirection,
}

/// The built-in ergonomics table: per-key interphalangeal angles and
/// movement directions, with space on key 0 and symbols on key 9.
pub fn default_keypad() -> KeypadModel {
    const TABLE: [(u8, f64, McjDirection); 10] = [
        (1, 120.0, McjDirection::Forward),
        (2, 110.0, McjDirection::Forward),
        (3, 80.0, McjDirection::Lateral),
        (4, 100.0, McjDirection::Forward),
        (5, 95.0, McjDirection::Forward),
        (6, 70.0, McjDirection::Lateral),
        (7, 80.0, McjDirection::Forward),
        (8, 70.0, McjDirection::Lateral),
        (9, 65.0, McjDirection::Lateral),
        (0, 40.0, McjDirection::Lateral),
    ];
    let ergonomics = TABLE
        .into_iter()
        .map(|(digit, ipj_angle, mcj_direction)| KeyErgonomics {
            key: KeyId::new(digit).unwrap(),
            ipj_angle,
            mcj_direction,
        })
        .collect();
    KeypadModel::new(ergonomics, KeyId(0), KeyId(9)).expect("built-in table is valid")
}
