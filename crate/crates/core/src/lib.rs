//! Corpus-driven analysis of phone-keypad text entry.
//!
//! The crate splits into five pieces:
//!
//! - [`corpus`]: text normalization and letter/letter-pair frequency tables;
//! - [`keymodel`]: the ten-key pad with per-key thumb ergonomics and the
//!   derived flexibility ordering;
//! - [`layout`]: letter-to-key assignments, including the boustrophedon
//!   frequency construction and the traditional alphabetic pad;
//! - [`simulate`]: the multitap cost model: tap counts, key-jam statistics,
//!   key usage by flexibility class, modeled time;
//! - [`report`]: multi-layout comparisons rendered as text, CSV, JSON, or a
//!   deterministic SVG bar chart.
//!
//! Everything is deterministic: identical inputs produce identical results,
//! byte for byte in every serialized form.
//!
//! ```
//! use taplab_core::simulate::total_taps;
//! use taplab_core::{normalize, proposed, traditional_multitap, NormalizationPolicy};
//!
//! let text = normalize("The quick brown fox!", &NormalizationPolicy::default());
//! let frequency_based = total_taps(&proposed(), &text).unwrap();
//! let alphabetic = total_taps(&traditional_multitap(), &text).unwrap();
//! assert!(frequency_based < alphabetic);
//! ```

pub mod bundled;
pub mod corpus;
pub mod error;
pub mod keymodel;
pub mod layout;
pub mod report;
pub mod simulate;

pub use corpus::{
    normalize, FrequencyTable, LetterRanking, NonAlphabetAction, NormalizationPolicy,
};
pub use error::{Error, Result};
pub use keymodel::{default_keypad, KeyErgonomics, KeyId, KeypadModel, McjDirection};
pub use layout::{build_boustrophedon, proposed, traditional_multitap, Layout, TapPosition};
pub use report::{compare, render, ComparisonReport, PairwiseDelta, RenderFormat};
pub use simulate::{evaluate_table, evaluate_text, CostParams, CostReport};
