//! Shared fixtures for the pipeline benchmarks (`cargo bench -p taplab-bench`).

use taplab_core::corpus::{normalize, NormalizationPolicy};

/// The bundled corpus, normalized with the default policy.
pub fn normalized_bundled() -> String {
    normalize(
        &taplab_core::bundled::raw_text(),
        &NormalizationPolicy::default(),
    )
}
