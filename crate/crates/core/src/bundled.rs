//! The bundled sample corpus, embedded so evaluations are reproducible
//! anywhere the crate builds. See `testdata/README.md` for provenance; the
//! files are deterministically generated English-like text (~220 KB, ~167k
//! letters) whose letter and letter-pair statistics track ordinary prose.

/// Name used for the corpus in descriptors and CLI arguments.
pub const DESCRIPTOR: &str = "bundled";

pub const SAMPLE_A: &str = include_str!("../../../testdata/corpus/sample_a.txt");
pub const SAMPLE_B: &str = include_str!("../../../testdata/corpus/sample_b.txt");
pub const SAMPLE_C: &str = include_str!("../../../testdata/corpus/sample_c.txt");

/// The corpus as (file name, contents) shards.
pub fn files() -> [(&'static str, &'static str); 3] {
    [
        ("sample_a.txt", SAMPLE_A),
        ("sample_b.txt", SAMPLE_B),
        ("sample_c.txt", SAMPLE_C),
    ]
}

/// All shards joined into one raw text.
pub fn raw_text() -> String {
    [SAMPLE_A, SAMPLE_B, SAMPLE_C].join("\n")
}
