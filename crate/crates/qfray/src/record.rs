//! JSONL result records: one line per scanned shape, plus a size-complete
//! sentinel line after each finished size.

use qfray_core::expansion::{q_expansion_with, EngineOptions};
use qfray_core::shape::ShapeKind;
use qfray_core::ShiftedSkewShape;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Schema tag carried by every record line.
pub const SCHEMA: &str = "qfray.v1";

/// One scanned shape with its full expansion and fingerprint hash.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeRecord {
    pub schema: String,
    pub size: u32,
    pub shape: String,
    pub class: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub turns: Option<u32>,
    /// `(partition text, coefficient)` pairs in descending lexicographic
    /// partition order.
    pub expansion: Vec<(String, i64)>,
    /// Hex digest of the canonical expansion text.
    pub fp: String,
}

impl ShapeRecord {
    /// Computes the record for one shape: classification, turn count for
    /// frayed ribbons, the full expansion, and the fingerprint hash.
    pub fn compute(
        shape: &ShiftedSkewShape,
        opts: EngineOptions,
    ) -> Result<Self, qfray_core::Error> {
        let class = shape.classify()?;
        let turns = if class.kind == ShapeKind::FrayedRibbon {
            Some(shape.count_turns()?.total())
        } else {
            None
        };
        let expansion = q_expansion_with(shape, opts)?;
        let text = expansion.canonical_text();
        Ok(ShapeRecord {
            schema: SCHEMA.to_string(),
            size: shape.size(),
            shape: shape.to_string(),
            class: class.kind.name().to_string(),
            turns,
            expansion: expansion.to_sorted_pairs(),
            fp: digest(&text),
        })
    }
}

/// Marks a size as completely written; records of that size above this line
/// are trusted on resume.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SentinelRecord {
    pub schema: String,
    pub size: u32,
    pub complete: bool,
}

impl SentinelRecord {
    pub fn new(size: u32) -> Self {
        SentinelRecord {
            schema: SCHEMA.to_string(),
            size,
            complete: true,
        }
    }
}

/// A line of a campaign file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Record {
    Shape(ShapeRecord),
    Sentinel(SentinelRecord),
}

/// Stable hex digest of the canonical expansion text.
pub fn digest(text: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    let out = hasher.finalize();
    let mut hex = String::with_capacity(out.len() * 2);
    for byte in out {
        hex.push_str(&format!("{byte:02x}"));
    }
    hex
}
