//! Strict partitions: strictly decreasing sequences of positive integers.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A strictly decreasing sequence of positive integers, possibly empty.
///
/// Strict partitions index shifted diagrams and the straight-shape Schur Q
/// basis. The derived `Ord` is lexicographic on the part vector, so the
/// *descending* iteration order used for expansion display is `iter().rev()`
/// over a `BTreeMap` keyed by `StrictPartition`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    /// Builds a strict partition, rejecting non-decreasing or zero parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::NotStrict(format_parts(&parts)));
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotStrict(format_parts(&parts)));
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    /// Single-row partition `(r)`; `r` must be positive.
    pub fn single_row(r: u32) -> Self {
        debug_assert!(r > 0);
        StrictPartition {
            parts: alloc::vec![r],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part at 1-indexed row `i`, with 0 beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// Whether the diagram of `inner` is contained in this one, part by part.
    pub fn contains(&self, inner: &StrictPartition) -> bool {
        inner.parts.len() <= self.parts.len()
            && inner
                .parts
                .iter()
                .enumerate()
                .all(|(i, &p)| p <= self.parts[i])
    }

    /// Parses a whitespace- or comma-separated list of parts, e.g. `"6 5 2 1"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let p: u32 = tok
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad part {tok:?}")))?;
            parts.push(p);
        }
        StrictPartition::new(parts)
    }

    /// All strict partitions of `n`, in descending lexicographic order.
    ///
    /// `strict_partitions(0)` yields the empty partition alone.
    pub fn strict_partitions(n: u32) -> Vec<StrictPartition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        descend(n, n, &mut stack, &mut out);
        out
    }
}

fn descend(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
    if remaining == 0 {
        out.push(StrictPartition {
            parts: stack.clone(),
        });
        return;
    }
    let hi = remaining.min(max_part);
    for p in (1..=hi).rev() {
        // Strictly smaller parts below p must still be able to reach the sum.
        if (remaining - p) > p.saturating_sub(1) * p / 2 {
            continue;
        }
        stack.push(p);
        descend(remaining - p, p - 1, stack, out);
        stack.pop();
    }
}

fn format_parts(parts: &[u32]) -> String {
    let mut s = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        s.push_str(&alloc::format!("{p}"));
    }
    s
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_parts(&self.parts))
    }
}
