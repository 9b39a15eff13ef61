//! Exhaustive verification campaigns over shape classes: parallel
//! fingerprint scans, equality grouping, and checkpointed JSONL persistence.
//!
//! Work is distributed one shape at a time over a dynamic queue; a single
//! writer thread drains completed records, so storage is only ever touched
//! from one place and the campaign state is recoverable from the output
//! file alone. All reports are built from sorted collections, making them
//! independent of thread count and completion order.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::time::Instant;

use qfray_core::expansion::EngineOptions;
use qfray_core::shape::{enumerate_frayed_ribbons, enumerate_shifted_skew_shapes, ShapeKind};
use qfray_core::ShiftedSkewShape;
use serde::Serialize;
use thiserror::Error;

use crate::record::{Record, SentinelRecord, ShapeRecord};

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("engine error: {0}")]
    Core(#[from] qfray_core::Error),
    #[error("storage error: {0}")]
    Io(#[from] std::io::Error),
    #[error("corrupt campaign file: {0}")]
    Corrupt(String),
}

pub type Result<T> = std::result::Result<T, SearchError>;

/// Shape classes a scan can run over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassFilter {
    /// Frayed ribbons (code enumeration, both orientations).
    Frayed,
    /// Connected near-ribbons, frayed or not.
    NearRibbon,
    /// Connected shapes with at least two staircase cells.
    TwoStaircase,
    /// All connected shapes.
    Connected,
    /// Every enumerated shape, disconnected ones included.
    All,
}

impl ClassFilter {
    pub fn name(&self) -> &'static str {
        match self {
            ClassFilter::Frayed => "frayed_ribbon",
            ClassFilter::NearRibbon => "near_ribbon",
            ClassFilter::TwoStaircase => "two_staircase",
            ClassFilter::Connected => "connected",
            ClassFilter::All => "all",
        }
    }

    /// Enumerates the class members of one size.
    pub fn shapes(&self, n: u32) -> Vec<ShiftedSkewShape> {
        match self {
            ClassFilter::Frayed => enumerate_frayed_ribbons(n, false),
            ClassFilter::NearRibbon => enumerate_shifted_skew_shapes(n, true)
                .into_iter()
                .filter(|s| {
                    s.classify()
                        .map(|c| c.kind.is_near_ribbon())
                        .unwrap_or(false)
                })
                .collect(),
            ClassFilter::TwoStaircase => enumerate_shifted_skew_shapes(n, true)
                .into_iter()
                .filter(|s| s.staircase_cells().len() >= 2)
                .collect(),
            ClassFilter::Connected => enumerate_shifted_skew_shapes(n, true),
            ClassFilter::All => enumerate_shifted_skew_shapes(n, false),
        }
    }
}

/// A group of shapes sharing one fingerprint, with full expansion evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqualGroup {
    pub fingerprint: String,
    pub members: Vec<ShapeRecord>,
}

/// Outcome of scanning one size of one class.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub size: u32,
    pub class: String,
    pub shape_count: usize,
    pub group_count: usize,
    /// Groups that violate the property under test; empty means verified.
    pub violations: Vec<EqualGroup>,
    pub wall_ms: u128,
    pub pruning: bool,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn default_threads() -> usize {
    if let Ok(v) = std::env::var("QFRAY_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
    }
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

/// Computes records for every shape on `threads` workers (0 means the
/// `QFRAY_THREADS`/available-parallelism default) and hands them to `sink`
/// in completion order.
pub fn compute_records(
    shapes: &[ShiftedSkewShape],
    threads: usize,
    opts: EngineOptions,
    sink: &mut dyn FnMut(ShapeRecord) -> Result<()>,
) -> Result<()> {
    let threads = if threads == 0 {
        default_threads()
    } else {
        threads
    };
    if threads <= 1 || shapes.len() <= 1 {
        for shape in shapes {
            sink(ShapeRecord::compute(shape, opts)?)?;
        }
        return Ok(());
    }
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| -> Result<()> {
        let (tx, rx) =
            mpsc::sync_channel::<std::result::Result<ShapeRecord, qfray_core::Error>>(2 * threads);
        for _ in 0..threads {
            let tx = tx.clone();
            let next = &next;
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= shapes.len() {
                    break;
                }
                if tx.send(ShapeRecord::compute(&shapes[i], opts)).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        let mut first_err = None;
        for rec in rx {
            if first_err.is_some() {
                continue; // drain so workers can finish
            }
            match rec {
                Ok(r) => {
                    if let Err(e) = sink(r) {
                        first_err = Some(e);
                    }
                }
                Err(e) => first_err = Some(e.into()),
            }
        }
        match first_err {
            Some(e) => Err(e),
            None => Ok(()),
        }
    })
}

/// Groups records by fingerprint; members sorted by shape string, groups by
/// fingerprint, independent of input order.
fn group_by_fingerprint(records: Vec<ShapeRecord>) -> Vec<EqualGroup> {
    let mut groups: BTreeMap<String, Vec<ShapeRecord>> = BTreeMap::new();
    for r in records {
        groups.entry(r.fp.clone()).or_default().push(r);
    }
    groups
        .into_iter()
        .map(|(fingerprint, mut members)| {
            members.sort_by(|a, b| a.shape.cmp(&b.shape));
            members.dedup();
            EqualGroup {
                fingerprint,
                members,
            }
        })
        .collect()
}

fn is_antipodal_pair(a: &str, b: &str) -> bool {
    let (Ok(sa), Ok(sb)) = (ShiftedSkewShape::parse(a), ShiftedSkewShape::parse(b)) else {
        return false;
    };
    sa.antipodal() == sb
}

/// Scans all frayed ribbons of size `n` and reports every fingerprint group
/// that is not a single shape or an antipodal pair.
pub fn verify_frayed_distinctness(
    n: u32,
    threads: usize,
    opts: EngineOptions,
) -> Result<VerificationReport> {
    verify_size(ClassFilter::Frayed, n, threads, opts, &mut |_| Ok(()))
}

/// Scans all connected shapes of size `n` and reports every fingerprint
/// group that mixes near-ribbons with non-near-ribbons.
pub fn verify_near_ribbon_closure(
    n: u32,
    threads: usize,
    opts: EngineOptions,
) -> Result<VerificationReport> {
    verify_size(ClassFilter::Connected, n, threads, opts, &mut |_| Ok(()))
}

fn violates(class: ClassFilter, group: &EqualGroup) -> bool {
    match class {
        ClassFilter::Frayed => match group.members.as_slice() {
            [_] => false,
            [a, b] => !is_antipodal_pair(&a.shape, &b.shape),
            _ => true,
        },
        // Closure property: a group containing a near-ribbon holds only
        // near-ribbons.
        _ => {
            let near = |r: &ShapeRecord| {
                r.class == ShapeKind::FrayedRibbon.name()
                    || r.class == ShapeKind::NearRibbonOrdinary.name()
            };
            group.members.iter().any(near) && !group.members.iter().all(near)
        }
    }
}

fn verify_size(
    class: ClassFilter,
    n: u32,
    threads: usize,
    opts: EngineOptions,
    record_sink: &mut dyn FnMut(&ShapeRecord) -> Result<()>,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let shapes = class.shapes(n);
    let mut records = Vec::with_capacity(shapes.len());
    compute_records(&shapes, threads, opts, &mut |r| {
        record_sink(&r)?;
        records.push(r);
        Ok(())
    })?;
    let shape_count = records.len();
    let groups = group_by_fingerprint(records);
    let group_count = groups.len();
    let violations: Vec<EqualGroup> = groups.into_iter().filter(|g| violates(class, g)).collect();
    Ok(VerificationReport {
        size: n,
        class: class.name().to_string(),
        shape_count,
        group_count,
        violations,
        wall_ms: start.elapsed().as_millis(),
        pruning: opts.prune_walks || opts.prune_top_row,
    })
}

/// Mines all fingerprint groups of the filtered class of size `n` that
/// contain at least two members not related by the antipodal reflection.
pub fn find_equal_pairs(
    n: u32,
    class: ClassFilter,
    threads: usize,
    opts: EngineOptions,
) -> Result<Vec<EqualGroup>> {
    let shapes = class.shapes(n);
    let mut records = Vec::with_capacity(shapes.len());
    compute_records(&shapes, threads, opts, &mut |r| {
        records.push(r);
        Ok(())
    })?;
    Ok(group_by_fingerprint(records)
        .into_iter()
        .filter(|g| match g.members.as_slice() {
            [] | [_] => false,
            [a, b] => !is_antipodal_pair(&a.shape, &b.shape),
            _ => true,
        })
        .collect())
}

/// Aggregated result of a campaign run.
#[derive(Debug, Clone, Serialize)]
pub struct CampaignSummary {
    pub reports: Vec<VerificationReport>,
    pub resumed_sizes: Vec<u32>,
}

impl CampaignSummary {
    pub fn ok(&self) -> bool {
        self.reports.iter().all(|r| r.ok())
    }

    pub fn total_violations(&self) -> usize {
        self.reports.iter().map(|r| r.violations.len()).sum()
    }
}

/// Loads the records of completed sizes from an existing campaign file.
fn load_completed(path: &Path) -> Result<BTreeMap<u32, Vec<ShapeRecord>>> {
    let file = File::open(path)?;
    let mut by_size: BTreeMap<u32, Vec<ShapeRecord>> = BTreeMap::new();
    let mut complete: Vec<u32> = Vec::new();
    for (lineno, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record: Record = serde_json::from_str(&line)
            .map_err(|e| SearchError::Corrupt(format!("line {}: {e}", lineno + 1)))?;
        match record {
            Record::Shape(r) => by_size.entry(r.size).or_default().push(r),
            Record::Sentinel(s) => {
                if s.complete {
                    complete.push(s.size);
                }
            }
        }
    }
    by_size.retain(|size, _| complete.contains(size));
    Ok(by_size)
}

/// Runs a full campaign over the class for every size in `sizes`, streaming
/// records to a JSONL file with a size-complete sentinel and an fsync after
/// each size. With `resume`, sizes already marked complete in the existing
/// file are loaded instead of recomputed (a partially written size is
/// recomputed from scratch).
#[allow(clippy::too_many_arguments)]
pub fn run_campaign(
    class: ClassFilter,
    sizes: std::ops::RangeInclusive<u32>,
    out_path: &Path,
    resume: bool,
    threads: usize,
    opts: EngineOptions,
    mut progress: impl FnMut(&VerificationReport),
) -> Result<CampaignSummary> {
    let completed = if resume && out_path.exists() {
        load_completed(out_path)?
    } else {
        BTreeMap::new()
    };

    let file = OpenOptions::new()
        .create(true)
        .write(true)
        .truncate(true)
        .open(out_path)?;
    let mut writer = BufWriter::new(file);
    let mut reports = Vec::new();
    let mut resumed_sizes = Vec::new();

    for n in sizes {
        if let Some(records) = completed.get(&n) {
            // Replay the stored records and rebuild the report from them.
            let start = Instant::now();
            for r in records {
                write_line(&mut writer, &Record::Shape(r.clone()))?;
            }
            finish_size(&mut writer, n)?;
            let groups = group_by_fingerprint(records.clone());
            let group_count = groups.len();
            let violations: Vec<EqualGroup> =
                groups.into_iter().filter(|g| violates(class, g)).collect();
            reports.push(VerificationReport {
                size: n,
                class: class.name().to_string(),
                shape_count: records.len(),
                group_count,
                violations,
                wall_ms: start.elapsed().as_millis(),
                pruning: opts.prune_walks || opts.prune_top_row,
            });
            resumed_sizes.push(n);
        } else {
            let report = verify_size(class, n, threads, opts, &mut |r| {
                write_line(&mut writer, &Record::Shape(r.clone()))
            })?;
            finish_size(&mut writer, n)?;
            reports.push(report);
        }
        progress(reports.last().unwrap());
    }
    writer.flush()?;
    writer.get_ref().sync_data()?;
    Ok(CampaignSummary {
        reports,
        resumed_sizes,
    })
}

fn write_line(writer: &mut BufWriter<File>, record: &Record) -> Result<()> {
    let line = serde_json::to_string(record)
        .map_err(|e| SearchError::Corrupt(format!("serialize: {e}")))?;
    writer.write_all(line.as_bytes())?;
    writer.write_all(b"\n")?;
    Ok(())
}

fn finish_size(writer: &mut BufWriter<File>, n: u32) -> Result<()> {
    write_line(writer, &Record::Sentinel(SentinelRecord::new(n)))?;
    writer.flush()?;
    writer.get_ref().sync_data()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frayed_distinctness_small_sizes() {
        let report = verify_frayed_distinctness(4, 1, EngineOptions::default()).unwrap();
        assert_eq!(report.shape_count, 2);
        assert_eq!(report.group_count, 1);
        assert!(report.ok());
        for n in 5..=8 {
            let report = verify_frayed_distinctness(n, 2, EngineOptions::default()).unwrap();
            assert!(report.ok(), "size {n}: {:?}", report.violations);
            assert_eq!(report.shape_count, enumerate_frayed_ribbons(n, false).len());
        }
    }

    #[test]
    fn closure_holds_and_finds_known_group() {
        for n in 1..=6 {
            let report = verify_near_ribbon_closure(n, 2, EngineOptions::default()).unwrap();
            assert!(report.ok(), "size {n}");
        }
    }

    #[test]
    fn equal_pair_mining_finds_published_pairs() {
        let groups =
            find_equal_pairs(8, ClassFilter::TwoStaircase, 2, EngineOptions::default()).unwrap();
        let contains_pair = groups.iter().any(|g| {
            let shapes: Vec<&str> = g.members.iter().map(|m| m.shape.as_str()).collect();
            shapes.contains(&"6 5 2 1/5 1") && shapes.contains(&"6 5 4 2 1/5 4 1")
        });
        assert!(contains_pair, "{groups:?}");

        let near =
            find_equal_pairs(8, ClassFilter::NearRibbon, 2, EngineOptions::default()).unwrap();
        let contains_pair = near.iter().any(|g| {
            let shapes: Vec<&str> = g.members.iter().map(|m| m.shape.as_str()).collect();
            shapes.contains(&"7 6 5 3/6 5 2") && shapes.contains(&"7 6 5 1/6 4 1")
        });
        assert!(contains_pair, "{near:?}");

        for n in 4..=8 {
            let frayed =
                find_equal_pairs(n, ClassFilter::Frayed, 2, EngineOptions::default()).unwrap();
            assert!(frayed.is_empty(), "size {n}: {frayed:?}");
        }
    }

    #[test]
    fn record_counts_match_enumeration() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("campaign.jsonl");
        let summary = run_campaign(
            ClassFilter::Frayed,
            4..=6,
            &path,
            false,
            2,
            EngineOptions::default(),
            |_| {},
        )
        .unwrap();
        assert!(summary.ok());
        for report in &summary.reports {
            assert_eq!(
                report.shape_count,
                enumerate_frayed_ribbons(report.size, false).len()
            );
        }
        let text = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        let sentinels = lines
            .iter()
            .filter(|l| l.contains("\"complete\":true"))
            .count();
        assert_eq!(sentinels, 3);
    }
}
