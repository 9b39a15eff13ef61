//! Verification harness and persistence layer on top of [`qfray_core`]:
//! result records with a stable JSONL schema, parallel fingerprint scans
//! over shape classes, and checkpointed, resumable campaigns.

pub mod record;
pub mod search;

pub use record::{Record, SentinelRecord, ShapeRecord, SCHEMA};
pub use search::{
    find_equal_pairs, run_campaign, verify_frayed_distinctness, verify_near_ribbon_closure,
    CampaignSummary, ClassFilter, EqualGroup, SearchError, VerificationReport,
};
