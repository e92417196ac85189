//! Amplitude-domain corruption detection.
//!
//! Three per-channel heuristics, applied in the time domain:
//!
//! 1. hard amplitude threshold — any sample at or above full scale
//!    indicates potential clipping;
//! 2. excessive high-amplitude fraction — more than `high_frac_share` of
//!    samples exceed `high_frac_level` × full scale;
//! 3. global distribution imbalance — at least `below_mean_share` of
//!    samples fall strictly below the mean absolute amplitude.
//!
//! An event is marked corrupted if any channel of any of its records
//! violates at least one heuristic.
//!
//! All threshold comparisons are evaluated in exact integer arithmetic
//! (the fractional thresholds are decomposed into dyadic rationals), so
//! verdicts are invariant under common integer rescaling of samples and
//! clip level.

use serde::Serialize;
use thiserror::Error;

use crate::types::{Channel, EventWaveformSet};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QcError {
    #[error("channel has no samples")]
    EmptyChannel,
    #[error("record {record} channel {channel}: channel has no samples")]
    EmptyChannelAt { record: usize, channel: usize },
    #[error("invalid thresholds: {0}")]
    BadThresholds(String),
}

/// Tunable levels for the three heuristics.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QcThresholds {
    /// Absolute amplitude treated as instrument full scale.
    pub clip_level: i32,
    /// Fraction of full scale above which a sample counts as
    /// high-amplitude.
    pub high_frac_level: f64,
    /// Share of high-amplitude samples beyond which the channel is marked
    /// (strictly greater).
    pub high_frac_share: f64,
    /// Share of samples strictly below the mean absolute amplitude at or
    /// beyond which the distribution is deemed pathological.
    pub below_mean_share: f64,
}

impl Default for QcThresholds {
    fn default() -> Self {
        QcThresholds {
            clip_level: i16::MAX as i32,
            high_frac_level: 0.8,
            high_frac_share: 0.35,
            below_mean_share: 0.95,
        }
    }
}

impl QcThresholds {
    pub fn validate(&self) -> Result<(), QcError> {
        if self.clip_level <= 0 {
            return Err(QcError::BadThresholds(format!(
                "clip_level must be positive, got {}",
                self.clip_level
            )));
        }
        for (name, v) in [
            ("high_frac_level", self.high_frac_level),
            ("high_frac_share", self.high_frac_share),
            ("below_mean_share", self.below_mean_share),
        ] {
            if !(v > 0.0 && v < 1.0) {
                return Err(QcError::BadThresholds(format!(
                    "{name} must lie strictly between 0 and 1, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// Decomposes a positive fraction into `m * 2^e` with integer `m`.
/// Exact: every finite f64 is a dyadic rational.
fn dyadic(x: f64) -> (u64, i32) {
    debug_assert!(x > 0.0 && x < 1.0);
    let mut m = x;
    let mut e = 0i32;
    while m.fract() != 0.0 {
        m *= 2.0;
        e -= 1;
    }
    (m as u64, e)
}

/// Exact `lhs > frac * rhs` for integer lhs, rhs and fractional f64 `frac`.
fn gt_frac_of(lhs: u64, frac: f64, rhs: u64) -> bool {
    let (m, e) = dyadic(frac);
    ((lhs as u128) << (-e) as u32) > (m as u128) * (rhs as u128)
}

/// Exact `lhs >= frac * rhs`.
fn ge_frac_of(lhs: u64, frac: f64, rhs: u64) -> bool {
    let (m, e) = dyadic(frac);
    ((lhs as u128) << (-e) as u32) >= (m as u128) * (rhs as u128)
}

fn non_empty(ch: &Channel) -> Result<(), QcError> {
    if ch.samples.is_empty() {
        Err(QcError::EmptyChannel)
    } else {
        Ok(())
    }
}

/// True iff any sample reaches full scale in absolute amplitude.
pub fn check_clipping(ch: &Channel, t: &QcThresholds) -> Result<bool, QcError> {
    non_empty(ch)?;
    t.validate()?;
    let clip = t.clip_level as u32;
    Ok(ch.samples.iter().any(|s| s.unsigned_abs() >= clip))
}

/// True iff more than `high_frac_share` of samples exceed
/// `high_frac_level` × full scale in absolute amplitude.
pub fn check_high_fraction(ch: &Channel, t: &QcThresholds) -> Result<bool, QcError> {
    non_empty(ch)?;
    t.validate()?;
    let clip = t.clip_level as u64;
    let count = ch
        .samples
        .iter()
        .filter(|s| gt_frac_of(u64::from(s.unsigned_abs()), t.high_frac_level, clip))
        .count() as u64;
    Ok(gt_frac_of(count, t.high_frac_share, ch.len() as u64))
}

/// True iff at least `below_mean_share` of samples fall strictly below the
/// mean absolute amplitude.
pub fn check_imbalance(ch: &Channel, t: &QcThresholds) -> Result<bool, QcError> {
    non_empty(ch)?;
    t.validate()?;
    let n = ch.len() as u64;
    let sum: u64 = ch.samples.iter().map(|s| u64::from(s.unsigned_abs())).sum();
    // |s| < sum/n  <=>  |s| * n < sum, exactly.
    let count = ch
        .samples
        .iter()
        .filter(|s| u128::from(s.unsigned_abs()) * u128::from(n) < u128::from(sum))
        .count() as u64;
    Ok(ge_frac_of(count, t.below_mean_share, n))
}

/// True iff every sample is exactly zero. Dead channels pass the three
/// corruption heuristics by design; this separate warning surfaces them.
pub fn check_dead(ch: &Channel) -> Result<bool, QcError> {
    non_empty(ch)?;
    Ok(ch.samples.iter().all(|&s| s == 0))
}

/// Verdicts for one channel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ChannelQc {
    pub clipped: bool,
    pub high_fraction: bool,
    pub imbalance: bool,
    /// Informational only; never contributes to `event_corrupted`.
    pub dead: bool,
}

impl ChannelQc {
    pub fn corrupted(&self) -> bool {
        self.clipped || self.high_fraction || self.imbalance
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecordQc {
    pub station_code: String,
    pub channels: [ChannelQc; 3],
}

/// Per-channel verdicts for a whole event plus the OR-reduction.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QcReport {
    pub event_id: String,
    pub records: Vec<RecordQc>,
    pub event_corrupted: bool,
}

impl QcReport {
    pub const CSV_HEADER: &'static str =
        "event_id,station,channel,clipped,high_fraction,imbalance,event_corrupted";

    /// One CSV row per channel, matching [`Self::CSV_HEADER`].
    pub fn csv_rows(&self) -> Vec<String> {
        let mut rows = Vec::new();
        for rec in &self.records {
            for (ci, ch) in rec.channels.iter().enumerate() {
                rows.push(format!(
                    "{},{},{},{},{},{},{}",
                    self.event_id,
                    rec.station_code,
                    crate::types::COMPONENTS[ci],
                    ch.clipped,
                    ch.high_fraction,
                    ch.imbalance,
                    self.event_corrupted
                ));
            }
        }
        rows
    }
}

/// Runs all three heuristics on every channel of every record.
pub fn qc_event(event: &EventWaveformSet, t: &QcThresholds) -> Result<QcReport, QcError> {
    let mut records = Vec::with_capacity(event.records.len());
    for (ri, rec) in event.records.iter().enumerate() {
        let mut channels = [ChannelQc::default(); 3];
        for (ci, ch) in rec.channels.iter().enumerate() {
            let locate = |e| match e {
                QcError::EmptyChannel => QcError::EmptyChannelAt {
                    record: ri,
                    channel: ci,
                },
                other => other,
            };
            channels[ci] = ChannelQc {
                clipped: check_clipping(ch, t).map_err(locate)?,
                high_fraction: check_high_fraction(ch, t).map_err(locate)?,
                imbalance: check_imbalance(ch, t).map_err(locate)?,
                dead: check_dead(ch).map_err(locate)?,
            };
        }
        records.push(RecordQc {
            station_code: rec.station_code.clone(),
            channels,
        });
    }
    let event_corrupted = records
        .iter()
        .flat_map(|r| r.channels.iter())
        .any(ChannelQc::corrupted);
    Ok(QcReport {
        event_id: event.event_id.clone(),
        records,
        event_corrupted,
    })
}
