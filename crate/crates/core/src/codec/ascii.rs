//! Line-oriented ASCII form of an event.
//!
//! ```text
//! event <event_id>
//! label <Tectonic|MiningInduced|QuarryBlast|Other|Unlabeled>
//! record <STATION> <start time, RFC 3339 ms> <rate Hz>
//! <z> <n> <e>           one whitespace-separated integer row per sample
//! ...
//! record <STATION> ...
//! ```
//!
//! `export_ascii` emits the canonical rendering (single spaces, one
//! trailing newline); `import_ascii` additionally tolerates blank lines
//! and arbitrary whitespace, so export ∘ import normalizes any accepted
//! text and is idempotent from the first pass on.

use std::fmt::Write as _;

use super::CodecError;
use crate::types::{Channel, EventWaveformSet, Label, StationRecord, TimestampMs};

fn err(line: usize, msg: impl Into<String>) -> CodecError {
    CodecError::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_time(token: &str, line: usize) -> Result<TimestampMs, CodecError> {
    if let Some(ms) = token.strip_prefix("epoch-ms:") {
        return ms
            .parse::<i64>()
            .map(TimestampMs)
            .map_err(|_| err(line, format!("bad epoch-ms timestamp {token:?}")));
    }
    TimestampMs::parse_rfc3339(token).ok_or_else(|| err(line, format!("bad timestamp {token:?}")))
}

struct PendingRecord {
    station: String,
    start: TimestampMs,
    rate: f64,
    header_line: usize,
    columns: [Vec<i32>; 3],
}

impl PendingRecord {
    fn finish(self) -> Result<StationRecord, CodecError> {
        if self.columns[0].is_empty() {
            return Err(err(self.header_line, "record has no sample rows"));
        }
        let [z, n, e] = self.columns;
        let mk = |samples| Channel {
            samples,
            sample_rate_hz: self.rate,
        };
        let rec = StationRecord {
            station_code: self.station,
            start_time: self.start,
            channels: [mk(z), mk(n), mk(e)],
        };
        rec.validate()?;
        Ok(rec)
    }
}

/// Parses the ASCII form. Produces an event equivalent to a binary decode
/// of the same data.
pub fn import_ascii(text: &str) -> Result<EventWaveformSet, CodecError> {
    let mut event_id: Option<String> = None;
    let mut label: Option<Label> = None;
    let mut records: Vec<StationRecord> = Vec::new();
    let mut pending: Option<PendingRecord> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match tokens[0] {
            "event" => {
                if event_id.is_some() {
                    return Err(err(line, "duplicate event line"));
                }
                if tokens.len() != 2 {
                    return Err(err(line, "expected: event <id>"));
                }
                event_id = Some(tokens[1].to_string());
            }
            "label" => {
                if label.is_some() {
                    return Err(err(line, "duplicate label line"));
                }
                if tokens.len() != 2 {
                    return Err(err(line, "expected: label <name>"));
                }
                label = Some(
                    Label::from_name(tokens[1])
                        .ok_or_else(|| err(line, format!("unknown label {:?}", tokens[1])))?,
                );
            }
            "record" => {
                if tokens.len() != 4 {
                    return Err(err(line, "expected: record <station> <start> <rate>"));
                }
                if let Some(p) = pending.take() {
                    records.push(p.finish()?);
                }
                let rate: f64 = tokens[3]
                    .parse()
                    .map_err(|_| err(line, format!("bad sample rate {:?}", tokens[3])))?;
                pending = Some(PendingRecord {
                    station: tokens[1].to_string(),
                    start: parse_time(tokens[2], line)?,
                    rate,
                    header_line: line,
                    columns: [Vec::new(), Vec::new(), Vec::new()],
                });
            }
            _ => {
                let p = pending
                    .as_mut()
                    .ok_or_else(|| err(line, "sample row before any record line"))?;
                if tokens.len() != 3 {
                    return Err(CodecError::RaggedColumns { line });
                }
                for (col, tok) in tokens.iter().enumerate() {
                    let v: i32 = tok
                        .parse()
                        .map_err(|_| err(line, format!("bad sample value {tok:?}")))?;
                    p.columns[col].push(v);
                }
            }
        }
    }
    if let Some(p) = pending.take() {
        records.push(p.finish()?);
    }

    let event = EventWaveformSet {
        event_id: event_id.ok_or_else(|| err(1, "missing event line"))?,
        label: label.ok_or_else(|| err(1, "missing label line"))?,
        records,
    };
    event.validate()?;
    Ok(event)
}

/// Renders the canonical ASCII form.
pub fn export_ascii(event: &EventWaveformSet) -> Result<String, CodecError> {
    event.validate()?;
    let mut out = String::new();
    writeln!(out, "event {}", event.event_id).unwrap();
    writeln!(out, "label {}", event.label.name()).unwrap();
    for rec in &event.records {
        writeln!(
            out,
            "record {} {} {}",
            rec.station_code,
            rec.start_time.to_rfc3339(),
            rec.sample_rate_hz()
        )
        .unwrap();
        let [z, n, e] = &rec.channels;
        for i in 0..rec.num_samples() {
            writeln!(out, "{} {} {}", z.samples[i], n.samples[i], e.samples[i]).unwrap();
        }
    }
    Ok(out)
}
