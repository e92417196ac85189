//! The `ETF2` binary event container.
//!
//! Layout (all integers little-endian, see `docs/format.md`):
//!
//! ```text
//! "ETF2"  magic, 4 bytes
//! u8      version (currently 1)
//! u8      label code 0..4
//! u8      record count 1..=5
//! u8      event id length L (1..=255), then L bytes ASCII
//! per record:
//!   4 bytes station code, right-padded with spaces
//!   i64    start time, milliseconds since Unix epoch
//!   f32    sample rate in Hz
//!   u8     channel count, must be 3
//!   per channel (Z, N, E):
//!     u32  sample count n
//!     n x i16 samples
//! ```

use super::{CodecError, Reader};
use crate::types::{Channel, EventWaveformSet, Label, StationRecord, TimestampMs};

pub const ETF2_MAGIC: [u8; 4] = *b"ETF2";
pub const ETF2_VERSION: u8 = 1;

/// Serializes an event into the binary container. Deterministic: identical
/// inputs yield identical bytes.
pub fn encode_estf2(event: &EventWaveformSet) -> Result<Vec<u8>, CodecError> {
    event.validate()?;

    let total_samples: usize = event
        .records
        .iter()
        .map(|r| r.channels.iter().map(Channel::len).sum::<usize>())
        .sum();
    let mut out = Vec::with_capacity(32 + event.event_id.len() + 29 * event.records.len()
        + 2 * total_samples);

    out.extend_from_slice(&ETF2_MAGIC);
    out.push(ETF2_VERSION);
    out.push(event.label.code());
    out.push(event.records.len() as u8);
    out.push(event.event_id.len() as u8);
    out.extend_from_slice(event.event_id.as_bytes());

    for rec in &event.records {
        let mut code = [b' '; 4];
        code[..rec.station_code.len()].copy_from_slice(rec.station_code.as_bytes());
        out.extend_from_slice(&code);
        out.extend_from_slice(&rec.start_time.0.to_le_bytes());

        let rate = rec.sample_rate_hz();
        let narrowed = rate as f32;
        if f64::from(narrowed) != rate {
            return Err(CodecError::RatePrecision(rate));
        }
        out.extend_from_slice(&narrowed.to_le_bytes());
        out.push(3);

        for ch in &rec.channels {
            out.extend_from_slice(&(ch.len() as u32).to_le_bytes());
            for &s in &ch.samples {
                let narrow =
                    i16::try_from(s).map_err(|_| CodecError::SampleOverflow { value: s })?;
                out.extend_from_slice(&narrow.to_le_bytes());
            }
        }
    }
    Ok(out)
}

/// Parses a binary container back into an event. The inverse of
/// [`encode_estf2`]: `decode_estf2(encode_estf2(e)) == e` field-exact.
pub fn decode_estf2(bytes: &[u8]) -> Result<EventWaveformSet, CodecError> {
    let mut r = Reader::new(bytes);

    if r.take(4).map_err(|_| CodecError::BadMagic)? != ETF2_MAGIC {
        return Err(CodecError::BadMagic);
    }
    let version = r.u8()?;
    if version != ETF2_VERSION {
        return Err(CodecError::UnsupportedVersion(version));
    }
    let label_code = r.u8()?;
    let label = Label::from_code(label_code).ok_or(CodecError::BadLabelCode(label_code))?;
    let record_count = r.u8()?;
    if !(1..=5).contains(&record_count) {
        return Err(CodecError::BadRecordCount(record_count));
    }
    let id_len = r.u8()? as usize;
    let event_id = String::from_utf8(r.take(id_len)?.to_vec())
        .map_err(|_| crate::types::ValidationError::BadEventId)?;

    let mut records = Vec::with_capacity(record_count as usize);
    for _ in 0..record_count {
        let code_raw = r.take(4)?;
        let station_code = String::from_utf8_lossy(code_raw).trim_end().to_string();
        let start_time = TimestampMs(r.i64_le()?);
        let rate = f64::from(r.f32_le()?);
        let channel_count = r.u8()?;
        if channel_count != 3 {
            return Err(CodecError::BadChannelCount(channel_count));
        }

        let mut channels = Vec::with_capacity(3);
        for _ in 0..3 {
            let n = r.u32_le()? as usize;
            // Validate the declared length against the buffer before
            // allocating anything proportional to it.
            let raw = r.take(2 * n)?;
            let samples = raw
                .chunks_exact(2)
                .map(|b| i32::from(i16::from_le_bytes([b[0], b[1]])))
                .collect();
            channels.push(Channel {
                samples,
                sample_rate_hz: rate,
            });
        }
        let channels: [Channel; 3] = channels.try_into().expect("exactly 3 channels read");
        records.push(StationRecord {
            station_code,
            start_time,
            channels,
        });
    }

    if r.remaining() != 0 {
        return Err(CodecError::TrailingBytes {
            extra: r.remaining(),
        });
    }

    let event = EventWaveformSet {
        event_id,
        label,
        records,
    };
    event.validate()?;
    Ok(event)
}
