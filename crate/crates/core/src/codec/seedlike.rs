//! Minimal SEED-like export: one record per channel, uncompressed.
//!
//! Each record is padded to a multiple of 4096 bytes and carries a fixed
//! 48-byte header followed by 4-byte big-endian integer samples:
//!
//! ```text
//! 0..6    sequence number, 6 ASCII digits starting at 000001
//! 6       quality indicator 'D'
//! 7       reserved ' '
//! 8..13   station code, 5 bytes, right-padded with spaces
//! 13..16  channel id: SHZ / SHN / SHE
//! 16..24  start time, ms since Unix epoch, i64 big-endian
//! 24..28  sample count, u32 big-endian
//! 28..32  sample rate Hz, f32 big-endian
//! 32..48  reserved, zero
//! 48..    samples, i32 big-endian, then zero padding
//! ```
//!
//! This is deliberately not miniSEED: no blockettes, no Steim compression.

use super::CodecError;
use crate::types::EventWaveformSet;

pub const SEEDLIKE_RECORD_ALIGN: usize = 4096;
pub const SEEDLIKE_HEADER_LEN: usize = 48;

const CHANNEL_IDS: [&[u8; 3]; 3] = [b"SHZ", b"SHN", b"SHE"];

/// Serializes every channel of every station record into the SEED-like
/// byte stream described above.
pub fn export_seedlike(event: &EventWaveformSet) -> Result<Vec<u8>, CodecError> {
    event.validate()?;

    let mut out = Vec::new();
    let mut sequence = 1u32;
    for rec in &event.records {
        for (ci, ch) in rec.channels.iter().enumerate() {
            if ch.len() > (1usize << 31) {
                return Err(CodecError::SampleCountOverflow(ch.len()));
            }
            let payload = SEEDLIKE_HEADER_LEN + 4 * ch.len();
            let record_len = payload.div_ceil(SEEDLIKE_RECORD_ALIGN) * SEEDLIKE_RECORD_ALIGN;
            let base = out.len();
            out.resize(base + record_len, 0);

            let header = &mut out[base..base + SEEDLIKE_HEADER_LEN];
            header[..6].copy_from_slice(format!("{sequence:06}").as_bytes());
            header[6] = b'D';
            header[7] = b' ';
            let mut station = [b' '; 5];
            station[..rec.station_code.len()].copy_from_slice(rec.station_code.as_bytes());
            header[8..13].copy_from_slice(&station);
            header[13..16].copy_from_slice(CHANNEL_IDS[ci]);
            header[16..24].copy_from_slice(&rec.start_time.0.to_be_bytes());
            header[24..28].copy_from_slice(&(ch.len() as u32).to_be_bytes());
            header[28..32].copy_from_slice(&(rec.sample_rate_hz() as f32).to_be_bytes());

            for (i, &s) in ch.samples.iter().enumerate() {
                let at = base + SEEDLIKE_HEADER_LEN + 4 * i;
                out[at..at + 4].copy_from_slice(&s.to_be_bytes());
            }
            sequence += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{Channel, EventWaveformSet, Label, StationRecord, TimestampMs};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn event_with(samples: Vec<i32>) -> EventWaveformSet {
        let ch = || Channel::new(samples.clone(), 125.0).unwrap();
        EventWaveformSet::new(
            "ev-1".into(),
            Label::MiningInduced,
            vec![StationRecord::new(
                "TRO".into(),
                TimestampMs(795_413_553_125),
                [ch(), ch(), ch()],
            )
            .unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn four_sample_channel_header_and_payload() {
        let bytes = export_seedlike(&event_with(vec![1, -2, 300, -40000])).unwrap();
        assert_eq!(bytes.len(), 3 * SEEDLIKE_RECORD_ALIGN);

        let rec = &bytes[..SEEDLIKE_RECORD_ALIGN];
        assert_eq!(&rec[..6], b"000001");
        assert_eq!(rec[6], b'D');
        assert_eq!(&rec[8..13], b"TRO  ");
        assert_eq!(&rec[13..16], b"SHZ");
        assert_eq!(
            u32::from_be_bytes(rec[24..28].try_into().unwrap()),
            4,
            "header sample-count field"
        );
        // 16 payload bytes, big-endian.
        let vals: Vec<i32> = rec[48..64]
            .chunks_exact(4)
            .map(|b| i32::from_be_bytes(b.try_into().unwrap()))
            .collect();
        assert_eq!(vals, vec![1, -2, 300, -40000]);
        // Remainder of the record is zero padding.
        assert!(rec[64..].iter().all(|&b| b == 0));
        // Second record carries the N component and the next sequence number.
        let rec2 = &bytes[SEEDLIKE_RECORD_ALIGN..2 * SEEDLIKE_RECORD_ALIGN];
        assert_eq!(&rec2[..6], b"000002");
        assert_eq!(&rec2[13..16], b"SHN");
    }

    /// Independent minimal reader: parses the documented layout directly,
    /// without touching the writer's code paths.
    fn naive_read_all(bytes: &[u8]) -> Vec<(String, String, i64, f32, Vec<i32>)> {
        let mut out = Vec::new();
        let mut pos = 0;
        while pos < bytes.len() {
            let station = String::from_utf8(bytes[pos + 8..pos + 13].to_vec())
                .unwrap()
                .trim_end()
                .to_string();
            let chan = String::from_utf8(bytes[pos + 13..pos + 16].to_vec()).unwrap();
            let time = i64::from_be_bytes(bytes[pos + 16..pos + 24].try_into().unwrap());
            let count =
                u32::from_be_bytes(bytes[pos + 24..pos + 28].try_into().unwrap()) as usize;
            let rate = f32::from_be_bytes(bytes[pos + 28..pos + 32].try_into().unwrap());
            let samples = (0..count)
                .map(|i| {
                    let at = pos + 48 + 4 * i;
                    i32::from_be_bytes(bytes[at..at + 4].try_into().unwrap())
                })
                .collect();
            out.push((station, chan, time, rate, samples));
            let payload = 48 + 4 * count;
            pos += payload.div_ceil(4096) * 4096;
        }
        out
    }

    #[test]
    fn independent_reader_recovers_identical_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let event = crate::codec::testutil::random_event(&mut rng);
            let bytes = export_seedlike(&event).unwrap();
            let parsed = naive_read_all(&bytes);
            let mut k = 0;
            for rec in &event.records {
                for (ci, ch) in rec.channels.iter().enumerate() {
                    let (station, chan, time, rate, samples) = &parsed[k];
                    assert_eq!(station, &rec.station_code);
                    assert_eq!(chan, ["SHZ", "SHN", "SHE"][ci]);
                    assert_eq!(*time, rec.start_time.0);
                    assert_eq!(*rate, rec.sample_rate_hz() as f32);
                    assert_eq!(samples, &ch.samples);
                    k += 1;
                }
            }
            assert_eq!(k, parsed.len());
        }
    }

    #[test]
    fn long_channel_spans_multiple_aligned_blocks() {
        let bytes = export_seedlike(&event_with((0..2000).collect())).unwrap();
        // 48 + 8000 bytes -> 8192 per channel record.
        assert_eq!(bytes.len(), 3 * 8192);
        let parsed = naive_read_all(&bytes);
        assert_eq!(parsed.len(), 3);
        assert_eq!(parsed[0].4.len(), 2000);
    }
}
