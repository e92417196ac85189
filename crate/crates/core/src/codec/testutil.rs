//! Seeded random event construction shared by the codec tests.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::types::{Channel, EventWaveformSet, Label, StationRecord, TimestampMs};

pub(crate) fn random_event(rng: &mut ChaCha8Rng) -> EventWaveformSet {
    let stations = ["TRO", "PST", "PAL", "CEL", "VYS"];
    let n_records = rng.gen_range(1..=5usize);
    let rate = [125.0, 100.0, 62.5, 250.0][rng.gen_range(0..4)];
    let records = (0..n_records)
        .map(|i| {
            let n = rng.gen_range(1..=64usize);
            let mut mk = |rng: &mut ChaCha8Rng| Channel {
                samples: (0..n).map(|_| rng.gen_range(-32768..=32767)).collect(),
                sample_rate_hz: rate,
            };
            StationRecord {
                station_code: stations[i].to_string(),
                start_time: TimestampMs(rng.gen_range(0..2_000_000_000_000i64)),
                channels: [mk(rng), mk(rng), mk(rng)],
            }
        })
        .collect();
    EventWaveformSet {
        event_id: format!("ev-{}", rng.gen::<u32>()),
        label: Label::from_code(rng.gen_range(0..5)).unwrap(),
        records,
    }
}
