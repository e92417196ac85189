//! Shared domain types: channels, station records and labeled events.

use chrono::{DateTime, SecondsFormat, TimeZone, Utc};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Raw sample full-scale bound: amplitudes are stored as 2-byte signed
/// integers in the binary container.
pub const I16_MIN: i32 = i16::MIN as i32;
/// See [`I16_MIN`].
pub const I16_MAX: i32 = i16::MAX as i32;

/// Component order within a station record. Fixed so that downstream
/// feature matrices have a deterministic column order.
pub const COMPONENTS: [char; 3] = ['Z', 'N', 'E'];

/// Structural violations of the domain-type invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("channel {component} has no samples")]
    EmptyChannel { component: usize },
    #[error("sample rate must be positive, got {0}")]
    BadSampleRate(f64),
    #[error("channels within one record differ in sample rate")]
    MixedSampleRates,
    #[error("channels within one record differ in length")]
    RaggedChannels,
    #[error("station code {0:?} is not 3-4 ASCII uppercase alphanumeric characters")]
    BadStationCode(String),
    #[error("event id must be non-empty ASCII without whitespace")]
    BadEventId,
    #[error("event must contain 1 to 5 station records, got {0}")]
    BadRecordCount(usize),
    #[error("duplicate station code {0} within one event")]
    DuplicateStation(String),
}

/// Event class, stored as a single byte in the binary container.
///
/// The byte codes are a total mapping: 0 Tectonic, 1 MiningInduced,
/// 2 QuarryBlast, 3 Other, 4 Unlabeled. No other byte is accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    Tectonic,
    MiningInduced,
    QuarryBlast,
    Other,
    Unlabeled,
}

impl Label {
    pub const ALL: [Label; 5] = [
        Label::Tectonic,
        Label::MiningInduced,
        Label::QuarryBlast,
        Label::Other,
        Label::Unlabeled,
    ];

    pub fn code(self) -> u8 {
        match self {
            Label::Tectonic => 0,
            Label::MiningInduced => 1,
            Label::QuarryBlast => 2,
            Label::Other => 3,
            Label::Unlabeled => 4,
        }
    }

    pub fn from_code(code: u8) -> Option<Label> {
        Label::ALL.get(code as usize).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            Label::Tectonic => "Tectonic",
            Label::MiningInduced => "MiningInduced",
            Label::QuarryBlast => "QuarryBlast",
            Label::Other => "Other",
            Label::Unlabeled => "Unlabeled",
        }
    }

    pub fn from_name(name: &str) -> Option<Label> {
        Label::ALL.iter().copied().find(|l| l.name() == name)
    }
}

/// UTC timestamp with 1 ms resolution, stored as milliseconds since the
/// Unix epoch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TimestampMs(pub i64);

impl TimestampMs {
    /// Canonical text form: RFC 3339 with millisecond precision, UTC.
    pub fn to_rfc3339(self) -> String {
        match Utc.timestamp_millis_opt(self.0).single() {
            Some(dt) => dt.to_rfc3339_opts(SecondsFormat::Millis, true),
            None => format!("epoch-ms:{}", self.0),
        }
    }

    pub fn parse_rfc3339(text: &str) -> Option<TimestampMs> {
        DateTime::parse_from_rfc3339(text)
            .ok()
            .map(|dt| TimestampMs(dt.with_timezone(&Utc).timestamp_millis()))
    }
}

/// One component's sample vector: signed integer counts at a fixed rate.
///
/// Counts decoded from the 2-byte container always fit in i16; the wider
/// i32 representation leaves headroom for imported data, which is range
/// checked again at encode time.
#[derive(Debug, Clone, PartialEq)]
pub struct Channel {
    pub samples: Vec<i32>,
    pub sample_rate_hz: f64,
}

impl Channel {
    pub fn new(samples: Vec<i32>, sample_rate_hz: f64) -> Result<Channel, ValidationError> {
        let ch = Channel {
            samples,
            sample_rate_hz,
        };
        ch.validate(0)?;
        Ok(ch)
    }

    pub fn validate(&self, component: usize) -> Result<(), ValidationError> {
        if self.samples.is_empty() {
            return Err(ValidationError::EmptyChannel { component });
        }
        if !(self.sample_rate_hz > 0.0) || !self.sample_rate_hz.is_finite() {
            return Err(ValidationError::BadSampleRate(self.sample_rate_hz));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

fn station_code_ok(code: &str) -> bool {
    (3..=4).contains(&code.len())
        && code
            .bytes()
            .all(|b| b.is_ascii_uppercase() || b.is_ascii_digit())
}

/// One station's triggered record: exactly three channels in Z, N, E order
/// sharing a start time and sample rate.
#[derive(Debug, Clone, PartialEq)]
pub struct StationRecord {
    pub station_code: String,
    pub start_time: TimestampMs,
    pub channels: [Channel; 3],
}

impl StationRecord {
    pub fn new(
        station_code: String,
        start_time: TimestampMs,
        channels: [Channel; 3],
    ) -> Result<StationRecord, ValidationError> {
        let rec = StationRecord {
            station_code,
            start_time,
            channels,
        };
        rec.validate()?;
        Ok(rec)
    }

    pub fn validate(&self) -> Result<(), ValidationError> {
        if !station_code_ok(&self.station_code) {
            return Err(ValidationError::BadStationCode(self.station_code.clone()));
        }
        for (i, ch) in self.channels.iter().enumerate() {
            ch.validate(i)?;
        }
        let rate = self.channels[0].sample_rate_hz;
        if self.channels.iter().any(|c| c.sample_rate_hz != rate) {
            return Err(ValidationError::MixedSampleRates);
        }
        let len = self.channels[0].len();
        if self.channels.iter().any(|c| c.len() != len) {
            return Err(ValidationError::RaggedChannels);
        }
        Ok(())
    }

    pub fn sample_rate_hz(&self) -> f64 {
        self.channels[0].sample_rate_hz
    }

    /// Number of samples per channel.
    pub fn num_samples(&self) -> usize {
        self.channels[0].len()
    }
}

/// One catalog event: a label plus up to five station records.
#[derive(Debug, Clone, PartialEq)]
pub struct EventWaveformSet {
    pub event_id: String,
    pub label: Label,
    pub records: Vec<StationRecord>,
}

impl EventWaveformSet {
    pub fn new(
        event_id: String,
        label: Label,
        records: Vec<StationRecord>,
    ) -> Result<EventWaveformSet, ValidationError> {
        let ev = EventWaveformSet {
            event_id,
            label,
            records,
        };
        ev.validate()?;
        Ok(ev)
    }

    pub fn validate(&self) -> Result<(), ValidationError> {
        if self.event_id.is_empty()
            || !self.event_id.is_ascii()
            || self.event_id.bytes().any(|b| b.is_ascii_whitespace())
            || self.event_id.len() > 255
        {
            return Err(ValidationError::BadEventId);
        }
        if self.records.is_empty() || self.records.len() > 5 {
            return Err(ValidationError::BadRecordCount(self.records.len()));
        }
        for rec in &self.records {
            rec.validate()?;
        }
        for (i, rec) in self.records.iter().enumerate() {
            if self.records[..i]
                .iter()
                .any(|r| r.station_code == rec.station_code)
            {
                return Err(ValidationError::DuplicateStation(rec.station_code.clone()));
            }
        }
        Ok(())
    }
}

/// A monitoring station: code and coordinates.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Station {
    pub code: &'static str,
    pub name: &'static str,
    pub lon: f64,
    pub lat: f64,
    pub elevation_m: f64,
}

/// The five stations of the historical SPF network; default station table
/// for synthetic data and optional import validation.
pub const DEFAULT_STATIONS: [Station; 5] = [
    Station {
        code: "TRO",
        name: "Trojanovice",
        lon: 18.174,
        lat: 49.523,
        elevation_m: 435.0,
    },
    Station {
        code: "PST",
        name: "Pstruzi",
        lon: 18.326,
        lat: 49.575,
        elevation_m: 461.0,
    },
    Station {
        code: "PAL",
        name: "Palkovicke Hurky",
        lon: 18.273,
        lat: 49.640,
        elevation_m: 517.0,
    },
    Station {
        code: "CEL",
        name: "Celadna",
        lon: 18.333,
        lat: 49.520,
        elevation_m: 454.0,
    },
    Station {
        code: "VYS",
        name: "Vysni Lhoty",
        lon: 18.476,
        lat: 49.637,
        elevation_m: 456.0,
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    fn chan(n: usize) -> Channel {
        Channel::new(vec![1; n], 125.0).unwrap()
    }

    #[test]
    fn label_codes_are_total() {
        for label in Label::ALL {
            assert_eq!(Label::from_code(label.code()), Some(label));
            assert_eq!(Label::from_name(label.name()), Some(label));
        }
        for code in 5..=255u8 {
            assert_eq!(Label::from_code(code), None);
        }
    }

    #[test]
    fn timestamp_round_trips_canonical_text() {
        let t = TimestampMs(795_413_553_125);
        let text = t.to_rfc3339();
        assert!(text.ends_with('Z'));
        assert_eq!(TimestampMs::parse_rfc3339(&text), Some(t));
    }

    #[test]
    fn record_rejects_ragged_channels() {
        let err = StationRecord::new(
            "TRO".into(),
            TimestampMs(0),
            [chan(4), chan(4), chan(3)],
        )
        .unwrap_err();
        assert_eq!(err, ValidationError::RaggedChannels);
    }

    #[test]
    fn record_rejects_bad_station_code() {
        for code in ["ab", "TOOLONG", "tr0", ""] {
            let err = StationRecord::new(
                code.into(),
                TimestampMs(0),
                [chan(2), chan(2), chan(2)],
            )
            .unwrap_err();
            assert!(matches!(err, ValidationError::BadStationCode(_)), "{code}");
        }
    }

    #[test]
    fn event_rejects_duplicate_station_and_bad_record_count() {
        let rec = StationRecord::new("TRO".into(), TimestampMs(0), [chan(2), chan(2), chan(2)])
            .unwrap();
        let err = EventWaveformSet::new("ev1".into(), Label::Tectonic, vec![rec.clone(), rec])
            .unwrap_err();
        assert_eq!(err, ValidationError::DuplicateStation("TRO".into()));

        let err = EventWaveformSet::new("ev1".into(), Label::Tectonic, vec![]).unwrap_err();
        assert_eq!(err, ValidationError::BadRecordCount(0));
    }

    #[test]
    fn empty_channel_is_rejected() {
        assert!(matches!(
            Channel::new(vec![], 125.0),
            Err(ValidationError::EmptyChannel { .. })
        ));
        assert!(matches!(
            Channel::new(vec![1], 0.0),
            Err(ValidationError::BadSampleRate(_))
        ));
    }
}
