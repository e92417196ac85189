//! Readers and writers for the on-disk waveform formats.
//!
//! Three formats live here, all documented byte-for-byte in
//! `docs/format.md` at the repository root:
//!
//! * the `ETF2` binary event container (2-byte little-endian samples),
//! * a line-oriented ASCII form of the same data,
//! * a minimal SEED-like export (uncompressed 4-byte big-endian samples,
//!   4096-byte-aligned records).
//!
//! All functions are pure; decoding never reads past the supplied buffer
//! and returns a typed error for every malformed input.

mod ascii;
mod estf2;
mod seedlike;
#[cfg(test)]
pub(crate) mod testutil;

pub use ascii::{export_ascii, import_ascii};
pub use estf2::{decode_estf2, encode_estf2, ETF2_MAGIC, ETF2_VERSION};
pub use seedlike::{export_seedlike, SEEDLIKE_HEADER_LEN, SEEDLIKE_RECORD_ALIGN};

use thiserror::Error;

use crate::types::ValidationError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CodecError {
    /// Input does not start with the container magic bytes.
    #[error("not an ETF2 container (bad magic)")]
    BadMagic,
    #[error("unsupported container version {0}")]
    UnsupportedVersion(u8),
    /// A declared length exceeds the remaining buffer.
    #[error("truncated input: need {need} more bytes, have {have}")]
    Truncated { need: usize, have: usize },
    #[error("{extra} unexpected trailing bytes after event payload")]
    TrailingBytes { extra: usize },
    #[error("label byte {0} outside the defined code table 0..4")]
    BadLabelCode(u8),
    #[error("record count byte {0} outside 1..=5")]
    BadRecordCount(u8),
    #[error("channel count {0} != 3")]
    BadChannelCount(u8),
    #[error("sample {value} does not fit in 2 bytes (allowed {min}..={max})", min = i16::MIN, max = i16::MAX)]
    SampleOverflow { value: i32 },
    /// The 4-byte rate field cannot represent this rate exactly, which
    /// would break the decode(encode(x)) == x guarantee.
    #[error("sample rate {0} is not exactly representable as IEEE-754 single precision")]
    RatePrecision(f64),
    #[error("sample count {0} exceeds the SEED-like record limit of 2^31")]
    SampleCountOverflow(usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: sample row does not have exactly 3 columns")]
    RaggedColumns { line: usize },
    #[error("decoded event violates an invariant: {0}")]
    Invalid(#[from] ValidationError),
}

/// Bounds-checked cursor over an input buffer. Every read is validated
/// against the remaining length, so mutated or truncated buffers produce
/// [`CodecError::Truncated`] instead of out-of-range access.
pub(crate) struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    pub(crate) fn new(buf: &'a [u8]) -> Reader<'a> {
        Reader { buf, pos: 0 }
    }

    pub(crate) fn remaining(&self) -> usize {
        self.buf.len() - self.pos
    }

    pub(crate) fn take(&mut self, n: usize) -> Result<&'a [u8], CodecError> {
        if self.remaining() < n {
            return Err(CodecError::Truncated {
                need: n - self.remaining(),
                have: self.remaining(),
            });
        }
        let out = &self.buf[self.pos..self.pos + n];
        self.pos += n;
        Ok(out)
    }

    pub(crate) fn u8(&mut self) -> Result<u8, CodecError> {
        Ok(self.take(1)?[0])
    }

    pub(crate) fn u32_le(&mut self) -> Result<u32, CodecError> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    pub(crate) fn i64_le(&mut self) -> Result<i64, CodecError> {
        Ok(i64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    pub(crate) fn f32_le(&mut self) -> Result<f32, CodecError> {
        Ok(f32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }
}
