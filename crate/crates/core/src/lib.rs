//! Desk-scale toolkit for discriminating tectonic from mining-induced
//! seismic events in triggered 3-component waveform records.
//!
//! The crate is organized as a linear pipeline:
//!
//! * [`codec`] — bit-exact binary container for triggered events, ASCII
//!   import/export and a minimal SEED-like export.
//! * [`qc`] — amplitude-domain corruption heuristics and event marking.
//! * [`preprocess`] — trimming, per-channel z-score and FFT magnitude
//!   spectra producing fixed-shape feature sequences.
//! * [`trigger`] — STA/LTA detector for slicing continuous streams into
//!   triggered event windows.
//! * [`neural`] — from-scratch LSTM and LSTM-FCN classifiers with exact
//!   backpropagation, cross-entropy loss and AdamW.
//! * [`boosting`] — histogram-based gradient-boosted trees with logistic
//!   loss, class weighting and AUC early stopping.
//! * [`eval`] — dataset splitting, the multi-attempt training protocol,
//!   metrics, preprocessing comparisons and synthetic data generation.

pub mod boosting;
pub mod codec;
pub mod eval;
pub mod neural;
pub mod preprocess;
pub mod qc;
pub mod trigger;
pub mod types;

pub use types::{Channel, EventWaveformSet, Label, StationRecord, TimestampMs};
