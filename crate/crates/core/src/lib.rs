//! Core algorithms for generic event boundary detection on timestamp
//! sequences.
//!
//! The crate is organised around a file-free, allocation-only pipeline:
//!
//! ```text
//! annotations ──► sampling ──► labeling ──► tempnet training ──► head scores
//!                                                                    │
//!                              eval ◄── watershed ◄── cascade fusion ┘
//! ```
//!
//! - [`types`]: domain types (video metadata, boundary lists, score
//!   sequences, cascade configuration) with validated constructors.
//! - [`sampling`]: FPS-adaptive frame stride and candidate windows.
//! - [`labeling`]: relative-distance labels for a ladder of ground-truth
//!   thresholds.
//! - [`cascade`]: training-mask selection, head averaging, and cross-model
//!   ensembling.
//! - [`watershed`]: probability runs to discrete boundary timestamps.
//! - [`eval`]: multi-annotator precision/recall/F1 with an exact
//!   maximum-matching core.
//! - [`tempnet`]: a small dilated-convolution + attention network with
//!   hand-derived gradients, an STFT front-end, and a seeded toy trainer.
//!
//! All functions are pure and deterministic; reductions run in a fixed
//! order so repeated runs are bit-identical. The crate is `no_std`
//! compatible (enable the `libm` feature and disable `std`).

#![cfg_attr(not(feature = "std"), no_std)]
#![warn(missing_docs)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("castanet-core requires either the `std` or the `libm` feature");

pub mod cascade;
mod error;
pub mod eval;
pub mod labeling;
pub(crate) mod math;
pub mod sampling;
pub mod tempnet;
pub mod types;
pub mod watershed;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
