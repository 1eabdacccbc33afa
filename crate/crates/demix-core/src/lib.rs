//! Core numerics for magnitude-spectrogram source separation.
//!
//! Everything in this crate is pure computation over in-memory buffers:
//! dense tensors and the convolution/activation primitives built on them,
//! declarative network architectures with hand-derived forward/backward
//! passes, the Adam training loop with a plateau learning-rate schedule,
//! spectrogram segmentation, and the evaluation stack (BSS energy-ratio
//! metrics, Wilcoxon signed-rank, Bonferroni).
//!
//! The crate is `no_std` (alloc required). File formats, WAV and STFT I/O,
//! and the command-line front end live in the companion `demix` crate.
//!
//! Precision is a global run choice: every routine is generic over
//! [`Scalar`], instantiated with `f64` for test/oracle work and `f32` for
//! production runs. The two are never mixed within one run.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arch;
pub mod bss;
pub mod gradcheck;
pub mod model;
pub mod ops;
pub mod scalar;
pub mod segment;
pub mod stats;
pub mod tensor;
pub mod train;

pub use arch::{
    builtin_specs, count_parameters, Activation, ConvNetworkSpec, FilterSetSpec, LayerSpec,
    MlpSpec, NetworkSpec,
};
pub use bss::{bss_eval, BssConfig, EvalResult};
pub use model::{init_model, Model, ModelGradients, ModelParams};
pub use scalar::{Precision, Scalar};
pub use segment::{desegment, segment, SegmentBatch};
pub use stats::{bonferroni, wilcoxon_signed_rank};
pub use tensor::{ShapeError, Tensor};
pub use train::{
    adam_step, mse_cost, plateau_update, train, AdamState, EpochRecord, TrainConfig, TrainError,
    TrainHistory, TrainObserver,
};
