//! Quantum frequency resampling.
//!
//! Classical signals are amplitude-encoded into a simulated multi-qubit
//! register, one subregister per signal axis. Downsampling moves the register
//! into the frequency domain with a Hadamard layer and a multidimensional QFT,
//! traces out the most significant qubits of every subregister and transforms
//! back. Upsampling inserts fresh padding qubits at the same place instead.
//!
//! The crate is organised bottom-up:
//!
//! - [`register`]: register layouts and little-endian index arithmetic.
//! - [`sim`]: dense statevector and density-matrix simulation.
//! - [`codec`]: amplitude encoding of [`Signal`]s and their reconstruction.
//! - [`resampler`]: the downsampling and upsampling pipelines.
//! - [`oracles`]: classical block averaging and nearest-neighbour replication.
//! - [`analysis`]: shot sampling, error statistics and cost models.

pub mod analysis;
pub mod codec;
pub mod error;
pub mod oracles;
pub mod register;
pub mod resampler;
pub mod sim;

pub use analysis::ShotHistogram;
pub use codec::{Encoded, Shape, Signal};
pub use error::{Error, Result};
pub use register::{IndexTuple, QubitId, RegisterLayout};
pub use resampler::{Direction, ResampleParams, ResampleResult};
pub use sim::{Distribution, MixedState, PureState, QuantumState};
