//! Command-line arguments and the validated run configuration.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qresample::resampler::{DownsampleEngine, UpsampleVariant};
use qresample::Direction;
use serde::Serialize;

use crate::error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(name = "qresample", version, about = "Quantum frequency resampling of 1-D and 2-D signals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Downsample by discarding the top qubits of every axis.
    Down(ResampleArgs),
    /// Upsample by padding every axis.
    Up(ResampleArgs),
    /// Resample a shifted sinc through 9, 6 and 10 qubits.
    DemoSinc(DemoArgs),
    /// Tabulate classical/quantum cost ratios for downsampling.
    Advantage(AdvantageArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Shots,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Branch,
    Density,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Swap,
    Cnot,
}

#[derive(Debug, Args)]
pub struct ResampleArgs {
    /// Input signal (.csv for 1-D, .pgm for 2-D).
    #[arg(long)]
    pub input: PathBuf,
    /// Output signal; a `.meta.json` record is written next to it.
    #[arg(long)]
    pub output: PathBuf,
    /// Expected number of signal axes.
    #[arg(long)]
    pub dims: Option<usize>,
    /// Qubits discarded per axis (down).
    #[arg(long)]
    pub discard: Option<usize>,
    /// Padding qubits per axis (up).
    #[arg(long)]
    pub pad: Option<usize>,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    /// Number of shots in shots mode.
    #[arg(long)]
    pub shots: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Resample independent patches of this side.
    #[arg(long)]
    pub patch: Option<usize>,
    /// Number of levels L of a digital signal.
    #[arg(long)]
    pub bit_depth: Option<u32>,
    /// Sample until the mean squared error drops below this value.
    #[arg(long)]
    pub mse_target: Option<f64>,
    /// Input sampling rate in Hz, the same on every axis.
    #[arg(long)]
    pub rate: Option<f64>,
    #[arg(long, value_enum, default_value_t = Engine::Branch)]
    pub engine: Engine,
    #[arg(long, value_enum, default_value_t = Variant::Swap)]
    pub variant: Variant,
    /// Shots per batch when sampling towards --mse-target.
    #[arg(long, default_value_t = 4096)]
    pub batch: u64,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    /// Directory receiving the stage CSV files.
    #[arg(long)]
    pub output: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct AdvantageArgs {
    #[arg(long)]
    pub output: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub dims: usize,
    /// Bits per sample c (L = 2^c levels).
    #[arg(long, default_value_t = 1)]
    pub bits: u32,
    /// Target mean MSE; defaults to 1/L².
    #[arg(long)]
    pub mse_target: Option<f64>,
    #[arg(long, default_value_t = 2)]
    pub n0_min: usize,
    #[arg(long, default_value_t = 32)]
    pub n0_max: usize,
    #[arg(long, default_value_t = 1)]
    pub ntilde_min: usize,
    #[arg(long, default_value_t = 31)]
    pub ntilde_max: usize,
}

/// How output values are obtained from the final distribution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum Sampling {
    Exact,
    Shots { shots: u64, seed: u64 },
    Adaptive { mse_target: f64, batch: u64, seed: u64 },
}

/// A validated resampling run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub direction: Direction,
    pub input: PathBuf,
    pub output: PathBuf,
    pub dims: Option<usize>,
    pub amount: usize,
    pub sampling: Sampling,
    pub patch: Option<usize>,
    pub bit_depth: Option<u32>,
    pub rate: Option<f64>,
    pub engine: DownsampleEngine,
    pub variant: UpsampleVariant,
}

impl RunConfig {
    pub fn from_args(direction: Direction, args: &ResampleArgs) -> CliResult<Self> {
        let amount = match (direction, args.discard, args.pad) {
            (Direction::Down, Some(k), None) | (Direction::Up, None, Some(k)) => k,
            (Direction::Down, _, Some(_)) => return Err(CliError::config("--pad is not valid for down")),
            (Direction::Up, Some(_), _) => return Err(CliError::config("--discard is not valid for up")),
            (Direction::Down, None, None) => return Err(CliError::config("down requires --discard")),
            (Direction::Up, None, None) => return Err(CliError::config("up requires --pad")),
        };
        if amount == 0 {
            return Err(CliError::config("resampling amount must be positive"));
        }
        let sampling = match (args.mode, args.shots, args.mse_target) {
            (Mode::Exact, None, None) => Sampling::Exact,
            (Mode::Exact, _, _) => {
                return Err(CliError::config("--shots and --mse-target require --mode shots"))
            }
            (Mode::Shots, Some(_), Some(_)) => {
                return Err(CliError::config("give either --shots or --mse-target, not both"))
            }
            (Mode::Shots, Some(0), None) => return Err(CliError::config("--shots must be positive")),
            (Mode::Shots, Some(shots), None) => Sampling::Shots { shots, seed: args.seed },
            (Mode::Shots, None, Some(t)) if t > 0.0 && args.batch > 0 => {
                Sampling::Adaptive { mse_target: t, batch: args.batch, seed: args.seed }
            }
            (Mode::Shots, None, Some(_)) => {
                return Err(CliError::config("--mse-target and --batch must be positive"))
            }
            (Mode::Shots, None, None) => {
                return Err(CliError::config("--mode shots requires --shots or --mse-target"))
            }
        };
        if args.patch.is_some() && sampling != Sampling::Exact {
            return Err(CliError::config("--patch is only available in exact mode"));
        }
        if args.bit_depth.is_some_and(|l| l < 2) {
            return Err(CliError::config("--bit-depth needs at least two levels"));
        }
        if args.rate.is_some_and(|r| !(r.is_finite() && r > 0.0)) {
            return Err(CliError::config("--rate must be positive"));
        }
        if args.dims.is_some_and(|d| d == 0 || d > 2) {
            return Err(CliError::config("file formats hold one or two axes"));
        }
        Ok(Self {
            direction,
            input: args.input.clone(),
            output: args.output.clone(),
            dims: args.dims,
            amount,
            sampling,
            patch: args.patch,
            bit_depth: args.bit_depth,
            rate: args.rate,
            engine: match args.engine {
                Engine::Branch => DownsampleEngine::BranchSum,
                Engine::Density => DownsampleEngine::DensityMatrix,
            },
            variant: match args.variant {
                Variant::Swap => UpsampleVariant::SwapPadding,
                Variant::Cnot => UpsampleVariant::Cnot,
            },
        })
    }
}
