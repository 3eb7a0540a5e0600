//! Command implementations. Each run writes its outputs plus a JSON metadata
//! record with everything needed to repeat it.

use std::fs;
use std::path::{Path, PathBuf};

use num_rational::Ratio;
use qresample::analysis::{adaptive_sample, advantage_map, sample_shots, AdvantageMap};
use qresample::codec::{encode, reconstruct_from_shots};
use qresample::resampler::{downsample_with_engine, patch_resample, upsample, UpsampleVariant};
use qresample::{Direction, QuantumState, ResampleParams, ResampleResult, Shape, Signal};
use serde::Serialize;

use crate::config::{AdvantageArgs, RunConfig, Sampling};
use crate::error::{CliError, CliResult};
use crate::io::{read_signal, write_csv, write_signal};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunMetadata {
    pub command: String,
    pub input: String,
    pub output: String,
    pub dims: usize,
    pub input_qubits: usize,
    pub output_qubits: usize,
    pub amount: usize,
    /// Larger over smaller register size, as `num/den`.
    pub ratio: Option<String>,
    pub input_intensity: f64,
    pub output_intensity: f64,
    pub input_rates: Option<Vec<f64>>,
    pub output_rates: Option<Vec<f64>>,
    pub sampling: Sampling,
    pub shots_used: Option<u64>,
    pub mean_mse: Option<f64>,
    pub half_widths: Option<Vec<f64>>,
    pub patch: Option<usize>,
    pub bit_depth: Option<u32>,
    pub engine: Option<String>,
    pub variant: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub signal: Signal,
    pub metadata: RunMetadata,
}

/// `out.csv` → `out.csv.meta.json`.
pub fn metadata_path(output: &Path) -> PathBuf {
    let mut name = output.as_os_str().to_owned();
    name.push(".meta.json");
    PathBuf::from(name)
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::io(path, e))?;
    text.push('\n');
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn qubits(shape: Shape) -> usize {
    shape.dims * shape.qubits_per_axis()
}

fn ratio_text(a: usize, b: usize) -> Option<String> {
    let (hi, lo) = (a.max(b), a.min(b));
    (lo > 0).then(|| Ratio::new(hi, lo).to_string())
}

fn command_name(direction: Direction) -> &'static str {
    match direction {
        Direction::Down => "down",
        Direction::Up => "up",
    }
}

struct Sampled {
    signal: Signal,
    shots: Option<u64>,
    mse: Option<f64>,
    half_widths: Option<Vec<f64>>,
}

fn measure(result: &ResampleResult, sampling: Sampling, levels: Option<u32>) -> CliResult<Sampled> {
    let hist = match sampling {
        Sampling::Exact => {
            return Ok(Sampled { signal: result.decode()?, shots: None, mse: None, half_widths: None })
        }
        Sampling::Shots { shots, seed } => sample_shots(&result.distribution, shots, seed)?,
        Sampling::Adaptive { mse_target, batch, seed } => {
            adaptive_sample(&result.distribution, mse_target, result.output_intensity, batch, seed)?
        }
    };
    let rec = reconstruct_from_shots(&hist, result.output_intensity, levels)?;
    let mut signal = rec.signal;
    if let Some(rates) = &result.output_rates {
        signal = signal.with_rates(rates.clone())?;
    }
    Ok(Sampled {
        signal,
        shots: Some(hist.shots()),
        mse: Some(qresample::analysis::mean_mse(&hist, result.output_intensity)),
        half_widths: Some(rec.half_widths),
    })
}

/// Runs a `down` or `up` command.
pub fn cmd_resample(cfg: &RunConfig) -> CliResult<RunReport> {
    let (mut signal, format) = read_signal(&cfg.input, cfg.bit_depth)?;
    let dims = signal.shape().dims;
    if cfg.dims.is_some_and(|d| d != dims) {
        return Err(CliError::config(format!(
            "--dims {} does not match the {dims}-axis input",
            cfg.dims.unwrap_or_default()
        )));
    }
    if let Some(rate) = cfg.rate {
        signal = signal.with_rates(vec![rate; dims])?;
    }
    let levels = signal.bit_depth();
    let params = ResampleParams::new(cfg.amount)?;

    let (sampled, output_intensity) = match cfg.patch {
        Some(side) => {
            let out = patch_resample(&signal, side, cfg.direction, cfg.amount)?;
            let intensity = out.intensity();
            (Sampled { signal: out, shots: None, mse: None, half_widths: None }, intensity)
        }
        None => {
            let enc = encode(&signal)?;
            let result = match cfg.direction {
                Direction::Down => downsample_with_engine(&enc, params, cfg.engine)?,
                Direction::Up => upsample(&enc, params, cfg.variant)?.1,
            };
            (measure(&result, cfg.sampling, levels)?, result.output_intensity)
        }
    };

    write_signal(&cfg.output, format, &sampled.signal, levels)?;
    let (shape_in, shape_out) = (signal.shape(), sampled.signal.shape());
    let metadata = RunMetadata {
        command: command_name(cfg.direction).into(),
        input: cfg.input.display().to_string(),
        output: cfg.output.display().to_string(),
        dims,
        input_qubits: qubits(shape_in),
        output_qubits: qubits(shape_out),
        amount: cfg.amount,
        ratio: ratio_text(qubits(shape_in), qubits(shape_out)),
        input_intensity: signal.intensity(),
        output_intensity,
        input_rates: signal.rates().map(<[f64]>::to_vec),
        output_rates: sampled.signal.rates().map(<[f64]>::to_vec),
        sampling: cfg.sampling,
        shots_used: sampled.shots,
        mean_mse: sampled.mse,
        half_widths: sampled.half_widths,
        patch: cfg.patch,
        bit_depth: levels,
        engine: (cfg.direction == Direction::Down && cfg.patch.is_none())
            .then(|| format!("{:?}", cfg.engine)),
        variant: (cfg.direction == Direction::Up && cfg.patch.is_none())
            .then(|| format!("{:?}", cfg.variant)),
    };
    write_json(&metadata_path(&cfg.output), &metadata)?;
    Ok(RunReport { signal: sampled.signal, metadata })
}

/// Sampling rate of the generated sinc in Hz.
pub const SINC_RATE: f64 = 256.0;
/// Number of generated samples: two seconds at [`SINC_RATE`].
pub const SINC_SAMPLES: usize = 512;
/// Amplitude levels of the quantized sinc.
pub const SINC_LEVELS: u32 = 256;
pub const DEMO_DISCARD: usize = 3;
pub const DEMO_PAD: usize = 4;

/// `sin(πx) / (πx)`, one at zero.
pub fn sinc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        let px = std::f64::consts::PI * x;
        px.sin() / px
    }
}

/// `sinc(8 (t - 1)) + 1` sampled at 256 Hz on `[0, 2)` and quantized to 256
/// levels over `[0, 2]`.
pub fn sinc_signal() -> CliResult<Signal> {
    let top = f64::from(SINC_LEVELS - 1);
    let values = (0..SINC_SAMPLES)
        .map(|i| {
            let t = i as f64 / SINC_RATE;
            let v = sinc(8.0 * (t - 1.0)) + 1.0;
            (top * v / 2.0).round().clamp(0.0, top)
        })
        .collect();
    Ok(Signal::from_samples(values)?
        .with_bit_depth(SINC_LEVELS)?
        .with_rates(vec![SINC_RATE])?)
}

/// Shots used for an output register of `qubits` qubits.
pub fn demo_shots(qubits: usize) -> u64 {
    (u64::from(SINC_LEVELS) * u64::from(SINC_LEVELS)) << qubits
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DemoStage {
    pub qubits: usize,
    pub rate: f64,
    pub shots: u64,
    pub seed: u64,
    pub output_intensity: f64,
    #[serde(skip)]
    pub exact: Signal,
    #[serde(skip)]
    pub sampled: Signal,
    pub half_widths: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DemoReport {
    pub input_qubits: usize,
    pub input_rate: f64,
    #[serde(skip)]
    pub input: Signal,
    pub down: DemoStage,
    pub up: DemoStage,
}

fn demo_stage(result: &ResampleResult, seed: u64) -> CliResult<DemoStage> {
    let qubits = result.output_layout.total_qubits();
    let shots = demo_shots(qubits);
    let hist = sample_shots(&result.distribution, shots, seed)?;
    let rec = reconstruct_from_shots(&hist, result.output_intensity, None)?;
    Ok(DemoStage {
        qubits,
        rate: result.output_rates.as_ref().map_or(0.0, |r| r[0]),
        shots,
        seed,
        output_intensity: result.output_intensity,
        exact: result.decode()?,
        sampled: rec.signal,
        half_widths: rec.half_widths,
    })
}

/// Downsamples the sinc by three qubits, re-encodes the exact result and
/// upsamples it by four, sampling each stage with `256² · 2^n` shots.
pub fn cmd_demo_sinc(out_dir: &Path, seed: u64) -> CliResult<DemoReport> {
    let input = sinc_signal()?;
    let enc = encode(&input)?;
    let down = downsample_with_engine(&enc, ResampleParams::new(DEMO_DISCARD)?, Default::default())?;
    let down_stage = demo_stage(&down, seed)?;
    let mid = encode(&down_stage.exact)?;
    let (_, up) = upsample(&mid, ResampleParams::new(DEMO_PAD)?, UpsampleVariant::default())?;
    let up_stage = demo_stage(&up, seed.wrapping_add(1))?;

    fs::create_dir_all(out_dir).map_err(|e| CliError::io(out_dir, e))?;
    write_csv(&out_dir.join("sinc_input.csv"), input.values())?;
    write_csv(&out_dir.join("sinc_down_exact.csv"), down_stage.exact.values())?;
    write_csv(&out_dir.join("sinc_down_shots.csv"), down_stage.sampled.values())?;
    write_csv(&out_dir.join("sinc_up_exact.csv"), up_stage.exact.values())?;
    write_csv(&out_dir.join("sinc_up_shots.csv"), up_stage.sampled.values())?;
    let report = DemoReport {
        input_qubits: enc.state.layout().total_qubits(),
        input_rate: SINC_RATE,
        input,
        down: down_stage,
        up: up_stage,
    };
    write_json(&out_dir.join("sinc.meta.json"), &report)?;
    Ok(report)
}

pub fn cmd_advantage(args: &AdvantageArgs) -> CliResult<AdvantageMap> {
    if args.n0_min > args.n0_max || args.ntilde_min > args.ntilde_max {
        return Err(CliError::config("empty advantage grid"));
    }
    if args.bits == 0 || args.bits > 32 {
        return Err(CliError::config("--bits must lie in [1, 32]"));
    }
    let mse = args.mse_target.unwrap_or_else(|| (-2.0 * f64::from(args.bits)).exp2());
    let map = advantage_map(
        args.dims,
        args.bits,
        mse,
        args.n0_min..=args.n0_max,
        args.ntilde_min..=args.ntilde_max,
    )
    .map_err(|e| CliError::config(e.to_string()))?;
    fs::write(&args.output, map.to_csv()).map_err(|e| CliError::io(&args.output, e))?;
    Ok(map)
}
