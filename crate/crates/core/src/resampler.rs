//! Frequency-domain downsampling and upsampling pipelines.
//!
//! Downsampling applies `H`, the forward MD-QFT, traces out the top `ñ`
//! qubits of every axis, then applies the inverse MD-QFT and `H` on what is
//! left. Upsampling inserts `ñ` padding qubits per axis at the top of each
//! subregister between the same two stages.

use num_complex::Complex64;
use num_rational::Ratio;
use rayon::prelude::*;

use crate::codec::{decode_exact, encode, Encoded, Shape, Signal};
use crate::error::{Error, Result};
use crate::register::{QubitId, RegisterLayout};
use crate::sim::split::TopSplit;
use crate::sim::{
    permutation_swaps, qft_circuit, Distribution, Gate, PadQubit, PureState, QuantumState,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Down,
    Up,
}

/// Number of qubits `ñ` removed from or added to every axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ResampleParams {
    amount: usize,
}

impl ResampleParams {
    pub fn new(amount: usize) -> Result<Self> {
        if amount == 0 {
            return Err(Error::arg("resampling needs at least one qubit per axis"));
        }
        Ok(Self { amount })
    }

    pub fn amount(&self) -> usize {
        self.amount
    }

    /// Per-axis factor `2^ñ`.
    pub fn factor(&self) -> usize {
        1 << self.amount
    }

    /// Layout after resampling `layout` in `direction`.
    pub fn output_layout(&self, layout: &RegisterLayout, direction: Direction) -> Result<RegisterLayout> {
        let n0 = layout.qubits_per_axis();
        match direction {
            Direction::Down => {
                if self.amount >= n0 {
                    return Err(Error::arg(format!(
                        "cannot discard {} of {n0} qubits per axis",
                        self.amount
                    )));
                }
                layout.resized(n0 - self.amount)
            }
            Direction::Up => layout.resized(n0 + self.amount),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum UpsampleVariant {
    /// Padding register parked above the signal and moved into place with
    /// SWAP gates.
    #[default]
    SwapPadding,
    /// Padding inserted in place, fanned out by C-NOTs controlled on each
    /// axis' most significant qubit.
    Cnot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DownsampleEngine {
    /// Partial trace to a density matrix, then the remaining unitaries.
    DensityMatrix,
    /// Evolves each traced-out branch as an unnormalized pure state and sums
    /// the branch probabilities.
    #[default]
    BranchSum,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResampleResult {
    pub distribution: Distribution,
    pub output_layout: RegisterLayout,
    /// Intensity that turns `distribution` into sample values.
    pub output_intensity: f64,
    /// Ratio of the larger to the smaller register's qubit count.
    pub ratio: Ratio<usize>,
    pub output_rates: Option<Vec<f64>>,
}

impl ResampleResult {
    pub fn decode(&self) -> Result<Signal> {
        let mut signal = decode_exact(
            &self.distribution,
            self.output_intensity,
            Shape::of_layout(&self.output_layout),
        )?;
        signal.set_rates(self.output_rates.clone());
        Ok(signal)
    }
}

fn scaled_rates(rates: &Option<Vec<f64>>, factor: f64) -> Option<Vec<f64>> {
    rates.as_ref().map(|r| r.iter().map(|x| x * factor).collect())
}

fn forward_stage(input: &Encoded) -> PureState {
    let mut state = input.state.clone();
    state.hadamard_all_in_place();
    state.md_qft_in_place(false);
    state
}

pub fn downsample(input: &Encoded, params: ResampleParams) -> Result<ResampleResult> {
    downsample_with_engine(input, params, DownsampleEngine::default())
}

pub fn downsample_with_engine(
    input: &Encoded,
    params: ResampleParams,
    engine: DownsampleEngine,
) -> Result<ResampleResult> {
    let layout = *input.state.layout();
    let out = params.output_layout(&layout, Direction::Down)?;
    let spectrum = forward_stage(input);
    let probabilities = match engine {
        DownsampleEngine::DensityMatrix => {
            let mut rho = spectrum.discard_top(params.amount)?;
            rho.md_qft_in_place(true);
            rho.hadamard_all_in_place();
            rho.probabilities().probabilities().to_vec()
        }
        DownsampleEngine::BranchSum => branch_sum(&spectrum, out, params.amount),
    };
    let volume = params.factor().pow(layout.dims() as u32) as f64;
    Ok(ResampleResult {
        distribution: Distribution::from_raw(out, probabilities),
        output_layout: out,
        output_intensity: input.intensity / volume,
        ratio: Ratio::new(layout.total_qubits(), out.total_qubits()),
        output_rates: scaled_rates(&input.rates, 1.0 / params.factor() as f64),
    })
}

fn branch_sum(spectrum: &PureState, kept: RegisterLayout, amount: usize) -> Vec<f64> {
    let split = TopSplit::new(spectrum.layout(), amount);
    let amps = spectrum.amplitudes();
    let per_branch: Vec<Vec<f64>> = split
        .top_offsets
        .par_iter()
        .map(|&top| {
            let branch = split.low_offsets.iter().map(|&low| amps[low | top]).collect();
            let mut b = PureState::from_raw(kept, branch);
            b.md_qft_in_place(true);
            b.hadamard_all_in_place();
            b.amplitudes().iter().map(Complex64::norm_sqr).collect()
        })
        .collect();
    let mut total = vec![0.0; kept.len()];
    for probs in &per_branch {
        for (t, p) in total.iter_mut().zip(probs) {
            *t += p;
        }
    }
    total
}

/// Runs the upsampling circuit and returns the output state with its
/// measurement distribution.
pub fn upsample(
    input: &Encoded,
    params: ResampleParams,
    variant: UpsampleVariant,
) -> Result<(PureState, ResampleResult)> {
    let layout = *input.state.layout();
    let out = params.output_layout(&layout, Direction::Up)?;
    let mut state = match variant {
        UpsampleVariant::SwapPadding => swap_padding(input, out, params.amount),
        UpsampleVariant::Cnot => cnot_padding(input, params.amount)?,
    };
    state.md_qft_in_place(true);
    state.hadamard_all_in_place();
    let volume = params.factor().pow(layout.dims() as u32) as f64;
    let result = ResampleResult {
        distribution: state.probabilities(),
        output_layout: out,
        output_intensity: input.intensity * volume,
        ratio: Ratio::new(out.total_qubits(), layout.total_qubits()),
        output_rates: scaled_rates(&input.rates, params.factor() as f64),
    };
    Ok((state, result))
}

/// `|0⟩` padding register stored above the signal, `H` on everything, QFT on
/// the signal subregisters, then SWAPs moving padding qubit `r` of axis `s`
/// to the top of subregister `s`.
fn swap_padding(input: &Encoded, out: RegisterLayout, amount: usize) -> PureState {
    let layout = *input.state.layout();
    let (d, n0, n1) = (layout.dims(), layout.qubits_per_axis(), out.qubits_per_axis());
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); out.len()];
    amplitudes[..layout.len()].copy_from_slice(input.state.amplitudes());
    let mut state = PureState::from_raw(out, amplitudes);
    state.hadamard_all_in_place();
    for s in 0..d {
        let positions: Vec<usize> = (s * n0..(s + 1) * n0).collect();
        state.apply_circuit(&qft_circuit(&positions, false));
    }
    let signal_dest = (0..d).flat_map(|s| (0..n0).map(move |q| s * n1 + q));
    let pad_dest = (0..d).flat_map(|s| (0..amount).map(move |r| s * n1 + n0 + r));
    let dest: Vec<usize> = signal_dest.chain(pad_dest).collect();
    let swaps: Vec<Gate> = permutation_swaps(&dest);
    state.apply_circuit(&swaps);
    state
}

/// Padding inserted directly at the top of every subregister in `|+⟩`, then
/// C-NOTs from each axis' most significant signal qubit onto its padding.
fn cnot_padding(input: &Encoded, amount: usize) -> Result<PureState> {
    let n0 = input.state.layout().qubits_per_axis();
    let spectrum = forward_stage(input);
    let mut state = spectrum.append_padding(amount, PadQubit::PLUS)?;
    for s in 0..state.layout().dims() {
        for r in 0..amount {
            state.cnot_in_place(QubitId::new(s, n0 - 1), QubitId::new(s, n0 + r))?;
        }
    }
    Ok(state)
}

/// Upsampling by `ñ` followed by downsampling by `ñ`.
pub fn roundtrip_up_down(input: &Encoded, params: ResampleParams) -> Result<ResampleResult> {
    let (state, up) = upsample(input, params, UpsampleVariant::default())?;
    let mid = Encoded { state, intensity: up.output_intensity, rates: up.output_rates };
    downsample(&mid, params)
}

/// Resamples each non-overlapping patch of side `patch` independently and
/// reassembles the outputs in place. All-zero patches map to zeros.
///
/// Downsampling may discard all `log2(patch)` qubits of an axis, in which
/// case every patch reduces to its mean.
pub fn patch_resample(
    signal: &Signal,
    patch: usize,
    direction: Direction,
    amount: usize,
) -> Result<Signal> {
    let params = ResampleParams::new(amount)?;
    let shape = signal.shape();
    if !patch.is_power_of_two() || patch < 2 || !shape.extent.is_multiple_of(patch) {
        return Err(Error::arg(format!(
            "patch side {patch} must be a power of two of at least 2 dividing {}",
            shape.extent
        )));
    }
    let patch_shape = Shape::new(shape.dims, patch)?;
    let patch_layout = patch_shape.layout()?;
    // discarding every qubit of a patch leaves only its trace, i.e. its mean
    let collapse = direction == Direction::Down && amount == patch_layout.qubits_per_axis();
    let out_patch = if collapse {
        Shape { dims: shape.dims, extent: 1 }
    } else {
        Shape::of_layout(&params.output_layout(&patch_layout, direction)?)
    };
    let grid = Shape { dims: shape.dims, extent: shape.extent / patch };
    let out_shape = Shape::new(shape.dims, grid.extent * out_patch.extent)?;

    let outputs: Vec<Vec<f64>> = (0..grid.len())
        .into_par_iter()
        .map(|g| {
            let origin = axis_coords(g, grid);
            let values: Vec<f64> = (0..patch_shape.len())
                .map(|j| {
                    let at = offset(&origin, patch, &axis_coords(j, patch_shape));
                    signal.values()[flat_index(&at, shape.extent)]
                })
                .collect();
            let local = Signal::new(patch_shape, values)?;
            if local.intensity() == 0.0 {
                return Ok(vec![0.0; out_patch.len()]);
            }
            if collapse {
                return Ok(vec![local.mean()]);
            }
            let enc = encode(&local)?;
            let result = match direction {
                Direction::Down => downsample(&enc, params)?,
                Direction::Up => upsample(&enc, params, UpsampleVariant::default())?.1,
            };
            Ok(result.decode()?.into_values())
        })
        .collect::<Result<_>>()?;

    let mut values = vec![0.0; out_shape.len()];
    for (g, patch_values) in outputs.iter().enumerate() {
        let origin = axis_coords(g, grid);
        for (j, v) in patch_values.iter().enumerate() {
            let at = offset(&origin, out_patch.extent, &axis_coords(j, out_patch));
            values[flat_index(&at, out_shape.extent)] = *v;
        }
    }
    let mut out = Signal::new(out_shape, values)?;
    let factor = params.factor() as f64;
    let scale = match direction {
        Direction::Down => 1.0 / factor,
        Direction::Up => factor,
    };
    out.set_rates(signal.rates().map(|r| r.iter().map(|x| x * scale).collect()));
    Ok(out)
}

fn axis_coords(mut i: usize, shape: Shape) -> Vec<usize> {
    (0..shape.dims)
        .map(|_| {
            let c = i % shape.extent;
            i /= shape.extent;
            c
        })
        .collect()
}

fn offset(origin: &[usize], side: usize, local: &[usize]) -> Vec<usize> {
    origin.iter().zip(local).map(|(o, l)| o * side + l).collect()
}

fn flat_index(coords: &[usize], extent: usize) -> usize {
    coords.iter().rev().fold(0, |acc, &c| acc * extent + c)
}
