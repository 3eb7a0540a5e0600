//! Amplitude encoding of classical signals and their reconstruction.
//!
//! A signal `S` with total intensity `I = Σ S_e` is encoded as the state with
//! amplitudes `sqrt(S_e / I)`. The intensity is returned alongside the state
//! so that decoded outputs can be rescaled; the decoder never guesses it.

use num_complex::Complex64;

use crate::analysis::ShotHistogram;
use crate::error::{Error, Result};
use crate::register::RegisterLayout;
use crate::sim::{Distribution, PureState};

/// Hyper-cubic array shape: `dims` axes of `extent` samples each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Shape {
    pub dims: usize,
    pub extent: usize,
}

impl Shape {
    pub fn new(dims: usize, extent: usize) -> Result<Self> {
        if dims == 0 {
            return Err(Error::arg("a signal needs at least one axis"));
        }
        if !extent.is_power_of_two() {
            return Err(Error::arg(format!("axis extent {extent} is not a power of two")));
        }
        Ok(Self { dims, extent })
    }

    pub fn of_layout(layout: &RegisterLayout) -> Self {
        Self { dims: layout.dims(), extent: layout.samples_per_axis() }
    }

    pub fn len(&self) -> usize {
        self.extent.pow(self.dims as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `log2(extent)`.
    pub fn qubits_per_axis(&self) -> usize {
        self.extent.trailing_zeros() as usize
    }

    pub fn layout(&self) -> Result<RegisterLayout> {
        RegisterLayout::new(self.dims, self.qubits_per_axis())
    }
}

/// A `d`-dimensional non-negative signal.
///
/// Values are stored in basis-index order: axis 0 varies fastest, so for an
/// image stored row-major the column is axis 0 and the row is axis 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    shape: Shape,
    values: Vec<f64>,
    rates: Option<Vec<f64>>,
    bit_depth: Option<u32>,
}

impl Signal {
    pub fn new(shape: Shape, values: Vec<f64>) -> Result<Self> {
        if values.len() != shape.len() {
            return Err(Error::arg(format!(
                "shape {}^{} needs {} values, got {}",
                shape.extent,
                shape.dims,
                shape.len(),
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !(v.is_finite() && **v >= 0.0)) {
            return Err(Error::arg(format!(
                "signal values must be finite and non-negative, found {v}"
            )));
        }
        Ok(Self { shape, values, rates: None, bit_depth: None })
    }

    /// One-dimensional signal.
    pub fn from_samples(values: Vec<f64>) -> Result<Self> {
        let shape = Shape::new(1, values.len())?;
        Self::new(shape, values)
    }

    /// Per-axis sampling rates in Hz.
    pub fn with_rates(mut self, rates: Vec<f64>) -> Result<Self> {
        if rates.len() != self.shape.dims {
            return Err(Error::arg(format!(
                "{} rates given for {} axes",
                rates.len(),
                self.shape.dims
            )));
        }
        if rates.iter().any(|r| !(r.is_finite() && *r > 0.0)) {
            return Err(Error::arg("sampling rates must be positive"));
        }
        self.rates = Some(rates);
        Ok(self)
    }

    /// Declares the signal as digital with `levels` values `0..levels`.
    pub fn with_bit_depth(mut self, levels: u32) -> Result<Self> {
        if levels < 2 {
            return Err(Error::arg("bit depth needs at least two levels"));
        }
        let top = f64::from(levels - 1);
        if let Some(v) = self.values.iter().find(|v| v.fract() != 0.0 || **v > top) {
            return Err(Error::arg(format!("value {v} is not an integer level in [0, {top}]")));
        }
        self.bit_depth = Some(levels);
        Ok(self)
    }

    pub(crate) fn set_rates(&mut self, rates: Option<Vec<f64>>) {
        self.rates = rates;
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn rates(&self) -> Option<&[f64]> {
        self.rates.as_deref()
    }

    pub fn bit_depth(&self) -> Option<u32> {
        self.bit_depth
    }

    /// Total intensity `Σ S_e`.
    pub fn intensity(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn mean(&self) -> f64 {
        self.intensity() / self.values.len() as f64
    }

    /// Largest elementwise relative error `|a - b| / max(|b|, floor)`.
    pub fn max_relative_error(&self, reference: &Signal, floor: f64) -> f64 {
        self.values
            .iter()
            .zip(&reference.values)
            .map(|(a, b)| (a - b).abs() / b.abs().max(floor))
            .fold(0.0, f64::max)
    }
}

/// An encoded signal: the quantum state plus the classically stored
/// intensity and sampling rates.
#[derive(Debug, Clone, PartialEq)]
pub struct Encoded {
    pub state: PureState,
    pub intensity: f64,
    pub rates: Option<Vec<f64>>,
}

pub fn encode(signal: &Signal) -> Result<Encoded> {
    let layout = signal.shape.layout()?;
    let intensity = signal.intensity();
    if !(intensity > 0.0) {
        return Err(Error::Encoding("signal has zero total intensity".into()));
    }
    let amplitudes = signal
        .values
        .iter()
        .map(|v| Complex64::new((v / intensity).sqrt(), 0.0))
        .collect();
    Ok(Encoded {
        state: PureState::from_raw(layout, amplitudes),
        intensity,
        rates: signal.rates.clone(),
    })
}

/// Output signal `intensity * p_m`.
pub fn decode_exact(dist: &Distribution, intensity: f64, shape: Shape) -> Result<Signal> {
    if Shape::of_layout(dist.layout()) != shape {
        return Err(Error::arg(format!(
            "distribution over {}^{} outcomes does not match shape {}^{}",
            dist.layout().samples_per_axis(),
            dist.layout().dims(),
            shape.extent,
            shape.dims
        )));
    }
    let values = dist.probabilities().iter().map(|p| intensity * p).collect();
    Signal::new(shape, values)
}

/// Signal estimate from a shot histogram with its confidence half-widths.
#[derive(Debug, Clone, PartialEq)]
pub struct Reconstruction {
    pub signal: Signal,
    /// `2 * I * sqrt(f (1 - f) / M)` per sample.
    pub half_widths: Vec<f64>,
}

/// Point estimates `I * f_m` with the normal-approximation interval
/// `± 2 I sqrt(f_m (1 - f_m) / M)`.
///
/// With `levels = Some(L)` the estimates are rounded to the nearest integer
/// level and clipped to `[0, L - 1]`.
pub fn reconstruct_from_shots(
    hist: &ShotHistogram,
    intensity: f64,
    levels: Option<u32>,
) -> Result<Reconstruction> {
    if hist.shots() == 0 {
        return Err(Error::arg("histogram holds no shots"));
    }
    if levels.is_some_and(|l| l < 2) {
        return Err(Error::arg("bit depth needs at least two levels"));
    }
    let m = hist.shots() as f64;
    let freqs = hist.frequencies();
    let half_widths = freqs
        .iter()
        .map(|f| 2.0 * intensity * (f * (1.0 - f) / m).sqrt())
        .collect();
    let values: Vec<f64> = freqs
        .iter()
        .map(|f| {
            let v = intensity * f;
            match levels {
                Some(l) => v.round().clamp(0.0, f64::from(l - 1)),
                None => v,
            }
        })
        .collect();
    let mut signal = Signal::new(Shape::of_layout(hist.layout()), values)?;
    if let Some(l) = levels {
        signal.bit_depth = Some(l);
    }
    Ok(Reconstruction { signal, half_widths })
}
