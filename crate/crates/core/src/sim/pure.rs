use num_complex::Complex64;

use super::split::TopSplit;
use super::{check_discard, Distribution, Gate, MixedState, QuantumState, UNITARY_TOL};
use crate::error::{Error, Result};
use crate::register::RegisterLayout;

/// Normalized statevector over a register layout.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
    layout: RegisterLayout,
}

/// Single-qubit state used to initialize padding qubits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PadQubit(pub [Complex64; 2]);

impl PadQubit {
    pub const ZERO: PadQubit = PadQubit([Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]);
    pub const PLUS: PadQubit = PadQubit([
        Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
        Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
    ]);
}

impl Default for PadQubit {
    fn default() -> Self {
        PadQubit::ZERO
    }
}

impl PureState {
    pub fn new(layout: RegisterLayout, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != layout.len() {
            return Err(Error::arg(format!(
                "expected {} amplitudes, got {}",
                layout.len(),
                amplitudes.len()
            )));
        }
        let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm - 1.0).abs() > UNITARY_TOL {
            return Err(Error::arg(format!("state norm is {norm}, expected 1")));
        }
        Ok(Self { amplitudes, layout })
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(layout: RegisterLayout, index: usize) -> Result<Self> {
        if index >= layout.len() {
            return Err(Error::arg(format!("basis index {index} out of range")));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); layout.len()];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self { amplitudes, layout })
    }

    /// Caller guarantees unit norm up to rounding.
    pub(crate) fn from_raw(layout: RegisterLayout, amplitudes: Vec<Complex64>) -> Self {
        debug_assert_eq!(amplitudes.len(), layout.len());
        Self { amplitudes, layout }
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn to_mixed(&self) -> Result<MixedState> {
        MixedState::from_pure(self)
    }

    /// Inserts `ntilde` fresh qubits in state `pad` as the new most
    /// significant qubits of every subregister.
    pub fn append_padding(&self, ntilde: usize, pad: PadQubit) -> Result<PureState> {
        if ntilde == 0 {
            return Err(Error::arg("padding must add at least one qubit per axis"));
        }
        let layout = self.layout.resized(self.layout.qubits_per_axis() + ntilde)?;
        let split = TopSplit::new(&layout, ntilde);
        let pad_weights: Vec<Complex64> = (0..split.top_offsets.len())
            .map(|t| {
                (0..layout.dims() * ntilde)
                    .map(|b| pad.0[(t >> b) & 1])
                    .product()
            })
            .collect();
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); layout.len()];
        for (&top, &w) in split.top_offsets.iter().zip(&pad_weights) {
            if w == Complex64::new(0.0, 0.0) {
                continue;
            }
            for (&low, &a) in split.low_offsets.iter().zip(&self.amplitudes) {
                amplitudes[low | top] = a * w;
            }
        }
        Ok(PureState { amplitudes, layout })
    }
}

impl QuantumState for PureState {
    fn layout(&self) -> &RegisterLayout {
        &self.layout
    }

    fn apply_gate(&mut self, gate: &Gate) {
        debug_assert!(gate.max_position() < self.layout.total_qubits());
        gate.apply(&mut self.amplitudes, false);
    }

    fn probabilities(&self) -> Distribution {
        Distribution::from_raw(
            self.layout,
            self.amplitudes.iter().map(|a| a.norm_sqr()).collect(),
        )
    }

    fn discard_top(&self, ntilde: usize) -> Result<MixedState> {
        check_discard(&self.layout, ntilde)?;
        let kept = self.layout.resized(self.layout.qubits_per_axis() - ntilde)?;
        MixedState::check_capacity(&kept)?;
        let split = TopSplit::new(&self.layout, ntilde);
        let dim = kept.len();
        let mut density = vec![Complex64::new(0.0, 0.0); dim * dim];
        let mut branch = vec![Complex64::new(0.0, 0.0); dim];
        for &top in &split.top_offsets {
            for (b, &low) in branch.iter_mut().zip(&split.low_offsets) {
                *b = self.amplitudes[low | top];
            }
            for (row, &bi) in density.chunks_exact_mut(dim).zip(&branch) {
                if bi == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for (r, &bj) in row.iter_mut().zip(&branch) {
                    *r += bi * bj.conj();
                }
            }
        }
        Ok(MixedState::from_raw(kept, density))
    }
}
