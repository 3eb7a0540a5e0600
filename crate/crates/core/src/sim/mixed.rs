use nalgebra::DMatrix;
use num_complex::Complex64;

use super::split::TopSplit;
use super::{check_discard, Distribution, Gate, PureState, QuantumState, UNITARY_TOL};
use crate::error::{Error, Result};
use crate::register::RegisterLayout;

/// Largest register held as a dense density matrix (16 * 4^n bytes).
pub const MIXED_QUBIT_CAP: usize = 12;

/// Density operator, stored row-major as a `2^n x 2^n` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedState {
    density: Vec<Complex64>,
    layout: RegisterLayout,
}

impl MixedState {
    pub(crate) fn check_capacity(layout: &RegisterLayout) -> Result<()> {
        if layout.total_qubits() > MIXED_QUBIT_CAP {
            return Err(Error::Capacity {
                requested: layout.total_qubits(),
                cap: MIXED_QUBIT_CAP,
            });
        }
        Ok(())
    }

    /// Validates trace and Hermiticity. Positivity is checked separately by
    /// [`MixedState::min_eigenvalue`] since it needs a diagonalization.
    pub fn new(layout: RegisterLayout, density: Vec<Complex64>) -> Result<Self> {
        Self::check_capacity(&layout)?;
        let dim = layout.len();
        if density.len() != dim * dim {
            return Err(Error::arg(format!(
                "expected a {dim}x{dim} density matrix, got {} entries",
                density.len()
            )));
        }
        let state = Self { density, layout };
        let trace = state.trace();
        if (trace.re - 1.0).abs() > UNITARY_TOL || trace.im.abs() > UNITARY_TOL {
            return Err(Error::arg(format!("density matrix trace is {trace}, expected 1")));
        }
        if state.hermiticity_error() > UNITARY_TOL {
            return Err(Error::arg("density matrix is not Hermitian"));
        }
        Ok(state)
    }

    pub fn from_pure(state: &PureState) -> Result<Self> {
        Self::check_capacity(state.layout())?;
        let psi = state.amplitudes();
        let density = psi
            .iter()
            .flat_map(|&a| psi.iter().map(move |&b| a * b.conj()))
            .collect();
        Ok(Self { density, layout: *state.layout() })
    }

    pub(crate) fn from_raw(layout: RegisterLayout, density: Vec<Complex64>) -> Self {
        Self { density, layout }
    }

    pub fn dim(&self) -> usize {
        self.layout.len()
    }

    pub fn density(&self) -> &[Complex64] {
        &self.density
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.density[row * self.dim() + col]
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim()).map(|i| self.get(i, i)).sum()
    }

    /// `max |ρ_ij - conj(ρ_ji)|`.
    pub fn hermiticity_error(&self) -> f64 {
        let dim = self.dim();
        let mut worst = 0.0f64;
        for i in 0..dim {
            for j in i..dim {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        // Tr(ρ ρ) = Σ_ij ρ_ij ρ_ji = Σ_ij |ρ_ij|² for Hermitian ρ
        self.density.iter().map(|x| x.norm_sqr()).sum()
    }

    /// Smallest eigenvalue of the (Hermitian part of the) density matrix.
    pub fn min_eigenvalue(&self) -> f64 {
        let dim = self.dim();
        let m = DMatrix::from_row_slice(dim, dim, &self.density);
        let hermitian = (&m + m.adjoint()) * Complex64::new(0.5, 0.0);
        hermitian
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }
}

impl QuantumState for MixedState {
    fn layout(&self) -> &RegisterLayout {
        &self.layout
    }

    fn apply_gate(&mut self, gate: &Gate) {
        let n = self.layout.total_qubits();
        debug_assert!(gate.max_position() < n);
        gate.shifted(n).apply(&mut self.density, false);
        gate.apply(&mut self.density, true);
    }

    fn probabilities(&self) -> Distribution {
        Distribution::from_raw(
            self.layout,
            (0..self.dim()).map(|i| self.get(i, i).re.max(0.0)).collect(),
        )
    }

    fn discard_top(&self, ntilde: usize) -> Result<MixedState> {
        check_discard(&self.layout, ntilde)?;
        let kept = self.layout.resized(self.layout.qubits_per_axis() - ntilde)?;
        let split = TopSplit::new(&self.layout, ntilde);
        let (dim, kdim) = (self.dim(), kept.len());
        let mut density = vec![Complex64::new(0.0, 0.0); kdim * kdim];
        for &top in &split.top_offsets {
            for (i, &li) in split.low_offsets.iter().enumerate() {
                let row = (li | top) * dim;
                for (j, &lj) in split.low_offsets.iter().enumerate() {
                    density[i * kdim + j] += self.density[row + (lj | top)];
                }
            }
        }
        Ok(MixedState::from_raw(kept, density))
    }
}
