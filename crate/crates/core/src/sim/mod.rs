//! Dense statevector and density-matrix simulation.
//!
//! Both state kinds implement [`QuantumState`], so the Hadamard layer, the
//! per-subregister QFT and C-NOT gates are written once. Gates act on raw
//! amplitude buffers; a density matrix `ρ` of `n` qubits is stored row-major,
//! so `U ρ U†` is `U` on positions `n..2n` followed by `conj(U)` on `0..n`.

mod distribution;
mod gate;
mod mixed;
mod pure;
pub(crate) mod split;

pub use distribution::Distribution;
pub use gate::{permutation_swaps, qft_circuit, Gate};
pub use mixed::{MixedState, MIXED_QUBIT_CAP};
pub use pure::{PadQubit, PureState};

use crate::error::{Error, Result};
use crate::register::{QubitId, RegisterLayout};

/// Tolerance used for unitary checks (norms, traces, Hermiticity).
pub const UNITARY_TOL: f64 = 1e-10;
/// Tolerance on the sum of a probability distribution.
pub const DISTRIBUTION_TOL: f64 = 1e-9;

pub trait QuantumState: Clone {
    fn layout(&self) -> &RegisterLayout;

    fn apply_gate(&mut self, gate: &Gate);

    fn probabilities(&self) -> Distribution;

    /// Partial trace over the `ntilde` most significant qubits of every
    /// subregister.
    fn discard_top(&self, ntilde: usize) -> Result<MixedState>;

    fn apply_circuit(&mut self, gates: &[Gate]) {
        for g in gates {
            self.apply_gate(g);
        }
    }

    fn hadamard_all_in_place(&mut self) {
        for p in 0..self.layout().total_qubits() {
            self.apply_gate(&Gate::H(p));
        }
    }

    fn qft_in_place(&mut self, s: usize, inverse: bool) -> Result<()> {
        let layout = *self.layout();
        if s >= layout.dims() {
            return Err(Error::arg(format!(
                "subregister {s} does not exist in a {}-axis layout",
                layout.dims()
            )));
        }
        let positions: Vec<usize> = layout.subregister(s).collect();
        self.apply_circuit(&qft_circuit(&positions, inverse));
        Ok(())
    }

    fn md_qft_in_place(&mut self, inverse: bool) {
        for s in 0..self.layout().dims() {
            self.qft_in_place(s, inverse).expect("subregister within layout");
        }
    }

    fn cnot_in_place(&mut self, control: QubitId, target: QubitId) -> Result<()> {
        let layout = *self.layout();
        let c = layout.global_position(control)?;
        let t = layout.global_position(target)?;
        if c == t {
            return Err(Error::arg("control and target must be distinct qubits"));
        }
        self.apply_gate(&Gate::Cnot { control: c, target: t });
        Ok(())
    }
}

/// Hadamard gate on every qubit.
pub fn hadamard_all<S: QuantumState>(state: &S) -> S {
    let mut out = state.clone();
    out.hadamard_all_in_place();
    out
}

/// One-dimensional QFT (or its inverse) on subregister `s`.
pub fn qft<S: QuantumState>(state: &S, s: usize, inverse: bool) -> Result<S> {
    let mut out = state.clone();
    out.qft_in_place(s, inverse)?;
    Ok(out)
}

/// Tensor product of one-dimensional QFTs, one per subregister.
pub fn md_qft<S: QuantumState>(state: &S, inverse: bool) -> S {
    let mut out = state.clone();
    out.md_qft_in_place(inverse);
    out
}

pub fn discard_top<S: QuantumState>(state: &S, ntilde: usize) -> Result<MixedState> {
    state.discard_top(ntilde)
}

pub fn probabilities<S: QuantumState>(state: &S) -> Distribution {
    state.probabilities()
}

pub fn apply_cnot<S: QuantumState>(state: &S, control: QubitId, target: QubitId) -> Result<S> {
    let mut out = state.clone();
    out.cnot_in_place(control, target)?;
    Ok(out)
}

pub fn append_padding(state: &PureState, ntilde: usize, pad: PadQubit) -> Result<PureState> {
    state.append_padding(ntilde, pad)
}

pub(crate) fn check_discard(layout: &RegisterLayout, ntilde: usize) -> Result<()> {
    if ntilde == 0 || ntilde >= layout.qubits_per_axis() {
        return Err(Error::arg(format!(
            "can discard between 1 and {} qubits per axis, got {ntilde}",
            layout.qubits_per_axis().saturating_sub(1)
        )));
    }
    Ok(())
}

#[cfg(test)]
pub(crate) mod dense;
