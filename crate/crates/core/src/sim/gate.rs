use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

/// Elementary gates on global qubit positions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gate {
    H(usize),
    /// Phase `exp(i * angle)` on basis states with both qubits set.
    CPhase { a: usize, b: usize, angle: f64 },
    Swap(usize, usize),
    Cnot { control: usize, target: usize },
}

impl Gate {
    pub(crate) fn shifted(self, offset: usize) -> Self {
        match self {
            Gate::H(p) => Gate::H(p + offset),
            Gate::CPhase { a, b, angle } => Gate::CPhase { a: a + offset, b: b + offset, angle },
            Gate::Swap(a, b) => Gate::Swap(a + offset, b + offset),
            Gate::Cnot { control, target } => Gate::Cnot {
                control: control + offset,
                target: target + offset,
            },
        }
    }

    /// Highest qubit position touched.
    pub fn max_position(&self) -> usize {
        match *self {
            Gate::H(p) => p,
            Gate::CPhase { a, b, .. } | Gate::Swap(a, b) => a.max(b),
            Gate::Cnot { control, target } => control.max(target),
        }
    }

    /// Applies the gate (or its complex conjugate) to a raw amplitude buffer.
    pub(crate) fn apply(&self, buf: &mut [Complex64], conjugate: bool) {
        match *self {
            Gate::H(p) => hadamard(buf, p),
            Gate::CPhase { a, b, angle } => {
                let angle = if conjugate { -angle } else { angle };
                controlled_phase(buf, a, b, Complex64::from_polar(1.0, angle))
            }
            Gate::Swap(a, b) => swap(buf, a, b),
            Gate::Cnot { control, target } => cnot(buf, control, target),
        }
    }
}

fn hadamard(buf: &mut [Complex64], pos: usize) {
    let stride = 1usize << pos;
    for chunk in buf.chunks_exact_mut(stride << 1) {
        let (lo, hi) = chunk.split_at_mut(stride);
        for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
            let (x, y) = (*a, *b);
            *a = (x + y) * FRAC_1_SQRT_2;
            *b = (x - y) * FRAC_1_SQRT_2;
        }
    }
}

fn controlled_phase(buf: &mut [Complex64], a: usize, b: usize, phase: Complex64) {
    let mask = (1usize << a) | (1usize << b);
    for (i, amp) in buf.iter_mut().enumerate() {
        if i & mask == mask {
            *amp *= phase;
        }
    }
}

fn swap(buf: &mut [Complex64], a: usize, b: usize) {
    if a == b {
        return;
    }
    let (ma, mb) = (1usize << a, 1usize << b);
    for i in 0..buf.len() {
        if i & ma != 0 && i & mb == 0 {
            buf.swap(i, i ^ ma ^ mb);
        }
    }
}

fn cnot(buf: &mut [Complex64], control: usize, target: usize) {
    let (mc, mt) = (1usize << control, 1usize << target);
    for i in 0..buf.len() {
        if i & mc != 0 && i & mt == 0 {
            buf.swap(i, i | mt);
        }
    }
}

/// Gate sequence for the one-dimensional QFT on `positions` (least
/// significant first), with matrix elements `N^{-1/2} exp(±2πi k e / N)`.
///
/// Hadamard and controlled-phase sweeps produce the bit-reversed transform;
/// the trailing swaps undo the reversal so the matrix elements hold exactly.
/// The inverse is the same circuit with conjugated phases.
pub fn qft_circuit(positions: &[usize], inverse: bool) -> Vec<Gate> {
    let m = positions.len();
    let sign = if inverse { -1.0 } else { 1.0 };
    let mut gates = Vec::with_capacity(m * (m + 1) / 2 + m / 2);
    for j in (0..m).rev() {
        gates.push(Gate::H(positions[j]));
        for l in (0..j).rev() {
            let angle = sign * 2.0 * PI / (1u64 << (j - l + 1)) as f64;
            gates.push(Gate::CPhase { a: positions[l], b: positions[j], angle });
        }
    }
    for i in 0..m / 2 {
        gates.push(Gate::Swap(positions[i], positions[m - 1 - i]));
    }
    gates
}

/// Adjacent-swap network that applies a qubit permutation: the qubit at
/// position `i` ends up at `dest[i]`.
pub fn permutation_swaps(dest: &[usize]) -> Vec<Gate> {
    // occupant[p] = original qubit currently at position p
    let n = dest.len();
    let mut occupant: Vec<usize> = (0..n).collect();
    let mut gates = Vec::new();
    // bubble sort on target positions
    for pass in 0..n {
        let mut moved = false;
        for p in 0..n.saturating_sub(1 + pass) {
            if dest[occupant[p]] > dest[occupant[p + 1]] {
                occupant.swap(p, p + 1);
                gates.push(Gate::Swap(p, p + 1));
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    gates
}
