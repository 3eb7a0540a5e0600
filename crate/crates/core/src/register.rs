//! Register layouts and little-endian index arithmetic.
//!
//! A `d`-dimensional signal with `N0 = 2^n0` samples per axis lives in a
//! register of `d * n0` qubits split into `d` subregisters. Subregister `s`
//! occupies global qubit positions `[s * n0, (s + 1) * n0)` and encodes the
//! coordinate along axis `s`; subregister `d - 1` holds the most significant
//! qubits. Within a subregister, position `q = n0 - 1` is the most significant
//! bit of the axis coordinate.

use std::ops::Range;

use crate::error::{Error, Result};

/// Default upper bound on the number of simulated qubits.
pub const DEFAULT_QUBIT_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RegisterLayout {
    dims: usize,
    qubits_per_axis: usize,
}

/// A qubit addressed by subregister `s` and position `q` inside it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QubitId {
    pub s: usize,
    pub q: usize,
}

impl QubitId {
    pub fn new(s: usize, q: usize) -> Self {
        Self { s, q }
    }
}

/// Per-axis coordinates `(e_0, ..., e_{d-1})` of a sample.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexTuple(pub Vec<usize>);

impl IndexTuple {
    pub fn zeros(dims: usize) -> Self {
        Self(vec![0; dims])
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for IndexTuple {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}

/// Builds a layout under the default qubit cap.
pub fn make_layout(d: usize, n0: usize) -> Result<RegisterLayout> {
    RegisterLayout::new(d, n0)
}

impl RegisterLayout {
    pub fn new(dims: usize, qubits_per_axis: usize) -> Result<Self> {
        Self::with_cap(dims, qubits_per_axis, DEFAULT_QUBIT_CAP)
    }

    pub fn with_cap(dims: usize, qubits_per_axis: usize, cap: usize) -> Result<Self> {
        if dims == 0 {
            return Err(Error::arg("number of dimensions must be positive"));
        }
        if qubits_per_axis == 0 {
            return Err(Error::arg("qubits per axis must be positive"));
        }
        let requested = dims
            .checked_mul(qubits_per_axis)
            .ok_or(Error::Capacity { requested: usize::MAX, cap })?;
        if requested > cap {
            return Err(Error::Capacity { requested, cap });
        }
        Ok(Self { dims, qubits_per_axis })
    }

    /// Number of signal axes `d`.
    pub fn dims(&self) -> usize {
        self.dims
    }

    /// Qubits per subregister `n0`.
    pub fn qubits_per_axis(&self) -> usize {
        self.qubits_per_axis
    }

    /// `d * n0`.
    pub fn total_qubits(&self) -> usize {
        self.dims * self.qubits_per_axis
    }

    /// Samples per axis `N0 = 2^n0`.
    pub fn samples_per_axis(&self) -> usize {
        1 << self.qubits_per_axis
    }

    /// Hilbert-space dimension `2^(d * n0)`.
    pub fn len(&self) -> usize {
        1 << self.total_qubits()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Same number of axes with a different subregister size.
    pub fn resized(&self, qubits_per_axis: usize) -> Result<Self> {
        Self::new(self.dims, qubits_per_axis)
    }

    /// Global positions of subregister `s`, least significant first.
    pub fn subregister(&self, s: usize) -> Range<usize> {
        s * self.qubits_per_axis..(s + 1) * self.qubits_per_axis
    }

    pub fn tuple_to_index(&self, e: &IndexTuple) -> Result<usize> {
        if e.0.len() != self.dims {
            return Err(Error::arg(format!(
                "index tuple has {} coordinates, layout has {} axes",
                e.0.len(),
                self.dims
            )));
        }
        let extent = self.samples_per_axis();
        let mut index = 0;
        for (axis, &c) in e.0.iter().enumerate().rev() {
            if c >= extent {
                return Err(Error::arg(format!(
                    "coordinate {c} on axis {axis} is outside [0, {extent})"
                )));
            }
            index = index * extent + c;
        }
        Ok(index)
    }

    pub fn index_to_tuple(&self, index: usize) -> Result<IndexTuple> {
        if index >= self.len() {
            return Err(Error::arg(format!(
                "basis index {index} is outside [0, {})",
                self.len()
            )));
        }
        let mask = self.samples_per_axis() - 1;
        let coords = (0..self.dims)
            .map(|s| (index >> (s * self.qubits_per_axis)) & mask)
            .collect();
        Ok(IndexTuple(coords))
    }

    pub fn global_position(&self, qid: QubitId) -> Result<usize> {
        if qid.s >= self.dims || qid.q >= self.qubits_per_axis {
            return Err(Error::arg(format!(
                "qubit (s={}, q={}) is not in a {}x{} layout",
                qid.s, qid.q, self.dims, self.qubits_per_axis
            )));
        }
        Ok(qid.s * self.qubits_per_axis + qid.q)
    }
}
