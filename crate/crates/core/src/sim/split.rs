//! Index maps between a register and the split "low qubits | top qubits" of
//! every subregister.

use crate::register::RegisterLayout;

/// For a layout with `n` qubits per axis, separates the `top` most
/// significant qubits of each subregister from the `n - top` low ones.
///
/// A full basis index is `low_offsets[i] | top_offsets[t]`, where `i` is an
/// index of the `(d, n - top)` layout and `t` an index of the `(d, top)` one.
#[derive(Debug, Clone)]
pub(crate) struct TopSplit {
    pub low_offsets: Vec<usize>,
    pub top_offsets: Vec<usize>,
}

impl TopSplit {
    pub fn new(layout: &RegisterLayout, top: usize) -> Self {
        let d = layout.dims();
        let n = layout.qubits_per_axis();
        debug_assert!(top <= n);
        let low = n - top;
        let scatter = |idx: usize, width: usize, shift: usize| -> usize {
            let mask = (1usize << width) - 1;
            (0..d).fold(0, |acc, s| acc | (((idx >> (s * width)) & mask) << (s * n + shift)))
        };
        let low_offsets = (0..1usize << (d * low)).map(|i| scatter(i, low, 0)).collect();
        let top_offsets = (0..1usize << (d * top)).map(|t| scatter(t, top, low)).collect();
        Self { low_offsets, top_offsets }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offsets_partition_the_register() {
        let layout = RegisterLayout::new(2, 3).unwrap();
        let split = TopSplit::new(&layout, 1);
        assert_eq!(split.low_offsets.len(), 16);
        assert_eq!(split.top_offsets.len(), 4);
        let mut seen = vec![false; layout.len()];
        for &a in &split.low_offsets {
            for &b in &split.top_offsets {
                assert_eq!(a & b, 0);
                assert!(!seen[a | b]);
                seen[a | b] = true;
            }
        }
        assert!(seen.into_iter().all(|x| x));
        // top qubit of axis 1 sits at global position 5
        assert_eq!(split.top_offsets[2], 1 << 5);
        // low qubits of axis 1 start at position 3
        assert_eq!(split.low_offsets[4], 1 << 3);
    }
}
