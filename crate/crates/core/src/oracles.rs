//! Classical reference resamplers.
//!
//! These work directly on sample values with their own index arithmetic and
//! share nothing with the simulated circuits, so they can serve as ground
//! truth for them.

use crate::codec::{Shape, Signal};
use crate::error::{Error, Result};

/// Per-axis coordinates of flat index `i`, axis 0 fastest.
fn coords(mut i: usize, shape: Shape) -> Vec<usize> {
    let mut out = Vec::with_capacity(shape.dims);
    for _ in 0..shape.dims {
        out.push(i % shape.extent);
        i /= shape.extent;
    }
    out
}

fn flat(coords: &[usize], extent: usize) -> usize {
    coords.iter().rev().fold(0, |acc, &c| acc * extent + c)
}

fn block_side(signal: &Signal, ntilde: usize) -> Result<usize> {
    let extent = signal.shape().extent;
    if ntilde == 0 || (1usize << ntilde.min(63)) >= extent {
        return Err(Error::arg(format!(
            "block exponent {ntilde} must lie in [1, log2({extent}))"
        )));
    }
    Ok(1 << ntilde)
}

/// Sums over non-overlapping `side^d` blocks.
fn block_sums(signal: &Signal, side: usize) -> Result<Signal> {
    let shape = signal.shape();
    let out_shape = Shape::new(shape.dims, shape.extent / side)?;
    let mut out = vec![0.0; out_shape.len()];
    for (i, v) in signal.values().iter().enumerate() {
        let c: Vec<usize> = coords(i, shape).into_iter().map(|x| x / side).collect();
        out[flat(&c, out_shape.extent)] += v;
    }
    Signal::new(out_shape, out)
}

/// Mean over each non-overlapping block of side `2^ntilde`.
pub fn block_average(signal: &Signal, ntilde: usize) -> Result<Signal> {
    let side = block_side(signal, ntilde)?;
    let sums = block_sums(signal, side)?;
    let volume = side.pow(signal.shape().dims as u32) as f64;
    let shape = sums.shape();
    let mut out = Signal::new(shape, sums.into_values().into_iter().map(|v| v / volume).collect())?;
    out.set_rates(signal.rates().map(|r| r.iter().map(|x| x / side as f64).collect()));
    Ok(out)
}

/// Repeats every sample `2^ntilde` consecutive times along each axis.
pub fn nn_interpolate(signal: &Signal, ntilde: usize) -> Result<Signal> {
    if ntilde == 0 || ntilde >= usize::BITS as usize {
        return Err(Error::arg("replication exponent must be positive"));
    }
    let side = 1usize << ntilde;
    let shape = signal.shape();
    let extent = shape
        .extent
        .checked_mul(side)
        .ok_or_else(|| Error::arg("interpolated extent overflows"))?;
    let out_shape = Shape::new(shape.dims, extent)?;
    let values = (0..out_shape.len())
        .map(|i| {
            let src: Vec<usize> = coords(i, out_shape).into_iter().map(|x| x / side).collect();
            signal.values()[flat(&src, shape.extent)]
        })
        .collect();
    let mut out = Signal::new(out_shape, values)?;
    out.set_rates(signal.rates().map(|r| r.iter().map(|x| x * side as f64).collect()));
    Ok(out)
}

/// Convolution with a `side^d` kernel of ones, sampled every `stride`
/// samples. Only `stride == side` is supported.
pub fn strided_rect_convolution(signal: &Signal, side: usize, stride: usize) -> Result<Signal> {
    if stride != side {
        return Err(Error::arg(format!(
            "stride {stride} differs from kernel side {side}"
        )));
    }
    if !side.is_power_of_two() || side < 2 || side > signal.shape().extent {
        return Err(Error::arg(format!(
            "kernel side {side} must be a power of two in [2, {}]",
            signal.shape().extent
        )));
    }
    let shape = signal.shape();
    let out_shape = Shape::new(shape.dims, shape.extent / side)?;
    let taps = side.pow(shape.dims as u32);
    let values = (0..out_shape.len())
        .map(|m| {
            let origin: Vec<usize> = coords(m, out_shape).into_iter().map(|x| x * stride).collect();
            (0..taps)
                .map(|j| {
                    let offset = coords(j, Shape { dims: shape.dims, extent: side });
                    let at: Vec<usize> = origin.iter().zip(&offset).map(|(o, k)| o + k).collect();
                    signal.values()[flat(&at, shape.extent)]
                })
                .sum()
        })
        .collect();
    Signal::new(out_shape, values)
}
