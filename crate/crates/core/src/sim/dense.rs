//! Explicit-matrix reference implementations used only by tests.
//!
//! Nothing here goes through the gate kernels: operators are built as full
//! matrices from their defining formulas and combined with Kronecker products.

use std::f64::consts::PI;

use num_complex::Complex64;

pub type Matrix = Vec<Vec<Complex64>>;

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn identity(dim: usize) -> Matrix {
    (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { c(1.0) } else { c(0.0) }).collect())
        .collect()
}

/// `a ⊗ b`; `a` acts on the more significant factor.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (ra, rb) = (a.len(), b.len());
    let (ca, cb) = (a[0].len(), b[0].len());
    let mut out = vec![vec![c(0.0); ca * cb]; ra * rb];
    for i in 0..ra {
        for j in 0..ca {
            for k in 0..rb {
                for l in 0..cb {
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m, p) = (a.len(), b.len(), b[0].len());
    let mut out = vec![vec![c(0.0); p]; n];
    for i in 0..n {
        for k in 0..m {
            if a[i][k] == c(0.0) {
                continue;
            }
            for j in 0..p {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn adjoint(a: &Matrix) -> Matrix {
    (0..a[0].len())
        .map(|j| (0..a.len()).map(|i| a[i][j].conj()).collect())
        .collect()
}

pub fn matvec(a: &Matrix, v: &[Complex64]) -> Vec<Complex64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

/// `H^{⊗n}` built from its entries `(-1)^{popcount(i & j)} / sqrt(2^n)`.
pub fn hadamard(n: usize) -> Matrix {
    let dim = 1usize << n;
    let scale = (dim as f64).sqrt().recip();
    (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    let sign = if (i & j).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
                    c(sign * scale)
                })
                .collect()
        })
        .collect()
}

/// DFT matrix with entries `exp(±2πi k e / N) / sqrt(N)`.
pub fn dft(n: usize, inverse: bool) -> Matrix {
    let dim = 1usize << n;
    let sign = if inverse { -1.0 } else { 1.0 };
    let scale = (dim as f64).sqrt().recip();
    (0..dim)
        .map(|k| {
            (0..dim)
                .map(|e| {
                    let phase = sign * 2.0 * PI * ((k * e) % dim) as f64 / dim as f64;
                    Complex64::from_polar(scale, phase)
                })
                .collect()
        })
        .collect()
}

/// `F ⊗ ... ⊗ F` over `d` axes of `n0` qubits each.
pub fn md_dft(d: usize, n0: usize, inverse: bool) -> Matrix {
    let f = dft(n0, inverse);
    let mut out = identity(1);
    for _ in 0..d {
        out = kron(&f, &out);
    }
    out
}

pub fn outer(v: &[Complex64]) -> Matrix {
    v.iter().map(|a| v.iter().map(|b| a * b.conj()).collect()).collect()
}

/// Partial trace by the double sum over the traced index: the full index of
/// `(kept, traced)` is supplied by `join`.
pub fn partial_trace(
    rho: &Matrix,
    kept_dim: usize,
    traced_dim: usize,
    join: impl Fn(usize, usize) -> usize,
) -> Matrix {
    let mut out = vec![vec![c(0.0); kept_dim]; kept_dim];
    for i in 0..kept_dim {
        for j in 0..kept_dim {
            for t in 0..traced_dim {
                out[i][j] += rho[join(i, t)][join(j, t)];
            }
        }
    }
    out
}

/// Joins per-axis kept and traced bits for a `(d, n0)` register whose top
/// `top` qubits per axis are traced.
pub fn top_join(d: usize, n0: usize, top: usize) -> impl Fn(usize, usize) -> usize {
    let low = n0 - top;
    move |i, t| {
        let mut full = 0;
        for s in 0..d {
            let ki = (i >> (s * low)) & ((1 << low) - 1);
            let ti = (t >> (s * top)) & ((1 << top) - 1);
            full |= (ki | (ti << low)) << (s * n0);
        }
        full
    }
}

pub fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub fn flatten(m: &Matrix) -> Vec<Complex64> {
    m.iter().flatten().copied().collect()
}
