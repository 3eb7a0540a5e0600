//! Shot sampling, error statistics and cost models.
//!
//! Shots are drawn with a ChaCha8 generator seeded through
//! `SeedableRng::seed_from_u64`, so a histogram is reproducible from its
//! recorded seed on every platform. A multinomial draw over `K` outcomes is
//! realized as `K - 1` conditional binomial draws.

use std::fmt::Write as _;
use std::io;
use std::ops::RangeInclusive;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution as _};

use crate::error::{Error, Result};
use crate::register::RegisterLayout;
use crate::resampler::Direction;
use crate::sim::Distribution;

/// Outcome counts of `shots` measurements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShotHistogram {
    counts: Vec<u64>,
    shots: u64,
    seed: u64,
    layout: RegisterLayout,
}

impl ShotHistogram {
    pub fn from_counts(layout: RegisterLayout, counts: Vec<u64>, seed: u64) -> Result<Self> {
        if counts.len() != layout.len() {
            return Err(Error::arg(format!(
                "expected {} counts, got {}",
                layout.len(),
                counts.len()
            )));
        }
        let shots = counts.iter().sum();
        Ok(Self { counts, shots, seed, layout })
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Total number of shots `M`.
    pub fn shots(&self) -> u64 {
        self.shots
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn layout(&self) -> &RegisterLayout {
        &self.layout
    }

    /// `counts / M`, all zero for an empty histogram.
    pub fn frequencies(&self) -> Vec<f64> {
        let m = self.shots.max(1) as f64;
        self.counts.iter().map(|&c| c as f64 / m).collect()
    }

    /// Pools the counts of two histograms over the same layout. The result
    /// keeps the seed of `self`.
    pub fn merge(&self, other: &ShotHistogram) -> Result<ShotHistogram> {
        if self.layout != other.layout {
            return Err(Error::arg("cannot merge histograms over different layouts"));
        }
        let counts = self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect();
        Ok(ShotHistogram {
            counts,
            shots: self.shots + other.shots,
            seed: self.seed,
            layout: self.layout,
        })
    }
}

fn draw_into(dist: &Distribution, shots: u64, rng: &mut ChaCha8Rng, counts: &mut [u64]) {
    let mut remaining = shots;
    let mut mass = 1.0f64;
    let probs = dist.probabilities();
    for (i, &p) in probs.iter().enumerate() {
        if remaining == 0 {
            break;
        }
        let k = if i + 1 == probs.len() || p >= mass {
            remaining
        } else if p <= 0.0 {
            0
        } else {
            Binomial::new(remaining, (p / mass).clamp(0.0, 1.0))
                .expect("probability clamped to [0, 1]")
                .sample(rng)
        };
        counts[i] += k;
        remaining -= k;
        mass -= p;
    }
}

/// `shots` independent measurements of `dist`.
pub fn sample_shots(dist: &Distribution, shots: u64, seed: u64) -> Result<ShotHistogram> {
    if shots == 0 {
        return Err(Error::arg("at least one shot is required"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = vec![0; dist.len()];
    draw_into(dist, shots, &mut rng, &mut counts);
    ShotHistogram::from_counts(*dist.layout(), counts, seed)
}

/// Mean over outcomes of the estimator variance `4 I² f (1 - f) / M`.
pub fn mean_mse(hist: &ShotHistogram, intensity: f64) -> f64 {
    if hist.shots == 0 {
        return f64::INFINITY;
    }
    let m = hist.shots as f64;
    let freqs = hist.frequencies();
    let total: f64 = freqs
        .iter()
        .map(|f| 4.0 * intensity * intensity * f * (1.0 - f) / m)
        .sum();
    total / freqs.len() as f64
}

/// Upper bound `4 x² 2^(d n1) / M` on the mean MSE, where `x` is the mean
/// output value.
pub fn mse_bound(mean_output: f64, dims: usize, out_qubits: usize, shots: u64) -> f64 {
    4.0 * mean_output * mean_output * ((dims * out_qubits) as f64).exp2() / shots as f64
}

/// Scale entering the shot-count formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ShotTarget {
    /// Mean output value of the reconstructed signal.
    MeanOutput(f64),
    /// Number of levels `L` of a digital signal (worst case).
    BitLevels(u32),
}

impl ShotTarget {
    fn scale(self) -> f64 {
        match self {
            ShotTarget::MeanOutput(x) => x,
            ShotTarget::BitLevels(l) => f64::from(l),
        }
    }
}

/// `ceil(4 x² 2^(d n1) / δ²)`.
pub fn shots_required(target: ShotTarget, mse: f64, dims: usize, out_qubits: usize) -> Result<u64> {
    if !(mse > 0.0) {
        return Err(Error::arg(format!("target mean MSE must be positive, got {mse}")));
    }
    let x = target.scale();
    if !(x.is_finite() && x >= 0.0) {
        return Err(Error::arg(format!("invalid signal scale {x}")));
    }
    let m = (4.0 * x * x * ((dims * out_qubits) as f64).exp2() / mse).ceil();
    if m >= u64::MAX as f64 {
        return Err(Error::arg("required shot count overflows"));
    }
    Ok(m as u64)
}

/// Samples `batch` shots at a time until the mean MSE reaches `mse`.
pub fn adaptive_sample(
    dist: &Distribution,
    mse: f64,
    intensity: f64,
    batch: u64,
    seed: u64,
) -> Result<ShotHistogram> {
    if !(mse > 0.0) {
        return Err(Error::arg(format!("target mean MSE must be positive, got {mse}")));
    }
    if batch == 0 {
        return Err(Error::arg("batch size must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = vec![0; dist.len()];
    loop {
        draw_into(dist, batch, &mut rng, &mut counts);
        let hist = ShotHistogram::from_counts(*dist.layout(), counts.clone(), seed)?;
        if mean_mse(&hist, intensity) <= mse {
            return Ok(hist);
        }
    }
}

/// Range of discarded qubits per axis for which downsampling beats the
/// classical cost.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdvantageBounds {
    pub lower: f64,
    /// Exclusive upper end, equal to `n0`.
    pub upper: usize,
    pub empty: bool,
}

/// `lower = (2c + 3 + 2 log2 n0 + log2(d / δ²)) / d`, `upper = n0`.
pub fn advantage_bounds(dims: usize, bits: u32, mse: f64, n0: usize) -> Result<AdvantageBounds> {
    if dims == 0 || bits == 0 || n0 == 0 {
        return Err(Error::arg("dimensions, bit depth and register size must be positive"));
    }
    if !(mse > 0.0) {
        return Err(Error::arg(format!("target mean MSE must be positive, got {mse}")));
    }
    let d = dims as f64;
    let lower = (2.0 * f64::from(bits) + 3.0 + 2.0 * (n0 as f64).log2() + (d / mse).log2()) / d;
    Ok(AdvantageBounds { lower, upper: n0, empty: lower >= n0 as f64 })
}

/// Ratio of classical to quantum cost for resampling by `ntilde` qubits per
/// axis from `n0`-qubit axes.
///
/// Down: `2^(d n0) / (8 d L² n0² 2^(d (n0 - ñ)) / δ²)`.
/// Up: `δ² / (8 d L² (n0 + ñ)²)`.
pub fn complexity_ratio(
    dims: usize,
    levels: f64,
    mse: f64,
    n0: usize,
    ntilde: usize,
    direction: Direction,
) -> f64 {
    let d = dims as f64;
    let prefactor = 8.0 * d * levels * levels / mse;
    match direction {
        Direction::Down => {
            let log2_ratio = d * ntilde as f64 - (prefactor * (n0 * n0) as f64).log2();
            log2_ratio.exp2()
        }
        Direction::Up => {
            let n1 = (n0 + ntilde) as f64;
            1.0 / (prefactor * n1 * n1)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdvantageCell {
    pub n0: usize,
    pub ntilde: usize,
    pub ratio: f64,
    pub lower_bound: f64,
    pub in_advantage_region: bool,
}

/// Downsampling cost ratios over a grid of register sizes.
#[derive(Debug, Clone, PartialEq)]
pub struct AdvantageMap {
    pub dims: usize,
    pub bits: u32,
    pub mse: f64,
    pub cells: Vec<AdvantageCell>,
}

pub const ADVANTAGE_CSV_HEADER: &str = "n0,ntilde,ratio,lower_bound,in_advantage_region";

impl AdvantageMap {
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(48 * (self.cells.len() + 1));
        out.push_str(ADVANTAGE_CSV_HEADER);
        out.push('\n');
        for c in &self.cells {
            let _ = writeln!(
                out,
                "{},{},{:.6e},{:.6},{}",
                c.n0, c.ntilde, c.ratio, c.lower_bound, c.in_advantage_region
            );
        }
        out
    }

    pub fn write_csv<W: io::Write>(&self, mut w: W) -> io::Result<()> {
        w.write_all(self.to_csv().as_bytes())
    }
}

/// Tabulates [`complexity_ratio`] for downsampling over every `(n0, ñ)` with
/// `1 <= ñ < n0` in the given ranges, with `L = 2^bits`.
pub fn advantage_map(
    dims: usize,
    bits: u32,
    mse: f64,
    n0_range: RangeInclusive<usize>,
    ntilde_range: RangeInclusive<usize>,
) -> Result<AdvantageMap> {
    if bits >= 64 {
        return Err(Error::arg(format!("bit depth {bits} is too large")));
    }
    let levels = (1u64 << bits) as f64;
    let mut cells = Vec::new();
    for n0 in n0_range {
        let bounds = advantage_bounds(dims, bits, mse, n0)?;
        for ntilde in ntilde_range.clone() {
            if ntilde == 0 || ntilde >= n0 {
                continue;
            }
            cells.push(AdvantageCell {
                n0,
                ntilde,
                ratio: complexity_ratio(dims, levels, mse, n0, ntilde, Direction::Down),
                lower_bound: bounds.lower,
                in_advantage_region: ntilde as f64 >= bounds.lower,
            });
        }
    }
    if cells.is_empty() {
        return Err(Error::arg("advantage grid has no cell with 1 <= ntilde < n0"));
    }
    Ok(AdvantageMap { dims, bits, mse, cells })
}
