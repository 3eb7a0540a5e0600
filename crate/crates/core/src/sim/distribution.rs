use super::DISTRIBUTION_TOL;
use crate::error::{Error, Result};
use crate::register::RegisterLayout;

/// Exact outcome probabilities of a computational-basis measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    probabilities: Vec<f64>,
    layout: RegisterLayout,
}

impl Distribution {
    pub fn new(layout: RegisterLayout, probabilities: Vec<f64>) -> Result<Self> {
        if probabilities.len() != layout.len() {
            return Err(Error::arg(format!(
                "expected {} probabilities, got {}",
                layout.len(),
                probabilities.len()
            )));
        }
        if let Some(p) = probabilities.iter().find(|p| !(**p >= 0.0)) {
            return Err(Error::arg(format!("invalid probability {p}")));
        }
        let sum: f64 = probabilities.iter().sum();
        if (sum - 1.0).abs() > DISTRIBUTION_TOL {
            return Err(Error::arg(format!("probabilities sum to {sum}, expected 1")));
        }
        Ok(Self { probabilities, layout })
    }

    pub(crate) fn from_raw(layout: RegisterLayout, probabilities: Vec<f64>) -> Self {
        Self { probabilities, layout }
    }

    pub fn layout(&self) -> &RegisterLayout {
        &self.layout
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn len(&self) -> usize {
        self.probabilities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probabilities.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.probabilities.iter().sum()
    }

    pub fn max_abs_diff(&self, other: &Distribution) -> f64 {
        self.probabilities
            .iter()
            .zip(&other.probabilities)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}
