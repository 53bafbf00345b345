use std::collections::BTreeMap;
use std::f64::consts::SQRT_2;

use crate::error::{Error, Result};
use crate::index_sets::MultiIndex;

const DOMAIN_TOL: f64 = 1e-12;

/// `T_k(x) = cos(k arccos x)` on `[−1, 1]`.
pub fn chebyshev_t(k: u32, x: f64) -> f64 {
    (k as f64 * x.clamp(-1.0, 1.0).acos()).cos()
}

/// Orthonormal tensor basis `η_k(x) = √2^{|k|₀} ∏_j T_{k_j}(x_j)`.
pub fn eval_cheb_basis(k: &MultiIndex, x: &[f64]) -> Result<f64> {
    if x.len() != k.dim() {
        return Err(Error::DimensionMismatch {
            expected: k.dim(),
            found: x.len(),
        });
    }
    let mut value = 1.0;
    for (&kj, &xj) in k.coords().iter().zip(x) {
        if xj.is_nan() || xj.abs() > 1.0 + DOMAIN_TOL {
            return Err(Error::Domain(xj.to_string()));
        }
        if kj != 0 {
            value *= SQRT_2 * chebyshev_t(kj, xj);
        }
    }
    Ok(value)
}

/// A finite Chebyshev expansion `Σ_k c_k η_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChebSeries {
    dim: usize,
    coeffs: BTreeMap<MultiIndex, f64>,
}

impl ChebSeries {
    pub fn new(dim: usize, coeffs: impl IntoIterator<Item = (MultiIndex, f64)>) -> Result<Self> {
        let coeffs: BTreeMap<MultiIndex, f64> = coeffs.into_iter().collect();
        if let Some(k) = coeffs.keys().find(|k| k.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: k.dim(),
            });
        }
        if let Some(c) = coeffs.values().find(|c| !c.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "coefficient {c} is not finite"
            )));
        }
        Ok(ChebSeries { dim, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coefficients(&self) -> &BTreeMap<MultiIndex, f64> {
        &self.coeffs
    }

    /// Coefficient of `η_k`, zero outside the support.
    pub fn coefficient(&self, k: &MultiIndex) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        self.coeffs
            .iter()
            .try_fold(0.0, |acc, (k, c)| Ok(acc + c * eval_cheb_basis(k, x)?))
    }

    /// `max_k |self_k − other_k|` over the union of supports.
    pub fn max_abs_diff(&self, other: &ChebSeries) -> f64 {
        self.coeffs
            .keys()
            .chain(other.coeffs.keys())
            .map(|k| (self.coefficient(k) - other.coefficient(k)).abs())
            .fold(0.0, f64::max)
    }
}
