use crate::error::{Error, Result};

/// Below this value of `(1+x)^{-n}` rows are built in log space.
pub const RESCALE_THRESHOLD: f64 = 1e-280;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Scale {
    Linear,
    /// True values are `values[k] * exp(log_factor)`.
    Rescaled {
        log_factor: f64,
    },
}

/// `v_{k,n}(x)` for `k = 0..=N`.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisRow {
    pub n: u32,
    pub truncation: usize,
    pub x: f64,
    pub values: Vec<f64>,
    pub scale: Scale,
}

impl BasisRow {
    /// Unscaled value of `v_{k,n}(x)` (may underflow to 0 for rescaled rows).
    pub fn value(&self, k: usize) -> f64 {
        match self.scale {
            Scale::Linear => self.values[k],
            Scale::Rescaled { log_factor } => (self.values[k].ln() + log_factor).exp(),
        }
    }

    pub fn factor(&self) -> f64 {
        match self.scale {
            Scale::Linear => 1.0,
            Scale::Rescaled { log_factor } => log_factor.exp(),
        }
    }

    /// `Σ_k c_k v_{k,n}(x)` over `k < min(len, N+1)`.
    pub fn dot(&self, coeffs: &[f64]) -> f64 {
        let s: f64 = self.values.iter().zip(coeffs).map(|(v, c)| v * c).sum();
        match self.scale {
            Scale::Linear => s,
            Scale::Rescaled { log_factor } => {
                if s == 0.0 {
                    0.0
                } else {
                    s.signum() * (s.abs().ln() + log_factor).exp()
                }
            }
        }
    }

    /// Unscaled values (entries below the `f64` range become 0).
    pub fn unscaled(&self) -> Vec<f64> {
        match self.scale {
            Scale::Linear => self.values.clone(),
            Scale::Rescaled { .. } => (0..self.values.len()).map(|k| self.value(k)).collect(),
        }
    }
}

pub(crate) fn check_x(x: f64) -> Result<()> {
    if x.is_nan() || x < 0.0 || x.is_infinite() {
        return Err(Error::NegativeAbscissa(x));
    }
    Ok(())
}

/// `v_{0,n} = (1+x)^{-n}`, `v_{k+1,n} = v_{k,n} · y (n+k)/(k+1)` with `y = x/(1+x)`.
///
/// If `(1+x)^{-n}` falls below [`RESCALE_THRESHOLD`] the row is built from
/// logarithms and normalized by its largest entry.
pub fn basis_row(n: u32, x: f64, truncation: usize) -> Result<BasisRow> {
    check_x(x)?;
    if n == 0 {
        return Err(Error::ZeroOperatorIndex);
    }
    let y = x / (1.0 + x);
    let nf = n as f64;
    let log_v0 = -nf * x.ln_1p();
    let mut values = Vec::with_capacity(truncation + 1);
    if log_v0.exp() >= RESCALE_THRESHOLD {
        let mut v = log_v0.exp();
        values.push(v);
        for k in 0..truncation {
            v *= y * (nf + k as f64) / (k as f64 + 1.0);
            values.push(v);
        }
        return Ok(BasisRow {
            n,
            truncation,
            x,
            values,
            scale: Scale::Linear,
        });
    }
    let ln_y = y.ln();
    let mut logs = Vec::with_capacity(truncation + 1);
    let mut l = log_v0;
    logs.push(l);
    for k in 0..truncation {
        l += ln_y + ((nf + k as f64) / (k as f64 + 1.0)).ln();
        logs.push(l);
    }
    let top = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    values.extend(logs.iter().map(|l| (l - top).exp()));
    Ok(BasisRow {
        n,
        truncation,
        x,
        values,
        scale: Scale::Rescaled { log_factor: top },
    })
}

/// `Σ_{k=0}^{len-1} c_k v_{k,m}(x)`.
///
/// Evaluates `(1+x)^{-m} P(y)` with `P` accumulated Horner-style from the
/// top term using the ratio `y (m+k)/(k+1)`; falls back to a log-rescaled
/// basis row when `(1+x)^{-m}` is below the double range.
pub fn weighted_series(coeffs: &[f64], m: u32, x: f64) -> Result<f64> {
    check_x(x)?;
    if coeffs.is_empty() {
        return Ok(0.0);
    }
    let base = (-(m as f64) * x.ln_1p()).exp();
    if base < RESCALE_THRESHOLD {
        return Ok(basis_row(m, x, coeffs.len() - 1)?.dot(coeffs));
    }
    let y = x / (1.0 + x);
    let mf = m as f64;
    let mut acc = *coeffs.last().unwrap();
    for k in (0..coeffs.len() - 1).rev() {
        acc = coeffs[k] + y * (mf + k as f64) / (k as f64 + 1.0) * acc;
    }
    Ok(base * acc)
}

/// Geometric majorant of `Σ_{k>N} v_{k,m}(x)`: the term ratio
/// `y (m+k)/(k+1)` decreases in `k`, so the tail is at most
/// `v_{N+1,m}(x) / (1 - q)` with `q` the ratio at `k = N+1`.
///
/// Returns `+∞` if the ratio has not dropped below 1 by `k = N+1`.
pub fn tail_mass_bound(m: u32, truncation: usize, x: f64) -> Result<f64> {
    check_x(x)?;
    let y = x / (1.0 + x);
    let k = truncation as f64 + 1.0;
    let q = y * (m as f64 + k) / (k + 1.0);
    if q >= 1.0 {
        return Ok(f64::INFINITY);
    }
    let row = basis_row(m, x, truncation + 1)?;
    Ok(row.value(truncation + 1) / (1.0 - q))
}

/// Smallest `N >= start` whose [`tail_mass_bound`] is below `tol`.
pub fn truncation_for_tail(m: u32, x: f64, tol: f64, start: usize) -> Result<usize> {
    check_x(x)?;
    let mean = m as f64 * x;
    let sd = (m as f64 * x * (1.0 + x)).sqrt();
    let mut n = start.max((mean + 8.0 * sd) as usize);
    loop {
        if tail_mass_bound(m, n, x)? < tol {
            // shrink back while the bound still holds
            while n > start && tail_mass_bound(m, n - 1, x)? < tol {
                n -= 1;
            }
            return Ok(n);
        }
        n += n / 4 + 8;
    }
}
