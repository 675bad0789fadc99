//! Floating-point evaluation of the truncated Baskakov operator
//! `V_{n,N} f(x) = Σ_{k=0}^{N} f(k/n) v_{k,n}(x)`, its derivatives and the
//! left quasi-interpolants `V_{n,N}^(r) f = Σ_{p<=r} η_p D^p V_{n,N} f`.
//!
//! Derivatives use `D^p V_n f = (n)_p Σ_k Δ^p f_k v_{k,n+p}`, so everything
//! reduces to weighted sums of forward differences of the samples.

mod basis;
pub mod closed;

pub use basis::{
    basis_row, tail_mass_bound, truncation_for_tail, weighted_series, BasisRow, Scale,
    RESCALE_THRESHOLD,
};
pub use closed::{qi_eval_closed, shifted_series};

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::coeffs::{eta_recurrence, CoeffTable, Family};
use crate::error::{Error, Result};

/// Uniform samples `values[k] = f(k/n)`, `k = 0..=K`.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleSet {
    n: u32,
    values: Vec<f64>,
}

impl SampleSet {
    pub fn new(n: u32, values: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOperatorIndex);
        }
        if values.is_empty() {
            return Err(Error::MalformedSamples("no samples".into()));
        }
        if let Some(k) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::MalformedSamples(format!("sample {k} is not finite")));
        }
        Ok(SampleSet { n, values })
    }

    /// Samples `f(k/n)` for `k = 0..=last`.
    pub fn from_fn(n: u32, last: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let nf = n as f64;
        SampleSet::new(n, (0..=last).map(|k| f(k as f64 / nf)).collect())
    }

    /// CSV with header `k,value` and rows `k = 0, 1, ..., K` in order.
    pub fn from_csv<R: std::io::Read>(n: u32, reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(reader);
        let headers = rdr
            .headers()
            .map_err(|e| Error::MalformedSamples(e.to_string()))?;
        if headers.iter().collect::<Vec<_>>() != ["k", "value"] {
            return Err(Error::MalformedSamples(format!(
                "expected header 'k,value', found '{}'",
                headers.iter().collect::<Vec<_>>().join(",")
            )));
        }
        let mut values = Vec::new();
        for (line, record) in rdr.records().enumerate() {
            let record = record.map_err(|e| Error::MalformedSamples(e.to_string()))?;
            let k: usize = record[0].parse().map_err(|_| {
                Error::MalformedSamples(format!("row {}: bad index '{}'", line + 1, &record[0]))
            })?;
            if k != values.len() {
                return Err(Error::MalformedSamples(format!(
                    "row {}: expected k = {}, found {k}",
                    line + 1,
                    values.len()
                )));
            }
            let v: f64 = record[1].parse().map_err(|_| {
                Error::MalformedSamples(format!("row {}: bad value '{}'", line + 1, &record[1]))
            })?;
            values.push(v);
        }
        SampleSet::new(n, values)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("k,value\n");
        for (k, v) in self.values.iter().enumerate() {
            s.push_str(&format!("{k},{v:e}\n"));
        }
        s
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Largest sample index `K`.
    pub fn last_index(&self) -> usize {
        self.values.len() - 1
    }

    fn prefix(&self, truncation: usize) -> Result<&[f64]> {
        if truncation > self.last_index() {
            return Err(Error::InsufficientSamples {
                truncation,
                available: self.values.len(),
            });
        }
        Ok(&self.values[..=truncation])
    }
}

/// Operator index `n`, QI order `r`, series truncation `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QiConfig {
    pub n: u32,
    pub order: usize,
    pub truncation: usize,
}

impl QiConfig {
    pub fn new(n: u32, order: usize, truncation: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOperatorIndex);
        }
        if order > truncation {
            return Err(Error::OrderExceedsTruncation { order, truncation });
        }
        Ok(QiConfig {
            n,
            order,
            truncation,
        })
    }

    /// `N = 5n`.
    pub fn with_default_truncation(n: u32, order: usize) -> Result<Self> {
        QiConfig::new(n, order, 5 * n as usize)
    }
}

/// `Δ^p` applied `p` times: returns `Δ^p u_k` for `k = 0..=K-p`.
pub fn forward_diff(values: &[f64], p: usize) -> Result<Vec<f64>> {
    if values.len() < p + 1 {
        return Err(Error::DifferenceOrderTooHigh {
            order: p,
            available: values.len(),
        });
    }
    let mut d = values.to_vec();
    for _ in 0..p {
        for k in 0..d.len() - 1 {
            d[k] = d[k + 1] - d[k];
        }
        d.pop();
    }
    Ok(d)
}

/// `(n)_p` in floating point.
pub fn rising_factorial_f64(n: u32, p: usize) -> f64 {
    (0..p).map(|i| n as f64 + i as f64).product()
}

/// `V_{n,N} f(x)`.
pub fn baskakov_eval(samples: &SampleSet, truncation: usize, x: f64) -> Result<f64> {
    weighted_series(samples.prefix(truncation)?, samples.n, x)
}

/// `D^p V_{n,N} f(x) = (n)_p Σ_{k=0}^{N-p} Δ^p f_k v_{k,n+p}(x)`.
pub fn deriv_eval(samples: &SampleSet, truncation: usize, p: usize, x: f64) -> Result<f64> {
    if p > truncation {
        return Err(Error::OrderExceedsTruncation {
            order: p,
            truncation,
        });
    }
    let d = forward_diff(samples.prefix(truncation)?, p)?;
    Ok(rising_factorial_f64(samples.n, p) * weighted_series(&d, samples.n + p as u32, x)?)
}

/// `η_r^(n)` with coefficients rounded to `f64`, for Horner evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct EtaF64 {
    pub n: u32,
    pub polys: Vec<Vec<f64>>,
}

impl EtaF64 {
    pub fn from_table(table: &CoeffTable) -> Result<Self> {
        if table.family != Family::Eta {
            return Err(Error::InvalidArgument("expected an eta table".into()));
        }
        Ok(EtaF64 {
            n: table.n,
            polys: table.polys.iter().map(|p| p.to_f64_coeffs()).collect(),
        })
    }

    /// Shared, lazily extended table covering at least `r_max`.
    pub fn cached(n: u32, r_max: usize) -> Result<Arc<EtaF64>> {
        static CACHE: OnceLock<RwLock<HashMap<u32, Arc<EtaF64>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(hit) = cache.read().expect("eta cache poisoned").get(&n) {
            if hit.r_max() >= r_max {
                return Ok(hit.clone());
            }
        }
        let fresh = Arc::new(EtaF64::from_table(&eta_recurrence(n, r_max.max(2))?)?);
        let mut guard = cache.write().expect("eta cache poisoned");
        let entry = guard.entry(n).or_insert_with(|| fresh.clone());
        if entry.r_max() < fresh.r_max() {
            *entry = fresh;
        }
        Ok(entry.clone())
    }

    pub fn r_max(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn eval(&self, r: usize, x: f64) -> f64 {
        self.polys[r].iter().rev().fold(0.0, |acc, c| acc * x + c)
    }
}

/// `V_{n,N}^(r) f(x) = Σ_{k=0}^{r} η_k(x) D^k V_{n,N} f(x)`.
pub fn qi_eval(samples: &SampleSet, cfg: &QiConfig, x: f64, eta: &EtaF64) -> Result<f64> {
    QuasiInterpolant::with_eta(samples.clone(), *cfg, Arc::new(eta.clone()))?.eval(x)
}

/// Quasi-interpolant with the forward differences of the samples
/// precomputed, for repeated evaluation.
#[derive(Clone, Debug)]
pub struct QuasiInterpolant {
    cfg: QiConfig,
    eta: Arc<EtaF64>,
    /// `diffs[p] = Δ^p f_k`, `k = 0..=N-p`.
    diffs: Vec<Vec<f64>>,
}

impl QuasiInterpolant {
    pub fn new(samples: &SampleSet, cfg: QiConfig) -> Result<Self> {
        let eta = EtaF64::cached(cfg.n, cfg.order)?;
        QuasiInterpolant::with_eta(samples.clone(), cfg, eta)
    }

    pub fn with_eta(samples: SampleSet, cfg: QiConfig, eta: Arc<EtaF64>) -> Result<Self> {
        if samples.n != cfg.n {
            return Err(Error::InvalidArgument(format!(
                "samples on grid 1/{} used with n = {}",
                samples.n, cfg.n
            )));
        }
        if eta.n != cfg.n {
            return Err(Error::MismatchedTable {
                table_n: eta.n,
                config_n: cfg.n,
            });
        }
        if eta.r_max() < cfg.order {
            return Err(Error::TableTooShort {
                requested: cfg.order,
                available: eta.r_max(),
            });
        }
        if cfg.order > cfg.truncation {
            return Err(Error::OrderExceedsTruncation {
                order: cfg.order,
                truncation: cfg.truncation,
            });
        }
        let mut diffs = Vec::with_capacity(cfg.order + 1);
        diffs.push(samples.prefix(cfg.truncation)?.to_vec());
        for p in 1..=cfg.order {
            diffs.push(forward_diff(&diffs[p - 1], 1)?);
        }
        Ok(QuasiInterpolant { cfg, eta, diffs })
    }

    pub fn config(&self) -> QiConfig {
        self.cfg
    }

    /// `D^p V_{n,N} f(x)` for `p <= r`.
    pub fn derivative(&self, p: usize, x: f64) -> Result<f64> {
        let n = self.cfg.n;
        Ok(rising_factorial_f64(n, p) * weighted_series(&self.diffs[p], n + p as u32, x)?)
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        Ok(*self.eval_all_orders(x)?.last().expect("order >= 0"))
    }

    /// `[V^(0) f(x), V^(1) f(x), ..., V^(r) f(x)]` sharing the derivative sums.
    pub fn eval_all_orders(&self, x: f64) -> Result<Vec<f64>> {
        let mut out = Vec::with_capacity(self.cfg.order + 1);
        let mut acc = 0.0;
        for p in 0..=self.cfg.order {
            if p != 1 {
                let eta = self.eta.eval(p, x);
                if eta != 0.0 {
                    acc += eta * self.derivative(p, x)?;
                }
            }
            out.push(acc);
        }
        Ok(out)
    }
}
