//! Explicit forms of the low-order correction terms in the variables
//! `y = x/(1+x)` and `z = y + 1/y`, used as an independent path for checking
//! the generic `η_p D^p V_n f` composition:
//!
//! ```text
//! η_2 D^2 V_n f = -(n/2) (1+x)^{-n} y            Σ C(n+k+1,k) Δ^2 f_k y^k
//! η_3 D^3 V_n f =  (n/3) (1+x)^{-n} y (1+y)      Σ C(n+k+2,k) Δ^3 f_k y^k
//! η_4 D^4 V_n f = -(n/8) (1+x)^{-n} y^2 (2z-(n-2)) Σ C(n+k+3,k) Δ^4 f_k y^k
//! ```

use super::basis::{check_x, RESCALE_THRESHOLD};
use super::{baskakov_eval, forward_diff, QiConfig, SampleSet};
use crate::error::{Error, Result};

/// `(1+x)^{-n} Σ_{k} C(n+k+p-1, k) d_k y^k`, summed forward with the binomial
/// ratio `(n+p+k)/(k+1)`.
pub fn shifted_series(d: &[f64], n: u32, p: usize, x: f64) -> Result<f64> {
    check_x(x)?;
    let base = (-(n as f64) * x.ln_1p()).exp();
    if base < RESCALE_THRESHOLD {
        return Err(Error::InvalidArgument(format!(
            "closed forms need (1+x)^-n >= {RESCALE_THRESHOLD:e}; n = {n}, x = {x}"
        )));
    }
    let y = x / (1.0 + x);
    let m = (n as usize + p) as f64;
    let mut term = base;
    let mut acc = 0.0;
    for (k, dk) in d.iter().enumerate() {
        acc += term * dk;
        term *= y * (m + k as f64) / (k as f64 + 1.0);
    }
    Ok(acc)
}

/// Polynomial factor of the order-`p` correction for `p ∈ {2, 3, 4}` as a
/// function of `y` (the `y^2 (2z-(n-2))` factor is expanded to
/// `2y - (n-2) y^2 + 2y^3`, so `y = 0` needs no limit).
fn low_order_factor(p: usize, n: f64, y: f64) -> f64 {
    match p {
        2 => -(n / 2.0) * y,
        3 => (n / 3.0) * y * (1.0 + y),
        4 => -(n / 8.0) * (2.0 * y - (n - 2.0) * y * y + 2.0 * y * y * y),
        _ => unreachable!("low-order closed forms cover p = 2..=4"),
    }
}

/// `V_{n,N}^(r) f(x)` for `r ∈ {2, 3, 4}` through the closed forms.
pub fn qi_eval_closed(samples: &SampleSet, cfg: &QiConfig, x: f64) -> Result<f64> {
    if !(2..=4).contains(&cfg.order) {
        return Err(Error::InvalidArgument(format!(
            "closed forms exist for r in 2..=4, got {}",
            cfg.order
        )));
    }
    if samples.n() != cfg.n {
        return Err(Error::InvalidArgument(
            "sample grid does not match n".into(),
        ));
    }
    let mut value = baskakov_eval(samples, cfg.truncation, x)?;
    let prefix = &samples.values()[..=cfg.truncation];
    let y = x / (1.0 + x);
    for p in 2..=cfg.order {
        let d = forward_diff(prefix, p)?;
        value += low_order_factor(p, cfg.n as f64, y) * shifted_series(&d, cfg.n, p, x)?;
    }
    Ok(value)
}
