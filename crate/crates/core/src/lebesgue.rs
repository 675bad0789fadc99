//! Quasi-Lagrange functions `v^(r)_{j,n}`, the Lebesgue function
//! `Λ_n^(r)(x) = Σ_j |v^(r)_{j,n}(x)|` and estimates of its maximum, which is
//! the sup-norm of `V_n^(r)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::evaluator::{basis_row, rising_factorial_f64, truncation_for_tail, EtaF64};

pub const DEFAULT_X_MAX: f64 = 10.0;
pub const DEFAULT_COARSE_STEP: f64 = 0.01;
pub const DEFAULT_REFINE_LEVELS: u32 = 3;

/// Tail allowance used when the truncation is picked automatically.
const TAIL_TOL: f64 = 1e-14;

/// `10n + 20r`, raised where the basis mass at `x` reaches further out.
pub fn lebesgue_truncation(n: u32, r: usize, x: f64) -> Result<usize> {
    let floor = 10 * n as usize + 20 * r;
    truncation_for_tail(n + r as u32, x, TAIL_TOL, floor)
}

/// `v^(r)_{j,n}(x)` for `j = 0..=N`.
///
/// `D^k v_{j,n} = (n)_k Σ_{i=0}^{k} (-1)^i C(k,i) v_{j-k+i,n+k}`, with
/// `v_{m,·} = 0` for `m < 0`.
pub fn quasi_lagrange_row(n: u32, r: usize, x: f64, truncation: usize) -> Result<Vec<f64>> {
    let eta = EtaF64::cached(n, r)?;
    quasi_lagrange_row_with(&eta, r, x, truncation)
}

fn quasi_lagrange_row_with(eta: &EtaF64, r: usize, x: f64, truncation: usize) -> Result<Vec<f64>> {
    let n = eta.n;
    let mut out = basis_row(n, x, truncation)?.unscaled();
    for k in 2..=r {
        let weight = eta.eval(k, x);
        if weight == 0.0 {
            continue;
        }
        let row = basis_row(n + k as u32, x, truncation)?.unscaled();
        let scale = weight * rising_factorial_f64(n, k);
        let signed = signed_binomials(k);
        for (j, slot) in out.iter_mut().enumerate() {
            let mut s = 0.0;
            for (i, c) in signed.iter().enumerate() {
                if j + i >= k {
                    s += c * row[j + i - k];
                }
            }
            *slot += scale * s;
        }
    }
    Ok(out)
}

/// `(-1)^i C(k,i)` for `i = 0..=k`.
fn signed_binomials(k: usize) -> Vec<f64> {
    let mut c = 1.0;
    let mut out = Vec::with_capacity(k + 1);
    for i in 0..=k {
        out.push(if i % 2 == 0 { c } else { -c });
        c = c * (k - i) as f64 / (i + 1) as f64;
    }
    out
}

/// `Σ_{j=0}^{N} |v^(r)_{j,n}(x)|`.
pub fn lebesgue_function(n: u32, r: usize, x: f64, truncation: usize) -> Result<f64> {
    Ok(quasi_lagrange_row(n, r, x, truncation)?
        .iter()
        .map(|v| v.abs())
        .sum())
}

fn lebesgue_auto(eta: &EtaF64, r: usize, x: f64) -> Result<f64> {
    let truncation = lebesgue_truncation(eta.n, r, x)?;
    Ok(quasi_lagrange_row_with(eta, r, x, truncation)?
        .iter()
        .map(|v| v.abs())
        .sum())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LebesgueEstimate {
    pub n: u32,
    pub r: usize,
    pub x_max: f64,
    pub coarse_step: f64,
    pub refine_levels: u32,
    pub value: f64,
    pub argmax: f64,
}

/// Max of `Λ` over `points`; ties go to the smallest `x`.
fn scan(eta: &EtaF64, r: usize, points: &[f64]) -> Result<(f64, f64)> {
    let values: Vec<f64> = points
        .par_iter()
        .map(|&x| lebesgue_auto(eta, r, x))
        .collect::<Result<_>>()?;
    let mut best = (f64::NEG_INFINITY, 0.0);
    for (&x, &v) in points.iter().zip(&values) {
        if v > best.0 {
            best = (v, x);
        }
    }
    Ok(best)
}

fn grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let count = ((hi - lo) / step + 1e-9).floor() as usize;
    let mut pts: Vec<f64> = (0..=count).map(|i| lo + i as f64 * step).collect();
    if hi - pts[count] > 1e-12 {
        pts.push(hi);
    }
    pts
}

/// Scan `[0, x_max]` at `coarse_step`, then `refine_levels` times rescan the
/// neighbourhood of the current best point at a tenth of the previous step.
pub fn norm_estimate(
    n: u32,
    r: usize,
    x_max: f64,
    coarse_step: f64,
    refine_levels: u32,
) -> Result<LebesgueEstimate> {
    if !(x_max > 0.0 && x_max.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "x_max must be positive, got {x_max}"
        )));
    }
    if !(coarse_step > 0.0 && coarse_step <= x_max) {
        return Err(Error::InvalidArgument(format!(
            "bad coarse step {coarse_step}"
        )));
    }
    let eta = EtaF64::cached(n, r.max(2))?;
    let (mut value, mut argmax) = scan(&eta, r, &grid(0.0, x_max, coarse_step))?;
    let mut step = coarse_step;
    for _ in 0..refine_levels {
        let lo = (argmax - step).max(0.0);
        let hi = (argmax + step).min(x_max);
        step /= 10.0;
        let (v, x) = scan(&eta, r, &grid(lo, hi, step))?;
        if v > value {
            value = v;
            argmax = x;
        }
    }
    Ok(LebesgueEstimate {
        n,
        r,
        x_max,
        coarse_step,
        refine_levels,
        value,
        argmax,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_zero_is_basis() {
        let row = quasi_lagrange_row(8, 0, 0.7, 200).unwrap();
        assert_eq!(row, basis_row(8, 0.7, 200).unwrap().values);
        assert_eq!(quasi_lagrange_row(8, 1, 0.7, 200).unwrap(), row);
    }

    #[test]
    fn moments_reproduced() {
        for n in [8u32, 16] {
            for r in 0..=6usize {
                for x in [0.5, 1.0, 2.0] {
                    let big_n = lebesgue_truncation(n, r, x).unwrap();
                    let row = quasi_lagrange_row(n, r, x, big_n).unwrap();
                    for s in 0..=r.min(3) as i32 {
                        let m: f64 = row
                            .iter()
                            .enumerate()
                            .map(|(j, v)| (j as f64 / n as f64).powi(s) * v)
                            .sum();
                        assert!((m - x.powi(s)).abs() < 1e-6, "n={n} r={r} x={x} s={s} {m}");
                    }
                }
            }
        }
    }

    #[test]
    fn lebesgue_at_least_one() {
        for r in 0..=5 {
            for x in [0.0, 0.02, 0.3, 4.0] {
                let l =
                    lebesgue_function(12, r, x, lebesgue_truncation(12, r, x).unwrap()).unwrap();
                assert!(l >= 1.0 - 1e-12, "r={r} x={x} {l}");
                if r < 2 {
                    assert!((l - 1.0).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn binomial_signs() {
        assert_eq!(signed_binomials(4), vec![1.0, -4.0, 6.0, -4.0, 1.0]);
        assert_eq!(signed_binomials(0), vec![1.0]);
    }

    #[test]
    fn grid_includes_end() {
        let g = grid(0.0, 1.0, 0.3);
        assert_eq!(g.len(), 5);
        assert_eq!(*g.last().unwrap(), 1.0);
        assert_eq!(grid(0.0, 1.0, 0.25).len(), 5);
    }

    #[test]
    fn trivial_norms() {
        let e = norm_estimate(8, 0, 2.0, 0.1, 1).unwrap();
        assert!((e.value - 1.0).abs() < 1e-12);
        assert!(norm_estimate(8, 2, -1.0, 0.1, 1).is_err());
        assert!(lebesgue_function(8, 2, -0.5, 10).is_err());
    }

    #[test]
    fn second_order_norm_small_n() {
        let e = norm_estimate(16, 2, DEFAULT_X_MAX, 0.05, 2).unwrap();
        assert!((e.value - 1.12).abs() < 0.05, "{e:?}");
    }
}
