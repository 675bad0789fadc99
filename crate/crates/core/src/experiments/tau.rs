//! Closed forms of the single terms `η_r D^r V_n f` for `r = 5..=9` in the
//! variables `y = x/(1+x)`, `z = y + 1/y`:
//!
//! ```text
//! η_r D^r V_n f = (c_r n / r!) (1+x)^{-n} τ_r(y) Σ_k C(n+k+r-1, k) Δ^r f_k y^k
//! ```
//!
//! with `c_r = 4, -5, 6, -7, 8`. The printed `τ_r` are kept next to the ones
//! that agree with the generic composition.

use serde::Serialize;

use super::registry::TestFunction;
use crate::error::{Error, Result};
use crate::evaluator::{deriv_eval, forward_diff, shifted_series, EtaF64, SampleSet};

/// `τ_r(y) = y^a (1+y)^b P(z)`.
#[derive(Clone, Copy, Debug)]
pub struct TauForm {
    pub r: usize,
    pub c: i32,
    pub y_power: i32,
    pub one_plus_y: bool,
    /// Ascending coefficients of `P` in `z`, as functions of `n`.
    pub z_coeffs: fn(f64) -> Vec<f64>,
    pub note: &'static str,
}

impl TauForm {
    pub fn eval(&self, n: f64, y: f64) -> f64 {
        if y == 0.0 {
            return 0.0;
        }
        let z = y + 1.0 / y;
        let p = (self.z_coeffs)(n)
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * z + c);
        let b = if self.one_plus_y { 1.0 + y } else { 1.0 };
        y.powi(self.y_power) * b * p
    }
}

fn t5(n: f64) -> Vec<f64> {
    vec![-5.0 * n, 6.0]
}

fn t6(n: f64) -> Vec<f64> {
    vec![3.0 * n * n - 34.0 * n - 24.0, -(26.0 * n - 24.0), 24.0]
}

fn t7_printed(n: f64) -> Vec<f64> {
    vec![5.0 * (7.0 * n * n - 14.0 * n - 120.0), -154.0 * n, 120.0]
}

fn t7(n: f64) -> Vec<f64> {
    vec![35.0 * n * n - 70.0 * n - 120.0, -154.0 * n, 120.0]
}

fn t8_printed(n: f64) -> Vec<f64> {
    vec![
        -5.0 * (3.0 * n.powi(3) - 100.0 * n * n + 340.0 * n + 544.0),
        4.0 * (85.0 * n * n - 152.0 * n - 110.0),
        -36.0 * (29.0 * n - 20.0),
        720.0,
    ]
}

fn t8(n: f64) -> Vec<f64> {
    vec![
        -15.0 * n.powi(3) + 500.0 * n * n + 300.0 * n - 720.0,
        340.0 * n * n - 1608.0 * n - 1440.0,
        720.0 - 1044.0 * n,
        720.0,
    ]
}

fn t9_printed(n: f64) -> Vec<f64> {
    let g2 = 36.0 * (223.0 * n + 120.0);
    let g1 = 4.0 * (826.0 * n * n - 1197.0 * n - 360.0);
    let g0 = 5.0 * (63.0 * n.powi(3) - 490.0 * n * n - 1152.0 * n + 1152.0);
    vec![-g0, g1, -g2, 5040.0]
}

fn t9(n: f64) -> Vec<f64> {
    vec![
        -315.0 * n.powi(3) + 2450.0 * n * n + 5760.0 * n,
        3304.0 * n * n - 4788.0 * n - 10080.0,
        -8028.0 * n,
        5040.0,
    ]
}

const fn form(
    r: usize,
    c: i32,
    y_power: i32,
    one_plus_y: bool,
    z: fn(f64) -> Vec<f64>,
    note: &'static str,
) -> TauForm {
    TauForm {
        r,
        c,
        y_power,
        one_plus_y,
        z_coeffs: z,
        note,
    }
}

/// As printed; the trailing `π_4(z)` after the `r = 6` sum is dropped.
pub const PRINTED_TAU: [TauForm; 5] = [
    form(5, 4, 2, true, t5, ""),
    form(6, -5, 3, false, t6, "trailing pi_4(z) factor dropped"),
    form(7, 6, 3, true, t7_printed, ""),
    form(8, -7, 4, false, t8_printed, ""),
    form(9, 8, 4, true, t9_printed, ""),
];

/// Forms consistent with the coefficient recurrence.
pub const CORRECTED_TAU: [TauForm; 5] = [
    form(5, 4, 2, true, t5, ""),
    form(6, -5, 3, false, t6, ""),
    form(7, 6, 3, true, t7, "constant term 35n^2 - 70n - 120"),
    form(
        8,
        -7,
        4,
        false,
        t8,
        "z and constant coefficients re-derived",
    ),
    form(
        9,
        8,
        4,
        true,
        t9,
        "z^2, z and constant coefficients re-derived",
    ),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TauVariant {
    Printed,
    Corrected,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TauRow {
    pub variant: TauVariant,
    pub r: usize,
    pub n: u32,
    pub x: f64,
    pub closed: f64,
    pub generic: f64,
    pub relative_difference: f64,
    pub agrees: bool,
    pub note: &'static str,
}

/// Agreement threshold for the two evaluations of one term.
pub const TAU_TOLERANCE: f64 = 1e-11;

fn factorial(r: usize) -> f64 {
    (1..=r).map(|i| i as f64).product()
}

/// Both evaluations of `η_r D^r V_{n,N} f` for each `r`, `x` and variant.
pub fn tau_consistency(
    f: &TestFunction,
    r_list: &[usize],
    n: u32,
    truncation: usize,
    x_points: &[f64],
) -> Result<Vec<TauRow>> {
    let samples = SampleSet::from_fn(n, truncation, |t| f.eval(t))?;
    let top = r_list.iter().copied().max().unwrap_or(5);
    let eta = EtaF64::cached(n, top)?;
    let mut rows = Vec::new();
    for (variant, forms) in [
        (TauVariant::Printed, &PRINTED_TAU),
        (TauVariant::Corrected, &CORRECTED_TAU),
    ] {
        for &r in r_list {
            let form = forms.iter().find(|t| t.r == r).ok_or_else(|| {
                Error::InvalidArgument(format!("closed forms cover r = 5..=9, got {r}"))
            })?;
            let d = forward_diff(samples.values(), r)?;
            for &x in x_points {
                let y = x / (1.0 + x);
                let nf = n as f64;
                let closed = form.c as f64 * nf / factorial(r)
                    * form.eval(nf, y)
                    * shifted_series(&d, n, r, x)?;
                let generic = eta.eval(r, x) * deriv_eval(&samples, truncation, r, x)?;
                let scale = closed.abs().max(generic.abs());
                let relative_difference = if scale == 0.0 {
                    0.0
                } else {
                    (closed - generic).abs() / scale
                };
                rows.push(TauRow {
                    variant,
                    r,
                    n,
                    x,
                    closed,
                    generic,
                    relative_difference,
                    agrees: relative_difference <= TAU_TOLERANCE,
                    note: form.note,
                });
            }
        }
    }
    Ok(rows)
}
