//! Voronovskaya-type rate checks: `n^ℓ (f − V_n^(q) f)(x)` against its limit.

use num_traits::{One, Zero};
use serde::Serialize;

use super::registry::TestFunction;
use crate::coeffs::{
    apply_differential, asymptotic_poly, eta_recurrence, scaling_power, theta_recurrence,
    AsymptoticFamily,
};
use crate::error::{Error, Result};
use crate::evaluator::{truncation_for_tail, QiConfig, QuasiInterpolant, SampleSet};
use crate::exactalg::{int, to_f64, Poly, Rational};

/// Which of the two limits: `q = 2r` (even) or `q = 2r+1` (odd).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn qi_order(self, r: usize) -> usize {
        match self {
            Parity::Even => 2 * r,
            Parity::Odd => 2 * r + 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RateReport {
    pub function: String,
    pub r: usize,
    pub parity: Parity,
    pub qi_order: usize,
    /// `ℓ = r + 1`
    pub power: u32,
    pub x: f64,
    pub n_list: Vec<u32>,
    pub scaled_errors: Vec<f64>,
    pub target: f64,
}

impl RateReport {
    pub fn deviations(&self) -> Vec<f64> {
        self.scaled_errors
            .iter()
            .map(|s| (s - self.target).abs())
            .collect()
    }

    /// `|scaled − target|` strictly decreasing along `n_list`.
    pub fn is_monotone(&self) -> bool {
        self.deviations().windows(2).all(|w| w[1] < w[0])
    }

    pub fn final_relative_deviation(&self) -> f64 {
        let last = *self.deviations().last().unwrap_or(&f64::NAN);
        if self.target == 0.0 {
            last
        } else {
            last / self.target.abs()
        }
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,scaled_error,target\n");
        for (n, v) in self.n_list.iter().zip(&self.scaled_errors) {
            s.push_str(&format!("{n},{v:.10e},{:.10e}\n", self.target));
        }
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!(
            "{} at x = {}, order {}: n^{} (f - V f)(x) -> {:.6e}\n\n| n | scaled error | deviation |\n|---|---|---|\n",
            self.function, self.x, self.qi_order, self.power, self.target
        );
        for ((n, v), d) in self
            .n_list
            .iter()
            .zip(&self.scaled_errors)
            .zip(self.deviations())
        {
            s.push_str(&format!("| {n} | {v:.6e} | {d:.3e} |\n"));
        }
        s
    }
}

fn eta_bar(index: usize) -> Result<Poly> {
    Ok(asymptotic_poly(index, AsymptoticFamily::EtaBar)?.poly)
}

/// Limit of the scaled error for a function with derivatives `deriv(k)`.
fn limit_value(
    r: usize,
    parity: Parity,
    x: f64,
    deriv: impl Fn(usize) -> Result<f64>,
) -> Result<f64> {
    let q = parity.qi_order(r);
    let lead = to_f64_eval(&eta_bar(2 * r + 2)?, x) * deriv(2 * r + 2)?;
    Ok(match parity {
        Parity::Odd => lead,
        Parity::Even if q < 2 => {
            return Err(Error::InvalidArgument("even variant needs r >= 1".into()))
        }
        Parity::Even => lead + to_f64_eval(&eta_bar(2 * r + 1)?, x) * deriv(2 * r + 1)?,
    })
}

fn to_f64_eval(p: &Poly, x: f64) -> f64 {
    p.to_f64_coeffs()
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * x + c)
}

/// `n^{r+1} (f − V_n^(q) f)(x)` along `n_list`, with `q = 2r+1` (odd) or
/// `q = 2r` (even), and the limit `η̄_{2r+2} D^{2r+2} f` (plus
/// `η̄_{2r+1} D^{2r+1} f` in the even case).
pub fn voronovskaya_check(
    f: &TestFunction,
    r: usize,
    parity: Parity,
    x: f64,
    n_list: &[u32],
) -> Result<RateReport> {
    let q = parity.qi_order(r);
    let power = r as u32 + 1;
    let target = limit_value(r, parity, x, |k| f.derivative(k, x))?;
    let scaled_errors = n_list
        .iter()
        .map(|&n| {
            let truncation = truncation_for_tail(n + q as u32, x, 1e-18, 5 * n as usize)?;
            let samples = SampleSet::from_fn(n, truncation, |t| f.eval(t))?;
            let qi = QuasiInterpolant::new(&samples, QiConfig::new(n, q, truncation)?)?;
            Ok((n as f64).powi(power as i32) * (f.eval(x) - qi.eval(x)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RateReport {
        function: f.id(),
        r,
        parity,
        qi_order: q,
        power,
        x,
        n_list: n_list.to_vec(),
        scaled_errors,
        target,
    })
}

/// Exact scaled errors for the monomial `x^degree`, where `V_n` and the
/// quasi-interpolant act exactly through the coefficient tables.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRateReport {
    pub degree: usize,
    pub r: usize,
    pub parity: Parity,
    pub x: Rational,
    pub n_list: Vec<u32>,
    pub scaled_errors: Vec<Rational>,
    pub target: Rational,
}

impl PolyRateReport {
    /// `n |scaled − target|` for each `n`.
    pub fn residual_constants(&self) -> Vec<Rational> {
        self.n_list
            .iter()
            .zip(&self.scaled_errors)
            .map(|(n, s)| {
                let d = s - &self.target;
                let d = if d < Rational::zero() { -d } else { d };
                d * int(*n as i64)
            })
            .collect()
    }

    /// Fits `C = max n |scaled − target|` on all but the last `n` and
    /// checks `|scaled − target| <= C/n` at the last one.
    pub fn fitted_bound_holds(&self) -> Option<(Rational, bool)> {
        let consts = self.residual_constants();
        let (last, fit) = consts.split_last()?;
        let c = fit.iter().max()?.clone();
        Some((c.clone(), *last <= c))
    }
}

pub fn polynomial_voronovskaya(
    degree: usize,
    r: usize,
    parity: Parity,
    x: &Rational,
    n_list: &[u32],
) -> Result<PolyRateReport> {
    let q = parity.qi_order(r);
    if degree <= q {
        return Err(Error::InvalidArgument(format!(
            "degree {degree} is reproduced exactly by order {q}"
        )));
    }
    let p = Poly::monomial(degree, Rational::one());
    let power = scaling_power(2 * r + 2) as i32;
    let scaled_errors = n_list
        .iter()
        .map(|&n| {
            let vp = theta_recurrence(n, degree)?.apply(&p)?;
            let eta = eta_recurrence(n, q.max(1))?;
            let qp = apply_differential(&eta.polys[..=q], &vp);
            Ok((&p - &qp).eval(x) * int(n as i64).pow(power))
        })
        .collect::<Result<Vec<_>>>()?;
    let deriv = |k: usize| p.derivative_n(k).eval(x);
    let mut target = eta_bar(2 * r + 2)?.eval(x) * deriv(2 * r + 2);
    if parity == Parity::Even {
        target += eta_bar(2 * r + 1)?.eval(x) * deriv(2 * r + 1);
    }
    Ok(PolyRateReport {
        degree,
        r,
        parity,
        x: x.clone(),
        n_list: n_list.to_vec(),
        scaled_errors,
        target,
    })
}

/// `f64` view of an exact report, for printing.
pub fn poly_report_f64(rep: &PolyRateReport) -> (Vec<f64>, f64) {
    (
        rep.scaled_errors.iter().map(to_f64).collect(),
        to_f64(&rep.target),
    )
}
