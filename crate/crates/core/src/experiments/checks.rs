//! Whole-grid checks shared by the CLI `verify` command and the tests.

use super::published::{ERROR_N, ERROR_R};
use super::{paper_style, uniform_grid, ErrorTable, TestFunction};
use crate::error::Error;
use crate::evaluator::{qi_eval_closed, QiConfig, QuasiInterpolant, SampleSet};

/// Worst `|V^(r) x^s - x^s| / max(1, x^s)` over `s <= r <= 9`, `x` on a
/// 0.01 grid of `[0, 2]`.
pub fn exactness_worst(n: u32, truncation: usize) -> Result<f64, Error> {
    let grid = uniform_grid(0.0, 2.0, 0.01)?;
    let mut worst: f64 = 0.0;
    for s in 0..=9i32 {
        let samples = SampleSet::from_fn(n, truncation, |t| t.powi(s))?;
        let qi = QuasiInterpolant::new(&samples, QiConfig::new(n, 9, truncation)?)?;
        for &x in &grid {
            let all = qi.eval_all_orders(x)?;
            let want = x.powi(s);
            for v in &all[s as usize..] {
                worst = worst.max((v - want).abs() / want.max(1.0));
            }
        }
    }
    Ok(worst)
}

/// Worst relative difference between the closed forms and the generic path
/// for `r = 2..4` at `n`, `N = 5n`, on a 0.05 grid of `(0, 2]`.
pub fn closed_form_worst(f: &TestFunction, n: u32) -> Result<f64, Error> {
    let truncation = 5 * n as usize;
    let samples = SampleSet::from_fn(n, truncation, |t| f.eval(t))?;
    let grid = uniform_grid(0.0, 2.0, 0.05)?;
    let mut worst: f64 = 0.0;
    for r in 2..=4 {
        let cfg = QiConfig::new(n, r, truncation)?;
        let qi = QuasiInterpolant::new(&samples, cfg)?;
        for &x in &grid {
            let a = qi.eval(x)?;
            let b = qi_eval_closed(&samples, &cfg, x)?;
            let scale = a.abs().max(b.abs());
            if scale > 0.0 {
                worst = worst.max((a - b).abs() / scale);
            }
        }
    }
    Ok(worst)
}

/// Cells within 20% of the printed value, total printed cells, and a line per miss.
pub fn compare_error_table(
    table: &ErrorTable,
    printed: &[[Option<f64>; 6]; 5],
) -> (usize, usize, Vec<String>) {
    let mut good = 0;
    let mut total = 0;
    let mut lines = Vec::new();
    for (i, &n) in ERROR_N.iter().enumerate() {
        for (j, &r) in ERROR_R.iter().enumerate() {
            let Some(p) = printed[i][j] else { continue };
            total += 1;
            let v = table.entry(n, r).expect("table covers the printed grid");
            if (v - p).abs() <= 0.2 * p {
                good += 1;
            } else {
                lines.push(format!(
                    "n={n} r={r}: computed {} printed {}",
                    paper_style(v),
                    paper_style(p)
                ));
            }
        }
    }
    (good, total, lines)
}
