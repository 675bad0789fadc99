//! Sup-norm error tables `‖f − V_{n,N}^(r) f‖_∞` on a uniform grid.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::registry::TestFunction;
use crate::error::{Error, Result};
use crate::evaluator::{QiConfig, QuasiInterpolant, SampleSet};

/// How the series truncation `N` depends on `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "String")]
pub enum TruncationRule {
    /// `N = m n`
    Multiple(u32),
    Absolute(usize),
}

impl TruncationRule {
    pub fn truncation(&self, n: u32) -> usize {
        match *self {
            TruncationRule::Multiple(m) => m as usize * n as usize,
            TruncationRule::Absolute(big_n) => big_n,
        }
    }
}

impl Default for TruncationRule {
    fn default() -> Self {
        TruncationRule::Multiple(5)
    }
}

impl fmt::Display for TruncationRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruncationRule::Multiple(m) => write!(f, "{m}n"),
            TruncationRule::Absolute(big_n) => write!(f, "{big_n}"),
        }
    }
}

impl From<TruncationRule> for String {
    fn from(rule: TruncationRule) -> String {
        rule.to_string()
    }
}

impl FromStr for TruncationRule {
    type Err = Error;

    /// `"5n"`, `"6n"`, ... or a plain integer.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidArgument(format!("bad truncation rule '{s}'"));
        match s.strip_suffix('n') {
            Some(m) => {
                let m: u32 = m.parse().map_err(|_| bad())?;
                if m == 0 {
                    return Err(bad());
                }
                Ok(TruncationRule::Multiple(m))
            }
            None => Ok(TruncationRule::Absolute(s.parse().map_err(|_| bad())?)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ErrorTable {
    pub function: String,
    pub interval: (f64, f64),
    pub step: f64,
    pub n_list: Vec<u32>,
    pub r_list: Vec<usize>,
    /// `entries[i][j]` for `n_list[i]`, `r_list[j]`.
    pub entries: Vec<Vec<f64>>,
    pub truncation_rule: TruncationRule,
}

/// `a, a+h, ..., b` (the last point snapped to `b`).
pub fn uniform_grid(a: f64, b: f64, step: f64) -> Result<Vec<f64>> {
    if !(a >= 0.0 && b >= a && step > 0.0 && a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "bad grid [{a}, {b}] step {step}"
        )));
    }
    let count = ((b - a) / step + 1e-9).floor() as usize;
    let mut pts: Vec<f64> = (0..=count).map(|i| a + i as f64 * step).collect();
    if b - pts[count] > 1e-12 {
        pts.push(b);
    } else {
        pts[count] = b;
    }
    Ok(pts)
}

/// Largest error per requested order for one `n`.
fn errors_for_n(
    f: &TestFunction,
    n: u32,
    r_list: &[usize],
    grid: &[f64],
    rule: TruncationRule,
) -> Result<Vec<f64>> {
    let r_top = r_list.iter().copied().max().unwrap_or(0);
    let truncation = rule.truncation(n);
    let samples = SampleSet::from_fn(n, truncation, |t| f.eval(t))?;
    let qi = QuasiInterpolant::new(&samples, QiConfig::new(n, r_top, truncation)?)?;
    let rows: Vec<Vec<f64>> = grid
        .par_iter()
        .map(|&x| {
            let fx = f.eval(x);
            qi.eval_all_orders(x)
                .map(|vals| vals.iter().map(|v| (fx - v).abs()).collect())
        })
        .collect::<Result<_>>()?;
    Ok(r_list
        .iter()
        .map(|&r| rows.iter().map(|row: &Vec<f64>| row[r]).fold(0.0, f64::max))
        .collect())
}

pub fn error_table(
    f: &TestFunction,
    n_list: &[u32],
    r_list: &[usize],
    interval: (f64, f64),
    step: f64,
    rule: TruncationRule,
) -> Result<ErrorTable> {
    let grid = uniform_grid(interval.0, interval.1, step)?;
    let entries = n_list
        .par_iter()
        .map(|&n| errors_for_n(f, n, r_list, &grid, rule))
        .collect::<Result<Vec<_>>>()?;
    Ok(ErrorTable {
        function: f.id(),
        interval,
        step,
        n_list: n_list.to_vec(),
        r_list: r_list.to_vec(),
        entries,
        truncation_rule: rule,
    })
}

/// Printed style: `0.64` at or above 0.1, else `4.0(-2)`.
pub fn paper_style(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if v.abs() >= 0.1 {
        return format!("{v:.2}");
    }
    let s = format!("{v:.1e}");
    let (mant, exp) = s.split_once('e').expect("exponent form");
    format!("{mant}({exp})")
}

/// `log2(e(n) / e(2n))` for every `n` whose double is also in the table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EmpiricalOrder {
    pub n: u32,
    pub r: usize,
    pub order: f64,
}

pub fn empirical_orders(table: &ErrorTable) -> Vec<EmpiricalOrder> {
    let mut out = Vec::new();
    for (i, &n) in table.n_list.iter().enumerate() {
        if let Some(i2) = table.n_list.iter().position(|&m| m == 2 * n) {
            for (j, &r) in table.r_list.iter().enumerate() {
                let ratio = table.entries[i][j] / table.entries[i2][j];
                out.push(EmpiricalOrder {
                    n,
                    r,
                    order: ratio.log2(),
                });
            }
        }
    }
    out
}

impl ErrorTable {
    pub fn entry(&self, n: u32, r: usize) -> Option<f64> {
        let i = self.n_list.iter().position(|&m| m == n)?;
        let j = self.r_list.iter().position(|&s| s == r)?;
        Some(self.entries[i][j])
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["function", "n", "r", "N", "error"])
            .map_err(csv_err)?;
        for (i, n) in self.n_list.iter().enumerate() {
            for (j, r) in self.r_list.iter().enumerate() {
                w.write_record([
                    self.function.clone(),
                    n.to_string(),
                    r.to_string(),
                    self.truncation_rule.truncation(*n).to_string(),
                    format!("{:.6e}", self.entries[i][j]),
                ])
                .map_err(csv_err)?;
            }
        }
        String::from_utf8(
            w.into_inner()
                .map_err(|e| Error::InvalidArgument(e.to_string()))?,
        )
        .map_err(|e| Error::InvalidArgument(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("error tables serialize")
    }

    /// Rows `n`, columns `r`; `printed_style` switches cells to the printed style.
    pub fn to_markdown(&self, printed_style: bool) -> String {
        let mut s = format!(
            "{} on [{}, {}], step {}, N = {}\n\n| n |",
            self.function, self.interval.0, self.interval.1, self.step, self.truncation_rule
        );
        for r in &self.r_list {
            s.push_str(&format!(" {r} |"));
        }
        s.push_str("\n|---|");
        s.push_str(&"---|".repeat(self.r_list.len()));
        s.push('\n');
        for (i, n) in self.n_list.iter().enumerate() {
            s.push_str(&format!("| {n} |"));
            for v in &self.entries[i] {
                let cell = if printed_style {
                    paper_style(*v)
                } else {
                    format!("{v:.3e}")
                };
                s.push_str(&format!(" {cell} |"));
            }
            s.push('\n');
        }
        s
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::InvalidArgument(format!("csv: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rules() {
        assert_eq!(
            "5n".parse::<TruncationRule>().unwrap(),
            TruncationRule::Multiple(5)
        );
        assert_eq!(
            "300".parse::<TruncationRule>().unwrap(),
            TruncationRule::Absolute(300)
        );
        assert!("0n".parse::<TruncationRule>().is_err());
        assert!("n".parse::<TruncationRule>().is_err());
        assert_eq!(TruncationRule::Multiple(6).truncation(20), 120);
        assert_eq!(TruncationRule::default().to_string(), "5n");
    }

    #[test]
    fn grid_points() {
        let g = uniform_grid(0.0, 2.0, 0.002).unwrap();
        assert_eq!(g.len(), 1001);
        assert_eq!(g[1000], 2.0);
        assert!(uniform_grid(-1.0, 2.0, 0.1).is_err());
    }

    #[test]
    fn paper_notation() {
        assert_eq!(paper_style(0.6412), "0.64");
        assert_eq!(paper_style(0.0406), "4.1(-2)");
        assert_eq!(paper_style(9.2e-7), "9.2(-7)");
        assert_eq!(paper_style(0.3), "0.30");
    }

    #[test]
    fn small_table() {
        let t = error_table(
            &TestFunction::ExpNeg,
            &[10, 20],
            &[0, 1, 3],
            (0.0, 2.0),
            0.01,
            TruncationRule::default(),
        )
        .unwrap();
        assert_eq!(t.entries[0][0], t.entries[0][1]);
        assert!(t.entries[1][2] < t.entries[0][2]);
        assert!((t.entry(10, 1).unwrap() - 4.0e-2).abs() < 0.2 * 4.0e-2);
        let orders = empirical_orders(&t);
        assert_eq!(orders.len(), 3);
        assert!(t.to_markdown(true).contains("| 10 |"));
        let csv = t.to_csv().unwrap();
        assert_eq!(csv.lines().count(), 7);
        assert!(t.to_json().contains("\"truncation_rule\": \"5n\""));
    }

    #[test]
    fn constants_reproduced() {
        let t = error_table(
            &TestFunction::Constant(3.0),
            &[10],
            &[0, 5],
            (0.0, 1.0),
            0.1,
            TruncationRule::Multiple(10),
        )
        .unwrap();
        assert!(t.entries[0].iter().all(|e| *e < 1e-10), "{:?}", t.entries);
    }
}
