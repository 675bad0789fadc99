//! `n^ℓ c_r^(n)(x) / c̄_r(x)` evaluated exactly, `ℓ = ⌈r/2⌉`.

use serde::Serialize;

use crate::coeffs::{asymptotic_poly, recurrence, scaling_power, AsymptoticFamily, Family};
use crate::error::Result;
use crate::exactalg::{int, to_f64, Rational};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScalingRow {
    pub family: Family,
    pub index: usize,
    pub n: u32,
    pub x: f64,
    pub ratio: f64,
}

impl ScalingRow {
    pub fn deviation(&self) -> f64 {
        (self.ratio - 1.0).abs()
    }
}

/// One row per `(index, x, n)`; `x_points` are exact rationals.
pub fn asymptotic_scaling(
    family: Family,
    indices: &[usize],
    x_points: &[Rational],
    n_list: &[u32],
) -> Result<Vec<ScalingRow>> {
    let asym_family = match family {
        Family::Theta => AsymptoticFamily::ThetaBar,
        Family::Eta => AsymptoticFamily::EtaBar,
    };
    let top = indices.iter().copied().max().unwrap_or(2);
    let mut rows = Vec::new();
    for &n in n_list {
        let table = recurrence(family, n, top)?;
        for &index in indices {
            let limit = asymptotic_poly(index, asym_family)?.poly;
            let scale = int(n as i64).pow(scaling_power(index) as i32);
            for x in x_points {
                let ratio = table.polys[index].eval(x) * &scale / limit.eval(x);
                rows.push(ScalingRow {
                    family,
                    index,
                    n,
                    x: to_f64(x),
                    ratio: to_f64(&ratio),
                });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn second_index_is_exact() {
        let rows = asymptotic_scaling(Family::Theta, &[2], &[int(1), rat(1, 3)], &[3, 50]).unwrap();
        assert!(rows.iter().all(|r| r.ratio == 1.0));
    }

    #[test]
    fn ratios_approach_one() {
        let rows = asymptotic_scaling(Family::Eta, &[4, 5], &[int(1)], &[100, 10_000]).unwrap();
        let dev = |n: u32, i: usize| {
            rows.iter()
                .find(|r| r.n == n && r.index == i)
                .unwrap()
                .deviation()
        };
        for i in [4, 5] {
            assert!(dev(10_000, i) < dev(100, i));
            assert!(dev(10_000, i) < 1e-2);
        }
        // positive ratio: the odd-index sign matches the limit's sign
        assert!(rows.iter().all(|r| r.ratio > 0.0));
    }
}
