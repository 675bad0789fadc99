//! Truncated Taylor series `Σ_k c_k h^k` around a point, enough to get
//! derivatives of the registry functions up to order 12.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq)]
pub struct Jet(pub Vec<f64>);

impl Jet {
    /// The identity function expanded at `x`, to order `order`.
    pub fn var(x: f64, order: usize) -> Self {
        let mut c = vec![0.0; order + 1];
        c[0] = x;
        if order > 0 {
            c[1] = 1.0;
        }
        Jet(c)
    }

    pub fn constant(&self, v: f64) -> Self {
        let mut c = vec![0.0; self.0.len()];
        c[0] = v;
        Jet(c)
    }

    fn len(&self) -> usize {
        self.0.len()
    }

    /// `D^k f(x) = k! c_k`.
    pub fn derivative(&self, k: usize) -> f64 {
        self.0[k] * (1..=k).map(|i| i as f64).product::<f64>()
    }

    pub fn exp(&self) -> Self {
        let g = &self.0;
        let mut h = vec![0.0; self.len()];
        h[0] = g[0].exp();
        for k in 1..self.len() {
            h[k] = (1..=k).map(|j| j as f64 * g[j] * h[k - j]).sum::<f64>() / k as f64;
        }
        Jet(h)
    }

    pub fn ln(&self) -> Self {
        let g = &self.0;
        let mut h = vec![0.0; self.len()];
        h[0] = g[0].ln();
        for k in 1..self.len() {
            let s: f64 = (1..k).map(|j| j as f64 * h[j] * g[k - j]).sum();
            h[k] = (g[k] - s / k as f64) / g[0];
        }
        Jet(h)
    }

    /// `(sin g, cos g)`.
    pub fn sin_cos(&self) -> (Self, Self) {
        let g = &self.0;
        let mut s = vec![0.0; self.len()];
        let mut c = vec![0.0; self.len()];
        s[0] = g[0].sin();
        c[0] = g[0].cos();
        for k in 1..self.len() {
            let kf = k as f64;
            s[k] = (1..=k).map(|j| j as f64 * g[j] * c[k - j]).sum::<f64>() / kf;
            c[k] = -(1..=k).map(|j| j as f64 * g[j] * s[k - j]).sum::<f64>() / kf;
        }
        (Jet(s), Jet(c))
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, o: &Jet) -> Jet {
        Jet(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, o: &Jet) -> Jet {
        Jet(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, o: &Jet) -> Jet {
        let n = self.len();
        Jet((0..n)
            .map(|k| (0..=k).map(|j| self.0[j] * o.0[k - j]).sum())
            .collect())
    }
}

impl Div for &Jet {
    type Output = Jet;
    fn div(self, o: &Jet) -> Jet {
        let n = self.len();
        let mut h = vec![0.0; n];
        for k in 0..n {
            let s: f64 = (1..=k).map(|j| o.0[j] * h[k - j]).sum();
            h[k] = (self.0[k] - s) / o.0[0];
        }
        Jet(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_of_negated_variable() {
        let x = Jet::var(0.7, 8);
        let e = (-&x).exp();
        for k in 0..=8 {
            let want = if k % 2 == 0 { 1.0 } else { -1.0 } * (-0.7f64).exp();
            assert!((e.derivative(k) - want).abs() < 1e-14);
        }
    }

    #[test]
    fn runge_at_zero() {
        let x = Jet::var(0.0, 6);
        let one = x.constant(1.0);
        let f = &one / &(&one + &(&x * &x));
        let want = [1.0, 0.0, -2.0, 0.0, 24.0, 0.0, -720.0];
        for (k, w) in want.iter().enumerate() {
            assert!((f.derivative(k) - w).abs() < 1e-10, "k={k}");
        }
    }

    #[test]
    fn log_and_trig() {
        let x = Jet::var(1.5, 5);
        let l = (&x.constant(1.0) + &x).ln();
        // D^k ln(1+x) = (-1)^{k-1} (k-1)! / (1+x)^k
        for k in 1..=5 {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            let fact: f64 = (1..k).map(|i| i as f64).product();
            assert!((l.derivative(k) - sign * fact / 2.5f64.powi(k as i32)).abs() < 1e-13);
        }
        let six = &x.constant(6.0) * &x;
        let (s, c) = six.sin_cos();
        assert!((s.derivative(3) + 216.0 * 9.0f64.cos()).abs() < 1e-10);
        assert!((c.derivative(2) + 36.0 * 9.0f64.cos()).abs() < 1e-10);
    }
}
