//! Built-in test functions with derivatives from Taylor jets.

use std::fmt;
use std::str::FromStr;

use super::jet::Jet;
use crate::error::{Error, Result};

/// Highest derivative order the registry promises.
pub const MAX_DERIVATIVE: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TestFunction {
    /// `exp(-x)`
    ExpNeg,
    /// `1/(1+x^2)`
    Runge,
    /// `exp(-x^2)`
    Gauss,
    /// `ln(1+x)`
    Log1p,
    /// `sin(6x)/(1+x^2)`
    Sin6,
    /// `x^s`
    Monomial(u32),
    Constant(f64),
}

impl TestFunction {
    pub const REFERENCE_EXAMPLES: [TestFunction; 5] = [
        TestFunction::ExpNeg,
        TestFunction::Runge,
        TestFunction::Gauss,
        TestFunction::Log1p,
        TestFunction::Sin6,
    ];

    pub fn id(&self) -> String {
        match self {
            TestFunction::ExpNeg => "exp-neg".into(),
            TestFunction::Runge => "runge".into(),
            TestFunction::Gauss => "gauss".into(),
            TestFunction::Log1p => "log1p".into(),
            TestFunction::Sin6 => "sin6".into(),
            TestFunction::Monomial(s) => format!("mono:{s}"),
            TestFunction::Constant(c) => format!("const:{c}"),
        }
    }

    pub fn formula(&self) -> String {
        match self {
            TestFunction::ExpNeg => "exp(-x)".into(),
            TestFunction::Runge => "1/(1+x^2)".into(),
            TestFunction::Gauss => "exp(-x^2)".into(),
            TestFunction::Log1p => "ln(1+x)".into(),
            TestFunction::Sin6 => "sin(6x)/(1+x^2)".into(),
            TestFunction::Monomial(s) => format!("x^{s}"),
            TestFunction::Constant(c) => format!("{c}"),
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        match *self {
            TestFunction::ExpNeg => (-x).exp(),
            TestFunction::Runge => 1.0 / (1.0 + x * x),
            TestFunction::Gauss => (-x * x).exp(),
            TestFunction::Log1p => x.ln_1p(),
            TestFunction::Sin6 => (6.0 * x).sin() / (1.0 + x * x),
            TestFunction::Monomial(s) => x.powi(s as i32),
            TestFunction::Constant(c) => c,
        }
    }

    /// Taylor jet of the function at `x` up to `order`.
    pub fn jet(&self, x: f64, order: usize) -> Jet {
        let t = Jet::var(x, order);
        let one = t.constant(1.0);
        match *self {
            TestFunction::ExpNeg => (-&t).exp(),
            TestFunction::Runge => &one / &(&one + &(&t * &t)),
            TestFunction::Gauss => (-&(&t * &t)).exp(),
            TestFunction::Log1p => (&one + &t).ln(),
            TestFunction::Sin6 => &(&t.constant(6.0) * &t).sin_cos().0 / &(&one + &(&t * &t)),
            TestFunction::Monomial(s) => (0..s).fold(one, |acc, _| &acc * &t),
            TestFunction::Constant(c) => t.constant(c),
        }
    }

    /// `D^k f(x)` for `k <= MAX_DERIVATIVE`.
    pub fn derivative(&self, k: usize, x: f64) -> Result<f64> {
        if k > MAX_DERIVATIVE {
            return Err(Error::InvalidArgument(format!(
                "derivatives are available up to order {MAX_DERIVATIVE}, got {k}"
            )));
        }
        Ok(self.jet(x, k).derivative(k))
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl FromStr for TestFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("unknown function '{s}'"));
        Ok(match s.trim() {
            "exp-neg" => TestFunction::ExpNeg,
            "runge" => TestFunction::Runge,
            "gauss" => TestFunction::Gauss,
            "log1p" => TestFunction::Log1p,
            "sin6" => TestFunction::Sin6,
            other => match other.split_once(':') {
                Some(("mono", d)) => TestFunction::Monomial(d.parse().map_err(|_| bad())?),
                Some(("const", c)) => {
                    let c: f64 = c.parse().map_err(|_| bad())?;
                    if !c.is_finite() {
                        return Err(bad());
                    }
                    TestFunction::Constant(c)
                }
                _ => return Err(bad()),
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for f in TestFunction::REFERENCE_EXAMPLES
            .into_iter()
            .chain([TestFunction::Monomial(4), TestFunction::Constant(2.5)])
        {
            assert_eq!(f.id().parse::<TestFunction>().unwrap(), f);
        }
        assert!("tan".parse::<TestFunction>().is_err());
        assert!("mono:x".parse::<TestFunction>().is_err());
    }

    #[test]
    fn jets_agree_with_values() {
        for f in TestFunction::REFERENCE_EXAMPLES {
            for x in [0.0, 0.4, 1.7] {
                assert!((f.jet(x, 3).0[0] - f.eval(x)).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn derivatives_against_central_differences() {
        let h = 1e-4;
        for f in TestFunction::REFERENCE_EXAMPLES {
            for x in [0.3, 1.1] {
                for k in 0..4 {
                    let fd = (f.derivative(k, x + h).unwrap() - f.derivative(k, x - h).unwrap())
                        / (2.0 * h);
                    let d = f.derivative(k + 1, x).unwrap();
                    assert!((fd - d).abs() < 1e-5 * d.abs().max(1.0), "{f} k={k} x={x}");
                }
            }
        }
    }

    #[test]
    fn monomial_derivatives() {
        let f = TestFunction::Monomial(4);
        assert_eq!(f.derivative(4, 0.3).unwrap(), 24.0);
        assert_eq!(f.derivative(5, 0.3).unwrap(), 0.0);
        assert!(f.derivative(13, 0.3).is_err());
    }
}
