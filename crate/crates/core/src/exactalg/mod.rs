//! Exact arithmetic used by the coefficient generator: arbitrary-precision
//! rationals, dense univariate polynomials over them, and the combinatorial
//! numbers (binomials, factorials, Stirling numbers) that connect monomials to
//! factorial polynomials.

mod combinat;
mod poly;

pub use combinat::{
    binomial, falling_factorial_poly, rising_factorial, rising_factorial_int, stirling1, stirling2,
    StirlingTable, DEFAULT_STIRLING_CAP,
};
pub use poly::Poly;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// `num / den` as a [`Rational`]. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a [`Rational`].
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Nearest `f64` to an exact rational.
///
/// Numerator and denominator may both exceed the `f64` range (the η tables at
/// large `n` do), so the conversion goes through a common power-of-two shift
/// when the direct quotient overflows.
pub fn to_f64(value: &Rational) -> f64 {
    if value.is_zero() {
        return 0.0;
    }
    if let Some(v) = value.to_f64() {
        if v.is_finite() && v != 0.0 {
            return v;
        }
    }
    let num = value.numer();
    let den = value.denom();
    let shift_num = num.bits().saturating_sub(900) as i64;
    let shift_den = den.bits().saturating_sub(900) as i64;
    let n = (num >> shift_num as usize).to_f64().unwrap_or(0.0);
    let d = (den >> shift_den as usize).to_f64().unwrap_or(1.0);
    let exp = shift_num - shift_den;
    (n / d) * 2f64.powi(exp.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
}

/// Parses `"p/q"` or `"p"` into a rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => Some(Rational::from_integer(text.parse().ok()?)),
    }
}

/// Always renders `"p/q"`, including integers (`"3/1"`).
pub fn format_ratio(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}
