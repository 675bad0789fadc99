//! Polynomial coefficients of the Baskakov operator `V_n = Σ θ_r D^r` and its
//! inverse `U_n = Σ η_r D^r` on polynomials, for a fixed integer `n`.
//!
//! Two independent constructions are provided: the three-term recurrences
//! (authoritative, fast) and the direct triangular solves through
//! `π_k = (V_n m_k - m_k)/k!` and `ρ_k = [nx]_k / (k! (n)_k)`.

mod asymptotic;
pub mod published;
mod serial;

pub use asymptotic::{asymptotic_poly, scaling_power, AsymptoticFamily, AsymptoticPoly};
pub use serial::{CoeffTableJson, PolyJson};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{
    falling_factorial_poly, int, rat, rising_factorial_int, stirling2, Poly, Rational,
};

pub const DEFAULT_R_MAX: usize = 12;
/// Hard cap on requested orders; coefficient degrees grow linearly and the
/// rational sizes quadratically beyond this.
pub const R_MAX_CAP: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Theta,
    Eta,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Theta => "theta",
            Family::Eta => "eta",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theta" => Ok(Family::Theta),
            "eta" => Ok(Family::Eta),
            other => Err(Error::InvalidArgument(format!("unknown family '{other}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Recurrence,
    Direct,
}

/// `polys[r]` is `θ_r^(n)` or `η_r^(n)` for `r = 0..=r_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    pub n: u32,
    pub family: Family,
    pub method: Method,
    pub polys: Vec<Poly>,
}

impl CoeffTable {
    pub fn r_max(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn get(&self, r: usize) -> Option<&Poly> {
        self.polys.get(r)
    }

    /// Applies `Σ_r polys[r] D^r` to `p` (terms with `r > deg p` vanish).
    ///
    /// Errors if the table is too short to represent the operator on `p`.
    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        let deg = p.degree().unwrap_or(0);
        if deg > self.r_max() {
            return Err(Error::TableTooShort {
                requested: deg,
                available: self.r_max(),
            });
        }
        Ok(apply_differential(&self.polys[..=deg], p))
    }
}

/// `Σ_r coeffs[r] · D^r p`.
pub fn apply_differential(coeffs: &[Poly], p: &Poly) -> Poly {
    let mut deriv = p.clone();
    let mut acc = Poly::zero();
    for c in coeffs {
        if deriv.is_zero() {
            break;
        }
        acc = &acc + &(c * &deriv);
        deriv = deriv.derivative();
    }
    acc
}

fn check_args(n: u32, r_max: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroOperatorIndex);
    }
    if r_max > R_MAX_CAP {
        return Err(Error::InvalidArgument(format!(
            "r_max = {r_max} exceeds the cap {R_MAX_CAP}"
        )));
    }
    Ok(())
}

fn seeds(r_max: usize) -> Vec<Poly> {
    let mut polys = Vec::with_capacity(r_max + 2);
    polys.push(Poly::one());
    polys.push(Poly::zero());
    polys
}

/// `n (r+1) θ_{r+1} = X (D θ_r + θ_{r-1})`, `θ_0 = 1`, `θ_1 = 0`.
pub fn theta_recurrence(n: u32, r_max: usize) -> Result<CoeffTable> {
    check_args(n, r_max)?;
    let big_x = Poly::big_x();
    let mut polys = seeds(r_max);
    for r in 1..r_max {
        let next = &big_x * &(&polys[r].derivative() + &polys[r - 1]);
        polys.push(next.scale(&rat(1, n as i64 * (r as i64 + 1))));
    }
    polys.truncate(r_max + 1);
    Ok(CoeffTable {
        n,
        family: Family::Theta,
        method: Method::Recurrence,
        polys,
    })
}

/// `(n+r)(r+1) η_{r+1} = -r (1+2x) η_r - X η_{r-1}`, `η_0 = 1`, `η_1 = 0`.
pub fn eta_recurrence(n: u32, r_max: usize) -> Result<CoeffTable> {
    check_args(n, r_max)?;
    let big_x = Poly::big_x();
    let one_two_x = Poly::from_ints(&[1, 2]);
    let mut polys = seeds(r_max);
    for r in 1..r_max {
        let a = (&one_two_x * &polys[r]).scale(&int(-(r as i64)));
        let b = &big_x * &polys[r - 1];
        let denom = (n as i64 + r as i64) * (r as i64 + 1);
        polys.push((&a - &b).scale(&rat(1, denom)));
    }
    polys.truncate(r_max + 1);
    Ok(CoeffTable {
        n,
        family: Family::Eta,
        method: Method::Recurrence,
        polys,
    })
}

pub fn recurrence(family: Family, n: u32, r_max: usize) -> Result<CoeffTable> {
    match family {
        Family::Theta => theta_recurrence(n, r_max),
        Family::Eta => eta_recurrence(n, r_max),
    }
}

fn factorial(k: usize) -> Rational {
    (1..=k as i64).fold(Rational::one(), |acc, i| acc * int(i))
}

/// `w_p = V_n m_p = n^{-p} Σ_r S(p,r) (n)_r x^r`.
pub fn w_poly(n: u32, p: usize) -> Result<Poly> {
    check_args(n, 0)?;
    let n_pow = Rational::from_integer(num_bigint::BigInt::from(n).pow(p as u32));
    let coeffs = (0..=p)
        .map(|r| {
            Rational::from_integer(stirling2(p, r) * rising_factorial_int(n as i64, r)) / &n_pow
        })
        .collect();
    Ok(Poly::new(coeffs))
}

/// `π_k = (w_k - m_k) / k!`.
pub fn pi_poly(n: u32, k: usize) -> Result<Poly> {
    let w = w_poly(n, k)?;
    Ok((&w - &Poly::monomial(k, Rational::one())).scale(&(Rational::one() / factorial(k))))
}

/// `ρ_k = [nx]_k / (k! (n)_k)`.
pub fn rho_poly(n: u32, k: usize) -> Result<Poly> {
    check_args(n, 0)?;
    let denom = factorial(k) * Rational::from_integer(rising_factorial_int(n as i64, k));
    Ok(falling_factorial_poly(n as i64, k).scale(&(Rational::one() / denom)))
}

fn alternating_x_weight(j: usize) -> Poly {
    let sign = if j.is_multiple_of(2) { int(1) } else { int(-1) };
    Poly::monomial(j, sign / factorial(j))
}

/// `θ_r = Σ_{k=0}^{r-2} (-1)^k x^k/k! π_{r-k}` from the triangular system
/// `Σ_{j=2}^{r} x^{r-j}/(r-j)! θ_j = π_r`.
pub fn theta_direct(n: u32, r: usize) -> Result<Poly> {
    check_args(n, r)?;
    match r {
        0 => return Ok(Poly::one()),
        1 => return Ok(Poly::zero()),
        _ => {}
    }
    let mut acc = Poly::zero();
    for k in 0..=r - 2 {
        acc = &acc + &(&alternating_x_weight(k) * &pi_poly(n, r - k)?);
    }
    Ok(acc)
}

/// `η_r = Σ_{j=0}^{r} (-1)^j x^j/j! ρ_{r-j}`.
pub fn eta_direct(n: u32, r: usize) -> Result<Poly> {
    check_args(n, r)?;
    let mut acc = Poly::zero();
    for j in 0..=r {
        acc = &acc + &(&alternating_x_weight(j) * &rho_poly(n, r - j)?);
    }
    Ok(acc)
}

pub fn direct(family: Family, n: u32, r_max: usize) -> Result<CoeffTable> {
    check_args(n, r_max)?;
    let polys = (0..=r_max)
        .map(|r| match family {
            Family::Theta => theta_direct(n, r),
            Family::Eta => eta_direct(n, r),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoeffTable {
        n,
        family,
        method: Method::Direct,
        polys,
    })
}

/// First monomial degree `s <= max_degree` on which `Σ η_r D^r ∘ Σ θ_r D^r`
/// is not the identity, if any.
pub fn inverse_identity_failure(n: u32, max_degree: usize) -> Result<Option<usize>> {
    let theta = theta_recurrence(n, max_degree)?;
    let eta = eta_recurrence(n, max_degree)?;
    for s in 0..=max_degree {
        let m = Poly::monomial(s, Rational::one());
        if eta.apply(&theta.apply(&m)?)? != m {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Checks the structural invariants of a table: `polys[0] = 1`,
/// `polys[1] = 0`, and for `r >= 2` degree at most `r` with `X | polys[r]`.
pub fn check_invariants(table: &CoeffTable) -> std::result::Result<(), String> {
    if table.polys.first() != Some(&Poly::one()) {
        return Err("polys[0] != 1".into());
    }
    if table.polys.get(1).is_some_and(|p| !p.is_zero()) {
        return Err("polys[1] != 0".into());
    }
    let big_x = Poly::big_x();
    for (r, p) in table.polys.iter().enumerate().skip(2) {
        // the leading coefficient can vanish for particular n (η_4 at n = 6)
        if p.degree().is_some_and(|d| d > r) {
            return Err(format!("degree of polys[{r}] is {:?}", p.degree()));
        }
        if !p.div_rem(&big_x).1.is_zero() {
            return Err(format!("x(1+x) does not divide polys[{r}]"));
        }
    }
    if table
        .polys
        .iter()
        .any(|p| p.coeffs().iter().any(|c| c.denom().is_zero()))
    {
        return Err("zero denominator".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nx() -> Poly {
        Poly::big_x()
    }

    #[test]
    fn theta_small_orders() {
        let t = theta_recurrence(10, 5).unwrap();
        assert_eq!(t.polys[1], Poly::zero());
        assert_eq!(t.polys[2], nx().scale(&rat(1, 20)));
        for n in 1..6i64 {
            let t = theta_recurrence(n as u32, 5).unwrap();
            // θ_4 = X (1 + 3(n+2) X) / (24 n^3)
            let inner = &Poly::one() + &nx().scale(&int(3 * (n + 2)));
            assert_eq!(t.polys[4], (&nx() * &inner).scale(&rat(1, 24 * n.pow(3))));
        }
    }

    #[test]
    fn eta_small_orders() {
        for n in 1..9i64 {
            let e = eta_recurrence(n as u32, 4).unwrap();
            assert_eq!(e.polys[2], nx().scale(&rat(-1, 2 * (n + 1))));
            let three = (&Poly::from_ints(&[1, 2]) * &nx()).scale(&rat(1, 3 * (n + 1) * (n + 2)));
            assert_eq!(e.polys[3], three);
            // η_4 = -X (2 - (n-6) X) / (8 (n+1)(n+2)(n+3))
            let inner = &Poly::from_ints(&[2]) - &nx().scale(&int(n - 6));
            let four = (&nx() * &inner).scale(&rat(-1, 8 * (n + 1) * (n + 2) * (n + 3)));
            assert_eq!(e.polys[4], four);
        }
    }

    #[test]
    fn w_examples() {
        let n = 7i64;
        assert_eq!(w_poly(7, 0).unwrap(), Poly::one());
        assert_eq!(w_poly(7, 1).unwrap(), Poly::x());
        let w2 = Poly::new(vec![int(0), rat(1, n), rat(n + 1, n)]);
        assert_eq!(w_poly(7, 2).unwrap(), w2);
        // w_5 = (n x + 15 (n)_2 x^2 + 25 (n)_3 x^3 + 10 (n)_4 x^4 + (n)_5 x^5) / n^5
        let rf = |k| rising_factorial_int(n, k);
        let n5 = Rational::from_integer(num_bigint::BigInt::from(n).pow(5));
        let w5 = Poly::new(vec![
            int(0),
            int(n),
            Rational::from_integer(rf(2) * 15),
            Rational::from_integer(rf(3) * 25),
            Rational::from_integer(rf(4) * 10),
            Rational::from_integer(rf(5)),
        ])
        .scale(&(Rational::one() / n5));
        assert_eq!(w_poly(7, 5).unwrap(), w5);
    }

    #[test]
    fn direct_examples() {
        for n in 1..6i64 {
            let one_two_x = Poly::from_ints(&[1, 2]);
            let t3 = (&nx() * &one_two_x).scale(&rat(1, 6 * n * n));
            assert_eq!(theta_direct(n as u32, 3).unwrap(), t3);
            // θ_5 = X (2x+1)(1 + (10n+12) X) / (120 n^4)
            let inner = &Poly::one() + &nx().scale(&int(10 * n + 12));
            let t5 = (&(&nx() * &one_two_x) * &inner).scale(&rat(1, 120 * n.pow(4)));
            assert_eq!(theta_direct(n as u32, 5).unwrap(), t5);
            let rho2 = (&Poly::from_ints(&[0, n]) * &Poly::from_ints(&[-1, n]))
                .scale(&rat(1, 2 * n * (n + 1)));
            assert_eq!(rho_poly(n as u32, 2).unwrap(), rho2);
        }
    }

    #[test]
    fn direct_low_orders_match_seeds() {
        assert_eq!(eta_direct(3, 0).unwrap(), Poly::one());
        assert!(eta_direct(3, 1).unwrap().is_zero());
        assert!(theta_direct(3, 1).unwrap().is_zero());
    }

    #[test]
    fn invariants_hold() {
        for n in 1..=9 {
            for fam in [Family::Theta, Family::Eta] {
                check_invariants(&recurrence(fam, n, 12).unwrap()).unwrap();
            }
        }
        // X(2 - (n-6)X) loses its top degree at n = 6
        assert_eq!(eta_recurrence(6, 4).unwrap().polys[4].degree(), Some(2));
    }

    #[test]
    fn newton_polynomials_map_to_monomials() {
        for n in [1u32, 3, 10] {
            let theta = theta_recurrence(n, 10).unwrap();
            for r in 0..=10usize {
                // ν_{r,n} = n^{-r} [nx]_r
                let nu = falling_factorial_poly(n as i64, r)
                    .scale(&(Rational::one() / int(n as i64).pow(r as i32)));
                let lambda = Rational::from_integer(rising_factorial_int(n as i64, r))
                    / int(n as i64).pow(r as i32);
                assert_eq!(theta.apply(&nu).unwrap(), Poly::monomial(r, lambda));
            }
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert_eq!(theta_recurrence(0, 3), Err(Error::ZeroOperatorIndex));
        assert!(eta_recurrence(3, R_MAX_CAP + 1).is_err());
        let short = theta_recurrence(3, 2).unwrap();
        assert!(short.apply(&Poly::monomial(5, int(1))).is_err());
    }

    #[test]
    fn inverse_identity() {
        for n in [1, 2, 7] {
            assert_eq!(inverse_identity_failure(n, 8).unwrap(), None);
        }
    }

    #[test]
    fn r_max_zero_and_one() {
        assert_eq!(theta_recurrence(4, 0).unwrap().polys, vec![Poly::one()]);
        assert_eq!(
            eta_recurrence(4, 1).unwrap().polys,
            vec![Poly::one(), Poly::zero()]
        );
    }
}
