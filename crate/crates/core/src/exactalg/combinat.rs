use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{int, Poly, Rational};

pub const DEFAULT_STIRLING_CAP: usize = 32;

/// Triangular tables of Stirling numbers of both kinds for `0 <= r <= p <= cap`.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    cap: usize,
    first: Vec<Vec<BigInt>>,
    second: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(cap: usize) -> Self {
        let mut first: Vec<Vec<BigInt>> = Vec::with_capacity(cap + 1);
        let mut second: Vec<Vec<BigInt>> = Vec::with_capacity(cap + 1);
        first.push(vec![BigInt::one()]);
        second.push(vec![BigInt::one()]);
        for p in 1..=cap {
            let prev1 = &first[p - 1];
            let prev2 = &second[p - 1];
            let at = |row: &Vec<BigInt>, r: usize| row.get(r).cloned().unwrap_or_else(BigInt::zero);
            let mut row1 = vec![BigInt::zero(); p + 1];
            let mut row2 = vec![BigInt::zero(); p + 1];
            for r in 1..=p {
                // s(p,r) = (p-1) s(p-1,r) + s(p-1,r-1)
                row1[r] = at(prev1, r) * (p as u64 - 1) + at(prev1, r - 1);
                // S(p,r) = r S(p-1,r) + S(p-1,r-1)
                row2[r] = at(prev2, r) * r as u64 + at(prev2, r - 1);
            }
            first.push(row1);
            second.push(row2);
        }
        StirlingTable { cap, first, second }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Unsigned Stirling number of the first kind, `None` above the cap.
    pub fn first(&self, p: usize, r: usize) -> Option<BigInt> {
        if p > self.cap {
            return None;
        }
        Some(self.first[p].get(r).cloned().unwrap_or_else(BigInt::zero))
    }

    /// Stirling number of the second kind, `None` above the cap.
    pub fn second(&self, p: usize, r: usize) -> Option<BigInt> {
        if p > self.cap {
            return None;
        }
        Some(self.second[p].get(r).cloned().unwrap_or_else(BigInt::zero))
    }
}

fn default_table() -> &'static StirlingTable {
    static TABLE: OnceLock<StirlingTable> = OnceLock::new();
    TABLE.get_or_init(|| StirlingTable::new(DEFAULT_STIRLING_CAP))
}

fn table_for(p: usize) -> std::borrow::Cow<'static, StirlingTable> {
    if p <= DEFAULT_STIRLING_CAP {
        std::borrow::Cow::Borrowed(default_table())
    } else {
        std::borrow::Cow::Owned(StirlingTable::new(p))
    }
}

/// `S(p, r)`: `x^p = Σ_r S(p, r) [x]_r`. Zero when `r > p`.
pub fn stirling2(p: usize, r: usize) -> BigInt {
    table_for(p).second(p, r).unwrap_or_default()
}

/// Unsigned `s(p, r)`: `(x)_p = Σ_r (-1)^{p-r} s(p, r) x^r`. Zero when `r > p`.
pub fn stirling1(p: usize, r: usize) -> BigInt {
    table_for(p).first(p, r).unwrap_or_default()
}

/// `C(n, k)`, zero for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Rising factorial `(a)_r = a (a+1) ... (a+r-1)`.
pub fn rising_factorial(a: &Rational, r: usize) -> Rational {
    (0..r).fold(Rational::one(), |acc, i| acc * (a + int(i as i64)))
}

/// Rising factorial of an integer, as an exact integer.
pub fn rising_factorial_int(a: i64, r: usize) -> BigInt {
    (0..r as i64).fold(BigInt::one(), |acc, i| acc * (a + i))
}

/// `[n x]_k = Π_{i<k} (n x - i)` as a polynomial in `x`.
pub fn falling_factorial_poly(n: i64, k: usize) -> Poly {
    (0..k as i64).fold(Poly::one(), |acc, i| &acc * &Poly::from_ints(&[-i, n]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn stirling_second_kind_values() {
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(5, 3), BigInt::from(25));
        assert_eq!(stirling2(0, 0), BigInt::from(1));
        assert_eq!(stirling2(3, 4), BigInt::zero());
        assert_eq!(stirling2(5, 0), BigInt::zero());
    }

    #[test]
    fn stirling_first_kind_values() {
        for p in 0..10 {
            assert_eq!(stirling1(p, p), BigInt::one());
        }
        assert_eq!(stirling1(3, 1), BigInt::from(2));
        assert_eq!(stirling1(2, 1), BigInt::from(1));
        assert_eq!(stirling1(2, 5), BigInt::zero());
    }

    #[test]
    fn beyond_the_cap() {
        // S(40, 39) = C(40, 2)
        assert_eq!(stirling2(40, 39), binomial(40, 2));
        assert_eq!(stirling1(40, 39), binomial(40, 2));
    }

    #[test]
    fn second_kind_identity_on_integers() {
        for p in 0..=12usize {
            for m in 0..=12i64 {
                let lhs: BigInt = (0..=p)
                    .map(|r| {
                        stirling2(p, r) * (0..r as i64).fold(BigInt::one(), |a, i| a * (m - i))
                    })
                    .sum();
                assert_eq!(lhs, BigInt::from(m).pow(p as u32), "p={p} m={m}");
            }
        }
    }

    #[test]
    fn first_kind_identity_by_expanding_the_product() {
        for p in 0..=12usize {
            let product =
                (0..p as i64).fold(Poly::one(), |acc, i| &acc * &Poly::from_ints(&[-i, 1]));
            for r in 0..=p {
                let sign = if (p - r) % 2 == 0 { 1 } else { -1 };
                let expected = Rational::from_integer(stirling1(p, r) * sign);
                assert_eq!(product.coeff(r), expected, "p={p} r={r}");
            }
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(rising_factorial(&int(3), 2), int(12));
        assert_eq!(rising_factorial(&rat(1, 2), 0), int(1));
        assert_eq!(rising_factorial_int(10, 3), BigInt::from(1320));
        assert_eq!(falling_factorial_poly(7, 0), Poly::one());
        assert_eq!(falling_factorial_poly(2, 2), Poly::from_ints(&[0, -2, 4]));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
    }

    #[test]
    fn falling_factorial_vanishes_on_grid() {
        for n in 1..6i64 {
            for k in 0..8usize {
                let p = falling_factorial_poly(n, k);
                for j in 0..k as i64 {
                    assert!(p.eval(&rat(j, n)).is_zero());
                }
            }
        }
    }
}
