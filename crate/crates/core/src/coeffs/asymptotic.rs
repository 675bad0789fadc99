use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{int, Poly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AsymptoticFamily {
    ThetaBar,
    EtaBar,
}

/// Limit polynomial `lim_{n→∞} n^ℓ c_index^(n)` with `ℓ = ⌈index/2⌉`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticPoly {
    pub index: usize,
    pub family: AsymptoticFamily,
    pub poly: Poly,
}

/// Power of `n` that makes coefficient `index` converge: `⌈index/2⌉`.
pub fn scaling_power(index: usize) -> u32 {
    index.div_ceil(2) as u32
}

fn factorial(k: usize) -> Rational {
    (1..=k as i64).fold(Rational::one(), |acc, i| acc * int(i))
}

/// Closed forms of the limits, for `index >= 2`:
///
/// ```text
/// θ̄_{2r}   = X^r / (2^r r!)                      η̄_{2r}   = (-1)^r X^r / (2^r r!)
/// θ̄_{2r-1} = (1+2x) X^{r-1} / (3·2^{r-1} (r-2)!)  η̄_{2r-1} = (-1)^r (1+2x) X^{r-1} / (3·2^{r-2} (r-2)!)
/// ```
pub fn asymptotic_poly(index: usize, family: AsymptoticFamily) -> Result<AsymptoticPoly> {
    if index < 2 {
        return Err(Error::InvalidArgument(format!(
            "asymptotic limits start at index 2, got {index}"
        )));
    }
    let big_x = Poly::big_x();
    let r = index.div_ceil(2);
    let sign = if r.is_multiple_of(2) { int(1) } else { int(-1) };
    let poly = if index.is_multiple_of(2) {
        let c = int(1) / (int(2).pow(r as i32) * factorial(r));
        let c = match family {
            AsymptoticFamily::ThetaBar => c,
            AsymptoticFamily::EtaBar => c * sign,
        };
        big_x.pow(r as u32).scale(&c)
    } else {
        let c = match family {
            AsymptoticFamily::ThetaBar => {
                int(1) / (int(3) * int(2).pow(r as i32 - 1) * factorial(r - 2))
            }
            AsymptoticFamily::EtaBar => {
                sign / (int(3) * int(2).pow(r as i32 - 2) * factorial(r - 2))
            }
        };
        (&Poly::from_ints(&[1, 2]) * &big_x.pow(r as u32 - 1)).scale(&c)
    };
    Ok(AsymptoticPoly {
        index,
        family,
        poly,
    })
}
