use serde::{Deserialize, Serialize};

use super::{CoeffTable, Family, Method};
use crate::error::{Error, Result};
use crate::exactalg::{format_ratio, parse_rational, Poly};

/// One coefficient polynomial; `coeffs[i]` is the `"p/q"` coefficient of `x^i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub r: usize,
    pub coeffs: Vec<String>,
}

/// JSON layout of a [`CoeffTable`], keyed by `(n, family, r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffTableJson {
    pub n: u32,
    pub family: Family,
    pub method: Method,
    pub polys: Vec<PolyJson>,
}

impl From<&CoeffTable> for CoeffTableJson {
    fn from(t: &CoeffTable) -> Self {
        CoeffTableJson {
            n: t.n,
            family: t.family,
            method: t.method,
            polys: t
                .polys
                .iter()
                .enumerate()
                .map(|(r, p)| PolyJson {
                    r,
                    coeffs: p.coeffs().iter().map(format_ratio).collect(),
                })
                .collect(),
        }
    }
}

impl TryFrom<CoeffTableJson> for CoeffTable {
    type Error = Error;

    fn try_from(j: CoeffTableJson) -> Result<Self> {
        let mut polys = Vec::with_capacity(j.polys.len());
        for (expected, pj) in j.polys.into_iter().enumerate() {
            if pj.r != expected {
                return Err(Error::InvalidArgument(format!(
                    "polys out of order: found r = {} at position {expected}",
                    pj.r
                )));
            }
            let coeffs = pj
                .coeffs
                .iter()
                .map(|s| {
                    parse_rational(s)
                        .ok_or_else(|| Error::InvalidArgument(format!("bad rational '{s}'")))
                })
                .collect::<Result<Vec<_>>>()?;
            polys.push(Poly::new(coeffs));
        }
        if polys.is_empty() {
            return Err(Error::InvalidArgument("empty coefficient table".into()));
        }
        Ok(CoeffTable {
            n: j.n,
            family: j.family,
            method: j.method,
            polys,
        })
    }
}

impl CoeffTable {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&CoeffTableJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: CoeffTableJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        CoeffTable::try_from(j)
    }
}
