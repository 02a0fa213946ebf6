use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use super::{split_literal, IntSet};
use crate::error::{Error, Result};

/// A finite set of rationals `numerators[i] / denominator` sharing one
/// positive denominator. The representation is reduced: no integer greater
/// than one divides the denominator and every numerator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalSet {
    numerators: IntSet,
    denominator: u64,
}

/// Records the factor applied by [`scale_to_integers`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScaleRecord {
    pub factor: u64,
}

impl RationalSet {
    pub fn new(numerators: IntSet, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::Config("denominator must be positive".into()));
        }
        let g = numerators.iter().fold(denominator as i64, |g, a| g.gcd(&a));
        let numerators = if g > 1 {
            IntSet::new(numerators.iter().map(|a| a / g))
        } else {
            numerators
        };
        Ok(Self {
            numerators,
            denominator: denominator / g as u64,
        })
    }

    pub fn from_ratios<I: IntoIterator<Item = Ratio<i64>>>(items: I) -> Self {
        let items: Vec<Ratio<i64>> = items.into_iter().collect();
        let den = items.iter().fold(1i64, |l, r| l.lcm(r.denom()));
        let nums = IntSet::new(items.iter().map(|r| r.numer() * (den / r.denom())));
        Self::new(nums, den as u64).expect("lcm of denominators is positive")
    }

    pub fn from_integers(set: &IntSet) -> Self {
        Self {
            numerators: set.clone(),
            denominator: 1,
        }
    }

    pub fn numerators(&self) -> &IntSet {
        &self.numerators
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn len(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }

    pub fn ratios(&self) -> impl Iterator<Item = Ratio<i64>> + '_ {
        let d = self.denominator as i64;
        self.numerators.iter().map(move |p| Ratio::new(p, d))
    }
}

impl fmt::Display for RationalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.ratios().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromStr for RationalSet {
    type Err = Error;

    /// Parses tokens of the form `p` or `p/q`, e.g. `0,1,5/2`.
    fn from_str(s: &str) -> Result<Self> {
        let mut items = Vec::new();
        for (pos, tok) in split_literal(s)? {
            let bad = || Error::Parse {
                position: pos,
                message: format!("expected an integer or p/q, found {tok:?}"),
            };
            let r = match tok.split_once('/') {
                Some((p, q)) => {
                    let p: i64 = p.trim().parse().map_err(|_| bad())?;
                    let q: i64 = q.trim().parse().map_err(|_| bad())?;
                    if q <= 0 {
                        return Err(Error::Parse {
                            position: pos,
                            message: format!("denominator must be positive in {tok:?}"),
                        });
                    }
                    Ratio::new(p, q)
                }
                None => Ratio::from_integer(tok.parse().map_err(|_| bad())?),
            };
            items.push(r);
        }
        Ok(Self::from_ratios(items))
    }
}

/// Multiplies every element by the common denominator. Dilation by a
/// positive factor preserves `|A+A|` and `|A-A|`, so the class is unchanged.
pub fn scale_to_integers(set: &RationalSet) -> (IntSet, ScaleRecord) {
    (
        set.numerators.clone(),
        ScaleRecord {
            factor: set.denominator,
        },
    )
}
