use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::subsets::binomial;
use crate::{Error, Result};

/// Part-count bound of a composed decomposition:
/// `g · f^C(g − 1, p − 1)`, with `C(a, b) = 0` for `b > a`.
///
/// # Panics
///
/// If `f >= 2` and the binomial exponent does not fit in `u32`; the result
/// would have billions of digits.
pub fn compose_bound(g: u64, f: u64, p: u64) -> BigUint {
    if g == 0 {
        return BigUint::zero();
    }
    let exponent = if p == 0 { 0 } else { binomial(g - 1, p - 1) };
    let base = BigUint::from(f);
    let power = if exponent == 0 || f == 1 {
        BigUint::one()
    } else if f == 0 {
        BigUint::zero()
    } else {
        let e = u32::try_from(exponent).expect("composition bound exponent exceeds u32");
        base.pow(e)
    };
    BigUint::from(g) * power
}

/// A per-instance bound on the number of parts as a function of the vertex
/// count `n`. Every variant is non-decreasing in `n` when its inputs are.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundLedger {
    Constant { value: u64 },
    /// `ceil(n^(num/den))`, the `n^ε` records used for quasi-bounded sizes.
    Power { num: u32, den: u32 },
    /// Step function through the listed points; below the first key the
    /// first value applies.
    Table { points: BTreeMap<u64, u64> },
    /// `h(n) = compose_bound(outer(n), inner(n), p)`.
    Composed {
        outer: Box<BoundLedger>,
        inner: Box<BoundLedger>,
        p: u64,
    },
}

impl BoundLedger {
    pub fn constant(value: u64) -> Self {
        BoundLedger::Constant { value }
    }

    pub fn power(num: u32, den: u32) -> Result<Self> {
        if den == 0 {
            return Err(Error::input("exponent denominator must be positive"));
        }
        Ok(BoundLedger::Power { num, den })
    }

    /// A table bound; values must not decrease as keys increase.
    pub fn table<I: IntoIterator<Item = (u64, u64)>>(points: I) -> Result<Self> {
        let points: BTreeMap<u64, u64> = points.into_iter().collect();
        if points.is_empty() {
            return Err(Error::input("bound table needs at least one point"));
        }
        let values: Vec<u64> = points.values().copied().collect();
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::input("bound table values must be non-decreasing"));
        }
        Ok(BoundLedger::Table { points })
    }

    pub fn composed(outer: BoundLedger, inner: BoundLedger, p: u64) -> Self {
        BoundLedger::Composed {
            outer: Box::new(outer),
            inner: Box::new(inner),
            p,
        }
    }

    pub fn evaluate(&self, n: u64) -> BigUint {
        match self {
            BoundLedger::Constant { value } => BigUint::from(*value),
            BoundLedger::Power { num, den } => {
                if *num == 0 {
                    return BigUint::one();
                }
                let radicand = BigUint::from(n).pow(*num);
                let root = radicand.nth_root(*den);
                if root.pow(*den) == radicand {
                    root
                } else {
                    root + 1u32
                }
            }
            BoundLedger::Table { points } => {
                let v = points
                    .range(..=n)
                    .next_back()
                    .or_else(|| points.iter().next())
                    .map(|(_, v)| *v)
                    .unwrap_or(0);
                BigUint::from(v)
            }
            BoundLedger::Composed { outer, inner, p } => {
                let g = outer.evaluate(n);
                let f = inner.evaluate(n);
                let g = g.to_u64().expect("outer bound exceeds u64");
                let f = f.to_u64().expect("inner bound exceeds u64");
                compose_bound(g, f, *p)
            }
        }
    }
}
