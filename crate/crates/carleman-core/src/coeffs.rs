//! Exact computation of the correction coefficient sequences.
//!
//! `b_k` comes from the rational recursion
//!
//! ```text
//! b_1 = 1/2,   b_{n+1} = (1/(n+1)) (1/(n+2) - sum_{k=1}^{n} b_k/(n+2-k))
//! ```
//!
//! and `d_k` from an exact binomial transform of the `b` sequence:
//!
//! ```text
//! d_1 = 1/2,
//! d_n = 12^{-(n-1)} [ (-1)^{n-1}/2
//!       + sum_{j=1}^{n-1} C(n-1,j) 12^j (-1)^{n-1-j} b_{j+1} ],  n >= 2.
//! ```
//!
//! The transform follows from the integral formula for `d_n` by expanding
//! `(12t-1)^{n-1}/t` binomially and replacing the moments of the kernel with
//! their exact values (`e*b_{j+1}` for `t^j` weights, `e/2 - 1` for the `1/t`
//! weight). Quadrature of the original formula survives only as a
//! cross-check: the sign-alternating `(12t-1)^{n-1}` factor makes the numeric
//! route catastrophically cancellative for large `n`, while the transform is
//! exact for every `n`.
//!
//! A well-known slip in the published table of these values: the recursion
//! yields `b_4 = 73/5760`, not the printed `73/5670`. Only `73/5760`
//! reproduces the published `d_4 = 139/17280` through the transform above;
//! see [`crate::report`] for the side-by-side comparison.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{decimal_string, rat, Rational};

/// Which coefficient sequence a table holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffKind {
    B,
    D,
}

impl CoeffKind {
    pub fn name(self) -> &'static str {
        match self {
            CoeffKind::B => "b",
            CoeffKind::D => "d",
        }
    }
}

/// How the table entries were derived.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Derivation {
    Recursion,
    BinomialTransform,
}

/// Cached prefix of a coefficient sequence, 1-indexed. Extending a table
/// never changes existing entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    kind: CoeffKind,
    values: Vec<Rational>,
    derivation: Derivation,
}

impl CoeffTable {
    pub fn kind(&self) -> CoeffKind {
        self.kind
    }

    pub fn derivation(&self) -> Derivation {
        self.derivation
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Entry `k` (1-indexed), or an error if the table is shorter.
    pub fn get(&self, k: usize) -> Result<&Rational> {
        if k == 0 {
            return Err(Error::Domain("coefficient index k starts at 1".into()));
        }
        self.values.get(k - 1).ok_or(Error::TableTooShort {
            need: k,
            have: self.values.len(),
        })
    }

    /// All entries in order, `values()[0]` being `k = 1`.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Extends the table in place to at least `count` entries.
    pub fn extend_to(&mut self, count: usize) {
        if count <= self.values.len() {
            return;
        }
        match self.kind {
            CoeffKind::B => extend_b(&mut self.values, count),
            CoeffKind::D => {
                // d_n consumes b_2..b_n; recompute the b prefix, then extend.
                let mut b = Vec::new();
                extend_b(&mut b, count);
                extend_d(&mut self.values, &b, count);
            }
        }
    }
}

/// First `count` coefficients of the `b` sequence, exactly.
pub fn b_table(count: usize) -> Result<CoeffTable> {
    if count < 1 {
        return Err(Error::Domain("coefficient count must be >= 1".into()));
    }
    let mut values = Vec::with_capacity(count);
    extend_b(&mut values, count);
    Ok(CoeffTable {
        kind: CoeffKind::B,
        values,
        derivation: Derivation::Recursion,
    })
}

/// First `count` coefficients of the `d` sequence, exactly.
pub fn d_table(count: usize) -> Result<CoeffTable> {
    if count < 1 {
        return Err(Error::Domain("coefficient count must be >= 1".into()));
    }
    let b = b_table(count)?;
    let mut values = Vec::with_capacity(count);
    extend_d(&mut values, b.values(), count);
    Ok(CoeffTable {
        kind: CoeffKind::D,
        values,
        derivation: Derivation::BinomialTransform,
    })
}

fn extend_b(values: &mut Vec<Rational>, count: usize) {
    if values.is_empty() && count >= 1 {
        values.push(rat(1, 2));
    }
    while values.len() < count {
        let n = values.len(); // computing b_{n+1}
        let mut sum = Rational::zero();
        for (k, bk) in values.iter().enumerate() {
            // k is 0-based: entry is b_{k+1}, weight 1/(n+2-(k+1)).
            sum += bk / Rational::from_integer((n + 1 - k).into());
        }
        let next = (Rational::from_integer(BigInt::from(n + 2)).recip() - sum)
            / Rational::from_integer(BigInt::from(n + 1));
        debug_assert!(next.is_positive());
        values.push(next);
    }
}

fn extend_d(values: &mut Vec<Rational>, b: &[Rational], count: usize) {
    if values.is_empty() && count >= 1 {
        values.push(rat(1, 2));
    }
    while values.len() < count {
        let n = values.len() + 1; // computing d_n
        values.push(d_from_b(n, b));
    }
}

/// The binomial transform for a single `d_n`, `n >= 2`, from a slice of
/// `b` values (`b[j]` holding `b_{j+1}`). Exposed so consistency checks can
/// rerun the transform against alternative `b` candidates.
pub fn d_from_b(n: usize, b: &[Rational]) -> Rational {
    debug_assert!(n >= 2 && b.len() >= n);
    let sign = |j: usize| -> Rational {
        if (n - 1 - j).is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        }
    };
    let mut bracket = sign(0) * rat(1, 2);
    let mut pow12 = BigInt::one();
    for (j, b_next) in b.iter().enumerate().take(n).skip(1) {
        // b_next = b_{j+1}
        pow12 *= 12;
        let c = num_integer::binomial(BigInt::from(n - 1), BigInt::from(j));
        bracket += Rational::from_integer(c * &pow12) * sign(j) * b_next;
    }
    let scale = Rational::from_integer(BigInt::from(12).pow(n as u32 - 1)).recip();
    scale * bracket
}

/// Correctly rounded decimal rendering of entry `k` to `digits` significant
/// digits.
pub fn coeff_decimal(table: &CoeffTable, k: usize, digits: usize) -> Result<String> {
    if digits < 1 {
        return Err(Error::Domain("digits must be >= 1".into()));
    }
    Ok(decimal_string(table.get(k)?, digits))
}
