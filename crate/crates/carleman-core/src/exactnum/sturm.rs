//! Sturm-sequence root counting on the open positive half-line.
//!
//! The chain is computed over exact rationals with content removal after each
//! division step to bound coefficient blow-up. Signs at the interval ends are
//! read off exactly: at +infinity from the leading coefficient, at 0+ from
//! the lowest nonzero coefficient, so no limits are ever evaluated
//! numerically.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::poly::RatPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Number of distinct real roots of `p` in the open interval (0, +inf).
///
/// The zero polynomial has no well-defined root count and is rejected.
pub fn sturm_positive_root_count(p: &RatPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == 0 {
        return Ok(0);
    }
    let p = squarefree_part(p);
    let chain = sturm_chain(&p);

    let v0 = variations(chain.iter().map(sign_at_zero_plus));
    let vinf = variations(chain.iter().map(sign_at_pos_infinity));
    Ok(v0 - vinf)
}

/// Sign of `q` just right of 0: the sign of its lowest nonzero coefficient.
fn sign_at_zero_plus(q: &RatPoly) -> i8 {
    match q.lowest_nonzero() {
        None => 0,
        Some((_, c)) => rational_sign(c),
    }
}

/// Sign of `q` at +infinity: the sign of its leading coefficient.
fn sign_at_pos_infinity(q: &RatPoly) -> i8 {
    match q.leading() {
        None => 0,
        Some(c) => rational_sign(c),
    }
}

fn rational_sign(c: &Rational) -> i8 {
    if c.is_zero() {
        0
    } else if c.is_positive() {
        1
    } else {
        -1
    }
}

/// Counts sign changes in a sequence, skipping zeros.
fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Canonical Sturm chain of a squarefree polynomial: p, p', then negated
/// remainders, each rescaled to a primitive integer polynomial (positive
/// scaling preserves all signs).
fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![make_primitive(p)];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(make_primitive(&d));
    loop {
        let n = chain.len();
        let r = poly_rem(&chain[n - 2], &chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(make_primitive(&-&r));
        if chain.last().map(RatPoly::degree) == Some(0) {
            break;
        }
    }
    chain
}

/// `p` divided by gcd(p, p'): same distinct roots, all simple.
fn squarefree_part(p: &RatPoly) -> RatPoly {
    let d = p.derivative();
    if d.is_zero() {
        return p.clone();
    }
    let g = poly_gcd(p, &d);
    if g.degree() <= 0 {
        return p.clone();
    }
    poly_div_exact(p, &g)
}

/// Euclidean gcd with primitive normalization at each step.
fn poly_gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut a = make_primitive(a);
    let mut b = make_primitive(b);
    while !b.is_zero() {
        let r = poly_rem(&a, &b);
        a = b;
        b = make_primitive(&r);
    }
    a
}

/// Remainder of `a` modulo `b` (`b` nonzero).
fn poly_rem(a: &RatPoly, b: &RatPoly) -> RatPoly {
    debug_assert!(!b.is_zero());
    let db = b.degree();
    let lead_b = b.leading().expect("nonzero divisor").clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree() >= db {
        let dr = r.degree();
        let q = r.leading().expect("nonzero remainder") / &lead_b;
        let m = RatPoly::monomial(q, (dr - db) as usize);
        r = &r - &(&m * b);
        debug_assert!(r.degree() < dr);
    }
    r
}

/// Exact quotient `a / b` when the division is known to be exact.
fn poly_div_exact(a: &RatPoly, b: &RatPoly) -> RatPoly {
    debug_assert!(!b.is_zero());
    let db = b.degree();
    let lead_b = b.leading().expect("nonzero divisor").clone();
    let mut r = a.clone();
    let mut q_coeffs = vec![Rational::zero(); (a.degree() - db + 1).max(0) as usize];
    while !r.is_zero() && r.degree() >= db {
        let dr = r.degree();
        let q = r.leading().expect("nonzero remainder") / &lead_b;
        q_coeffs[(dr - db) as usize] = q.clone();
        let m = RatPoly::monomial(q, (dr - db) as usize);
        r = &r - &(&m * b);
    }
    debug_assert!(r.is_zero(), "division was not exact");
    RatPoly::from_coeffs(q_coeffs)
}

/// Rescales by a positive rational so coefficients become content-free
/// integers. Keeps the sign of every coefficient.
fn make_primitive(p: &RatPoly) -> RatPoly {
    if p.is_zero() {
        return RatPoly::zero();
    }
    let mut denom_lcm = BigInt::from(1);
    for c in p.coeffs() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut content = BigInt::zero();
    let scaled: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    for v in &scaled {
        content = content.gcd(v);
    }
    debug_assert!(content.is_positive());
    RatPoly::from_coeffs(
        scaled
            .into_iter()
            .map(|v| Rational::from_integer(v / &content))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn poly(cs: &[i64]) -> RatPoly {
        RatPoly::from_coeffs(cs.iter().map(|&n| rat(n, 1)).collect())
    }

    #[test]
    fn two_positive_roots() {
        // (t-1)(t-2) = t^2 - 3t + 2
        assert_eq!(sturm_positive_root_count(&poly(&[2, -3, 1])).unwrap(), 2);
    }

    #[test]
    fn no_real_roots() {
        assert_eq!(sturm_positive_root_count(&poly(&[1, 0, 1])).unwrap(), 0);
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (t-1)^2 (t-2)
        let p = &poly(&[-1, 1]).pow(2) * &poly(&[-2, 1]);
        assert_eq!(sturm_positive_root_count(&p).unwrap(), 2);
    }

    #[test]
    fn root_at_origin_excluded() {
        assert_eq!(sturm_positive_root_count(&poly(&[0, 0, 0, 1])).unwrap(), 0);
        // t^2(t - 3): only the root at 3 lies in (0, inf).
        assert_eq!(sturm_positive_root_count(&poly(&[0, 0, -3, 1])).unwrap(), 1);
    }

    #[test]
    fn irrational_root() {
        // t^2 - 2 has one positive root.
        assert_eq!(sturm_positive_root_count(&poly(&[-2, 0, 1])).unwrap(), 1);
    }

    #[test]
    fn negative_roots_ignored() {
        // (t+1)(t+2)
        assert_eq!(sturm_positive_root_count(&poly(&[2, 3, 1])).unwrap(), 0);
    }

    #[test]
    fn constants_have_no_roots() {
        assert_eq!(sturm_positive_root_count(&poly(&[5])).unwrap(), 0);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(matches!(
            sturm_positive_root_count(&RatPoly::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }
}
