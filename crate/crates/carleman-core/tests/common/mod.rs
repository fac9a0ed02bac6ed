//! Independent oracles for the coefficient sequences, deliberately computed
//! by a different route than the library: both sequences are read off as
//! power-series coefficients of `1 - exp(psi(w))` for the appropriate
//! recentring `psi`, using only exact series composition. Nothing here calls
//! the recursion or the binomial transform under test.

use carleman_core::Rational;
use num_traits::{One, Zero};

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Exact power-series exponential: given `psi_1..psi_n` (constant term must
/// vanish), returns `e_0..e_n` with `exp(sum psi_j w^j) = sum e_n w^n`, via
/// the derivative recurrence `n e_n = sum_{j=1}^{n} j psi_j e_{n-j}`.
fn series_exp(psi: &[Rational], n: usize) -> Vec<Rational> {
    let mut e = vec![Rational::one()];
    for k in 1..=n {
        let mut acc = Rational::zero();
        for j in 1..=k.min(psi.len()) {
            acc += Rational::from_integer(j.into()) * &psi[j - 1] * &e[k - j];
        }
        e.push(acc / Rational::from_integer(k.into()));
    }
    e
}

/// `b_1..b_count` from the generating function: with `w = 1/(1+x)`,
/// `(1+1/x)^x = exp((1-w)(-ln(1-w))/w)`, so
/// `sum b_k w^k = 1 - exp(psi(w))` with `psi_j = -1/(j(j+1))`.
pub fn b_oracle(count: usize) -> Vec<Rational> {
    let psi: Vec<Rational> = (1..=count).map(|j| -rat(1, (j * (j + 1)) as i64)).collect();
    series_exp(&psi, count)[1..].iter().map(|e| -e).collect()
}

/// `d_1..d_count` the same way for the recentred variable `v = 1/(x+11/12)`:
/// `x ln(1+1/x) - 1 = sum_{i>=1} (c_{i+1} - (11/12) c_i) v^i` with
/// `c_j = ((-1)^(j-1) (1/12)^j + (11/12)^j)/j` the log-series coefficients
/// of `ln((12+v)/(12-11v))`.
pub fn d_oracle(count: usize) -> Vec<Rational> {
    let c: Vec<Rational> = (1..=count + 1)
        .map(|j| {
            let a = num_traits::pow(rat(1, 12), j);
            let b = num_traits::pow(rat(11, 12), j);
            let signed_a = if j % 2 == 1 { a } else { -a };
            (signed_a + b) / Rational::from_integer(j.into())
        })
        .collect();
    let psi: Vec<Rational> = (1..=count)
        .map(|i| &c[i] - rat(11, 12) * &c[i - 1])
        .collect();
    series_exp(&psi, count)[1..].iter().map(|e| -e).collect()
}

#[allow(dead_code)]
pub fn rational(n: i64, d: i64) -> Rational {
    rat(n, d)
}
