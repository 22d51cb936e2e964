//! Truncated power-series division, used as an independent source for the
//! Euler and Bernoulli numbers (no recurrence involved).

use crate::exactnum::{factorial, Rational};

/// First `len` coefficients of `num / den`. `den[0]` must be nonzero.
pub fn divide(num: &[Rational], den: &[Rational], len: usize) -> Vec<Rational> {
    let lead = den.first().filter(|d| !d.is_zero()).expect("series divisor has zero constant term");
    let at = |s: &[Rational], i: usize| s.get(i).cloned().unwrap_or_default();
    let mut out: Vec<Rational> = Vec::with_capacity(len);
    for n in 0..len {
        let mut acc = at(num, n);
        for k in 1..=n {
            acc -= &(at(den, k) * &out[n - k]);
        }
        out.push(acc / lead);
    }
    out
}

fn inverse_factorial(k: usize) -> Rational {
    Rational::one() / Rational::from(factorial(k as u64))
}

fn exponential_to_ordinary(coeffs: Vec<Rational>) -> Vec<Rational> {
    coeffs
        .into_iter()
        .enumerate()
        .map(|(k, c)| c * Rational::from(factorial(k as u64)))
        .collect()
}

/// `E_0 ..= E_max` from the Taylor expansion of `2/(e^t + 1)`.
pub fn euler_numbers_by_series(max: usize) -> Vec<Rational> {
    let len = max + 1;
    // e^t + 1 = 2 + t + t^2/2! + ...
    let den: Vec<Rational> = (0..len)
        .map(|k| if k == 0 { Rational::from(2) } else { inverse_factorial(k) })
        .collect();
    exponential_to_ordinary(divide(&[Rational::from(2)], &den, len))
}

/// `B_0 ..= B_max` from the Taylor expansion of `t/(e^t - 1)`.
pub fn bernoulli_numbers_by_series(max: usize) -> Vec<Rational> {
    let len = max + 1;
    // (e^t - 1)/t = sum t^k/(k+1)!
    let den: Vec<Rational> = (0..len).map(|k| inverse_factorial(k + 1)).collect();
    exponential_to_ordinary(divide(&[Rational::one()], &den, len))
}
