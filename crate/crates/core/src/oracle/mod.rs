//! Ground truth for integrals of products of basis polynomials.
//!
//! [`product_integral`] is the brute-force reference: multiply the factors
//! out and integrate termwise. The closed sums and the integration-by-parts
//! chains in [`chains`] are independent routes to the same numbers and are
//! checked against it.

pub mod chains;
pub mod series;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{beta_int, binom_q, Rational};
use crate::polyalg::{basis_poly, euler_poly, Family, Poly};
use crate::special_sequences::euler_number;

pub use chains::{
    bernoulli_euler_chain, euler_pair_chain, moment_chain_descending, moment_chain_forward,
    triple_via_expansion,
};

/// One factor `F_index(x + shift)` of an integrand.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub family: Family,
    pub index: usize,
    pub shift: Rational,
}

impl Factor {
    pub fn new(family: Family, index: usize) -> Self {
        Factor { family, index, shift: Rational::zero() }
    }

    pub fn shifted(family: Family, index: usize, shift: Rational) -> Self {
        Factor { family, index, shift }
    }

    pub fn poly(&self) -> Poly {
        basis_poly(self.family, self.index).shift(&self.shift)
    }
}

/// Integrand `prod_i F_i(x + s_i)`; never empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductSpec {
    factors: Vec<Factor>,
}

impl ProductSpec {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Domain("a product needs at least one factor".into()));
        }
        Ok(ProductSpec { factors })
    }

    /// Product of unshifted Euler polynomials with the given indices.
    pub fn euler(indices: &[usize]) -> Result<Self> {
        Self::new(indices.iter().map(|&i| Factor::new(Family::Euler, i)).collect())
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// The integrand expanded as a single polynomial.
    pub fn expand(&self) -> Poly {
        self.factors.iter().fold(Poly::one(), |acc, f| &acc * &f.poly())
    }
}

/// `∫_0^1 prod_i F_i(x + s_i) dx`, exactly.
pub fn product_integral(spec: &ProductSpec) -> Rational {
    spec.expand().integral01()
}

/// `∫_0^1 y^power F_index(x + y) dy` as a polynomial in `x`, by expanding
/// `(x + y)^i` bivariately and integrating each power of `y`.
pub fn shifted_moment(power: usize, family: Family, index: usize) -> Poly {
    let base = basis_poly(family, index);
    let coeffs = (0..=index)
        .map(|d| {
            base.coeffs()
                .iter()
                .enumerate()
                .skip(d)
                .map(|(i, c)| {
                    let j = i - d; // power of y taken from (x + y)^i
                    c * &binom_q(i as u64, j as i64) / Rational::from(power + j + 1)
                })
                .sum()
        })
        .collect();
    Poly::from_coeffs(coeffs)
}

/// `sum_{l=0}^n C(n,l) E_{n-l}(x) / (n+l+1)`: the moment `∫_0^1 y^n E_n(x+y) dy`
/// expanded by the addition formula.
pub fn moment_expand(n: usize) -> Poly {
    let terms: Vec<(Rational, Poly)> = (0..=n)
        .map(|l| {
            let w = binom_q(n as u64, l as i64) / Rational::from(n + l + 1);
            (w, euler_poly(n - l))
        })
        .collect();
    Poly::linear_combine(terms.iter().map(|(w, p)| (w.clone(), p)))
}

/// `sum_{l=0}^n C(n,l) (-1)^l E_{n-l}(x+1) B(n+1, l+1)`: the same moment
/// after reflecting `E_n` about `1/2`.
pub fn moment_reflect(n: usize) -> Poly {
    let one = Rational::one();
    let terms: Vec<(Rational, Poly)> = (0..=n)
        .map(|l| {
            let beta = beta_int(n as i64 + 1, l as i64 + 1).expect("positive arguments");
            let w = binom_q(n as u64, l as i64) * Rational::sign_power(l as u64) * beta;
            (w, euler_poly(n - l).shift(&one))
        })
        .collect();
    Poly::linear_combine(terms.iter().map(|(w, p)| (w.clone(), p)))
}

/// `∫_0^1 E_n E_m` through the Beta expansion
/// `sum_l sum_k C(n,l) C(m,k) (-1)^m E_l E_k B(n-l+1, m-k+1)`.
pub fn euler_pair_beta_sum(m: usize, n: usize) -> Rational {
    let mut acc = Rational::zero();
    for l in 0..=n {
        for k in 0..=m {
            let beta = beta_int((n - l + 1) as i64, (m - k + 1) as i64).expect("positive arguments");
            acc += binom_q(n as u64, l as i64)
                * binom_q(m as u64, k as i64)
                * euler_number(l)
                * euler_number(k)
                * beta;
        }
    }
    acc * Rational::sign_power(m as u64)
}

/// `∫_0^1 E_m E_n E_p` through the triple Beta sum: the first two factors
/// expanded about 0, the third reflected and expanded about 1.
pub fn triple_beta_sum(m: usize, n: usize, p: usize) -> Rational {
    let mut acc = Rational::zero();
    for l in 0..=m {
        let wl = binom_q(m as u64, l as i64) * euler_number(m - l);
        if wl.is_zero() {
            continue;
        }
        for j in 0..=n {
            let wj = binom_q(n as u64, j as i64) * euler_number(n - j);
            if wj.is_zero() {
                continue;
            }
            for k in 0..=p {
                let beta = beta_int((l + j + 1) as i64, (p - k + 1) as i64).expect("positive arguments");
                acc += &wl * &wj * binom_q(p as u64, k as i64) * euler_number(k) * beta;
            }
        }
    }
    acc * Rational::sign_power(p as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::bernoulli_poly;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d).unwrap()
    }

    fn euler_product(idx: &[usize]) -> Rational {
        product_integral(&ProductSpec::euler(idx).unwrap())
    }

    #[test]
    fn product_integral_examples() {
        assert_eq!(euler_product(&[1, 1]), q(1, 12));
        assert!(euler_product(&[1, 1, 1]).is_zero());
        assert_eq!(euler_product(&[1, 1, 2]), q(-1, 120));
        assert_eq!(euler_product(&[2, 2, 2]), q(-1, 140));
        assert!(ProductSpec::new(vec![]).is_err());
        // E_1(x + 1/2) = x, so ∫ x^2 = 1/3
        let f = Factor::shifted(Family::Euler, 1, q(1, 2));
        let spec = ProductSpec::new(vec![f.clone(), f]).unwrap();
        assert_eq!(product_integral(&spec), q(1, 3));
    }

    #[test]
    fn moment_examples() {
        assert_eq!(moment_expand(0), Poly::one());
        let half_x_plus = Poly::from_coeffs(vec![q(1, 12), q(1, 2)]);
        assert_eq!(moment_expand(1), half_x_plus);
        assert_eq!(moment_reflect(0), Poly::one());
        assert_eq!(moment_reflect(1), half_x_plus);
        for n in 0..=15 {
            let brute = shifted_moment(n, Family::Euler, n);
            assert_eq!(moment_expand(n), brute, "expand n={n}");
            assert_eq!(moment_reflect(n), brute, "reflect n={n}");
        }
    }

    #[test]
    fn shifted_moment_by_hand() {
        // ∫ y^2 B_2(x + y) dy with B_2(t) = t^2 - t + 1/6
        //   = x^2/3 + 2x/4 + 1/5 - x/3 - 1/4 + 1/18
        let expect = Poly::from_coeffs(vec![q(1, 5) - q(1, 4) + q(1, 18), q(1, 2) - q(1, 3), q(1, 3)]);
        assert_eq!(shifted_moment(2, Family::Bernoulli, 2), expect);
        assert_eq!(shifted_moment(0, Family::Bernoulli, 3).eval(&Rational::zero()), bernoulli_poly(3).integral01());
    }

    #[test]
    fn pair_beta_sum_matches_product() {
        for m in 0..=10 {
            for n in 0..=10 {
                assert_eq!(euler_pair_beta_sum(m, n), euler_product(&[m, n]), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn triple_beta_sum_examples() {
        assert!(triple_beta_sum(1, 1, 1).is_zero());
        assert_eq!(triple_beta_sum(1, 1, 2), q(-1, 120));
        assert_eq!(triple_beta_sum(3, 2, 1), euler_product(&[3, 2, 1]));
    }
}
