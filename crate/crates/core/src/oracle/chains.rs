//! Integration-by-parts reduction chains, run as algorithms.
//!
//! Every boundary term is computed from the antiderivative actually used at
//! that step, evaluated at both ends of `[0, 1]`. Nothing relies on the
//! closed boundary identities (`E_k(1) = -E_k`, `B_k(1) = B_k`), so these
//! chains can serve as references for printed closed forms.

use crate::error::{Error, Result};
use crate::exactnum::{beta_int, binom_q, Rational};
use crate::identities::thm6_terms;
use crate::polyalg::{bernoulli_poly, euler_poly, Poly};
use crate::special_sequences::euler_number;

/// `[y^(a+1)/(a+1) * F(x+y)]` between `y = 0` and `y = 1`, with `F(x+y)`
/// given as a polynomial in `x` at each end.
fn moment_boundary(a: usize, at_one: &Poly, at_zero: &Poly) -> Poly {
    let w = |y: Rational| y.pow(a as u32 + 1) / Rational::from(a + 1);
    Poly::linear_combine([(w(Rational::one()), at_one), (-w(Rational::zero()), at_zero)])
}

/// `∫_0^1 y^n E_n(x+y) dy`, by repeatedly integrating the power of `y` and
/// differentiating the Euler factor until only `∫ y^(2n-1) E_1(x+y) dy`
/// remains, which is evaluated directly.
pub fn moment_chain_descending(n: usize) -> Result<Poly> {
    if n < 3 {
        return Err(Error::Domain(format!("descending moment chain requires n ≥ 3, got n = {n}")));
    }
    let one = Rational::one();
    let mut acc = Poly::zero();
    let mut weight = Rational::one();
    // step j rewrites ∫ y^(n+j) E_(n-j)(x+y) dy
    for j in 0..n - 1 {
        let (a, k) = (n + j, n - j);
        let e = euler_poly(k);
        let boundary = moment_boundary(a, &e.shift(&one), &e);
        acc = Poly::linear_combine([(Rational::one(), &acc), (weight.clone(), &boundary)]);
        weight = -weight * Rational::from(k) / Rational::from(a + 1);
    }
    // E_1(x + y) = E_1(x) + c*y, c the leading coefficient of E_1
    let a = 2 * n - 1;
    let e1 = euler_poly(1);
    let lead = e1.coeff(1);
    let base = &e1.scale(&(one / Rational::from(a + 1))) + &Poly::constant(lead / Rational::from(a + 2));
    Ok(Poly::linear_combine([(Rational::one(), &acc), (weight, &base)]))
}

/// `∫_0^1 y^n E_n(x+y) dy` by one integration by parts in the other
/// direction: integrate the Euler factor up to `E_(n+1)/(n+1)`, then evaluate
/// the remaining `∫ y^(n-1) E_(n+1)(x+y) dy` through reflection and Beta
/// integrals.
pub fn moment_chain_forward(n: usize) -> Result<Poly> {
    if n < 1 {
        return Err(Error::Domain("forward moment chain requires n ≥ 1".into()));
    }
    let up = euler_poly(n + 1).scale(&(Rational::one() / Rational::from(n + 1)));
    // [y^n * E_(n+1)(x+y)/(n+1)] from 0 to 1
    let ends = |y: Rational| y.pow(n as u32);
    let boundary = Poly::linear_combine([
        (ends(Rational::one()), &up.shift(&Rational::one())),
        (-ends(Rational::zero()), &up),
    ]);

    // E_(n+1)(x+y) = (-1)^(n+1) sum_l C(n+1,l) E_(n+1-l)(-x) (1-y)^l
    let minus_one = -Rational::one();
    let terms: Vec<(Rational, Poly)> = (0..=n + 1)
        .map(|l| {
            let beta = beta_int(n as i64, l as i64 + 1).expect("positive arguments");
            let w = binom_q(n as u64 + 1, l as i64) * beta;
            (w, euler_poly(n + 1 - l).compose_affine(&minus_one, &Rational::zero()))
        })
        .collect();
    let rest = Poly::linear_combine(terms.iter().map(|(w, p)| (w.clone(), p)))
        .scale(&Rational::sign_power(n as u64 + 1));

    let k = Rational::from(n) / Rational::from(n + 1);
    Ok(Poly::linear_combine([(Rational::one(), &boundary), (-k, &rest)]))
}

/// `∫_0^1 E_n(x) E_m(x) dx` by moving one derivative at a time from `E_m`
/// onto `E_n` until the second factor is `E_0`, then closing with
/// `∫_0^1 E_k = -2 E_(k+1)/(k+1)`.
pub fn euler_pair_chain(m: usize, n: usize) -> Rational {
    let (zero, one) = (Rational::zero(), Rational::one());
    let mut acc = Rational::zero();
    let mut weight = Rational::one();
    let (mut a, mut b) = (n, m);
    while b > 0 {
        let up = euler_poly(a + 1);
        let down = euler_poly(b);
        let boundary = (up.eval(&one) * down.eval(&one) - up.eval(&zero) * down.eval(&zero))
            / Rational::from(a + 1);
        acc += &weight * &boundary;
        weight = -weight * Rational::from(b) / Rational::from(a + 1);
        a += 1;
        b -= 1;
    }
    let closing = Rational::from(-2) * euler_number(a + 1) / Rational::from(a + 1);
    acc + weight * closing
}

/// `∫_0^1 B_q(x) E_p(x) dx` by raising the Bernoulli index and lowering the
/// Euler index until `E_0`, then integrating the Bernoulli polynomial.
pub fn bernoulli_euler_chain(q: usize, p: usize) -> Result<Rational> {
    if q < 1 {
        return Err(Error::Domain(format!("Bernoulli–Euler chain requires q ≥ 1, got q = {q}")));
    }
    let (zero, one) = (Rational::zero(), Rational::one());
    let mut acc = Rational::zero();
    let mut weight = Rational::one();
    let (mut a, mut b) = (q, p);
    while b > 0 {
        let up = bernoulli_poly(a + 1);
        let down = euler_poly(b);
        let boundary = (up.eval(&one) * down.eval(&one) - up.eval(&zero) * down.eval(&zero))
            / Rational::from(a + 1);
        acc += &weight * &boundary;
        weight = -weight * Rational::from(b) / Rational::from(a + 1);
        a += 1;
        b -= 1;
    }
    Ok(acc + weight * bernoulli_poly(a).integral01())
}

/// `∫_0^1 E_m E_n E_p` by substituting the Bernoulli expansion of `E_m E_n`
/// and integrating each term against `E_p`.
pub fn triple_via_expansion(m: usize, n: usize, p: usize) -> Result<Rational> {
    let (terms, constant) = thm6_terms(m, n)?;
    let mut acc = Rational::zero();
    for (coef, index) in terms {
        acc += coef * bernoulli_euler_chain(index, p)?;
    }
    let integral_ep = Rational::from(-2) * euler_number(p + 1) / Rational::from(p + 1);
    Ok(acc + constant * integral_ep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{moment_expand, moment_reflect, product_integral, ProductSpec};
    use crate::polyalg::Family;
    use crate::oracle::Factor;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d).unwrap()
    }

    fn pair(m: usize, n: usize) -> Rational {
        product_integral(&ProductSpec::euler(&[m, n]).unwrap())
    }

    #[test]
    fn descending_chain() {
        assert!(moment_chain_descending(2).is_err());
        assert_eq!(moment_chain_descending(3).unwrap(), moment_expand(3));
        assert_eq!(moment_chain_descending(4).unwrap(), moment_reflect(4));
        let at0 = moment_chain_descending(3).unwrap().eval(&Rational::zero());
        assert_eq!(at0, moment_expand(3).eval(&Rational::zero()));
        for n in 3..=12 {
            assert_eq!(moment_chain_descending(n).unwrap(), moment_expand(n), "n={n}");
        }
    }

    #[test]
    fn forward_chain() {
        assert!(moment_chain_forward(0).is_err());
        let half_x_plus = Poly::from_coeffs(vec![q(1, 12), q(1, 2)]);
        assert_eq!(moment_chain_forward(1).unwrap(), half_x_plus);
        assert_eq!(moment_chain_forward(2).unwrap(), moment_expand(2));
        assert_eq!(moment_chain_forward(5).unwrap(), moment_reflect(5));
        for n in 1..=12 {
            assert_eq!(moment_chain_forward(n).unwrap(), moment_expand(n), "n={n}");
        }
    }

    #[test]
    fn pair_chain() {
        assert_eq!(euler_pair_chain(1, 1), q(1, 12));
        assert!(euler_pair_chain(2, 1).is_zero());
        assert_eq!(euler_pair_chain(2, 2), q(1, 30));
        for m in 0..=15 {
            for n in 0..=15 {
                if m + n == 0 {
                    continue;
                }
                let v = euler_pair_chain(m, n);
                assert_eq!(v, pair(m, n), "m={m} n={n}");
                assert_eq!(v, euler_pair_chain(n, m));
                if (m + n) % 2 == 1 {
                    assert!(v.is_zero());
                }
            }
        }
    }

    #[test]
    fn bernoulli_euler() {
        assert!(bernoulli_euler_chain(0, 2).is_err());
        assert_eq!(bernoulli_euler_chain(1, 1).unwrap(), q(1, 12));
        assert!(bernoulli_euler_chain(2, 1).unwrap().is_zero());
        for qq in 1..=12 {
            for p in 0..=12 {
                let spec = ProductSpec::new(vec![Factor::new(Family::Bernoulli, qq), Factor::new(Family::Euler, p)])
                    .unwrap();
                assert_eq!(bernoulli_euler_chain(qq, p).unwrap(), product_integral(&spec), "q={qq} p={p}");
            }
        }
    }

    #[test]
    fn triple_expansion() {
        assert!(triple_via_expansion(1, 0, 3).is_err());
        assert!(triple_via_expansion(1, 1, 1).unwrap().is_zero());
        assert_eq!(triple_via_expansion(1, 1, 2).unwrap(), q(-1, 120));
        assert_eq!(triple_via_expansion(2, 2, 2).unwrap(), q(-1, 140));
    }
}
