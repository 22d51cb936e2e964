use eulerint::identities::{check_item, Params, Status};
use eulerint::oracle::{moment_expand, product_integral, shifted_moment, Factor, ProductSpec};
use eulerint::{beta_int, bernoulli_poly, euler_numbers, euler_poly, Family, Poly, Rational};

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d).unwrap()
}

#[test]
fn beta_matches_polynomial_integral() {
    let one_minus_x = Poly::from_coeffs(vec![q(1, 1), q(-1, 1)]);
    for a in 1..=15i64 {
        for b in 1..=15i64 {
            let mut p = Poly::one();
            for _ in 1..a {
                p = &p * &Poly::x();
            }
            for _ in 1..b {
                p = &p * &one_minus_x;
            }
            assert_eq!(beta_int(a, b).unwrap(), p.integral01(), "a={a} b={b}");
        }
    }
}

#[test]
fn shifted_factor_is_shifted_poly() {
    for n in 0..=10 {
        let f = Factor::shifted(Family::Bernoulli, n, q(1, 3));
        assert_eq!(f.poly(), bernoulli_poly(n).shift(&q(1, 3)));
    }
}

#[test]
fn moment_agrees_with_brute_force() {
    for n in 0..=10 {
        assert_eq!(moment_expand(n), shifted_moment(n, Family::Euler, n), "n={n}");
    }
}

#[test]
fn eq17_literal_residual() {
    // the display as printed does not hold at n = 1
    let r = check_item("eq17", Params::N { n: 1 }).unwrap();
    assert_eq!(r.status, Status::Fails);
    assert!(!r.residual.is_zero());
}

#[test]
fn integral_of_single_factor() {
    let e = euler_numbers(21);
    for n in 0..=20 {
        let spec = ProductSpec::euler(&[n]).unwrap();
        let expect = Rational::from(-2) * &e.values()[n + 1] / Rational::from(n + 1);
        assert_eq!(product_integral(&spec), expect);
        assert_eq!(euler_poly(n).integral01(), expect);
    }
}
