//! Literal transcriptions of each registered display.
//!
//! Conventions used throughout: sums written to infinity stop once their
//! binomial weights vanish, `Γ(k) = (k-1)!` at positive integers, and any
//! integral appearing inside a display is evaluated exactly.

use super::{Arity, DomainCheck, Evaluator, IdentityClass, IdentityItem, Params, Value, ValueKind};
use crate::exactnum::{binom_q, factorial, Rational};
use crate::oracle::{
    bernoulli_euler_chain, euler_pair_chain, moment_expand, product_integral, shifted_moment, Factor,
    ProductSpec,
};
use crate::polyalg::{bernoulli_poly, euler_poly, Family, Poly};
use crate::special_sequences::{bernoulli_number, euler_number};

fn int(k: usize) -> Rational {
    Rational::from(k)
}

fn fact(k: usize) -> Rational {
    Rational::from(factorial(k as u64))
}

fn binom(n: usize, k: usize) -> Rational {
    binom_q(n as u64, k as i64)
}

fn sign(k: usize) -> Rational {
    Rational::sign_power(k as u64)
}

/// `Γ(k)` for a positive integer `k`.
fn gamma(k: usize) -> Rational {
    fact(k - 1)
}

/// `from * (from+1) * ... * to`, empty product when `to < from`.
fn running_product(from: usize, to: usize) -> Rational {
    (from..=to).map(int).product()
}

fn e(k: usize) -> Rational {
    euler_number(k)
}

/// `E_k(x + 1)`
fn e_at_x_plus_1(k: usize) -> Poly {
    euler_poly(k).shift(&Rational::one())
}

fn combine(terms: Vec<(Rational, Poly)>) -> Poly {
    Poly::linear_combine(terms.iter().map(|(c, p)| (c.clone(), p)))
}

fn euler_product(indices: &[usize]) -> Rational {
    product_integral(&ProductSpec::euler(indices).expect("nonempty"))
}

fn poly(p: Poly) -> Value {
    Value::Poly(p)
}

fn rat(r: Rational) -> Value {
    Value::Rational(r)
}

// ---- domains ----

fn any(_: &Params) -> Result<(), String> {
    Ok(())
}

fn n_at_least(p: &Params, min: usize) -> Result<(), String> {
    if p.n() >= min {
        Ok(())
    } else {
        Err(format!("n ≥ {min}"))
    }
}

fn n_ge1(p: &Params) -> Result<(), String> {
    n_at_least(p, 1)
}

fn n_ge3(p: &Params) -> Result<(), String> {
    n_at_least(p, 3)
}

fn m_ge1(p: &Params) -> Result<(), String> {
    if p.mn().0 >= 1 {
        Ok(())
    } else {
        Err("m ≥ 1".into())
    }
}

fn m_n_ge1(p: &Params) -> Result<(), String> {
    let (m, n) = p.mn();
    if m >= 1 && n >= 1 {
        Ok(())
    } else {
        Err("m ≥ 1 and n ≥ 1".into())
    }
}

fn m_plus_n_ge2(p: &Params) -> Result<(), String> {
    let (m, n) = p.mn();
    if m + n >= 2 {
        Ok(())
    } else {
        Err("m + n ≥ 2".into())
    }
}

fn all_ge1(p: &Params) -> Result<(), String> {
    let (m, n, k) = p.mnp();
    if m >= 1 && n >= 1 && k >= 1 {
        Ok(())
    } else {
        Err("m, n, p ≥ 1".into())
    }
}

fn q_p_ge1(p: &Params) -> Result<(), String> {
    let (q, k) = p.qp();
    if q >= 1 && k >= 1 {
        Ok(())
    } else {
        Err("q ≥ 1 and p ≥ 1".into())
    }
}

// ---- Euler number recurrence as printed ----

fn eq2_lhs(p: &Params) -> Value {
    rat(e(p.n()))
}

fn eq2_rhs(p: &Params) -> Value {
    let n = p.n();
    rat(-(1..=n).map(|i| binom(n, i) * e(i)).sum::<Rational>())
}

// ---- moment ∫ y^n E_n(x+y) dy: addition formula vs reflection ----

/// `sum_l (-1)^l E_(n-l)(x+1)/(n+l+1) * C(n,l)/C(n+l,l)`
fn reflected_moment_sum(n: usize) -> Vec<(Rational, Poly)> {
    (0..=n)
        .map(|l| {
            let w = sign(l) / int(n + l + 1) * binom(n, l) / binom(n + l, l);
            (w, e_at_x_plus_1(n - l))
        })
        .collect()
}

fn thm1_lhs(p: &Params) -> Value {
    let n = p.n();
    poly(combine((0..=n).map(|l| (binom(n, l) / int(n + l + 1), euler_poly(n - l))).collect()))
}

fn thm1_rhs(p: &Params) -> Value {
    poly(combine(reflected_moment_sum(p.n())))
}

fn moment_oracle(p: &Params) -> Value {
    poly(moment_expand(p.n()))
}

fn thm1_x0_lhs(p: &Params) -> Value {
    let n = p.n();
    rat((0..=n).map(|l| binom(n, l) * e(n - l) / int(n + l + 1)).sum())
}

fn thm1_x0_rhs(p: &Params) -> Value {
    let n = p.n();
    let s: Rational = (0..=n).map(|l| e(n - l) / int(n + l + 1) * binom(n, l) / binom(n + l, l)).sum();
    rat(sign(n) * s)
}

fn moment_oracle_x0(p: &Params) -> Value {
    rat(moment_expand(p.n()).eval(&Rational::zero()))
}

// ---- descending integration-by-parts closed forms ----

fn thm2_lhs(p: &Params) -> Value {
    poly(combine(reflected_moment_sum(p.n())))
}

/// `(E_1(x+1) - 1/(2n+1))`
fn thm2_tail(n: usize) -> Poly {
    &e_at_x_plus_1(1) - &Poly::constant(Rational::one() / int(2 * n + 1))
}

fn thm2_printed_rhs(p: &Params) -> Value {
    let n = p.n();
    let mut terms = vec![(Rational::one() / int(n + 1), e_at_x_plus_1(n))];
    for l in 2..n {
        let w = binom(n, l) * int(n - l + 2) * sign(l - 1) / binom(n + l, l);
        terms.push((w, e_at_x_plus_1(n - l + 1)));
    }
    terms.push((sign(n - 1) / binom(2 * n, n), thm2_tail(n)));
    poly(combine(terms))
}

fn thm2_plus_rhs(p: &Params) -> Value {
    let n = p.n();
    let mut terms = vec![(Rational::one() / int(n + 1), e_at_x_plus_1(n))];
    for l in 2..n {
        // n(n-1)...(n-l+2) over (n+1)(n+2)...(n+l)
        let w = running_product(n - l + 2, n) * sign(l - 1) / running_product(n + 1, n + l);
        terms.push((w, e_at_x_plus_1(n - l + 1)));
    }
    terms.push((sign(n - 1) * fact(n) / running_product(n + 1, 2 * n), thm2_tail(n)));
    poly(combine(terms))
}

fn thm2_x0_lhs(p: &Params) -> Value {
    let n = p.n();
    rat((0..=n).map(|l| e(n - l) / int(n + l + 1) * binom(n, l) / binom(n + l, l)).sum())
}

fn thm2_x0_rhs(p: &Params) -> Value {
    let n = p.n();
    let mut s = e(n) / int(n + 1);
    for l in 2..n {
        s += binom(n, l) * int(n - l + 2) / binom(n + l, l) * e(n - l + 1);
    }
    let tail = Rational::new(1, 2).expect("nonzero") + Rational::one() / int(2 * n + 1);
    rat(s + tail / binom(2 * n, n))
}

// ---- forward integration by parts ----

/// Boundary value `E_(n+1)(x+1)/(n+1)` of the forward step, computed as
/// `∫ y^n E_n(x+y) dy + n/(n+1) ∫ y^(n-1) E_(n+1)(x+y) dy`.
fn forward_boundary(n: usize) -> Poly {
    let rest = shifted_moment(n - 1, Family::Euler, n + 1);
    Poly::linear_combine([(Rational::one(), &moment_expand(n)), (int(n) / int(n + 1), &rest)])
}

fn thm3_lhs(p: &Params) -> Value {
    let n = p.n();
    poly(euler_poly(n + 1).scale(&(Rational::one() / int(n + 1))))
}

fn thm3_rhs(p: &Params) -> Value {
    let n = p.n();
    let first: Vec<(Rational, Poly)> = (0..=n + 1)
        .map(|l| {
            let w = binom(n + 1, l) / binom(n + l, l) * sign(l) / int(n + 1);
            (w, e_at_x_plus_1(n + 1 - l))
        })
        .collect();
    let second = combine(reflected_moment_sum(n));
    poly(&combine(first) - &second)
}

fn thm3_oracle(p: &Params) -> Value {
    poly(forward_boundary(p.n()))
}

fn thm3_x0_lhs(p: &Params) -> Value {
    let n = p.n();
    rat(-e(n + 1) / int(n + 1))
}

fn thm3_x0_rhs(p: &Params) -> Value {
    let n = p.n();
    let first: Rational = (0..=n + 1).map(|l| binom(n + 1, l) / binom(n + l, l) * e(n + 1 - l)).sum();
    let second: Rational =
        (0..=n).map(|l| binom(n, l) / binom(n + l, l) * e(n - l) / int(n + l + 1)).sum();
    rat(first / int(n + 1) + second)
}

fn thm3_x0_oracle(p: &Params) -> Value {
    rat(forward_boundary(p.n()).eval(&Rational::zero()))
}

fn eq17_lhs(p: &Params) -> Value {
    let n = p.n();
    poly(shifted_moment(n, Family::Euler, n))
}

fn eq17_rhs(p: &Params) -> Value {
    let n = p.n();
    let rest = shifted_moment(n - 1, Family::Euler, n + 1);
    let head = euler_poly(n);
    poly(Poly::linear_combine([
        (Rational::one() / int(n + 1), &head),
        (-(int(n) / int(n + 1)), &rest),
    ]))
}

// ---- products of two Euler polynomials ----

fn thm4_closed_lhs(p: &Params) -> Value {
    let (m, n) = p.mn();
    rat(Rational::from(-2) * e(n + m + 1) / (binom(n + m, n) * int(n + m + 1)))
}

fn thm4_closed_rhs(p: &Params) -> Value {
    let (m, n) = p.mn();
    let mut s = Rational::zero();
    for l in 0..=n {
        for k in 0..=m {
            let g = gamma(n - l + 1) * gamma(m - k + 1) / gamma(n + m - l - k + 2);
            s += binom(n, l) * binom(m, k) * e(l) * e(k) * g;
        }
    }
    rat(s)
}

/// The double Beta sum drops the `(-1)^m` of the reflected expansion, so
/// both sides equal `(-1)^m ∫ E_n E_m`.
fn thm4_closed_oracle(p: &Params) -> Value {
    let (m, n) = p.mn();
    rat(sign(m) * euler_pair_chain(m, n))
}

fn thm4_moreover_lhs(p: &Params) -> Value {
    let (m, n) = p.mn();
    rat(e(n + m + 1))
}

fn thm4_moreover_rhs(p: &Params) -> Value {
    let (m, n) = p.mn();
    let mut s = Rational::zero();
    for l in 0..=n {
        for k in 0..=m {
            let w = binom(n, l) * binom(m, k) * binom(n + m, n) / binom(n + m - l - k, n - l);
            s += w * int(n + m + 1) * e(l) * e(k) / int(n + m - l - k + 1);
        }
    }
    rat(-s / Rational::from(2))
}

/// `E_(n+m+1)` recovered from the chain value of `∫ E_n E_m`.
fn thm4_moreover_oracle(p: &Params) -> Value {
    let (m, n) = p.mn();
    let scale = sign(m + 1) * binom(n + m, n) * int(n + m + 1) / Rational::from(2);
    rat(scale * euler_pair_chain(m, n))
}

fn eq22_lhs(p: &Params) -> Value {
    let (m, n) = p.mn();
    rat(-(Rational::one() / int(m + n)) * euler_poly(m + n).integral01())
}

fn eq22_rhs(p: &Params) -> Value {
    let (m, n) = p.mn();
    rat(Rational::from(2) * e(n + m - 1) / (int(m + n) * int(m + n + 1)))
}

fn eq22_oracle(p: &Params) -> Value {
    let (m, n) = p.mn();
    rat(euler_pair_chain(1, n + m - 1))
}

fn eq23_lhs(p: &Params) -> Value {
    let (m, n) = p.mn();
    rat(sign(m + 1) * Rational::from(2) * fact(m) * e(n + m + 1) / running_product(n + 1, n + m + 1))
}

fn eq23_rhs(p: &Params) -> Value {
    let (m, n) = p.mn();
    rat(Rational::from(2) * sign(m + 1) * fact(m) * fact(n) / fact(n + m) * e(n + m + 1) / int(n + m + 1))
}

fn euler_pair_oracle(p: &Params) -> Value {
    let (m, n) = p.mn();
    rat(euler_pair_chain(m, n))
}

fn thm5_lhs(p: &Params) -> Value {
    let (m, n) = p.mn();
    let a = &euler_poly(m - 1) * &euler_poly(n);
    let b = &euler_poly(m) * &euler_poly(n - 1);
    poly(Poly::linear_combine([(int(m), &a), (int(n), &b)]))
}

fn thm5_rhs(p: &Params) -> Value {
    let (m, n) = p.mn();
    let terms = (0..)
        .take_while(|r| 2 * r < m.max(n))
        .map(|r| {
            let k = 2 * r + 1;
            let w = Rational::from(-2) * e(k) * (binom(m, k) + binom(n, k));
            (w, bernoulli_poly(m + n - k))
        })
        .collect();
    poly(combine(terms))
}

fn thm5_oracle(p: &Params) -> Value {
    let (m, n) = p.mn();
    poly((&euler_poly(m) * &euler_poly(n)).derivative())
}

fn thm6_lhs(p: &Params) -> Value {
    let (m, n) = p.mn();
    poly(&euler_poly(m) * &euler_poly(n))
}

fn thm6_rhs(p: &Params) -> Value {
    let (m, n) = p.mn();
    poly(super::thm6_rhs(m, n).expect("domain checked"))
}

fn thm6_oracle(p: &Params) -> Value {
    let (m, n) = p.mn();
    let spec = ProductSpec::euler(&[m, n]).expect("nonempty");
    poly(spec.expand())
}

// ---- Bernoulli × Euler and triple products ----

fn eq29_lhs(p: &Params) -> Value {
    let (q, k) = p.qp();
    let mut s = Rational::zero();
    for l in 0..k {
        s += bernoulli_number(q + l) * e(k - l + 1) * sign(l) / running_product(q + 1, q + l);
    }
    let spec = ProductSpec::new(vec![
        Factor::new(Family::Bernoulli, q + k - 1),
        Factor::new(Family::Euler, 1),
    ])
    .expect("nonempty");
    let tail = fact(k) * sign(k - 1) * product_integral(&spec) / running_product(q + 1, q + k - 1);
    rat(Rational::from(2) * fact(k) * s + tail)
}

fn eq29_rhs(p: &Params) -> Value {
    let (q, k) = p.qp();
    let s: Rational = (0..=k)
        .map(|l| bernoulli_number(q + l) * e(k - l + 1) / binom(q + l, l) * sign(l) / fact(l))
        .sum();
    rat(Rational::from(2) * fact(k) * s)
}

fn eq29_oracle(p: &Params) -> Value {
    let (q, k) = p.qp();
    rat(bernoulli_euler_chain(q, k).expect("q ≥ 1"))
}

fn eq33_lhs(p: &Params) -> Value {
    let (m, n, k) = p.mnp();
    let mut outer = Rational::zero();
    for r in (0..).take_while(|r| 2 * r < m.max(n)) {
        let top = m + n - 2 * r;
        let w = (binom(m, 2 * r + 1) + binom(n, 2 * r + 1)) * e(2 * r + 1) / int(top);
        let inner: Rational = (1..=k)
            .map(|l| bernoulli_number(top + l) * e(k - l + 1) / binom(top + l, l) * sign(l) / fact(l))
            .sum();
        outer += w * inner;
    }
    let tail = Rational::from(4) * sign(m) * e(n + m + 1) * e(k + 1)
        / (binom(n + m, n) * int(n + m + 1) * int(k + 1));
    rat(Rational::from(-4) * fact(k) * outer + tail)
}

fn eq33_rhs(p: &Params) -> Value {
    let (m, n, k) = p.mnp();
    let mut s = Rational::zero();
    for l in 0..=m {
        for j in 0..=n {
            for i in 0..=k {
                let w = binom(m, l) * binom(n, j) * binom(k, i) * e(m - l) * e(n - j) * e(i);
                if w.is_zero() {
                    continue;
                }
                let d = binom(l + j + k - i, l + j) * int(l + j + k - i + 1);
                s += w / d;
            }
        }
    }
    rat(sign(k) * s)
}

fn eq33_oracle(p: &Params) -> Value {
    let (m, n, k) = p.mnp();
    rat(euler_product(&[m, n, k]))
}

#[allow(clippy::too_many_arguments)]
fn item(
    id: &'static str,
    description: &'static str,
    arity: Arity,
    kind: ValueKind,
    class: IdentityClass,
    lhs: Evaluator,
    rhs: Evaluator,
    oracle: Option<Evaluator>,
    domain: DomainCheck,
) -> IdentityItem {
    IdentityItem { id, description, arity, kind, class, reading_of: None, lhs, rhs, oracle, domain }
}

/// Every registered display, sorted by id.
pub fn registry() -> Vec<IdentityItem> {
    use Arity::*;
    use IdentityClass::*;
    use ValueKind::{PolyInX, Rational as Num};

    let mut items = vec![
        item(
            "eq2",
            "E_n = -sum_{i=1}^{n} C(n,i) E_i, read literally (right side contains E_n itself)",
            N, Num, Audit, eq2_lhs, eq2_rhs, None, n_ge1,
        ),
        item(
            "thm1",
            "moment ∫_0^1 y^n E_n(x+y) dy: addition-formula sum equals reflected Beta sum",
            N, PolyInX, Verified, thm1_lhs, thm1_rhs, Some(moment_oracle), any,
        ),
        item(
            "thm1_x0",
            "the x = 0 specialisation of the moment identity, as printed",
            N, Num, Verified, thm1_x0_lhs, thm1_x0_rhs, Some(moment_oracle_x0), any,
        ),
        item(
            "thm2_printed",
            "reflected moment sum equals the descending by-parts closed form with weight C(n,l)(n-l+2)/C(n+l,l)",
            N, PolyInX, Audit, thm2_lhs, thm2_printed_rhs, Some(moment_oracle), n_ge3,
        ),
        item(
            "thm2_x0",
            "the x = 0 specialisation of the descending by-parts closed form, as printed",
            N, Num, Audit, thm2_x0_lhs, thm2_x0_rhs, Some(moment_oracle_x0), n_ge3,
        ),
        item(
            "thm3",
            "E_{n+1}(x)/(n+1) expressed through two reflected Beta sums at x+1",
            N, PolyInX, Audit, thm3_lhs, thm3_rhs, Some(thm3_oracle), n_ge1,
        ),
        item(
            "thm3_x0",
            "the x = 0 specialisation of the forward by-parts identity, as printed",
            N, Num, Audit, thm3_x0_lhs, thm3_x0_rhs, Some(thm3_x0_oracle), n_ge1,
        ),
        item(
            "thm4_closed",
            "-2E_{n+m+1}/(C(n+m,n)(n+m+1)) equals the double Gamma-ratio sum over E_l E_k",
            MN, Num, Verified, thm4_closed_lhs, thm4_closed_rhs, Some(thm4_closed_oracle), m_ge1,
        ),
        item(
            "thm4_moreover",
            "E_{n+m+1} as a double binomial sum over E_l E_k",
            MN, Num, Verified, thm4_moreover_lhs, thm4_moreover_rhs, Some(thm4_moreover_oracle), m_ge1,
        ),
        item(
            "thm5",
            "m E_{m-1}E_n + n E_m E_{n-1} = -2 sum_r E_{2r+1} B_{m+n-2r-1}(x) (C(m,2r+1) + C(n,2r+1))",
            MN, PolyInX, Verified, thm5_lhs, thm5_rhs, Some(thm5_oracle), m_n_ge1,
        ),
        item(
            "thm6",
            "E_m(x)E_n(x) as a Bernoulli-polynomial combination plus a constant",
            MN, PolyInX, Verified, thm6_lhs, thm6_rhs, Some(thm6_oracle), m_plus_n_ge2,
        ),
        item(
            "eq17",
            "one forward by-parts step on ∫ y^n E_n(x+y) dy with boundary term E_n(x)/(n+1)",
            N, PolyInX, Audit, eq17_lhs, eq17_rhs, Some(moment_oracle), n_ge1,
        ),
        item(
            "eq22",
            "-(1/(m+n)) ∫_0^1 E_{m+n} = 2E_{n+m-1}/((m+n)(m+n+1)); oracle is ∫_0^1 E_{n+m-1}E_1",
            MN, Num, Audit, eq22_lhs, eq22_rhs, Some(eq22_oracle), m_ge1,
        ),
        item(
            "eq23",
            "falling-product and factorial closed forms of ∫_0^1 E_n E_m",
            MN, Num, Verified, eq23_lhs, eq23_rhs, Some(euler_pair_oracle), m_ge1,
        ),
        item(
            "eq29_printed",
            "by-parts expansion of ∫_0^1 B_q E_p: partial chain versus flat closed sum",
            QP, Num, Audit, eq29_lhs, eq29_rhs, Some(eq29_oracle), q_p_ge1,
        ),
        item(
            "eq33",
            "∫_0^1 E_m E_n E_p: Bernoulli-expansion closed form versus triple Beta sum",
            MNP, Num, Audit, eq33_lhs, eq33_rhs, Some(eq33_oracle), all_ge1,
        ),
    ];
    items.push(IdentityItem {
        reading_of: Some("thm2_printed"),
        ..item(
            "thm2_plus",
            "descending by-parts closed form with falling/rising factorial weights and a + middle sum",
            N, PolyInX, Audit, thm2_lhs, thm2_plus_rhs, Some(moment_oracle), n_ge3,
        )
    });
    items.sort_by_key(|i| i.id);
    items
}
