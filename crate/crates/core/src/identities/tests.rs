use std::collections::HashSet;

use super::*;
use crate::oracle::euler_pair_chain;
use crate::polyalg::{euler_poly, Poly};

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d).unwrap()
}

fn sample(arity: Arity) -> Params {
    match arity {
        Arity::N => Params::N { n: 4 },
        Arity::MN => Params::MN { m: 2, n: 3 },
        Arity::MNP => Params::MNP { m: 2, n: 1, p: 2 },
        Arity::QP => Params::QP { q: 2, p: 2 },
    }
}

#[test]
fn registry_shape() {
    let items = registry();
    assert_eq!(items.len(), 17);
    let ids: HashSet<_> = items.iter().map(|i| i.id).collect();
    assert_eq!(ids.len(), items.len());
    assert!(items.windows(2).all(|w| w[0].id < w[1].id));
    // thm2_plus is a second reading of the same display
    assert_eq!(items.iter().filter(|i| i.reading_of.is_none()).count(), 16);

    let thm4 = find("thm4_closed").unwrap();
    assert_eq!(thm4.arity, Arity::MN);
    assert_eq!(find("thm1").unwrap().kind, ValueKind::PolyInX);

    for item in &items {
        let p = sample(item.arity);
        let lhs = (item.lhs)(&p);
        let rhs = (item.rhs)(&p);
        assert_eq!(lhs.kind(), item.kind, "{}", item.id);
        assert_eq!(rhs.kind(), item.kind, "{}", item.id);
        if let Some(oracle) = item.oracle {
            assert_eq!(oracle(&p).kind(), item.kind, "{}", item.id);
        }
    }
}

#[test]
fn verified_class_membership() {
    let verified: Vec<_> =
        registry().into_iter().filter(|i| i.class == IdentityClass::Verified).map(|i| i.id).collect();
    assert_eq!(verified, ["eq23", "thm1", "thm1_x0", "thm4_closed", "thm4_moreover", "thm5", "thm6"]);
}

#[test]
fn hand_checked_items() {
    let r = check_item("thm1", Params::N { n: 1 }).unwrap();
    assert_eq!(r.status, Status::Holds);
    assert!(r.residual.is_zero());
    let both = Value::Poly(Poly::from_coeffs(vec![q(1, 12), q(1, 2)]));
    assert_eq!(evaluate_side("thm1", Params::N { n: 1 }, Side::Lhs).unwrap(), both);
    assert_eq!(evaluate_side("thm1", Params::N { n: 1 }, Side::Rhs).unwrap(), both);

    let p = Params::MN { m: 2, n: 2 };
    assert_eq!(check_item("thm4_closed", p).unwrap().status, Status::Holds);
    assert_eq!(evaluate_side("thm4_closed", p, Side::Lhs).unwrap(), Value::Rational(q(1, 30)));
    assert_eq!(check_against_oracle("thm4_closed", p).unwrap().status, Status::Holds);

    let p = Params::MN { m: 1, n: 1 };
    let two_x_minus_1 = Value::Poly(Poly::from_coeffs(vec![q(-1, 1), q(2, 1)]));
    assert_eq!(evaluate_side("thm5", p, Side::Lhs).unwrap(), two_x_minus_1);
    assert_eq!(evaluate_side("thm5", p, Side::Rhs).unwrap(), two_x_minus_1);
    assert_eq!(check_item("thm5", p).unwrap().status, Status::Holds);
}

#[test]
fn oracle_comparisons() {
    // The Beta double sum carries the reflection sign: at m = 1 both sides are -1/12.
    let r = check_against_oracle("thm4_closed", Params::MN { m: 1, n: 1 }).unwrap();
    assert_eq!(r.status, Status::Holds);
    assert_eq!(evaluate_side("thm4_closed", Params::MN { m: 1, n: 1 }, Side::Lhs).unwrap(), Value::Rational(q(-1, 12)));
    let r = check_against_oracle("eq23", Params::MN { m: 1, n: 1 }).unwrap();
    assert_eq!(r.status, Status::Holds);
    assert_eq!(evaluate_side("eq23", Params::MN { m: 1, n: 1 }, Side::Rhs).unwrap(), Value::Rational(q(1, 12)));

    let r = check_against_oracle("eq33", Params::MNP { m: 1, n: 1, p: 1 }).unwrap();
    assert!(r.lhs_residual.is_zero() && r.rhs_residual.is_zero());

    let r = check_against_oracle("thm1", Params::N { n: 0 }).unwrap();
    assert_eq!(r.status, Status::Holds);
    assert_eq!(evaluate_side("thm1", Params::N { n: 0 }, Side::Lhs).unwrap(), Value::Poly(Poly::one()));
}

#[test]
fn error_paths() {
    assert_eq!(check_item("thm9", Params::N { n: 1 }), Err(Error::UnknownId("thm9".into())));
    let err = check_item("thm2_printed", Params::N { n: 2 }).unwrap_err();
    assert!(matches!(&err, Error::Domain(msg) if msg.contains("n ≥ 3")), "{err}");
    assert!(matches!(check_item("thm4_closed", Params::MN { m: 0, n: 3 }), Err(Error::Domain(_))));
    assert!(matches!(check_item("thm6", Params::MN { m: 1, n: 0 }), Err(Error::Domain(_))));
    assert!(matches!(check_item("thm1", Params::MN { m: 1, n: 1 }), Err(Error::Domain(_))));
    assert_eq!(check_against_oracle("eq2", Params::N { n: 3 }), Err(Error::NoOracle("eq2".into())));
    assert!(thm6_constant(1, 0).is_err());
}

#[test]
fn eq2_literal_reading() {
    // rhs contains E_n itself and omits E_0, so the residual is E_0-driven
    let r = check_item("eq2", Params::N { n: 1 }).unwrap();
    assert_eq!(r.status, Status::Fails);
    assert_eq!(r.residual, Value::Rational(q(-1, 1)));
}

#[test]
fn thm6_constants() {
    assert_eq!(thm6_constant(1, 1).unwrap(), q(1, 12));
    for (m, n) in [(2, 1), (1, 2)] {
        assert!(thm6_constant(m, n).unwrap().is_zero());
        assert_eq!(check_item("thm6", Params::MN { m, n }).unwrap().status, Status::Holds);
    }
}

#[test]
fn thm6_links_to_integral_and_derivative() {
    for m in 0..=10 {
        for n in 0..=10 {
            if m + n < 2 {
                continue;
            }
            let rhs = thm6_rhs(m, n).unwrap();
            assert_eq!(rhs.integral01(), euler_pair_chain(m, n), "m={m} n={n}");
            assert_eq!(rhs, &euler_poly(m) * &euler_poly(n));
            if m >= 1 && n >= 1 {
                let thm5 = evaluate_side("thm5", Params::MN { m, n }, Side::Rhs).unwrap();
                assert_eq!(Value::Poly(rhs.derivative()), thm5, "m={m} n={n}");
            }
        }
    }
}

#[test]
fn deterministic_checks() {
    for item in registry() {
        let p = sample(item.arity);
        if (item.domain)(&p).is_err() {
            continue;
        }
        assert_eq!(check_item(item.id, p).unwrap(), check_item(item.id, p).unwrap());
    }
    let ranges = GridRanges::uniform(4);
    let a = audit_grid(&["thm5", "eq17", "thm1"], ranges).unwrap();
    let b = audit_grid(&["thm1", "thm5", "eq17", "thm1"], ranges).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn grid_audits() {
    let r = audit_grid(&["thm5"], GridRanges::uniform(12)).unwrap();
    assert_eq!(r.summary[0].checked, 144);
    assert!(r.summary[0].holds_everywhere);
    assert_eq!(r.summary[0].oracle_agrees_everywhere, Some(true));
    assert!(!r.has_verified_failure());

    let r = audit_grid(&["eq17"], GridRanges { m_max: 0, n_max: 10, p_max: 0 }).unwrap();
    let ns: Vec<_> = r.results.iter().map(|row| row.params).collect();
    assert_eq!(ns, (1..=10).map(|n| Params::N { n }).collect::<Vec<_>>());
    for row in &r.results {
        assert_eq!(row.status == Status::Holds, row.residual.is_zero());
        assert!(matches!(row.residual, Value::Poly(_)));
    }

    assert!(audit_grid(&["nope"], GridRanges::uniform(2)).is_err());
}

#[test]
fn report_json_schema() {
    let r = audit_grid(&["thm1", "eq2"], GridRanges::uniform(2)).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["ranges"]["n_max"], 2);
    let row = &v["results"][0];
    assert_eq!(row["id"], "eq2");
    assert_eq!(row["params"]["n"], 1);
    assert_eq!(row["status"], "FAILS");
    assert!(row["residual"].is_string());
    assert!(row["oracle"].is_null());
    let summary = &v["summary"][0];
    assert_eq!(summary["holds_everywhere"], false);
    assert_eq!(summary["first_failure"]["n"], 1);
    assert_eq!(v["summary"][1]["first_failure"], serde_json::Value::Null);
}
