//! Registry of printed identities and their exact audit.
//!
//! Each [`IdentityItem`] transcribes both sides of a published display
//! literally and, where one exists, names an oracle value that both sides
//! should equal. Checking an item subtracts the two sides exactly; an item
//! holds only when the residual is exactly zero (no sampling, no tolerance).

mod registry;
mod report;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{binom_q, Rational};
use crate::polyalg::Poly;
use crate::special_sequences::euler_number;

pub use registry::registry;
pub use report::{audit_grid, AuditReport, GridRanges, IdSummary, ReportRow};

/// A side of an identity: either a polynomial in `x` or a number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Poly(Poly),
    Rational(Rational),
}

impl Value {
    pub fn kind(&self) -> ValueKind {
        match self {
            Value::Poly(_) => ValueKind::PolyInX,
            Value::Rational(_) => ValueKind::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Poly(p) => p.is_zero(),
            Value::Rational(r) => r.is_zero(),
        }
    }

    /// `self - other`; both must have the same kind.
    pub fn minus(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Poly(a), Value::Poly(b)) => Value::Poly(a - b),
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a - b),
            _ => panic!("identity sides of different kinds"),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Poly(p) => p.fmt(f),
            Value::Rational(r) => r.fmt(f),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ValueKind {
    PolyInX,
    Rational,
}

/// Parameter shape of an item.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Arity {
    #[serde(rename = "n")]
    N,
    #[serde(rename = "m,n")]
    MN,
    #[serde(rename = "m,n,p")]
    MNP,
    /// Bernoulli index `q`, Euler index `p`.
    #[serde(rename = "q,p")]
    QP,
}

/// Concrete parameters. Derived ordering is lexicographic in the order the
/// fields are declared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Params {
    N { n: usize },
    MN { m: usize, n: usize },
    MNP { m: usize, n: usize, p: usize },
    QP { q: usize, p: usize },
}

impl Params {
    pub fn arity(&self) -> Arity {
        match self {
            Params::N { .. } => Arity::N,
            Params::MN { .. } => Arity::MN,
            Params::MNP { .. } => Arity::MNP,
            Params::QP { .. } => Arity::QP,
        }
    }

    fn named(&self) -> Vec<(&'static str, usize)> {
        match *self {
            Params::N { n } => vec![("n", n)],
            Params::MN { m, n } => vec![("m", m), ("n", n)],
            Params::MNP { m, n, p } => vec![("m", m), ("n", n), ("p", p)],
            Params::QP { q, p } => vec![("q", q), ("p", p)],
        }
    }

    fn n(&self) -> usize {
        match *self {
            Params::N { n } => n,
            _ => unreachable!("arity checked before evaluation"),
        }
    }

    fn mn(&self) -> (usize, usize) {
        match *self {
            Params::MN { m, n } => (m, n),
            _ => unreachable!("arity checked before evaluation"),
        }
    }

    fn mnp(&self) -> (usize, usize, usize) {
        match *self {
            Params::MNP { m, n, p } => (m, n, p),
            _ => unreachable!("arity checked before evaluation"),
        }
    }

    fn qp(&self) -> (usize, usize) {
        match *self {
            Params::QP { q, p } => (q, p),
            _ => unreachable!("arity checked before evaluation"),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.named().iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let named = self.named();
        let mut map = serializer.serialize_map(Some(named.len()))?;
        for (k, v) in named {
            map.serialize_entry(k, &v)?;
        }
        map.end()
    }
}

/// Whether an item was confirmed by hand (a failure is a defect in this
/// crate) or is recorded as-is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityClass {
    Verified,
    Audit,
}

pub type Evaluator = fn(&Params) -> Value;
pub type DomainCheck = fn(&Params) -> std::result::Result<(), String>;

/// One registered display.
#[derive(Clone)]
pub struct IdentityItem {
    pub id: &'static str,
    pub description: &'static str,
    pub arity: Arity,
    pub kind: ValueKind,
    pub class: IdentityClass,
    /// Set when this item is an alternative reading of another item's display.
    pub reading_of: Option<&'static str>,
    pub lhs: Evaluator,
    pub rhs: Evaluator,
    /// Reference value both sides are expected to equal.
    pub oracle: Option<Evaluator>,
    pub domain: DomainCheck,
}

impl fmt::Debug for IdentityItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityItem")
            .field("id", &self.id)
            .field("arity", &self.arity)
            .field("kind", &self.kind)
            .field("class", &self.class)
            .finish()
    }
}

impl IdentityItem {
    fn validate(&self, params: &Params) -> Result<()> {
        if params.arity() != self.arity {
            return Err(Error::Domain(format!(
                "{} takes parameters ({}), got {params}",
                self.id,
                serde_json::to_value(self.arity).unwrap().as_str().unwrap_or_default()
            )));
        }
        (self.domain)(params).map_err(|why| Error::Domain(format!("{} requires {why} (got {params})", self.id)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Holds,
    Fails,
}

impl Status {
    fn of(zero: bool) -> Self {
        if zero {
            Status::Holds
        } else {
            Status::Fails
        }
    }
}

/// Outcome of comparing the two printed sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ItemResult {
    pub id: &'static str,
    pub params: Params,
    pub status: Status,
    /// `lhs - rhs`
    pub residual: Value,
}

/// Outcome of comparing each printed side against the oracle value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub id: &'static str,
    pub params: Params,
    pub status: Status,
    /// `lhs - oracle`
    pub lhs_residual: Value,
    /// `rhs - oracle`
    pub rhs_residual: Value,
}

pub fn find(id: &str) -> Result<IdentityItem> {
    registry()
        .into_iter()
        .find(|item| item.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

/// Evaluate both printed sides of `id` at `params` and subtract.
pub fn check_item(id: &str, params: Params) -> Result<ItemResult> {
    let item = find(id)?;
    item.validate(&params)?;
    let residual = (item.lhs)(&params).minus(&(item.rhs)(&params));
    Ok(ItemResult { id: item.id, params, status: Status::of(residual.is_zero()), residual })
}

/// Compare both printed sides of `id` against its oracle value.
pub fn check_against_oracle(id: &str, params: Params) -> Result<OracleResult> {
    let item = find(id)?;
    let oracle = item.oracle.ok_or_else(|| Error::NoOracle(id.to_string()))?;
    item.validate(&params)?;
    let truth = oracle(&params);
    let lhs_residual = (item.lhs)(&params).minus(&truth);
    let rhs_residual = (item.rhs)(&params).minus(&truth);
    let status = Status::of(lhs_residual.is_zero() && rhs_residual.is_zero());
    Ok(OracleResult { id: item.id, params, status, lhs_residual, rhs_residual })
}

fn require_pair_order(m: usize, n: usize) -> Result<()> {
    if m + n < 2 {
        return Err(Error::Domain(format!("the product expansion requires m + n ≥ 2 (got m={m}, n={n})")));
    }
    Ok(())
}

/// Integration constant of the Bernoulli expansion of `E_m E_n`:
/// `2 (-1)^(m+1) E_(n+m+1) / (C(n+m, n) (n+m+1))`.
pub fn thm6_constant(m: usize, n: usize) -> Result<Rational> {
    require_pair_order(m, n)?;
    let top = n + m + 1;
    Ok(Rational::from(2) * Rational::sign_power(m as u64 + 1) * euler_number(top)
        / (binom_q((n + m) as u64, n as i64) * Rational::from(top)))
}

/// The Bernoulli expansion of `E_m(x) E_n(x)` as `(coefficient, index)`
/// pairs plus the constant term:
///
/// `-2 sum_r (C(m,2r+1) + C(n,2r+1)) E_(2r+1) B_(m+n-2r)(x)/(m+n-2r) + C`.
///
/// The sum over `r` stops once `2r + 1 > max(m, n)`, where both binomials vanish.
pub fn thm6_terms(m: usize, n: usize) -> Result<(Vec<(Rational, usize)>, Rational)> {
    let constant = thm6_constant(m, n)?;
    let terms = (0..)
        .take_while(|r| 2 * r < m.max(n))
        .map(|r| {
            let k = 2 * r + 1;
            let weight = binom_q(m as u64, k as i64) + binom_q(n as u64, k as i64);
            let index = m + n - 2 * r;
            let coef = Rational::from(-2) * weight * euler_number(k) / Rational::from(index);
            (coef, index)
        })
        .collect();
    Ok((terms, constant))
}

/// The Bernoulli expansion of `E_m(x) E_n(x)` assembled as a polynomial.
pub fn thm6_rhs(m: usize, n: usize) -> Result<Poly> {
    let (terms, constant) = thm6_terms(m, n)?;
    let polys: Vec<(Rational, Poly)> =
        terms.into_iter().map(|(c, k)| (c, crate::polyalg::bernoulli_poly(k))).collect();
    let sum = Poly::linear_combine(polys.iter().map(|(c, p)| (c.clone(), p)));
    Ok(&sum + &Poly::constant(constant))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

/// One printed side of `id` on its own.
pub fn evaluate_side(id: &str, params: Params, side: Side) -> Result<Value> {
    let item = find(id)?;
    item.validate(&params)?;
    Ok(match side {
        Side::Lhs => (item.lhs)(&params),
        Side::Rhs => (item.rhs)(&params),
    })
}

#[cfg(test)]
mod tests;
