use serde::Serialize;

use super::{
    check_against_oracle, check_item, find, Arity, IdentityClass, IdentityItem, ItemResult, OracleResult,
    Params, Status, Value,
};
use crate::error::Result;

/// Inclusive upper bounds of the parameter grid. Items indexed by `(q, p)`
/// take `q` from `m_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GridRanges {
    pub m_max: usize,
    pub n_max: usize,
    pub p_max: usize,
}

impl GridRanges {
    pub fn uniform(max: usize) -> Self {
        GridRanges { m_max: max, n_max: max, p_max: max }
    }

    fn points(&self, arity: Arity) -> Vec<Params> {
        let r = |hi: usize| 0..=hi;
        let mut out = Vec::new();
        match arity {
            Arity::N => out.extend(r(self.n_max).map(|n| Params::N { n })),
            Arity::MN => {
                for m in r(self.m_max) {
                    out.extend(r(self.n_max).map(|n| Params::MN { m, n }));
                }
            }
            Arity::MNP => {
                for m in r(self.m_max) {
                    for n in r(self.n_max) {
                        out.extend(r(self.p_max).map(|p| Params::MNP { m, n, p }));
                    }
                }
            }
            Arity::QP => {
                for q in r(self.m_max) {
                    out.extend(r(self.p_max).map(|p| Params::QP { q, p }));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleCell {
    pub status: Status,
    pub lhs_residual: Value,
    pub rhs_residual: Value,
}

/// One grid point of one item.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub id: &'static str,
    pub params: Params,
    pub status: Status,
    pub residual: Value,
    pub oracle: Option<OracleCell>,
}

impl ReportRow {
    fn new(item: ItemResult, oracle: Option<OracleResult>) -> Self {
        ReportRow {
            id: item.id,
            params: item.params,
            status: item.status,
            residual: item.residual,
            oracle: oracle.map(|o| OracleCell {
                status: o.status,
                lhs_residual: o.lhs_residual,
                rhs_residual: o.rhs_residual,
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdSummary {
    pub id: &'static str,
    pub class: IdentityClass,
    pub checked: usize,
    pub holds_everywhere: bool,
    pub first_failure: Option<Params>,
    /// `None` when the item has no oracle.
    pub oracle_agrees_everywhere: Option<bool>,
    pub first_oracle_failure: Option<Params>,
}

impl IdSummary {
    /// A verified item that disagrees with itself or with its oracle.
    pub fn is_verified_failure(&self) -> bool {
        self.class == IdentityClass::Verified
            && (!self.holds_everywhere || self.oracle_agrees_everywhere == Some(false))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub version: String,
    pub ranges: GridRanges,
    pub results: Vec<ReportRow>,
    pub summary: Vec<IdSummary>,
}

impl AuditReport {
    pub fn has_verified_failure(&self) -> bool {
        self.summary.iter().any(IdSummary::is_verified_failure)
    }

    /// Pretty JSON with a trailing newline; stable for identical inputs.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn audit_item(item: &IdentityItem, ranges: &GridRanges) -> Result<(Vec<ReportRow>, IdSummary)> {
    let mut rows = Vec::new();
    for params in ranges.points(item.arity) {
        if (item.domain)(&params).is_err() {
            continue;
        }
        let checked = check_item(item.id, params)?;
        let oracle = match item.oracle {
            Some(_) => Some(check_against_oracle(item.id, params)?),
            None => None,
        };
        rows.push(ReportRow::new(checked, oracle));
    }
    let first_failure = rows.iter().find(|r| r.status == Status::Fails).map(|r| r.params);
    let first_oracle_failure = rows
        .iter()
        .find(|r| r.oracle.as_ref().is_some_and(|o| o.status == Status::Fails))
        .map(|r| r.params);
    let summary = IdSummary {
        id: item.id,
        class: item.class,
        checked: rows.len(),
        holds_everywhere: first_failure.is_none(),
        first_failure,
        oracle_agrees_everywhere: item.oracle.map(|_| first_oracle_failure.is_none()),
        first_oracle_failure,
    };
    Ok((rows, summary))
}

/// Check every listed item over the whole grid. Output is sorted by id and
/// then by parameters, so it does not depend on the order of `ids`.
pub fn audit_grid<S: AsRef<str>>(ids: &[S], ranges: GridRanges) -> Result<AuditReport> {
    let mut items = ids.iter().map(|id| find(id.as_ref())).collect::<Result<Vec<_>>>()?;
    items.sort_by_key(|i| i.id);
    items.dedup_by_key(|i| i.id);

    // Grid points are independent; run each item on its own thread.
    let audited: Vec<Result<(Vec<ReportRow>, IdSummary)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .iter()
            .map(|item| scope.spawn(move || audit_item(item, &ranges)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("audit worker panicked")).collect()
    });

    let mut results = Vec::new();
    let mut summary = Vec::new();
    for outcome in audited {
        let (rows, s) = outcome?;
        results.extend(rows);
        summary.push(s);
    }
    results.sort_by(|a, b| (a.id, a.params).cmp(&(b.id, b.params)));
    Ok(AuditReport { version: env!("CARGO_PKG_VERSION").to_string(), ranges, results, summary })
}
