//! Euler numbers (Taylor coefficients of `2/(e^t+1)`) and Bernoulli numbers
//! (Taylor coefficients of `t/(e^t-1)`, so `B_1 = -1/2`).

use std::sync::{OnceLock, RwLock};

use serde::Serialize;

use crate::exactnum::{binom_q, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SequenceKind {
    Euler,
    Bernoulli,
}

/// Prefix `values[0..=N]` of one of the two sequences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceTable {
    kind: SequenceKind,
    values: Vec<Rational>,
}

impl SequenceTable {
    fn seed(kind: SequenceKind) -> Self {
        SequenceTable { kind, values: vec![Rational::one()] }
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, k: usize) -> Option<&Rational> {
        self.values.get(k)
    }

    /// Largest index held.
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    /// Append entries until index `n` is present. Existing entries are never touched.
    fn extend_to(&mut self, n: usize) {
        while self.values.len() <= n {
            let next = self.values.len() as u64;
            let value = match self.kind {
                // (E + 1)^n + E_n = 0  =>  2 E_n = -sum_{k<n} C(n,k) E_k
                SequenceKind::Euler => {
                    let s: Rational = self.weighted_prefix(next);
                    -s / Rational::from(2)
                }
                // sum_{k<=n} C(n+1,k) B_k = 0
                SequenceKind::Bernoulli => {
                    let s: Rational = self.weighted_prefix(next + 1);
                    -s / Rational::from(next + 1)
                }
            };
            self.values.push(value);
        }
    }

    fn weighted_prefix(&self, top: u64) -> Rational {
        self.values
            .iter()
            .enumerate()
            .map(|(k, v)| binom_q(top, k as i64) * v)
            .sum()
    }
}

/// `E_0 ..= E_max` as exact rationals.
pub fn euler_numbers(max: usize) -> SequenceTable {
    let mut t = SequenceTable::seed(SequenceKind::Euler);
    t.extend_to(max);
    t
}

/// `B_0 ..= B_max` as exact rationals.
pub fn bernoulli_numbers(max: usize) -> SequenceTable {
    let mut t = SequenceTable::seed(SequenceKind::Bernoulli);
    t.extend_to(max);
    t
}

fn shared(kind: SequenceKind) -> &'static RwLock<SequenceTable> {
    static EULER: OnceLock<RwLock<SequenceTable>> = OnceLock::new();
    static BERNOULLI: OnceLock<RwLock<SequenceTable>> = OnceLock::new();
    let cell = match kind {
        SequenceKind::Euler => &EULER,
        SequenceKind::Bernoulli => &BERNOULLI,
    };
    cell.get_or_init(|| RwLock::new(SequenceTable::seed(kind)))
}

/// Process-wide cached lookup of a single sequence value.
pub fn sequence_value(kind: SequenceKind, k: usize) -> Rational {
    let lock = shared(kind);
    if let Some(v) = lock.read().expect("sequence cache poisoned").get(k) {
        return v.clone();
    }
    let mut table = lock.write().expect("sequence cache poisoned");
    table.extend_to(k);
    table.values[k].clone()
}

/// Cached `E_k`.
pub fn euler_number(k: usize) -> Rational {
    sequence_value(SequenceKind::Euler, k)
}

/// Cached `B_k`.
pub fn bernoulli_number(k: usize) -> Rational {
    sequence_value(SequenceKind::Bernoulli, k)
}
