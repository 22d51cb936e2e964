//! Dense univariate polynomials over [`Rational`].
//!
//! Coefficients are stored constant-first. The representation is canonical:
//! the zero polynomial is the empty vector and otherwise the last coefficient
//! is nonzero, so derived `PartialEq` is exact polynomial equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::exactnum::{binom_q, Rational};
use crate::special_sequences::{sequence_value, SequenceKind};

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "PolyRepr", into = "PolyRepr")]
pub struct Poly {
    coeffs: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    coeffs: Vec<Rational>,
}

impl From<PolyRepr> for Poly {
    fn from(r: PolyRepr) -> Self {
        Poly::from_coeffs(r.coeffs)
    }
}

impl From<Poly> for PolyRepr {
    fn from(p: Poly) -> Self {
        PolyRepr { coeffs: p.coeffs }
    }
}

impl Poly {
    /// Builds from constant-first coefficients, dropping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * x^deg`
    pub fn monomial(c: Rational, deg: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `sum c_i * P_i`
    pub fn linear_combine<'a, I>(terms: I) -> Poly
    where
        I: IntoIterator<Item = (Rational, &'a Poly)>,
    {
        let mut acc: Vec<Rational> = Vec::new();
        for (c, p) in terms {
            if c.is_zero() {
                continue;
            }
            if acc.len() < p.coeffs.len() {
                acc.resize(p.coeffs.len(), Rational::zero());
            }
            for (slot, a) in acc.iter_mut().zip(&p.coeffs) {
                *slot += a * &c;
            }
        }
        Poly::from_coeffs(acc)
    }

    /// `P(a*x + b)`
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Poly {
        // Horner in the composed argument.
        let arg = Poly::from_coeffs(vec![b.clone(), a.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &arg) + &Poly::constant(c.clone()))
    }

    /// `P(x + c)`, expanded with binomial weights.
    pub fn shift(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return self.clone();
        }
        let n = self.coeffs.len();
        let powers: Vec<Rational> =
            std::iter::successors(Some(Rational::one()), |p| Some(p * c)).take(n).collect();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                // (x + c)^i contributes C(i, j) c^(i-j) x^j
                *slot += a * &binom_q(i as u64, j as i64) * &powers[i - j];
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * &Rational::from(i))
                .collect(),
        )
    }

    /// Antiderivative vanishing at 0.
    pub fn antiderivative(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().enumerate().map(|(i, a)| a / &Rational::from(i + 1)));
        Poly::from_coeffs(coeffs)
    }

    /// `∫_0^1 P(x) dx`
    pub fn integral01(&self) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a / &Rational::from(i + 1))
            .sum()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let one = Rational::one();
        Poly::linear_combine([(one.clone(), self), (one, rhs)])
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::linear_combine([(Rational::one(), self), (-Rational::one(), rhs)])
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    /// Descending powers with explicit `*`, e.g. `x^3 - 3/2*x^2 + 1/4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Which Appell family a basis polynomial belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "E")]
    Euler,
    #[serde(rename = "B")]
    Bernoulli,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::Euler => 'E',
            Family::Bernoulli => 'B',
        }
    }

    fn kind(self) -> SequenceKind {
        match self {
            Family::Euler => SequenceKind::Euler,
            Family::Bernoulli => SequenceKind::Bernoulli,
        }
    }
}

/// Umbral expansion `sum_k C(n,k) a_k x^(n-k)` over the family's numbers.
pub fn basis_poly(family: Family, n: usize) -> Poly {
    let coeffs = (0..=n)
        .map(|i| {
            // coefficient of x^i comes from k = n - i
            let k = n - i;
            binom_q(n as u64, k as i64) * sequence_value(family.kind(), k)
        })
        .collect();
    Poly::from_coeffs(coeffs)
}

/// Euler polynomial `E_n(x)`.
pub fn euler_poly(n: usize) -> Poly {
    basis_poly(Family::Euler, n)
}

/// Bernoulli polynomial `B_n(x)`.
pub fn bernoulli_poly(n: usize) -> Poly {
    basis_poly(Family::Bernoulli, n)
}
