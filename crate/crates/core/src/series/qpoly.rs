use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A polynomial in `q` with exact integer coefficients; `coeffs()[d]` is
/// the coefficient of `q^d`. No trailing zeros are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::new(coeffs)
    }

    /// Builds `Σ count · q^degree` from a tally of degrees.
    pub fn from_tally(tally: &BTreeMap<usize, u64>) -> Self {
        let top = tally.keys().next_back().copied().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); top + 1];
        for (&d, &c) in tally {
            coeffs[d] += c;
        }
        Self::new(coeffs)
    }

    /// `(1 + q)^m`.
    pub fn one_plus_q_pow(m: u32) -> Self {
        let base = Self::new(vec![BigInt::one(), BigInt::one()]);
        (0..m).fold(Self::one(), |acc, _| &acc * &base)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::new((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::new(out)
    }
}

/// `c0 + c1*q + c2*q^2 + ...`, every coefficient up to the degree; the zero
/// polynomial prints as `0`.
impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (d, c) in self.coeffs.iter().enumerate() {
            if d == 0 {
                write!(f, "{c}")?;
                continue;
            }
            let sign = if c.is_negative() { " - " } else { " + " };
            write!(f, "{sign}{}*q", c.abs())?;
            if d > 1 {
                write!(f, "^{d}")?;
            }
        }
        Ok(())
    }
}
