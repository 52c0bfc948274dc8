//! Power-series expansion of the first-run generating function of the
//! (213, 231)-avoiding class,
//!
//! ```text
//! F(u, x) = (1 − u − u² + u³x²) / ((1 − ux)(1 − u − u²))
//! ```
//!
//! where the coefficient of `u^n x^k` counts the partitions of `[n]` whose
//! first run has length `k`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{guard, Result};

/// A polynomial in `x` per power of `u`: `terms[n][k]` is the coefficient
/// of `u^n x^k`.
pub type Bivariate = Vec<Vec<BigInt>>;

/// Coefficients of a bivariate series, truncated after `u^{max_n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    max_n: usize,
    rows: Bivariate,
}

impl BivariateSeries {
    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn coeff(&self, n: usize, k: usize) -> BigInt {
        self.rows.get(n).and_then(|row| row.get(k)).cloned().unwrap_or_default()
    }

    /// The coefficients of `u^n`, by power of `x`.
    pub fn row(&self, n: usize) -> &[BigInt] {
        self.rows.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn row_sum(&self, n: usize) -> BigInt {
        self.row(n).iter().sum()
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub_assign(acc: &mut Vec<BigInt>, rhs: &[BigInt]) {
    if acc.len() < rhs.len() {
        acc.resize(rhs.len(), BigInt::zero());
    }
    for (a, b) in acc.iter_mut().zip(rhs) {
        *a -= b;
    }
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn bivariate_mul(a: &Bivariate, b: &Bivariate) -> Bivariate {
    let mut out: Bivariate = vec![Vec::new(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            let prod = poly_mul(ai, bj);
            let slot = &mut out[i + j];
            if slot.len() < prod.len() {
                slot.resize(prod.len(), BigInt::zero());
            }
            for (s, p) in slot.iter_mut().zip(prod) {
                *s += p;
            }
        }
    }
    out.into_iter().map(trim).collect()
}

fn int_poly(c: &[i64]) -> Vec<BigInt> {
    trim(c.iter().map(|&v| BigInt::from(v)).collect())
}

/// Expands `numerator / denominator` in powers of `u` through `u^{max_n}`,
/// using `Σ_j den_j · a_{n−j} = num_n`. The constant term of the
/// denominator must be exactly 1.
pub fn expand_rational(numerator: &Bivariate, denominator: &Bivariate, max_n: usize) -> BivariateSeries {
    assert!(
        denominator.first().map(|c| trim(c.clone())) == Some(vec![BigInt::one()]),
        "denominator must have constant term 1"
    );
    let mut rows: Bivariate = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let mut a = numerator.get(n).cloned().unwrap_or_default();
        for (j, d) in denominator.iter().enumerate().skip(1).take(n) {
            poly_sub_assign(&mut a, &poly_mul(d, &rows[n - j]));
        }
        rows.push(trim(a));
    }
    BivariateSeries { max_n, rows }
}

/// `(1 − u − u² + u³x², (1 − ux)(1 − u − u²))`.
pub fn pair_ogf_parts() -> (Bivariate, Bivariate) {
    let numerator = vec![int_poly(&[1]), int_poly(&[-1]), int_poly(&[-1]), int_poly(&[0, 0, 1])];
    let one_minus_ux = vec![int_poly(&[1]), int_poly(&[0, -1])];
    let fib_den = vec![int_poly(&[1]), int_poly(&[-1]), int_poly(&[-1])];
    (numerator, bivariate_mul(&one_minus_ux, &fib_den))
}

/// Series coefficients of the first-run generating function, `2 ≤ max_n ≤ 30`.
pub fn expand_pair_ogf(max_n: usize) -> Result<BivariateSeries> {
    guard("expand_pair_ogf", max_n, 2, 30)?;
    let (num, den) = pair_ogf_parts();
    Ok(expand_rational(&num, &den, max_n))
}
