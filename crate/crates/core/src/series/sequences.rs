//! Reference integer sequences, exact.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::pattern::PatternSet;

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // Exact: acc holds C(n, i) here.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C_n = C(2n, n) / (n + 1)`, with `C_0 = 1`.
pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// Motzkin numbers from `(n + 2) M_n = (2n + 1) M_{n−1} + (3n − 3) M_{n−2}`,
/// `M_0 = M_1 = 1` (OEIS A001006).
pub fn motzkin(n: u64) -> BigUint {
    let (mut prev, mut cur) = (BigUint::one(), BigUint::one());
    for m in 2..=n {
        let next = ((2 * m + 1) * &cur + (3 * m - 3) * &prev) / (m + 2);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fibonacci(n: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `2^{n−2}` for `n ≥ 2`, and 1 for `n ≤ 1` (OEIS A011782 shifted).
pub fn powers_of_two_shifted(n: u64) -> BigUint {
    if n < 2 {
        BigUint::one()
    } else {
        BigUint::one() << (n - 2)
    }
}

/// `|F(n; ps)|` from the known formula for the pattern set, when there is
/// one. Covers every single pattern and pair of length-three patterns.
pub fn closed_form_count(n: usize, ps: &PatternSet) -> Option<BigUint> {
    if n == 0 {
        return None;
    }
    let m = n as u64;
    let upto = |last: usize| BigUint::from(u32::from(n <= last));
    let value = match ps.to_string().as_str() {
        "123" => upto(3),
        "132" => BigUint::one(),
        "213" | "312" => powers_of_two_shifted(m),
        "231" => motzkin(m - 1),
        "321" => catalan(m - 1),
        "213+231" | "231+312" => fibonacci(m),
        "132+213" | "132+231" | "132+312" | "132+321" => BigUint::one(),
        "213+312" => BigUint::from(m.saturating_sub(1).max(1)),
        "213+321" => binomial(m - 1, 2) + 1u32,
        "231+321" | "312+321" => powers_of_two_shifted(m),
        "123+132" => upto(2),
        "123+213" | "123+231" | "123+312" | "123+321" => upto(3),
        _ => return None,
    };
    Some(value)
}
