//! Binomial and trinomial coefficients over the extended integer domain.
//!
//! Both coefficients are zero whenever a lower index is negative or exceeds
//! the top index, so closed forms can be transcribed term by term with no
//! range guards at the call site.

use num_bigint::BigUint;
use num_traits::One;

use crate::Count;

/// `C(n, k)`, or 0 when `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> Count {
    if n < 0 || k < 0 || k > n {
        return Count::zero();
    }
    Count::from(binomial_raw(n as u64, k as u64))
}

/// `(a+b+c)! / (a! b! c!)`, or 0 when any argument is negative.
pub fn multinomial3(a: i64, b: i64, c: i64) -> Count {
    if a < 0 || b < 0 || c < 0 {
        return Count::zero();
    }
    let (a, b, c) = (a as u64, b as u64, c as u64);
    Count::from(binomial_raw(a + b + c, a) * binomial_raw(b + c, b))
}

// Multiplicative formula; every partial product is itself a binomial
// coefficient, so each division is exact.
fn binomial_raw(n: u64, k: u64) -> BigUint {
    debug_assert!(k <= n);
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}
