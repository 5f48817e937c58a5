//! Closed-form counts for commitment words and the succession-rule
//! multiplicities built from them. All exact.

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};

fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    binomial(BigUint::from(n), BigUint::from(k))
}

/// `C_b = binom(2b, b) / (b + 1)`.
pub fn catalan(b: u64) -> BigUint {
    binom(2 * b, b) / BigUint::from(b + 1)
}

/// `a_{k,b} = binom(k-1, k-b) C_b`: surjective words of length `k` over
/// `1..=b` avoiding 212, 112 and 213. `a_{0,0} = 1` and `a_{k,0} = 0` for `k > 0`.
pub fn words_r1r2(k: u64, b: u64) -> BigUint {
    if b == 0 {
        return if k == 0 { BigUint::one() } else { BigUint::zero() };
    }
    if b > k {
        return BigUint::zero();
    }
    binom(k - 1, k - b) * catalan(b)
}

/// `d_{k,b} = binom(b, k-b) C_b`: as [`words_r1r2`] but also avoiding 111,
/// so each letter appears at most twice.
pub fn words_r1r3(k: u64, b: u64) -> BigUint {
    if b > k {
        return BigUint::zero();
    }
    binom(b, k - b) * catalan(b)
}

/// `m_{l,b} = binom(l, b) C_b`, the number of commitment choices of size `b`
/// reachable after incrementing `l` zeros.
pub fn multiplicity_m(l: u64, b: u64) -> BigUint {
    binom(l, b) * catalan(b)
}

/// `w_{l,b} = binom(b+1, l-b) C_b`; zero outside `ceil((l-1)/2) <= b <= l`.
pub fn multiplicity_w(l: u64, b: u64) -> BigUint {
    if b > l {
        return BigUint::zero();
    }
    binom(b + 1, l - b) * catalan(b)
}
