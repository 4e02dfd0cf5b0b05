//! Certified size arithmetic for codes too large to materialize.
//!
//! A proof code is a product `p_0^(e_0) p_1^(e_1) ...` whose exponents
//! are themselves formula codes, so the product is doubly exponential
//! and normally cannot exist in memory. Its bit length, however, is
//! `ceil(sum e_i log2 p_i)` and is computed here with integer-only
//! directed rounding: `log2 p` is enclosed in fixed point by repeated
//! squaring, with every truncation rounded toward the bound it serves.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use super::primes::nth_prime;

/// Enclosure `lo <= 2^frac_bits * log2(p) <= hi`, exact (`lo == hi`)
/// when `p` is a power of two.
pub fn log2_fixed(p: u64, frac_bits: u32) -> (BigUint, BigUint) {
    assert!(p >= 1, "log2 of zero");
    if p.is_power_of_two() {
        let v = BigUint::from(p.trailing_zeros()) << frac_bits;
        return (v.clone(), v);
    }
    let int_part = BigUint::from(63 - u64::from(p.leading_zeros())) << frac_bits;
    let lo = &int_part + log2_digits(p, frac_bits, false);
    let hi = &int_part + log2_digits(p, frac_bits, true) + 1u32;
    (lo, hi)
}

/// Fractional digits of `log2 p` by squaring the mantissa. Truncations
/// round down on the lower trajectory and up on the upper one, so the
/// extracted digit string is a valid bound either way; the working
/// precision leaves the drift far below the last returned digit.
fn log2_digits(p: u64, frac_bits: u32, upper: bool) -> BigUint {
    let floor_log = 63 - p.leading_zeros();
    let t = 3 * frac_bits + 64;
    let mut x = BigUint::from(p) << (t - floor_log);
    let two = BigUint::one() << (t + 1);
    let mut digits = BigUint::zero();
    for _ in 0..frac_bits {
        x = &x * &x;
        x >>= t;
        if upper {
            x += 1u32;
        }
        digits <<= 1;
        if x >= two {
            digits += 1u32;
            x = if upper { (x + 1u32) >> 1 } else { x >> 1 };
        }
    }
    digits
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("log2 enclosure did not separate an integer boundary at {0} fractional bits")]
pub struct PrecisionCap(u32);

/// `ceil(sum_i e_i * log2 p_i)` for a contiguous-support product
/// `p_0^(e_0) ... p_n^(e_n)`, certified by refining the enclosure
/// until both ends round to the same integer. For a product with odd
/// primes present this equals the exact bit length; for a pure power
/// of two it is the exponent itself (one less than the bit length).
pub fn prime_power_bits_ceil(exponents: &[BigUint]) -> Result<BigUint, PrecisionCap> {
    // the enclosure width scales with the exponents, so start past
    // the largest of them
    let max_exp_bits = exponents.iter().map(|e| e.bits()).max().unwrap_or(0);
    let base = u32::try_from(max_exp_bits)
        .ok()
        .and_then(|b| b.checked_add(96))
        .ok_or(PrecisionCap(u32::MAX))?;
    let mut frac_bits = base;
    loop {
        let mut lo = BigUint::zero();
        let mut hi = BigUint::zero();
        for (i, e) in exponents.iter().enumerate() {
            let (l, h) = log2_fixed(nth_prime(i), frac_bits);
            lo += e * l;
            hi += e * h;
        }
        let unit = (BigUint::one() << frac_bits) - 1u32;
        let ceil_lo = (lo + &unit) >> frac_bits;
        let ceil_hi = (hi + &unit) >> frac_bits;
        if ceil_lo == ceil_hi {
            return Ok(ceil_lo);
        }
        if frac_bits >= base.saturating_mul(8).max(4096) {
            return Err(PrecisionCap(frac_bits));
        }
        frac_bits = frac_bits.saturating_mul(2);
    }
}

/// Exact `p_0^(e_0) ... p_n^(e_n)`; only call when the size estimate
/// fits the budget.
pub fn prime_power_product(exponents: &[u64]) -> BigUint {
    let mut acc = BigUint::one();
    for (i, &e) in exponents.iter().enumerate() {
        acc *= pow_u64(&BigUint::from(nth_prime(i)), e);
    }
    acc
}

fn pow_u64(base: &BigUint, mut exp: u64) -> BigUint {
    let mut acc = BigUint::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = &acc * &sq;
        }
        exp >>= 1;
        if exp > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}
