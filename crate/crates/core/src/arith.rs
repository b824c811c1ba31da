//! Exact integer arithmetic over `u128`.
//!
//! Dimensions are capped at `u32::MAX` (see [`crate::fusion_type::MAX_DIM`]),
//! so an lcm of two dimensions fits in 64 bits and its square in 128 bits.
//! Every operation that could still overflow is checked and reports
//! [`ArithError::Overflow`] instead of wrapping.

use std::sync::OnceLock;

use thiserror::Error;

/// Exact nonnegative integer carrier.
pub type Nat = u128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("arithmetic overflow in exact integer computation")]
    Overflow,
    #[error("zero has no prime factorization")]
    Zero,
    #[error("gcd(0, 0) is undefined")]
    BothZero,
}

/// Primes below this bound are precomputed; they fully factor any `n < 2^32`.
pub const SMALL_PRIME_LIMIT: u32 = 1 << 16;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = SMALL_PRIME_LIMIT as usize;
        let mut composite = vec![false; limit];
        let mut primes = Vec::new();
        for i in 2..limit {
            if composite[i] {
                continue;
            }
            primes.push(i as u32);
            let mut j = i * i;
            while j < limit {
                composite[j] = true;
                j += i;
            }
        }
        primes
    })
}

/// Distinct prime divisors of `n`, ascending.
///
/// Trial division by the precomputed primes below [`SMALL_PRIME_LIMIT`],
/// then by odd candidates. Exhaustive (and fast) for `n < 2^32`, which covers
/// every admissible dimension; larger inputs are still factored correctly but
/// with cost growing like `sqrt(n)`.
pub fn prime_factors(n: Nat) -> Result<Vec<Nat>, ArithError> {
    if n == 0 {
        return Err(ArithError::Zero);
    }
    let mut rest = n;
    let mut factors = Vec::new();
    for &p in small_primes() {
        let p = Nat::from(p);
        if p * p > rest {
            break;
        }
        if rest.is_multiple_of(p) {
            factors.push(p);
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
    }
    let mut candidate = Nat::from(SMALL_PRIME_LIMIT) + 1;
    while candidate
        .checked_mul(candidate)
        .is_some_and(|sq| sq <= rest)
    {
        if rest.is_multiple_of(candidate) {
            factors.push(candidate);
            while rest.is_multiple_of(candidate) {
                rest /= candidate;
            }
        }
        candidate += 2;
    }
    if rest > 1 {
        factors.push(rest);
    }
    Ok(factors)
}

pub fn gcd(a: Nat, b: Nat) -> Result<Nat, ArithError> {
    if a == 0 && b == 0 {
        return Err(ArithError::BothZero);
    }
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    Ok(a)
}

/// Least common multiple, computed as `a / gcd(a, b) * b` with a checked product.
pub fn lcm(a: Nat, b: Nat) -> Result<Nat, ArithError> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    let g = gcd(a, b)?;
    (a / g).checked_mul(b).ok_or(ArithError::Overflow)
}

pub fn checked_square(n: Nat) -> Result<Nat, ArithError> {
    n.checked_mul(n).ok_or(ArithError::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_factors_examples() {
        assert_eq!(prime_factors(1).unwrap(), Vec::<Nat>::new());
        assert_eq!(prime_factors(36).unwrap(), vec![2, 3]);
        assert_eq!(prime_factors(992250).unwrap(), vec![2, 3, 5, 7]);
        assert_eq!(prime_factors(65537).unwrap(), vec![65537]);
        assert_eq!(prime_factors(0), Err(ArithError::Zero));
    }

    #[test]
    fn prime_factors_beyond_small_table() {
        // 4294967291 is the largest prime below 2^32; 65537 * 65539 forces the odd-candidate loop.
        assert_eq!(prime_factors(4294967291).unwrap(), vec![4294967291]);
        assert_eq!(prime_factors(65537 * 65539).unwrap(), vec![65537, 65539]);
        assert_eq!(prime_factors(2 * 65539 * 65539).unwrap(), vec![2, 65539]);
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(36, 40), Ok(4));
        assert_eq!(gcd(7, 1), Ok(1));
        assert_eq!(gcd(2268, 4900), Ok(28));
        assert_eq!(gcd(9, 0), Ok(9));
        assert_eq!(gcd(0, 0), Err(ArithError::BothZero));
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm(36, 40), Ok(360));
        assert_eq!(lcm(17, 17), Ok(17));
        assert_eq!(lcm(91, 75), Ok(6825));
    }

    #[test]
    fn lcm_overflow_is_reported() {
        let big = Nat::MAX / 2 + 1;
        assert_eq!(lcm(big, 3), Err(ArithError::Overflow));
        assert_eq!(checked_square(1 << 64), Err(ArithError::Overflow));
        let max_dim = Nat::from(u32::MAX);
        assert!(checked_square(lcm(max_dim, max_dim - 1).unwrap()).is_ok());
    }
}
