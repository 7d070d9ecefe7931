//! Exact rational arithmetic and the small number-theoretic kernel used by the
//! rest of the crate: divisors, the Möbius function, binomials with integer
//! (possibly negative) upper argument, factorials and Bernoulli numbers.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// `n / d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::NonPositiveArgument("divisors"));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// The Möbius function μ(n).
pub fn moebius(n: u64) -> Result<i8> {
    if n == 0 {
        return Err(Error::NonPositiveArgument("moebius"));
    }
    let mut m = n;
    let mut sign = 1i8;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// `e (e - 1) ... (e - j + 1) / j!` for any integer `e`.
///
/// This is the coefficient of `t^j` in `(1 + t)^e`, an integer for every
/// integer `e`.
pub fn gen_binomial(e: i64, j: u32) -> Rational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..j {
        num *= BigInt::from(e) - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    Rational::new(num, den)
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Falling factorial `n (n - 1) ... (n - k + 1)`, which is `n!/(n-k)!` when
/// `k <= n`.
pub fn falling_factorial(n: i64, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i as i64))
}

/// Bernoulli number `B_m` from the recurrence `sum_{j=0}^{m} C(m+1, j) B_j = 0`
/// with `B_0 = 1`. This gives `B_1 = -1/2`.
pub fn bernoulli(m: u32) -> Rational {
    let mut table: Vec<Rational> = vec![Rational::one()];
    for k in 1..=m {
        let mut acc = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc += gen_binomial(i64::from(k) + 1, j as u32) * b;
            }
        }
        table.push(-acc / int(i64::from(k) + 1));
    }
    table.swap_remove(m as usize)
}

/// Returns the integer value of `r` if it has denominator one.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.numer().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(10).unwrap(), vec![1, 2, 5, 10]);
        assert_eq!(divisors(49).unwrap(), vec![1, 7, 49]);
        assert_eq!(divisors(0), Err(Error::NonPositiveArgument("divisors")));
    }

    #[test]
    fn divisors_match_filter() {
        for n in 1..500u64 {
            let brute: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(divisors(n).unwrap(), brute);
        }
    }

    /// μ from an explicit prime factorization by trial division.
    fn moebius_oracle(n: u64) -> i8 {
        let mut exps = Vec::new();
        let mut m = n;
        for p in 2..=n {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            if e > 0 {
                exps.push(e);
            }
        }
        if exps.iter().any(|&e| e > 1) {
            0
        } else if exps.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1).unwrap(), 1);
        assert_eq!(moebius(4).unwrap(), 0);
        assert_eq!(moebius(10).unwrap(), 1);
        assert_eq!(moebius(30).unwrap(), -1);
        assert!(moebius(0).is_err());
        for n in 1..300 {
            assert_eq!(moebius(n).unwrap(), moebius_oracle(n), "n = {n}");
        }
    }

    #[test]
    fn moebius_divisor_sum() {
        for n in 1..=10_000u64 {
            let s: i64 = divisors(n)
                .unwrap()
                .into_iter()
                .map(|d| i64::from(moebius(d).unwrap()))
                .sum();
            assert_eq!(s, i64::from(n == 1), "n = {n}");
        }
    }

    /// Coefficients of 1/(1+t)^4 up to t^2 by inverting the polynomial
    /// 1 + 4t + 6t^2 term by term.
    fn inverse_series_oracle() -> [i64; 3] {
        let p = [1i64, 4, 6];
        let mut q = [0i64; 3];
        q[0] = 1;
        for n in 1..3 {
            q[n] = -(1..=n).map(|i| p[i] * q[n - i]).sum::<i64>();
        }
        q
    }

    #[test]
    fn gen_binomial_examples() {
        assert_eq!(gen_binomial(6, 2), int(15));
        assert_eq!(gen_binomial(-1, 3), int(-1));
        assert_eq!(gen_binomial(-4, 2), int(inverse_series_oracle()[2]));
        assert_eq!(gen_binomial(-4, 2), int(10));
        assert_eq!(gen_binomial(3, 5), int(0));
        assert_eq!(gen_binomial(-7, 0), int(1));
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(factorial(8), BigInt::from(40320));
        assert_eq!(falling_factorial(6, 6), factorial(6));
        assert_eq!(falling_factorial(-2, 3), BigInt::from(-24));
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        // B_2 by hand: 1 + 3 B_1 + 3 B_2 = 0 -> B_2 = 1/6
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        for m in (3..30).step_by(2) {
            assert!(bernoulli(m).is_zero(), "B_{m}");
        }
    }
}
