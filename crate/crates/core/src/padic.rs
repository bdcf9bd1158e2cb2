//! Base-p digits and the digit relations `⊂`, `≺₁` and `≺₋₁`.
//!
//! Digits are stored least-significant first, so digit `i` is the
//! coefficient of `p^i`. Zero has no digits; its lowest and highest nonzero
//! positions are absent.

use std::fmt;

use crate::error::{Error, Result};

/// A prime number, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    /// Validates `p` by trial division.
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// `p^e`, panicking on overflow.
    pub fn pow(self, e: u32) -> u64 {
        self.0.checked_pow(e).expect("power of p overflows u64")
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Deterministic primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// The base-p expansion of a nonnegative integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PadicExpansion {
    p: u64,
    digits: Vec<u64>,
    value: u64,
}

impl PadicExpansion {
    pub fn new(n: u64, p: Prime) -> Self {
        expand(n, p)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// Canonical digits, least significant first; empty for zero.
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Digit `i`, zero past the end.
    pub fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Index of the lowest nonzero digit.
    pub fn lowest_nonzero(&self) -> Option<usize> {
        self.digits.iter().position(|&d| d != 0)
    }

    /// Index of the highest nonzero digit.
    pub fn highest_nonzero(&self) -> Option<usize> {
        // canonical form has no trailing zeros
        self.digits.len().checked_sub(1)
    }

    /// Iterates over `(position, digit)` for the nonzero digits.
    pub fn nonzero_digits(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.digits.iter().copied().enumerate().filter(|&(_, d)| d != 0)
    }
}

/// Expands `n` in base `p`.
pub fn expand(n: u64, p: Prime) -> PadicExpansion {
    let base = p.get();
    assert!(base >= 2, "base must be at least 2");
    let mut digits = Vec::new();
    let mut rest = n;
    while rest > 0 {
        digits.push(rest % base);
        rest /= base;
    }
    PadicExpansion { p: base, digits, value: n }
}

fn require_positive(b: u64) -> Result<()> {
    if b == 0 {
        return Err(Error::out_of_range("b", 0, "b > 0"));
    }
    Ok(())
}

/// `a ⊂ b`: every digit of `a` is zero or equal to the matching digit of `b`.
pub fn subset_rel(a: u64, b: u64, p: Prime) -> Result<bool> {
    require_positive(b)?;
    Ok(subset_unchecked(a, b, p.get()))
}

pub(crate) fn subset_unchecked(mut a: u64, mut b: u64, p: u64) -> bool {
    while a > 0 {
        let ad = a % p;
        if ad != 0 && ad != b % p {
            return false;
        }
        a /= p;
        b /= p;
    }
    true
}

/// Outcome of comparing `a` against `b` with the signed precedence relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Precedence {
    /// `a ≺₁ b`
    Plus,
    /// `a ≺₋₁ b`
    Minus,
    /// neither relation holds
    Unrelated,
}

impl Precedence {
    /// `+1`, `-1` or `0`.
    pub fn sign(self) -> i8 {
        match self {
            Precedence::Plus => 1,
            Precedence::Minus => -1,
            Precedence::Unrelated => 0,
        }
    }
}

/// Decides `a ≺₁ b` / `a ≺₋₁ b`, with `s` the lowest nonzero digit index of `b`.
///
/// `≺₁`: digits `a_0..=a_s` vanish and `a_i + b_i < p` for every `i > s`.
/// `≺₋₁`: digits `a_0..a_s` (exclusive) vanish, `a_s + b_s = p` and
/// `a_i + b_i < p` for every `i > s`.
pub fn prec_rel(a: u64, b: u64, p: Prime) -> Result<Precedence> {
    require_positive(b)?;
    Ok(prec_unchecked(a, b, p.get()))
}

pub(crate) fn prec_unchecked(a: u64, b: u64, p: u64) -> Precedence {
    let mut a = a;
    let mut b = b;
    // below s both digits of b are zero and a must vanish there too
    while b % p == 0 {
        if a % p != 0 {
            return Precedence::Unrelated;
        }
        a /= p;
        b /= p;
    }
    let (a_s, b_s) = (a % p, b % p);
    let kind = if a_s == 0 {
        Precedence::Plus
    } else if a_s + b_s == p {
        Precedence::Minus
    } else {
        return Precedence::Unrelated;
    };
    a /= p;
    b /= p;
    while a > 0 {
        if a % p + b % p >= p {
            return Precedence::Unrelated;
        }
        a /= p;
        b /= p;
    }
    kind
}

/// True iff `p` divides `binom(n, k)`; out-of-range `k` gives a zero binomial.
pub fn lucas_divides(n: u64, k: i64, p: Prime) -> bool {
    if k < 0 || k as u64 > n {
        return true;
    }
    let p = p.get();
    let (mut n, mut k) = (n, k as u64);
    while k > 0 {
        if k % p > n % p {
            return true;
        }
        n /= p;
        k /= p;
    }
    false
}

/// Exponent of `p` in `n`; `n` must be nonzero.
pub fn valuation(n: u64, p: Prime) -> u32 {
    assert!(n != 0, "valuation of zero");
    let p = p.get();
    let mut n = n;
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// `⌊log_p n⌋` by repeated division, for `n ≥ 1`.
pub fn floor_log(n: u64, p: Prime) -> u32 {
    assert!(n >= 1, "log of zero");
    let p = p.get();
    let mut n = n;
    let mut e = 0;
    while n >= p {
        n /= p;
        e += 1;
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn expand_examples() {
        assert_eq!(expand(10, pr(3)).digits(), &[1, 0, 1]);
        let zero = expand(0, pr(5));
        assert!(zero.digits().is_empty());
        assert_eq!(zero.lowest_nonzero(), None);
        assert_eq!(zero.highest_nonzero(), None);
        let e = expand(11, pr(2));
        assert_eq!(e.digits(), &[1, 1, 0, 1]);
        assert_eq!(e.lowest_nonzero(), Some(0));
        assert_eq!(e.highest_nonzero(), Some(3));
        assert_eq!(expand(12, pr(2)).lowest_nonzero(), Some(2));
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(Prime::new(1).is_err());
        assert_eq!(Prime::new(9), Err(Error::NotPrime(9)));
        assert!(is_prime(1_000_000_007));
    }

    #[test]
    fn subset_examples() {
        assert!(subset_rel(0, 7, pr(3)).unwrap());
        for b in 1..50 {
            assert!(subset_rel(b, b, pr(3)).unwrap());
        }
        // 2 = [2], 5 = [2, 1] in base 3
        assert!(subset_rel(2, 5, pr(3)).unwrap());
        // 1 = [1] vs 5 = [2, 1]
        assert!(!subset_rel(1, 5, pr(3)).unwrap());
        assert!(subset_rel(3, 5, pr(3)).unwrap());
        assert!(subset_rel(1, 0, pr(3)).is_err());
    }

    #[test]
    fn prec_examples() {
        for b in 1..40 {
            for p in [2, 3, 5] {
                assert_eq!(prec_rel(0, b, pr(p)).unwrap(), Precedence::Plus);
            }
        }
        assert_eq!(prec_rel(1, 1, pr(2)).unwrap(), Precedence::Minus);
        // b = 2 = [0, 1] in base 2, a = 1 has a_0 != 0
        assert_eq!(prec_rel(1, 2, pr(2)).unwrap(), Precedence::Unrelated);
        // b = 3 = [0, 1] base 3, a = 6 = [0, 2]: a_1 + b_1 = 3 = p
        assert_eq!(prec_rel(6, 3, pr(3)).unwrap(), Precedence::Minus);
        // a = 9 = [0, 0, 1], b = 3: s = 1, a_1 = 0, a_2 + b_2 = 1 < 3
        assert_eq!(prec_rel(9, 3, pr(3)).unwrap(), Precedence::Plus);
        assert!(prec_rel(0, 0, pr(2)).is_err());
    }

    #[test]
    fn lucas_examples() {
        assert!(lucas_divides(2, 1, pr(2)));
        for n in 0..30 {
            assert!(!lucas_divides(n, 0, pr(3)));
        }
        assert!(lucas_divides(4, -1, pr(3)));
        assert!(lucas_divides(4, 5, pr(3)));
        assert!(!lucas_divides(4, 4, pr(3)));
    }

    #[test]
    fn valuation_and_log() {
        assert_eq!(valuation(24, pr(2)), 3);
        assert_eq!(valuation(7, pr(2)), 0);
        assert_eq!(floor_log(1, pr(3)), 0);
        assert_eq!(floor_log(8, pr(3)), 1);
        assert_eq!(floor_log(9, pr(3)), 2);
        assert_eq!(floor_log(1024, pr(2)), 10);
        assert_eq!(floor_log(1023, pr(2)), 9);
    }
}
