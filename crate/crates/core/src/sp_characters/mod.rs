//! Characters and dimensions of the fundamental modules `L(ω_r)` of `Sp(2m)`.
//!
//! Write `R = m + 1 - r` in base `p`, let `f` be its lowest nonzero digit
//! position and `δ = (p - R_f) p^f`. Then
//!
//! ```text
//! ch L(ω_r) = Σ_{j ∈ J} ( ch Δ(ω_{r-2j}) - ch Δ(ω_{r-2j-2δ}) )
//! ```
//!
//! where `J` holds the `j` whose digits vanish up to position `f` and satisfy
//! `j_i + R_i < p` above it, and `Δ(ω_i) = 0` for `i < 0`.
//!
//! Dimensions are available through four independent routes (see
//! [`dim_simple`]); they are required to agree.

mod asymptotic;
mod dimension;
pub(crate) mod trig;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::padic::{expand, subset_unchecked, PadicExpansion, Prime};
use crate::series::d_series;

pub use asymptotic::{
    asymptotic_constant, asymptotic_ratio, fixed_r_asymptotic_check, AsymptoticConstant, FixedRRow,
};
pub use dimension::{
    dim_by_binomial, dim_by_series, dim_by_theorem, dim_by_trig, dim_simple, periodic_binomial_sum,
    periodic_binomial_sum_trig, trig_precision_bits, DimMethod, DimensionReport, TrigValue,
};

/// Which module family a [`CharacterVector`] is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// `Δ(ω_j)`
    Weyl,
    /// `L(ω_j)`
    Simple,
}

/// Integer combination of `Δ(ω_j)` or `L(ω_j)`, `0 ≤ j ≤ m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterVector {
    pub m: u64,
    pub basis: Basis,
    coeffs: BTreeMap<u64, i64>,
}

impl CharacterVector {
    pub fn new(m: u64, basis: Basis) -> Self {
        CharacterVector { m, basis, coeffs: BTreeMap::new() }
    }

    /// Adds `c` to the coefficient of index `j`, dropping zeros.
    pub fn add(&mut self, j: u64, c: i64) {
        assert!(j <= self.m, "index {j} exceeds rank {}", self.m);
        let e = self.coeffs.entry(j).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&j);
        }
    }

    pub fn get(&self, j: u64) -> i64 {
        self.coeffs.get(&j).copied().unwrap_or(0)
    }

    /// Nonzero `(index, coefficient)` pairs in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.coeffs.iter().map(|(&j, &c)| (j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Indices with positive coefficient, highest first.
    pub fn positive(&self) -> Vec<u64> {
        self.coeffs.iter().rev().filter(|(_, &c)| c > 0).map(|(&j, _)| j).collect()
    }

    /// Indices with negative coefficient, highest first.
    pub fn negative(&self) -> Vec<u64> {
        self.coeffs.iter().rev().filter(|(_, &c)| c < 0).map(|(&j, _)| j).collect()
    }

    /// Dense coefficients indexed `0..=m`.
    pub fn to_dense(&self) -> Vec<i64> {
        (0..=self.m).map(|j| self.get(j)).collect()
    }
}

/// The data of Theorem-style expansions for `1 ≤ r ≤ m`.
#[derive(Debug, Clone)]
pub(crate) struct RankData {
    pub r: u64,
    pub p: u64,
    /// `R = m + 1 - r`
    pub big_r: PadicExpansion,
    pub f: usize,
    pub k: usize,
}

impl RankData {
    pub fn new(r: u64, m: u64, p: Prime) -> Result<Self> {
        if r < 1 || r > m {
            return Err(Error::out_of_range("r", r, format!("1 ≤ r ≤ m = {m}")));
        }
        let big_r = expand(m + 1 - r, p);
        let f = big_r.lowest_nonzero().expect("R ≥ 1");
        let k = big_r.highest_nonzero().expect("R ≥ 1");
        Ok(RankData { r, p: p.get(), big_r, f, k })
    }

    pub fn r_f(&self) -> u64 {
        self.big_r.digit(self.f)
    }

    pub fn delta(&self) -> u64 {
        (self.p - self.r_f()) * self.p.pow(self.f as u32)
    }
}

pub(crate) fn check_rank(r: u64, m: u64) -> Result<()> {
    if r > m {
        return Err(Error::out_of_range("r", r, format!("0 ≤ r ≤ m = {m}")));
    }
    Ok(())
}

/// All `Σ_{i ≥ first} c_i p^i ≤ limit` with `c_i ≤ max_digit(i)`, stopping
/// after position `last` when given. Sorted.
pub(crate) fn digit_sums(
    p: u64,
    first: usize,
    last: Option<usize>,
    limit: u64,
    max_digit: &dyn Fn(usize) -> u64,
) -> Vec<u64> {
    fn go(
        p: u64,
        pos: usize,
        acc: u64,
        last: Option<usize>,
        limit: u64,
        max_digit: &dyn Fn(usize) -> u64,
        out: &mut Vec<u64>,
    ) {
        let place = p.checked_pow(pos as u32);
        let done = last.is_some_and(|l| pos > l) || place.is_none_or(|q| q > limit - acc);
        if done {
            out.push(acc);
            return;
        }
        let place = place.expect("checked above");
        for c in 0..=max_digit(pos) {
            let v = acc + c * place;
            if v > limit {
                break;
            }
            go(p, pos + 1, v, last, limit, max_digit, out);
        }
    }
    let mut out = Vec::new();
    go(p, first, 0, last, limit, max_digit, &mut out);
    out.sort_unstable();
    out
}

/// The part of `J` with `2j ≤ r`, together with `δ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JSet {
    pub js: Vec<u64>,
    pub delta: u64,
    /// lowest nonzero digit position of `R = m + 1 - r`
    pub f: usize,
    /// the digit `R_f`
    pub r_f: u64,
}

pub fn j_set(r: u64, m: u64, p: Prime) -> Result<JSet> {
    let data = RankData::new(r, m, p)?;
    Ok(j_set_of(&data))
}

pub(crate) fn j_set_of(data: &RankData) -> JSet {
    let p = data.p;
    let max_digit = |i: usize| p - 1 - data.big_r.digit(i);
    JSet {
        js: digit_sums(p, data.f + 1, None, data.r / 2, &max_digit),
        delta: data.delta(),
        f: data.f,
        r_f: data.r_f(),
    }
}

/// `ch L(ω_r)` in the Weyl basis.
pub fn decompose_simple(r: u64, m: u64, p: Prime) -> Result<CharacterVector> {
    check_rank(r, m)?;
    let mut out = CharacterVector::new(m, Basis::Weyl);
    if r == 0 {
        out.add(0, 1);
        return Ok(out);
    }
    let js = j_set(r, m, p)?;
    for &j in &js.js {
        out.add(r - 2 * j, 1);
        if let Some(low) = r.checked_sub(2 * j + 2 * js.delta) {
            out.add(low, -1);
        }
    }
    Ok(out)
}

/// `ch Δ(ω_r)` in the simple basis: `L(ω_j)` occurs iff `(r-j)/2 ⊂ m+1-j`.
pub fn decompose_weyl(r: u64, m: u64, p: Prime) -> Result<CharacterVector> {
    check_rank(r, m)?;
    let mut out = CharacterVector::new(m, Basis::Simple);
    for j in (r % 2..=r).step_by(2) {
        if subset_unchecked((r - j) / 2, m + 1 - j, p.get()) {
            out.add(j, 1);
        }
    }
    Ok(out)
}

/// `dim Δ(ω_k) = C(2m, k) - C(2m, k-2)`.
pub fn weyl_dim(k: u64, m: u64) -> Result<BigInt> {
    check_rank(k, m)?;
    let (k, n) = (k as i64, 2 * m as i64);
    Ok(binomial(n, k) - binomial(n, k - 2))
}

/// `dim L(ω_r)_{ω_{r-2i}}`, read off the tilting series `D_{m-r}`.
pub fn weight_multiplicity(r: u64, m: u64, p: Prime, i: u64) -> Result<BigInt> {
    check_rank(r, m)?;
    if 2 * i > r {
        return Err(Error::out_of_range("i", i, format!("0 ≤ 2i ≤ r = {r}")));
    }
    let n = (m - r + 2 * i) as usize;
    let series = d_series(m - r, p, n)?;
    Ok(series.coeff(n).expect("order n").to_integer())
}

/// The index set `A` of the binomial and trigonometric formulas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ASet {
    pub elements: Vec<u64>,
    /// `P = p^{k+1}`
    pub period: u64,
    /// `a ↦ reflect - a` permutes `A`
    pub reflect: u64,
}

/// `A = { Σ_{i=f+1}^{k} a_i p^i : a_i ≤ p-1-R_i }` for `R ≥ 1`, and `{0}` when `f = k`.
pub fn a_set(big_r: u64, p: Prime) -> Result<ASet> {
    if big_r == 0 {
        return Err(Error::out_of_range("R", big_r, "R ≥ 1"));
    }
    let e = expand(big_r, p);
    Ok(a_set_of(&e, p.get()))
}

pub(crate) fn a_set_of(big_r: &PadicExpansion, p: u64) -> ASet {
    let f = big_r.lowest_nonzero().expect("R ≥ 1");
    let k = big_r.highest_nonzero().expect("R ≥ 1");
    let period = p.pow(k as u32 + 1);
    let max_digit = |i: usize| p - 1 - big_r.digit(i);
    let elements = if f == k {
        vec![0]
    } else {
        digit_sums(p, f + 1, Some(k), u64::MAX, &max_digit)
    };
    let upper: u64 = (f + 1..=k).map(|i| big_r.digit(i) * p.pow(i as u32)).sum();
    ASet {
        elements,
        period,
        reflect: period - p.pow(f as u32 + 1) - upper,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    fn digits_naive(mut n: u64, p: u64) -> Vec<u64> {
        let mut d = Vec::new();
        while n > 0 {
            d.push(n % p);
            n /= p;
        }
        d
    }

    // ⊂ by explicit digit lists, independent of the padic module
    fn subset_naive(a: u64, b: u64, p: u64) -> bool {
        let (da, db) = (digits_naive(a, p), digits_naive(b, p));
        da.iter().enumerate().all(|(i, &x)| x == 0 || db.get(i) == Some(&x))
    }

    /// Inverse of the lower unitriangular matrix `[(k-l)/2 ⊂ m+1-l]`, by
    /// forward substitution; row `r` is `ch L(ω_r)` in the Weyl basis.
    fn inverse_oracle(m: u64, p: u64) -> Vec<Vec<i64>> {
        let n = (m + 1) as usize;
        let b = |k: usize, l: usize| -> i64 {
            if l > k || (k - l) % 2 == 1 {
                return 0;
            }
            subset_naive(((k - l) / 2) as u64, m + 1 - l as u64, p) as i64
        };
        let mut inv = vec![vec![0i64; n]; n];
        for col in 0..n {
            for row in 0..n {
                let mut v = if row == col { 1 } else { 0 };
                for t in 0..row {
                    v -= b(row, t) * inv[t][col];
                }
                inv[row][col] = v;
            }
        }
        inv
    }

    #[test]
    fn simple_matches_inverted_weyl_matrix() {
        for p in [2u64, 3, 5] {
            for m in 0..=30u64 {
                let oracle = inverse_oracle(m, p);
                for r in 0..=m {
                    let v = decompose_simple(r, m, pr(p)).unwrap().to_dense();
                    assert_eq!(v, oracle[r as usize], "p={p} m={m} r={r}");
                }
            }
        }
    }

    #[test]
    fn weyl_rows_contain_the_top_factor() {
        for p in [2, 3, 7] {
            for m in 0..15 {
                for r in 0..=m {
                    let w = decompose_weyl(r, m, pr(p)).unwrap();
                    assert_eq!(w.get(r), 1);
                    assert!(w.iter().all(|(j, c)| c == 1 && j % 2 == r % 2));
                }
            }
        }
    }

    #[test]
    fn second_fundamental() {
        // L(ω_2) = Δ(ω_2) - Δ(ω_0) when p | m, else Δ(ω_2)
        for p in [2u64, 3, 5] {
            for m in 2..40u64 {
                let v = decompose_simple(2, m, pr(p)).unwrap();
                let js = j_set(2, m, pr(p)).unwrap();
                assert_eq!(js.js, vec![0]);
                if m % p == 0 {
                    assert_eq!((v.positive(), v.negative()), (vec![2], vec![0]));
                    assert_eq!(js.delta, 1);
                } else {
                    assert_eq!((v.positive(), v.negative()), (vec![2], vec![]));
                }
            }
        }
        let v = decompose_simple(2, 4, pr(2)).unwrap();
        assert_eq!((v.positive(), v.negative()), (vec![2], vec![0]));
        let w = decompose_weyl(2, 4, pr(2)).unwrap();
        assert_eq!(w.positive(), vec![2, 0]);
    }

    #[test]
    fn large_p_gives_weyl_modules() {
        for m in 1..12u64 {
            for r in 0..=m {
                let v = decompose_simple(r, m, pr(13)).unwrap();
                assert_eq!(v.iter().collect::<Vec<_>>(), vec![(r, 1)]);
            }
        }
    }

    #[test]
    fn weyl_dims() {
        let expected = [20u64, 189, 1120, 4655, 14364, 33915, 62016, 87210, 90440, 58786];
        for (k, e) in (1..=10).zip(expected) {
            assert_eq!(weyl_dim(k, 10).unwrap(), BigInt::from(e));
        }
        assert_eq!(weyl_dim(0, 5).unwrap(), BigInt::from(1));
        assert_eq!(weyl_dim(1, 7).unwrap(), BigInt::from(14));
        assert!(weyl_dim(6, 5).is_err());
    }

    #[test]
    fn weight_line() {
        // i = 0 is the highest weight
        for p in [2, 3, 5] {
            for m in 1..10 {
                for r in 0..=m {
                    assert_eq!(weight_multiplicity(r, m, pr(p), 0).unwrap(), BigInt::from(1));
                }
            }
        }
        // r = m at p = 2 reads D_0 directly
        let d0 = d_series(0, pr(2), 16).unwrap();
        for i in 0..=4u64 {
            let expected = d0.coeff(2 * i as usize).unwrap().to_integer();
            assert_eq!(weight_multiplicity(8, 8, pr(2), i).unwrap(), expected);
        }
        assert!(weight_multiplicity(3, 5, pr(2), 2).is_err());
    }

    #[test]
    fn a_set_examples() {
        // R = 1: f = k = 0
        assert_eq!(a_set(1, pr(3)).unwrap(), ASet { elements: vec![0], period: 3, reflect: 0 });
        // R = 10 = 101_3: f = 0, k = 2, a_1 ≤ 2, a_2 ≤ 1
        let a = a_set(10, pr(3)).unwrap();
        assert_eq!(a.elements, vec![0, 3, 6, 9, 12, 15]);
        assert_eq!(a.period, 27);
        assert_eq!(a.reflect, 15);
        assert!(a_set(0, pr(3)).is_err());
    }

    #[test]
    fn rank_errors() {
        assert!(decompose_simple(5, 4, pr(2)).is_err());
        assert!(decompose_weyl(5, 4, pr(2)).is_err());
        assert!(j_set(0, 4, pr(2)).is_err());
    }
}
