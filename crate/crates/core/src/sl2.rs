//! Weyl modules and simple modules of `SL(2)` in characteristic `p`.
//!
//! `L(sρ)` is a composition factor of `Δ(rρ)` (with multiplicity one) iff
//! `(r-s)/2 ⊂ p^k - 1 - s` for any `k` with `p^k > r`. Inverting this gives
//! an alternating sum of Weyl characters for `L(rρ)`, built from the base-`p`
//! digits of `r + 1`.

use serde::Serialize;

use crate::decomp_matrices::{build_direct, prime_power_exponent, DecompMatrix, IntMatrix, MatrixKind};
use crate::error::{Error, Result};
use crate::padic::{expand, lucas_divides, subset_unchecked, Prime};
use crate::sp_characters::digit_sums;

/// Smallest `p^k` exceeding `r`.
fn bound_above(r: u64, p: u64) -> u64 {
    let mut q = p;
    while q <= r {
        q *= p;
    }
    q
}

/// All `s` with `[Δ(rρ) : L(sρ)] = 1`, highest first.
pub fn sl2_weyl_factors(r: u64, p: Prime) -> Vec<u64> {
    let top = bound_above(r, p.get()) - 1;
    (0..=r)
        .rev()
        .step_by(2)
        .filter(|&s| subset_unchecked((r - s) / 2, top - s, p.get()))
        .collect()
}

/// The same set straight from Winter's digit condition: `s` qualifies iff
/// `r = Σ_{i∈I} (2p-2-s_i) p^i + Σ_{i∉I} s_i p^i` for some finite `I`.
/// Exponential in the number of digits; meant as an oracle.
pub fn winter_factors(r: u64, p: Prime) -> Vec<u64> {
    let pv = p.get();
    let positions = expand(r, p).len() + 1;
    (0..=r)
        .rev()
        .filter(|&s| {
            let digits = expand(s, p);
            (0u64..1 << positions).any(|mask| {
                let total: u64 = (0..positions)
                    .map(|i| {
                        let si = digits.digit(i);
                        let d = if mask >> i & 1 == 1 { 2 * pv - 2 - si } else { si };
                        d * pv.pow(i as u32)
                    })
                    .sum();
                total == r
            })
        })
        .collect()
}

/// `ch L(rρ)` as a signed sum of Weyl characters `ch Δ(kρ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sl2Character {
    pub r: u64,
    pub p: u64,
    /// highest weights entering with sign `+`, highest first
    pub plus: Vec<u64>,
    /// highest weights entering with sign `-`, highest first
    pub minus: Vec<u64>,
}

impl Sl2Character {
    /// Multiplicity of the weight `(r - 2t)ρ`, for `t = 0..=r`.
    pub fn weight_multiplicities(&self) -> Vec<i64> {
        let r = self.r as i64;
        (0..=r)
            .map(|t| {
                let w = (r - 2 * t).unsigned_abs();
                let count = |v: &[u64]| v.iter().filter(|&&a| w <= a).count() as i64;
                count(&self.plus) - count(&self.minus)
            })
            .collect()
    }
}

pub fn sl2_simple_char(r: u64, p: Prime) -> Sl2Character {
    let pv = p.get();
    let e = expand(r + 1, p);
    let s = e.lowest_nonzero().expect("r + 1 ≥ 1");
    let a_s = e.digit(s);
    let js = digit_sums(pv, s + 1, None, r / 2, &|i| e.digit(i));
    let shift = 2 * a_s * pv.pow(s as u32);
    let plus = js.iter().rev().map(|&j| r - 2 * j).collect();
    let minus = js.iter().rev().filter_map(|&j| r.checked_sub(shift + 2 * j)).collect();
    Sl2Character { r, p: pv, plus, minus }
}

/// `1` at `t` iff `(r - 2t)ρ` is a weight of `L(rρ)`, i.e. `p ∤ C(r, t)`.
pub fn lucas_weights(r: u64, p: Prime) -> Vec<i64> {
    (0..=r).map(|t| (!lucas_divides(r, t as i64, p)) as i64).collect()
}

/// Decomposition matrix of `Δ(0), .., Δ((p^n - 2)ρ)`; row `r+1` lists the factors of `Δ(rρ)`.
pub fn sl2_decomp_matrix(size: usize, p: Prime) -> Result<DecompMatrix> {
    let valid = size >= 1 && prime_power_exponent(size + 1, p).is_some_and(|n| n >= 1);
    if !valid {
        return Err(Error::BadSize { size, p: p.get(), form: "p^n - 1" });
    }
    let mut m = IntMatrix::zeros(size);
    for r in 0..size {
        for s in sl2_weyl_factors(r as u64, p) {
            m.set(r, s as usize, 1);
        }
    }
    Ok(DecompMatrix { kind: MatrixKind::B, p, matrix: m })
}

/// `sl2_decomp_matrix` checked against the direct `B(p^n - 1)`.
pub fn sl2_matches_b(size: usize, p: Prime) -> Result<bool> {
    Ok(sl2_decomp_matrix(size, p)?.matrix == build_direct(size, p, MatrixKind::B)?.matrix)
}
