//! Two-row Specht modules `S^{(n-i,i)}` and simple modules `D^{(n-i,i)}` of `S_n`.
//!
//! James: `D^{(n-i,i)}` is a factor of `S^{(n-r,r)}` iff `r - i ⊂ n + 1 - 2i`,
//! always with multiplicity one. The decomposition matrix is the even-index
//! minor of `B(n+2)` and its inverse the even-index minor of `A(n+2)`.
//!
//! Only `p`-regular partitions label simple modules. For two rows this rules
//! out `(n/2, n/2)` when `p = 2` and nothing otherwise.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::binomial::binomial;
use crate::decomp_matrices::{build_direct, IntMatrix, MatrixKind};
use crate::error::{Error, Result};
use crate::padic::{expand, subset_unchecked, Prime};
use crate::sp_characters::digit_sums;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleKind {
    Specht,
    Simple,
}

/// The module `S^{(n-r,r)}` or `D^{(n-r,r)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TwoRowClass {
    pub n: u64,
    pub r: u64,
    pub kind: ModuleKind,
}

impl TwoRowClass {
    pub fn specht(n: u64, r: u64) -> Result<Self> {
        check_two_row(n, r)?;
        Ok(TwoRowClass { n, r, kind: ModuleKind::Specht })
    }

    pub fn simple(n: u64, r: u64, p: Prime) -> Result<Self> {
        check_label(n, r, p)?;
        Ok(TwoRowClass { n, r, kind: ModuleKind::Simple })
    }

    pub fn dim(&self, p: Prime) -> Result<BigInt> {
        match self.kind {
            ModuleKind::Specht => Ok(specht_dim(self.n, self.r)),
            ModuleKind::Simple => simple_dim_two_row(self.n, self.r, p),
        }
    }
}

/// Integer combination of two-row classes, keyed by the second part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrothendieckVector {
    pub n: u64,
    pub basis: ModuleKind,
    coeffs: BTreeMap<u64, i64>,
}

impl GrothendieckVector {
    pub fn new(n: u64, basis: ModuleKind) -> Self {
        GrothendieckVector { n, basis, coeffs: BTreeMap::new() }
    }

    pub fn add(&mut self, i: u64, c: i64) {
        assert!(2 * i <= self.n, "second part {i} too large for n = {}", self.n);
        let e = self.coeffs.entry(i).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&i);
        }
    }

    pub fn get(&self, i: u64) -> i64 {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    /// Nonzero `(second part, coefficient)` pairs, largest second part first.
    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.coeffs.iter().rev().map(|(&i, &c)| (i, c))
    }
}

fn check_two_row(n: u64, r: u64) -> Result<()> {
    if 2 * r > n {
        return Err(Error::out_of_range("r", r, format!("0 ≤ 2r ≤ n = {n}")));
    }
    Ok(())
}

fn is_regular(n: u64, i: u64, p: Prime) -> bool {
    !(p.get() == 2 && 2 * i == n)
}

fn check_label(n: u64, r: u64, p: Prime) -> Result<()> {
    check_two_row(n, r)?;
    if !is_regular(n, r, p) {
        return Err(Error::NotALabel(n - r, r, p.get()));
    }
    Ok(())
}

/// Second parts `i` of the factors `D^{(n-i,i)}` of `S^{(n-r,r)}`, largest first.
pub fn james_factors(n: u64, r: u64, p: Prime) -> Result<Vec<u64>> {
    check_two_row(n, r)?;
    Ok((0..=r)
        .rev()
        .filter(|&i| is_regular(n, i, p) && subset_unchecked(r - i, n + 1 - 2 * i, p.get()))
        .collect())
}

/// `[S^{(n-r,r)}]` in the simple basis.
pub fn specht_in_simple_basis(n: u64, r: u64, p: Prime) -> Result<GrothendieckVector> {
    let mut v = GrothendieckVector::new(n, ModuleKind::Simple);
    for i in james_factors(n, r, p)? {
        v.add(i, 1);
    }
    Ok(v)
}

/// `[D^{(n-r,r)}]` in the Specht basis. With `R = n + 1 - 2r`, `f` and `δ`
/// as for `Sp(2m)`:
/// `Σ_{j∈J, j≤r} [S^{(n-r+j, r-j)}] - Σ_{j∈J, j+δ≤r} [S^{(n-r+j+δ, r-j-δ)}]`.
pub fn simple_in_specht_basis(n: u64, r: u64, p: Prime) -> Result<GrothendieckVector> {
    check_label(n, r, p)?;
    let pv = p.get();
    let big_r = expand(n + 1 - 2 * r, p);
    let f = big_r.lowest_nonzero().expect("R ≥ 1");
    let delta = (pv - big_r.digit(f)) * pv.pow(f as u32);
    let js = digit_sums(pv, f + 1, None, r, &|i| pv - 1 - big_r.digit(i));
    let mut v = GrothendieckVector::new(n, ModuleKind::Specht);
    for j in js {
        v.add(r - j, 1);
        if let Some(i) = r.checked_sub(j + delta) {
            v.add(i, -1);
        }
    }
    Ok(v)
}

/// `dim S^{(n-i,i)} = C(n, i) - C(n, i-1)`.
pub fn specht_dim(n: u64, i: u64) -> BigInt {
    binomial(n as i64, i as i64) - binomial(n as i64, i as i64 - 1)
}

/// `dim D^{(n-r,r)}` from its Specht expansion.
pub fn simple_dim_two_row(n: u64, r: u64, p: Prime) -> Result<BigInt> {
    let v = simple_in_specht_basis(n, r, p)?;
    let mut total = BigInt::zero();
    for (i, c) in v.iter() {
        total += specht_dim(n, i) * c;
    }
    Ok(total)
}

/// Rows and columns `2, 4, .., 2(⌊n/2⌋+1)` (1-based) of `A(n+2)` and `B(n+2)`.
pub fn even_minors(n: u64, p: Prime) -> Result<(IntMatrix, IntMatrix)> {
    let size = n as usize + 2;
    let idx: Vec<usize> = (1..size).step_by(2).collect();
    let a = build_direct(size, p, MatrixKind::A)?.matrix.select(&idx);
    let b = build_direct(size, p, MatrixKind::B)?.matrix.select(&idx);
    Ok((a, b))
}

/// James's decomposition matrix over all second parts `0..=⌊n/2⌋`: entry
/// `(r, i)` is `[r - i ⊂ n + 1 - 2i]`. Includes the formal `p`-singular column.
pub fn james_matrix(n: u64, p: Prime) -> IntMatrix {
    let size = (n / 2 + 1) as usize;
    IntMatrix::from_fn(size, |r, i| {
        (i <= r && subset_unchecked((r - i) as u64, n + 1 - 2 * i as u64, p.get())) as i64
    })
}
