//! Growth of `dim L(ω_r)` along the two natural directions.
//!
//! For fixed `d`, `dim L_{d+n}(ω_n) ~ c · (4cos²(π/(2P)))^n` with `P = p^{k+1}`
//! taken from `R = d + 1`. For fixed `r`, `dim L_m(ω_r) ~ (2^r/r!) m^r`.

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::dimension::dim_by_theorem;
use super::trig::{from_bigint, to_decimal, to_f64, word_bits, SineTable, RM};
use super::{a_set_of, weyl_dim};
use crate::error::{Error, Result};
use crate::padic::{expand, Prime};

/// The constant `c`, the growth base and the smallest pole of `χ_d`.
#[derive(Debug, Clone)]
pub struct AsymptoticConstant {
    pub d: u64,
    pub p: u64,
    /// highest nonzero digit position of `d + 1`
    pub k: usize,
    /// `P = p^{k+1}`
    pub period: u64,
    pub bits: usize,
    pub c: BigFloat,
    /// `4cos²(π/(2P))`
    pub growth_base: BigFloat,
    /// `1 / growth_base`
    pub smallest_pole: BigFloat,
}

impl AsymptoticConstant {
    pub fn c_f64(&self) -> f64 {
        to_f64(&self.c)
    }

    pub fn growth_base_f64(&self) -> f64 {
        to_f64(&self.growth_base)
    }

    /// `(c, growth base, smallest pole)` in decimal, `digits` significant digits.
    pub fn decimals(&self, digits: usize) -> (String, String, String) {
        (
            to_decimal(&self.c, digits),
            to_decimal(&self.growth_base, digits),
            to_decimal(&self.smallest_pole, digits),
        )
    }
}

/// `c = (2cos(π/(2P)))^{2d} (2/P) sin(π/P) Σ_{a∈A} sin(π(R+2a)/P)`, `R = d + 1`.
pub fn asymptotic_constant(d: u64, p: Prime, bits: usize) -> Result<AsymptoticConstant> {
    let bits = word_bits(bits.max(64));
    let big_r = expand(d + 1, p);
    let a = a_set_of(&big_r, p.get());
    let k = big_r.highest_nonzero().expect("d + 1 ≥ 1");
    let period = a.period;
    let table = SineTable::get(period, bits);
    let two = BigFloat::from_u64(2, bits);
    let r = (d + 1) as i128;

    let mut sines = BigFloat::from_u64(0, bits);
    for &x in &a.elements {
        sines = sines.add(table.sin_units(2 * (r + 2 * x as i128)), bits, RM);
    }
    let two_cos = two.mul(table.cos_units(1), bits, RM);
    let c = two_cos
        .powi(2 * d as usize, bits, RM)
        .mul(&two, bits, RM)
        .div(&BigFloat::from_u64(period, bits), bits, RM)
        .mul(table.sin_units(2), bits, RM)
        .mul(&sines, bits, RM);
    let growth_base = two_cos.mul(&two_cos, bits, RM);
    let smallest_pole = BigFloat::from_u64(1, bits).div(&growth_base, bits, RM);
    Ok(AsymptoticConstant { d, p: p.get(), k, period, bits, c, growth_base, smallest_pole })
}

/// `dim L_{d+n}(ω_n) / (c · base^n)`.
pub fn asymptotic_ratio(d: u64, p: Prime, n: u64, bits: usize) -> Result<f64> {
    let dim = dim_by_theorem(n, d + n, p)?;
    // the dimension has about 2n bits; keep those plus the requested margin
    let bits = word_bits(bits + 2 * n as usize + 64);
    let ac = asymptotic_constant(d, p, bits)?;
    let predicted = ac.c.mul(&ac.growth_base.powi(n as usize, bits, RM), bits, RM);
    if predicted.is_zero() {
        return Err(Error::Inconsistent(format!("vanishing asymptotic constant for d = {d}, p = {p}")));
    }
    Ok(to_f64(&from_bigint(&dim, bits).div(&predicted, bits, RM)))
}

/// One row of the fixed-`r` table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixedRRow {
    pub m: u64,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub dim_simple: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub dim_weyl: BigInt,
    /// `dim L_m(ω_r) / ((2^r/r!) m^r)`
    pub ratio: f64,
    /// `dim Δ_m(ω_r) / ((2^r/r!) m^r)`
    pub weyl_ratio: f64,
}

pub fn fixed_r_asymptotic_check(r: u64, p: Prime, ms: &[u64]) -> Result<Vec<FixedRRow>> {
    if r == 0 {
        return Err(Error::out_of_range("r", r, "r ≥ 1"));
    }
    let factorial: BigInt = (1..=r).map(BigInt::from).product();
    ms.iter()
        .map(|&m| {
            let dim_simple = dim_by_theorem(r, m, p)?;
            let dim_weyl = weyl_dim(r, m)?;
            let leading = BigRational::new((BigInt::one() << r as usize) * BigInt::from(m).pow(r as u32), factorial.clone());
            let ratio_of = |x: &BigInt| (BigRational::from_integer(x.clone()) / &leading).to_f64().unwrap_or(f64::NAN);
            Ok(FixedRRow {
                m,
                ratio: ratio_of(&dim_simple),
                weyl_ratio: ratio_of(&dim_weyl),
                dim_simple,
                dim_weyl,
            })
        })
        .collect()
}
