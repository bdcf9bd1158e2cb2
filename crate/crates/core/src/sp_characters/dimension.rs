//! The four routes to `dim L(ω_r)`.

use std::str::FromStr;

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::trig::{round_checked, word_bits, SineTable, RM};
use super::{a_set_of, check_rank, decompose_simple, weyl_dim, RankData};
use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::padic::Prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DimMethod {
    Theorem,
    Series,
    Binomial,
    Trig,
    All,
}

impl DimMethod {
    pub fn name(self) -> &'static str {
        match self {
            DimMethod::Theorem => "theorem",
            DimMethod::Series => "series",
            DimMethod::Binomial => "binomial",
            DimMethod::Trig => "trig",
            DimMethod::All => "all",
        }
    }

    fn includes(self, other: DimMethod) -> bool {
        self == DimMethod::All || self == other
    }
}

impl FromStr for DimMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "theorem" => Ok(DimMethod::Theorem),
            "series" => Ok(DimMethod::Series),
            "binomial" => Ok(DimMethod::Binomial),
            "trig" => Ok(DimMethod::Trig),
            "all" => Ok(DimMethod::All),
            _ => Err(format!("unknown method {s:?}")),
        }
    }
}

/// A value recovered by rounding a high-precision trigonometric sum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrigValue {
    #[serde(serialize_with = "crate::ser::bigint")]
    pub value: BigInt,
    /// distance from the computed sum to `value`
    pub residual: f64,
    /// working precision
    pub bits: usize,
}

/// `dim L(ω_r)` by each requested method.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DimensionReport {
    pub m: u64,
    pub p: u64,
    pub r: u64,
    #[serde(serialize_with = "crate::ser::opt_bigint")]
    pub theorem: Option<BigInt>,
    #[serde(serialize_with = "crate::ser::opt_bigint")]
    pub series: Option<BigInt>,
    #[serde(serialize_with = "crate::ser::opt_bigint")]
    pub binomial: Option<BigInt>,
    pub trig: Option<TrigValue>,
    /// all computed values coincide
    pub agree: bool,
}

impl DimensionReport {
    /// The common value, from the first method that ran.
    pub fn value(&self) -> &BigInt {
        self.theorem
            .as_ref()
            .or(self.series.as_ref())
            .or(self.binomial.as_ref())
            .or(self.trig.as_ref().map(|t| &t.value))
            .expect("at least one method runs")
    }
}

pub fn dim_simple(r: u64, m: u64, p: Prime, method: DimMethod) -> Result<DimensionReport> {
    check_rank(r, m)?;
    let run = |which: DimMethod, f: fn(u64, u64, Prime) -> Result<BigInt>| -> Result<Option<BigInt>> {
        if method.includes(which) {
            f(r, m, p).map(Some)
        } else {
            Ok(None)
        }
    };
    let theorem = run(DimMethod::Theorem, dim_by_theorem)?;
    let series = run(DimMethod::Series, dim_by_series)?;
    let binomial = run(DimMethod::Binomial, dim_by_binomial)?;
    let trig = if method.includes(DimMethod::Trig) {
        Some(dim_by_trig(r, m, p)?)
    } else {
        None
    };
    let values: Vec<&BigInt> = [theorem.as_ref(), series.as_ref(), binomial.as_ref(), trig.as_ref().map(|t| &t.value)]
        .into_iter()
        .flatten()
        .collect();
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    Ok(DimensionReport { m, p: p.get(), r, theorem, series, binomial, trig, agree })
}

/// `Σ c_j dim Δ(ω_j)` over the Weyl expansion of `L(ω_r)`.
pub fn dim_by_theorem(r: u64, m: u64, p: Prime) -> Result<BigInt> {
    let ch = decompose_simple(r, m, p)?;
    let mut total = BigInt::zero();
    for (j, c) in ch.iter() {
        total += weyl_dim(j, m)? * c;
    }
    Ok(total)
}

/// Coefficient of `X^r` in
/// `(1-X)(1+X)^{2m+1} Π_{i=f}^{k} (1 - X^{2(p-R_i)p^i}) / (1 - X^{2p^{i+1}})`.
pub fn dim_by_series(r: u64, m: u64, p: Prime) -> Result<BigInt> {
    check_rank(r, m)?;
    if r == 0 {
        return Ok(BigInt::one());
    }
    let data = RankData::new(r, m, p)?;
    let order = r as usize;
    let mut c: Vec<BigInt> = (0..=order).map(|i| binomial(2 * m as i64 + 1, i as i64)).collect();
    // times (1 - X^e)
    let mul_one_minus = |c: &mut Vec<BigInt>, e: u64| {
        if e as usize <= order {
            for n in (e as usize..=order).rev() {
                let t = c[n - e as usize].clone();
                c[n] -= t;
            }
        }
    };
    // divided by (1 - X^e)
    let div_one_minus = |c: &mut Vec<BigInt>, e: u64| {
        if e as usize <= order {
            for n in e as usize..=order {
                let t = c[n - e as usize].clone();
                c[n] += t;
            }
        }
    };
    mul_one_minus(&mut c, 1);
    let pv = data.p;
    for i in data.f..=data.k {
        let ri = data.big_r.digit(i);
        if ri == 0 {
            continue;
        }
        let pi = pv.pow(i as u32);
        mul_one_minus(&mut c, 2 * (pv - ri) * pi);
        div_one_minus(&mut c, 2 * pv * pi);
    }
    Ok(c.swap_remove(order))
}

/// `Σ_{a ∈ A} Σ_n [C(2m, r-2a+2nP) - C(2m, r-2-2a+2nP)]` with `P = p^{k+1}`.
pub fn dim_by_binomial(r: u64, m: u64, p: Prime) -> Result<BigInt> {
    check_rank(r, m)?;
    if r == 0 {
        return Ok(BigInt::one());
    }
    let data = RankData::new(r, m, p)?;
    let a = a_set_of(&data.big_r, data.p);
    let s = 2 * a.period;
    let mut total = BigInt::zero();
    for &x in &a.elements {
        let base = r as i64 - 2 * x as i64;
        total += periodic_binomial_sum(2 * m, base, s)?;
        total -= periodic_binomial_sum(2 * m, base - 2, s)?;
    }
    Ok(total)
}

/// `Σ_{n ∈ ℤ} C(q, r + ns)`, summing only the nonvanishing terms.
pub fn periodic_binomial_sum(q: u64, r: i64, s: u64) -> Result<BigInt> {
    if s == 0 {
        return Err(Error::out_of_range("s", 0, "s ≥ 1"));
    }
    let start = r.rem_euclid(s as i64) as u64;
    let mut total = BigInt::zero();
    let mut t = start;
    while t <= q {
        total += binomial(q as i64, t as i64);
        t += s;
    }
    Ok(total)
}

/// The same sum as `(1/s) Σ_{j=1}^{s} cos(jπ(q-2r)/s) (2cos(jπ/s))^q`.
pub fn periodic_binomial_sum_trig(q: u64, r: i64, s: u64) -> Result<TrigValue> {
    if s == 0 {
        return Err(Error::out_of_range("s", 0, "s ≥ 1"));
    }
    let bits = word_bits(q as usize + ceil_log2(s) + 64);
    let table = SineTable::get(s, bits);
    let two = BigFloat::from_u64(2, bits);
    let mut acc = BigFloat::from_u64(0, bits);
    let shift = q as i128 - 2 * r as i128;
    for j in 1..=s as i128 {
        let c = table.cos_units(2 * j * shift);
        let base = two.mul(table.cos_units(2 * j), bits, RM);
        let term = c.mul(&base.powi(q as usize, bits, RM), bits, RM);
        acc = acc.add(&term, bits, RM);
    }
    let total = acc.div(&BigFloat::from_u64(s, bits), bits, RM);
    let rounded = round_checked(&total, bits)?;
    Ok(TrigValue { value: rounded.value, residual: rounded.residual, bits })
}

fn ceil_log2(n: u64) -> usize {
    (64 - n.saturating_sub(1).leading_zeros()) as usize
}

/// Working precision for the trigonometric dimension formula:
/// `4m + ⌈log₂ P⌉ + 64` bits, rounded up to whole words.
pub fn trig_precision_bits(m: u64, period: u64) -> usize {
    word_bits(4 * m as usize + ceil_log2(period) + 64)
}

/// `(2/P) Σ_{i=1}^{P-1} (Σ_{a∈A} sin(iπ(R+2a)/P)) sin(iπ/P) (2cos(iπ/(2P)))^{2m}`,
/// rounded to the nearest integer.
pub fn dim_by_trig(r: u64, m: u64, p: Prime) -> Result<TrigValue> {
    check_rank(r, m)?;
    if r == 0 {
        return Ok(TrigValue { value: BigInt::one(), residual: 0.0, bits: 0 });
    }
    let data = RankData::new(r, m, p)?;
    let a = a_set_of(&data.big_r, data.p);
    let period = a.period;
    let bits = trig_precision_bits(m, period);
    let table = SineTable::get(period, bits);
    debug_assert_eq!(table.bits(), bits);
    let two = BigFloat::from_u64(2, bits);
    let big_r = data.big_r.value() as i128;
    let mut acc = BigFloat::from_u64(0, bits);
    for i in 1..period as i128 {
        let mut inner = BigFloat::from_u64(0, bits);
        for &x in &a.elements {
            inner = inner.add(table.sin_units(2 * i * (big_r + 2 * x as i128)), bits, RM);
        }
        let cos_pow = two.mul(table.cos_units(i), bits, RM).powi(2 * m as usize, bits, RM);
        let term = inner.mul(table.sin_units(2 * i), bits, RM).mul(&cos_pow, bits, RM);
        acc = acc.add(&term, bits, RM);
    }
    let total = acc.mul(&two, bits, RM).div(&BigFloat::from_u64(period, bits), bits, RM);
    let rounded = round_checked(&total, bits)?;
    Ok(TrigValue { value: rounded.value, residual: rounded.residual, bits })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn rank_ten_table() {
        let expected = [20u64, 188, 1120, 4466, 14344, 29448, 62016, 53296, 76096, 1024];
        for (r, e) in (1..=10).zip(expected) {
            let rep = dim_simple(r, 10, pr(2), DimMethod::All).unwrap();
            assert!(rep.agree, "r={r}: {rep:?}");
            assert_eq!(rep.value(), &BigInt::from(e), "r={r}");
        }
    }

    #[test]
    fn top_fundamental_closed_forms() {
        for m in 1..=25u32 {
            let d2 = dim_simple(m as u64, m as u64, pr(2), DimMethod::All).unwrap();
            assert!(d2.agree);
            assert_eq!(d2.value(), &(BigInt::one() << m));
            let d3 = dim_simple(m as u64, m as u64, pr(3), DimMethod::All).unwrap();
            assert!(d3.agree);
            assert_eq!(d3.value(), &((BigInt::from(3).pow(m) + 1) / 2));
        }
        assert_eq!(dim_by_theorem(4, 4, pr(3)).unwrap(), BigInt::from(41));
    }

    #[test]
    fn methods_agree_small() {
        for p in [2, 3, 5, 7] {
            for m in 0..=14 {
                for r in 0..=m {
                    let rep = dim_simple(r, m, pr(p), DimMethod::All).unwrap();
                    assert!(rep.agree, "p={p} m={m} r={r}: {rep:?}");
                    assert!(rep.trig.as_ref().unwrap().residual < 1e-10);
                }
            }
        }
    }

    #[test]
    fn periodic_sums() {
        assert_eq!(periodic_binomial_sum(4, 0, 2).unwrap(), BigInt::from(8));
        assert_eq!(periodic_binomial_sum(0, 0, 3).unwrap(), BigInt::from(1));
        for q in 0..20u32 {
            assert_eq!(periodic_binomial_sum(q as u64, 5, 1).unwrap(), BigInt::one() << q);
        }
        assert!(periodic_binomial_sum(3, 0, 0).is_err());
        for q in 0..30u64 {
            for s in 1..9u64 {
                for r in -10..10i64 {
                    let exact = periodic_binomial_sum(q, r, s).unwrap();
                    let t = periodic_binomial_sum_trig(q, r, s).unwrap();
                    assert_eq!(t.value, exact, "q={q} r={r} s={s}");
                }
            }
        }
    }

    #[test]
    fn r_zero_is_trivial() {
        let rep = dim_simple(0, 6, pr(5), DimMethod::All).unwrap();
        assert!(rep.agree);
        assert_eq!(rep.value(), &BigInt::one());
    }

    #[test]
    fn method_names_round_trip() {
        for m in [DimMethod::Theorem, DimMethod::Series, DimMethod::Binomial, DimMethod::Trig, DimMethod::All] {
            assert_eq!(m.name().parse::<DimMethod>().unwrap(), m);
        }
        assert!("fourier".parse::<DimMethod>().is_err());
    }
}
