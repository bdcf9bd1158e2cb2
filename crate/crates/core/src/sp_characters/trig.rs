//! High-precision evaluation of the trigonometric sums.
//!
//! All angles used here are integer multiples of `π / (2P)` for a period `P`,
//! so one table of `sin(uπ/(2P))`, `0 ≤ u < 4P`, serves every sine and cosine.
//! Tables are cached per thread by `(P, bits)`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, Sign as BigSign};
use num_traits::Zero;

use crate::error::{Error, Result};

pub(crate) const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constants cache"));
    static TABLES: RefCell<HashMap<(u64, usize), Rc<SineTable>>> = RefCell::new(HashMap::new());
}

/// Rounds a bit budget up to whole 64-bit words.
pub(crate) fn word_bits(bits: usize) -> usize {
    bits.div_ceil(64).max(1) * 64
}

pub(crate) fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

pub(crate) fn pi(bits: usize) -> BigFloat {
    with_consts(|cc| cc.pi(bits, RM))
}

/// `sin(uπ/(2P))` for `0 ≤ u < 4P`.
pub(crate) struct SineTable {
    period: u64,
    bits: usize,
    values: Vec<BigFloat>,
}

impl SineTable {
    fn build(period: u64, bits: usize) -> Self {
        // a few extra bits so table entries carry full precision after reduction
        let work = bits + 64;
        let step = pi(work).div(&BigFloat::from_u64(2 * period, work), work, RM);
        let quarter = period as usize;
        let mut first = Vec::with_capacity(quarter + 1);
        for u in 0..=quarter {
            let angle = step.mul(&BigFloat::from_u64(u as u64, work), work, RM);
            let mut s = with_consts(|cc| angle.sin(work, RM, cc));
            s.set_precision(bits, RM).expect("precision");
            first.push(s);
        }
        // sin over [0, π/2] by direct evaluation, the rest by symmetry
        let mut values = Vec::with_capacity(4 * quarter);
        for u in 0..4 * quarter {
            let (idx, neg) = match u / quarter {
                0 => (u, false),
                1 => (2 * quarter - u, false),
                2 => (u - 2 * quarter, true),
                _ => (4 * quarter - u, true),
            };
            let v = first[idx].clone();
            values.push(if neg { v.neg() } else { v });
        }
        SineTable { period, bits, values }
    }

    /// Cached table for `(period, bits)`.
    pub(crate) fn get(period: u64, bits: usize) -> Rc<SineTable> {
        TABLES.with(|t| {
            t.borrow_mut()
                .entry((period, bits))
                .or_insert_with(|| Rc::new(SineTable::build(period, bits)))
                .clone()
        })
    }

    pub(crate) fn bits(&self) -> usize {
        self.bits
    }

    /// `sin(uπ/(2P))` for any integer `u`.
    pub(crate) fn sin_units(&self, u: i128) -> &BigFloat {
        let m = 4 * self.period as i128;
        &self.values[u.rem_euclid(m) as usize]
    }

    /// `cos(uπ/(2P))`.
    pub(crate) fn cos_units(&self, u: i128) -> &BigFloat {
        self.sin_units(u + self.period as i128)
    }
}

/// An integer recovered from a high-precision real.
#[derive(Debug, Clone)]
pub struct Rounded {
    pub value: BigInt,
    /// `|x - value|`
    pub residual: f64,
}

/// Rounds `x` to the nearest integer, failing if the residual is at least 1/4.
pub(crate) fn round_checked(x: &BigFloat, bits: usize) -> Result<Rounded> {
    if x.is_nan() || x.is_inf() {
        return Err(Error::Inconsistent(format!("non-finite trigonometric sum: {x}")));
    }
    let nearest = x.round(0, RM);
    let diff = x.sub(&nearest, bits, RM).abs();
    let quarter = BigFloat::from_f64(0.25, bits);
    let residual = to_f64(&diff);
    if diff.cmp(&quarter).is_none_or(|c| c >= 0) {
        return Err(Error::PrecisionFailure {
            residual: format!("{residual:e}"),
            limit: "0.25",
            bits,
        });
    }
    Ok(Rounded { value: to_bigint(&nearest), residual })
}

/// Exact conversion of an integer-valued float.
pub(crate) fn to_bigint(x: &BigFloat) -> BigInt {
    let Some((words, _, sign, exponent, _)) = x.as_raw_parts() else {
        panic!("not a finite number");
    };
    if x.is_zero() {
        return BigInt::zero();
    }
    let mut acc = BigInt::zero();
    for w in words.iter().rev() {
        acc = (acc << 64) + BigInt::from(*w);
    }
    let shift = exponent as i64 - 64 * words.len() as i64;
    let mag = if shift >= 0 { acc << shift as usize } else { acc >> (-shift) as usize };
    if sign == Sign::Neg {
        -mag
    } else {
        mag
    }
}

pub(crate) fn from_bigint(v: &BigInt, bits: usize) -> BigFloat {
    let (sign, digits) = v.to_u64_digits();
    if sign == BigSign::NoSign {
        return BigFloat::from_u64(0, bits);
    }
    let mut acc = BigFloat::from_u64(0, bits);
    let base = BigFloat::from_u64(2, bits).powi(64, bits, RM);
    for d in digits.iter().rev() {
        acc = acc.mul(&base, bits, RM).add(&BigFloat::from_u64(*d, bits), bits, RM);
    }
    if sign == BigSign::Minus {
        acc.neg()
    } else {
        acc
    }
}

/// Nearest `f64`, via the decimal rendering.
pub(crate) fn to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    x.to_string().parse().unwrap_or(f64::NAN)
}

/// Decimal rendering with `digits` significant digits, rounded to nearest.
pub(crate) fn to_decimal(x: &BigFloat, digits: usize) -> String {
    let digits = digits.max(1);
    if x.is_zero() {
        return "0".into();
    }
    let bits = word_bits(x.mantissa_max_bit_len().unwrap_or(64) + 64);
    let ten = BigFloat::from_u64(10, bits);
    let s = x.to_string();
    // the rendered exponent is right or off by one; the loop settles it
    let mut exp: i64 = s.split_once('e').and_then(|(_, e)| e.parse().ok()).unwrap_or(0);
    let mag = x.abs();
    let text = loop {
        let shift = digits as i64 - 1 - exp;
        let power = ten.powi(shift.unsigned_abs() as usize, bits, RM);
        let scaled = if shift >= 0 { mag.mul(&power, bits, RM) } else { mag.div(&power, bits, RM) };
        let t = to_bigint(&scaled.round(0, RM)).to_string();
        match t.len().cmp(&digits) {
            std::cmp::Ordering::Equal => break t,
            std::cmp::Ordering::Greater if t.len() == digits + 1 && t.ends_with('0') => {
                exp += 1;
                break t[..digits].to_string();
            }
            std::cmp::Ordering::Greater => exp += 1,
            std::cmp::Ordering::Less => exp -= 1,
        }
    };
    let sign = if x.is_negative() { "-" } else { "" };
    let exp_sign = if exp < 0 { "-" } else { "+" };
    let (lead, rest) = text.split_at(1);
    let point = if rest.is_empty() { "" } else { "." };
    format!("{sign}{lead}{point}{rest}e{exp_sign}{}", exp.unsigned_abs())
}
