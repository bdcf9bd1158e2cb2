//! Truncated formal power series with exact rational coefficients.
//!
//! A [`TruncatedSeries`] of order `K` holds `c_0..=c_K`; everything above
//! `z^K` is unknown. Binary operations truncate to the smaller order.

mod chebyshev;
mod generating;

pub use chebyshev::{q_poly, r_poly, ChebyshevKind, ChebyshevPoly};
pub use generating::{chi_series, d_series};

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::binomial::binomial_row;
use crate::error::{Error, Result};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Series with the given coefficients; order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series keeps at least c_0");
        TruncatedSeries { coeffs }
    }

    pub fn from_integers<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        TruncatedSeries::new(coeffs.into_iter().map(|c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// `1 / (1 - a z)`, i.e. coefficients `a^n`.
    pub fn geometric(a: &BigRational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = BigRational::one();
        for _ in 0..=order {
            coeffs.push(term.clone());
            term *= a;
        }
        TruncatedSeries { coeffs }
    }

    /// The polynomial truncated to `order`.
    pub fn from_poly(poly: &Poly, order: usize) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(|i| BigRational::from_integer(poly.coeff(i))).collect(),
        }
    }

    /// Truncation index `K`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `z^n`, `None` above the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&BigRational> {
        self.coeffs.get(n)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise the truncation order");
        TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplies by `z^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![BigRational::zero(); (order + 1).min(k)];
        coeffs.extend(self.coeffs.iter().take((order + 1).saturating_sub(k)).cloned());
        TruncatedSeries { coeffs }
    }

    /// Divides by `z^k`; the order drops by `k`. Fails if a dropped coefficient is nonzero.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::Inconsistent(format!(
                "cannot divide a series of order {} by z^{k}",
                self.order()
            )));
        }
        if let Some(i) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(Error::NegativeValuation(i as i64 - k as i64));
        }
        Ok(TruncatedSeries { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Power-series quotient `self / divisor` by iterative long division.
    pub fn checked_div(&self, divisor: &TruncatedSeries) -> Result<Self> {
        let c0 = &divisor.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let order = self.order().min(divisor.order());
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                let d = &divisor.coeffs[k];
                if !d.is_zero() {
                    acc -= d * &out[n - k];
                }
            }
            out.push(acc / c0);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Coefficients as integers, failing on the first non-integer.
    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegerCoefficient { index, value: c.to_string() })
                }
            })
            .collect()
    }

    /// The binomial convolution `A * B`: coefficient `n` is
    /// `sum_k binom(n, k) a_k b_{n-k}`.
    pub fn binomial_product(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let row = binomial_row(n as u64);
            let mut acc = BigRational::zero();
            for (k, binom) in row.iter().enumerate() {
                let (a, b) = (&self.coeffs[k], &other.coeffs[n - k]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc += a * b * BigRational::from_integer(binom.clone());
            }
            coeffs.push(acc);
        }
        TruncatedSeries { coeffs }
    }

    /// `(1/(1 - a z)) · S(z/(1 - a z))` to the given order, by composing
    /// geometric expansions.
    pub fn substitute_scaled(&self, a: &BigRational, order: usize) -> TruncatedSeries {
        let order = order.min(self.order());
        let g = TruncatedSeries::geometric(a, order);
        let w = g.shift_up(1);
        let mut term = g;
        let mut acc = term.scale(&self.coeffs[0]);
        for j in 1..=order {
            term = &term * &w;
            if !self.coeffs[j].is_zero() {
                acc = &acc + &term.scale(&self.coeffs[j]);
            }
        }
        acc
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}
