//! Chebyshev polynomials and their reversed forms.
//!
//! `q_poly(k)` is `z^k U_k(1/(2z))` and `r_poly(k)` is `z^k U_k(1/(2z) - 1)`.
//! Both are honest polynomials with constant term 1, which is what lets the
//! tilting and dimension generating functions be expanded by exact power
//! series division.

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChebyshevKind {
    /// `T_k(cos θ) = cos(kθ)`
    First,
    /// `U_k(cos θ) sin θ = sin((k+1)θ)`
    Second,
}

/// A Chebyshev polynomial in `x` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChebyshevPoly {
    pub kind: ChebyshevKind,
    pub index: usize,
    pub poly: Poly,
}

impl ChebyshevPoly {
    pub fn first_kind(index: usize) -> Self {
        ChebyshevPoly {
            kind: ChebyshevKind::First,
            index,
            poly: three_term(index, Poly::one(), Poly::from_i64s(&[0, 1])),
        }
    }

    pub fn second_kind(index: usize) -> Self {
        ChebyshevPoly {
            kind: ChebyshevKind::Second,
            index,
            poly: three_term(index, Poly::one(), Poly::from_i64s(&[0, 2])),
        }
    }
}

/// `P_{k+1} = 2x P_k - P_{k-1}` from the given `P_0`, `P_1`.
fn three_term(index: usize, p0: Poly, p1: Poly) -> Poly {
    if index == 0 {
        return p0;
    }
    let two_x = Poly::from_i64s(&[0, 2]);
    let (mut prev, mut cur) = (p0, p1);
    for _ in 1..index {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `Q_k(z) = z^k U_k(1/(2z))`: `Q_0 = Q_1 = 1`, `Q_{k+1} = Q_k - z² Q_{k-1}`.
pub fn q_poly(k: usize) -> Poly {
    reversed(k, None, Poly::one(), Poly::one(), &Poly::one())
}

/// `R_k(z) = z^k U_k(1/(2z) - 1)`: `R_0 = 1`, `R_1 = 1 - 2z`,
/// `R_{k+1} = (1 - 2z) R_k - z² R_{k-1}`.
pub fn r_poly(k: usize) -> Poly {
    let step = Poly::from_i64s(&[1, -2]);
    reversed(k, None, Poly::one(), step.clone(), &step)
}

/// `Q_k` truncated to degree `max_deg`.
pub(crate) fn q_poly_truncated(k: usize, max_deg: usize) -> Poly {
    reversed(k, Some(max_deg), Poly::one(), Poly::one(), &Poly::one())
}

/// `R_k` truncated to degree `max_deg`.
pub(crate) fn r_poly_truncated(k: usize, max_deg: usize) -> Poly {
    let step = Poly::from_i64s(&[1, -2]);
    reversed(k, Some(max_deg), Poly::one(), step.clone(), &step)
}

// Truncation commutes with the recurrence, so capping the degree at every
// step gives the truncation of the full polynomial.
fn reversed(k: usize, max_deg: Option<usize>, p0: Poly, p1: Poly, step: &Poly) -> Poly {
    let cap = |p: Poly| match max_deg {
        Some(d) => p.truncate(d),
        None => p,
    };
    if k == 0 {
        return cap(p0);
    }
    let z2 = Poly::monomial(BigInt::one(), 2);
    let (mut prev, mut cur) = (cap(p0), cap(p1));
    for _ in 1..k {
        let next = cap(&(step * &cur) - &(&z2 * &prev));
        prev = cur;
        cur = next;
    }
    cur
}
