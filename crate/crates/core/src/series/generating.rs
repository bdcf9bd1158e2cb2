//! The SL(2) tilting multiplicity series `D_d` and the dimension series `χ_d`.
//!
//! With `d + 1 = Σ_{i=f}^{k} d_i p^i`, put `a_i = (p - d_i) p^i - 1` and
//! `b_i = p^{i+1} - 1`. Clearing the `1/(2z)` arguments of the Chebyshev
//! factors gives
//!
//! ```text
//! D_d(z) = z^(-1)     · Π z^(b_i - a_i) Q_{a_i}(z) / Q_{b_i}(z)
//! χ_d(z) = z^(-(d+1)) · Π z^(b_i - a_i) R_{a_i}(z) / R_{b_i}(z)
//! ```
//!
//! and `Σ (b_i - a_i) = d + 1`, so the net power of `z` is `d` and `0`.
//! Every `Q` and `R` has constant term 1, so the quotient is a power series.


use super::chebyshev::{q_poly_truncated, r_poly_truncated};
use super::TruncatedSeries;
use crate::error::{Error, Result};
use crate::padic::{expand, Prime};
use crate::poly::Poly;

#[derive(Clone, Copy)]
enum Variant {
    Tilting,
    Dimension,
}

fn chebyshev_quotient(d: u64, p: Prime, order: usize, variant: Variant) -> Result<TruncatedSeries> {
    let digits = expand(d + 1, p);
    let pv = p.get();
    let mut z_power: i64 = match variant {
        Variant::Tilting => -1,
        Variant::Dimension => -((d + 1) as i64),
    };
    let mut num = TruncatedSeries::one(order);
    let mut den = TruncatedSeries::one(order);
    for (i, di) in digits.nonzero_digits() {
        let pi = pv.pow(i as u32);
        let a = ((pv - di) * pi - 1) as usize;
        let b = (pv * pi - 1) as usize;
        z_power += (b - a) as i64;
        let (qa, qb): (Poly, Poly) = match variant {
            Variant::Tilting => (q_poly_truncated(a, order), q_poly_truncated(b, order)),
            Variant::Dimension => (r_poly_truncated(a, order), r_poly_truncated(b, order)),
        };
        num = &num * &TruncatedSeries::from_poly(&qa, order);
        den = &den * &TruncatedSeries::from_poly(&qb, order);
    }
    if z_power < 0 {
        return Err(Error::NegativeValuation(z_power));
    }
    let quotient = num.checked_div(&den)?.shift_up(z_power as usize);
    quotient.to_integers()?;
    Ok(quotient)
}

/// `D_d(z) = Σ_n [T(ρ)^⊗n : T(dρ)] z^n` to order `order`.
pub fn d_series(d: u64, p: Prime, order: usize) -> Result<TruncatedSeries> {
    chebyshev_quotient(d, p, order, Variant::Tilting)
}

/// `χ_d(z) = Σ_n dim L_{d+n}(ω_n) z^n` to order `order`.
pub fn chi_series(d: u64, p: Prime, order: usize) -> Result<TruncatedSeries> {
    chebyshev_quotient(d, p, order, Variant::Dimension)
}

/// Integer coefficients of a series already checked for integrality.
#[cfg(test)]
pub(crate) fn integer_coeffs(s: &TruncatedSeries) -> Vec<num_bigint::BigInt> {
    s.to_integers().expect("integrality checked at construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    fn as_i64(s: &TruncatedSeries) -> Vec<i64> {
        integer_coeffs(s).iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    /// Independent SL(2) oracle: decompose `T(ρ)^⊗n` into tilting modules by
    /// peeling off highest weights, using tilting characters as formal
    /// weight multisets. Below `2p - 1` the tilting module `T(λ)` has
    /// character `χ(λ)` when `λ < p` and `χ(λ) + χ(2p - 2 - λ)` when
    /// `p ≤ λ ≤ 2p - 2`.
    fn tilting_oracle(p: u64, n_max: usize) -> Vec<Vec<i64>> {
        let tilting_char = |lambda: i64| -> Vec<i64> {
            // index w + lambda_max; weights run lambda, lambda-2, .., -lambda
            let mut weights = vec![lambda];
            if lambda >= p as i64 && lambda <= 2 * p as i64 - 2 {
                weights.push(2 * p as i64 - 2 - lambda);
            }
            weights
        };
        let size = n_max + 1;
        let mut out = Vec::new();
        // tensor power character as weight multiplicities, indexed by weight + n
        let mut power: Vec<i64> = vec![1]; // n = 0: weight 0
        for n in 0..=n_max {
            assert!(n < 2 * p as usize - 1, "oracle valid only below 2p - 1");
            let mut remaining = power.clone();
            let mut mult = vec![0i64; size];
            for top in (0..=n as i64).rev() {
                let idx = (top + n as i64) as usize;
                let c = remaining[idx];
                if c == 0 {
                    continue;
                }
                mult[top as usize] = c;
                for w in tilting_char(top) {
                    let mut x = -w;
                    while x <= w {
                        remaining[(x + n as i64) as usize] -= c;
                        x += 2;
                    }
                }
            }
            assert!(remaining.iter().all(|&c| c == 0));
            out.push(mult);
            // multiply by the natural module: weights ±1
            let mut next = vec![0i64; power.len() + 2];
            for (i, &c) in power.iter().enumerate() {
                next[i] += c;
                next[i + 2] += c;
            }
            power = next;
        }
        out
    }

    #[test]
    fn d_series_matches_tilting_oracle() {
        for p in [3u64, 5, 7] {
            let n_max = 2 * p as usize - 2;
            let oracle = tilting_oracle(p, n_max);
            for d in 0..=n_max as u64 {
                let series = as_i64(&d_series(d, pr(p), n_max).unwrap());
                for n in 0..=n_max {
                    assert_eq!(series[n], oracle[n][d as usize], "p={p} d={d} n={n}");
                }
            }
        }
    }

    #[test]
    fn d_series_p2_low_terms() {
        // p = 2: T(ρ)^⊗2 = T(2ρ), so [T(ρ)^⊗2 : T(0)] = 0.
        let oracle = tilting_oracle(2, 2);
        let d0 = as_i64(&d_series(0, pr(2), 2).unwrap());
        assert_eq!(d0, vec![oracle[0][0], oracle[1][0], oracle[2][0]]);
        assert_eq!(d0, vec![1, 0, 0]);
    }

    #[test]
    fn d_series_leading_term_and_parity() {
        for p in [2, 3, 5] {
            for d in 0..12u64 {
                let s = as_i64(&d_series(d, pr(p), 30).unwrap());
                for (n, c) in s.iter().enumerate() {
                    if (n as u64) < d || (n as u64 + d) % 2 == 1 {
                        assert_eq!(*c, 0, "p={p} d={d} n={n}");
                    }
                    assert!(*c >= 0);
                }
                assert_eq!(s[d as usize], 1);
            }
        }
    }

    #[test]
    fn chi_closed_forms() {
        let chi2 = as_i64(&chi_series(0, pr(2), 20).unwrap());
        assert_eq!(chi2, (0..=20).map(|n| 1i64 << n).collect::<Vec<_>>());
        let chi3 = as_i64(&chi_series(0, pr(3), 20).unwrap());
        assert_eq!(chi3, (0..=20u32).map(|n| (3i64.pow(n) + 1) / 2).collect::<Vec<_>>());
        for p in [2, 3, 5, 7] {
            for d in 0..10 {
                assert!(chi_series(d, pr(p), 5).unwrap().coeffs()[0].is_one());
            }
        }
    }

    #[test]
    fn chi_is_binomial_product_of_d() {
        let two = BigRational::from_integer(2.into());
        for p in [2, 3, 5] {
            for d in 0..=12u64 {
                let order = 16;
                let chi = chi_series(d, pr(p), order).unwrap();
                let dd = d_series(d, pr(p), order + d as usize).unwrap();
                let conv = TruncatedSeries::geometric(&two, order + d as usize).binomial_product(&dd);
                assert_eq!(conv.shift_down(d as usize).unwrap(), chi, "p={p} d={d}");
                assert!(chi.coeffs().iter().all(|c| !c.is_zero()));
            }
        }
    }
}
