//! Invariants checked against oracles written here from the definitions.
//!
//! Finite statements over small ranges are checked exhaustively; the rest
//! are sampled with proptest.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use spchar::binomial::binomial_row;
use spchar::decomp_matrices::{build_direct, MatrixKind};
use spchar::padic::{expand, lucas_divides, prec_rel, subset_rel};
use spchar::poly::Poly;
use spchar::series::{chi_series, ChebyshevPoly};
use spchar::sl2::{sl2_matches_b, sl2_weyl_factors, winter_factors};
use spchar::sp_characters::{a_set, decompose_simple, decompose_weyl, dim_by_theorem, weyl_dim, Basis, CharacterVector};
use spchar::symmetric_group::{even_minors, james_matrix};
use spchar::weyl_simplicity::sum_step_property;
use spchar::{Precedence, Prime, TruncatedSeries};

fn pr(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

fn digits(mut n: u64, p: u64) -> Vec<u64> {
    let mut d = Vec::new();
    while n > 0 {
        d.push(n % p);
        n /= p;
    }
    d
}

fn digit(n: u64, p: u64, i: usize) -> u64 {
    digits(n, p).get(i).copied().unwrap_or(0)
}

fn subset_oracle(a: u64, b: u64, p: u64) -> bool {
    digits(a, p).iter().enumerate().all(|(i, &x)| x == 0 || x == digit(b, p, i))
}

/// `+1` for `a ≺₁ b`, `-1` for `a ≺₋₁ b`, `0` otherwise.
fn prec_oracle(a: u64, b: u64, p: u64) -> i8 {
    let s = digits(b, p).iter().position(|&x| x != 0).unwrap();
    let len = digits(a, p).len().max(digits(b, p).len());
    let upper_ok = (s + 1..len).all(|i| digit(a, p, i) + digit(b, p, i) < p);
    let low_zero = (0..s).all(|i| digit(a, p, i) == 0);
    if !upper_ok || !low_zero {
        return 0;
    }
    match digit(a, p, s) {
        0 => 1,
        x if x + digit(b, p, s) == p => -1,
        _ => 0,
    }
}

fn prec(a: u64, b: u64, p: u64) -> i8 {
    prec_rel(a, b, pr(p)).unwrap().sign()
}

fn sub(a: u64, b: u64, p: u64) -> bool {
    subset_rel(a, b, pr(p)).unwrap()
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7])
}

proptest! {
    #[test]
    fn expansion_is_canonical(n in 0u64..1_000_000_000, p in prime()) {
        let e = expand(n, pr(p));
        prop_assert_eq!(e.digits(), &digits(n, p)[..]);
        prop_assert!(e.digits().last().is_none_or(|&d| d != 0));
        let back = e.digits().iter().rev().fold(0u64, |acc, &d| acc * p + d);
        prop_assert_eq!(back, n);
    }

    #[test]
    fn relations_match_oracles(a in 0u64..100_000, b in 1u64..100_000, p in prime()) {
        prop_assert_eq!(sub(a, b, p), subset_oracle(a, b, p));
        let got = prec_rel(a, b, pr(p)).unwrap();
        prop_assert_eq!(got.sign(), prec_oracle(a, b, p));
    }

    #[test]
    fn complement_in_subset(b in 1u64..10_000, frac in 0.0f64..1.0, p in prime()) {
        let a = 1 + ((b - 1) as f64 * frac) as u64;
        prop_assert_eq!(sub(a, b, p), sub(b - a, b, p));
    }

    #[test]
    fn half_sum_and_half_difference(v in 1u64..=1000, frac in 0.0f64..1.0, p in prime()) {
        let mut u = 1 + ((v - 1) as f64 * frac) as u64;
        if (v - u) % 2 == 1 {
            u -= 1;
        }
        prop_assume!(u >= 1);
        prop_assert_eq!(sub((v - u) / 2, v, p), sub((v + u) / 2, v, p));
    }

    #[test]
    fn binomial_product_is_substitution(
        coeffs in prop::collection::vec(-20i64..20, 1..12),
        num in -5i64..5,
        den in 1i64..4,
    ) {
        let s = TruncatedSeries::from_integers(coeffs.iter().copied());
        let a = BigRational::new(num.into(), den.into());
        let order = s.order();
        let lhs = TruncatedSeries::geometric(&a, order).binomial_product(&s);
        prop_assert_eq!(lhs, s.substitute_scaled(&a, order));
    }

    #[test]
    fn series_arithmetic_truncates_to_shorter(
        x in prop::collection::vec(-9i64..9, 1..10),
        y in prop::collection::vec(-9i64..9, 1..10),
    ) {
        let (a, b) = (TruncatedSeries::from_integers(x.clone()), TruncatedSeries::from_integers(y.clone()));
        let order = a.order().min(b.order());
        prop_assert_eq!((&a + &b).order(), order);
        prop_assert_eq!((&a * &b).order(), order);
        // Cauchy product against the naive double sum
        let prod = &a * &b;
        for n in 0..=order {
            let want: i64 = (0..=n).map(|k| x[k] * y[n - k]).sum();
            prop_assert_eq!(prod.coeff(n).unwrap(), &BigRational::from_integer(want.into()));
        }
    }

    #[test]
    fn a_set_reflection_is_an_involution(big_r in 1u64..5000, p in prime()) {
        let a = a_set(big_r, pr(p)).unwrap();
        for &x in &a.elements {
            prop_assert!(x <= a.reflect);
            prop_assert!(a.elements.binary_search(&(a.reflect - x)).is_ok());
        }
        // brute force: multiples of p^{f+1} below P whose digits avoid carries with R
        let f = digits(big_r, p).iter().position(|&d| d != 0).unwrap();
        let k = digits(big_r, p).len() - 1;
        let step = p.pow(f as u32 + 1);
        let brute: Vec<u64> = if f == k {
            vec![0]
        } else {
            (0..p.pow(k as u32 + 1))
                .step_by(step as usize)
                .filter(|&x| (f + 1..=k).all(|i| digit(x, p, i) + digit(big_r, p, i) < p))
                .collect()
        };
        prop_assert_eq!(&a.elements, &brute);
    }

    #[test]
    fn characters_round_trip(m in 1u64..60, frac in 0.0f64..1.0, p in prime()) {
        let r = (m as f64 * frac) as u64;
        let simple = decompose_simple(r, m, pr(p)).unwrap();
        let mut back = CharacterVector::new(m, Basis::Simple);
        for (j, c) in simple.iter() {
            for (i, e) in decompose_weyl(j, m, pr(p)).unwrap().iter() {
                back.add(i, c * e);
            }
        }
        prop_assert_eq!(back.iter().collect::<Vec<_>>(), vec![(r, 1)]);
    }

    #[test]
    fn simple_dimension_is_bounded_by_weyl(m in 1u64..80, frac in 0.0f64..1.0, p in prime()) {
        let r = (m as f64 * frac) as u64;
        let d = dim_by_theorem(r, m, pr(p)).unwrap();
        prop_assert!(d > BigInt::zero());
        prop_assert!(d <= weyl_dim(r, m).unwrap());
    }

    #[test]
    fn sl2_factor_sets_agree(r in 0u64..2000, p in prime()) {
        prop_assert_eq!(sl2_weyl_factors(r, pr(p)), winter_factors(r, pr(p)));
    }

    #[test]
    fn simplicity_steps(n in 2u64..3000, p in prime()) {
        prop_assert!(sum_step_property(n, pr(p)).unwrap());
    }
}

#[test]
fn subset_survives_adding_high_digits() {
    for p in [2u64, 3, 5] {
        let top = p.pow(3);
        for b in 0..top {
            for a in 0..top {
                if !subset_oracle(a, b, p) || b == 0 {
                    continue;
                }
                for d in 1..=3 {
                    assert!(sub(a, b + d * top, p), "p={p} a={a} b={b} d={d}");
                }
            }
        }
    }
}

#[test]
fn subset_of_v_by_signed_digits() {
    for p in [2u64, 3, 5] {
        for v in 1..p.pow(4) {
            let ds = digits(v, p);
            let k = ds.len() - 1;
            let mut reachable = std::collections::BTreeSet::new();
            for signs in 0u32..(1 << k) {
                let mut u = (ds[k] * p.pow(k as u32)) as i64;
                for (i, &d) in ds[..k].iter().enumerate() {
                    let term = (d * p.pow(i as u32)) as i64;
                    u += if signs >> i & 1 == 1 { -term } else { term };
                }
                reachable.insert(u);
            }
            for u in (v % 2..=v).step_by(2) {
                assert_eq!(sub((v - u) / 2, v, p), reachable.contains(&(u as i64)), "p={p} v={v} u={u}");
            }
        }
    }
}

#[test]
fn precedence_translation() {
    let (p, top) = (3u64, 9u64);
    for a in 0..top {
        for b in 1..top {
            let k = prec(a, b, p);
            if k == 0 {
                continue;
            }
            for c in 0..p {
                for d in 0..p - c {
                    assert_eq!(prec(a + c * top, b + d * top, p), k, "a={a} b={b} c={c} d={d}");
                }
            }
        }
    }
}

#[test]
fn precedence_forces_equality_at_digit_multiples() {
    let (p, pn) = (3u64, 9u64);
    for v in 1..=p * pn {
        for u in (1..=v).filter(|u| (v - u) % 2 == 0) {
            if prec((v - u) / 2, u, p) == 0 {
                continue;
            }
            let multiple = |x: u64| x % pn == 0 && (1..=p).contains(&(x / pn));
            if multiple(u) || multiple(v) {
                assert_eq!(u, v, "u={u} v={v}");
            }
        }
    }
}

#[test]
fn precedence_symmetry() {
    let (p, pn) = (3u64, 9u64);
    let mut used = 0;
    for u in 1..pn {
        for v in (u..2 * pn).filter(|v| (v - u) % 2 == 0) {
            let k = prec((v - u) / 2, u, p);
            if k == 0 {
                continue;
            }
            for c in 1..=p {
                for d in 0..=p - c {
                    let z = (2 * c * pn - v - u) / 2;
                    assert_eq!(prec(z, u + d * pn, p), -k, "u={u} v={v} c={c} d={d}");
                    used += 1;
                }
            }
        }
    }
    assert!(used > 0);
}

#[test]
fn lucas_matches_binomials() {
    for n in 0..=500u64 {
        let row = binomial_row(n);
        for p in [2u64, 3, 5, 7] {
            let pb = BigInt::from(p);
            for (k, c) in row.iter().enumerate() {
                assert_eq!(lucas_divides(n, k as i64, pr(p)), (c % &pb).is_zero(), "n={n} k={k} p={p}");
            }
        }
    }
}

#[test]
fn precedence_is_exclusive_and_zero_is_plus() {
    for p in [2u64, 3, 5] {
        for b in 1..200 {
            assert_eq!(prec_rel(0, b, pr(p)).unwrap(), Precedence::Plus);
        }
    }
}

#[test]
fn second_kind_divisibility() {
    for r in 1..=8usize {
        for q in 1..=6usize {
            let s = r * q;
            let u_r = ChebyshevPoly::second_kind(r - 1).poly;
            let u_s = ChebyshevPoly::second_kind(s - 1).poly;
            let quotient = u_s.exact_div(&u_r).unwrap_or_else(|| panic!("U_{} ∤ U_{}", r - 1, s - 1));
            let t_r = ChebyshevPoly::first_kind(r).poly;
            assert_eq!(quotient, ChebyshevPoly::second_kind(q - 1).poly.compose(&t_r), "r={r} q={q}");
        }
    }
    // U_{k+1} = 2x U_k - U_{k-1}
    let two_x = Poly::from_i64s(&[0, 2]);
    for k in 1..20 {
        let lhs = ChebyshevPoly::second_kind(k + 1).poly;
        let rhs = &(&two_x * &ChebyshevPoly::second_kind(k).poly) - &ChebyshevPoly::second_kind(k - 1).poly;
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn matrix_shapes() {
    for p in [2u64, 3, 5] {
        for n in 1..=60 {
            let a = build_direct(n, pr(p), MatrixKind::A).unwrap();
            let b = build_direct(n, pr(p), MatrixKind::B).unwrap();
            assert!(a.matrix.is_lower_unitriangular() && b.matrix.is_lower_unitriangular());
            for k in 1..=n {
                for l in 1..=n {
                    if (k + l) % 2 == 1 {
                        assert_eq!((a.entry(k, l), b.entry(k, l)), (0, 0));
                    }
                    assert!((-1..=1).contains(&a.entry(k, l)));
                    assert!((0..=1).contains(&b.entry(k, l)));
                }
            }
            let at = build_direct(n, pr(p), MatrixKind::ATilde).unwrap();
            assert!(at.matrix.is_upper_unitriangular());
        }
    }
}

#[test]
fn corollaries_are_minors_of_b() {
    for p in [2u64, 3] {
        for e in 1..=4 {
            assert!(sl2_matches_b(p.pow(e) as usize - 1, pr(p)).unwrap());
        }
        for n in 0..40 {
            assert_eq!(james_matrix(n, pr(p)), even_minors(n, pr(p)).unwrap().1);
        }
    }
}

#[test]
fn chi_coefficients_are_dimensions() {
    for p in [2u64, 3, 5] {
        for d in 0..6u64 {
            let chi = chi_series(d, pr(p), 20).unwrap();
            for n in 0..=20u64 {
                let want = BigRational::from_integer(dim_by_theorem(n, d + n, pr(p)).unwrap());
                assert_eq!(chi.coeff(n as usize).unwrap(), &want, "p={p} d={d} n={n}");
            }
        }
    }
    assert!(chi_series(0, pr(2), 0).unwrap().coeff(0).unwrap().is_one());
}
