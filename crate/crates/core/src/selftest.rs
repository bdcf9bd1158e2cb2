//! Built-in cross-checks, run by `spchar selftest`.
//!
//! Every check compares two independent computations inside the library.
//! `Quick` uses small ranges; `Full` uses the ranges of the acceptance suite.

use num_bigint::BigInt;
use serde::Serialize;

use crate::decomp_matrices::{
    build_direct, build_recursive, upper_recursive_a, upper_recursive_b, verify_inverse, MatrixKind,
};
use crate::error::Result;
use crate::padic::Prime;
use crate::series::chi_series;
use crate::sl2::{lucas_weights, sl2_simple_char};
use crate::sp_characters::{dim_simple, weyl_dim, DimMethod};
use crate::symmetric_group::even_minors;
use crate::weyl_simplicity::{is_simple_weyl, premet_suprunenko_conditions, simplicity_census};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// first counterexample, if any
    pub detail: Option<String>,
}

fn primes(ps: &[u64]) -> Vec<Prime> {
    ps.iter().map(|&p| Prime::new(p).expect("prime literal")).collect()
}

/// Runs `body`, turning its first counterexample or error into a failed check.
fn check(name: &'static str, body: impl FnOnce() -> Result<Option<String>>) -> Check {
    match body() {
        Ok(None) => Check { name, passed: true, detail: None },
        Ok(Some(why)) => Check { name, passed: false, detail: Some(why) },
        Err(e) => Check { name, passed: false, detail: Some(e.to_string()) },
    }
}

pub fn run(level: Level) -> Vec<Check> {
    let full = level == Level::Full;
    vec![
        check("rank ten table at p = 2", || {
            let simple = [20u64, 188, 1120, 4466, 14344, 29448, 62016, 53296, 76096, 1024];
            let weyl = [20u64, 189, 1120, 4655, 14364, 33915, 62016, 87210, 90440, 58786];
            let p = Prime::new(2)?;
            for r in 1..=10u64 {
                let rep = dim_simple(r, 10, p, DimMethod::All)?;
                let i = r as usize - 1;
                if !rep.agree || rep.value() != &BigInt::from(simple[i]) || weyl_dim(r, 10)? != BigInt::from(weyl[i]) {
                    return Ok(Some(format!("r = {r}")));
                }
            }
            Ok(None)
        }),
        check("four dimension formulas agree", || {
            let m_max = if full { 40 } else { 12 };
            for p in primes(&[2, 3, 5, 7]) {
                for m in 0..=m_max {
                    for r in 0..=m {
                        let rep = dim_simple(r, m, p, DimMethod::All)?;
                        let residual = rep.trig.as_ref().map_or(0.0, |t| t.residual);
                        if !rep.agree || residual >= 1e-10 {
                            return Ok(Some(format!("p = {p}, m = {m}, r = {r}")));
                        }
                    }
                }
            }
            Ok(None)
        }),
        check("generating series matches dimensions", || {
            let (d_max, n_max) = if full { (8, 30) } else { (4, 12) };
            for p in primes(&[2, 3, 5, 7]) {
                for d in 0..=d_max {
                    let chi = chi_series(d, p, n_max)?;
                    for n in 0..=n_max as u64 {
                        let dim = dim_simple(n, d + n, p, DimMethod::Theorem)?;
                        if chi.coeff(n as usize).map(|c| c.to_integer()) != Some(dim.value().clone()) {
                            return Ok(Some(format!("p = {p}, d = {d}, n = {n}")));
                        }
                    }
                }
            }
            Ok(None)
        }),
        check("A(n) B(n) = Id", || {
            let n_max = if full { 300 } else { 40 };
            for p in primes(&[2, 3, 5, 7]) {
                for n in 1..=n_max {
                    let c = verify_inverse(n, p)?;
                    if !c.ok {
                        return Ok(Some(format!("p = {p}, n = {n}, at {:?}", c.first_failure)));
                    }
                }
            }
            Ok(None)
        }),
        check("recursive constructions match the definition", || {
            let cases: &[(u64, u32)] = if full { &[(2, 4), (3, 4), (5, 3)] } else { &[(2, 3), (3, 2), (5, 2)] };
            for &(pv, top) in cases {
                let p = Prime::new(pv)?;
                for e in 1..=top {
                    let n = pv.pow(e) as usize;
                    let a = build_direct(n, p, MatrixKind::A)?.matrix;
                    let b = build_direct(n, p, MatrixKind::B)?.matrix;
                    let ok = build_recursive(e, p, MatrixKind::A)?.matrix == a
                        && build_recursive(e, p, MatrixKind::B)?.matrix == b
                        && upper_recursive_b(e, p)? == b.reversed()
                        && upper_recursive_a(e, p)? == a.reversed();
                    if !ok {
                        return Ok(Some(format!("p = {pv}, size {n}")));
                    }
                }
            }
            Ok(None)
        }),
        check("SL(2) characters give the Lucas weights", || {
            let e = if full { 4 } else { 3 };
            for p in primes(&[2, 3]) {
                for r in 0..=p.pow(e) - 2 {
                    if sl2_simple_char(r, p).weight_multiplicities() != lucas_weights(r, p) {
                        return Ok(Some(format!("p = {p}, r = {r}")));
                    }
                }
            }
            Ok(None)
        }),
        check("simplicity census closed forms", || {
            let n_max = if full { 5000 } else { 500 };
            for p in primes(&[2, 3, 5, 7]) {
                for n in 2..=n_max {
                    if !simplicity_census(n, p)?.consistent() {
                        return Ok(Some(format!("p = {p}, N = {n}")));
                    }
                }
            }
            Ok(None)
        }),
        check("simplicity criteria agree", || {
            let m_max = if full { 60 } else { 20 };
            for p in primes(&[2, 3, 5, 7]) {
                for m in 1..=m_max {
                    for r in 1..=m {
                        let w = is_simple_weyl(r, m, p)?;
                        if premet_suprunenko_conditions(r, m, p)? != (w.simple, w.simple) {
                            return Ok(Some(format!("p = {p}, m = {m}, r = {r}")));
                        }
                    }
                }
            }
            Ok(None)
        }),
        check("symmetric group minors are inverse", || {
            let n_max = if full { 60 } else { 20 };
            for p in primes(&[2, 3, 5]) {
                for n in 0..=n_max {
                    let (a, b) = even_minors(n, p)?;
                    if !(&a * &b).is_identity() {
                        return Ok(Some(format!("p = {p}, n = {n}")));
                    }
                }
            }
            Ok(None)
        }),
    ]
}
