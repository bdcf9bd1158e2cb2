//! Which Weyl modules `Δ(ω_r)` of `Sp(2m)` are simple.
//!
//! With `R = m + 1 - r`, `f` its lowest nonzero digit position and `R_f`
//! that digit, `Δ(ω_r)` is simple iff `r < 2(p - R_f)p^f`. For `N ≥ 2` the set
//! `I_p(N)` collects the `0 ≤ r < N` passing the same test with `R = N - r`;
//! its size is `(p-1)s_h + N_h` where `N_h p^{s_h}` is the top term of `N`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::padic::{expand, floor_log, lucas_divides, valuation, Prime};

/// Outcome of the criterion for one `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub r: u64,
    pub simple: bool,
    /// lowest nonzero digit position of `R`
    pub f: usize,
    pub r_f: u64,
    /// `2(p - R_f)p^f`
    pub bound: u64,
}

fn witness(r: u64, big_r: u64, p: Prime) -> Witness {
    let e = expand(big_r, p);
    let f = e.lowest_nonzero().expect("R ≥ 1");
    let r_f = e.digit(f);
    let bound = 2 * (p.get() - r_f) * p.pow(f as u32);
    Witness { r, simple: r < bound, f, r_f, bound }
}

fn check_r(r: u64, m: u64) -> Result<()> {
    if r < 1 || r > m {
        return Err(Error::out_of_range("r", r, format!("1 ≤ r ≤ m = {m}")));
    }
    Ok(())
}

pub fn is_simple_weyl(r: u64, m: u64, p: Prime) -> Result<Witness> {
    check_r(r, m)?;
    Ok(witness(r, m + 1 - r, p))
}

/// The two published equivalent conditions, evaluated literally.
///
/// 1. `v_p((m-r+1)/j + 1) ≤ 0` for `1 ≤ j ≤ r/2`;
/// 2. `p ∤ C(m-r+1+(r-j)/2, (r-j)/2)` for `0 ≤ j < r`, `j ≡ r (mod 2)`.
pub fn premet_suprunenko_conditions(r: u64, m: u64, p: Prime) -> Result<(bool, bool)> {
    check_r(r, m)?;
    let big_r = m - r + 1;
    // (R/j + 1) = (R + j)/j
    let cond1 = (1..=r / 2).all(|j| valuation(big_r + j, p) <= valuation(j, p));
    let cond2 = (r % 2..r)
        .step_by(2)
        .all(|j| !lucas_divides(big_r + (r - j) / 2, ((r - j) / 2) as i64, p));
    Ok((cond1, cond2))
}

/// Same as condition 2, but testing divisibility on the exact binomial.
pub fn premet_suprunenko_cond2_exact(r: u64, m: u64, p: Prime) -> Result<bool> {
    check_r(r, m)?;
    let big_r = m - r + 1;
    let pv = BigInt::from(p.get());
    Ok((r % 2..r).step_by(2).all(|j| {
        let t = (r - j) / 2;
        binomial((big_r + t) as i64, t as i64) % &pv != BigInt::ZERO
    }))
}

/// Row of the classification table matched by a nonzero member of `I_p(N)`,
/// with `N = Σ_{i=1}^{h} N_i p^{s_i}`. Indices `j` are 1-based, `1 ≤ j < h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "row", rename_all = "snake_case")]
pub enum TableRow {
    /// `d p^s`, `s < s_1`, `1 ≤ d ≤ p-1`
    BelowFirst { s: u32, d: u64 },
    /// `d p^{s_1}`, `1 ≤ d ≤ N_1 - 1`
    FirstDigit { d: u64 },
    /// `Σ_{i≤j} N_i p^{s_i}`
    PartialSum { j: usize },
    /// `Σ_{i≤j} N_i p^{s_i} + d p^{s_j}`, `N_j + 1 ≤ d ≤ p-1`
    SameDigit { j: usize, d: u64 },
    /// `Σ_{i≤j} N_i p^{s_i} + d p^s`, `s_j < s < s_{j+1}`, `1 ≤ d ≤ p-1`
    Gap { j: usize, s: u32, d: u64 },
    /// `Σ_{i≤j} N_i p^{s_i} + d p^{s_{j+1}}`, `1 ≤ d ≤ N_{j+1} - 1`
    NextDigit { j: usize, d: u64 },
}

/// `N = Σ_{i=1}^{h} N_i p^{s_i}` as `(s_i, N_i)` pairs, lowest first.
fn terms(n: u64, p: Prime) -> Vec<(u32, u64)> {
    expand(n, p).nonzero_digits().map(|(i, d)| (i as u32, d)).collect()
}

/// Members of `I_p(N) \ {0}` listed row by row from the classification table.
pub fn classification_table(n: u64, p: Prime) -> Result<Vec<(u64, TableRow)>> {
    if n < 2 {
        return Err(Error::out_of_range("N", n, "N ≥ 2"));
    }
    let pv = p.get();
    let t = terms(n, p);
    let h = t.len();
    let pw = |s: u32| pv.pow(s);
    let mut out = Vec::new();
    let (s1, n1) = t[0];
    for s in 0..s1 {
        for d in 1..pv {
            out.push((d * pw(s), TableRow::BelowFirst { s, d }));
        }
    }
    for d in 1..n1 {
        out.push((d * pw(s1), TableRow::FirstDigit { d }));
    }
    let mut partial = 0u64;
    for j in 1..h {
        let (sj, nj) = t[j - 1];
        let (sj1, nj1) = t[j];
        partial += nj * pw(sj);
        out.push((partial, TableRow::PartialSum { j }));
        for d in nj + 1..pv {
            out.push((partial + d * pw(sj), TableRow::SameDigit { j, d }));
        }
        for s in sj + 1..sj1 {
            for d in 1..pv {
                out.push((partial + d * pw(s), TableRow::Gap { j, s, d }));
            }
        }
        for d in 1..nj1 {
            out.push((partial + d * pw(sj1), TableRow::NextDigit { j, d }));
        }
    }
    out.sort_by_key(|&(r, _)| r);
    Ok(out)
}

/// `C_p(N) = (p-1)s_h + N_h`, from the digits of `N`.
pub fn count_by_digits(n: u64, p: Prime) -> u64 {
    let (sh, nh) = *terms(n, p).last().expect("N ≥ 1");
    (p.get() - 1) * sh as u64 + nh
}

/// `C_p(N) = (p-1)⌊log_p N⌋ + ⌊N / p^{⌊log_p N⌋}⌋`, in integer arithmetic.
pub fn count_by_log(n: u64, p: Prime) -> u64 {
    let l = floor_log(n, p);
    (p.get() - 1) * l as u64 + n / p.pow(l)
}

/// `I_p(N)` with witnesses, closed-form counts and table labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicityReport {
    pub p: u64,
    pub n: u64,
    /// `I_p(N)` in increasing order, each with its witness
    pub members: Vec<Witness>,
    pub cardinality: u64,
    pub count_by_digits: u64,
    pub count_by_log: u64,
    /// classification row of each nonzero member, in member order
    pub table_labels: Vec<(u64, TableRow)>,
    /// the table lists exactly the nonzero members
    pub table_matches: bool,
}

impl SimplicityReport {
    pub fn member_values(&self) -> Vec<u64> {
        self.members.iter().map(|w| w.r).collect()
    }

    /// The members with `1 ≤ r ≤ N - 1`, the simple `Δ(ω_r)` of `Sp(2(N-1))`.
    pub fn simple_weyl_ranks(&self) -> Vec<u64> {
        self.members.iter().map(|w| w.r).filter(|&r| r >= 1).collect()
    }

    /// Both closed forms and the table agree with the enumeration.
    pub fn consistent(&self) -> bool {
        self.cardinality == self.count_by_digits && self.cardinality == self.count_by_log && self.table_matches
    }
}

pub fn simplicity_census(n: u64, p: Prime) -> Result<SimplicityReport> {
    if n < 2 {
        return Err(Error::out_of_range("N", n, "N ≥ 2"));
    }
    let members: Vec<Witness> = (0..n).map(|r| witness(r, n - r, p)).filter(|w| w.simple).collect();
    let table = classification_table(n, p)?;
    let nonzero: Vec<u64> = members.iter().map(|w| w.r).filter(|&r| r > 0).collect();
    let table_matches = table.iter().map(|&(r, _)| r).eq(nonzero.iter().copied());
    Ok(SimplicityReport {
        p: p.get(),
        n,
        cardinality: members.len() as u64,
        count_by_digits: count_by_digits(n, p),
        count_by_log: count_by_log(n, p),
        members,
        table_labels: table,
        table_matches,
    })
}

/// `r ∈ I_p(N)` and `r + p^f < N` imply `r + p^f ∈ I_p(N)`.
pub fn sum_step_property(n: u64, p: Prime) -> Result<bool> {
    let report = simplicity_census(n, p)?;
    let set: std::collections::BTreeSet<u64> = report.member_values().into_iter().collect();
    Ok(report.members.iter().all(|w| {
        let next = w.r + p.pow(w.f as u32);
        next >= n || set.contains(&next)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn rank_ten_at_two() {
        let simple: Vec<u64> = (1..=10).filter(|&r| is_simple_weyl(r, 10, pr(2)).unwrap().simple).collect();
        assert_eq!(simple, vec![1, 3, 7]);
        let rep = simplicity_census(11, pr(2)).unwrap();
        assert_eq!(rep.member_values(), vec![0, 1, 3, 7]);
        assert_eq!(rep.cardinality, 4);
        assert!(rep.consistent());
        assert_eq!(premet_suprunenko_conditions(2, 10, pr(2)).unwrap(), (false, false));
    }

    #[test]
    fn large_p_all_simple() {
        for m in 1..12u64 {
            for p in [13, 17] {
                assert!((1..=m).all(|r| is_simple_weyl(r, m, pr(p)).unwrap().simple));
            }
        }
    }

    #[test]
    fn carrying_row() {
        // N = 6 = 1 + 1·5: the row Σ N_i p^{s_i} + d p^{s_j} gives 1 + d, d = 2..4
        let rep = simplicity_census(6, pr(5)).unwrap();
        assert_eq!(rep.member_values(), vec![0, 1, 3, 4, 5]);
        assert!(rep.consistent());
        assert_eq!(rep.table_labels[1], (3, TableRow::SameDigit { j: 1, d: 2 }));
    }

    #[test]
    fn prime_powers() {
        for p in [2u64, 3, 5] {
            for t in 1..5u32 {
                let n = p.pow(t);
                let rep = simplicity_census(n, pr(p)).unwrap();
                let mut expected = vec![0];
                for s in 0..t {
                    for d in 1..p {
                        expected.push(d * p.pow(s));
                    }
                }
                expected.sort();
                assert_eq!(rep.member_values(), expected);
                assert_eq!(rep.cardinality, (p - 1) * t as u64 + 1);
            }
        }
    }

    #[test]
    fn stepping_rule() {
        for p in [2u64, 3, 5, 7] {
            for n in 2..400u64 {
                let a = simplicity_census(n, pr(p)).unwrap().cardinality;
                let b = simplicity_census(n + 1, pr(p)).unwrap().cardinality;
                let single = terms(n + 1, pr(p)).len() == 1;
                assert_eq!(b, a + single as u64, "p={p} N={n}");
            }
        }
    }

    #[test]
    fn conditions_agree() {
        for p in [2, 3, 5] {
            for m in 1..25 {
                for r in 1..=m {
                    let w = is_simple_weyl(r, m, pr(p)).unwrap();
                    let (c1, c2) = premet_suprunenko_conditions(r, m, pr(p)).unwrap();
                    assert_eq!((c1, c2), (w.simple, w.simple), "p={p} m={m} r={r}");
                    assert_eq!(premet_suprunenko_cond2_exact(r, m, pr(p)).unwrap(), c2);
                }
            }
        }
        // empty range for r = 1
        assert_eq!(premet_suprunenko_conditions(1, 9, pr(2)).unwrap(), (true, true));
    }

    #[test]
    fn errors() {
        assert!(is_simple_weyl(0, 4, pr(2)).is_err());
        assert!(is_simple_weyl(5, 4, pr(2)).is_err());
        assert!(simplicity_census(1, pr(2)).is_err());
    }

    #[test]
    fn closure_under_p_f() {
        for p in [2, 3, 5] {
            for n in 2..300 {
                assert!(sum_step_property(n, pr(p)).unwrap(), "p={p} N={n}");
            }
        }
    }
}
