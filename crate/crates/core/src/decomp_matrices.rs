//! The matrices `A(n)` and `B(n)`, their index reversals, and the recursive
//! block constructions for prime-power sizes.
//!
//! Storage is 0-based; entry `(k, l)` in the 1-based convention used by the
//! digit definitions lives at `(k - 1, l - 1)`. Exports use 1-based indices.
//!
//! * `A(n)_{k,l} = ±1` when `(k-l)/2 ≺_{±1} n+1-k`, else 0.
//! * `B(n)_{k,l} = 1` when `(k-l)/2 ⊂ n+1-l`, else 0.
//! * `Ã(n)_{u,v} = A(n)_{n+1-u, n+1-v}`, likewise `B̃`.
//!
//! The shift matrices are fixed by `E_n e_j = e_{n+2-j}` for `j ≥ 2`,
//! `E_n e_1 = 0` (so `E³ = E`), and `F_n e_j = e_{n-j}` for `j ≤ n - 1`,
//! `F_n e_n = 0`.

use std::fmt::Write as _;
use std::ops::Mul;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::padic::{prec_unchecked, subset_unchecked, Prime};

/// Dense square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        IntMatrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// 0-based access.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn scale(&self, c: i64) -> Self {
        IntMatrix { n: self.n, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// `(i, j) -> (n-1-i, n-1-j)`.
    pub fn reversed(&self) -> Self {
        let n = self.n;
        IntMatrix::from_fn(n, |i, j| self.get(n - 1 - i, n - 1 - j))
    }

    /// Leading `k × k` submatrix.
    pub fn leading(&self, k: usize) -> Self {
        assert!(k <= self.n);
        IntMatrix::from_fn(k, |i, j| self.get(i, j))
    }

    /// Submatrix on the given 0-based rows and columns.
    pub fn select(&self, idx: &[usize]) -> Self {
        IntMatrix::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]))
    }

    /// Copies `block` with its top-left corner at `(row, col)`.
    pub fn put_block(&mut self, row: usize, col: usize, block: &IntMatrix) {
        for i in 0..block.n {
            for j in 0..block.n {
                self.set(row + i, col + j, block.get(i, j));
            }
        }
    }

    /// First entry differing from the identity, as `(i, j, value)` 0-based.
    pub fn identity_defect(&self) -> Option<(usize, usize, i64)> {
        (0..self.n).find_map(|i| {
            self.row(i).iter().enumerate().find_map(|(j, &v)| {
                let want = i64::from(i == j);
                (v != want).then_some((i, j, v))
            })
        })
    }

    pub fn is_identity(&self) -> bool {
        self.identity_defect().is_none()
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) == 1 && ((i + 1)..self.n).all(|j| self.get(i, j) == 0))
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) == 1 && (0..i).all(|j| self.get(i, j) == 0))
    }

    /// Nonzero entries as 1-based `(row, col, value)` triplets.
    pub fn triplets(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for (j, &v) in self.row(i).iter().enumerate() {
                if v != 0 {
                    out.push((i + 1, j + 1, v));
                }
            }
        }
        out
    }

    /// Dense CSV, one matrix row per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            let line: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Text grid with `.` for zero entries.
    pub fn to_grid(&self) -> String {
        let width = self
            .data
            .iter()
            .map(|v| if *v == 0 { 1 } else { v.to_string().len() })
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for i in 0..self.n {
            let cells: Vec<String> = self
                .row(i)
                .iter()
                .map(|&v| {
                    let s = if v == 0 { ".".to_string() } else { v.to_string() };
                    format!("{s:>width$}")
                })
                .collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    /// Row-sparse product: skips zero entries of the left factor.
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "size mismatch");
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            let dst = &mut out.data[i * n..(i + 1) * n];
            for (k, &a) in self.data[i * n..(i + 1) * n].iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (d, &b) in dst.iter_mut().zip(rhs.row(k)) {
                    *d += a * b;
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MatrixKind {
    A,
    B,
    ATilde,
    BTilde,
}

impl MatrixKind {
    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::A => "A",
            MatrixKind::B => "B",
            MatrixKind::ATilde => "ATilde",
            MatrixKind::BTilde => "BTilde",
        }
    }
}

/// One of `A(n)`, `B(n)`, `Ã(n)`, `B̃(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompMatrix {
    pub kind: MatrixKind,
    pub p: Prime,
    pub matrix: IntMatrix,
}

impl DecompMatrix {
    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    /// 1-based access.
    pub fn entry(&self, k: usize, l: usize) -> i64 {
        self.matrix.get(k - 1, l - 1)
    }
}

/// `A(n)_{k,l}` from the digit relations, 1-based.
pub(crate) fn a_entry(n: usize, k: usize, l: usize, p: u64) -> i64 {
    if l > k || (k - l) % 2 == 1 {
        return 0;
    }
    prec_unchecked(((k - l) / 2) as u64, (n + 1 - k) as u64, p).sign() as i64
}

/// `B(n)_{k,l}` from the digit relations, 1-based.
pub(crate) fn b_entry(n: usize, k: usize, l: usize, p: u64) -> i64 {
    if l > k || (k - l) % 2 == 1 {
        return 0;
    }
    i64::from(subset_unchecked(((k - l) / 2) as u64, (n + 1 - l) as u64, p))
}

/// Builds the matrix entry by entry from its digit-relation definition.
pub fn build_direct(n: usize, p: Prime, kind: MatrixKind) -> Result<DecompMatrix> {
    if n < 1 {
        return Err(Error::out_of_range("n", 0, "n >= 1"));
    }
    let pv = p.get();
    let matrix = match kind {
        MatrixKind::A => IntMatrix::from_fn(n, |i, j| a_entry(n, i + 1, j + 1, pv)),
        MatrixKind::B => IntMatrix::from_fn(n, |i, j| b_entry(n, i + 1, j + 1, pv)),
        MatrixKind::ATilde => IntMatrix::from_fn(n, |i, j| a_entry(n, n - i, n - j, pv)),
        MatrixKind::BTilde => IntMatrix::from_fn(n, |i, j| b_entry(n, n - i, n - j, pv)),
    };
    Ok(DecompMatrix { kind, p, matrix })
}

/// `E_n`: ones at 1-based `(i, j)` with `i + j = n + 2`.
pub fn shift_e(n: usize) -> IntMatrix {
    IntMatrix::from_fn(n, |i, j| i64::from(i + j + 2 == n + 2 && i >= 1))
}

/// `F_n`: ones at 1-based `(i, j)` with `i + j = n`.
pub fn shift_f(n: usize) -> IntMatrix {
    IntMatrix::from_fn(n, |i, j| i64::from(i + j + 2 == n))
}

fn check_power(n_power: u32, p: Prime) -> Result<usize> {
    if n_power < 1 {
        return Err(Error::out_of_range("n_power", 0, "n_power >= 1"));
    }
    usize::try_from(p.get().checked_pow(n_power).ok_or_else(|| {
        Error::out_of_range("n_power", n_power, "p^n_power must fit in memory")
    })?)
    .map_err(|_| Error::out_of_range("n_power", n_power, "p^n_power must fit in memory"))
}

/// Assembles `A(p^n)` or `B(p^n)` from `p × p` blocks of the previous size.
///
/// `A(p^{m+1})` has `A(p^m)` on the block diagonal, `-A(p^m)E` on blocks with
/// odd offset below it and `A(p^m)E²` on even offsets. `B(p^{m+1})` has
/// `B(p^m)` on the diagonal and `E B(p^m)` on the first block subdiagonal.
pub fn build_recursive(n_power: u32, p: Prime, kind: MatrixKind) -> Result<DecompMatrix> {
    check_power(n_power, p)?;
    let pv = p.get() as usize;
    let mut current = IntMatrix::identity(pv);
    let mut size = pv;
    for _ in 1..n_power {
        let e = shift_e(size);
        let mut next = IntMatrix::zeros(size * pv);
        match kind {
            MatrixKind::A => {
                let odd = (&current * &e).scale(-1);
                let even = &(&current * &e) * &e;
                for bi in 0..pv {
                    for bj in 0..=bi {
                        let block = match bi - bj {
                            0 => &current,
                            off if off % 2 == 1 => &odd,
                            _ => &even,
                        };
                        next.put_block(bi * size, bj * size, block);
                    }
                }
            }
            MatrixKind::B => {
                let sub = &e * &current;
                for bi in 0..pv {
                    next.put_block(bi * size, bi * size, &current);
                    if bi > 0 {
                        next.put_block(bi * size, (bi - 1) * size, &sub);
                    }
                }
            }
            other => {
                return Err(Error::out_of_range(
                    "kind",
                    other as u8,
                    "recursive construction builds A or B",
                ))
            }
        }
        current = next;
        size *= pv;
    }
    Ok(DecompMatrix { kind, p, matrix: current })
}

/// `D(p^n)`: `D(p^m)` on the block diagonal and `F D(p^m)` on the first
/// block superdiagonal. Agrees with `B̃(p^n)`.
pub fn upper_recursive_b(n_power: u32, p: Prime) -> Result<IntMatrix> {
    check_power(n_power, p)?;
    let pv = p.get() as usize;
    let mut current = IntMatrix::identity(pv);
    let mut size = pv;
    for _ in 1..n_power {
        let sup = &shift_f(size) * &current;
        let mut next = IntMatrix::zeros(size * pv);
        for bi in 0..pv {
            next.put_block(bi * size, bi * size, &current);
            if bi + 1 < pv {
                next.put_block(bi * size, (bi + 1) * size, &sup);
            }
        }
        current = next;
        size *= pv;
    }
    Ok(current)
}

/// `C(p^n)`: `C(p^m)` on the block diagonal, `-C(p^m)F` at odd offsets above
/// it and `C(p^m)F²` at even offsets. Agrees with `Ã(p^n)`.
pub fn upper_recursive_a(n_power: u32, p: Prime) -> Result<IntMatrix> {
    check_power(n_power, p)?;
    let pv = p.get() as usize;
    let mut current = IntMatrix::identity(pv);
    let mut size = pv;
    for _ in 1..n_power {
        let f = shift_f(size);
        let odd = (&current * &f).scale(-1);
        let even = &(&current * &f) * &f;
        let mut next = IntMatrix::zeros(size * pv);
        for bi in 0..pv {
            for bj in bi..pv {
                let block = match bj - bi {
                    0 => &current,
                    off if off % 2 == 1 => &odd,
                    _ => &even,
                };
                next.put_block(bi * size, bj * size, block);
            }
        }
        current = next;
        size *= pv;
    }
    Ok(current)
}

/// Outcome of checking `A(n) B(n) = Id`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InverseCheck {
    pub n: usize,
    pub p: u64,
    pub ok: bool,
    /// First wrong entry of the product, 1-based `(row, col, value)`.
    pub first_failure: Option<(usize, usize, i64)>,
}

/// Multiplies `A(n) B(n)` exactly and compares with the identity.
pub fn verify_inverse(n: usize, p: Prime) -> Result<InverseCheck> {
    let a = build_direct(n, p, MatrixKind::A)?;
    let b = build_direct(n, p, MatrixKind::B)?;
    let defect = (&a.matrix * &b.matrix).identity_defect();
    Ok(InverseCheck {
        n,
        p: p.get(),
        ok: defect.is_none(),
        first_failure: defect.map(|(i, j, v)| (i + 1, j + 1, v)),
    })
}

/// The size `n` with `n = p^e`, if any.
pub fn prime_power_exponent(n: usize, p: Prime) -> Option<u32> {
    let pv = p.get() as usize;
    let (mut m, mut e) = (n, 0u32);
    if m == 0 {
        return None;
    }
    while m % pv == 0 {
        m /= pv;
        e += 1;
    }
    (m == 1).then_some(e)
}
