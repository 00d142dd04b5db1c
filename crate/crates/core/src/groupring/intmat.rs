//! Dense integer matrices with Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IntMatrixRepr", into = "IntMatrixRepr")]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// JSON form: row count, column count and rows of integers.
#[derive(Serialize, Deserialize)]
struct IntMatrixRepr {
    rows: usize,
    cols: usize,
    #[serde(with = "super::coeffs::nested")]
    entries: Vec<Vec<BigInt>>,
}

impl TryFrom<IntMatrixRepr> for IntMatrix {
    type Error = Error;

    fn try_from(r: IntMatrixRepr) -> Result<Self> {
        if r.entries.len() != r.rows || r.entries.iter().any(|row| row.len() != r.cols) {
            return Err(Error::InvalidInput(format!("entries do not form a {}x{} matrix", r.rows, r.cols)));
        }
        Ok(Self { rows: r.rows, cols: r.cols, data: r.entries.into_iter().flatten().collect() })
    }
}

impl From<IntMatrix> for IntMatrixRepr {
    fn from(m: IntMatrix) -> Self {
        let entries = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
        Self { rows: m.rows, cols: m.cols, entries }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(BigInt::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        let data = rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect();
        Ok(Self { rows: rows.len(), cols, data })
    }

    /// Matrix whose columns are `cols`, each of length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &BigInt) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DegreeMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if self.cols != v.len() {
            return Err(Error::DegreeMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DegreeMismatch { expected: self.rows, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += q * row[src]`.
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = q * self.get(src, j);
            self.data[dst * self.cols + j] += v;
        }
    }

    /// `col[dst] += q * col[src]`.
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = q * self.get(i, src);
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }
}

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal,
/// `d_1 | d_2 | … | d_r`, `d_i > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

impl Snf {
    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// Invariant factors other than 1.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors().into_iter().filter(|d| !d.is_one()).collect()
    }

    /// Every invariant factor is 1, i.e. the image is a direct summand.
    pub fn is_saturated(&self) -> bool {
        self.torsion().is_empty()
    }
}

/// Pivot with least absolute value in the lower-right block starting at `t`.
fn least_pivot(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.rows {
        for j in t..m.cols {
            let x = m.get(i, j);
            if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < m.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let mut t = 0;
    while t < d.rows.min(d.cols) {
        let Some((pi, pj)) = least_pivot(&d, t) else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..d.rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -d.get(i, t).div_floor(d.get(t, t));
                d.add_row(i, t, &q);
                u.add_row(i, t, &q);
                if !d.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..d.cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(d.get(t, t));
                d.add_col(j, t, &q);
                v.add_col(j, t, &q);
                if !d.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // divisibility: fold a row with a non-multiple into row t
                let pivot = d.get(t, t).clone();
                let bad = (t + 1..d.rows)
                    .find(|&i| (t + 1..d.cols).any(|j| !d.get(i, j).is_multiple_of(&pivot)));
                match bad {
                    Some(i) => {
                        d.add_row(t, i, &BigInt::one());
                        u.add_row(t, i, &BigInt::one());
                    }
                    None => break,
                }
            }
            // bring the smallest entry of row t / column t to the pivot
            let mut best = (t, t);
            for i in t..d.rows {
                let x = d.get(i, t);
                if !x.is_zero() && x.abs() < d.get(best.0, best.1).abs() {
                    best = (i, t);
                }
            }
            for j in t..d.cols {
                let x = d.get(t, j);
                if !x.is_zero() && x.abs() < d.get(best.0, best.1).abs() {
                    best = (t, j);
                }
            }
            d.swap_rows(t, best.0);
            u.swap_rows(t, best.0);
            d.swap_cols(t, best.1);
            v.swap_cols(t, best.1);
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    Snf { u, d, v, rank: t }
}

pub fn rank(m: &IntMatrix) -> usize {
    smith_normal_form(m).rank
}

/// A basis of `{x : M x = 0}` over `Z`, as columns of `V`.
pub fn integer_kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    (snf.rank..m.cols).map(|j| snf.v.column(j)).collect()
}

/// An integer solution of `M x = b`, if one exists.
pub fn solve(m: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    solve_with(&smith_normal_form(m), b)
}

/// [`solve`] reusing a precomputed Smith form of `M`.
pub fn solve_with(snf: &Snf, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    let c = snf.u.mul_vec(b)?;
    let mut y = vec![BigInt::zero(); snf.v.rows()];
    for (i, ci) in c.iter().enumerate() {
        if i < snf.rank {
            let (q, r) = ci.div_rem(snf.d.get(i, i));
            if !r.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        } else if !ci.is_zero() {
            return Ok(None);
        }
    }
    Ok(Some(snf.v.mul_vec(&y)?))
}

/// Determinant of a square matrix by fraction-free elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    if m.rows != m.cols {
        return Err(Error::DegreeMismatch { expected: m.rows, found: m.cols });
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
            return Ok(BigInt::zero());
        };
        if p != k {
            a.swap_rows(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                a.set(i, j, v);
            }
        }
        prev = a.get(k, k).clone();
    }
    Ok(if n == 0 { BigInt::one() } else { sign * a.get(n - 1, n - 1) })
}
