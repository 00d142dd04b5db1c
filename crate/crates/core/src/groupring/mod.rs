//! Matrices over the integral group ring `ZQ` of a finite group `Q`.
//!
//! A matrix acts on column vectors by left multiplication of its entries, so
//! it is a map of right `ZQ`-modules. [`GRMatrix::flatten`] replaces every
//! entry by its left regular representation, turning questions about
//! `ZQ`-maps into integer linear algebra.

mod chain;
mod coeffs;
mod intmat;
mod kernel;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::PermGroup;

pub use chain::{chain_check, cocompact_dual_check, ChainComplex, ChainReport, DualReport, Homology};
pub use intmat::{
    determinant, integer_kernel_basis, rank, smith_normal_form, solve, solve_with, IntMatrix, Snf,
};
pub use kernel::{
    equivariant_kernel_lift, kernel_split, random_split_instance, KernelLift, KernelSplit, SplitInstance,
};

/// A finite group given by its multiplication table: `table[a][b]` is the
/// index of `a · b`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order())
    }
}

impl TryFrom<Vec<Vec<usize>>> for FiniteGroup {
    type Error = Error;

    fn try_from(table: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_table(table)
    }
}

impl From<FiniteGroup> for Vec<Vec<usize>> {
    fn from(g: FiniteGroup) -> Self {
        g.table
    }
}

impl FiniteGroup {
    /// Validates closure, identity, inverses and associativity.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidInput("multiplication table must be a nonempty n x n table over 0..n".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidInput("table has no identity".into()))?;
        let inverses = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| table[x][y] == identity && table[y][x] == identity)
                    .ok_or_else(|| Error::InvalidInput(format!("element {x} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidInput(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(Self { table, identity, inverses })
    }

    pub fn from_perm_group(g: &PermGroup) -> Self {
        let elems = g.elements();
        let table = elems
            .iter()
            .map(|a| elems.iter().map(|b| g.index_of(&a.compose(b)).expect("closed")).collect())
            .collect();
        Self::from_table(table).expect("permutation groups are groups")
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(table).expect("cyclic group")
    }

    pub fn symmetric3() -> Self {
        Self::from_perm_group(&crate::perm::catalog::symmetric(3))
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }
}

/// `Σ c_g g` with one integer coefficient per group element.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupRingElem {
    #[serde(with = "coeffs::flat")]
    pub coeffs: Vec<BigInt>,
}

impl fmt::Debug for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, c)| format!("{c}·g{g}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl GroupRingElem {
    pub fn zero(q: &FiniteGroup) -> Self {
        Self { coeffs: vec![BigInt::zero(); q.order()] }
    }

    pub fn one(q: &FiniteGroup) -> Self {
        Self::basis(q, q.identity())
    }

    /// The group element `g` itself.
    pub fn basis(q: &FiniteGroup, g: usize) -> Self {
        let mut x = Self::zero(q);
        x.coeffs[g] = BigInt::one();
        x
    }

    /// `k · e`.
    pub fn scalar(q: &FiniteGroup, k: impl Into<BigInt>) -> Self {
        let mut x = Self::zero(q);
        x.coeffs[q.identity()] = k.into();
        x
    }

    pub fn from_coeffs(q: &FiniteGroup, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != q.order() {
            return Err(Error::DegreeMismatch { expected: q.order(), found: coeffs.len() });
        }
        Ok(Self { coeffs })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self, q: &FiniteGroup) -> Self {
        let mut out = Self::zero(q);
        for (g, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (h, b) in other.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out.coeffs[q.mul(g, h)] += a * b;
            }
        }
        out
    }

    /// Random coefficients in `[-bound, bound]`.
    pub fn random<R: Rng>(rng: &mut R, q: &FiniteGroup, bound: i64) -> Self {
        Self { coeffs: (0..q.order()).map(|_| BigInt::from(rng.random_range(-bound..=bound))).collect() }
    }
}

/// A `rows x cols` matrix over `ZQ`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GRMatrixRepr", into = "GRMatrixRepr")]
pub struct GRMatrix {
    group: FiniteGroup,
    rows: usize,
    cols: usize,
    entries: Vec<GroupRingElem>,
}

#[derive(Serialize, Deserialize)]
struct GRMatrixRepr {
    group: FiniteGroup,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<GroupRingElem>>,
}

impl TryFrom<GRMatrixRepr> for GRMatrix {
    type Error = Error;

    fn try_from(r: GRMatrixRepr) -> Result<Self> {
        if r.entries.len() != r.rows || r.entries.iter().any(|row| row.len() != r.cols) {
            return Err(Error::InvalidInput(format!("entries do not form a {}x{} matrix", r.rows, r.cols)));
        }
        if r.entries.iter().flatten().any(|e| e.coeffs.len() != r.group.order()) {
            return Err(Error::InvalidInput("entry length differs from group order".into()));
        }
        Ok(Self { group: r.group, rows: r.rows, cols: r.cols, entries: r.entries.into_iter().flatten().collect() })
    }
}

impl From<GRMatrix> for GRMatrixRepr {
    fn from(m: GRMatrix) -> Self {
        let entries = m.entries.chunks(m.cols.max(1)).take(m.rows).map(<[_]>::to_vec).collect();
        let entries = if m.cols == 0 { vec![Vec::new(); m.rows] } else { entries };
        Self { group: m.group, rows: m.rows, cols: m.cols, entries }
    }
}

impl fmt::Debug for GRMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GRMatrix {}x{} over {:?}", self.rows, self.cols, self.group)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:?}", self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl GRMatrix {
    pub fn zeros(q: &FiniteGroup, rows: usize, cols: usize) -> Self {
        Self { group: q.clone(), rows, cols, entries: vec![GroupRingElem::zero(q); rows * cols] }
    }

    pub fn identity(q: &FiniteGroup, n: usize) -> Self {
        let mut m = Self::zeros(q, n, n);
        for i in 0..n {
            m.set(i, i, GroupRingElem::one(q));
        }
        m
    }

    pub fn from_rows(q: &FiniteGroup, rows: Vec<Vec<GroupRingElem>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::try_from(GRMatrixRepr { group: q.clone(), rows: rows.len(), cols, entries: rows })
    }

    /// An integer matrix with entries embedded as `k · e`.
    pub fn from_scalar(q: &FiniteGroup, m: &IntMatrix) -> Self {
        let mut out = Self::zeros(q, m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(i, j, GroupRingElem::scalar(q, m.get(i, j).clone()));
            }
        }
        out
    }

    /// The column vector in `ZQ^rows` whose flattening is `flat`.
    pub fn from_flat_column(q: &FiniteGroup, flat: &[BigInt]) -> Result<Self> {
        let n = q.order();
        if !flat.len().is_multiple_of(n) {
            return Err(Error::DegreeMismatch { expected: n, found: flat.len() });
        }
        let rows = flat
            .chunks(n)
            .map(|c| vec![GroupRingElem { coeffs: c.to_vec() }])
            .collect::<Vec<_>>();
        let len = rows.len();
        Self::try_from(GRMatrixRepr { group: q.clone(), rows: len, cols: 1, entries: rows })
    }

    pub fn random<R: Rng>(rng: &mut R, q: &FiniteGroup, rows: usize, cols: usize, bound: i64) -> Self {
        let mut m = Self::zeros(q, rows, cols);
        for e in &mut m.entries {
            *e = GroupRingElem::random(rng, q, bound);
        }
        m
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GroupRingElem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: GroupRingElem) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GroupRingElem::is_zero)
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.group != other.group {
            return Err(Error::InvalidInput("matrices over different groups".into()));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        if self.cols != other.rows {
            return Err(Error::DegreeMismatch { expected: self.cols, found: other.rows });
        }
        let q = &self.group;
        let mut out = Self::zeros(q, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = GroupRingElem::zero(q);
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j), q));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DegreeMismatch { expected: self.rows * self.cols, found: other.rows * other.cols });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect();
        Ok(Self { entries, ..self.clone() })
    }

    pub fn neg(&self) -> Self {
        Self { entries: self.entries.iter().map(GroupRingElem::neg).collect(), ..self.clone() }
    }

    /// Columns `range` as a new matrix.
    pub fn columns(&self, range: std::ops::Range<usize>) -> Self {
        let mut out = Self::zeros(&self.group, self.rows, range.len());
        for i in 0..self.rows {
            for (jj, j) in range.clone().enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    /// Rows `range` as a new matrix.
    pub fn row_block(&self, range: std::ops::Range<usize>) -> Self {
        let mut out = Self::zeros(&self.group, range.len(), self.cols);
        for (ii, i) in range.enumerate() {
            for j in 0..self.cols {
                out.set(ii, j, self.get(i, j).clone());
            }
        }
        out
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        if self.rows != other.rows {
            return Err(Error::DegreeMismatch { expected: self.rows, found: other.rows });
        }
        let mut out = Self::zeros(&self.group, self.rows, self.cols + other.cols);
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

    /// `[self; other]`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        if self.cols != other.cols {
            return Err(Error::DegreeMismatch { expected: self.cols, found: other.cols });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Self { group: self.group.clone(), rows: self.rows + other.rows, cols: self.cols, entries })
    }

    /// Block `(i, j)` is the left regular representation of entry `(i, j)`:
    /// column `(j, h)` holds the coefficients of `m_ij · h`.
    pub fn flatten(&self) -> IntMatrix {
        let q = &self.group;
        let n = q.order();
        let mut out = IntMatrix::zeros(self.rows * n, self.cols * n);
        for i in 0..self.rows {
            for j in 0..self.cols {
                for (g, c) in self.get(i, j).coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    for h in 0..n {
                        out.add_at(i * n + q.mul(g, h), j * n + h, c);
                    }
                }
            }
        }
        out
    }

    /// Flattening of a column vector: its coefficients concatenated.
    pub fn flat_column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).flat_map(|i| self.get(i, j).coeffs.clone()).collect()
    }
}
