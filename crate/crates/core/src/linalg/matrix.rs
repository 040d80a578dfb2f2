use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::subspace::Subspace;
use super::{dim_mismatch, LinalgError};

/// Exact rational scalar: reduced form, positive denominator.
pub type Rat = BigRational;

/// Shorthand for building a rational from machine integers.
///
/// Panics if `denom` is zero; intended for fixtures and tests, not for
/// parsing untrusted input.
pub fn rat(numer: i64, denom: i64) -> Rat {
    assert!(denom != 0, "rational with zero denominator");
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::BadShape {
                rows,
                cols,
                found: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rat::one();
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must have equal length;
    /// an empty row list yields the 0x0 matrix.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(LinalgError::BadAmbient {
                    ambient: ncols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Self::new(nrows, ncols, entries)
    }

    /// Fixture helper: a matrix of machine integers. Panics on ragged input.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&v| rat(v, 1)).collect())
            .collect();
        Self::from_rows(data).expect("ragged integer rows")
    }

    pub fn from_columns(cols: Vec<Vec<Rat>>) -> Result<Self, LinalgError> {
        Ok(Self::from_rows(cols)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set_entry(&mut self, r: usize, c: usize, value: Rat) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row_slice(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Rat> {
        self.row_slice(r).to_vec()
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.entry(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.entries[c * self.rows + r] = self.entry(r, c).clone();
            }
        }
        out
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(dim_mismatch(
                "matrix product",
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", rhs.rows, rhs.cols),
            ));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let term = a * rhs.entry(k, c);
                    let cur = &out.entries[r * rhs.cols + c];
                    out.entries[r * rhs.cols + c] = cur + term;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.zip_with(rhs, "matrix sum", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.zip_with(rhs, "matrix difference", |a, b| a - b)
    }

    fn zip_with(
        &self,
        rhs: &Self,
        context: &'static str,
        op: impl Fn(&Rat, &Rat) -> Rat,
    ) -> Result<Self, LinalgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(dim_mismatch(
                context,
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", rhs.rows, rhs.cols),
            ));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| op(a, b))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Kronecker product with row-major basis ordering: the basis of the
    /// tensor space is `b_1⊗b'_1, b_1⊗b'_2, …`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.entry(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out.entries[(i * rhs.rows + k) * cols + (j * rhs.cols + l)] =
                            a * rhs.entry(k, l);
                    }
                }
            }
        }
        out
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Rat]) -> Result<Vec<Rat>, LinalgError> {
        if v.len() != self.cols {
            return Err(dim_mismatch("matrix-vector product", self.cols, v.len()));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row_slice(r)
                    .iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (a, x)| acc + a * x)
            })
            .collect())
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(found) = (pivot_row..m.rows).find(|&r| !m.entry(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(found, pivot_row);
            let inv = m.entry(pivot_row, col).recip();
            m.scale_row(pivot_row, &inv);
            for r in 0..m.rows {
                if r != pivot_row && !m.entry(r, col).is_zero() {
                    let factor = m.entry(r, col).clone();
                    m.subtract_scaled_row(r, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact inverse of a square matrix; `None` when singular or not square.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let augmented = self
            .hstack(&Self::identity(n))
            .expect("row counts agree by construction");
        let (reduced, pivots) = augmented.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut out = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                out.entries[r * n + c] = reduced.entry(r, n + c).clone();
            }
        }
        Some(out)
    }

    pub fn hstack(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.rows != rhs.rows {
            return Err(dim_mismatch("hstack", self.rows, rhs.rows));
        }
        let cols = self.cols + rhs.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            entries.extend_from_slice(self.row_slice(r));
            entries.extend_from_slice(rhs.row_slice(r));
        }
        Self::new(self.rows, cols, entries)
    }

    pub fn vstack(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.cols {
            return Err(dim_mismatch("vstack", self.cols, rhs.cols));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&rhs.entries);
        Self::new(self.rows + rhs.rows, self.cols, entries)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self.entry(r, c).is_one()
                    } else {
                        self.entry(r, c).is_zero()
                    }
                })
            })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Rat) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            if !self.entries[idx].is_zero() {
                self.entries[idx] = &self.entries[idx] * factor;
            }
        }
    }

    fn subtract_scaled_row(&mut self, target: usize, source: usize, factor: &Rat) {
        for c in 0..self.cols {
            let s = self.entries[source * self.cols + c].clone();
            if s.is_zero() {
                continue;
            }
            let idx = target * self.cols + c;
            self.entries[idx] = &self.entries[idx] - factor * s;
        }
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// A linear map `f: Q^domain → Q^codomain` carried by a
/// `codomain × domain` matrix acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    matrix: RationalMatrix,
}

impl LinearMap {
    pub fn new(matrix: RationalMatrix) -> Self {
        Self { matrix }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::new(RationalMatrix::from_int_rows(rows))
    }

    pub fn identity(n: usize) -> Self {
        Self::new(RationalMatrix::identity(n))
    }

    pub fn zero(codomain_dim: usize, domain_dim: usize) -> Self {
        Self::new(RationalMatrix::zeros(codomain_dim, domain_dim))
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    /// The composite `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self, LinalgError> {
        Ok(Self::new(self.matrix.mul(&other.matrix)?))
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.matrix.transpose())
    }

    pub fn kron(&self, other: &Self) -> Self {
        Self::new(self.matrix.kron(&other.matrix))
    }

    pub fn apply(&self, v: &[Rat]) -> Result<Vec<Rat>, LinalgError> {
        self.matrix.apply(v)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_idempotent(&self) -> bool {
        self.domain_dim() == self.codomain_dim()
            && self.matrix.mul(&self.matrix).expect("square") == self.matrix
    }

    pub fn is_invertible(&self) -> bool {
        self.domain_dim() == self.codomain_dim() && self.rank() == self.domain_dim()
    }

    pub fn inverse(&self) -> Option<Self> {
        self.matrix.inverse().map(Self::new)
    }

    /// Null space `Ker f` as a canonical subspace of the domain.
    ///
    /// `dim Ker f = domain_dim − rank f` by rank-nullity, which holds here
    /// by construction: one basis vector per free column.
    pub fn kernel(&self) -> Subspace {
        let (reduced, pivots) = self.matrix.rref();
        let n = self.domain_dim();
        let pivot_rows: Vec<(usize, usize)> = pivots
            .iter()
            .copied()
            .enumerate()
            .map(|(r, c)| (c, r))
            .collect();
        let mut basis = Vec::new();
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Rat::zero(); n];
            v[free] = Rat::one();
            for &(pivot_col, row) in &pivot_rows {
                v[pivot_col] = -reduced.entry(row, free).clone();
            }
            basis.push(v);
        }
        Subspace::from_rows(n, basis).expect("kernel vectors live in the domain")
    }

    /// Column space `Im f` as a canonical subspace of the codomain.
    pub fn image(&self) -> Subspace {
        let t = self.matrix.transpose();
        let rows = (0..t.rows()).map(|r| t.row_vec(r)).collect();
        Subspace::from_rows(self.codomain_dim(), rows).expect("columns live in the codomain")
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matrix.fmt(f)
    }
}
