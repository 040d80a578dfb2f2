use std::fmt;

use num_traits::{One, Zero};

use super::matrix::{LinearMap, Rat, RationalMatrix};
use super::LinalgError;

/// A subspace of `Q^ambient` held as its canonical RREF basis.
///
/// Two values are equal iff they describe the same subspace: the reduced
/// row echelon basis with zero rows dropped is a complete invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: RationalMatrix,
}

impl Subspace {
    /// Canonicalizes a spanning set of row vectors.
    pub fn from_rows(ambient_dim: usize, rows: Vec<Vec<Rat>>) -> Result<Self, LinalgError> {
        for row in &rows {
            if row.len() != ambient_dim {
                return Err(LinalgError::BadAmbient {
                    ambient: ambient_dim,
                    found: row.len(),
                });
            }
        }
        if rows.is_empty() {
            return Ok(Self::zero(ambient_dim));
        }
        let raw = RationalMatrix::from_rows(rows)?;
        let (reduced, pivots) = raw.rref();
        let kept: Vec<Vec<Rat>> = (0..pivots.len()).map(|r| reduced.row_vec(r)).collect();
        let basis = if kept.is_empty() {
            RationalMatrix::zeros(0, ambient_dim)
        } else {
            RationalMatrix::from_rows(kept)?
        };
        Ok(Self { ambient_dim, basis })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: RationalMatrix::zeros(0, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: RationalMatrix::identity(ambient_dim),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = Vec<Rat>> + '_ {
        (0..self.dim()).map(|r| self.basis.row_vec(r))
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Pivot column of each basis row; rows are RREF so these are strictly
    /// increasing.
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|r| {
                (0..self.ambient_dim)
                    .find(|&c| !self.basis.entry(r, c).is_zero())
                    .expect("no zero rows in a canonical basis")
            })
            .collect()
    }

    /// Membership test by elimination against the RREF basis.
    pub fn contains(&self, v: &[Rat]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let mut residue = v.to_vec();
        for (row, pivot) in self.pivot_columns().into_iter().enumerate() {
            if residue[pivot].is_zero() {
                continue;
            }
            let factor = residue[pivot].clone();
            for (c, cell) in residue.iter_mut().enumerate() {
                *cell = &*cell - &factor * self.basis.entry(row, c);
            }
        }
        residue.iter().all(Rat::is_zero)
    }

    /// The coordinate complement: the span of the standard basis vectors at
    /// the non-pivot columns of the canonical basis. Deterministic, and a
    /// true complement: dimensions add and the intersection is zero.
    pub fn complement(&self) -> Subspace {
        let pivots = self.pivot_columns();
        let rows: Vec<Vec<Rat>> = (0..self.ambient_dim)
            .filter(|c| !pivots.contains(c))
            .map(|c| {
                let mut v = vec![Rat::zero(); self.ambient_dim];
                v[c] = Rat::one();
                v
            })
            .collect();
        Subspace::from_rows(self.ambient_dim, rows).expect("standard vectors fit the ambient")
    }

    /// Do `self` and `other` decompose the ambient space as a direct sum?
    pub fn is_complementary_to(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.dim() + other.dim() == self.ambient_dim
            && match self.basis.vstack(&other.basis) {
                Ok(stacked) => stacked.rank() == self.ambient_dim,
                Err(_) => false,
            }
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim() == 0 {
            write!(f, "0 (ambient {})", self.ambient_dim)
        } else {
            write!(f, "span{}", self.basis)
        }
    }
}

/// The projector `p` with `Im p = onto` and `Ker p = along`, computed by
/// conjugating `diag(1,…,1,0,…,0)` with the change of basis assembled from
/// the two canonical bases. Exactly idempotent.
pub fn projector_onto(onto: &Subspace, along: &Subspace) -> Result<LinearMap, LinalgError> {
    if !onto.is_complementary_to(along) {
        return Err(LinalgError::NotADirectSum);
    }
    let n = onto.ambient_dim();
    let change = onto
        .basis()
        .vstack(along.basis())
        .expect("complementary subspaces share the ambient")
        .transpose();
    let inverse = change.inverse().ok_or(LinalgError::NotADirectSum)?;
    let mut selector = RationalMatrix::zeros(n, n);
    for i in 0..onto.dim() {
        selector.set_entry(i, i, Rat::one());
    }
    let p = change.mul(&selector)?.mul(&inverse)?;
    Ok(LinearMap::new(p))
}
