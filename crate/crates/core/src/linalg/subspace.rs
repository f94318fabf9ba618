use std::collections::BTreeMap;

use super::elimination::{independent_columns, kernel_columns, rank};
use super::matrix::FieldMatrix;
use crate::error::{Error, Result};
use crate::qfield::QRational;

/// A linearly independent list of vectors in `Q(q)^ambient`.
///
/// Backed by a matrix whose columns are the basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    matrix: FieldMatrix,
}

impl SubspaceBasis {
    pub fn empty(ambient: usize) -> Self {
        SubspaceBasis { matrix: FieldMatrix::zeros(ambient, 0) }
    }

    /// Checks independence by an exact rank test.
    pub fn new(ambient: usize, vectors: Vec<BTreeMap<usize, QRational>>) -> Result<Self> {
        let count = vectors.len();
        let matrix = FieldMatrix::from_sparse_columns(ambient, vectors);
        if rank(&matrix) != count {
            return Err(Error::InvalidArgument("vectors are linearly dependent".into()));
        }
        Ok(SubspaceBasis { matrix })
    }

    /// Builds from dense coordinate vectors.
    pub fn from_dense(ambient: usize, vectors: &[Vec<QRational>]) -> Result<Self> {
        let sparse = vectors
            .iter()
            .map(|v| {
                if v.len() != ambient {
                    return Err(Error::Shape(format!("vector of length {} in ambient {ambient}", v.len())));
                }
                Ok(v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ambient, sparse)
    }

    /// The span of an arbitrary family, reduced to an independent subfamily.
    pub fn span_of(ambient: usize, vectors: Vec<BTreeMap<usize, QRational>>) -> Self {
        let all = FieldMatrix::from_sparse_columns(ambient, vectors);
        let keep = independent_columns(&all);
        let columns = keep.into_iter().map(|c| all.column(c).clone()).collect();
        SubspaceBasis { matrix: FieldMatrix::from_sparse_columns(ambient, columns) }
    }

    pub(crate) fn from_independent_unchecked(ambient: usize, vectors: Vec<BTreeMap<usize, QRational>>) -> Self {
        SubspaceBasis { matrix: FieldMatrix::from_sparse_columns(ambient, vectors) }
    }

    pub fn ambient(&self) -> usize {
        self.matrix.rows()
    }

    pub fn dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.dim() == 0
    }

    pub fn vectors(&self) -> &[BTreeMap<usize, QRational>] {
        self.matrix.columns()
    }

    pub fn vector_dense(&self, i: usize) -> Vec<QRational> {
        let mut v = vec![QRational::zero(); self.ambient()];
        for (r, x) in self.matrix.column(i) {
            v[*r] = x.clone();
        }
        v
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn as_matrix(&self) -> &FieldMatrix {
        &self.matrix
    }

    pub fn contains(&self, v: &BTreeMap<usize, QRational>) -> bool {
        let mut cols = self.vectors().to_vec();
        cols.push(v.clone());
        rank(&FieldMatrix::from_sparse_columns(self.ambient(), cols)) == self.dim()
    }

    pub fn same_span(&self, other: &SubspaceBasis) -> bool {
        if self.ambient() != other.ambient() || self.dim() != other.dim() {
            return false;
        }
        let mut cols = self.vectors().to_vec();
        cols.extend(other.vectors().iter().cloned());
        rank(&FieldMatrix::from_sparse_columns(self.ambient(), cols)) == self.dim()
    }
}

/// Basis of the right kernel of `m`; its size is `cols - rank(m)`.
pub fn kernel_basis(m: &FieldMatrix) -> SubspaceBasis {
    SubspaceBasis::from_independent_unchecked(m.cols(), kernel_columns(m))
}

/// Basis of the column space of `m`, chosen among its columns.
pub fn image_basis(m: &FieldMatrix) -> SubspaceBasis {
    let cols = independent_columns(m).into_iter().map(|c| m.column(c).clone()).collect();
    SubspaceBasis::from_independent_unchecked(m.rows(), cols)
}
